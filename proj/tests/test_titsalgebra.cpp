#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "runiv/titsalgebra.hpp"

using namespace runiv;

namespace {

BrauerClass quat(std::initializer_list<const char*> places) {
  std::map<Place, Rational> inv;
  for (const char* p : places) {
    Place v = std::string(p) == "inf" ? Place::infinite()
                                      : Place::finite(Int(p));
    inv.emplace(v, Rational(1, 2));
  }
  return BrauerClass(std::move(inv));
}

const BrauerClass kHamilton = quat({"2", "inf"});

CenterCharacter times(const RootSystem& sys, const CenterCharacter& a,
                      const CenterCharacter& b) {
  CenterCharacter c = a;
  for (size_t i = 0; i < c.residues.size(); ++i)
    c.residues[i] = (c.residues[i] + b.residues[i]) % c.orders[i];
  (void)sys;
  return c;
}

}  // namespace

TEST_CASE("A-inner Tits classes are tensor powers of D") {
  LieDescriptor desc(AInner{2, 2, kHamilton});  // sl_2(D), system A_3
  RootSystem sys = root_system(desc);
  auto chars = all_characters(sys);
  REQUIRE(chars.size() == 4);

  auto r1 = tits_class_Q(desc, chars[1]);
  CHECK(!r1.center);
  CHECK(r1.q_class == kHamilton);
  CHECK(r1.q_trivial == false);
  CHECK(r1.division_after_real == true);

  auto r2 = tits_class_Q(desc, chars[2]);
  CHECK(r2.q_class == BrauerClass());
  CHECK(r2.q_trivial == true);
  CHECK(r2.division_after_real == true);

  auto r3 = tits_class_Q(desc, chars[3]);
  CHECK(r3.q_class == kHamilton);

  auto r0 = tits_class_Q(desc, chars[0]);
  CHECK(r0.q_class == BrauerClass());
}

TEST_CASE("B-odd: even Clifford class of the form") {
  LieDescriptor desc(BOdd{DiagonalForm({1, 1, 1})});
  RootSystem sys = root_system(desc);
  auto chars = all_characters(sys);
  REQUIRE(chars.size() == 2);

  auto r = tits_class_Q(desc, chars[1]);
  CHECK(!r.center);
  CHECK(r.q_class == kHamilton);  // C0(<1,1,1>) = Hamilton quaternions
  CHECK(r.r_algebra == RealAlg::H);
  CHECK(r.division_after_real == true);
  CHECK(tits_class_Q(desc, chars[0]).q_class == BrauerClass());
}

TEST_CASE("C-quaternionic: the Tits algebra is D itself") {
  BrauerClass D = quat({"2", "3"});
  LieDescriptor desc(CQuat{2, D});
  auto chars = all_characters(root_system(desc));
  auto r = tits_class_Q(desc, chars[1]);
  CHECK(r.q_class == D);
  CHECK(r.division_after_real == false);  // splits at infinity
  CHECK(tits_class_R(desc, chars[1]) == RealAlg::R);

  LieDescriptor ham(CQuat{2, kHamilton});
  CHECK(tits_class_R(ham, chars[1]) == RealAlg::H);
}

TEST_CASE("A-outer over imaginary L") {
  LieDescriptor desc(AOuter{3, QuadExt(Int(-1)), 1, Rational(1),
                            std::nullopt});
  RootSystem sys = root_system(desc);  // A_2, Z* = Z/3
  auto chars = all_characters(sys);
  REQUIRE(chars.size() == 3);

  auto r = tits_class_Q(desc, chars[1]);  // not *-fixed
  REQUIRE(r.center.has_value());
  CHECK(r.center->d() == -1);
  CHECK(r.q_trivial == true);  // dD = 1: D = L
  CHECK(r.division_after_real == true);
  CHECK(tits_class_R(desc, chars[1]) == RealAlg::C);
}

TEST_CASE("A-outer fixed order-2 character: discriminant quaternion class") {
  // n = 4 even: the order-2 character carries (L.d, (-1)^{n/2} det B)
  LieDescriptor desc(AOuter{4, QuadExt(Int(-1)), 1, Rational(3),
                            std::nullopt});
  RootSystem sys = root_system(desc);  // A_3, Z* = Z/4
  auto chars = all_characters(sys);
  auto fixed = star_on_character(sys, true, chars[2]);
  REQUIRE(fixed == chars[2]);

  auto r = tits_class_Q(desc, chars[2]);
  CHECK(!r.center);
  CHECK(r.q_class == quaternion_class(Rational(-1), Rational(3)));
}

TEST_CASE("split and exceptional descriptors have trivial classes") {
  for (LieDescriptor desc :
       {LieDescriptor(SplitSimple{RootSystem(Family::A, 2)}),
        LieDescriptor(SplitSimple{RootSystem(Family::D, 5)}),
        LieDescriptor(CSplit{3}),
        LieDescriptor(Exceptional{RootSystem(Family::E, 8)}),
        LieDescriptor(Exceptional{RootSystem(Family::G, 2)})}) {
    RootSystem sys = root_system(desc);
    auto chars = all_characters(sys);
    for (const auto& c : chars) {
      auto r = tits_class_Q(desc, c);
      CHECK(r.q_class == BrauerClass());
      CHECK(r.division_after_real == true);
      CHECK(tits_class_R(desc, c) == RealAlg::R);
    }
  }
}

TEST_CASE("D-orth spin classes: square vs nonsquare discriminant") {
  // <1,1,1,1,1,-1>: k = 3, disc = (-1)^3 * (-1) = 1: inner, C+- at Q
  LieDescriptor inner(DOrth{3, DiagonalForm({1, 1, 1, 1, 1, -1})});
  RootSystem sys = root_system(inner);  // D_3, Z* = Z/4
  auto chars = all_characters(sys);
  bool saw_spin = false;
  for (const auto& c : chars) {
    if (c.trivial()) continue;
    auto r = tits_class_Q(inner, c);
    if (!r.center && !(r.q_class == BrauerClass())) saw_spin = true;
  }
  CHECK(saw_spin);

  // <1,1,1,1,1,1>: disc = -1: outer over Q(i), spin classes live over L
  LieDescriptor outer(DOrth{3, DiagonalForm({1, 1, 1, 1, 1, 1})});
  bool saw_center = false;
  for (const auto& c : chars) {
    auto r = tits_class_Q(outer, c);
    if (r.center) {
      saw_center = true;
      CHECK(r.center->d() == -1);
      CHECK(tits_class_R(outer, c) == RealAlg::C);
    }
  }
  CHECK(saw_center);
}

TEST_CASE("D-quat: vector character reports D; odd k needs c0") {
  LieDescriptor d(DQuat{3, kHamilton, Rational(1), std::nullopt});
  RootSystem sys = root_system(d);
  auto chars = all_characters(sys);
  bool saw_vector = false, saw_missing = false;
  for (const auto& c : chars) {
    if (c.trivial()) continue;
    try {
      auto r = tits_class_Q(d, c);
      if (r.q_class == kHamilton && !r.center) saw_vector = true;
    } catch (const MissingInvariantError&) {
      saw_missing = true;
    }
  }
  CHECK(saw_vector);
  CHECK(saw_missing);
}

TEST_CASE("E-type bookkeeping") {
  LieDescriptor strong(E6Inner{E6Index::E6_0_6});
  LieDescriptor weak(E6Inner{E6Index::E6_16_2});
  auto chars = all_characters(RootSystem(Family::E, 6));
  CHECK(tits_class_Q(strong, chars[1]).q_trivial == true);
  CHECK(tits_class_Q(weak, chars[1]).q_trivial == false);

  LieDescriptor e7(E7{E7Index::E7_31_2, E7Index::E7_31_2});
  auto c7 = all_characters(RootSystem(Family::E, 7))[1];
  auto r = tits_class_Q(e7, c7);
  CHECK(r.q_trivial == false);
  CHECK_THROWS_AS(r.local_class(), UnsupportedQueryError);
  CHECK(tits_class_R(e7, c7) == RealAlg::H);

  LieDescriptor gap(E7{E7Index::E7_48_1, E7Index::E7_48_1});
  CHECK(!tits_class_Q(gap, c7).q_trivial.has_value());
}

TEST_CASE("remains_division_over_R") {
  CHECK(remains_division_over_R(std::nullopt, BrauerClass()));
  CHECK(!remains_division_over_R(std::nullopt, quat({"2", "3"})));
  CHECK(remains_division_over_R(std::nullopt, kHamilton));
  // center an imaginary field: division iff the restriction is trivial
  CHECK(remains_division_over_R(QuadExt(Int(-1)), BrauerClass()));
  CHECK(!remains_division_over_R(QuadExt(Int(-1)), quat({"5", "13"})));
  // real center never gives a division algebra compatible with R-forms
  CHECK(!remains_division_over_R(QuadExt(Int(2)), BrauerClass()));

  // quaternion classes: division over R iff ramified at infinity
  for (auto places : {std::initializer_list<const char*>{"2", "inf"},
                      {"3", "inf"}, {"2", "3"}, {"5", "7"}}) {
    BrauerClass q = quat(places);
    CHECK(remains_division_over_R(std::nullopt, q) ==
          (q.at(Place::infinite()) == Rational(1, 2)));
  }
}

TEST_CASE("restriction-to-center multiplicativity on *-fixed characters") {
  std::vector<LieDescriptor> descs = {
      LieDescriptor(AInner{2, 2, kHamilton}),
      LieDescriptor(AInner{3, 2, quat({"3", "inf"})}),
      LieDescriptor(BOdd{DiagonalForm({1, 2, -3, 5, 1})}),
      LieDescriptor(DOrth{3, DiagonalForm({1, 1, 1, 2, 2, -1})}),
      LieDescriptor(CQuat{3, kHamilton})};
  for (const auto& desc : descs) {
    RootSystem sys = root_system(desc);
    bool outer = galois_profile(desc).outer_Q;
    auto chars = all_characters(sys);
    for (const auto& a : chars)
      for (const auto& b : chars) {
        auto ab = times(sys, a, b);
        if (!(star_on_character(sys, outer, a) == a)) continue;
        if (!(star_on_character(sys, outer, b) == b)) continue;
        if (!(star_on_character(sys, outer, ab) == ab)) continue;
        auto ra = tits_class_Q(desc, a);
        auto rb = tits_class_Q(desc, b);
        auto rab = tits_class_Q(desc, ab);
        if (ra.center || rb.center || rab.center) continue;
        CHECK(rab.q_class ==
              brauer_combine(*ra.q_class, *rb.q_class));
      }
  }
}

TEST_CASE("real side matches the infinite invariant on *-fixed characters") {
  std::vector<LieDescriptor> descs = {
      LieDescriptor(AInner{1, 2, kHamilton}),
      LieDescriptor(BOdd{DiagonalForm({1, 1, 1})}),
      LieDescriptor(BOdd{DiagonalForm({1, 1, -3})}),
      LieDescriptor(CQuat{2, quat({"2", "3"})})};
  for (const auto& desc : descs) {
    RootSystem sys = root_system(desc);
    for (const auto& c : all_characters(sys)) {
      auto r = tits_class_Q(desc, c);
      if (r.center || !r.q_class) continue;
      bool ram = r.q_class->at(Place::infinite()) == Rational(1, 2);
      CHECK((tits_class_R(desc, c) == RealAlg::H) == ram);
    }
  }
}

TEST_CASE("real-form labels") {
  CHECK(real_form_of(LieDescriptor(BOdd{DiagonalForm({1, 1, 1})})) ==
        "so(3,0)");
  CHECK(real_form_of(LieDescriptor(BOdd{DiagonalForm({1, 1, -3})})) ==
        "so(2,1)");
  CHECK(real_form_of(LieDescriptor(
            DOrth{3, DiagonalForm({1, 1, 1, 1, -1, -1})})) == "so(4,2)");
  CHECK(real_form_of(LieDescriptor(SplitSimple{RootSystem(Family::A, 2)})) ==
        "sl(3,R)");
  CHECK(real_form_of(LieDescriptor(CSplit{2})) == "sp(4,R)");
  CHECK(real_form_of(LieDescriptor(AInner{1, 2, kHamilton})) == "su(2)");
  CHECK(real_form_of(LieDescriptor(AInner{2, 2, kHamilton})) == "sl(2,H)");
  CHECK(real_form_of(LieDescriptor(AInner{3, 1, BrauerClass()})) ==
        "sl(3,R)");
  CHECK(real_form_of(LieDescriptor(
            DQuat{4, kHamilton, Rational(1), std::nullopt})) == "so*(8)");
  std::vector<Rational> diag = {1, 1, -1};
  CHECK(real_form_of(LieDescriptor(AOuter{3, QuadExt(Int(-1)), 1,
                                          Rational(-1), diag})) == "su(2,1)");
  CHECK_THROWS_AS(
      real_form_of(LieDescriptor(E6Inner{E6Index::E6_0_6})),
      UnsupportedQueryError);
}
