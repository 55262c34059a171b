#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "runiv/numbertheory.hpp"

using namespace runiv;

namespace {

BrauerClass cls(std::initializer_list<std::pair<const char*, int>> halves) {
  std::map<Place, Rational> inv;
  for (const auto& [place, two] : halves) {
    Place v = std::string(place) == "inf" ? Place::infinite()
                                          : Place::finite(Int(place));
    inv.emplace(v, Rational(1, two));
  }
  return BrauerClass(std::move(inv));
}

std::vector<Int> squarefree_up_to(int bound) {
  std::vector<Int> out;
  for (int n = -bound; n <= bound; ++n) {
    if (n == 0) continue;
    if (squarefree_part(Rational(n)).first == n) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("squarefree_part") {
  auto [s1, t1] = squarefree_part(Rational(12));
  CHECK(s1 == 3);
  CHECK(t1 == 2);
  auto [s2, t2] = squarefree_part(Rational(-18));
  CHECK(s2 == -2);
  CHECK(t2 == 3);
  auto [s3, t3] = squarefree_part(Rational(4, 9));
  CHECK(s3 == 1);
  CHECK(t3 == Rational(2, 3));
  CHECK_THROWS_AS(squarefree_part(Rational(0)), std::domain_error);
}

TEST_CASE("primality and places") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(999999999989LL)));
  CHECK(!is_prime(Int(1)));
  CHECK(!is_prime(Int(561)));  // Carmichael
  CHECK_THROWS_AS(Place::finite(Int(6)), std::domain_error);
  CHECK(Place::infinite() < Place::finite(Int(2)));
  CHECK(Place::finite(Int(2)) < Place::finite(Int(3)));
}

TEST_CASE("hilbert symbol basics") {
  CHECK(hilbert_symbol(-1, -1, Place::infinite()) == -1);
  CHECK(hilbert_symbol(1, -7, Place::infinite()) == 1);
  CHECK(hilbert_symbol(1, 5, Place::finite(Int(2))) == 1);
  CHECK(hilbert_symbol(-1, -1, Place::finite(Int(2))) == -1);
  CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::infinite()), std::domain_error);
}

TEST_CASE("hilbert symbol algebraic laws") {
  auto sf = squarefree_up_to(15);
  std::vector<Place> places = {Place::infinite(), Place::finite(Int(2)),
                               Place::finite(Int(3)), Place::finite(Int(5)),
                               Place::finite(Int(7))};
  for (const auto& v : places)
    for (Int a : {-6, -2, 3, 10})
      for (Int b : {-5, 2, 7}) {
        // symmetry, square invariance, bimultiplicativity
        CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        CHECK(hilbert_symbol(Rational(a) * 9, b, v) == hilbert_symbol(a, b, v));
        for (Int c : {-3, 5})
          CHECK(hilbert_symbol(Rational(a * c), b, v) ==
                hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v));
      }
}

TEST_CASE("product formula over random squarefree pairs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-300, 300);
  int done = 0;
  while (done < 100) {
    int a = pick(rng), b = pick(rng);
    if (a == 0 || b == 0) continue;
    Int sa = squarefree_part(Rational(a)).first;
    Int sb = squarefree_part(Rational(b)).first;
    int prod = hilbert_symbol(sa, sb, Place::infinite());
    std::set<Int> primes = {2};
    for (auto& [p, e] : factorize(sa)) primes.insert(p);
    for (auto& [p, e] : factorize(sb)) primes.insert(p);
    for (const Int& p : primes) prod *= hilbert_symbol(sa, sb, Place::finite(p));
    CHECK(prod == 1);
    ++done;
  }
}

TEST_CASE("quaternion classes") {
  CHECK(quaternion_class(1, 5).trivial());
  CHECK(quaternion_class(-1, -1) == cls({{"inf", 2}, {"2", 2}}));
  CHECK(quaternion_class(-1, 3) == cls({{"2", 2}, {"3", 2}}));
  BrauerClass q = quaternion_class(-2, -5);
  for (const auto& [v, x] : q.invariants()) CHECK(x == Rational(1, 2));
  CHECK(quaternion_class(-1, -1).invariants().size() % 2 == 0);
}

TEST_CASE("brauer combine and index") {
  BrauerClass h = quaternion_class(-1, -1);
  CHECK(brauer_combine(h, h).trivial());
  CHECK(brauer_combine(BrauerClass(), h) == h);
  CHECK(brauer_combine(cls({{"2", 2}, {"3", 2}}), cls({{"3", 2}, {"inf", 2}})) ==
        cls({{"2", 2}, {"inf", 2}}));
  CHECK(brauer_index(BrauerClass()) == 1);
  CHECK(brauer_index(h) == 2);
  BrauerClass deg3({{Place::finite(Int(2)), Rational(1, 3)},
                    {Place::finite(Int(3)), Rational(2, 3)}});
  CHECK(brauer_index(deg3) == 3);
  CHECK(!deg3.two_torsion());
  // associativity / commutativity spot checks
  BrauerClass x = quaternion_class(-1, 3), y = quaternion_class(2, -5);
  CHECK(brauer_combine(x, y) == brauer_combine(y, x));
  CHECK(brauer_combine(brauer_combine(x, y), h) ==
        brauer_combine(x, brauer_combine(y, h)));
}

TEST_CASE("conic oracle") {
  CHECK(conic_has_point(1, 1));
  CHECK(!conic_has_point(-1, -1));
  CHECK(!conic_has_point(2, 3));
  CHECK(conic_has_point(Rational(1, 4), Rational(9)));
}

TEST_CASE("oracle agreement on squarefree pairs up to 30") {
  for (const Int& a : squarefree_up_to(30))
    for (const Int& b : squarefree_up_to(30)) {
      bool split = quaternion_class(a, b).trivial();
      CHECK(split == conic_has_point(a, b));
    }
}

TEST_CASE("norms in quadratic fields") {
  QuadExt gauss(Int(-1));
  CHECK(is_norm(gauss, 2));
  CHECK(!is_norm(gauss, -1));
  CHECK(!is_norm(gauss, 3));
  // subgroup property: b norm iff b*N norm for N already a norm
  for (Int b : {-7, -3, 2, 5, 13})
    CHECK(is_norm(gauss, b) == is_norm(gauss, Rational(b * 5)));  // 5 = 1+4
  CHECK_THROWS_AS(QuadExt(Int(4)), std::domain_error);
  CHECK_THROWS_AS(QuadExt(Int(1)), std::domain_error);
}

TEST_CASE("prime splitting in Q(i)") {
  QuadExt gauss(Int(-1));
  CHECK(prime_splitting(gauss, Place::finite(Int(5))) == Splitting::Split);
  CHECK(prime_splitting(gauss, Place::finite(Int(3))) == Splitting::Inert);
  CHECK(prime_splitting(gauss, Place::finite(Int(2))) == Splitting::Ramified);
  CHECK(prime_splitting(gauss, Place::infinite()) == Splitting::Inert);
  CHECK(prime_splitting(QuadExt(Int(2)), Place::infinite()) == Splitting::Split);
  CHECK(prime_splitting(QuadExt(Int(5)), Place::finite(Int(2))) ==
        Splitting::Inert);
}

TEST_CASE("restriction to quadratic extensions") {
  QuadExt gauss(Int(-1));
  CHECK(restricts_trivially(BrauerClass(), gauss));
  CHECK(restricts_trivially(quaternion_class(-1, -1), gauss));
  CHECK(!restricts_trivially(cls({{"5", 2}, {"inf", 2}}), gauss));
  BrauerClass deg3({{Place::finite(Int(2)), Rational(1, 3)},
                    {Place::finite(Int(3)), Rational(2, 3)}});
  CHECK_THROWS_AS(restricts_trivially(deg3, gauss), std::domain_error);
}
