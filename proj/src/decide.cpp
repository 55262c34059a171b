#include "runiv/decide.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace runiv {

namespace {

const Rational kHalf(1, 2);

Rational det_of(const DiagonalForm& f) {
  Rational d = 1;
  for (const auto& a : f.entries()) d *= a;
  return d;
}

std::string form_str(const DiagonalForm& f) {
  std::string s = "<";
  for (int i = 0; i < f.dim(); ++i) {
    if (i) s += ",";
    s += to_string(f.entries()[i]);
  }
  return s + ">";
}

Verdict one(Universal u, std::string criterion, std::string values,
            std::string citation) {
  return Verdict{u, {{std::move(criterion), std::move(values),
                      std::move(citation)}}};
}

// citations: mathematical statements of the criteria being applied
const char* kCiteSplit =
    "every Q-split semisimple Lie algebra is R-universal (its Tits algebras "
    "are all trivial)";
const char* kCiteAInner =
    "sl_n(D) is R-universal iff D is Q or a quaternion algebra that does not "
    "split over R";
const char* kCiteAOuter =
    "su_n(B; D, tau) is R-universal iff D = L is an imaginary quadratic "
    "extension and either n is odd or (-1)^(n/2) det B is negative or a norm "
    "from L";
const char* kCiteBOdd =
    "so_n(B), n odd, is R-universal iff the even Clifford algebra of B is "
    "split over Q or is not split over R";
const char* kCiteCQuat =
    "su_n(B; D, tau_r) with quaternion D is R-universal iff D does not split "
    "over R";
const char* kCiteDOrth =
    "so_2k(B) is R-universal iff the even Clifford algebra of B is split and "
    "(-1)^k det B is negative or a square, or that algebra does not split "
    "over R and (-1)^k det B is a square";
const char* kCiteDQuat =
    "su_k(B; D, tau_r) of type D_k is R-universal iff D does not split over R "
    "and either k is even with Nrd(B) a square, or k is odd with the even "
    "Clifford algebra C0_D(B, tau_r) split";
const char* kCiteE6Inner =
    "an inner form of type E6 is R-universal iff it is strongly inner";
const char* kCiteE6Outer =
    "an outer form of type E6 is R-universal iff it splits over an imaginary "
    "quadratic extension";
const char* kCiteE7 =
    "a form of type E7 is R-universal iff its Tits algebra is trivial over Q "
    "(indices E7_28_3, E7_0_7) or nontrivial over R (real indices E7_133_0, "
    "E7_31_2, E7_9_4)";
const char* kCiteRes =
    "a simple but not absolutely simple Lie algebra is R-universal iff it is "
    "the restriction of scalars of a strongly inner algebra over an imaginary "
    "quadratic extension";
const char* kCiteExc =
    "every absolutely simple Lie algebra of type E8, F4 or G2 is R-universal "
    "(trivial center, hence trivial Tits algebras)";

struct DecideVisitor {
  const LieDescriptor& desc;

  Verdict operator()(const SplitSimple& s) {
    return one(Universal::Yes, "split", "type " + s.sys.str(), kCiteSplit);
  }

  Verdict operator()(const CSplit& c) {
    return one(Universal::Yes, "split",
               "sp_" + std::to_string(2 * c.n) + "(Q)", kCiteSplit);
  }

  Verdict operator()(const Exceptional& e) {
    return one(Universal::Yes, "exceptional", "type " + e.sys.str(), kCiteExc);
  }

  Verdict operator()(const AInner& a) {
    std::string vals = "d=" + std::to_string(a.d) + ", [D]=" + a.cls.str();
    if (a.d == 1)
      return one(Universal::Yes, "A-inner: D = Q", vals, kCiteAInner);
    if (a.d == 2 && a.cls.at(Place::infinite()) == kHalf)
      return one(Universal::Yes,
                 "A-inner: quaternion D ramified at infinity", vals,
                 kCiteAInner);
    if (a.d == 2)
      return one(Universal::No, "A-inner: quaternion D splits over R", vals,
                 kCiteAInner);
    return one(Universal::No, "A-inner: deg D > 2", vals, kCiteAInner);
  }

  Verdict operator()(const AOuter& a) {
    std::string vals = "L=Q(sqrt(" + to_string(Rational(a.L.d())) +
                       ")), dD=" + std::to_string(a.dD) +
                       ", detB=" + to_string(a.detB);
    if (!a.L.imaginary())
      return one(Universal::No, "A-outer: L is real", vals, kCiteAOuter);
    if (a.dD != 1)
      return one(Universal::No, "A-outer: D bigger than L", vals, kCiteAOuter);
    if (a.n % 2 == 1)
      return one(Universal::Yes, "A-outer: n odd", vals, kCiteAOuter);
    Rational b = a.detB;
    if ((a.n / 2) % 2 == 1) b = -b;
    vals += ", (-1)^(n/2) det B=" + to_string(b);
    if (b < 0)
      return one(Universal::Yes, "A-outer: (-1)^(n/2) det B < 0", vals,
                 kCiteAOuter);
    if (is_norm(a.L, b))
      return one(Universal::Yes, "A-outer: (-1)^(n/2) det B is a norm of L",
                 vals, kCiteAOuter);
    return one(Universal::No,
               "A-outer: (-1)^(n/2) det B positive and not a norm of L", vals,
               kCiteAOuter);
  }

  Verdict operator()(const BOdd& b) {
    auto cls = even_clifford_class(b.form).q_class;
    std::string vals =
        "B=" + form_str(b.form) + ", [Cliff0_Q(B)]=" + cls.str();
    if (cls.trivial())
      return one(Universal::Yes, "B: Cliff0_Q(B) split", vals, kCiteBOdd);
    if (cls.at(Place::infinite()) == kHalf)
      return one(Universal::Yes, "B: Cliff0_R(B) not split", vals, kCiteBOdd);
    return one(Universal::No,
               "B: Cliff0_Q(B) nontrivial but splits over R", vals, kCiteBOdd);
  }

  Verdict operator()(const CQuat& q) {
    std::string vals = "[D]=" + q.D.str();
    if (q.D.at(Place::infinite()) == kHalf)
      return one(Universal::Yes, "C: D ramified at infinity", vals, kCiteCQuat);
    return one(Universal::No, "C: D splits over R", vals, kCiteCQuat);
  }

  Verdict operator()(const DOrth& d) {
    auto ecc = even_clifford_class(d.form);
    Rational disc = det_of(d.form);
    if (d.k % 2 == 1) disc = -disc;
    Int s = squarefree_part(disc).first;
    std::string vals = "B=" + form_str(d.form) + ", (-1)^k det B ~ " +
                       to_string(Rational(s)) +
                       ", [Cliff0(B)]=" + ecc.q_class.str();
    if (s == 1) {
      if (ecc.q_class.trivial())
        return one(Universal::Yes, "D-orth inner: C+- split", vals, kCiteDOrth);
      if (ecc.q_class.at(Place::infinite()) == kHalf)
        return one(Universal::Yes, "D-orth inner: C+- nonsplit over R", vals,
                   kCiteDOrth);
      return one(Universal::No,
                 "D-orth inner: C+- nontrivial but splits over R", vals,
                 kCiteDOrth);
    }
    if (s > 0)
      return one(Universal::No,
                 "D-orth outer: (-1)^k det B positive nonsquare (outer over Q, "
                 "inner over R)",
                 vals, kCiteDOrth);
    if (restricts_trivially(ecc.q_class, QuadExt(s)))
      return one(Universal::Yes, "D-orth outer: Cliff0_Q(B) split over L",
                 vals, kCiteDOrth);
    return one(Universal::No, "D-orth outer: Cliff0_Q(B) not split over L",
               vals, kCiteDOrth);
  }

  Verdict operator()(const DQuat& d) {
    std::string vals = "k=" + std::to_string(d.k) + ", [D]=" + d.D.str() +
                       ", Nrd(B)=" + to_string(d.reduced_norm_B);
    if (d.D.at(Place::infinite()) != kHalf)
      return one(Universal::No, "D-quat: D splits over R", vals, kCiteDQuat);
    if (d.k % 2 == 0) {
      if (squarefree_part(d.reduced_norm_B).first == 1)
        return one(Universal::Yes, "D-quat: k even, Nrd(B) square", vals,
                   kCiteDQuat);
      return one(Universal::No, "D-quat: k even, Nrd(B) not a square", vals,
                 kCiteDQuat);
    }
    if (!d.c0_class)
      return one(Universal::Indeterminate,
                 "D-quat: k odd, even Clifford class C0_D(B, tau_r) not "
                 "supplied",
                 vals, kCiteDQuat);
    Int s = squarefree_part(Rational(-d.reduced_norm_B)).first;
    bool split = s == 1 ? d.c0_class->trivial()
                        : restricts_trivially(*d.c0_class, QuadExt(s));
    vals += ", [C0]=" + d.c0_class->str();
    if (split)
      return one(Universal::Yes, "D-quat: k odd, C0_D(B, tau_r) split", vals,
                 kCiteDQuat);
    return one(Universal::No, "D-quat: k odd, C0_D(B, tau_r) not split", vals,
               kCiteDQuat);
  }

  Verdict operator()(const E6Inner& e) {
    std::string vals = "index " + e6_label(e.index);
    if (e.index == E6Index::E6_28_2 || e.index == E6Index::E6_0_6)
      return one(Universal::Yes, "E6 inner: strongly inner", vals,
                 kCiteE6Inner);
    return one(Universal::No, "E6 inner: not strongly inner", vals,
               kCiteE6Inner);
  }

  Verdict operator()(const E6Outer& e) {
    std::string vals = "L=Q(sqrt(" + to_string(Rational(e.L.d())) +
                       ")), splits over L: " + (e.splits_over_L ? "yes" : "no");
    if (!e.L.imaginary())
      return one(Universal::No, "E6 outer: L is real", vals, kCiteE6Outer);
    if (e.splits_over_L)
      return one(Universal::Yes, "E6 outer: splits over imaginary L", vals,
                 kCiteE6Outer);
    return one(Universal::No, "E6 outer: does not split over L", vals,
               kCiteE6Outer);
  }

  Verdict operator()(const E7& e) {
    std::string vals = "index over Q: " + e7_label(e.index_Q) +
                       ", index over R: " + e7_label(e.index_R);
    bool q_trivial = e.index_Q == E7Index::E7_28_3 ||
                     e.index_Q == E7Index::E7_0_7;
    bool q_nontrivial = e.index_Q == E7Index::E7_31_2 ||
                        e.index_Q == E7Index::E7_9_4 ||
                        e.index_Q == E7Index::E7_133_0;
    bool r_nontrivial = e.index_R == E7Index::E7_133_0 ||
                        e.index_R == E7Index::E7_31_2 ||
                        e.index_R == E7Index::E7_9_4;
    bool r_trivial = e.index_R == E7Index::E7_0_7;
    if (q_trivial)
      return one(Universal::Yes, "E7: Tits algebra trivial over Q", vals,
                 kCiteE7);
    if (r_nontrivial)
      return one(Universal::Yes, "E7: Tits algebra nontrivial over R", vals,
                 kCiteE7);
    if (q_nontrivial && r_trivial)
      return one(Universal::No,
                 "E7: Tits algebra nontrivial over Q, trivial over R", vals,
                 kCiteE7);
    return one(Universal::Indeterminate,
               "E7: index labels outside the classified set", vals, kCiteE7);
  }

  Verdict operator()(const ResScalars& r) {
    return decide_res_scalars(r.L, r.strongly_inner);
  }

  Verdict operator()(const DirectSum& s) {
    return decide_direct_sum(s.factors);
  }
};

std::string char_str(const CenterCharacter& c) { return c.str(); }

}  // namespace

std::string universal_name(Universal u) {
  switch (u) {
    case Universal::Yes: return "Yes";
    case Universal::No: return "No";
    case Universal::Indeterminate: return "Indeterminate";
  }
  throw std::logic_error("bad Universal");
}

Verdict decide(const LieDescriptor& desc) {
  return std::visit(DecideVisitor{desc}, desc.node());
}

Verdict generic_engine(const LieDescriptor& desc) {
  const std::string kind = desc.kind();
  if (kind == "ResScalars" || kind == "DirectSum")
    throw std::domain_error(
        "generic_engine: defined for non-sum absolutely simple descriptors");

  const char* cite =
      "a Lie algebra over Q is R-universal iff for every dominant weight the "
      "Tits algebra over Q stays a division algebra after extension to R; "
      "the condition only depends on the weight's restriction to the center";

  RootSystem sys = root_system(desc);
  std::vector<TraceEntry> trace;
  bool unknown = false;
  for (const auto& c : all_characters(sys)) {
    std::string label = "character " + char_str(c);
    try {
      TitsReport t = tits_class_Q(desc, c);
      std::string vals =
          (t.center ? "center Q(sqrt(" + to_string(Rational(t.center->d())) +
                          "))"
                    : std::string("center Q")) +
          (t.q_class ? ", class " + t.q_class->str() : ", class opaque");
      if (t.division_after_real == false) {
        trace.push_back({label, vals + ": not division after tensoring with R",
                         cite});
        return Verdict{Universal::No, std::move(trace)};
      }
      if (!t.division_after_real.has_value()) {
        unknown = true;
        trace.push_back({label, vals + ": division behavior undetermined",
                         cite});
      } else {
        trace.push_back({label, vals + ": division after tensoring with R",
                         cite});
      }
    } catch (const MissingInvariantError& e) {
      unknown = true;
      trace.push_back({label, std::string("missing invariant: ") + e.what(),
                       cite});
    }
  }
  return Verdict{unknown ? Universal::Indeterminate : Universal::Yes,
                 std::move(trace)};
}

bool decide_weight(const LieDescriptor& desc, const Weight& lambda) {
  RootSystem sys = root_system(desc);
  if (static_cast<int>(lambda.coords.size()) != sys.rank())
    throw std::domain_error("decide_weight: weight rank mismatch");
  auto c = center_character(sys, lambda);
  TitsReport t = tits_class_Q(desc, c);
  if (!t.division_after_real.has_value())
    throw MissingInvariantError(
        "decide_weight: division behavior undetermined for this descriptor");
  return *t.division_after_real;
}

Int q_irreducible_dimension(const LieDescriptor& desc, const Weight& lambda) {
  const std::string kind = desc.kind();
  if (kind == "E6Inner" || kind == "E6Outer" || kind == "E7" ||
      kind == "ResScalars" || kind == "DirectSum")
    throw UnsupportedQueryError(
        "q_irreducible_dimension: classical descriptors only");
  RootSystem sys = root_system(desc);
  if (static_cast<int>(lambda.coords.size()) != sys.rank())
    throw std::domain_error("q_irreducible_dimension: weight rank mismatch");

  GaloisProfile prof = galois_profile(desc);
  Int orbit = 1;
  if (prof.outer_Q && !(star_action(sys, true, lambda) == lambda)) orbit = 2;

  TitsReport t = tits_class_Q(desc, center_character(sys, lambda));
  Int index;
  if (!t.center) {
    if (!t.q_class)
      throw MissingInvariantError(
          "q_irreducible_dimension: the Tits class at this weight is not "
          "computable from the descriptor");
    index = brauer_index(*t.q_class);
  } else if (const auto* a = desc.get<AOuter>()) {
    index = a->dD;
  } else if (t.q_trivial.has_value()) {
    index = *t.q_trivial ? 1 : 2;
  } else {
    throw MissingInvariantError(
        "q_irreducible_dimension: Schur index over the center undetermined");
  }
  return orbit * index * weyl_dimension(sys, lambda);
}

Verdict decide_res_scalars(const QuadExt& L, bool strongly_inner) {
  std::string vals = "L=Q(sqrt(" + to_string(Rational(L.d())) +
                     ")), strongly inner: " + (strongly_inner ? "yes" : "no");
  if (!L.imaginary())
    return one(Universal::No, "ResScalars: the extension L must be imaginary",
               vals, kCiteRes);
  if (!strongly_inner)
    return one(Universal::No,
               "ResScalars: the algebra over L must be strongly inner", vals,
               kCiteRes);
  return one(Universal::Yes, "ResScalars: imaginary L, strongly inner", vals,
             kCiteRes);
}

namespace {

const char* kCiteSum1 =
    "a direct sum is R-universal only if each summand is (representations of "
    "a factor extend by zero)";
const char* kCiteSum2 =
    "a direct sum must be inner or become inner over a single imaginary "
    "quadratic extension L whose *-action agrees with the real *-action";
const char* kCiteSum3 =
    "condition (3): the Tits algebras D_i(lambda_i) and D_j(lambda_j) must "
    "be isomorphic whenever lambda_i, lambda_j are *-invariant dominant "
    "weights with both algebras nontrivial";
const char* kCiteSum4 =
    "condition (4): for an outer sum, the Tits algebra of every dominant "
    "weight of every inner factor must split over L";

struct FixedClass {
  bool known;
  BrauerClass cls;  // meaningful iff known
};

}  // namespace

Verdict decide_direct_sum(const std::vector<LieDescriptor>& factors) {
  if (factors.empty())
    throw std::domain_error("decide_direct_sum: at least one factor");
  std::vector<TraceEntry> trace;
  bool indeterminate = false;

  // condition (1)
  for (size_t i = 0; i < factors.size(); ++i) {
    Verdict v = decide(factors[i]);
    std::string label =
        "condition (1), factor " + std::to_string(i + 1) + " (" +
        factors[i].kind() + ")";
    if (v.universal == Universal::No) {
      trace.push_back({label, "factor is not R-universal", kCiteSum1});
      return Verdict{Universal::No, std::move(trace)};
    }
    if (v.universal == Universal::Indeterminate) {
      trace.push_back({label, "factor verdict indeterminate", kCiteSum1});
      indeterminate = true;
    } else {
      trace.push_back({label, "factor is R-universal", kCiteSum1});
    }
  }

  // condition (2)
  std::optional<QuadExt> L;
  for (size_t i = 0; i < factors.size(); ++i) {
    GaloisProfile p = galois_profile(factors[i]);
    std::string label = "condition (2), factor " + std::to_string(i + 1);
    if (p.outer_Q != p.outer_R) {
      trace.push_back({label,
                       "rational and real *-actions differ on this factor",
                       kCiteSum2});
      return Verdict{Universal::No, std::move(trace)};
    }
    if (!p.outer_Q) continue;
    if (!p.L->imaginary()) {
      trace.push_back({label, "factor becomes inner over a real field",
                       kCiteSum2});
      return Verdict{Universal::No, std::move(trace)};
    }
    if (L && !(L->d() == p.L->d())) {
      trace.push_back({label,
                       "outer factors become inner over different fields",
                       kCiteSum2});
      return Verdict{Universal::No, std::move(trace)};
    }
    L = p.L;
  }
  trace.push_back({"condition (2)",
                   L ? "outer sum, common field L=Q(sqrt(" +
                           to_string(Rational(L->d())) + "))"
                     : "inner sum",
                   kCiteSum2});

  // nontrivial Tits classes at *-invariant characters, per factor
  std::vector<std::vector<FixedClass>> fixed(factors.size());
  std::vector<bool> inner(factors.size(), false);
  for (size_t i = 0; i < factors.size(); ++i) {
    GaloisProfile p = galois_profile(factors[i]);
    inner[i] = !p.outer_Q;
    if (factors[i].get<ResScalars>()) continue;  // strongly inner over L
    RootSystem sys = root_system(factors[i]);
    for (const auto& c : all_characters(sys)) {
      if (!(star_on_character(sys, p.outer_Q, c) == c)) continue;
      try {
        TitsReport t = tits_class_Q(factors[i], c);
        if (t.q_trivial == true) continue;
        FixedClass f;
        f.known = t.q_class.has_value() && t.q_trivial.has_value();
        if (f.known) f.cls = *t.q_class;
        fixed[i].push_back(std::move(f));
      } catch (const MissingInvariantError&) {
        fixed[i].push_back({false, BrauerClass()});
      }
    }
  }

  // condition (3)
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      for (const auto& fi : fixed[i])
        for (const auto& fj : fixed[j]) {
          if (!fi.known || !fj.known) {
            indeterminate = true;
            continue;
          }
          if (!(fi.cls == fj.cls)) {
            trace.push_back(
                {"condition (3), factors " + std::to_string(i + 1) + " and " +
                     std::to_string(j + 1),
                 fi.cls.str() + " vs " + fj.cls.str(), kCiteSum3});
            return Verdict{Universal::No, std::move(trace)};
          }
        }
  trace.push_back({"condition (3)",
                   "all nontrivial *-invariant Tits classes agree", kCiteSum3});

  // condition (4)
  if (L) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (!inner[i]) continue;
      for (const auto& f : fixed[i]) {
        if (!f.known) {
          indeterminate = true;
          continue;
        }
        if (!restricts_trivially(f.cls, *L)) {
          trace.push_back({"condition (4), factor " + std::to_string(i + 1),
                           f.cls.str() + " does not split over L", kCiteSum4});
          return Verdict{Universal::No, std::move(trace)};
        }
      }
    }
  }
  trace.push_back({"condition (4)",
                   L ? "all inner-factor Tits classes split over L"
                     : "inner sum, vacuous",
                   kCiteSum4});

  return Verdict{indeterminate ? Universal::Indeterminate : Universal::Yes,
                 std::move(trace)};
}

// -- constructive search -----------------------------------------------------

namespace {

/// All nondecreasing tuples of the given length over `pool`, lexicographic.
std::vector<std::vector<long long>> tuples(const std::vector<long long>& pool,
                                           int len) {
  std::vector<std::vector<long long>> out;
  std::vector<int> idx(len, 0);
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (pool.empty()) return out;
  for (;;) {
    std::vector<long long> t(len);
    for (int i = 0; i < len; ++i) t[i] = pool[idx[i]];
    out.push_back(std::move(t));
    int k = len - 1;
    while (k >= 0 && idx[k] == static_cast<int>(pool.size()) - 1) --k;
    if (k < 0) break;
    int v = ++idx[k];
    for (int i = k + 1; i < len; ++i) idx[i] = v;
  }
  return out;
}

std::optional<LieDescriptor> search_form(int p, int q,
                                         const SearchBound& bound) {
  std::vector<long long> pool = bound.entries;
  std::sort(pool.begin(), pool.end());
  int n = p + q;
  for (const auto& pos : tuples(pool, p))
    for (const auto& neg : tuples(pool, q)) {
      std::vector<Rational> e;
      for (long long a : pos) e.emplace_back(a);
      for (long long a : neg) e.emplace_back(-a);
      DiagonalForm f(std::move(e));
      LieDescriptor d = n % 2 ? LieDescriptor::Node(BOdd{f})
                              : LieDescriptor::Node(DOrth{n / 2, f});
      if (decide(d).universal == Universal::Yes) return d;
    }
  return std::nullopt;
}

bool parse_pair(const std::string& s, const std::string& head, long long& a,
                long long& b) {
  // head(a,b)
  if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return false;
  std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) return false;
  try {
    size_t done = 0;
    a = std::stoll(body.substr(0, comma), &done);
    if (done != comma) return false;
    std::string second = body.substr(comma + 1);
    b = std::stoll(second, &done);
    return done == second.size();
  } catch (...) {
    return false;
  }
}

bool parse_suffixed(const std::string& s, const std::string& head,
                    const std::string& suffix, long long& n) {
  // head(n,suffix)
  if (s.rfind(head + "(", 0) != 0 ||
      s.size() < head.size() + suffix.size() + 3 ||
      s.substr(s.size() - suffix.size() - 2) != "," + suffix + ")")
    return false;
  std::string body =
      s.substr(head.size() + 1, s.size() - head.size() - suffix.size() - 3);
  try {
    size_t done = 0;
    n = std::stoll(body, &done);
    return done == body.size();
  } catch (...) {
    return false;
  }
}

LieDescriptor hamilton_su2() {
  return LieDescriptor(AInner{1, 2, quaternion_class(-1, -1)});
}

}  // namespace

bool same_real_form(const std::string& a, const std::string& b) {
  auto canon = [](std::string s) {
    if (s == "sl(1,H)") return std::string("su(2)");
    if (s == "so(4,0)") return std::string("su(2)+su(2)");
    if (s == "so(0,4)") return std::string("su(2)+su(2)");
    return s;
  };
  return canon(a) == canon(b);
}

LieDescriptor find_runiversal_qform(const std::string& realform,
                                    const SearchBound& bound) {
  long long a = 0, b = 0;

  auto deliver = [&](LieDescriptor d) {
    if (decide(d).universal != Universal::Yes)
      throw std::logic_error("find_runiversal_qform: candidate not verified");
    if (!same_real_form(real_form_of(d), realform))
      throw std::logic_error("find_runiversal_qform: real form mismatch");
    return d;
  };

  if (realform == "su(2)") return deliver(hamilton_su2());

  if (parse_suffixed(realform, "sl", "R", a)) {
    if (a < 2)
      throw UnsupportedQueryError("find_runiversal_qform: sl(n,R) needs n>=2");
    return deliver(LieDescriptor(SplitSimple{RootSystem(Family::A,
                                                        static_cast<int>(a) -
                                                            1)}));
  }
  if (parse_suffixed(realform, "sl", "H", a)) {
    if (a < 1)
      throw UnsupportedQueryError("find_runiversal_qform: sl(n,H) needs n>=1");
    return deliver(LieDescriptor(
        AInner{static_cast<int>(a), 2, quaternion_class(-1, -1)}));
  }
  if (parse_suffixed(realform, "sp", "R", a)) {
    if (a < 2 || a % 2 != 0)
      throw UnsupportedQueryError(
          "find_runiversal_qform: sp(2n,R) needs even 2n >= 2");
    return deliver(
        LieDescriptor(CSplit{static_cast<int>(a) / 2}));
  }
  if (parse_pair(realform, "so", a, b)) {
    long long n = a + b;
    if (n == 4 && b == 0) {
      // so(4) is su(2) + su(2); the rank-2 type D descriptor does not exist
      std::vector<LieDescriptor> f = {hamilton_su2(), hamilton_su2()};
      LieDescriptor d((DirectSum{std::move(f)}));
      if (decide(d).universal != Universal::Yes)
        throw std::logic_error("find_runiversal_qform: candidate not verified");
      return d;
    }
    if (n < 3 || (n % 2 == 0 && n < 6))
      throw UnsupportedQueryError(
          "find_runiversal_qform: so(p,q) needs p+q >= 3 odd or >= 6 even "
          "(so(4,0) is handled as su(2)+su(2))");
    auto found = search_form(static_cast<int>(a), static_cast<int>(b), bound);
    if (!found)
      throw NotFoundError("find_runiversal_qform: no form of signature (" +
                          std::to_string(a) + "," + std::to_string(b) +
                          ") within the entry budget");
    return deliver(*found);
  }
  if (parse_pair(realform, "su", a, b)) {
    long long n = a + b;
    if (n < 3)
      throw UnsupportedQueryError(
          "find_runiversal_qform: su(p,q) needs p+q >= 3 (use su(2) for the "
          "compact rank-1 form)");
    std::vector<long long> pool = bound.entries;
    std::sort(pool.begin(), pool.end());
    std::vector<Int> seen;
    for (long long e : pool) {
      Int d0 = squarefree_part(Rational(-e)).first;
      if (std::find(seen.begin(), seen.end(), d0) != seen.end()) continue;
      seen.push_back(d0);
      std::vector<Rational> diag(n, 1);
      for (long long i = 0; i < b; ++i) diag[a + i] = -1;
      Rational det = b % 2 ? -1 : 1;
      LieDescriptor cand(
          AOuter{static_cast<int>(n), QuadExt(d0), 1, det, diag});
      if (decide(cand).universal == Universal::Yes) return deliver(cand);
    }
    throw NotFoundError(
        "find_runiversal_qform: no su(p,q) descriptor within the field "
        "budget");
  }
  if (realform.rfind("so*(", 0) == 0 && realform.back() == ')') {
    try {
      a = std::stoll(realform.substr(4, realform.size() - 5));
    } catch (...) {
      a = 0;
    }
    if (a >= 6 && a % 4 == 0) {  // 2k with k even: Nrd square suffices
      return deliver(LieDescriptor(DQuat{static_cast<int>(a) / 2,
                                         quaternion_class(-1, -1), 1,
                                         std::nullopt}));
    }
    throw UnsupportedQueryError(
        "find_runiversal_qform: so*(2k) supported for even k >= 4 only (odd "
        "k needs a supplied even Clifford class)");
  }
  throw UnsupportedQueryError("find_runiversal_qform: unsupported label " +
                              realform);
}

}  // namespace runiv
