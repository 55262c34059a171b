#include "runiv/titsalgebra.hpp"

#include <algorithm>

namespace runiv {

namespace {

const Rational kHalf(1, 2);

Rational det_of(const DiagonalForm& f) {
  Rational d = 1;
  for (const auto& a : f.entries()) d *= a;
  return d;
}

/// i-fold tensor power: invariants scaled by i (mod 1).
BrauerClass brauer_power(const BrauerClass& c, long long i) {
  std::map<Place, Rational> inv;
  for (const auto& [v, x] : c.invariants()) inv.emplace(v, x * i);
  return BrauerClass(std::move(inv));
}

/// Residue of a character of a cyclic fundamental group.
long long cyclic_residue(const CenterCharacter& c) {
  if (c.orders.empty()) return 0;
  return c.residues[0];
}

void expect_group(const LieDescriptor& desc, const CenterCharacter& c) {
  auto orders = fundamental_group(root_system(desc));
  if (c.orders != orders)
    throw std::domain_error(
        "tits_class_Q: character does not belong to the fundamental group "
        "of the descriptor's root system");
  for (size_t i = 0; i < orders.size(); ++i)
    if (c.residues[i] < 0 || c.residues[i] >= orders[i])
      throw std::domain_error("tits_class_Q: character residues out of range");
}

TitsReport trivial_report() {
  TitsReport t;
  t.q_class = BrauerClass();
  t.q_trivial = true;
  t.r_algebra = RealAlg::R;
  t.division_after_real = true;
  return t;
}

/// Classical class central over Q: everything is determined by the class.
TitsReport q_central(BrauerClass cls) {
  TitsReport t;
  t.q_trivial = cls.trivial();
  t.r_algebra = cls.at(Place::infinite()) == kHalf ? RealAlg::H : RealAlg::R;
  t.division_after_real = remains_division_over_R(std::nullopt, cls);
  t.q_class = std::move(cls);
  return t;
}

/// 2-torsion class whose restriction to the quadratic center L is the Tits
/// class.
TitsReport over_center(const QuadExt& L, const BrauerClass& cls) {
  TitsReport t;
  t.center = L;
  t.q_class = cls;
  t.q_trivial = restricts_trivially(cls, L);
  if (L.imaginary())
    t.r_algebra = RealAlg::C;
  else
    t.r_algebra = cls.at(Place::infinite()) == kHalf ? RealAlg::H : RealAlg::R;
  t.division_after_real = remains_division_over_R(L, cls);
  return t;
}

struct TitsVisitor {
  const LieDescriptor& desc;
  const CenterCharacter& c;

  TitsReport operator()(const SplitSimple&) { return trivial_report(); }
  TitsReport operator()(const CSplit&) { return trivial_report(); }
  TitsReport operator()(const Exceptional&) { return trivial_report(); }

  TitsReport operator()(const AInner& a) {
    return q_central(brauer_power(a.cls, cyclic_residue(c)));
  }

  TitsReport operator()(const AOuter& a) {
    long long m = static_cast<long long>(a.dD) * a.n;
    long long r = cyclic_residue(c);
    if (r == 0) return trivial_report();
    if ((2 * r) % m != 0) {
      // not fixed by the *-action: the class is central over L
      TitsReport t;
      t.center = a.L;
      if (a.dD == 1) {
        t.q_class = BrauerClass();
        t.q_trivial = true;
        t.r_algebra = a.L.imaginary() ? RealAlg::C : RealAlg::R;
        t.division_after_real = a.L.imaginary();
      } else {
        // D itself: a division algebra of degree dD over L, nontrivial
        t.q_trivial = false;
        t.r_algebra = a.L.imaginary() ? RealAlg::C : RealAlg::R;
        t.division_after_real = false;
      }
      return t;
    }
    // the order-2 fixed character
    if (a.dD != 1)
      throw MissingInvariantError(
          "tits_class_Q: the discriminant algebra of an outer type A form "
          "with dD > 1 is not modeled");
    Rational b = a.detB;
    if ((a.n / 2) % 2 == 1) b = -b;
    return q_central(quaternion_class(Rational(a.L.d()), b));
  }

  TitsReport operator()(const BOdd& b) {
    if (c.residues.empty() || c.residues[0] == 0) return trivial_report();
    return q_central(even_clifford_class(b.form).q_class);
  }

  TitsReport operator()(const CQuat& q) {
    if (cyclic_residue(c) == 0) return trivial_report();
    return q_central(q.D);
  }

  bool is_spin_character(const RootSystem& sys) const {
    // nontrivial and different from the vector character (image of w_1)
    std::vector<long long> e1(sys.rank(), 0);
    e1[0] = 1;
    auto vec = center_character(sys, e1);
    return !c.trivial() && !(c == vec);
  }

  TitsReport operator()(const DOrth& d) {
    RootSystem sys(Family::D, d.k);
    if (!is_spin_character(sys)) return trivial_report();
    auto ecc = even_clifford_class(d.form);
    if (ecc.center == EvenCenter::QplusQ) return q_central(ecc.q_class);
    return over_center(*ecc.center_field, ecc.q_class);
  }

  TitsReport operator()(const DQuat& d) {
    RootSystem sys(Family::D, d.k);
    std::vector<long long> e1(sys.rank(), 0);
    e1[0] = 1;
    if (c.trivial()) return trivial_report();
    if (c == center_character(sys, e1)) return q_central(d.D);

    bool inf_ramified = d.D.at(Place::infinite()) == kHalf;
    Rational disc = d.reduced_norm_B;
    if (d.k % 2 == 1) disc = -disc;
    Int s = squarefree_part(disc).first;

    if (d.k % 2 == 1) {
      if (!d.c0_class)
        throw MissingInvariantError(
            "tits_class_Q: spin character of su_k(B; D, tau_r) with k odd "
            "requires the supplied even Clifford class c0_class");
      if (s == 1) return q_central(*d.c0_class);
      return over_center(QuadExt(s), *d.c0_class);
    }

    // k even: the spin classes are not computed from the descriptor
    TitsReport t;
    if (s == 1) {
      if (inf_ramified) {
        t.q_trivial = false;
        t.r_algebra = RealAlg::H;
        t.division_after_real = true;  // quaternion class ramified at infinity
      }
      return t;
    }
    t.center = QuadExt(s);
    if (s < 0) {
      t.r_algebra = RealAlg::C;
    } else {
      t.division_after_real = false;  // real center
      if (inf_ramified) t.r_algebra = RealAlg::H;
    }
    return t;
  }

  TitsReport operator()(const E6Inner& e) {
    if (c.trivial()) return trivial_report();
    bool strongly =
        e.index == E6Index::E6_28_2 || e.index == E6Index::E6_0_6;
    TitsReport t;
    t.q_trivial = strongly;
    if (strongly) t.q_class = BrauerClass();
    t.r_algebra = RealAlg::R;  // every inner real form of E6 is strongly inner
    t.division_after_real = strongly;
    return t;
  }

  TitsReport operator()(const E6Outer& e) {
    if (c.trivial()) return trivial_report();
    TitsReport t;
    t.center = e.L;
    t.q_trivial = e.splits_over_L;
    if (e.splits_over_L) t.q_class = BrauerClass();
    t.r_algebra = e.L.imaginary() ? RealAlg::C : RealAlg::R;
    t.division_after_real = e.L.imaginary() && e.splits_over_L;
    return t;
  }

  TitsReport operator()(const E7& e) {
    if (c.trivial()) return trivial_report();
    TitsReport t;
    switch (e.index_Q) {
      case E7Index::E7_28_3:
      case E7Index::E7_0_7:
        t.q_trivial = true;
        t.q_class = BrauerClass();
        break;
      case E7Index::E7_31_2:
      case E7Index::E7_9_4:
      case E7Index::E7_133_0:
        t.q_trivial = false;
        break;
      default:
        break;  // triviality not determined by the index label
    }
    switch (e.index_R) {
      case E7Index::E7_133_0:
      case E7Index::E7_31_2:
      case E7Index::E7_9_4:
        t.r_algebra = RealAlg::H;
        break;
      case E7Index::E7_0_7:
        t.r_algebra = RealAlg::R;
        break;
      default:
        break;  // not a real Tits index
    }
    if (t.r_algebra == RealAlg::H) {
      // exponent-2 center: the Q-class is Q or quaternion, and tensoring
      // with R gives the real Tits algebra H, a division algebra
      t.division_after_real = true;
    } else if (t.q_trivial.has_value()) {
      t.division_after_real =
          *t.q_trivial ? true
                       : (t.r_algebra == RealAlg::R ? std::optional<bool>(false)
                                                    : std::nullopt);
    }
    return t;
  }

  TitsReport operator()(const ResScalars&) {
    throw std::domain_error(
        "tits_class_Q: ResScalars descriptors are handled by "
        "decide_res_scalars, not per-character Tits data");
  }

  TitsReport operator()(const DirectSum&) {
    throw std::domain_error("tits_class_Q: not defined for direct sums");
  }
};

}  // namespace

std::string real_alg_name(RealAlg a) {
  switch (a) {
    case RealAlg::R: return "R";
    case RealAlg::C: return "C";
    case RealAlg::H: return "H";
  }
  throw std::logic_error("bad RealAlg");
}

const BrauerClass& TitsReport::local_class() const {
  if (!q_class)
    throw UnsupportedQueryError(
        "local invariants are not available for this Tits algebra (opaque "
        "marker)");
  return *q_class;
}

TitsReport tits_class_Q(const LieDescriptor& desc, const CenterCharacter& c) {
  expect_group(desc, c);
  return std::visit(TitsVisitor{desc, c}, desc.node());
}

RealAlg tits_class_R(const LieDescriptor& desc, const CenterCharacter& c) {
  auto t = tits_class_Q(desc, c);
  if (!t.r_algebra)
    throw UnsupportedQueryError(
        "the real Tits algebra is not determined by the descriptor");
  return *t.r_algebra;
}

bool remains_division_over_R(const std::optional<QuadExt>& center,
                             const BrauerClass& q_class) {
  if (!center) {
    if (q_class.trivial()) return true;
    return q_class.at(Place::infinite()) == kHalf && brauer_index(q_class) == 2;
  }
  if (!center->imaginary()) return false;
  if (!q_class.two_torsion()) return false;
  return restricts_trivially(q_class, *center);
}

namespace {

std::string signature_label(const DiagonalForm& f) {
  int p = 0, q = 0;
  for (const auto& a : f.entries()) (a > 0 ? p : q)++;
  return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

struct RealFormVisitor {
  std::string operator()(const SplitSimple& s) {
    int n = s.sys.rank();
    switch (s.sys.family()) {
      case Family::A: return "sl(" + std::to_string(n + 1) + ",R)";
      case Family::B:
        return "so(" + std::to_string(n + 1) + "," + std::to_string(n) + ")";
      case Family::C: return "sp(" + std::to_string(2 * n) + ",R)";
      case Family::D:
        return "so(" + std::to_string(n) + "," + std::to_string(n) + ")";
      case Family::E: return "e" + std::to_string(n) + "(split)";
      case Family::F: return "f4(split)";
      case Family::G: return "g2(split)";
    }
    throw std::logic_error("bad family");
  }

  std::string operator()(const AInner& a) {
    int dn = a.d * a.n;
    if (a.cls.at(Place::infinite()) == kHalf) {
      if (dn == 2) return "su(2)";
      return "sl(" + std::to_string(dn / 2) + ",H)";
    }
    return "sl(" + std::to_string(dn) + ",R)";
  }

  std::string operator()(const AOuter& a) {
    if (!a.L.imaginary() || a.dD != 1 || !a.diag)
      throw UnsupportedQueryError(
          "real_form_of: outer type A needs an imaginary field, dD = 1, and "
          "diagonal Hermitian data");
    int p = 0, q = 0;
    for (const auto& e : *a.diag) (e > 0 ? p : q)++;
    return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }

  std::string operator()(const BOdd& b) { return signature_label(b.form); }

  std::string operator()(const CSplit& s) {
    return "sp(" + std::to_string(2 * s.n) + ",R)";
  }

  std::string operator()(const CQuat&) {
    return unsupported("quaternionic type C carries no Hermitian signature");
  }

  std::string operator()(const DOrth& d) { return signature_label(d.form); }

  std::string operator()(const DQuat& d) {
    if (d.D.at(Place::infinite()) == kHalf)
      return "so*(" + std::to_string(2 * d.k) + ")";
    return unsupported("quaternionic type D with D split at infinity");
  }

  std::string operator()(const E6Inner&) { return unsupported("type E6"); }
  std::string operator()(const E6Outer&) { return unsupported("type E6"); }
  std::string operator()(const E7& e) { return e7_label(e.index_R); }
  std::string operator()(const Exceptional&) {
    return unsupported("exceptional types carry no real-form parameters");
  }
  std::string operator()(const ResScalars&) {
    return unsupported("restriction of scalars");
  }

  std::string operator()(const DirectSum& s) {
    std::vector<std::string> parts;
    for (const auto& f : s.factors) parts.push_back(real_form_of(f));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "+";
      out += parts[i];
    }
    return out;
  }

  [[noreturn]] static std::string unsupported(const std::string& why) {
    throw UnsupportedQueryError("real_form_of: " + why);
  }
};

}  // namespace

std::string real_form_of(const LieDescriptor& desc) {
  return std::visit(RealFormVisitor{}, desc.node());
}

}  // namespace runiv
