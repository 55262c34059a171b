#include "runiv/descriptor.hpp"

#include <stdexcept>

namespace runiv {

namespace {

Rational det_of(const DiagonalForm& f) {
  Rational d = 1;
  for (const auto& a : f.entries()) d *= a;
  return d;
}

void check(bool ok, const char* rule) {
  if (!ok) throw std::domain_error(std::string("descriptor invariant: ") + rule);
}

struct Validator {
  void operator()(const SplitSimple&) {}

  void operator()(const AInner& a) {
    check(a.n >= 1, "AInner: n >= 1");
    check(a.d >= 1, "AInner: d >= 1");
    check(a.d * a.n >= 2, "AInner: d*n >= 2 (sl_1(Q) is not simple)");
    check(brauer_index(a.cls) == a.d,
          "AInner: class index must equal the degree d of the division algebra");
  }

  void operator()(const AOuter& a) {
    check(a.n >= 2, "AOuter: n >= 2");
    check(a.dD >= 1, "AOuter: dD >= 1");
    check(a.dD * a.n >= 3, "AOuter: dD*n >= 3 (type A_1 admits no outer form)");
    check(a.detB != 0, "AOuter: detB != 0");
    if (a.diag) {
      check(static_cast<int>(a.diag->size()) == a.n, "AOuter: diag size = n");
      Rational prod = 1;
      for (const auto& e : *a.diag) {
        check(e != 0, "AOuter: diag entries nonzero");
        prod *= e;
      }
      check(prod == a.detB, "AOuter: product of diag = detB");
    }
  }

  void operator()(const BOdd& b) {
    check(b.form.dim() >= 3, "BOdd: dimension >= 3");
    check(b.form.dim() % 2 == 1, "BOdd: dimension odd");
  }

  void operator()(const CSplit& c) { check(c.n >= 1, "CSplit: n >= 1"); }

  void operator()(const CQuat& c) {
    check(c.n >= 1, "CQuat: n >= 1");
    check(!c.D.trivial() && c.D.two_torsion(),
          "CQuat: D must be a nontrivial 2-torsion (quaternion) class");
  }

  void operator()(const DOrth& d) {
    check(d.k >= 3, "DOrth: k >= 3");
    check(d.form.dim() == 2 * d.k, "DOrth: form dimension = 2k");
  }

  void operator()(const DQuat& d) {
    check(d.k >= 3, "DQuat: k >= 3");
    check(!d.D.trivial() && d.D.two_torsion(),
          "DQuat: D must be a nontrivial 2-torsion (quaternion) class");
    check(d.reduced_norm_B != 0, "DQuat: reduced norm of B != 0");
    if (d.c0_class)
      check(d.c0_class->two_torsion(), "DQuat: c0_class must be 2-torsion");
  }

  void operator()(const E6Inner&) {}
  void operator()(const E6Outer&) {}
  void operator()(const E7&) {}

  void operator()(const Exceptional& e) {
    check(e.sys.family() == Family::F || e.sys.family() == Family::G ||
              (e.sys.family() == Family::E && e.sys.rank() == 8),
          "Exceptional: type must be E8, F4 or G2");
  }

  void operator()(const ResScalars&) {}

  void operator()(const DirectSum& s) {
    check(!s.factors.empty(), "DirectSum: at least one factor");
    for (const auto& f : s.factors)
      check(!f.is_sum(), "DirectSum: factors may not be sums");
  }
};

}  // namespace

LieDescriptor::LieDescriptor(Node node) : node_(std::move(node)) {
  std::visit(Validator{}, node_);
}

std::string LieDescriptor::kind() const {
  struct K {
    std::string operator()(const SplitSimple&) { return "SplitSimple"; }
    std::string operator()(const AInner&) { return "AInner"; }
    std::string operator()(const AOuter&) { return "AOuter"; }
    std::string operator()(const BOdd&) { return "BOdd"; }
    std::string operator()(const CSplit&) { return "CSplit"; }
    std::string operator()(const CQuat&) { return "CQuat"; }
    std::string operator()(const DOrth&) { return "DOrth"; }
    std::string operator()(const DQuat&) { return "DQuat"; }
    std::string operator()(const E6Inner&) { return "E6Inner"; }
    std::string operator()(const E6Outer&) { return "E6Outer"; }
    std::string operator()(const E7&) { return "E7"; }
    std::string operator()(const Exceptional&) { return "Exceptional"; }
    std::string operator()(const ResScalars&) { return "ResScalars"; }
    std::string operator()(const DirectSum&) { return "DirectSum"; }
  };
  return std::visit(K{}, node_);
}

std::string e6_label(E6Index i) {
  switch (i) {
    case E6Index::E6_28_2: return "E6_28_2";
    case E6Index::E6_0_6: return "E6_0_6";
    case E6Index::E6_16_2: return "E6_16_2";
    case E6Index::E6_78_0: return "E6_78_0";
  }
  throw std::logic_error("bad E6Index");
}

std::string e7_label(E7Index i) {
  switch (i) {
    case E7Index::E7_28_3: return "E7_28_3";
    case E7Index::E7_0_7: return "E7_0_7";
    case E7Index::E7_31_2: return "E7_31_2";
    case E7Index::E7_9_4: return "E7_9_4";
    case E7Index::E7_133_0: return "E7_133_0";
    case E7Index::E7_48_1: return "E7_48_1";
    case E7Index::E7_78_1: return "E7_78_1";
  }
  throw std::logic_error("bad E7Index");
}

std::optional<E6Index> e6_from_label(const std::string& s) {
  for (E6Index i : {E6Index::E6_28_2, E6Index::E6_0_6, E6Index::E6_16_2,
                    E6Index::E6_78_0})
    if (e6_label(i) == s) return i;
  return std::nullopt;
}

std::optional<E7Index> e7_from_label(const std::string& s) {
  for (E7Index i : {E7Index::E7_28_3, E7Index::E7_0_7, E7Index::E7_31_2,
                    E7Index::E7_9_4, E7Index::E7_133_0, E7Index::E7_48_1,
                    E7Index::E7_78_1})
    if (e7_label(i) == s) return i;
  return std::nullopt;
}

RootSystem root_system(const LieDescriptor& desc) {
  struct R {
    RootSystem operator()(const SplitSimple& x) { return x.sys; }
    RootSystem operator()(const AInner& x) {
      return RootSystem(Family::A, x.d * x.n - 1);
    }
    RootSystem operator()(const AOuter& x) {
      return RootSystem(Family::A, x.dD * x.n - 1);
    }
    RootSystem operator()(const BOdd& x) {
      return RootSystem(Family::B, (x.form.dim() - 1) / 2);
    }
    RootSystem operator()(const CSplit& x) { return RootSystem(Family::C, x.n); }
    RootSystem operator()(const CQuat& x) { return RootSystem(Family::C, x.n); }
    RootSystem operator()(const DOrth& x) { return RootSystem(Family::D, x.k); }
    RootSystem operator()(const DQuat& x) { return RootSystem(Family::D, x.k); }
    RootSystem operator()(const E6Inner&) { return RootSystem(Family::E, 6); }
    RootSystem operator()(const E6Outer&) { return RootSystem(Family::E, 6); }
    RootSystem operator()(const E7&) { return RootSystem(Family::E, 7); }
    RootSystem operator()(const Exceptional& x) { return x.sys; }
    RootSystem operator()(const ResScalars& x) { return x.family_rank; }
    RootSystem operator()(const DirectSum&) {
      throw std::domain_error("root_system: direct sums have no single system");
    }
  };
  return std::visit(R{}, desc.node());
}

GaloisProfile galois_profile(const LieDescriptor& desc) {
  GaloisProfile p;
  if (const auto* a = desc.get<AOuter>()) {
    p.outer_Q = true;
    p.L = a->L;
    p.outer_R = a->L.imaginary();
  } else if (const auto* e = desc.get<E6Outer>()) {
    p.outer_Q = true;
    p.L = e->L;
    p.outer_R = e->L.imaginary();
  } else if (const auto* r = desc.get<ResScalars>()) {
    p.outer_Q = true;
    p.L = r->L;
    p.outer_R = r->L.imaginary();
  } else if (const auto* d = desc.get<DOrth>()) {
    Rational disc = det_of(d->form);
    if (d->k % 2 == 1) disc = -disc;
    Int s = squarefree_part(disc).first;
    if (s != 1) {
      p.outer_Q = true;
      p.L = QuadExt(s);
      p.outer_R = s < 0;
    }
  } else if (const auto* d = desc.get<DQuat>()) {
    Rational disc = d->reduced_norm_B;
    if (d->k % 2 == 1) disc = -disc;
    Int s = squarefree_part(disc).first;
    if (s != 1) {
      p.outer_Q = true;
      p.L = QuadExt(s);
      p.outer_R = s < 0;
    }
  } else if (desc.is_sum()) {
    throw std::domain_error("galois_profile: not defined for direct sums");
  }
  return p;
}

}  // namespace runiv
