#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "runiv/quadform.hpp"
#include "runiv/rootdata.hpp"

namespace runiv {

class LieDescriptor;

// -- descriptor variants -----------------------------------------------------
// One struct per case of the classification; validation happens when a
// LieDescriptor is built from them.

/// Q-split simple Lie algebra of the given type.
struct SplitSimple {
  RootSystem sys;
};

/// sl_n(D) for a central division algebra D of degree d over Q, given by
/// its Brauer class. Type A_{dn-1}; n = 1 is allowed when d >= 2.
struct AInner {
  int n;
  int d;
  BrauerClass cls;
};

/// su_n(B; D, tau) for D central over the quadratic extension L with an
/// anti-involution nontrivial on L. dD is the degree of D over L (1 means
/// D = L). detB feeds the (-1)^{n/2} det B criterion; diag optionally
/// records a diagonal Hermitian matrix (rational entries) for real-form
/// identification. Type A_{dD*n-1}.
struct AOuter {
  int n;
  QuadExt L;
  int dD;
  Rational detB;
  std::optional<std::vector<Rational>> diag;
};

/// so_n(B; Q) for odd n >= 3; B in diagonal form.
struct BOdd {
  DiagonalForm form;
};

/// sp_2n(Q).
struct CSplit {
  int n;
};

/// su_n(B; D, tau_r) for a quaternion division algebra D over Q with the
/// reversion anti-involution. Type C_n.
struct CQuat {
  int n;
  BrauerClass D;
};

/// so_2k(B; Q), k >= 3; B in diagonal form of dimension 2k.
struct DOrth {
  int k;
  DiagonalForm form;
};

/// su_k(B; D, tau_r) for a quaternion division algebra D and a reversion
/// Hermitian B in GL_k(D), k >= 3. reduced_norm_B is Nrd(B) (consumed when
/// k is even); c0_class is the Brauer class of the even Clifford algebra
/// C0_D(B, tau_r) (consumed when k is odd; supplied, not computed).
struct DQuat {
  int k;
  BrauerClass D;
  Rational reduced_norm_B;
  std::optional<BrauerClass> c0_class;
};

enum class E6Index { E6_28_2, E6_0_6, E6_16_2, E6_78_0 };

/// Inner form of type E6, identified by its Tits index over Q.
struct E6Inner {
  E6Index index;
};

/// Outer form of type E6: inner over L; splits_over_L records whether the
/// algebra is split after extension to L.
struct E6Outer {
  QuadExt L;
  bool splits_over_L;
};

enum class E7Index { E7_28_3, E7_0_7, E7_31_2, E7_9_4, E7_133_0, E7_48_1, E7_78_1 };

/// Form of type E7, identified by Tits indices over Q and over R.
struct E7 {
  E7Index index_Q;
  E7Index index_R;
};

/// Absolutely simple of type E8, F4 or G2 (always R-universal).
struct Exceptional {
  RootSystem sys;
};

/// Res_{L/Q} of an absolutely simple algebra over the quadratic field L;
/// family_rank is the type of that algebra, strongly_inner the (trusted)
/// strong-innerness flag.
struct ResScalars {
  QuadExt L;
  RootSystem family_rank;
  bool strongly_inner;
};

/// Direct sum of simple factors; factors may not themselves be sums.
struct DirectSum {
  std::vector<LieDescriptor> factors;
};

/// Validated tagged union over the case analysis.
class LieDescriptor {
 public:
  using Node =
      std::variant<SplitSimple, AInner, AOuter, BOdd, CSplit, CQuat, DOrth,
                   DQuat, E6Inner, E6Outer, E7, Exceptional, ResScalars,
                   DirectSum>;

  /// Validates the structural invariants; throws std::domain_error naming
  /// the violated rule.
  LieDescriptor(Node node);  // NOLINT: implicit by design

  const Node& node() const { return node_; }
  template <class T>
  const T* get() const {
    return std::get_if<T>(&node_);
  }
  bool is_sum() const { return std::holds_alternative<DirectSum>(node_); }

  /// Variant tag name ("AInner", "DirectSum", ...).
  std::string kind() const;

 private:
  Node node_;
};

std::string e6_label(E6Index i);
std::string e7_label(E7Index i);
std::optional<E6Index> e6_from_label(const std::string& s);
std::optional<E7Index> e7_from_label(const std::string& s);

/// Root system of an absolutely simple (or ResScalars: the factor's)
/// descriptor; throws std::domain_error for DirectSum.
RootSystem root_system(const LieDescriptor& desc);

/// Inner/outer bookkeeping for a non-sum descriptor.
struct GaloisProfile {
  bool outer_Q = false;
  std::optional<QuadExt> L;  // field over which the form becomes inner
  bool outer_R = false;
};
GaloisProfile galois_profile(const LieDescriptor& desc);

}  // namespace runiv
