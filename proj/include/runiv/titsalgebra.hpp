#pragma once

#include <optional>
#include <string>

#include "runiv/descriptor.hpp"
#include "runiv/errors.hpp"

namespace runiv {

enum class RealAlg { R, C, H };

std::string real_alg_name(RealAlg a);

/// Brauer data of the Tits algebra attached to one center character.
///
/// center: absent = Q; otherwise the quadratic field over which the
/// algebra is central. q_class, when present, is a class over Q; for a
/// quadratic center its restriction to that field is the Tits class.
/// q_trivial is triviality over the center; absent = not determined by the
/// available invariants (E7 label gaps). When q_class is absent but
/// q_trivial is known false, the report is an opaque nontriviality marker.
struct TitsReport {
  std::optional<QuadExt> center;
  std::optional<BrauerClass> q_class;
  std::optional<bool> q_trivial;
  std::optional<RealAlg> r_algebra;
  std::optional<bool> division_after_real;

  /// Local invariants; throws UnsupportedQueryError for opaque markers.
  const BrauerClass& local_class() const;
};

/// Q-side (and derived real-side) Tits algebra data for a non-sum,
/// non-ResScalars descriptor and a character of its fundamental group.
TitsReport tits_class_Q(const LieDescriptor& desc, const CenterCharacter& c);

/// Endomorphism algebra over R; throws UnsupportedQueryError when the real
/// behavior is not determined by the descriptor.
RealAlg tits_class_R(const LieDescriptor& desc, const CenterCharacter& c);

/// Does the Q-algebra stay a division algebra after extension to R?
/// center absent = Q: yes iff the class is trivial (R) or is an
/// infinite-ramified quaternion class (H). Quadratic center: yes iff the
/// field is imaginary and the restriction of q_class to it is trivial (C).
bool remains_division_over_R(const std::optional<QuadExt>& center,
                             const BrauerClass& q_class);

/// Deterministic real-form label ("so(3,0)", "sl(2,R)", "su(2)", ...);
/// throws UnsupportedQueryError when the descriptor lacks real data.
std::string real_form_of(const LieDescriptor& desc);

}  // namespace runiv
