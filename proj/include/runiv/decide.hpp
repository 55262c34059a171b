#pragma once

#include <string>
#include <vector>

#include "runiv/titsalgebra.hpp"

namespace runiv {

enum class Universal { Yes, No, Indeterminate };

std::string universal_name(Universal u);

struct TraceEntry {
  std::string criterion;  // which test fired
  std::string values;     // the invariants it looked at, rendered exactly
  std::string citation;   // the mathematical statement backing the step
};

struct Verdict {
  Universal universal;
  std::vector<TraceEntry> trace;  // nonempty
};

/// Closed-form criteria of the classification, one per descriptor type.
/// DirectSum and ResScalars delegate to their dedicated operations.
Verdict decide(const LieDescriptor& desc);

/// Independent cross-check: enumerate the fundamental-group characters and
/// require the Tits algebra at each to stay a division algebra over R.
/// Defined for non-sum absolutely simple descriptors.
Verdict generic_engine(const LieDescriptor& desc);

/// Does the R-irreducible representation with highest weight lambda admit a
/// Q-form under this descriptor?
bool decide_weight(const LieDescriptor& desc, const Weight& lambda);

/// Dimension of the Q-irreducible with highest weight lambda:
/// |*-orbit| x Schur index x Weyl dimension. Classical descriptors only.
Int q_irreducible_dimension(const LieDescriptor& desc, const Weight& lambda);

/// The four direct-sum conditions.
Verdict decide_direct_sum(const std::vector<LieDescriptor>& factors);

/// Restriction of scalars: Yes iff L is imaginary and the algebra over L is
/// strongly inner.
Verdict decide_res_scalars(const QuadExt& L, bool strongly_inner);

/// Entry budget for the constructive search.
struct SearchBound {
  std::vector<long long> entries = {1, 2, 3, 5, 7};
};

/// Bounded constructive search: a descriptor with the requested real form
/// and a Yes verdict. Labels: "so(p,q)", "sl(n,R)", "sl(n,H)", "su(2)",
/// "su(p,q)", "sp(2n,R)", "so*(2k)". Throws UnsupportedQueryError for other
/// labels and NotFoundError when the budget is exhausted.
LieDescriptor find_runiversal_qform(const std::string& realform,
                                    const SearchBound& bound = {});

/// Real-form label equality modulo documented isomorphism aliases
/// (so(4,0) = su(2)+su(2), su(2) = sl(1,H)).
bool same_real_form(const std::string& a, const std::string& b);

}  // namespace runiv
