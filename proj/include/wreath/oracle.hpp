#pragma once
// Independent routes to the primitive idempotents and their certificates:
// a spectral construction from Jucys-Murphy eigenvalue interpolation, the
// eigenvalue equations themselves, the rank of left multiplication, and
// resolution-of-identity checks.

#include "wreath/algebra.hpp"
#include "wreath/report.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

// E_T built by induction on the entries of T:
//   E_0 = 1,
//   E_k = E_{k-1} * bj_k(p_k) * prod (jt_k - c(beta)) / (c_k - c(beta))
// over addable nodes beta of the prefix shape with the same component as
// entry k and different content.
CycloElement jm_idempotent(const StandardMultiTableau& tab,
                           const Int& limit = Int(kDefaultSizeLimit));

// The 4n eigenvalue identities j_i E = E j_i = p_i E and
// jt_i E = E jt_i = c_i E.
std::vector<CheckResult> check_eigenvalues(const CycloElement& e,
                                           const StandardMultiTableau& tab);

// Rank of x -> e * x on the group algebra, by exact Gaussian elimination
// over the cyclotomic field.  For a primitive idempotent this equals the
// number of standard multitableaux of its shape.
std::size_t regular_rank(const CycloElement& e, const Int& limit = Int(kDefaultSizeLimit));

// Sum of all idempotents of size n is 1, and each size-(n-1) idempotent is
// the sum of its one-node extensions.
std::vector<CheckResult> completeness_check(const GroupContext& ctx,
                                            const Int& limit = Int(kDefaultSizeLimit));

}  // namespace wreath
