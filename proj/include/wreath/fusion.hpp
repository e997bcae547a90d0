#pragma once
// The fusion construction of primitive idempotents.  A standard multitableau
// T of size n determines spectral data (p_i, c_i); the product of Baxterized
// generators below, evaluated at that data in the prescribed order, yields
// the primitive idempotent E_T.

#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

// phi_k = bs_{k-1}(p_k, p_{k-1}, u, u_{k-1}) .. bs_1(p_k, p_1, u, u_1)
//         * t(p_k) * s_1 .. s_{k-1},
// with p listing at least k roots and u_values at least k-1 spectral
// parameters (variables or constants, passed as rational functions).
RatFunElement phi(const GroupContext& ctx, unsigned k, const std::vector<CycloScalar>& p,
                  const std::vector<RatFun>& u_values, const RatFun& u);

// Same product without the t(p_k) factor; phi_tilde_1 = 1.
RatFunElement phi_tilde(const GroupContext& ctx, unsigned k, const std::vector<CycloScalar>& p,
                        const std::vector<RatFun>& u_values, const RatFun& u);

// Phi(T) = phi_n .. phi_2 phi_1 with all spectral parameters symbolic;
// u_i is the polynomial variable with id i.
RatFunElement build_phi_product(const StandardMultiTableau& tab);

// E_T = f(shape) * Phi(T) evaluated at u_1 = c_1, then u_2 = c_2, .. in that
// order, each substitution applied coefficient-wise to the whole product.
CycloElement consecutive_evaluation(const StandardMultiTableau& tab,
                                    const Int& limit = Int(kDefaultSizeLimit));

// Same idempotent built one node at a time:
//   E_k = [ f_ratio(T, k) * phi_k(p_1..p_k, c_1..c_{k-1}, u) * E_{k-1} ] at u = c_k.
CycloElement inductive_evaluation(const StandardMultiTableau& tab,
                                  const Int& limit = Int(kDefaultSizeLimit));

}  // namespace wreath
