#include "wreath/fusion.hpp"

#include "wreath/errors.hpp"

namespace wreath {

static void check_phi_args(const GroupContext& ctx, unsigned k,
                           const std::vector<CycloScalar>& p,
                           const std::vector<RatFun>& u_values) {
  if (k < 1 || k > ctx.n) throw IndexOutOfRange("fusion factor index out of range");
  if (p.size() < k) throw IndexOutOfRange("not enough root parameters");
  if (u_values.size() + 1 < k) throw IndexOutOfRange("not enough spectral parameters");
}

static RatFunElement phi_impl(const GroupContext& ctx, unsigned k,
                              const std::vector<CycloScalar>& p,
                              const std::vector<RatFun>& u_values, const RatFun& u,
                              bool with_t) {
  check_phi_args(ctx, k, p, u_values);
  RatFunElement e = with_t ? t_of<RatFun>(ctx, p[k - 1]) : RatFunElement::one(ctx);
  for (unsigned j = 1; j < k; ++j)
    e = baxterized_s<RatFun>(ctx, j, p[k - 1], p[j - 1], u, u_values[j - 1]) * e;
  for (unsigned j = 1; j < k; ++j) e = e * elem_s<RatFun>(ctx, j);
  return e;
}

RatFunElement phi(const GroupContext& ctx, unsigned k, const std::vector<CycloScalar>& p,
                  const std::vector<RatFun>& u_values, const RatFun& u) {
  return phi_impl(ctx, k, p, u_values, u, true);
}

RatFunElement phi_tilde(const GroupContext& ctx, unsigned k, const std::vector<CycloScalar>& p,
                        const std::vector<RatFun>& u_values, const RatFun& u) {
  return phi_impl(ctx, k, p, u_values, u, false);
}

RatFunElement build_phi_product(const StandardMultiTableau& tab) {
  const GroupContext ctx{tab.modulus(), tab.size()};
  const std::vector<CycloScalar> p = tab.positions();
  std::vector<RatFun> u_vars;
  u_vars.reserve(ctx.n);
  for (unsigned i = 1; i <= ctx.n; ++i)
    u_vars.push_back(RatFun::variable(ctx.m, static_cast<VarId>(i)));
  RatFunElement e = RatFunElement::one(ctx);
  for (unsigned k = ctx.n; k >= 1; --k) e = e * phi(ctx, k, p, u_vars, u_vars[k - 1]);
  return e;
}

CycloElement consecutive_evaluation(const StandardMultiTableau& tab, const Int& limit) {
  const GroupContext ctx{tab.modulus(), tab.size()};
  ctx.check_order_limit(limit);
  RatFunElement e = build_phi_product(tab);
  const std::vector<int> c = tab.contents();
  for (unsigned k = 1; k <= ctx.n; ++k)
    e = substitute_scalars(e, static_cast<VarId>(k),
                           CycloScalar::from_rational(ctx.m, Rational(c[k - 1])));
  return to_constants(e).scaled(f_constant(tab.shape()));
}

CycloElement inductive_evaluation(const StandardMultiTableau& tab, const Int& limit) {
  const GroupContext ctx{tab.modulus(), tab.size()};
  ctx.check_order_limit(limit);
  const VarId uvar = 0;
  const RatFun u = RatFun::variable(ctx.m, uvar);
  const std::vector<CycloScalar> p = tab.positions();
  const std::vector<int> c = tab.contents();
  CycloElement e = CycloElement::one(ctx);
  std::vector<RatFun> u_consts;  // c_1 .. c_{k-1} as constants
  for (unsigned k = 1; k <= ctx.n; ++k) {
    RatFunElement step = phi(ctx, k, p, u_consts, u) * to_ratfun(e);
    step = step.scaled(f_ratio(tab, k, uvar));
    const CycloScalar ck = CycloScalar::from_rational(ctx.m, Rational(c[k - 1]));
    e = to_constants(substitute_scalars(step, uvar, ck));
    u_consts.push_back(RatFun::from_scalar(ck));
  }
  return e;
}

}  // namespace wreath
