#include "wreath/oracle.hpp"

#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

CycloElement jm_idempotent(const StandardMultiTableau& tab, const Int& limit) {
  const GroupContext ctx{tab.modulus(), tab.size()};
  ctx.check_order_limit(limit);
  const std::vector<MultiNode>& entries = tab.entries();
  CycloElement e = CycloElement::one(ctx);
  for (unsigned k = 1; k <= ctx.n; ++k) {
    const MultiNode& node = entries[k - 1];
    e = e * bj<CycloScalar>(ctx, k, CycloScalar::xi(ctx.m, node.component));
    // Interpolate away the other jt_k eigenvalues available at this step.
    const CycloElement jt = jm_jtilde<CycloScalar>(ctx, k);
    for (const MultiNode& beta : addable_nodes(tab.prefix_shape(k - 1))) {
      if (beta.component != node.component || beta.content() == node.content()) continue;
      CycloElement factor =
          jt - CycloElement::one(ctx).scaled(Rational(beta.content()));
      e = e * factor.scaled(make_fraction(1, node.content() - beta.content()));
    }
  }
  return e;
}

std::vector<CheckResult> check_eigenvalues(const CycloElement& e,
                                           const StandardMultiTableau& tab) {
  const GroupContext& ctx = e.ctx();
  if (ctx.m != tab.modulus() || ctx.n != tab.size())
    throw ContextMismatch("element and tableau live in different contexts");
  std::vector<CheckResult> results;
  const std::vector<CycloScalar> p = tab.positions();
  const std::vector<int> c = tab.contents();
  for (unsigned i = 1; i <= ctx.n; ++i) {
    const CycloElement ji = jm_j<CycloScalar>(ctx, i);
    const CycloElement jti = jm_jtilde<CycloScalar>(ctx, i);
    const CycloElement pe = e.scaled(p[i - 1]);
    const CycloElement ce = e.scaled(Rational(c[i - 1]));
    const std::string subject = tab.to_string();
    auto add = [&](const char* which, bool pass) {
      std::ostringstream os;
      os << which << " at i=" << i;
      results.push_back({"spectral", subject, pass, os.str()});
    };
    add("j left", ji * e == pe);
    add("j right", e * ji == pe);
    add("jtilde left", jti * e == ce);
    add("jtilde right", e * jti == ce);
  }
  return results;
}

std::size_t regular_rank(const CycloElement& e, const Int& limit) {
  const GroupContext& ctx = e.ctx();
  const std::vector<ColoredPermutation> basis = enumerate_group(ctx, limit);
  std::map<ColoredPermutation, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t n = basis.size();
  std::vector<std::vector<CycloScalar>> mat(n,
                                            std::vector<CycloScalar>(n, CycloScalar::zero(ctx.m)));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [g, a] : e.terms())
      mat[index.at(multiply(g, basis[j]))][j] = a;
  // Exact Gaussian elimination, first non-zero pivot in each column.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(mat[rank], mat[pivot]);
    const CycloScalar inv = mat[rank][col].inverse();
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (mat[r][col].is_zero()) continue;
      const CycloScalar factor = mat[r][col] * inv;
      for (std::size_t cc = col; cc < n; ++cc)
        mat[r][cc] = mat[r][cc] - factor * mat[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<CheckResult> completeness_check(const GroupContext& ctx, const Int& limit) {
  ctx.check_order_limit(limit);
  std::vector<CheckResult> results;
  std::ostringstream ctxname;
  ctxname << "m=" << ctx.m << " n=" << ctx.n;

  CycloElement total = CycloElement::zero(ctx);
  unsigned count = 0;
  for (const MultiPartition& shape : enumerate_multipartitions(ctx.m, ctx.n)) {
    for (const StandardMultiTableau& tab : enumerate_standard_tableaux(ctx.m, shape)) {
      total = total + jm_idempotent(tab, limit);
      ++count;
    }
  }
  {
    std::ostringstream os;
    os << "sum of " << count << " idempotents equals 1";
    results.push_back({"completeness", ctxname.str(), total == CycloElement::one(ctx), os.str()});
  }

  if (ctx.n >= 1) {
    for (const MultiPartition& shape : enumerate_multipartitions(ctx.m, ctx.n - 1)) {
      for (const StandardMultiTableau& tab : enumerate_standard_tableaux(ctx.m, shape)) {
        CycloElement lhs = embed(jm_idempotent(tab, limit), ctx);
        CycloElement rhs = CycloElement::zero(ctx);
        unsigned extensions = 0;
        for (const MultiNode& node : addable_nodes(shape)) {
          rhs = rhs + jm_idempotent(tab.extended(node), limit);
          ++extensions;
        }
        std::ostringstream os;
        os << "equals sum of " << extensions << " one-node extensions";
        results.push_back({"branching", tab.to_string(), lhs == rhs, os.str()});
      }
    }
  }
  return results;
}

}  // namespace wreath
