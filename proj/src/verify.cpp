#include "wreath/verify.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "wreath/errors.hpp"
#include "wreath/fusion.hpp"
#include "wreath/oracle.hpp"

namespace wreath {

// Index-based parallel loop with deterministic result slots.  The first
// exception wins and is rethrown on the caller thread.
static void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

static std::string context_name(const GroupContext& ctx) {
  std::ostringstream os;
  os << "m=" << ctx.m << " n=" << ctx.n;
  return os.str();
}

static void check_group_relations(const GroupContext& ctx, std::vector<CheckResult>& out) {
  const std::string subject = context_name(ctx);
  bool pass = true;
  std::string detail = "defining relations hold";
  const ColoredPermutation id = ColoredPermutation::identity(ctx);
  auto s = [&](unsigned i) { return ColoredPermutation::generator_s(ctx, i); };
  auto fail = [&](const std::string& what) {
    pass = false;
    detail = what;
  };
  for (unsigned i = 1; pass && i + 1 <= ctx.n; ++i)
    if (!(multiply(s(i), s(i)) == id)) fail("s_i^2 != 1");
  for (unsigned i = 1; pass && i + 2 <= ctx.n; ++i) {
    auto lhs = multiply(multiply(s(i), s(i + 1)), s(i));
    auto rhs = multiply(multiply(s(i + 1), s(i)), s(i + 1));
    if (!(lhs == rhs)) fail("braid relation fails");
  }
  for (unsigned i = 1; pass && i + 1 <= ctx.n; ++i)
    for (unsigned j = i + 2; pass && j + 1 <= ctx.n; ++j)
      if (!(multiply(s(i), s(j)) == multiply(s(j), s(i)))) fail("far commutation fails");
  if (ctx.n >= 1) {
    const ColoredPermutation t = ColoredPermutation::generator_t(ctx);
    ColoredPermutation tm = id;
    for (unsigned k = 0; k < ctx.m; ++k) tm = multiply(tm, t);
    if (pass && !(tm == id)) fail("t^m != 1");
    if (ctx.n >= 2) {
      auto lhs = multiply(multiply(multiply(t, s(1)), t), s(1));
      auto rhs = multiply(multiply(multiply(s(1), t), s(1)), t);
      if (pass && !(lhs == rhs)) fail("t s_1 t s_1 != s_1 t s_1 t");
    }
    for (unsigned i = 2; pass && i + 1 <= ctx.n; ++i)
      if (!(multiply(s(i), t) == multiply(t, s(i)))) fail("t does not commute with s_i, i >= 2");
  }
  out.push_back({"group_relations", subject, pass, detail});
}

static void check_jm_commutation(const GroupContext& ctx, std::vector<CheckResult>& out) {
  bool pass = true;
  std::string detail = "Jucys-Murphy family is commutative and centralizes the right generators";
  std::vector<CycloElement> j, jt;
  for (unsigned i = 1; i <= ctx.n; ++i) {
    j.push_back(jm_j<CycloScalar>(ctx, i));
    jt.push_back(jm_jtilde<CycloScalar>(ctx, i));
  }
  auto fail = [&](const std::string& what) {
    pass = false;
    detail = what;
  };
  for (unsigned a = 0; pass && a < ctx.n; ++a)
    for (unsigned b = a + 1; pass && b < ctx.n; ++b) {
      if (!(j[a] * j[b] == j[b] * j[a])) fail("j_i do not commute");
      if (!(jt[a] * jt[b] == jt[b] * jt[a])) fail("jt_i do not commute");
      if (!(j[a] * jt[b] == jt[b] * j[a]) || !(jt[a] * j[b] == j[b] * jt[a]))
        fail("j_i and jt_k do not commute");
    }
  for (unsigned i = 1; pass && i <= ctx.n; ++i)
    for (unsigned k = 1; pass && k + 1 <= ctx.n; ++k) {
      if (k == i - 1 || k == i) continue;
      const CycloElement sk = elem_s<CycloScalar>(ctx, k);
      if (!(j[i - 1] * sk == sk * j[i - 1]) || !(jt[i - 1] * sk == sk * jt[i - 1]))
        fail("JM element fails to commute with distant s_k");
    }
  out.push_back({"jm_commutation", context_name(ctx), pass, detail});
}

// bs_i(p,p',u,v) bs_i(p',p,v,u) = ((u-v)^2 - delta) / (u-v)^2, symbolically.
static void check_baxterized_inverse(const GroupContext& ctx, std::vector<CheckResult>& out) {
  if (ctx.n < 2) return;
  const unsigned m = ctx.m;
  const RatFun u = RatFun::variable(m, 1), v = RatFun::variable(m, 2);
  bool pass = true;
  std::string detail = "two-sided Baxterized inversion identity";
  for (unsigned ka = 1; ka <= m && pass; ++ka)
    for (unsigned kb = 1; kb <= m && pass; ++kb) {
      const CycloScalar p = CycloScalar::xi(m, ka), q = CycloScalar::xi(m, kb);
      RatFunElement prod = baxterized_s<RatFun>(ctx, 1, p, q, u, v) *
                           baxterized_s<RatFun>(ctx, 1, q, p, v, u);
      RatFun diff2 = (u - v) * (u - v);
      RatFun expected = (p == q) ? (diff2 - RatFun::one(m)) / diff2 : RatFun::one(m);
      if (!(prod == RatFunElement::one(ctx).scaled(expected))) {
        pass = false;
        detail = "inversion identity fails";
      }
    }
  out.push_back({"baxterized_inverse", context_name(ctx), pass, detail});
}

// Two telescoped expansions of jt_n in terms of jt_l and color averages.
static void check_jm_expansion(const GroupContext& ctx, std::vector<CheckResult>& out) {
  const unsigned n = ctx.n;
  if (n < 2) return;
  const Rational inv_m(1, ctx.m);
  auto word = [&](unsigned from, unsigned to) {  // s_from s_{from+1} .. s_to, ascending
    CycloElement e = CycloElement::one(ctx);
    for (unsigned i = from; i <= to; ++i) e = e * elem_s<CycloScalar>(ctx, i);
    return e;
  };
  auto word_desc = [&](unsigned from, unsigned to) {  // s_from s_{from-1} .. s_to
    CycloElement e = CycloElement::one(ctx);
    for (unsigned i = from + 1; i-- > to;) e = e * elem_s<CycloScalar>(ctx, i);
    return e;
  };
  auto color_average = [&](unsigned i) {  // sum_k j_n^k j_i^{m-k}, scaled by 1/m
    CycloElement e = CycloElement::zero(ctx);
    for (unsigned k = 0; k < ctx.m; ++k)
      e.add_term(multiply(jm_word_power(ctx, n, k), jm_word_power(ctx, i, ctx.m - k)),
                 CycloScalar::one(ctx.m));
    return e.scaled(inv_m);
  };
  const CycloElement jtn = jm_jtilde<CycloScalar>(ctx, n);
  for (unsigned l = 1; l + 1 <= n; ++l) {
    {
      CycloElement rhs =
          word_desc(n - 1, l) * jm_jtilde<CycloScalar>(ctx, l) * word(l, n - 1);
      for (unsigned i = l; i + 1 <= n; ++i)
        rhs = rhs + word_desc(n - 1, i + 1) * elem_s<CycloScalar>(ctx, i) * word(i + 1, n - 1) *
                        color_average(i);
      std::ostringstream os;
      os << "conjugated form at l=" << l;
      out.push_back({"jm_expansion_conjugated", context_name(ctx), jtn == rhs, os.str()});
    }
    for (unsigned root = 1; root <= ctx.m; ++root) {
      const CycloScalar p = CycloScalar::xi(ctx.m, root);
      const CycloElement bjl = bj<CycloScalar>(ctx, l, p);
      CycloElement lhs = bjl * word(l, n - 1) * jtn;
      CycloElement rhs = bjl * jm_jtilde<CycloScalar>(ctx, l) * word(l, n - 1);
      for (unsigned i = l; i + 1 <= n; ++i) {
        CycloElement term = (i == l) ? CycloElement::one(ctx) : word(l, i - 1);
        term = term * word(i + 1, n - 1) * bj<CycloScalar>(ctx, i, p) * color_average(i);
        rhs = rhs + term;
      }
      std::ostringstream os;
      os << "projected form at l=" << l << " root " << root;
      out.push_back({"jm_expansion_projected", context_name(ctx), lhs == rhs, os.str()});
    }
  }
}

std::vector<CheckResult> run_verification(const GroupContext& ctx, const VerifyOptions& options) {
  ctx.check_order_limit(options.limit);
  std::vector<CheckResult> results;

  check_group_relations(ctx, results);
  check_jm_commutation(ctx, results);
  check_baxterized_inverse(ctx, results);
  check_jm_expansion(ctx, results);

  // Collect every standard multitableau of size n.
  std::vector<StandardMultiTableau> tableaux;
  std::vector<unsigned> dims;  // standard tableau count per tableau's shape
  for (const MultiPartition& shape : enumerate_multipartitions(ctx.m, ctx.n)) {
    auto tabs = enumerate_standard_tableaux(ctx.m, shape);
    for (const auto& tab : tabs) {
      tableaux.push_back(tab);
      dims.push_back(static_cast<unsigned>(tabs.size()));
    }
  }

  struct PerTableau {
    CycloElement consecutive, inductive, oracle;
    std::size_t rank = 0;
    PerTableau(const GroupContext& c)
        : consecutive(c), inductive(c), oracle(c) {}
  };
  std::vector<PerTableau> per(tableaux.size(), PerTableau(ctx));
  parallel_for(tableaux.size(), options.jobs, [&](std::size_t i) {
    per[i].consecutive = consecutive_evaluation(tableaux[i], options.limit);
    per[i].inductive = inductive_evaluation(tableaux[i], options.limit);
    per[i].oracle = jm_idempotent(tableaux[i], options.limit);
    if (options.corrupt && i == 0)
      per[i].inductive = per[i].inductive + CycloElement::one(ctx);
    per[i].rank = regular_rank(per[i].inductive, options.limit);
  });

  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    const std::string subject = tableaux[i].to_string();
    const CycloElement& e = per[i].inductive;
    results.push_back({"method_agreement", subject,
                       per[i].consecutive == e && per[i].oracle == e,
                       "consecutive, inductive and spectral routes agree"});
    results.push_back({"idempotency", subject, e * e == e, "E*E == E"});
    for (CheckResult& r : check_eigenvalues(e, tableaux[i])) results.push_back(std::move(r));
    results.push_back({"rank", subject, per[i].rank == dims[i],
                       "regular rank equals the standard tableau count of the shape"});
  }

  // Hook-ratio values of the prefix weights.
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    bool pass = true;
    for (unsigned k = 1; k <= ctx.n && pass; ++k) {
      const Rational expected = f_constant(tableaux[i].prefix_shape(k)) /
                                f_constant(tableaux[i].prefix_shape(k - 1));
      const CycloScalar got =
          f_ratio(tableaux[i], k, 0)
              .cancel_and_substitute(
                  0, CycloScalar::from_rational(ctx.m, Rational(tableaux[i].entries()[k - 1].content())))
              .evaluate_constant();
      pass = got == CycloScalar::from_rational(ctx.m, expected);
    }
    results.push_back({"f_hook_ratio", tableaux[i].to_string(), pass,
                       "prefix weight at its own content equals the hook-product ratio"});
  }

  // Pairwise orthogonality.
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < tableaux.size(); ++a)
      for (std::size_t b = a + 1; b < tableaux.size(); ++b) pairs.emplace_back(a, b);
    std::vector<std::uint8_t> ok(pairs.size(), 0);
    parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
      const auto& [a, b] = pairs[i];
      ok[i] = (per[a].inductive * per[b].inductive).is_zero() &&
              (per[b].inductive * per[a].inductive).is_zero();
    });
    bool pass = true;
    std::string detail = "all products vanish";
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!ok[i]) {
        pass = false;
        detail = tableaux[pairs[i].first].to_string() + " * " +
                 tableaux[pairs[i].second].to_string() + " != 0";
        break;
      }
    results.push_back({"orthogonality", context_name(ctx), pass, detail});
  }

  // Resolution of identity and branching.
  {
    CycloElement total = CycloElement::zero(ctx);
    for (const PerTableau& p : per) total = total + p.inductive;
    std::ostringstream os;
    os << "sum of " << per.size() << " idempotents equals 1";
    results.push_back(
        {"completeness", context_name(ctx), total == CycloElement::one(ctx), os.str()});
  }
  if (ctx.n >= 1) {
    std::map<std::string, std::size_t> by_subject;
    for (std::size_t i = 0; i < tableaux.size(); ++i) by_subject[tableaux[i].to_string()] = i;
    for (const MultiPartition& shape : enumerate_multipartitions(ctx.m, ctx.n - 1)) {
      for (const StandardMultiTableau& tab : enumerate_standard_tableaux(ctx.m, shape)) {
        CycloElement lhs = embed(inductive_evaluation(tab, options.limit), ctx);
        CycloElement rhs = CycloElement::zero(ctx);
        for (const MultiNode& node : addable_nodes(shape))
          rhs = rhs + per[by_subject.at(tab.extended(node).to_string())].inductive;
        results.push_back({"branching", tab.to_string(), lhs == rhs,
                           "parent idempotent equals the sum of its extensions"});
      }
    }
  }

  // Ranks must tile the whole group algebra.
  {
    std::size_t total = 0;
    for (const PerTableau& p : per) total += p.rank;
    const bool pass = Int(total) == ctx.order();
    std::ostringstream os;
    os << "ranks sum to " << total << ", group order " << ctx.order();
    results.push_back({"rank_sum", context_name(ctx), pass, os.str()});
  }

  return results;
}

}  // namespace wreath
