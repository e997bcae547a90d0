#pragma once
// Elements of the group algebra of G(m,1,n) with coefficients in either the
// cyclotomic field (CycloScalar) or its field of rational functions (RatFun).
// Terms are kept in the deterministic (images, colors) order and zero
// coefficients are pruned eagerly, so representations are canonical up to
// scalar-level value equality.

#include <map>
#include <sstream>
#include <string>

#include "wreath/cyclo.hpp"
#include "wreath/errors.hpp"
#include "wreath/group.hpp"
#include "wreath/ratfun.hpp"

namespace wreath {

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<CycloScalar> {
  static CycloScalar one(unsigned m) { return CycloScalar::one(m); }
  static CycloScalar from_rational(unsigned m, const Rational& q) {
    return CycloScalar::from_rational(m, q);
  }
  static CycloScalar from_cyclo(const CycloScalar& c) { return c; }
  static CycloScalar reciprocal(const CycloScalar& c) { return c.inverse(); }
};

template <>
struct scalar_traits<RatFun> {
  static RatFun one(unsigned m) { return RatFun::one(m); }
  static RatFun from_rational(unsigned m, const Rational& q) {
    return RatFun::from_rational(m, q);
  }
  static RatFun from_cyclo(const CycloScalar& c) { return RatFun::from_scalar(c); }
  static RatFun reciprocal(const RatFun& f) { return f.reciprocal(); }
};

template <typename S>
class AlgebraElement {
 public:
  explicit AlgebraElement(GroupContext ctx) : ctx_(ctx) {}

  static AlgebraElement zero(const GroupContext& ctx) { return AlgebraElement(ctx); }

  static AlgebraElement one(const GroupContext& ctx) {
    return from_group(ctx, ColoredPermutation::identity(ctx));
  }

  static AlgebraElement from_group(const GroupContext& ctx, const ColoredPermutation& g) {
    return term(ctx, g, scalar_traits<S>::one(ctx.m));
  }

  static AlgebraElement term(const GroupContext& ctx, const ColoredPermutation& g, const S& c) {
    AlgebraElement e(ctx);
    e.add_term(g, c);
    return e;
  }

  const GroupContext& ctx() const { return ctx_; }
  const std::map<ColoredPermutation, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const S* coeff(const ColoredPermutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const ColoredPermutation& g, const S& c) {
    if (!(g.ctx() == ctx_)) throw ContextMismatch("term from a different group");
    if (c.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement scaled(const S& c) const {
    AlgebraElement out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [g, a] : terms_) out.add_term(g, a * c);
    return out;
  }

  AlgebraElement scaled(const Rational& q) const {
    return scaled(scalar_traits<S>::from_rational(ctx_.m, q));
  }

  AlgebraElement operator-() const { return scaled(Rational(-1)); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("cannot add elements of different algebras");
    AlgebraElement out = a;
    for (const auto& [g, c] : b.terms_) out.add_term(g, c);
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return a + (-b);
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.ctx_ == b.ctx_))
      throw ContextMismatch("cannot multiply elements of different algebras");
    AlgebraElement out(a.ctx_);
    for (const auto& [g, ca] : a.terms_)
      for (const auto& [h, cb] : b.terms_) out.add_term(multiply(g, h), ca * cb);
    return out;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.ctx_ == b.ctx_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }

  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")" << g.to_string();
      first = false;
    }
    return os.str();
  }

 private:
  GroupContext ctx_;
  std::map<ColoredPermutation, S> terms_;
};

using CycloElement = AlgebraElement<CycloScalar>;
using RatFunElement = AlgebraElement<RatFun>;

template <typename S>
AlgebraElement<S> operator*(const S& c, const AlgebraElement<S>& e) {
  return e.scaled(c);
}

// ---------- generators ----------

template <typename S>
AlgebraElement<S> elem_s(const GroupContext& ctx, unsigned i) {
  return AlgebraElement<S>::from_group(ctx, ColoredPermutation::generator_s(ctx, i));
}

template <typename S>
AlgebraElement<S> elem_t(const GroupContext& ctx) {
  return AlgebraElement<S>::from_group(ctx, ColoredPermutation::generator_t(ctx));
}

// ---------- Jucys-Murphy elements ----------

template <typename S>
AlgebraElement<S> jm_j(const GroupContext& ctx, unsigned i) {
  return AlgebraElement<S>::from_group(ctx, jm_word(ctx, i));
}

// jt_1 = 0 and jt_{i+1} = s_i jt_i s_i + (1/m) sum_{k=0}^{m-1} j_i^k s_i j_i^{m-k}.
template <typename S>
AlgebraElement<S> jm_jtilde(const GroupContext& ctx, unsigned i) {
  if (i < 1 || i > ctx.n) throw IndexOutOfRange("Jucys-Murphy index out of range");
  AlgebraElement<S> jt = AlgebraElement<S>::zero(ctx);
  const S inv_m = scalar_traits<S>::from_rational(ctx.m, Rational(1, ctx.m));
  for (unsigned step = 1; step < i; ++step) {
    const ColoredPermutation s = ColoredPermutation::generator_s(ctx, step);
    AlgebraElement<S> next = AlgebraElement<S>::from_group(ctx, s) * jt *
                             AlgebraElement<S>::from_group(ctx, s);
    for (unsigned k = 0; k < ctx.m; ++k) {
      ColoredPermutation w =
          multiply(multiply(jm_word_power(ctx, step, k), s), jm_word_power(ctx, step, ctx.m - k));
      next.add_term(w, inv_m);
    }
    jt = std::move(next);
  }
  return jt;
}

// ---------- Baxterized generators and root projectors ----------

// bs_i(p, p', a, a') = s_i + delta_{p,p'} / (a - a'): the spectral-parameter
// dressing of s_i.  delta is decided by exact scalar equality.
template <typename S>
AlgebraElement<S> baxterized_s(const GroupContext& ctx, unsigned i, const CycloScalar& p,
                               const CycloScalar& p2, const S& a, const S& a2) {
  AlgebraElement<S> e = elem_s<S>(ctx, i);
  if (p == p2) {
    S diff = a - a2;
    if (diff.is_zero())
      throw SingularSpectralParameters("coinciding spectral parameters with equal roots");
    e.add_term(ColoredPermutation::identity(ctx), scalar_traits<S>::reciprocal(diff));
  }
  return e;
}

// bj_i(p) = (1/m) sum_{k=0}^{m-1} p^{m-k} j_i^k: projects onto the p-eigenspace
// of j_i whenever p is an m-th root of unity.
template <typename S>
AlgebraElement<S> bj(const GroupContext& ctx, unsigned i, const CycloScalar& p) {
  if (p.modulus() != ctx.m) throw MixedModulus("projector root lives in the wrong field");
  if (!(p.pow(ctx.m) == CycloScalar::one(ctx.m)))
    throw Error("projector parameter is not an m-th root of unity");
  AlgebraElement<S> e(ctx);
  const CycloScalar inv_m = CycloScalar::from_rational(ctx.m, Rational(1, ctx.m));
  for (unsigned k = 0; k < ctx.m; ++k)
    e.add_term(jm_word_power(ctx, i, k),
               scalar_traits<S>::from_cyclo(p.pow(static_cast<long>(ctx.m - k)) * inv_m));
  return e;
}

template <typename S>
AlgebraElement<S> t_of(const GroupContext& ctx, const CycloScalar& p) {
  return bj<S>(ctx, 1, p);
}

// ---------- scalar-domain bridges ----------

inline RatFunElement to_ratfun(const CycloElement& x) {
  RatFunElement out(x.ctx());
  for (const auto& [g, c] : x.terms()) out.add_term(g, RatFun::from_scalar(c));
  return out;
}

// Coefficient-wise cancel_and_substitute; coefficients that collapse to zero
// drop out of the support.
inline RatFunElement substitute_scalars(const RatFunElement& x, VarId v,
                                        const CycloScalar& value) {
  RatFunElement out(x.ctx());
  for (const auto& [g, c] : x.terms()) out.add_term(g, c.cancel_and_substitute(v, value));
  return out;
}

// Requires every coefficient to be variable-free.
inline CycloElement to_constants(const RatFunElement& x) {
  CycloElement out(x.ctx());
  for (const auto& [g, c] : x.terms()) out.add_term(g, c.evaluate_constant());
  return out;
}

// View an element of a smaller algebra inside a wider one (added strands act
// as colorless fixed points).
template <typename S>
AlgebraElement<S> embed(const AlgebraElement<S>& x, const GroupContext& bigger) {
  AlgebraElement<S> out(bigger);
  for (const auto& [g, c] : x.terms()) out.add_term(g.padded(bigger), c);
  return out;
}

}  // namespace wreath
