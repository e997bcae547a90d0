#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath/algebra.hpp"
#include "wreath/errors.hpp"

using namespace wreath;

TEST_CASE("element container semantics") {
  const GroupContext ctx{2, 2};
  const CycloElement one = CycloElement::one(ctx);
  const CycloElement s = elem_s<CycloScalar>(ctx, 1);
  CHECK(one * one == one);
  CHECK(s * s == one);
  CHECK((s + one) - (s + one) == CycloElement::zero(ctx));
  CHECK((s - s).is_zero());  // zero coefficients are pruned away
  CHECK((s + s) == s.scaled(Rational(2)));
  CHECK(-(-s) == s);
  CHECK(s.scaled(Rational(0)).is_zero());
  CHECK(s.size() == 1);
  CHECK((s + one).size() == 2);
  CHECK(s.coeff(ColoredPermutation::generator_s(ctx, 1)) != nullptr);
  CHECK(s.coeff(ColoredPermutation::identity(ctx)) == nullptr);

  const GroupContext other{2, 3};
  CHECK_THROWS_AS(void(one + CycloElement::one(other)), ContextMismatch);
  CHECK_THROWS_AS(void(one * CycloElement::one(other)), ContextMismatch);
  CHECK(one != CycloElement::one(other));
}

TEST_CASE("multiplication distributes and respects the group") {
  const GroupContext ctx{3, 3};
  const CycloElement a = elem_s<CycloScalar>(ctx, 1) + elem_t<CycloScalar>(ctx).scaled(Rational(2));
  const CycloElement b = elem_s<CycloScalar>(ctx, 2) - CycloElement::one(ctx);
  const CycloElement c = jm_j<CycloScalar>(ctx, 2);
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a + b) * c == a * c + b * c);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("content elements in closed form") {
  // One strand contributes nothing.
  CHECK(jm_jtilde<CycloScalar>(GroupContext{3, 2}, 1).is_zero());

  // Plain symmetric group: the classical sums of transpositions.
  {
    const GroupContext ctx{1, 3};
    CHECK(jm_jtilde<CycloScalar>(ctx, 2) == elem_s<CycloScalar>(ctx, 1));
    const CycloElement t13 =
        CycloElement::from_group(ctx, ColoredPermutation(ctx, {3, 2, 1}, {0, 0, 0}));
    const CycloElement t23 =
        CycloElement::from_group(ctx, ColoredPermutation(ctx, {1, 3, 2}, {0, 0, 0}));
    CHECK(jm_jtilde<CycloScalar>(ctx, 3) == t13 + t23);
  }

  // Two colors: the transposition is averaged with its color twist.
  {
    const GroupContext ctx{2, 2};
    const CycloElement s = elem_s<CycloScalar>(ctx, 1);
    const CycloElement t = elem_t<CycloScalar>(ctx);
    CHECK(jm_jtilde<CycloScalar>(ctx, 2) == (s + t * s * t).scaled(Rational(1) / 2));
  }
}

TEST_CASE("position and content elements all commute") {
  const GroupContext ctx{2, 3};
  std::vector<CycloElement> family;
  for (unsigned i = 1; i <= 3; ++i) {
    family.push_back(jm_j<CycloScalar>(ctx, i));
    family.push_back(jm_jtilde<CycloScalar>(ctx, i));
  }
  for (const CycloElement& a : family)
    for (const CycloElement& b : family) CHECK(a * b == b * a);
}

TEST_CASE("dressed transposition with numeric parameters") {
  const GroupContext ctx{2, 2};
  const CycloScalar p = CycloScalar::xi(2, 1);
  const CycloScalar q = CycloScalar::xi(2, 2);
  auto num = [&](int k) { return CycloScalar::from_rational(2, Rational(k)); };

  // Equal roots: (s + 1/(a-a'))(s + 1/(a'-a)) = (1 - 1/(a-a')^2) * 1.
  const CycloElement lhs =
      baxterized_s(ctx, 1, p, p, num(3), num(1)) * baxterized_s(ctx, 1, p, p, num(1), num(3));
  CHECK(lhs == CycloElement::one(ctx).scaled(Rational(3) / 4));

  // Distinct roots: no dressing at all.
  CHECK(baxterized_s(ctx, 1, p, q, num(3), num(1)) == elem_s<CycloScalar>(ctx, 1));
  CHECK_THROWS_AS(baxterized_s(ctx, 1, p, p, num(3), num(3)), SingularSpectralParameters);
}

TEST_CASE("dressed transposition with symbolic parameters") {
  const GroupContext ctx{2, 2};
  const RatFun u = RatFun::variable(2, 0);
  const RatFun v = RatFun::variable(2, 1);
  const RatFun one = RatFun::one(2);
  for (unsigned a = 1; a <= 2; ++a)
    for (unsigned b = 1; b <= 2; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const CycloScalar p = CycloScalar::xi(2, a), q = CycloScalar::xi(2, b);
      const RatFunElement prod =
          baxterized_s(ctx, 1, p, q, u, v) * baxterized_s(ctx, 1, q, p, v, u);
      const RatFun delta = (a == b) ? one : RatFun::zero(2);
      const RatFun d2 = (u - v) * (u - v);
      CHECK(prod == RatFunElement::one(ctx).scaled((d2 - delta) / d2));
    }
}

TEST_CASE("color projectors resolve the identity") {
  const GroupContext ctx{3, 2};
  for (unsigned i = 1; i <= 2; ++i) {
    CAPTURE(i);
    CycloElement sum = CycloElement::zero(ctx);
    for (unsigned a = 1; a <= 3; ++a) {
      const CycloScalar p = CycloScalar::xi(3, a);
      const CycloElement pr = bj<CycloScalar>(ctx, i, p);
      CHECK(pr * pr == pr);
      CHECK(jm_j<CycloScalar>(ctx, i) * pr == pr.scaled(p));
      for (unsigned b = 1; b <= 3; ++b)
        if (b != a) CHECK((pr * bj<CycloScalar>(ctx, i, CycloScalar::xi(3, b))).is_zero());
      sum = sum + pr;
    }
    CHECK(sum == CycloElement::one(ctx));
  }
  CHECK(t_of<CycloScalar>(ctx, CycloScalar::xi(3, 2)) ==
        bj<CycloScalar>(ctx, 1, CycloScalar::xi(3, 2)));
}

TEST_CASE("two-color projectors in closed form") {
  const GroupContext ctx{2, 2};
  const CycloElement one = CycloElement::one(ctx);
  for (unsigned i = 1; i <= 2; ++i) {
    const CycloElement j = jm_j<CycloScalar>(ctx, i);
    CHECK(bj<CycloScalar>(ctx, i, CycloScalar::xi(2, 1)) == (one + j).scaled(Rational(1) / 2));
    CHECK(bj<CycloScalar>(ctx, i, CycloScalar::xi(2, 2)) == (one - j).scaled(Rational(1) / 2));
  }
}

TEST_CASE("projector parameter validation") {
  const GroupContext ctx{3, 2};
  CHECK_THROWS_AS(bj<CycloScalar>(ctx, 1, CycloScalar::from_rational(3, Rational(2))), Error);
  CHECK_THROWS_AS(bj<CycloScalar>(ctx, 1, CycloScalar::one(2)), MixedModulus);
  CHECK_THROWS_AS(bj<CycloScalar>(ctx, 3, CycloScalar::one(3)), IndexOutOfRange);
}

TEST_CASE("scalar domain bridges") {
  const GroupContext ctx{2, 2};
  const CycloElement x =
      elem_s<CycloScalar>(ctx, 1).scaled(Rational(3) / 7) + jm_j<CycloScalar>(ctx, 2);
  CHECK(to_constants(to_ratfun(x)) == x);

  // An element whose coefficient vanishes at u = 1 loses that term.
  const RatFun u = RatFun::variable(2, 0);
  RatFunElement y = to_ratfun(x).scaled(u - RatFun::one(2));
  y.add_term(ColoredPermutation::identity(ctx), u);
  const RatFunElement at1 = substitute_scalars(y, 0, CycloScalar::one(2));
  CHECK(at1 == RatFunElement::one(ctx));
  CHECK_THROWS_AS(to_constants(y), Error);
}

TEST_CASE("embedding into more strands") {
  const GroupContext small{2, 2}, big{2, 3};
  const CycloElement x = elem_s<CycloScalar>(small, 1) + jm_j<CycloScalar>(small, 2);
  const CycloElement y = jm_jtilde<CycloScalar>(small, 2);
  CHECK(embed(x * y, big) == embed(x, big) * embed(y, big));
  CHECK(embed(CycloElement::one(small), big) == CycloElement::one(big));
  // The embedded content element agrees with the one built natively.
  CHECK(embed(y, big) == jm_jtilde<CycloScalar>(big, 2));
}
