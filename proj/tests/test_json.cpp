#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath/errors.hpp"
#include "wreath/json_io.hpp"

using namespace wreath;

TEST_CASE("rationals travel as strings") {
  CHECK(encode_rational(Rational(3) / 4) == json("3/4"));
  CHECK(encode_rational(Rational(5)) == json("5/1"));
  CHECK(encode_rational(Rational(-7) / 2) == json("-7/2"));
  CHECK(decode_rational(json("3/4")) == Rational(3) / 4);
  CHECK(decode_rational(json("-6/4")) == Rational(-3) / 2);
  CHECK(decode_rational(json("5")) == Rational(5));
  CHECK(decode_rational(json(5)) == Rational(5));
  CHECK(decode_rational(encode_rational(Rational(1) / 3)) == Rational(1) / 3);
  CHECK_THROWS_AS(decode_rational(json("1/0")), DivisionByZero);
  CHECK_THROWS_AS(decode_rational(json("a/b")), Error);
  CHECK_THROWS_AS(decode_rational(json(1.5)), Error);
}

TEST_CASE("scalar round trip and pinned layout") {
  const CycloScalar c = CycloScalar::from_coeffs(4, {Rational(1) / 2, Rational(-3)});
  CHECK(decode_cyclo(encode_cyclo(c)) == c);
  CHECK(encode_cyclo(c).dump() == R"({"coeffs":["1/2","-3/1"],"m":4})");
  CHECK_THROWS_AS(decode_cyclo(json{{"m", 4}}), Error);                       // missing coeffs
  CHECK_THROWS_AS(decode_cyclo(json{{"m", 4}, {"coeffs", {"1/2"}}}), Error);  // wrong length
}

TEST_CASE("context and group element round trip") {
  const GroupContext ctx{3, 3};
  CHECK(decode_context(encode_context(ctx)) == ctx);
  CHECK(encode_context(ctx).dump() == R"({"m":3,"n":3})");

  const ColoredPermutation g(ctx, {2, 3, 1}, {0, 1, 2});
  CHECK(decode_group_element(ctx, encode_group_element(g)) == g);
  CHECK(encode_group_element(g).dump() == R"({"colors":[0,1,2],"perm":[2,3,1]})");
  CHECK_THROWS_AS(decode_group_element(ctx, json{{"perm", {1, 2, 3}}}), Error);
  CHECK_THROWS_AS(decode_group_element(ctx, json{{"perm", {1, 1, 2}}, {"colors", {0, 0, 0}}}),
                  Error);
}

TEST_CASE("algebra element round trip") {
  const GroupContext ctx{2, 2};
  CycloElement e = elem_s<CycloScalar>(ctx, 1).scaled(Rational(-2) / 3);
  e.add_term(jm_word(ctx, 2), CycloScalar::one(2) + CycloScalar::one(2));
  CHECK(decode_element(encode_element(e)) == e);
  CHECK(decode_element(encode_element(CycloElement::zero(ctx))) == CycloElement::zero(ctx));

  // Terms are listed in the canonical group order, so dumps are reproducible.
  const json j = encode_element(e);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms").at(0).at("g") == json{{"perm", {1, 2}}, {"colors", {0, 1}}});
  CHECK(j.at("terms").at(1).at("g") == json{{"perm", {2, 1}}, {"colors", {0, 0}}});
}

TEST_CASE("pinned element schema") {
  const GroupContext ctx{2, 1};
  const CycloElement e = CycloElement::one(ctx).scaled(Rational(1) / 2);
  CHECK(encode_element(e).dump() ==
        R"({"ctx":{"m":2,"n":1},"terms":[{"coeff":{"coeffs":["1/2"],"m":2},"g":{"colors":[0],"perm":[1]}}]})");
}

TEST_CASE("shapes and tableaux") {
  const MultiPartition shape({{2, 1}, {}});
  CHECK(encode_shape(shape).dump() == R"([[2,1],[]])");
  CHECK(decode_shape(2, encode_shape(shape)) == shape);
  CHECK_THROWS_AS(decode_shape(3, encode_shape(shape)), Error);  // wrong component count
  CHECK_THROWS_AS(decode_shape(2, json::parse(R"([[1,2],[]])")), Error);  // not a partition

  const StandardMultiTableau tab(2, {{1, 1, 1}, {2, 1, 1}, {1, 1, 2}});
  CHECK(encode_tableau(tab).dump() ==
        R"([{"col":1,"pos":1,"row":1},{"col":1,"pos":2,"row":1},{"col":2,"pos":1,"row":1}])");
  CHECK(decode_tableau(2, encode_tableau(tab)) == tab);
  CHECK_THROWS_AS(decode_tableau(2, json::parse(R"([{"pos":1,"row":1,"col":2}])")),
                  InvalidTableau);
  CHECK_THROWS_AS(decode_tableau(2, json::parse(R"([{"pos":1,"row":1}])")), Error);
}

TEST_CASE("report encoding") {
  const std::vector<CheckResult> results = {
      {"idempotency", "some tableau", true, "E^2 = E"},
      {"rank", "some tableau", false, "expected 2, got 3"},
  };
  const json j = encode_report(results);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j.at(0) == json{{"check", "idempotency"},
                        {"subject", "some tableau"},
                        {"pass", true},
                        {"detail", "E^2 = E"}});
  CHECK(j.at(1).at("pass") == json(false));
}
