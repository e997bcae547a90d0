#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath/errors.hpp"
#include "wreath/group.hpp"
#include "wreath/tableaux.hpp"

using namespace wreath;

namespace {

using Comps = std::vector<std::vector<unsigned>>;

MultiPartition shape_of(Comps comps) { return MultiPartition(std::move(comps)); }

}  // namespace

TEST_CASE("nodes") {
  const MultiNode node{2, 3, 5};
  CHECK(node.content() == 2);
  CHECK(MultiNode{1, 4, 1}.content() == -3);
  CHECK(MultiNode{1, 1, 1} < MultiNode{1, 1, 2});
  CHECK(MultiNode{1, 2, 9} < MultiNode{2, 1, 1});
}

TEST_CASE("multipartition enumeration order") {
  const std::vector<MultiPartition> got = enumerate_multipartitions(2, 2);
  const std::vector<MultiPartition> want = {
      shape_of({{2}, {}}), shape_of({{1, 1}, {}}), shape_of({{1}, {1}}),
      shape_of({{}, {2}}), shape_of({{}, {1, 1}}),
  };
  CHECK(got == want);
  CHECK(enumerate_multipartitions(1, 4).size() == 5);
  CHECK(enumerate_multipartitions(2, 3).size() == 10);
  CHECK(enumerate_multipartitions(3, 2).size() == 9);
  CHECK(enumerate_multipartitions(2, 0) == std::vector<MultiPartition>{shape_of({{}, {}})});
}

TEST_CASE("shape accessors and growth") {
  const MultiPartition shape = shape_of({{2, 1}, {1}});
  CHECK(shape.component_count() == 2);
  CHECK(shape.total_size() == 4);
  CHECK(shape.contains(MultiNode{1, 2, 1}));
  CHECK_FALSE(shape.contains(MultiNode{1, 2, 2}));
  CHECK(shape.with_added(MultiNode{1, 2, 2}) == shape_of({{2, 2}, {1}}));
  CHECK(shape.with_added(MultiNode{2, 2, 1}) == shape_of({{2, 1}, {1, 1}}));
  CHECK_THROWS_AS(shape.with_added(MultiNode{1, 3, 2}), NodeNotInShape);
  CHECK_THROWS_AS(shape.with_added(MultiNode{1, 1, 1}), NodeNotInShape);
  CHECK_THROWS_AS(shape_of({{1, 2}}), Error);  // rows must decrease weakly
  CHECK_THROWS_AS(MultiPartition(0u), IndexOutOfRange);
}

TEST_CASE("addable and removable nodes") {
  const MultiPartition shape = shape_of({{2, 1}, {1}});
  CHECK(addable_nodes(shape) ==
        std::vector<MultiNode>{{1, 1, 3}, {1, 2, 2}, {1, 3, 1}, {2, 1, 2}, {2, 2, 1}});
  CHECK(removable_nodes(shape) == std::vector<MultiNode>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(addable_nodes(shape_of({{}, {}})) == std::vector<MultiNode>{{1, 1, 1}, {2, 1, 1}});
  CHECK(removable_nodes(shape_of({{}, {}})).empty());
}

TEST_CASE("hook lengths") {
  // Shape (3,2): hooks 4 3 1 / 2 1.
  const MultiPartition shape = shape_of({{3, 2}});
  CHECK(hook_length(shape, {1, 1, 1}) == 4);
  CHECK(hook_length(shape, {1, 1, 2}) == 3);
  CHECK(hook_length(shape, {1, 1, 3}) == 1);
  CHECK(hook_length(shape, {1, 2, 1}) == 2);
  CHECK(hook_length(shape, {1, 2, 2}) == 1);
  CHECK_THROWS_AS(hook_length(shape, {1, 3, 1}), NodeNotInShape);
  CHECK(f_constant(shape) == Rational(1) / 24);
  CHECK(standard_tableau_count(1, shape) == 5);  // hook length formula: 5!/24
}

TEST_CASE("hook constant counts standard fillings") {
  // f(shape) = (number of standard fillings) / n! across whole levels.
  for (auto [m, n] : {std::pair<unsigned, unsigned>{1, 5}, {2, 3}, {3, 2}}) {
    CAPTURE(m);
    CAPTURE(n);
    Int sum_squares = 0;
    for (const MultiPartition& shape : enumerate_multipartitions(m, n)) {
      const unsigned d = standard_tableau_count(m, shape);
      CHECK(f_constant(shape) == Rational(d) / factorial(n));
      CHECK(enumerate_standard_tableaux(m, shape).size() == d);
      sum_squares += Int(d) * d;
    }
    CHECK(sum_squares == GroupContext{m, n}.order());
  }
}

TEST_CASE("two-component example") {
  const MultiPartition shape = shape_of({{2}, {1}});
  CHECK(f_constant(shape) == Rational(1) / 2);
  CHECK(standard_tableau_count(2, shape) == 3);
  const std::vector<StandardMultiTableau> tabs = enumerate_standard_tableaux(2, shape);
  REQUIRE(tabs.size() == 3);
  CHECK(tabs[0].entries() == std::vector<MultiNode>{{1, 1, 1}, {1, 1, 2}, {2, 1, 1}});
  CHECK(tabs[1].entries() == std::vector<MultiNode>{{1, 1, 1}, {2, 1, 1}, {1, 1, 2}});
  CHECK(tabs[2].entries() == std::vector<MultiNode>{{2, 1, 1}, {1, 1, 1}, {1, 1, 2}});
}

TEST_CASE("standard tableau bookkeeping") {
  // Labels 1,3 along the first row of component one, label 2 in component two.
  const StandardMultiTableau tab(2, {{1, 1, 1}, {2, 1, 1}, {1, 1, 2}});
  CHECK(tab.size() == 3);
  CHECK(tab.shape() == shape_of({{2}, {1}}));
  CHECK(tab.contents() == std::vector<int>{0, 0, 1});
  const std::vector<CycloScalar> pos = tab.positions();
  REQUIRE(pos.size() == 3);
  CHECK(pos[0] == CycloScalar::one(2));
  CHECK(pos[1] == -CycloScalar::one(2));
  CHECK(pos[2] == CycloScalar::one(2));
  CHECK(tab.prefix_shape(0) == shape_of({{}, {}}));
  CHECK(tab.prefix_shape(2) == shape_of({{1}, {1}}));
  CHECK(tab.prefix(2).entries() == std::vector<MultiNode>{{1, 1, 1}, {2, 1, 1}});
  CHECK(tab.prefix(2).extended(MultiNode{1, 1, 2}) == tab);
  CHECK_THROWS_AS(tab.prefix(4), IndexOutOfRange);
  CHECK_THROWS_AS(tab.extended(MultiNode{1, 1, 2}), InvalidTableau);  // cell occupied
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(StandardMultiTableau(2, {{1, 1, 2}}), InvalidTableau);         // gap in a row
  CHECK_THROWS_AS(StandardMultiTableau(2, {{1, 2, 1}}), InvalidTableau);         // gap in a column
  CHECK_THROWS_AS(StandardMultiTableau(2, {{1, 1, 1}, {1, 1, 1}}), InvalidTableau);  // repeat
  CHECK_THROWS_AS(StandardMultiTableau(2, {{3, 1, 1}}), InvalidTableau);  // component out of range
  CHECK_NOTHROW(StandardMultiTableau(2, {}));
  CHECK(enumerate_standard_tableaux(2, shape_of({{}, {}})).size() == 1);
}

TEST_CASE("prefix weight function") {
  const StandardMultiTableau tab(2, {{1, 1, 1}, {2, 1, 1}, {1, 1, 2}});
  const VarId u_id = 0;
  const RatFun u = RatFun::variable(2, u_id);
  const RatFun one = RatFun::one(2);

  // Labels 1 and 2 head their components: weight (u - 0)/u = 1.
  CHECK(f_ratio(tab, 1, u_id) == one);
  CHECK(f_ratio(tab, 2, u_id) == one);
  // Label 3 sits next to label 1: (u-1)/u * u^2/(u^2-1) = u/(u+1).
  CHECK(f_ratio(tab, 3, u_id) == u / (u + one));

  // At u = c_k the weight equals the ratio of hook constants of the prefixes.
  for (unsigned k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const CycloScalar ck = CycloScalar::from_rational(2, Rational(tab.contents()[k - 1]));
    const Rational got =
        f_ratio(tab, k, u_id).cancel_and_substitute(u_id, ck).evaluate_constant().rational_value();
    CHECK(got == f_constant(tab.prefix_shape(k)) / f_constant(tab.prefix_shape(k - 1)));
  }
  CHECK_THROWS_AS(f_ratio(tab, 0, u_id), IndexOutOfRange);
  CHECK_THROWS_AS(f_ratio(tab, 4, u_id), IndexOutOfRange);
}
