#include "wreath/json_io.hpp"

#include "wreath/errors.hpp"

namespace wreath {

static const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing JSON key '") + key + "'");
  return j.at(key);
}

static unsigned expect_unsigned(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw Error(std::string("expected unsigned number for ") + what);
  return j.get<unsigned>();
}

json encode_rational(const Rational& q) { return fraction_string(q); }

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw Error("expected rational as \"p/q\" string");
  return parse_fraction(j.get<std::string>());
}

json encode_cyclo(const CycloScalar& c) {
  json coeffs = json::array();
  for (const Rational& q : c.coeffs()) coeffs.push_back(encode_rational(q));
  return json{{"m", c.modulus()}, {"coeffs", coeffs}};
}

CycloScalar decode_cyclo(const json& j) {
  unsigned m = expect_unsigned(expect(j, "m"), "modulus");
  const json& coeffs = expect(j, "coeffs");
  if (!coeffs.is_array()) throw Error("expected coefficient array");
  std::vector<Rational> c;
  for (const json& q : coeffs) c.push_back(decode_rational(q));
  return CycloScalar::from_coeffs(m, std::move(c));
}

json encode_context(const GroupContext& ctx) { return json{{"m", ctx.m}, {"n", ctx.n}}; }

GroupContext decode_context(const json& j) {
  return GroupContext{expect_unsigned(expect(j, "m"), "modulus"),
                      expect_unsigned(expect(j, "n"), "strand count")};
}

json encode_group_element(const ColoredPermutation& g) {
  return json{{"perm", g.images()}, {"colors", g.colors()}};
}

ColoredPermutation decode_group_element(const GroupContext& ctx, const json& j) {
  const json& perm = expect(j, "perm");
  const json& colors = expect(j, "colors");
  if (!perm.is_array() || !colors.is_array()) throw Error("expected perm/colors arrays");
  std::vector<std::uint32_t> images, cols;
  for (const json& v : perm) images.push_back(expect_unsigned(v, "permutation image"));
  for (const json& v : colors) cols.push_back(expect_unsigned(v, "color"));
  return ColoredPermutation(ctx, std::move(images), std::move(cols));
}

json encode_element(const CycloElement& e) {
  json terms = json::array();
  for (const auto& [g, c] : e.terms())
    terms.push_back(json{{"g", encode_group_element(g)}, {"coeff", encode_cyclo(c)}});
  return json{{"ctx", encode_context(e.ctx())}, {"terms", terms}};
}

CycloElement decode_element(const json& j) {
  GroupContext ctx = decode_context(expect(j, "ctx"));
  CycloElement e(ctx);
  const json& terms = expect(j, "terms");
  if (!terms.is_array()) throw Error("expected term array");
  for (const json& t : terms)
    e.add_term(decode_group_element(ctx, expect(t, "g")), decode_cyclo(expect(t, "coeff")));
  return e;
}

json encode_shape(const MultiPartition& shape) {
  json out = json::array();
  for (const auto& lam : shape.components()) out.push_back(lam);
  return out;
}

MultiPartition decode_shape(unsigned m, const json& j) {
  if (!j.is_array()) throw Error("expected shape as array of arrays");
  std::vector<std::vector<unsigned>> comps;
  for (const json& lam : j) {
    if (!lam.is_array()) throw Error("expected shape component array");
    std::vector<unsigned> rows;
    for (const json& r : lam) rows.push_back(expect_unsigned(r, "row length"));
    comps.push_back(std::move(rows));
  }
  if (comps.size() != m) throw Error("shape component count does not match m");
  return MultiPartition(std::move(comps));
}

json encode_tableau(const StandardMultiTableau& tab) {
  json out = json::array();
  for (const MultiNode& node : tab.entries())
    out.push_back(json{{"pos", node.component}, {"row", node.row}, {"col", node.col}});
  return out;
}

StandardMultiTableau decode_tableau(unsigned m, const json& j) {
  if (!j.is_array()) throw Error("expected tableau as array of nodes");
  std::vector<MultiNode> entries;
  for (const json& node : j)
    entries.push_back({expect_unsigned(expect(node, "pos"), "component"),
                       expect_unsigned(expect(node, "row"), "row"),
                       expect_unsigned(expect(node, "col"), "col")});
  return StandardMultiTableau(m, std::move(entries));
}

json encode_report(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const CheckResult& r : results)
    out.push_back(json{
        {"check", r.check}, {"subject", r.subject}, {"pass", r.pass}, {"detail", r.detail}});
  return out;
}

}  // namespace wreath
