#include "wreath/tableaux.hpp"

#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

MultiPartition::MultiPartition(unsigned m) : comps_(m) {
  if (m == 0) throw IndexOutOfRange("multipartition needs at least one component");
}

MultiPartition::MultiPartition(std::vector<std::vector<unsigned>> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw IndexOutOfRange("multipartition needs at least one component");
  for (const auto& lam : comps_)
    for (std::size_t r = 0; r < lam.size(); ++r)
      if (lam[r] == 0 || (r > 0 && lam[r] > lam[r - 1]))
        throw Error("component rows must be positive and weakly decreasing");
}

const std::vector<unsigned>& MultiPartition::component(unsigned k) const {
  if (k < 1 || k > comps_.size()) throw IndexOutOfRange("component index out of range");
  return comps_[k - 1];
}

unsigned MultiPartition::total_size() const {
  unsigned total = 0;
  for (const auto& lam : comps_)
    for (unsigned row : lam) total += row;
  return total;
}

bool MultiPartition::contains(const MultiNode& node) const {
  if (node.component < 1 || node.component > comps_.size()) return false;
  const auto& lam = comps_[node.component - 1];
  return node.row >= 1 && node.row <= lam.size() && node.col >= 1 &&
         node.col <= lam[node.row - 1];
}

MultiPartition MultiPartition::with_added(const MultiNode& node) const {
  if (node.component < 1 || node.component > comps_.size())
    throw IndexOutOfRange("component index out of range");
  MultiPartition out = *this;
  auto& lam = out.comps_[node.component - 1];
  if (node.row == lam.size() + 1) {
    if (node.col != 1) throw NodeNotInShape("node is not addable");
    lam.push_back(1);
  } else if (node.row >= 1 && node.row <= lam.size() && node.col == lam[node.row - 1] + 1 &&
             (node.row == 1 || lam[node.row - 2] >= node.col)) {
    ++lam[node.row - 1];
  } else {
    throw NodeNotInShape("node is not addable");
  }
  return out;
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (k) os << ",";
    os << "[";
    for (std::size_t r = 0; r < comps_[k].size(); ++r) os << (r ? "," : "") << comps_[k][r];
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------- enumeration ----------

// Partitions of n with parts <= maxpart, largest first part first.
static void partitions_rec(unsigned n, unsigned maxpart, std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned first = std::min(n, maxpart); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

static std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

static void compositions_rec(unsigned n, unsigned slots, std::vector<unsigned>& cur,
                             std::vector<std::vector<unsigned>>& out) {
  if (slots == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned first = n + 1; first-- > 0;) {
    cur.push_back(first);
    compositions_rec(n - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<MultiPartition> enumerate_multipartitions(unsigned m, unsigned n) {
  if (m == 0) throw IndexOutOfRange("multipartition needs at least one component");
  std::vector<std::vector<unsigned>> comps;
  std::vector<unsigned> cur;
  compositions_rec(n, m, cur, comps);
  std::vector<MultiPartition> out;
  for (const auto& comp : comps) {
    // cartesian product of per-component partition lists, leftmost slowest
    std::vector<std::vector<std::vector<unsigned>>> choices;
    for (unsigned k = 0; k < m; ++k) choices.push_back(partitions_of(comp[k]));
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<std::vector<unsigned>> shape(m);
      for (unsigned k = 0; k < m; ++k) shape[k] = choices[k][idx[k]];
      out.emplace_back(std::move(shape));
      unsigned k = m;
      while (k > 0 && idx[k - 1] + 1 == choices[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
      ++idx[k - 1];
    }
  }
  return out;
}

std::vector<MultiNode> addable_nodes(const MultiPartition& shape) {
  std::vector<MultiNode> out;
  for (unsigned k = 1; k <= shape.component_count(); ++k) {
    const auto& lam = shape.component(k);
    for (unsigned r = 1; r <= lam.size() + 1; ++r) {
      unsigned col = (r <= lam.size() ? lam[r - 1] : 0) + 1;
      if (r == 1 || lam[r - 2] >= col) out.push_back({k, r, col});
    }
  }
  return out;
}

std::vector<MultiNode> removable_nodes(const MultiPartition& shape) {
  std::vector<MultiNode> out;
  for (unsigned k = 1; k <= shape.component_count(); ++k) {
    const auto& lam = shape.component(k);
    for (unsigned r = 1; r <= lam.size(); ++r)
      if (r == lam.size() || lam[r] < lam[r - 1]) out.push_back({k, r, lam[r - 1]});
  }
  return out;
}

unsigned hook_length(const MultiPartition& shape, const MultiNode& node) {
  if (!shape.contains(node)) throw NodeNotInShape("hook length of a node outside the shape");
  const auto& lam = shape.component(node.component);
  unsigned arm = lam[node.row - 1] - node.col;
  unsigned leg = 0;
  for (std::size_t r = node.row; r < lam.size(); ++r)
    if (lam[r] >= node.col) ++leg;
  return arm + leg + 1;
}

Rational f_constant(const MultiPartition& shape) {
  Rational f(1);
  for (unsigned k = 1; k <= shape.component_count(); ++k) {
    const auto& lam = shape.component(k);
    for (unsigned r = 1; r <= lam.size(); ++r)
      for (unsigned c = 1; c <= lam[r - 1]; ++c)
        f /= Rational(hook_length(shape, {k, r, c}));
  }
  return f;
}

// ---------- standard multitableaux ----------

StandardMultiTableau::StandardMultiTableau(unsigned m, std::vector<MultiNode> entries)
    : m_(m), entries_(std::move(entries)), shape_(m) {
  if (m == 0) throw IndexOutOfRange("tableau needs at least one component");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].component < 1 || entries_[i].component > m_)
      throw InvalidTableau("entry component out of range");
    try {
      shape_ = shape_.with_added(entries_[i]);
    } catch (const NodeNotInShape&) {
      std::ostringstream os;
      os << "entry " << (i + 1) << " does not extend the previous shape";
      throw InvalidTableau(os.str());
    }
  }
}

MultiPartition StandardMultiTableau::prefix_shape(unsigned k) const {
  if (k > size()) throw IndexOutOfRange("prefix length out of range");
  MultiPartition shape(m_);
  for (unsigned i = 0; i < k; ++i) shape = shape.with_added(entries_[i]);
  return shape;
}

StandardMultiTableau StandardMultiTableau::prefix(unsigned k) const {
  if (k > size()) throw IndexOutOfRange("prefix length out of range");
  return StandardMultiTableau(m_, std::vector<MultiNode>(entries_.begin(), entries_.begin() + k));
}

StandardMultiTableau StandardMultiTableau::extended(const MultiNode& node) const {
  std::vector<MultiNode> entries = entries_;
  entries.push_back(node);
  return StandardMultiTableau(m_, std::move(entries));
}

std::vector<int> StandardMultiTableau::contents() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const MultiNode& node : entries_) out.push_back(node.content());
  return out;
}

std::vector<CycloScalar> StandardMultiTableau::positions() const {
  std::vector<CycloScalar> out;
  out.reserve(entries_.size());
  for (const MultiNode& node : entries_) out.push_back(CycloScalar::xi(m_, node.component));
  return out;
}

std::string StandardMultiTableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << "(" << entries_[i].component << "," << entries_[i].row << "," << entries_[i].col << ")";
  }
  os << "]";
  return os.str();
}

static void tableaux_rec(unsigned m, const MultiPartition& target, const MultiPartition& cur,
                         std::vector<MultiNode>& entries,
                         std::vector<StandardMultiTableau>& out) {
  if (entries.size() == static_cast<std::size_t>(target.total_size())) {
    out.emplace_back(m, entries);
    return;
  }
  for (const MultiNode& node : addable_nodes(cur)) {
    if (!target.contains(node)) continue;
    entries.push_back(node);
    tableaux_rec(m, target, cur.with_added(node), entries, out);
    entries.pop_back();
  }
}

std::vector<StandardMultiTableau> enumerate_standard_tableaux(unsigned m,
                                                              const MultiPartition& shape) {
  if (shape.component_count() != m) throw ContextMismatch("shape has the wrong component count");
  std::vector<StandardMultiTableau> out;
  std::vector<MultiNode> entries;
  tableaux_rec(m, shape, MultiPartition(m), entries, out);
  return out;
}

unsigned standard_tableau_count(unsigned m, const MultiPartition& shape) {
  return static_cast<unsigned>(enumerate_standard_tableaux(m, shape).size());
}

RatFun f_ratio(const StandardMultiTableau& tab, unsigned k, VarId u) {
  if (k < 1 || k > tab.size()) throw IndexOutOfRange("prefix length out of range");
  const unsigned m = tab.modulus();
  const std::vector<MultiNode>& entries = tab.entries();
  const int ck = entries[k - 1].content();
  MultiPoly uvar = MultiPoly::variable(m, u);
  MultiPoly num = uvar - MultiPoly::from_rational(m, Rational(ck));
  MultiPoly den = uvar;
  const MultiPoly one = MultiPoly::from_rational(m, Rational(1));
  for (unsigned i = 0; i + 1 < k; ++i) {
    if (entries[i].component != entries[k - 1].component) continue;  // delta = 0
    MultiPoly lin = uvar - MultiPoly::from_rational(m, Rational(entries[i].content()));
    MultiPoly sq = lin * lin;
    num = num * sq;
    den = den * (sq - one);
  }
  return RatFun(std::move(num), std::move(den));
}

}  // namespace wreath
