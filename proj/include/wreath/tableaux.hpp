#pragma once
// m-multipartitions, their nodes and standard multitableaux.  A node carries
// its component index (1-based), row and column; its content is col - row and
// its position value is the root of unity xi_component.

#include <string>
#include <vector>

#include "wreath/cyclo.hpp"
#include "wreath/ratfun.hpp"

namespace wreath {

struct MultiNode {
  unsigned component = 1;  // 1..m
  unsigned row = 1;        // 1-based
  unsigned col = 1;        // 1-based
  int content() const { return static_cast<int>(col) - static_cast<int>(row); }
  friend auto operator<=>(const MultiNode&, const MultiNode&) = default;
};

class MultiPartition {
 public:
  explicit MultiPartition(unsigned m);
  explicit MultiPartition(std::vector<std::vector<unsigned>> components);

  unsigned component_count() const { return static_cast<unsigned>(comps_.size()); }
  const std::vector<unsigned>& component(unsigned k) const;  // 1-based
  const std::vector<std::vector<unsigned>>& components() const { return comps_; }
  unsigned total_size() const;
  bool contains(const MultiNode& node) const;
  MultiPartition with_added(const MultiNode& node) const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

  std::string to_string() const;

 private:
  std::vector<std::vector<unsigned>> comps_;
};

// All m-multipartitions of n: compositions of n in lexicographically
// descending order, partitions of each part largest-first.
std::vector<MultiPartition> enumerate_multipartitions(unsigned m, unsigned n);

// Nodes that may be added / removed keeping each component a partition,
// ordered by (component, row).
std::vector<MultiNode> addable_nodes(const MultiPartition& shape);
std::vector<MultiNode> removable_nodes(const MultiPartition& shape);

// Hook length within the node's own component; NodeNotInShape if absent.
unsigned hook_length(const MultiPartition& shape, const MultiNode& node);

// f(shape) = 1 / prod of all hook lengths.  Satisfies f = d / n! where d is
// the number of standard multitableaux of the shape.
Rational f_constant(const MultiPartition& shape);

class StandardMultiTableau {
 public:
  // Entries listed for labels 1..n; every prefix must be a multipartition
  // (InvalidTableau otherwise).
  StandardMultiTableau(unsigned m, std::vector<MultiNode> entries);

  unsigned modulus() const { return m_; }
  unsigned size() const { return static_cast<unsigned>(entries_.size()); }
  const std::vector<MultiNode>& entries() const { return entries_; }
  const MultiPartition& shape() const { return shape_; }

  MultiPartition prefix_shape(unsigned k) const;  // 0 <= k <= size
  StandardMultiTableau prefix(unsigned k) const;
  StandardMultiTableau extended(const MultiNode& node) const;

  std::vector<int> contents() const;
  std::vector<CycloScalar> positions() const;  // xi_{component_i}

  friend bool operator==(const StandardMultiTableau& a, const StandardMultiTableau& b) {
    return a.m_ == b.m_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  unsigned m_;
  std::vector<MultiNode> entries_;
  MultiPartition shape_;
};

// Lexicographic by entry sequence.
std::vector<StandardMultiTableau> enumerate_standard_tableaux(unsigned m,
                                                              const MultiPartition& shape);
unsigned standard_tableau_count(unsigned m, const MultiPartition& shape);

// The univariate weight attached to the length-k prefix of T:
//   (u - c_k)/u * prod over earlier labels in the same component of
//   (u - c_i)^2 / ((u - c_i)^2 - 1).
// Its value at u = c_k (after cancellation) is f(prefix k) / f(prefix k-1).
RatFun f_ratio(const StandardMultiTableau& tab, unsigned k, VarId u);

}  // namespace wreath
