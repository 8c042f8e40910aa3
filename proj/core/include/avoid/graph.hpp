#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace avoid {

// Fixed-width bitset over vertex ids, sized at runtime.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t capacity() const noexcept { return n_; }
  void set(std::size_t v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

  bool none() const noexcept;
  std::size_t count() const noexcept;
  // Lowest member, or capacity() when empty.
  std::size_t first() const noexcept;
  // Lowest member > v, or capacity().
  std::size_t next(std::size_t v) const noexcept;

  VertexSet& operator&=(const VertexSet& other) noexcept;
  // this &= ~other
  VertexSet& subtract(const VertexSet& other) noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph with a bit-matrix adjacency.
class Graph {
 public:
  explicit Graph(std::size_t vertices);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const noexcept { return rows_[a].test(b); }
  const VertexSet& neighbours(std::size_t v) const noexcept { return rows_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const std::size_t> vertices) const;

  bool is_clique(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
};

// Degeneracy order: vertices listed from the innermost core outwards, so a
// vertex appears before every vertex peeled off earlier.
std::vector<std::size_t> degeneracy_order(const Graph& g);

// DIMACS clique format: "c" comments, "p edge <n> <m>", "e <u> <v>" with
// 1-based vertices.
void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments = {});
Graph read_dimacs(std::istream& in);

}  // namespace avoid
