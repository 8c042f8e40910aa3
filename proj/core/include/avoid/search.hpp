#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "avoid/graph.hpp"
#include "avoid/residue_set.hpp"

namespace avoid {

// Wall-clock and node limits for a branch-and-bound search.
struct Budget {
  std::chrono::milliseconds time{std::chrono::seconds(60)};
  std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();

  static Budget unlimited() {
    return {std::chrono::milliseconds::max(), std::numeric_limits<std::uint64_t>::max()};
  }
};

struct SearchOptions {
  Budget budget{};
  // Only cliques strictly larger than this are reported. When nothing beats
  // it the witness is empty and `optimal` says whether that was proved.
  std::size_t lower_bound = 0;
};

struct SearchResult {
  ResidueSet witness;
  std::size_t size = 0;
  // True only when the search tree was exhausted.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::microseconds elapsed{0};
};

// Cayley graph on Z/m: a and b are adjacent iff a != b and neither a - b
// nor b - a lies in forbidden \ {0}. Its cliques are exactly the sets whose
// ordered differences avoid the forbidden residues.
class DifferenceGraph {
 public:
  std::int64_t modulus() const noexcept { return forbidden_.modulus(); }
  const ResidueSet& forbidden() const noexcept { return forbidden_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  friend DifferenceGraph build_difference_graph(std::int64_t m, const ResidueSet& forbidden);
  DifferenceGraph(ResidueSet forbidden, Graph graph) : forbidden_(std::move(forbidden)), graph_(std::move(graph)) {}

  ResidueSet forbidden_;
  Graph graph_;
};

DifferenceGraph build_difference_graph(std::int64_t m, const ResidueSet& forbidden);

// Exact branch and bound (greedy colouring bound, degeneracy vertex order).
// Witness vertices are reported as residues modulo g.order().
SearchResult max_clique(const Graph& g, const SearchOptions& options = {});
// Cayley graphs are vertex-transitive, so the search is rooted at vertex 0.
SearchResult max_clique(const DifferenceGraph& g, const SearchOptions& options = {});

// Largest R in Z/m whose nonzero ordered differences avoid k-th powers.
SearchResult r_k(std::int64_t m, unsigned k, const Budget& budget = Budget::unlimited());

// { sum_{i<k} u_i m^i : u_0 in R, u_i in [0, m) } as a set modulo m^k.
ResidueSet lift_r_set(const ResidueSet& R, std::int64_t m, unsigned k);

// Bron-Kerbosch with pivoting over the maximal cliques that contain
// `root`. Stops (returning false) once `limit` cliques have been reported
// or the callback returns false.
bool for_each_maximal_clique_containing(const Graph& g, std::size_t root, std::size_t limit,
                                        const std::function<bool(std::span<const std::size_t>)>& visit);

}  // namespace avoid
