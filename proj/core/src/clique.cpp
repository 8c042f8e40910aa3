#include <algorithm>
#include <optional>
#include <stdexcept>

#include "avoid/error.hpp"
#include "avoid/integer.hpp"
#include "avoid/residue.hpp"
#include "avoid/search.hpp"

namespace avoid {

namespace {

using Clock = std::chrono::steady_clock;

class CliqueSolver {
 public:
  CliqueSolver(const Graph& g, const SearchOptions& options)
      : options_(options), start_(Clock::now()), order_(degeneracy_order(g)), relabeled_(g.order()) {
    std::vector<std::size_t> position(g.order());
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto& row = g.neighbours(a);
      for (auto b = row.next(a); b < g.order(); b = row.next(b)) relabeled_.add_edge(position[a], position[b]);
    }
    best_size_ = options.lower_bound;
    if (options.budget.time != std::chrono::milliseconds::max()) deadline_ = start_ + options.budget.time;
  }

  void run() {
    VertexSet all(relabeled_.order());
    for (std::size_t v = 0; v < relabeled_.order(); ++v) all.set(v);
    std::vector<std::size_t> current;
    if (relabeled_.order() > 0) expand(current, all);
  }

  // Witness in original vertex labels, sorted.
  std::vector<std::size_t> witness() const {
    std::vector<std::size_t> out;
    for (const auto v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
  bool exhausted() const noexcept { return !stopped_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  Clock::time_point start() const noexcept { return start_; }

 private:
  bool out_of_budget() {
    if (stopped_) return true;
    if (nodes_ >= options_.budget.nodes) stopped_ = true;
    if ((nodes_ & 1023U) == 1 && deadline_ && Clock::now() >= *deadline_) stopped_ = true;
    return stopped_;
  }

  void expand(std::vector<std::size_t>& current, VertexSet candidates) {
    ++nodes_;
    if (out_of_budget()) return;

    // Greedy sequential colouring; colour[i] bounds the clique size
    // achievable from vertices[0..i].
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = candidates;
    std::size_t c = 0;
    while (!uncoloured.none()) {
      ++c;
      VertexSet available = uncoloured;
      for (auto v = available.first(); v < available.capacity(); v = available.first()) {
        uncoloured.reset(v);
        available.reset(v);
        available.subtract(relabeled_.neighbours(v));
        vertices.push_back(v);
        colour.push_back(c);
      }
    }

    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_size_) return;
      const auto v = vertices[i];
      current.push_back(v);
      VertexSet next = candidates;
      next &= relabeled_.neighbours(v);
      if (next.none()) {
        if (current.size() > best_size_) {
          best_size_ = current.size();
          best_ = current;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
      if (stopped_) return;
    }
  }

  SearchOptions options_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::size_t> order_;
  Graph relabeled_;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

ResidueSet as_residues(std::size_t modulus, std::span<const std::size_t> vertices) {
  const auto m = static_cast<std::int64_t>(std::max<std::size_t>(modulus, 2));
  if (vertices.empty()) return ResidueSet::empty_image(m);
  std::vector<std::int64_t> elements(vertices.begin(), vertices.end());
  return ResidueSet(m, std::move(elements));
}

void recheck(const Graph& g, const ResidueSet& witness) {
  std::vector<std::size_t> vertices(witness.elements().begin(), witness.elements().end());
  if (!g.is_clique(vertices)) throw std::logic_error("max_clique produced a non-clique witness");
}

}  // namespace

DifferenceGraph build_difference_graph(std::int64_t m, const ResidueSet& forbidden) {
  if (forbidden.modulus() != m) {
    throw Error(Errc::modulus_mismatch, "graph modulus " + std::to_string(m) + " vs forbidden set " +
                                            forbidden.to_string());
  }
  std::vector<bool> bad = forbidden.indicator();
  bad[0] = false;
  Graph g(static_cast<std::size_t>(m));
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = a + 1; b < m; ++b) {
      if (!bad[static_cast<std::size_t>(mod(a - b, m))] && !bad[static_cast<std::size_t>(mod(b - a, m))]) {
        g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      }
    }
  }
  return DifferenceGraph(forbidden, std::move(g));
}

SearchResult max_clique(const Graph& g, const SearchOptions& options) {
  CliqueSolver solver(g, options);
  solver.run();
  const auto vertices = solver.witness();
  SearchResult result{as_residues(g.order(), vertices), vertices.size(), solver.exhausted(), solver.nodes(),
                      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - solver.start())};
  recheck(g, result.witness);
  return result;
}

SearchResult max_clique(const DifferenceGraph& dg, const SearchOptions& options) {
  const auto start = Clock::now();
  const Graph& g = dg.graph();
  std::vector<std::size_t> neighbourhood;
  const auto& row = g.neighbours(0);
  for (auto v = row.first(); v < g.order(); v = row.next(v)) neighbourhood.push_back(v);

  SearchOptions inner = options;
  inner.lower_bound = options.lower_bound == 0 ? 0 : options.lower_bound - 1;
  CliqueSolver solver(g.induced(neighbourhood), inner);
  solver.run();

  std::vector<std::size_t> vertices;
  const auto local = solver.witness();
  if (!local.empty() || options.lower_bound == 0) {
    vertices.push_back(0);
    for (const auto v : local) vertices.push_back(neighbourhood[v]);
  }
  std::sort(vertices.begin(), vertices.end());
  SearchResult result{as_residues(g.order(), vertices), vertices.size(), solver.exhausted(), solver.nodes(),
                      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)};
  recheck(g, result.witness);
  return result;
}

SearchResult r_k(std::int64_t m, unsigned k, const Budget& budget) {
  if (k < 2) throw Error(Errc::invalid_argument, "k must be at least 2");
  const auto graph = build_difference_graph(m, power_residues(m, k));
  return max_clique(graph, SearchOptions{budget, 0});
}

ResidueSet lift_r_set(const ResidueSet& R, std::int64_t m, unsigned k) {
  if (R.modulus() != m) throw Error(Errc::modulus_mismatch, R.to_string() + " vs m=" + std::to_string(m));
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  const std::int64_t high = pow_i64(m, k - 1);
  std::vector<std::int64_t> out;
  out.reserve(R.size() * static_cast<std::size_t>(high));
  for (std::int64_t upper = 0; upper < high; ++upper) {
    for (const auto u0 : R.elements()) out.push_back(u0 + m * upper);
  }
  return ResidueSet(m * high, std::move(out));
}

namespace {

class MaximalCliqueEnumerator {
 public:
  MaximalCliqueEnumerator(const Graph& g, std::size_t limit,
                          const std::function<bool(std::span<const std::size_t>)>& visit)
      : g_(g), limit_(limit), visit_(visit) {}

  bool run(std::size_t root) {
    std::vector<std::size_t> current{root};
    VertexSet candidates = g_.neighbours(root);
    VertexSet excluded(g_.order());
    recurse(current, candidates, excluded);
    return !stopped_;
  }

 private:
  void recurse(std::vector<std::size_t>& current, VertexSet candidates, VertexSet excluded) {
    if (stopped_) return;
    if (candidates.none() && excluded.none()) {
      if (reported_ >= limit_) {
        stopped_ = true;
        return;
      }
      ++reported_;
      std::vector<std::size_t> sorted = current;
      std::sort(sorted.begin(), sorted.end());
      if (!visit_(sorted)) stopped_ = true;
      return;
    }
    // Pivot: the vertex of candidates or excluded with most candidate neighbours.
    std::size_t pivot = g_.order(), pivot_score = 0;
    for (const VertexSet* pool : {&candidates, &excluded}) {
      for (auto u = pool->first(); u < g_.order(); u = pool->next(u)) {
        VertexSet shared = candidates;
        shared &= g_.neighbours(u);
        const auto score = shared.count();
        if (pivot == g_.order() || score > pivot_score) {
          pivot = u;
          pivot_score = score;
        }
      }
    }
    VertexSet branch = candidates;
    if (pivot < g_.order()) branch.subtract(g_.neighbours(pivot));
    for (auto v = branch.first(); v < g_.order(); v = branch.next(v)) {
      current.push_back(v);
      VertexSet next_candidates = candidates;
      next_candidates &= g_.neighbours(v);
      VertexSet next_excluded = excluded;
      next_excluded &= g_.neighbours(v);
      recurse(current, std::move(next_candidates), std::move(next_excluded));
      current.pop_back();
      if (stopped_) return;
      candidates.reset(v);
      excluded.set(v);
    }
  }

  const Graph& g_;
  std::size_t limit_;
  const std::function<bool(std::span<const std::size_t>)>& visit_;
  std::size_t reported_ = 0;
  bool stopped_ = false;
};

}  // namespace

bool for_each_maximal_clique_containing(const Graph& g, std::size_t root, std::size_t limit,
                                        const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (root >= g.order()) throw Error(Errc::invalid_argument, "root vertex out of range");
  return MaximalCliqueEnumerator(g, limit, visit).run(root);
}

}  // namespace avoid
