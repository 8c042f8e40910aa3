#include "avoid/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "avoid/error.hpp"

namespace avoid {

bool VertexSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return n_;
}

std::size_t VertexSet::next(std::size_t v) const noexcept {
  ++v;
  if (v >= n_) return n_;
  std::size_t i = v >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return n_;
    w = words_[i];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Graph::Graph(std::size_t vertices) : rows_(vertices, VertexSet(vertices)) {}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= order() || b >= order()) throw Error(Errc::invalid_argument, "edge endpoint out of range");
  if (a == b) throw Error(Errc::invalid_argument, "self-loop");
  rows_[a].set(b);
  rows_[b].set(a);
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

bool Graph::is_clique(std::span<const std::size_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> peeled;
  peeled.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    removed[best] = true;
    peeled.push_back(best);
    const auto& row = g.neighbours(best);
    for (auto u = row.first(); u < n; u = row.next(u)) {
      if (!removed[u]) --degree[u];
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

void write_dimacs(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto& row = g.neighbours(a);
    for (auto b = row.next(a); b < g.order(); b = row.next(b)) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  }
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> g;
  std::size_t declared_edges = 0;
  const auto fail = [&](const std::string& why) {
    throw Error(Errc::parse_error, "DIMACS line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    char tag = 0;
    fields >> tag;
    if (tag == 'p') {
      std::string format;
      std::size_t n = 0;
      if (!(fields >> format >> n >> declared_edges)) fail("malformed problem line");
      if (format != "edge" && format != "col") fail("unknown format '" + format + "'");
      if (g) fail("duplicate problem line");
      g.emplace(n);
    } else if (tag == 'e') {
      if (!g) fail("edge before problem line");
      std::size_t a = 0, b = 0;
      if (!(fields >> a >> b)) fail("malformed edge");
      if (a < 1 || b < 1 || a > g->order() || b > g->order()) fail("vertex out of range");
      if (a != b) g->add_edge(a - 1, b - 1);
    } else {
      fail("unexpected line");
    }
  }
  if (!g) throw Error(Errc::parse_error, "DIMACS input has no problem line");
  return std::move(*g);
}

}  // namespace avoid
