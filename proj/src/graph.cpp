#include "qoce/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qoce/errors.hpp"

namespace qoce {

VertexSet::VertexSet(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> vs) {
  if (std::adjacent_find(vs.begin(), vs.end(), std::greater_equal<>()) != vs.end()) {
    throw std::invalid_argument("VertexSet::from_sorted: sequence not strictly ascending");
  }
  VertexSet s;
  s.v_ = std::move(vs);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

std::optional<std::size_t> VertexSet::position(Vertex v) const {
  auto it = std::lower_bound(v_.begin(), v_.end(), v);
  if (it == v_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - v_.begin());
}

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("Graph::from_edges: endpoint out of range");
    if (u == v) continue;
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.adj_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.adj_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  if (!labels.empty()) g.set_labels(std::move(labels));
  return g;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != num_vertices()) {
    throw std::invalid_argument("Graph: label count does not match vertex count");
  }
  std::unordered_map<std::string, Vertex> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Vertex>(i)).second) {
      throw std::invalid_argument("Graph: duplicate label '" + labels[i] + "'");
    }
  }
  labels_ = std::move(labels);
  index_ = std::move(index);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  Graph g = *this;
  g.set_labels(std::move(labels));
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::volume(const VertexSet& vs) const {
  std::uint64_t vol = 0;
  for (Vertex v : vs) vol += degree(v);
  return vol;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<Vertex> SampledSubgraph::to_local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent.begin());
}

// ---------------------------------------------------------------------------
// Edge-list I/O

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](std::string&& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(std::move(token));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ParseError(line_no, "expected exactly two tokens");
    }
    Vertex u = intern(std::move(a));
    Vertex v = intern(std::move(b));
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw Error("I/O error while reading edge list");

  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": expected exactly two tokens");
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

// ---------------------------------------------------------------------------
// Structural measures

std::uint64_t cut_size(const Graph& g, const VertexSet& c) {
  std::uint64_t cut = 0;
  for (Vertex u : c) {
    for (Vertex v : g.neighbors(u)) {
      if (!c.contains(v)) ++cut;
    }
  }
  return cut;
}

double conductance(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw DomainError(DomainError::Kind::EmptySet, "conductance of the empty set");
  if (c.size() == g.num_vertices()) {
    throw DomainError(DomainError::Kind::FullSet, "conductance of the full vertex set");
  }
  const std::uint64_t vol = g.volume(c);
  const std::uint64_t rest = g.total_volume() - vol;
  if (vol == 0 || rest == 0) {
    throw DomainError(DomainError::Kind::ZeroVolume, "conductance with a zero-volume side");
  }
  return static_cast<double>(cut_size(g, c)) / static_cast<double>(std::min(vol, rest));
}

SampledSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  SampledSubgraph sub;
  sub.to_parent = vs.vertices();
  Graph& local = sub.graph;
  local.offsets_.assign(vs.size() + 1, 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    // Both lists are ascending, so local neighbor ids come out sorted.
    auto nb = g.neighbors(vs[i]);
    auto it = vs.begin();
    for (Vertex p : nb) {
      it = std::lower_bound(it, vs.end(), p);
      if (it == vs.end()) break;
      if (*it == p) local.adj_.push_back(static_cast<Vertex>(it - vs.begin()));
    }
    local.offsets_[i + 1] = local.adj_.size();
  }
  return sub;
}

Graph restrict_to(const Graph& g, const VertexSet& vs) {
  SampledSubgraph sub = induced_subgraph(g, vs);
  if (!g.has_labels()) return std::move(sub.graph);
  std::vector<std::string> labels;
  labels.reserve(vs.size());
  for (Vertex v : vs) labels.push_back(g.label(v));
  return sub.graph.with_labels(std::move(labels));
}

VertexSet k_core(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--deg[u] < k) {
        removed[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return VertexSet::from_sorted(std::move(core));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g.neighbors(queue[head])) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    comps.emplace_back(std::move(queue));
    queue = {};
  }
  return comps;
}

bool is_connected(const Graph& g, const VertexSet& vs) {
  if (vs.empty()) return false;
  std::vector<char> seen(vs.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex u : g.neighbors(vs[queue[head]])) {
      auto pos = vs.position(u);
      if (pos && !seen[*pos]) {
        seen[*pos] = 1;
        queue.push_back(*pos);
      }
    }
  }
  return queue.size() == vs.size();
}

}  // namespace qoce
