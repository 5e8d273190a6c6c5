#include "grm/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "grm/error.hpp"

namespace grm {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Tree::Tree(std::vector<std::vector<Vertex>> adjacency) : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  if (n == 0) throw Error(ErrorKind::DomainViolation, "tree must have at least one vertex");
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = adj_[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w >= n) throw Error(ErrorKind::DomainViolation, "neighbour id " + std::to_string(w) + " out of range");
      if (w == v) throw Error(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(v));
      if (i > 0 && list[i - 1] == w) throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + edge_text(v, w));
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
        throw Error(ErrorKind::DomainViolation, "adjacency not symmetric at edge " + edge_text(v, w));
      }
    }
    degree_sum += list.size();
  }
  if (degree_sum != 2 * (n - 1)) {
    // A connected graph with more than n-1 edges has a cycle; fewer cannot be connected.
    throw Error(degree_sum > 2 * (n - 1) ? ErrorKind::CycleDetected : ErrorKind::Disconnected,
                std::to_string(degree_sum / 2) + " edges on " + std::to_string(n) + " vertices");
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    // n-1 edges but not connected means some component holds a cycle.
    throw Error(ErrorKind::CycleDetected, "n-1 edges yet only " + std::to_string(reached) + " of " +
                                              std::to_string(n) + " vertices reachable");
  }
}

Tree Tree::single_vertex() { return Tree(std::vector<std::vector<Vertex>>(1)); }

EdgeList Tree::edges() const {
  EdgeList out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < adj_.size(); ++v) {
    for (Vertex w : adj_[v]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

Tree build_tree(const EdgeList& edges) {
  if (edges.empty()) {
    throw Error(ErrorKind::DomainViolation, "empty edge list; use Tree::single_vertex() for n = 1");
  }
  std::unordered_map<Vertex, Vertex> compact;
  auto id_of = [&](Vertex raw) {
    auto [it, inserted] = compact.try_emplace(raw, static_cast<Vertex>(compact.size()));
    return it->second;
  };
  std::vector<Edge> local;
  local.reserve(edges.size());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self loop " + edge_text(e.u, e.v));
    Vertex a = id_of(e.u);
    Vertex b = id_of(e.v);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + edge_text(e.u, e.v));
    }
    local.push_back({a, b});
  }
  const std::size_t n = compact.size();
  DisjointSets components(n);
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (!components.unite(local[i].u, local[i].v)) {
      throw Error(ErrorKind::CycleDetected, "edge " + edge_text(edges[i].u, edges[i].v) + " closes a cycle");
    }
  }
  if (local.size() != n - 1) {
    throw Error(ErrorKind::Disconnected, std::to_string(n - local.size()) + " components over " +
                                             std::to_string(n) + " vertices");
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : local) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return Tree(std::move(adj));
}

std::int64_t DegreeCensus::vertices(int degree) const {
  auto it = n_.find(degree);
  return it == n_.end() ? 0 : it->second;
}

std::int64_t DegreeCensus::edges(int i, int j) const {
  auto it = m_.find({std::min(i, j), std::max(i, j)});
  return it == m_.end() ? 0 : it->second;
}

void DegreeCensus::set_vertices(int degree, std::int64_t count) {
  if (count == 0) {
    n_.erase(degree);
  } else {
    n_[degree] = count;
  }
}

void DegreeCensus::set_edges(int i, int j, std::int64_t count) {
  std::pair<int, int> key{std::min(i, j), std::max(i, j)};
  if (count == 0) {
    m_.erase(key);
  } else {
    m_[key] = count;
  }
}

void DegreeCensus::add_vertex(int degree, std::int64_t count) { set_vertices(degree, vertices(degree) + count); }

void DegreeCensus::add_edge(int i, int j, std::int64_t count) { set_edges(i, j, edges(i, j) + count); }

std::int64_t DegreeCensus::order() const {
  std::int64_t total = 0;
  for (const auto& [d, c] : n_) total += c;
  return total;
}

int DegreeCensus::max_degree() const {
  for (auto it = n_.rbegin(); it != n_.rend(); ++it) {
    if (it->second > 0) return it->first;
  }
  return 0;
}

bool DegreeCensus::satisfies_invariants() const {
  std::int64_t n = 0;
  std::int64_t degree_sum = 0;
  for (const auto& [d, c] : n_) {
    if (c < 0 || d < 0) return false;
    n += c;
    degree_sum += static_cast<std::int64_t>(d) * c;
  }
  if (n < 1 || degree_sum != 2 * (n - 1)) return false;
  std::map<int, std::int64_t> handshake;
  for (const auto& [key, c] : m_) {
    if (c < 0) return false;
    handshake[key.first] += c;
    handshake[key.second] += c;  // diagonal entries count twice
  }
  for (const auto& [d, c] : n_) {
    if (handshake[d] != static_cast<std::int64_t>(d) * c) return false;
  }
  for (const auto& [d, c] : handshake) {
    if (c != static_cast<std::int64_t>(d) * vertices(d)) return false;
  }
  return true;
}

std::string DegreeCensus::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : n_) {
    os << (first ? "" : " ") << "n" << d << "=" << c;
    first = false;
  }
  os << " |";
  for (const auto& [key, c] : m_) os << " m" << key.first << key.second << "=" << c;
  return os.str();
}

DegreeCensus census(const Tree& t) {
  DegreeCensus c;
  for (Vertex v = 0; v < t.order(); ++v) c.add_vertex(static_cast<int>(t.degree(v)));
  for (const Edge& e : t.edges()) c.add_edge(static_cast<int>(t.degree(e.u)), static_cast<int>(t.degree(e.v)));
  return c;
}

int max_degree(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorKind::SingletonTree, "max degree undefined for a single vertex");
  std::size_t best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return static_cast<int>(best);
}

EdgeList parse_edge_list(std::istream& in) {
  EdgeList edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u)) {
      fields.clear();
      std::string rest;
      if (fields >> rest) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u v'");
      continue;  // blank or comment-only
    }
    if (!(fields >> v) || (fields >> extra)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected exactly two ids");
    }
    if (u < 0 || v < 0 || u > 0xffffffffLL || v > 0xffffffffLL) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": vertex id out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return edges;
}

EdgeList parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Tree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace grm
