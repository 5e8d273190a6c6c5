#include "grm/tree_edit.hpp"

#include <algorithm>

#include "grm/error.hpp"

namespace grm {
namespace {

std::vector<std::vector<Vertex>> adjacency_of(const Tree& t) {
  std::vector<std::vector<Vertex>> adj(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    auto nb = t.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

}  // namespace

Tree subdivide(const Tree& t, Vertex a, Vertex b) {
  auto adj = adjacency_of(t);
  auto it = std::find(adj.at(a).begin(), adj.at(a).end(), b);
  if (it == adj[a].end()) throw Error(ErrorKind::DomainViolation, "subdivide: vertices are not adjacent");
  const auto w = static_cast<Vertex>(adj.size());
  *it = w;
  *std::find(adj[b].begin(), adj[b].end(), a) = w;
  adj.push_back({a, b});
  return Tree(std::move(adj));
}

Tree attach_pendants(const Tree& t, Vertex at, std::size_t count) {
  auto adj = adjacency_of(t);
  if (at >= adj.size()) throw Error(ErrorKind::DomainViolation, "attach_pendants: vertex out of range");
  for (std::size_t i = 0; i < count; ++i) {
    const auto leaf = static_cast<Vertex>(adj.size());
    adj[at].push_back(leaf);
    adj.push_back({at});
  }
  return Tree(std::move(adj));
}

Rebuilt remove_vertices(const Tree& t, std::span<const Vertex> removed, const EdgeList& added) {
  std::vector<Vertex> new_id(t.order(), 0);
  for (Vertex v : removed) new_id.at(v) = Rebuilt::kRemoved;
  Vertex next = 0;
  for (auto& id : new_id) {
    if (id != Rebuilt::kRemoved) id = next++;
  }
  if (next == 0) throw Error(ErrorKind::DomainViolation, "remove_vertices: nothing left");
  std::vector<std::vector<Vertex>> adj(next);
  auto link = [&](Vertex a, Vertex b) {
    if (new_id.at(a) == Rebuilt::kRemoved || new_id.at(b) == Rebuilt::kRemoved) {
      throw Error(ErrorKind::DomainViolation, "remove_vertices: added edge touches a removed vertex");
    }
    adj[new_id[a]].push_back(new_id[b]);
    adj[new_id[b]].push_back(new_id[a]);
  };
  for (const Edge& e : t.edges()) {
    if (new_id[e.u] != Rebuilt::kRemoved && new_id[e.v] != Rebuilt::kRemoved) link(e.u, e.v);
  }
  for (const Edge& e : added) link(e.u, e.v);
  return Rebuilt{Tree(std::move(adj)), std::move(new_id)};
}

}  // namespace grm
