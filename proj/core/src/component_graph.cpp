#include "specden/component_graph.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace specden::tds {

std::size_t ComponentGraph::out_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += e.from == v ? 1 : 0;
  return d;
}

std::size_t ComponentGraph::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += e.to == v ? 1 : 0;
  return d;
}

bool ComponentGraph::is_directed_line() const {
  if (truncated) return false;
  const std::size_t n = vertices.size();
  if (edges.size() + 1 != n) return false;
  std::vector<char> seen(n, 0);
  for (const auto& e : edges) {
    if (e.from + 1 != e.to || e.to >= n) return false;
    if (seen[e.from]) return false;
    seen[e.from] = 1;
  }
  return true;
}

ComponentGraph component_graph(const TuringSystem& sys, const Configuration& root, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("component_graph: cap must be >= 1");
  ComponentGraph g;
  std::map<Configuration, std::size_t> index;
  std::deque<std::size_t> queue;

  auto vertex_of = [&](const Configuration& x) -> std::size_t {
    const auto it = index.find(x);
    if (it != index.end()) return it->second;
    if (g.vertices.size() >= cap) {
      g.truncated = true;
      return cap;  // sentinel: caller skips the edge
    }
    const std::size_t id = g.vertices.size();
    g.vertices.push_back(x);
    index.emplace(x, id);
    queue.push_back(id);
    return id;
  };

  vertex_of(root);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const Configuration x = g.vertices[v];
    // forward edge
    if (const Instruction* ins = instruction_for(sys, x); ins != nullptr && !ins->element.is_identity()) {
      const Configuration y = ins->element.apply(x);
      const std::size_t w = vertex_of(y);
      if (w != cap) g.edges.push_back({v, w, ins->element, ins->label});
    }
    // predecessors: x' = gamma^{-1}.x with x' in the domain
    for (const auto& ins : sys.instructions) {
      if (ins.element.is_identity()) continue;
      const Configuration pre = ins.element.inverse().apply(x);
      if (!ins.domain.contains(pre)) continue;
      const std::size_t w = vertex_of(pre);
      if (w == cap) continue;
      bool dup = false;
      for (const auto& e : g.edges)
        dup = dup || (e.from == w && e.to == v && e.instruction == ins.label);
      if (!dup) g.edges.push_back({w, v, ins.element, ins.label});
    }
  }

  // collapse parallel edges: multiplicity counts realizing instructions
  std::map<std::pair<std::size_t, std::size_t>, long> mult;
  for (const auto& e : g.edges) ++mult[{e.from, e.to}];
  for (const auto& [key, m] : mult) g.collapsed.push_back({key.first, key.second, m});
  return g;
}

bool is_simply_connected(const ComponentGraph& g) {
  if (g.truncated)
    throw std::invalid_argument("is_simply_connected: component was truncated at the cap");
  if (g.vertices.empty()) return true;
  const int bits = g.edges.empty() ? 1 : g.edges.front().label.bits();
  const std::size_t n = g.vertices.size();

  // potentials along a BFS spanning tree of the undirected support
  std::vector<GroupElement> pot(n, GroupElement::identity(bits));
  std::vector<char> visited(n, 0);
  std::vector<char> tree_edge(g.edges.size(), 0);
  std::deque<std::size_t> queue{0};
  visited[0] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
      const auto& e = g.edges[ei];
      if (e.from == v && !visited[e.to]) {
        visited[e.to] = 1;
        pot[e.to] = compose(e.label, pot[v]);
        tree_edge[ei] = 1;
        queue.push_back(e.to);
      } else if (e.to == v && !visited[e.from]) {
        visited[e.from] = 1;
        pot[e.from] = compose(e.label.inverse(), pot[v]);
        tree_edge[ei] = 1;
        queue.push_back(e.from);
      }
    }
  }
  // non-tree edges: label must match the potential difference
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (tree_edge[ei]) continue;
    const auto& e = g.edges[ei];
    if (!(compose(e.label, pot[e.from]) == pot[e.to])) return false;
  }
  return true;
}

}  // namespace specden::tds
