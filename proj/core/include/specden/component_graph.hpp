#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specden/turing_system.hpp"

namespace specden::tds {

// Connected component of a configuration in the instruction graph: vertices
// are configurations, and there is an edge x -> gamma_i.x with label gamma_i
// whenever x lies in the domain of the (non-identity) instruction i. Identity
// self-loops on accepting/rejecting cells are omitted; the diagonal terms of
// assembled operators are added from the operator expression instead.
struct LabeledEdge {
  std::size_t from = 0, to = 0;
  GroupElement label;
  std::string instruction;
};

// Same edge set with parallel edges merged; the integer label counts the
// instructions realizing the edge.
struct CollapsedEdge {
  std::size_t from = 0, to = 0;
  long multiplicity = 0;
};

struct ComponentGraph {
  std::vector<Configuration> vertices;  // vertices[0] is the root
  std::vector<LabeledEdge> edges;
  std::vector<CollapsedEdge> collapsed;
  bool truncated = false;

  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;

  // True when the component is the directed line v0 -> v1 -> ... -> v_{n-1}
  // in vertex order.
  bool is_directed_line() const;
};

// Closure of {root} under forward steps and predecessors (x' with x' in X_i
// and gamma_i.x' = y), capped at `cap` vertices; `truncated` is set when the
// cap stops the search.
ComponentGraph component_graph(const TuringSystem& sys, const Configuration& root, std::size_t cap);

// Spanning-tree cocycle test: multiplying edge labels along every closed loop
// (inverting labels traversed against orientation) gives the identity.
// Throws std::invalid_argument on truncated graphs.
bool is_simply_connected(const ComponentGraph& g);

}  // namespace specden::tds
