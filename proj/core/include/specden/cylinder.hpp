#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "specden/alphabet.hpp"
#include "specden/configuration.hpp"
#include "specden/rational.hpp"

namespace specden::tds {

// Cylinder subset of M^Z x S: finitely many symbol constraints (offset 0 is
// the distinguished position) and a state subset, with exact product-Haar
// measure. Normalized: no stored constraint equals the full symbol set; the
// canonical empty value is the only cylinder with an empty state set.
class Cylinder {
 public:
  static Cylinder whole(int nsymbols);  // unconstrained, all states, measure 1
  static Cylinder empty(int nsymbols);

  int nsymbols() const { return nsymbols_; }
  bool is_empty() const { return states_.empty(); }
  const std::map<int, SymbolSet>& window() const { return window_; }
  StateSet states() const { return states_; }

  // constraint at an offset; full set when unconstrained
  SymbolSet constraint(int offset) const;

  // intersect the constraint at `offset` with `allowed` (may empty the cylinder)
  Cylinder constrained(int offset, const SymbolSet& allowed) const;
  Cylinder with_states(StateSet s) const;

  bool contains(const Configuration& x) const;
  bool subset_of(const Cylinder& o) const;
  bool disjoint_from(const Cylinder& o) const;

  Rational measure() const;

  // Any member with the smallest support: smallest allowed symbol per
  // constrained offset, smallest allowed state.
  Configuration representative() const;

  friend Cylinder intersect(const Cylinder& a, const Cylinder& b);

  // this \ o as pairwise-disjoint cylinders (coordinate-wise decomposition)
  std::vector<Cylinder> minus(const Cylinder& o) const;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend std::strong_ordering operator<=>(const Cylinder&, const Cylinder&) = default;

  // "[- (2) !- , carry]": window from min to max constrained offset, head
  // cell in parentheses; "!x" complements, "*" unconstrained, "{a,b}" general
  std::string pretty(const Alphabet& a) const;
  std::string canonical_json(const Alphabet& a) const;

 private:
  explicit Cylinder(int nsymbols) : nsymbols_(nsymbols) {}
  void normalize();

  int nsymbols_ = 0;
  std::map<int, SymbolSet> window_;
  StateSet states_;
};

// Finite union of cylinders. Measures are computed on an equivalent
// pairwise-disjoint refinement, so overlapping parts are never double
// counted.
class CylinderUnion {
 public:
  CylinderUnion() = default;
  explicit CylinderUnion(Cylinder c) { add(std::move(c)); }

  void add(Cylinder c);
  const std::vector<Cylinder>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

  bool contains(const Configuration& x) const;
  bool intersects(const Cylinder& c) const;
  bool intersects(const CylinderUnion& o) const;
  bool contains_cylinder(const Cylinder& c) const;  // c subset of the union
  bool contains_union(const CylinderUnion& o) const;

  std::vector<Cylinder> disjoint_parts() const;
  Rational measure() const;

  static CylinderUnion intersection(const CylinderUnion& a, const CylinderUnion& b);

  std::string pretty(const Alphabet& a) const;

 private:
  std::vector<Cylinder> parts_;  // non-empty cylinders only
};

}  // namespace specden::tds
