#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specden/cylinder.hpp"
#include "specden/group_element.hpp"

namespace specden::tds {

// One instruction: the cells of `domain` move by `element`. Only instructions
// with a non-identity element are listed; every other partition cell is
// implicitly assigned the neutral element.
struct Instruction {
  std::string label;
  std::vector<std::string> aliases;  // extra row names when table rows coincide
  CylinderUnion domain;
  GroupElement element;
};

// Dynamical hardware + software over X = M^Z x S. The partition is the set of
// all cells [x (y) z, s] over the window offsets; instruction domains, initial,
// accepting and rejecting sets must be unions of such cells.
struct TuringSystem {
  Alphabet alphabet;
  std::vector<int> partition_window{-1, 0, 1};
  std::vector<Instruction> instructions;
  CylinderUnion initial;
  CylinderUnion accepting;
  CylinderUnion rejecting;

  int nsymbols() const { return alphabet.size(); }
};

struct ValidationIssue {
  std::string check;   // "partition", "condition-i", "condition-ii", ...
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks: instruction domains are unions of partition cells and pairwise
// disjoint; I, A, R are cell unions and pairwise disjoint; condition (i): no
// non-identity instruction touches A u R; condition (ii): each listed
// instruction has a fixed-point set of measure zero, decided by
//   - nonzero shift (shift-fixed sets are null since |M| >= 2), or
//   - the state automorphism moving every state of the cylinder, or
//   - zero shift and a pinned symbol (singleton constraint) moved by the
//     local automorphism at that offset.
ValidationReport validate_system(const TuringSystem& sys);

// The unique instruction whose domain contains x, or nullptr (e-region).
const Instruction* instruction_for(const TuringSystem& sys, const Configuration& x);

// T_X(x): gamma_i.x on instruction domains, x itself on the e-region.
Configuration step(const TuringSystem& sys, const Configuration& x);

// Cylinder-level step. Defined when c lies in a single instruction domain or
// entirely in the e-region; otherwise reports the offsets whose constraints
// must be refined.
struct SplitError {
  std::vector<int> offsets;
  std::vector<std::string> labels;  // instructions partially overlapping c
};

std::variant<Cylinder, SplitError> step_cylinder(const TuringSystem& sys, const Cylinder& c);

// Partition cell of a configuration, as a cylinder.
Cylinder cell_of(const TuringSystem& sys, const Configuration& x);

}  // namespace specden::tds
