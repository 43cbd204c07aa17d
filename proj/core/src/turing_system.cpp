#include "specden/turing_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace specden::tds {

namespace {

bool window_inside(const CylinderUnion& u, const std::vector<int>& offsets) {
  for (const auto& c : u.parts())
    for (const auto& [off, allowed] : c.window())
      if (std::find(offsets.begin(), offsets.end(), off) == offsets.end()) return false;
  return true;
}

// measure-zero decision for the fixed-point set of (element, cylinder)
bool fixed_points_null(const GroupElement& g, const Cylinder& c) {
  if (g.shift_amount() != 0) return true;
  bool all_states_moved = true;
  for (int s = 0; s < StateSpace::kCount; ++s)
    if (c.states().contains(s) &&
        static_cast<int>(g.state_matrix().apply(StateSpace::vector_of(s))) == s)
      all_states_moved = false;
  if (all_states_moved) return true;
  for (const auto& [off, allowed] : c.window()) {
    if (allowed.count() != 1) continue;
    const int pinned = allowed.symbols().front();
    const auto it = g.local_autos().find(off);
    if (it != g.local_autos().end() &&
        static_cast<int>(it->second.apply(static_cast<gf2::Vec>(pinned))) != pinned)
      return true;
  }
  return false;
}

}  // namespace

ValidationReport validate_system(const TuringSystem& sys) {
  ValidationReport rep;
  auto issue = [&rep](const std::string& check, const std::string& detail) {
    rep.issues.push_back({check, detail});
  };

  for (const auto& ins : sys.instructions) {
    if (ins.domain.is_empty()) issue("partition", "instruction " + ins.label + " has empty domain");
    if (!window_inside(ins.domain, sys.partition_window))
      issue("partition", "instruction " + ins.label + " is not a union of partition cells");
  }
  for (std::size_t i = 0; i < sys.instructions.size(); ++i)
    for (std::size_t k = i + 1; k < sys.instructions.size(); ++k)
      if (sys.instructions[i].domain.intersects(sys.instructions[k].domain))
        issue("partition", "domains of " + sys.instructions[i].label + " and " +
                               sys.instructions[k].label + " overlap");

  const CylinderUnion* marked[] = {&sys.initial, &sys.accepting, &sys.rejecting};
  const char* names[] = {"initial", "accepting", "rejecting"};
  for (int i = 0; i < 3; ++i) {
    if (!window_inside(*marked[i], sys.partition_window))
      issue("partition", std::string(names[i]) + " set is not a union of partition cells");
    for (int k = i + 1; k < 3; ++k)
      if (marked[i]->intersects(*marked[k]))
        issue("partition", std::string(names[i]) + " and " + names[k] + " sets overlap");
  }

  for (const auto& ins : sys.instructions) {
    if (ins.element.is_identity()) continue;
    if (ins.domain.intersects(sys.accepting) || ins.domain.intersects(sys.rejecting))
      issue("condition-i", "instruction " + ins.label + " touches the accepting/rejecting set");
  }

  for (const auto& ins : sys.instructions)
    for (const auto& c : ins.domain.parts())
      if (!fixed_points_null(ins.element, c))
        issue("condition-ii", "instruction " + ins.label +
                                  " may fix a positive-measure subset of " +
                                  c.pretty(sys.alphabet));
  return rep;
}

const Instruction* instruction_for(const TuringSystem& sys, const Configuration& x) {
  const Instruction* found = nullptr;
  for (const auto& ins : sys.instructions)
    if (ins.domain.contains(x)) {
      if (found != nullptr) throw std::logic_error("instruction domains overlap at a point");
      found = &ins;
    }
  return found;
}

Configuration step(const TuringSystem& sys, const Configuration& x) {
  const Instruction* ins = instruction_for(sys, x);
  return ins == nullptr ? x : ins->element.apply(x);
}

std::variant<Cylinder, SplitError> step_cylinder(const TuringSystem& sys, const Cylinder& c) {
  if (c.is_empty()) throw std::invalid_argument("step_cylinder: empty cylinder");
  const Instruction* hit = nullptr;
  SplitError split;
  for (const auto& ins : sys.instructions) {
    if (!ins.domain.intersects(c)) continue;
    if (ins.domain.contains_cylinder(c) && hit == nullptr && split.labels.empty()) {
      hit = &ins;
      continue;
    }
    split.labels.push_back(ins.label);
    std::set<int> offs;
    for (const auto& part : ins.domain.parts())
      for (const auto& [off, allowed] : part.window()) offs.insert(off);
    for (int off : offs)
      if (std::find(split.offsets.begin(), split.offsets.end(), off) == split.offsets.end())
        split.offsets.push_back(off);
  }
  if (!split.labels.empty()) {
    if (hit != nullptr) split.labels.push_back(hit->label);
    std::sort(split.offsets.begin(), split.offsets.end());
    return split;
  }
  if (hit == nullptr) return c;  // e-region (includes A and R)
  return hit->element.apply(c);
}

Cylinder cell_of(const TuringSystem& sys, const Configuration& x) {
  Cylinder c = Cylinder::whole(sys.nsymbols()).with_states(StateSet::single(x.state));
  for (int off : sys.partition_window)
    c = c.constrained(off, SymbolSet::single(sys.nsymbols(), x.symbol_at(off)));
  return c;
}

}  // namespace specden::tds
