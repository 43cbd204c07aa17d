#include <doctest.h>

#include <random>
#include <variant>

#include "specden/carry_system.hpp"
#include "specden/component_graph.hpp"
#include "specden/turing_system.hpp"

using namespace specden;
using namespace specden::tds;

namespace {

Configuration config_from(const Alphabet& a, std::initializer_list<std::pair<int, long>> digits,
                          int state) {
  // digits: position -> digit value
  Configuration x;
  x.state = state;
  for (const auto& [pos, d] : digits) x.set(pos, a.digit(d));
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("turing-system");

TEST_CASE("the counting system validates for two bits") {
  const auto sys = carry::build_carry_system({2});
  const auto rep = validate_system(sys);
  for (const auto& issue : rep.issues) MESSAGE(issue.check, ": ", issue.detail);
  CHECK(rep.ok());
}

TEST_CASE("an identity instruction declared as moving fails condition (ii)") {
  auto sys = carry::build_carry_system({2});
  const int nsym = sys.nsymbols();
  Instruction bogus{"bogus",
                    {},
                    CylinderUnion(Cylinder::whole(nsym)
                                      .constrained(0, SymbolSet::single(nsym, sys.alphabet.digit(1)))
                                      .constrained(1, SymbolSet::single(nsym, sys.alphabet.digit(1)))
                                      .with_states(StateSet::single(StateSpace::kVoid))),
                    GroupElement::identity(2)};
  sys.instructions.push_back(bogus);
  const auto rep = validate_system(sys);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& issue : rep.issues) found = found || issue.check == "condition-ii";
  CHECK(found);
}

TEST_CASE("an instruction overlapping the accepting set fails condition (i)") {
  auto sys = carry::build_carry_system({2});
  const int nsym = sys.nsymbols();
  Instruction bad{"bad",
                  {},
                  CylinderUnion(Cylinder::whole(nsym)
                                    .constrained(0, SymbolSet::single(nsym, Alphabet::kEmpty))
                                    .with_states(StateSet::single(StateSpace::kCarry))),
                  GroupElement::shift(2, 1)};
  sys.instructions.push_back(bad);
  const auto rep = validate_system(sys);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& issue : rep.issues) found = found || issue.check == "condition-i";
  CHECK(found);
}

TEST_CASE("step follows the instruction table") {
  const auto sys = carry::build_carry_system({2});
  const Alphabet& a = sys.alphabet;

  // (- [2] -, zero-prev-digits) -> (- [0] -, inc-last-digit) via S10
  const Configuration start = config_from(a, {{0, 2}}, StateSpace::kZeroPrevDigits);
  const Instruction* ins = instruction_for(sys, start);
  REQUIRE(ins != nullptr);
  CHECK(ins->label == "S10");
  const Configuration next = step(sys, start);
  CHECK(next == config_from(a, {{0, 0}}, StateSpace::kIncLastDigit));

  // accepting points are fixed
  Configuration acc;
  acc.state = StateSpace::kCarry;
  acc.set(1, a.digit(2));
  REQUIRE(sys.accepting.contains(acc));
  CHECK(step(sys, acc) == acc);

  // (- [2] -, carry) -> ([-] 2 -, carry) via the walk-back shift
  const Configuration walk = config_from(a, {{0, 2}}, StateSpace::kCarry);
  const Instruction* s4 = instruction_for(sys, walk);
  REQUIRE(s4 != nullptr);
  CHECK(s4->label == "S4");
  const Configuration shifted = step(sys, walk);
  CHECK(shifted == config_from(a, {{1, 2}}, StateSpace::kCarry));
}

TEST_CASE("every configuration lands in exactly one partition cell") {
  const auto sys = carry::build_carry_system({2});
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> sym(0, 3), state(0, 3), len(0, 4), start(-2, 1);
  for (int it = 0; it < 300; ++it) {
    Configuration x;
    x.state = state(rng);
    const int s0 = start(rng), L = len(rng);
    for (int p = s0; p < s0 + L; ++p) x.set(p, sym(rng));
    const Cylinder cell = cell_of(sys, x);
    CHECK(cell.contains(x));
    // instruction domains are unions of cells, so at most one may contain x
    CHECK_NOTHROW(instruction_for(sys, x));
  }
}

TEST_CASE("step_cylinder maps single-cell cylinders with equal measure") {
  const auto sys = carry::build_carry_system({2});
  const Cylinder start = carry::initial_chain_cylinder(sys, 1);
  CHECK(start.measure() == Rational(1, 256));
  const auto out = step_cylinder(sys, start);
  REQUIRE(std::holds_alternative<Cylinder>(out));
  const Cylinder image = std::get<Cylinder>(out);
  CHECK(image.measure() == start.measure());
  // sampled points of the source step into the image
  Configuration rep = start.representative();
  CHECK(image.contains(step(sys, rep)));
}

TEST_CASE("step_cylinder reports a split on the whole space") {
  const auto sys = carry::build_carry_system({2});
  const auto out = step_cylinder(sys, Cylinder::whole(sys.nsymbols()));
  REQUIRE(std::holds_alternative<SplitError>(out));
  const auto& split = std::get<SplitError>(out);
  CHECK(!split.offsets.empty());
  CHECK(!split.labels.empty());
}

TEST_CASE("step_cylinder fixes accepting cylinders") {
  const auto sys = carry::build_carry_system({2});
  const Cylinder acc = sys.accepting.parts().front();
  const auto out = step_cylinder(sys, acc);
  REQUIRE(std::holds_alternative<Cylinder>(out));
  CHECK(std::get<Cylinder>(out) == acc);
}

TEST_CASE("the one-digit chain component is a directed line of six vertices") {
  const auto sys = carry::build_carry_system({2});
  const auto g = component_graph(sys, carry::initial_chain_configuration(sys, 1), 100);
  CHECK_FALSE(g.truncated);
  CHECK(g.vertices.size() == 6);
  CHECK(g.is_directed_line());
  CHECK(is_simply_connected(g));
  for (const auto& e : g.collapsed) CHECK(e.multiplicity == 1);
}

TEST_CASE("an e-region configuration off the chains is an isolated vertex") {
  const auto sys = carry::build_carry_system({2});
  Configuration x;  // all blank tape, void state
  x.state = StateSpace::kVoid;
  const auto g = component_graph(sys, x, 10);
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(is_simply_connected(g));
}

TEST_CASE("a small cap truncates the chain component and blocks the loop test") {
  const auto sys = carry::build_carry_system({2});
  const auto g = component_graph(sys, carry::initial_chain_configuration(sys, 1), 3);
  CHECK(g.truncated);
  CHECK(g.vertices.size() == 3);
  CHECK_THROWS_AS(is_simply_connected(g), std::invalid_argument);
}

TEST_CASE("a synthetic 2-cycle with labels t,t is not simply connected") {
  ComponentGraph g;
  Configuration a, b;
  a.state = StateSpace::kVoid;
  b.state = StateSpace::kCarry;
  g.vertices = {a, b};
  const auto t = GroupElement::shift(2, 1);
  g.edges.push_back({0, 1, t, "x"});
  g.edges.push_back({1, 0, t, "y"});
  CHECK_FALSE(is_simply_connected(g));
  // flipping one label to t^-1 makes the loop product trivial
  g.edges[1].label = t.inverse();
  CHECK(is_simply_connected(g));
}

TEST_SUITE_END();
