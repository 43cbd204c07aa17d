#pragma once

#include <string>
#include <vector>

#include "specden/carry_system.hpp"
#include "specden/tridiagonal.hpp"

namespace specden::estimator {

// The operator 5 + 2(T + T*) - 4 chi_I restricted to one computational
// chain, assembled edge by edge from the instructions that drive the chain.
// For a chain of length l this must equal chain_adjacency(l) entrywise after
// orienting the line from the initial vertex; assembly throws otherwise.
struct AssembledOperator {
  spectra::TridiagonalQ matrix;
  std::vector<std::string> edge_instructions;  // length l-1, step i -> i+1
  std::size_t initial_vertex = 0;              // index carrying the -4 chi_I term
  int j = 0;
};

AssembledOperator assemble_chain_operator(const tds::TuringSystem& sys,
                                          const carry::ChainRecord& chain);

// Certified lower bound for mu((0, eps)): the chain components are finite
// simply-connected lines, so the component-averaged eigenvalue count
//   sum_j mu(Y(j)) * #{eig(chain_adjacency(l_j)) in (0, eps)} / l_j
// is a lower bound for the spectral measure. Exact rationals throughout.
Rational mu2_lower_bound(const carry::ChainCensus& census, const Rational& eps);

// One certified row at eps_j = (5^{-1/3})^{l_j}. Counts are taken at the
// rational proxy 5^{-ceil(l_j/3)} <= eps_j, so `certified` is a valid lower
// bound at eps_j itself. `exact_ok` is the zero-tolerance rational comparison
//   certified * |log eps_j|^{1+d} >= C (log 5 / 3)^{1+d}
// (equivalently certified >= C / l_j^{1+d}), decided by integer powers.
struct BoundRow {
  int j = 0;
  long l = 0;
  double epsilon_float = 0;    // binary64 rendering of 5^{-l/3}
  std::string epsilon_exact;   // "5^(-l/3)"
  Rational certified;
  double reference = 0;        // C (log5/3)^{1+d} / |log eps|^{1+d}
  double ratio = 0;            // certified / reference (display only)
  bool exact_ok = false;
  Rational certified_cummax;   // max over rows so far (mu is monotone in eps)
  // gap extension: certified(eps_{j+1}) * R_j * l_j^{1+d} >= C with
  // R_j = l_{j+1}/l_j the observed length ratio (last row: not applicable)
  double observed_ratio = 0;
  bool gap_ok = true;
};

struct BoundTable {
  Rational C;            // (4(D+2))^-2
  Rational delta;
  double d_threshold = 0;
  std::vector<BoundRow> rows;
  bool all_ok = false;   // every exact_ok (and gap_ok where applicable)
};

// Throws std::invalid_argument when delta <= d_threshold (exact test).
BoundTable bound_table(const tds::TuringSystem& sys, const carry::ChainCensus& census,
                       const Rational& delta);

// Human-readable rendering of S = 5 + 2(T+T*) - 4*chi_I with T expanded over
// the instruction table, plus the underlying group. Documentation artifact.
std::string group_ring_text(const tds::TuringSystem& sys);

}  // namespace specden::estimator
