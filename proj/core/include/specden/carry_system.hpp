#pragma once

#include <string>
#include <vector>

#include "specden/component_graph.hpp"
#include "specden/rational.hpp"
#include "specden/turing_system.hpp"

namespace specden::carry {

struct CarryParams {
  int bits = 2;  // N >= 2: digits 0..D with D = 2^N - 2 >= 2
};

// Which basis-completion rule picks the automorphism (x -> y). Verification
// results must not depend on the choice; kAlternate exists to test that.
enum class CompletionPolicy { kCanonical, kAlternate };

// The counting machine over digits 0..D. Rows, with k running over 0..D-1:
//   S1..S2  (k->k+1)                                 on [(k) -, inc-last-digit]
//   S3      (inc-last-digit->carry)                  on [(D) -, inc-last-digit]
//   S4      t^-1                                     on [(D), carry]
//   S5..S8  t (k->k+1)(carry->zero-prev-digits)      on [(k) !-, carry]
//   S9      t (D->0)                                 on [(D) !-, zero-prev-digits]
//   S10     (D->0)(zero-prev-digits->inc-last-digit) on [(D) -, zero-prev-digits]
// with I = [- (D), zero-prev-digits], A = [(-), carry], R = {}.
tds::TuringSystem build_carry_system(const CarryParams& p,
                                     CompletionPolicy policy = CompletionPolicy::kCanonical);

// The ten-row table view: row label -> labels of the instructions realizing
// it (ellipsis rows may be empty or merged for small D).
std::vector<std::pair<std::string, std::vector<std::string>>> instruction_groups(
    const tds::TuringSystem& sys);

// Resulting set gamma_i.X_i of each instruction, with its intersection
// verdict against the initial set: true for every row iff I n T_X(X) = {}.
struct ResultingSetRow {
  std::string label;
  std::string resulting;     // pretty form
  bool meets_initial = false;
};

struct InitialUnreachableReport {
  bool ok = false;
  std::vector<ResultingSetRow> rows;
};

InitialUnreachableReport verify_initial_unreachable(const tds::TuringSystem& sys);

// Pairwise disjointness of resulting sets over all distinct instruction
// pairs, brute force. `same_state_pairs` groups the pairs that cannot be
// separated by the resulting state alone (the interesting cases).
struct InterferencePair {
  std::string a, b;
  std::string state;  // shared resulting state, or "-" when states differ
};

struct InterferenceReport {
  bool ok = false;
  std::size_t pairs_checked = 0;
  std::vector<InterferencePair> offending;
  std::vector<InterferencePair> same_state_pairs;  // verified disjoint by symbols
};

InterferenceReport verify_no_interference(const tds::TuringSystem& sys);

// Canonical start of the j-digit chain: [- (D) D^{j-1} -, zero-prev-digits].
tds::Cylinder initial_chain_cylinder(const tds::TuringSystem& sys, int j);
tds::Configuration initial_chain_configuration(const tds::TuringSystem& sys, int j);

// Full trajectory of the canonical start until the accepting set; aborts
// after 10 (D+1)^j (j+2) steps (never reached for a valid system).
std::vector<tds::Configuration> trace_chain(const tds::TuringSystem& sys, int j);

struct ChainRecord {
  int j = 0;
  long length = 0;                       // l_j
  std::vector<tds::Cylinder> cylinders;  // trajectory, final accepting cylinder included
  Rational measure;                      // l_j * mu(start cylinder)
  bool accepted = false;
  bool length_bound_ok = false;    // l_j >= (D+1)^j
  bool measure_bound_ok = false;   // mu >= (1/4) ((D+1)/(D+2))^j (D+2)^-2
  bool length_ceiling_ok = false;  // l_j <= (j+2)(D+1)^{j+1}, reported only
};

struct ChainCensus {
  std::vector<ChainRecord> records;
  bool cross_disjoint = false;  // all stored cylinders pairwise disjoint
};

// Exact census for j = 1..jmax via cylinder-level iteration. Throws when a
// trajectory cylinder straddles instruction domains (this would falsify the
// construction) or when sum l_j would exceed 10^6.
ChainCensus chain_census(const tds::TuringSystem& sys, int jmax);

// Growth constants: C = (4 (D+2))^-2 and the least admissible decay exponent
// d_threshold = log(1 + 1/(D+1)) / log(D+1).
struct GrowthConstants {
  Rational C;
  double d_threshold = 0;
};

GrowthConstants growth_constants(const CarryParams& p);

// Exact test of d > d_threshold: (D+1)^{p+q} > (D+2)^q for d = p/q.
bool delta_admissible(const CarryParams& p, const Rational& d);

// Numeric check that chains of length >= (D+1)^j carry measure > C / (D+1)^{jd}
// for every j <= jmax covered by the census.
std::vector<bool> growth_lower_bounds(const CarryParams& p, const ChainCensus& census, double d);

}  // namespace specden::carry
