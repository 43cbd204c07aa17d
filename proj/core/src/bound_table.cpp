#include "specden/bound_table.hpp"

#include <cmath>
#include <stdexcept>

namespace specden::estimator {

using carry::ChainCensus;
using carry::ChainRecord;
using spectra::TridiagonalQ;

AssembledOperator assemble_chain_operator(const tds::TuringSystem& sys, const ChainRecord& chain) {
  AssembledOperator out;
  out.j = chain.j;
  const std::size_t l = chain.cylinders.size();
  if (l == 0) throw std::invalid_argument("assemble_chain_operator: empty chain");

  // Count chi_I support among the chain cylinders; (C) forces exactly the
  // first one.
  std::size_t initial_hits = 0;
  for (std::size_t i = 0; i < l; ++i)
    if (sys.initial.intersects(chain.cylinders[i])) {
      if (!sys.initial.contains_cylinder(chain.cylinders[i]))
        throw std::runtime_error("assemble_chain_operator: chain cylinder straddles the initial set");
      if (i != 0) throw std::runtime_error("assemble_chain_operator: chi_I hits a non-initial vertex");
      ++initial_hits;
    }
  if (initial_hits != 1)
    throw std::runtime_error("assemble_chain_operator: chi_I support is not a single vertex");
  out.initial_vertex = 0;

  // Walk the chain; each consecutive pair must be driven by one instruction.
  out.matrix.diag.assign(l, Rational(5));
  out.matrix.off.assign(l - 1, Rational(0));
  out.matrix.diag[0] = Rational(5) - Rational(4);  // -4 chi_I at the initial vertex
  for (std::size_t i = 0; i + 1 < l; ++i) {
    const tds::Instruction* driver = nullptr;
    for (const auto& ins : sys.instructions) {
      if (ins.element.is_identity()) continue;
      if (!ins.domain.contains_cylinder(chain.cylinders[i])) continue;
      if (!(ins.element.apply(chain.cylinders[i]) == chain.cylinders[i + 1]))
        throw std::runtime_error("assemble_chain_operator: instruction image mismatch");
      driver = &ins;
      break;
    }
    if (driver == nullptr)
      throw std::runtime_error("assemble_chain_operator: no instruction drives step " +
                               std::to_string(i));
    out.edge_instructions.push_back(driver->label);
    out.matrix.off[i] = Rational(2);  // 2(T + T*) on the line edge
  }

  const TridiagonalQ expected = spectra::chain_adjacency(l);
  if (!(out.matrix.diag == expected.diag && out.matrix.off == expected.off))
    throw std::runtime_error("assemble_chain_operator: operator differs from chain_adjacency");
  return out;
}

Rational mu2_lower_bound(const ChainCensus& census, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("mu2_lower_bound: eps > 0");
  Rational bound(0);
  for (const auto& rec : census.records) {
    const TridiagonalQ t = spectra::chain_adjacency(static_cast<std::size_t>(rec.length));
    const std::int64_t count = spectra::count_in_open(t, Rational(0), eps);
    if (count == 0) continue;
    bound += rec.measure * Rational(count, rec.length);
  }
  return bound;
}

namespace {

// certified * l^{1+d} >= C, all rational, decided by integer powers:
// (certified/C)^q * l^{p+q} >= 1 with d = p/q.
bool exact_row_check(const Rational& certified, const Rational& C, long l, const Rational& d) {
  const std::uint64_t p = numerator(d).convert_to<std::uint64_t>();
  const std::uint64_t q = denominator(d).convert_to<std::uint64_t>();
  const Rational lhs =
      pow_rational(certified / C, static_cast<std::int64_t>(q)) * pow_rational(Rational(l), static_cast<std::int64_t>(p + q));
  return lhs >= 1;
}

// gap extension: certified_next * R * l^{1+d} >= C with R = l_next / l
bool exact_gap_check(const Rational& certified_next, const Rational& C, long l, long l_next,
                     const Rational& d) {
  return exact_row_check(certified_next * Rational(l_next, l), C, l, d);
}

}  // namespace

BoundTable bound_table(const tds::TuringSystem& sys, const ChainCensus& census,
                       const Rational& delta) {
  const carry::CarryParams params{sys.alphabet.bits()};
  const carry::GrowthConstants gc = carry::growth_constants(params);
  if (!carry::delta_admissible(params, delta)) {
    throw std::invalid_argument("bound_table: delta " + fraction_string(delta) +
                                " is not above the admissible threshold " +
                                std::to_string(gc.d_threshold));
  }
  BoundTable table;
  table.C = gc.C;
  table.delta = delta;
  table.d_threshold = gc.d_threshold;
  table.all_ok = true;

  const double log5_over_3 = std::log(5.0) / 3.0;
  const double dd = to_double(delta);
  Rational cummax(0);
  for (const auto& rec : census.records) {
    BoundRow row;
    row.j = rec.j;
    row.l = rec.length;
    row.epsilon_float = std::exp(-static_cast<double>(rec.length) * log5_over_3);
    row.epsilon_exact = "5^(-" + std::to_string(rec.length) + "/3)";
    // counts at the rational proxy below eps_j keep the bound certified
    const Rational proxy = pow_rational(Rational(1, 5), (rec.length + 2) / 3);
    row.certified = mu2_lower_bound(census, proxy);
    const double abslog = static_cast<double>(rec.length) * log5_over_3;
    row.reference = to_double(table.C) * std::pow(log5_over_3, 1.0 + dd) / std::pow(abslog, 1.0 + dd);
    row.ratio = to_double(row.certified) / row.reference;
    row.exact_ok = exact_row_check(row.certified, table.C, rec.length, delta);
    cummax = std::max(cummax, row.certified);
    row.certified_cummax = cummax;
    table.all_ok = table.all_ok && row.exact_ok;
    table.rows.push_back(std::move(row));
  }
  // gap rows need the next chain's certified value
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    auto& row = table.rows[i];
    const auto& next = table.rows[i + 1];
    row.observed_ratio = static_cast<double>(next.l) / static_cast<double>(row.l);
    row.gap_ok = exact_gap_check(next.certified, table.C, row.l, next.l, delta);
    table.all_ok = table.all_ok && row.gap_ok;
  }
  return table;
}

std::string group_ring_text(const tds::TuringSystem& sys) {
  const int n = sys.alphabet.bits();
  std::string out;
  out += "S = 5 + 2(T+T*) - 4*chi_I\n";
  out += "T = sum over the instruction table of gamma_i * chi_{X_i}:\n";
  for (const auto& ins : sys.instructions) {
    std::string label = ins.label;
    for (const auto& a : ins.aliases) label += "=" + a;
    out += "  " + label + std::string(label.size() < 8 ? 8 - label.size() : 1, ' ') +
           ins.element.pretty(sys.alphabet) + "   on   " + ins.domain.pretty(sys.alphabet) + "\n";
  }
  out += "chi_I on I = " + sys.initial.pretty(sys.alphabet) + "\n";
  out += "accepting A = " + sys.accepting.pretty(sys.alphabet) + ", rejecting R = {}\n";
  const std::string zn = "(Z_2)^" + std::to_string(n);
  out += "group: [ (+)_Z " + zn + " x| (Aut(" + zn + ") wr Z) ] x ( (Z_2)^2 x| Aut((Z_2)^2) )\n";
  out += "(x| semidirect, wr wreath; S lives in the integral group ring of this group)\n";
  return out;
}

}  // namespace specden::estimator
