#include "specden/carry_system.hpp"

#include <cmath>
#include <stdexcept>

namespace specden::carry {

using tds::Alphabet;
using tds::Configuration;
using tds::Cylinder;
using tds::CylinderUnion;
using tds::GroupElement;
using tds::Instruction;
using tds::StateSet;
using tds::StateSpace;
using tds::SymbolSet;
using tds::TuringSystem;

namespace {

gf2::Mat completion(CompletionPolicy policy, gf2::Vec x, gf2::Vec y, int n) {
  return policy == CompletionPolicy::kCanonical ? gf2::completion_sending(x, y, n)
                                                : gf2::completion_sending_alt(x, y, n);
}

}  // namespace

TuringSystem build_carry_system(const CarryParams& p, CompletionPolicy policy) {
  if (p.bits < 2) throw std::invalid_argument("build_carry_system: need bits >= 2");
  TuringSystem sys{Alphabet(p.bits)};
  const Alphabet& a = sys.alphabet;
  const int nsym = a.size();
  const long D = a.largest_digit();

  auto digit_to_digit = [&](long from, long to) {
    return GroupElement::local_auto(
        p.bits, 0, completion(policy, a.vector_of(a.digit(from)), a.vector_of(a.digit(to)), p.bits));
  };
  auto state_to_state = [&](int from, int to) {
    return GroupElement::state_auto(
        p.bits, completion(policy, StateSpace::vector_of(from), StateSpace::vector_of(to), 2));
  };
  auto domain = [&](const SymbolSet& at0, const SymbolSet& at1, int state) {
    return CylinderUnion(Cylinder::whole(nsym)
                             .constrained(0, at0)
                             .constrained(1, at1)
                             .with_states(StateSet::single(state)));
  };
  const SymbolSet any = SymbolSet::all(nsym);
  const SymbolSet blank = SymbolSet::single(nsym, Alphabet::kEmpty);
  const SymbolSet nonblank = SymbolSet::all_but(nsym, Alphabet::kEmpty);
  auto one = [&](long d) { return SymbolSet::single(nsym, a.digit(d)); };
  const GroupElement t = GroupElement::shift(p.bits, 1);

  // S1..S2: (k->k+1) on [(k) -, inc-last-digit]
  for (long k = 0; k < D; ++k) {
    const std::string label = k == 0 ? "S1" : k == D - 1 ? "S2" : "S1." + std::to_string(k);
    sys.instructions.push_back(
        {label, {}, domain(one(k), blank, StateSpace::kIncLastDigit), digit_to_digit(k, k + 1)});
  }
  // S3
  sys.instructions.push_back({"S3",
                              {},
                              domain(one(D), blank, StateSpace::kIncLastDigit),
                              state_to_state(StateSpace::kIncLastDigit, StateSpace::kCarry)});
  // S4: t^-1 on [(D), carry]
  sys.instructions.push_back({"S4",
                              {},
                              domain(one(D), any, StateSpace::kCarry),
                              GroupElement::shift(p.bits, -1)});
  // S5..S8: t (k->k+1)(carry->zero-prev-digits) on [(k) !-, carry]
  for (long k = D - 1; k >= 0; --k) {
    std::string label;
    std::vector<std::string> aliases;
    if (k == D - 1) {
      label = "S5";
    } else if (k == 0) {
      label = "S8";
      if (k == D - 2) aliases.push_back("S6");  // rows coincide when D == 2
    } else if (k == D - 2) {
      label = "S6";
    } else {
      label = "S7." + std::to_string(k);
    }
    sys.instructions.push_back(
        {label, aliases, domain(one(k), nonblank, StateSpace::kCarry),
         compose(t, compose(digit_to_digit(k, k + 1),
                            state_to_state(StateSpace::kCarry, StateSpace::kZeroPrevDigits)))});
  }
  // S9: t (D->0) on [(D) !-, zero-prev-digits]
  sys.instructions.push_back({"S9",
                              {},
                              domain(one(D), nonblank, StateSpace::kZeroPrevDigits),
                              compose(t, digit_to_digit(D, 0))});
  // S10: (D->0)(zero-prev-digits->inc-last-digit) on [(D) -, zero-prev-digits]
  sys.instructions.push_back(
      {"S10",
       {},
       domain(one(D), blank, StateSpace::kZeroPrevDigits),
       compose(digit_to_digit(D, 0),
               state_to_state(StateSpace::kZeroPrevDigits, StateSpace::kIncLastDigit))});

  sys.initial = CylinderUnion(Cylinder::whole(nsym)
                                  .constrained(-1, blank)
                                  .constrained(0, one(D))
                                  .with_states(StateSet::single(StateSpace::kZeroPrevDigits)));
  sys.accepting = CylinderUnion(
      Cylinder::whole(nsym).constrained(0, blank).with_states(StateSet::single(StateSpace::kCarry)));
  sys.rejecting = CylinderUnion();
  return sys;
}

std::vector<std::pair<std::string, std::vector<std::string>>> instruction_groups(
    const TuringSystem& sys) {
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  const char* rows[] = {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10"};
  for (const char* row : rows) {
    std::vector<std::string> members;
    for (const auto& ins : sys.instructions) {
      const bool prefix_of_row = ins.label.rfind(std::string(row) + ".", 0) == 0;
      bool aliased = false;
      for (const auto& al : ins.aliases) aliased = aliased || al == row;
      if (ins.label == row || prefix_of_row || aliased) members.push_back(ins.label);
    }
    groups.emplace_back(row, std::move(members));
  }
  return groups;
}

InitialUnreachableReport verify_initial_unreachable(const TuringSystem& sys) {
  InitialUnreachableReport rep;
  rep.ok = true;
  for (const auto& ins : sys.instructions) {
    if (ins.element.is_identity()) continue;
    CylinderUnion image;
    for (const auto& c : ins.domain.parts()) image.add(ins.element.apply(c));
    ResultingSetRow row;
    row.label = ins.label;
    row.resulting = image.pretty(sys.alphabet);
    row.meets_initial = image.intersects(sys.initial);
    rep.ok = rep.ok && !row.meets_initial;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

InterferenceReport verify_no_interference(const TuringSystem& sys) {
  InterferenceReport rep;
  rep.ok = true;
  std::vector<CylinderUnion> images;
  std::vector<const Instruction*> moving;
  for (const auto& ins : sys.instructions) {
    if (ins.element.is_identity()) continue;
    CylinderUnion image;
    for (const auto& c : ins.domain.parts()) image.add(ins.element.apply(c));
    images.push_back(std::move(image));
    moving.push_back(&ins);
  }
  auto result_states = [](const CylinderUnion& u) {
    StateSet s{0};
    for (const auto& c : u.parts()) s.mask |= c.states().mask;
    return s;
  };
  auto state_names = [](StateSet s) {
    std::string names;
    for (int i = 0; i < StateSpace::kCount; ++i)
      if (s.contains(i)) names += (names.empty() ? "" : "|") + StateSpace::name(i);
    return names.empty() ? std::string("-") : names;
  };
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t k = i + 1; k < images.size(); ++k) {
      ++rep.pairs_checked;
      const StateSet shared = result_states(images[i]).intersect(result_states(images[k]));
      if (images[i].intersects(images[k])) {
        rep.ok = false;
        rep.offending.push_back({moving[i]->label, moving[k]->label, state_names(shared)});
      } else if (!shared.empty()) {
        rep.same_state_pairs.push_back({moving[i]->label, moving[k]->label, state_names(shared)});
      }
    }
  }
  return rep;
}

Cylinder initial_chain_cylinder(const TuringSystem& sys, int j) {
  if (j < 1) throw std::invalid_argument("initial_chain_cylinder: j >= 1");
  const int nsym = sys.nsymbols();
  const SymbolSet blank = SymbolSet::single(nsym, Alphabet::kEmpty);
  const SymbolSet big = SymbolSet::single(nsym, sys.alphabet.digit(sys.alphabet.largest_digit()));
  Cylinder c = Cylinder::whole(nsym)
                   .constrained(-1, blank)
                   .constrained(j, blank)
                   .with_states(StateSet::single(StateSpace::kZeroPrevDigits));
  for (int p = 0; p < j; ++p) c = c.constrained(p, big);
  return c;
}

Configuration initial_chain_configuration(const TuringSystem& sys, int j) {
  if (j < 1) throw std::invalid_argument("initial_chain_configuration: j >= 1");
  Configuration x;
  x.state = StateSpace::kZeroPrevDigits;
  for (int p = 0; p < j; ++p) x.set(p, sys.alphabet.digit(sys.alphabet.largest_digit()));
  return x;
}

std::vector<Configuration> trace_chain(const TuringSystem& sys, int j) {
  const long D = sys.alphabet.largest_digit();
  const double guard_f = 10.0 * std::pow(static_cast<double>(D + 1), j) * (j + 2);
  const long guard = guard_f > 1e9 ? 1000000000L : static_cast<long>(guard_f);
  std::vector<Configuration> chain{initial_chain_configuration(sys, j)};
  while (!sys.accepting.contains(chain.back())) {
    Configuration next = tds::step(sys, chain.back());
    if (next == chain.back()) throw std::runtime_error("trace_chain: stalled outside accepting set");
    chain.push_back(std::move(next));
    if (static_cast<long>(chain.size()) > guard) throw std::runtime_error("trace_chain: guard exceeded");
  }
  return chain;
}

ChainCensus chain_census(const TuringSystem& sys, int jmax) {
  if (jmax < 1) throw std::invalid_argument("chain_census: jmax >= 1");
  ChainCensus census;
  const long D = sys.alphabet.largest_digit();
  const Rational cell(1, sys.nsymbols());
  long total = 0;
  for (int j = 1; j <= jmax; ++j) {
    ChainRecord rec;
    rec.j = j;
    Cylinder c = initial_chain_cylinder(sys, j);
    const Rational start_measure = c.measure();
    rec.cylinders.push_back(c);
    while (!sys.accepting.contains_cylinder(rec.cylinders.back())) {
      auto out = tds::step_cylinder(sys, rec.cylinders.back());
      if (std::holds_alternative<tds::SplitError>(out)) {
        std::string offs;
        for (int o : std::get<tds::SplitError>(out).offsets) offs += " " + std::to_string(o);
        throw std::runtime_error("chain_census: trajectory cylinder split at offsets" + offs);
      }
      rec.cylinders.push_back(std::get<Cylinder>(std::move(out)));
      if (++total > 1000000) throw std::runtime_error("chain_census: > 1e6 cylinders, raise the guard consciously");
    }
    rec.length = static_cast<long>(rec.cylinders.size());
    rec.accepted = true;
    rec.measure = Rational(rec.length) * start_measure;

    const Int growth = pow_int(Int(D + 1), static_cast<std::uint64_t>(j));
    rec.length_bound_ok = Int(rec.length) >= growth;
    rec.length_ceiling_ok = Int(rec.length) <= Int(j + 2) * growth * Int(D + 1);
    const Rational paper_bound = Rational(1, 4) *
                                 pow_rational(Rational(D + 1, D + 2), j) *
                                 Rational(1, (D + 2) * (D + 2));
    rec.measure_bound_ok = rec.measure >= paper_bound;
    census.records.push_back(std::move(rec));
  }
  census.cross_disjoint = true;
  std::vector<const Cylinder*> all;
  for (const auto& rec : census.records)
    for (const auto& c : rec.cylinders) all.push_back(&c);
  for (std::size_t i = 0; i < all.size() && census.cross_disjoint; ++i)
    for (std::size_t k = i + 1; k < all.size(); ++k)
      if (!all[i]->disjoint_from(*all[k])) {
        census.cross_disjoint = false;
        break;
      }
  return census;
}

GrowthConstants growth_constants(const CarryParams& p) {
  if (p.bits < 2) throw std::invalid_argument("growth_constants: need bits >= 2");
  const long D = (1L << p.bits) - 2;
  GrowthConstants g;
  g.C = Rational(1, 16 * (D + 2) * (D + 2));
  g.d_threshold = std::log1p(1.0 / static_cast<double>(D + 1)) / std::log(static_cast<double>(D + 1));
  return g;
}

bool delta_admissible(const CarryParams& p, const Rational& d) {
  if (d <= 0) return false;
  const long D = (1L << p.bits) - 2;
  // d > log((D+2)/(D+1)) / log(D+1)  <=>  (D+1)^{p+q} > (D+2)^q, d = p/q
  const Int num = numerator(d), den = denominator(d);
  const std::uint64_t pq = (num + den).convert_to<std::uint64_t>();
  const std::uint64_t q = den.convert_to<std::uint64_t>();
  return pow_int(Int(D + 1), pq) > pow_int(Int(D + 2), q);
}

std::vector<bool> growth_lower_bounds(const CarryParams& p, const ChainCensus& census, double d) {
  const long D = (1L << p.bits) - 2;
  const GrowthConstants g = growth_constants(p);
  std::vector<bool> out;
  for (const auto& rec : census.records) {
    const double l = std::pow(static_cast<double>(D + 1), rec.j);
    // measure of all censused chains at least that long
    Rational mass(0);
    for (const auto& other : census.records)
      if (static_cast<double>(other.length) >= l) mass += other.measure;
    out.push_back(to_double(mass) > to_double(g.C) / std::pow(l, d));
  }
  return out;
}

}  // namespace specden::carry
