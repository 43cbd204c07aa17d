#pragma once

#include <compare>
#include <map>
#include <string>

#include "specden/alphabet.hpp"

namespace specden::tds {

// Finite-support point of M^Z x S: every position not present in tape holds
// the empty symbol. Normalized (no explicit "-" entries), so map equality is
// point equality.
struct Configuration {
  std::map<int, int> tape;  // position -> symbol index, values never kEmpty
  int state = StateSpace::kVoid;

  int symbol_at(int pos) const {
    const auto it = tape.find(pos);
    return it == tape.end() ? Alphabet::kEmpty : it->second;
  }

  void set(int pos, int symbol) {
    if (symbol == Alphabet::kEmpty)
      tape.erase(pos);
    else
      tape[pos] = symbol;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend std::strong_ordering operator<=>(const Configuration&, const Configuration&) = default;

  // e.g. "(- [2] - , carry)"; window spans the support plus one guard cell
  std::string pretty(const Alphabet& a) const;
  std::string canonical_json(const Alphabet& a) const;
};

}  // namespace specden::tds
