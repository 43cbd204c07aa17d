#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "specden/gf2.hpp"

namespace specden::tds {

// Tape alphabet: the additive group GF(2)^N. Symbol index doubles as the
// coordinate vector, so index 0 is the empty symbol "-" (zero vector) and
// index d+1 is the digit d, d = 0..D with D = 2^N - 2.
class Alphabet {
 public:
  explicit Alphabet(int bits);  // throws for bits < 1 or bits > gf2::kMaxDim

  int bits() const { return bits_; }
  int size() const { return 1 << bits_; }       // symbol count 2^N
  long largest_digit() const { return size() - 2; }  // D as a number
  long digit_count() const { return size() - 1; }    // digits 0..D

  static constexpr int kEmpty = 0;  // "-"
  int digit(long d) const;          // symbol index of digit d

  const std::string& name(int symbol) const { return names_[static_cast<std::size_t>(symbol)]; }
  int index_of(const std::string& name) const;  // throws on unknown name

  gf2::Vec vector_of(int symbol) const { return static_cast<gf2::Vec>(symbol); }
  int symbol_of(gf2::Vec v) const { return static_cast<int>(v); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int bits_;
  std::vector<std::string> names_;
};

// The four machine states: the group GF(2)^2 with named non-zero elements.
class StateSpace {
 public:
  static constexpr int kVoid = 0;
  static constexpr int kIncLastDigit = 1;
  static constexpr int kCarry = 2;
  static constexpr int kZeroPrevDigits = 3;
  static constexpr int kCount = 4;

  static const std::string& name(int state);
  static int index_of(const std::string& name);
  static gf2::Vec vector_of(int state) { return static_cast<gf2::Vec>(state); }
  static int state_of(gf2::Vec v) { return static_cast<int>(v); }
};

// Nonempty-or-empty subset of the alphabet's symbols, as a bitset over symbol
// indices. Closed under intersection and difference, so cylinder algebra
// stays exact.
class SymbolSet {
 public:
  SymbolSet() : universe_(0) {}
  explicit SymbolSet(int universe);
  static SymbolSet all(int universe);
  static SymbolSet single(int universe, int symbol);
  static SymbolSet all_but(int universe, int symbol);

  int universe() const { return universe_; }
  bool contains(int symbol) const;
  void insert(int symbol);
  int count() const;
  bool empty() const { return count() == 0; }
  bool is_all() const { return count() == universe_; }

  SymbolSet intersect(const SymbolSet& o) const;
  SymbolSet minus(const SymbolSet& o) const;
  bool subset_of(const SymbolSet& o) const;

  // Image under the symbol permutation induced by an alphabet automorphism.
  SymbolSet mapped(const gf2::Mat& m) const;

  std::vector<int> symbols() const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;
  friend std::strong_ordering operator<=>(const SymbolSet&, const SymbolSet&) = default;

 private:
  int universe_;
  std::vector<std::uint64_t> words_;
};

// Subset of the four machine states, as a 4-bit mask.
struct StateSet {
  std::uint8_t mask = 0;

  static StateSet all() { return {0xF}; }
  static StateSet single(int state) { return {static_cast<std::uint8_t>(1u << state)}; }
  bool contains(int state) const { return mask >> state & 1u; }
  int count() const;
  bool empty() const { return mask == 0; }
  bool is_all() const { return mask == 0xF; }
  StateSet intersect(StateSet o) const { return {static_cast<std::uint8_t>(mask & o.mask)}; }
  StateSet minus(StateSet o) const { return {static_cast<std::uint8_t>(mask & ~o.mask)}; }
  bool subset_of(StateSet o) const { return (mask & ~o.mask) == 0; }
  StateSet mapped(const gf2::Mat& m) const;

  friend bool operator==(StateSet, StateSet) = default;
  friend std::strong_ordering operator<=>(StateSet, StateSet) = default;
};

}  // namespace specden::tds
