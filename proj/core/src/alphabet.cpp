#include "specden/alphabet.hpp"

#include <bit>
#include <stdexcept>

namespace specden::tds {

Alphabet::Alphabet(int bits) : bits_(bits) {
  if (bits < 1 || bits > gf2::kMaxDim) throw std::invalid_argument("Alphabet: bits out of range");
  names_.reserve(static_cast<std::size_t>(size()));
  names_.push_back("-");
  for (long d = 0; d + 1 < size(); ++d) names_.push_back(std::to_string(d));
}

int Alphabet::digit(long d) const {
  if (d < 0 || d > largest_digit()) throw std::out_of_range("Alphabet::digit");
  return static_cast<int>(d) + 1;
}

int Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::out_of_range("Alphabet: unknown symbol " + name);
}

const std::string& StateSpace::name(int state) {
  static const std::string names[kCount] = {"void", "inc-last-digit", "carry", "zero-prev-digits"};
  if (state < 0 || state >= kCount) throw std::out_of_range("StateSpace::name");
  return names[state];
}

int StateSpace::index_of(const std::string& name) {
  for (int s = 0; s < kCount; ++s)
    if (StateSpace::name(s) == name) return s;
  throw std::out_of_range("StateSpace: unknown state " + name);
}

SymbolSet::SymbolSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
  if (universe < 1) throw std::invalid_argument("SymbolSet: empty universe");
}

SymbolSet SymbolSet::all(int universe) {
  SymbolSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

SymbolSet SymbolSet::single(int universe, int symbol) {
  SymbolSet s(universe);
  s.insert(symbol);
  return s;
}

SymbolSet SymbolSet::all_but(int universe, int symbol) {
  SymbolSet s = all(universe);
  s.words_[static_cast<std::size_t>(symbol) / 64] &= ~(std::uint64_t{1} << (symbol % 64));
  return s;
}

bool SymbolSet::contains(int symbol) const {
  if (symbol < 0 || symbol >= universe_) return false;
  return words_[static_cast<std::size_t>(symbol) / 64] >> (symbol % 64) & 1u;
}

void SymbolSet::insert(int symbol) {
  if (symbol < 0 || symbol >= universe_) throw std::out_of_range("SymbolSet::insert");
  words_[static_cast<std::size_t>(symbol) / 64] |= std::uint64_t{1} << (symbol % 64);
}

int SymbolSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

SymbolSet SymbolSet::intersect(const SymbolSet& o) const {
  if (universe_ != o.universe_) throw std::invalid_argument("SymbolSet: universe mismatch");
  SymbolSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

SymbolSet SymbolSet::minus(const SymbolSet& o) const {
  if (universe_ != o.universe_) throw std::invalid_argument("SymbolSet: universe mismatch");
  SymbolSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

bool SymbolSet::subset_of(const SymbolSet& o) const {
  if (universe_ != o.universe_) throw std::invalid_argument("SymbolSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  return true;
}

SymbolSet SymbolSet::mapped(const gf2::Mat& m) const {
  SymbolSet r(universe_);
  for (int s = 0; s < universe_; ++s)
    if (contains(s)) r.insert(static_cast<int>(m.apply(static_cast<gf2::Vec>(s))));
  return r;
}

std::vector<int> SymbolSet::symbols() const {
  std::vector<int> out;
  for (int s = 0; s < universe_; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

int StateSet::count() const { return std::popcount(static_cast<unsigned>(mask)); }

StateSet StateSet::mapped(const gf2::Mat& m) const {
  StateSet r;
  for (int s = 0; s < StateSpace::kCount; ++s)
    if (contains(s)) r.mask |= static_cast<std::uint8_t>(1u << m.apply(static_cast<gf2::Vec>(s)));
  return r;
}

}  // namespace specden::tds
