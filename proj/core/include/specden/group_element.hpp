#pragma once

#include <compare>
#include <map>
#include <string>

#include "specden/cylinder.hpp"
#include "specden/configuration.hpp"
#include "specden/gf2.hpp"

namespace specden::tds {

// Element of (Aut(M) wr Z) x Aut(S) in normal form: a shift k, finitely many
// non-identity tape automorphisms indexed by position, and a state
// automorphism. The action on points is
//
//   (g.m)_i = phi_i(m_{i+k}),   state' = psi(state),
//
// so the pure shift t (k = 1) satisfies t.(x [y], s) = (x [y], s) with the
// head moving one cell to the right along the tape.
class GroupElement {
 public:
  static GroupElement identity(int bits);
  static GroupElement shift(int bits, int k);
  static GroupElement local_auto(int bits, int pos, const gf2::Mat& m);
  static GroupElement state_auto(int bits, const gf2::Mat& m);

  int bits() const { return bits_; }
  int shift_amount() const { return shift_; }
  const std::map<int, gf2::Mat>& local_autos() const { return locals_; }
  const gf2::Mat& state_matrix() const { return state_; }

  bool is_identity() const;
  GroupElement inverse() const;

  Configuration apply(const Configuration& x) const;
  Cylinder apply(const Cylinder& c) const;  // measure-preserving image

  friend GroupElement compose(const GroupElement& second, const GroupElement& first);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;

  // e.g. "t (1->2)@0 (carry->zero-prev-digits)" rendering matrices by their
  // action on the pinned symbol when one-line, full column list otherwise
  std::string pretty(const Alphabet& a) const;

 private:
  GroupElement(int bits, int shift, const gf2::Mat& state) : bits_(bits), shift_(shift), state_(state) {}
  void prune();  // drop identity local autos (normal form)

  int bits_;
  int shift_;
  std::map<int, gf2::Mat> locals_;
  gf2::Mat state_;
};

}  // namespace specden::tds
