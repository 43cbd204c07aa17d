#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace specden::gf2 {

// A vector over GF(2)^n, n <= 20; bit i is the i-th coordinate.
using Vec = std::uint32_t;

constexpr int kMaxDim = 20;

// Square invertible-or-not matrix over GF(2), stored as column bitmasks.
class Mat {
 public:
  explicit Mat(int n);
  static Mat identity(int n);

  int dim() const { return n_; }
  Vec column(int j) const { return cols_[static_cast<std::size_t>(j)]; }
  void set_column(int j, Vec v) { cols_[static_cast<std::size_t>(j)] = v; }

  // A*x: xor of the columns selected by the bits of x.
  Vec apply(Vec x) const;

  Mat operator*(const Mat& rhs) const;  // this * rhs (rhs applied first)
  bool is_identity() const;
  bool invertible() const;
  Mat inverse() const;  // throws std::domain_error if singular

  friend bool operator==(const Mat&, const Mat&) = default;
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b);

 private:
  int n_;
  std::vector<Vec> cols_;
};

// Deterministic basis-completion automorphism sending x to y: extend {x} and
// {y} to bases by greedily appending standard basis vectors in index order,
// then map basis to basis. Throws std::invalid_argument when x or y is zero
// (automorphisms fix zero).
Mat completion_sending(Vec x, Vec y, int n);

// Same contract, with the standard basis scanned in reverse order. Used to
// check that verification results do not depend on the completion choice.
Mat completion_sending_alt(Vec x, Vec y, int n);

}  // namespace specden::gf2
