#include "specden/gf2.hpp"

#include <stdexcept>

namespace specden::gf2 {

Mat::Mat(int n) : n_(n), cols_(static_cast<std::size_t>(n), 0u) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("gf2::Mat: dimension out of range");
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int j = 0; j < n; ++j) m.cols_[static_cast<std::size_t>(j)] = Vec{1} << j;
  return m;
}

Vec Mat::apply(Vec x) const {
  Vec y = 0;
  for (int j = 0; j < n_; ++j)
    if (x >> j & 1u) y ^= cols_[static_cast<std::size_t>(j)];
  return y;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("gf2::Mat: dimension mismatch");
  Mat out(n_);
  for (int j = 0; j < n_; ++j) out.cols_[static_cast<std::size_t>(j)] = apply(rhs.cols_[static_cast<std::size_t>(j)]);
  return out;
}

bool Mat::is_identity() const { return *this == identity(n_); }

namespace {

// Gauss-Jordan on [A | B]; returns false when A is singular.
bool solve_inverse(const Mat& a, Mat* out) {
  const int n = a.dim();
  std::vector<Vec> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
  // row-major bitmasks
  for (int i = 0; i < n; ++i) {
    Vec row = 0;
    for (int j = 0; j < n; ++j)
      if (a.column(j) >> i & 1u) row |= Vec{1} << j;
    left[static_cast<std::size_t>(i)] = row;
    right[static_cast<std::size_t>(i)] = Vec{1} << i;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (left[static_cast<std::size_t>(r)] >> col & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(left[static_cast<std::size_t>(pivot)], left[static_cast<std::size_t>(col)]);
    std::swap(right[static_cast<std::size_t>(pivot)], right[static_cast<std::size_t>(col)]);
    for (int r = 0; r < n; ++r)
      if (r != col && (left[static_cast<std::size_t>(r)] >> col & 1u)) {
        left[static_cast<std::size_t>(r)] ^= left[static_cast<std::size_t>(col)];
        right[static_cast<std::size_t>(r)] ^= right[static_cast<std::size_t>(col)];
      }
  }
  if (out != nullptr) {
    Mat inv(n);
    for (int j = 0; j < n; ++j) {
      Vec colv = 0;
      for (int i = 0; i < n; ++i)
        if (right[static_cast<std::size_t>(i)] >> j & 1u) colv |= Vec{1} << i;
      inv.set_column(j, colv);
    }
    *out = inv;
  }
  return true;
}

}  // namespace

bool Mat::invertible() const { return solve_inverse(*this, nullptr); }

Mat Mat::inverse() const {
  Mat out(n_);
  if (!solve_inverse(*this, &out)) throw std::domain_error("gf2::Mat: singular");
  return out;
}

std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.cols_ <=> b.cols_;
}

namespace {

Mat basis_completion(Vec x, int n, bool reverse) {
  std::vector<Vec> basis{x};
  std::vector<Vec> reduced{x};  // row-echelon copies for the independence test
  auto independent = [&](Vec v) {
    for (Vec r : reduced) {
      // eliminate the top bit of r from v
      Vec top = r;
      int hi = 31;
      while (hi >= 0 && !(top >> hi & 1u)) --hi;
      if (hi >= 0 && (v >> hi & 1u)) v ^= r;
    }
    return v != 0;
  };
  auto reduce_insert = [&](Vec v) {
    for (Vec r : reduced) {
      int hi = 31;
      while (hi >= 0 && !(r >> hi & 1u)) --hi;
      if (hi >= 0 && (v >> hi & 1u)) v ^= r;
    }
    reduced.push_back(v);
  };
  for (int step = 0; step < n && static_cast<int>(basis.size()) < n; ++step) {
    const int j = reverse ? n - 1 - step : step;
    const Vec e = Vec{1} << j;
    if (independent(e)) {
      basis.push_back(e);
      reduce_insert(e);
    }
  }
  Mat m(n);
  for (int j = 0; j < n; ++j) m.set_column(j, basis[static_cast<std::size_t>(j)]);
  return m;
}

Mat completion_impl(Vec x, Vec y, int n, bool reverse) {
  const Vec mask = n == 32 ? ~Vec{0} : (Vec{1} << n) - 1;
  if ((x & mask) == 0 || (y & mask) == 0)
    throw std::invalid_argument("completion_sending: automorphisms fix zero");
  const Mat bx = basis_completion(x & mask, n, reverse);
  const Mat by = basis_completion(y & mask, n, reverse);
  return by * bx.inverse();
}

}  // namespace

Mat completion_sending(Vec x, Vec y, int n) { return completion_impl(x, y, n, false); }
Mat completion_sending_alt(Vec x, Vec y, int n) { return completion_impl(x, y, n, true); }

}  // namespace specden::gf2
