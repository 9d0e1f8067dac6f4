#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>

namespace horolab {

/// Small fixed-capacity real vector. Holds chart or ambient coordinates of
/// points and tangent vectors; the largest model in the catalog (H^3 in
/// ambient coordinates) needs four entries.
class Vec {
 public:
  static constexpr std::size_t kCapacity = 4;

  Vec() = default;
  explicit Vec(std::size_t n) : n_(n) { assert(n <= kCapacity); }
  Vec(std::initializer_list<double> values) : n_(values.size()) {
    assert(n_ <= kCapacity);
    std::size_t i = 0;
    for (double v : values) data_[i++] = v;
  }

  static Vec zeros(std::size_t n) { return Vec(n); }
  static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1.0;
    return v;
  }

  std::size_t size() const { return n_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  const double* begin() const { return data_.data(); }
  const double* end() const { return data_.data() + n_; }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < n_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < n_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (std::size_t i = 0; i < n_; ++i) data_[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.n_; ++i) os << (i ? ", " : "") << v.data_[i];
    return os << ')';
  }

 private:
  std::array<double, kCapacity> data_{};
  std::size_t n_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

/// Max-norm distance, used for chart-coordinate comparisons.
inline double max_abs_diff(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace horolab
