#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "alphaconv/scalar.hpp"

namespace alphaconv {

/// A vector in R^d. All coordinates share one Scalar mode.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords);

  static Point zeros(std::size_t dim, Mode mode);
  static Point unit(std::size_t dim, std::size_t axis, Mode mode);
  static Point of(std::initializer_list<double> values, Mode mode);

  std::size_t dim() const noexcept { return coords_.size(); }
  Mode mode() const;

  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  Point& operator*=(const Scalar& s);
  Point operator-() const;

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Scalar& s, Point p) { return p *= s; }
  friend Point operator*(Point p, const Scalar& s) { return p *= s; }
  friend Point operator/(Point p, const Scalar& s);

  friend bool operator==(const Point& a, const Point& b);

  Scalar dot(const Point& other) const;
  Scalar norm_squared() const { return dot(*this); }
  bool is_zero() const;

  Point to_mode(Mode mode) const;
  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

/// Lexicographic order; used for carrier lookup and deterministic scans.
bool lex_less(const Point& a, const Point& b);

struct LexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

/// Coordinatewise closeness: exact equality in Exact mode, max-norm <= tol in Float.
bool near(const Point& a, const Point& b, double tol);

/// phi in X' represented through the inner product, phi(h) = <v, h>.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(Point v) : v_(std::move(v)) {}

  Scalar apply(const Point& h) const { return v_.dot(h); }
  Scalar operator()(const Point& h) const { return apply(h); }

  const Point& vector() const noexcept { return v_; }
  std::size_t dim() const noexcept { return v_.dim(); }

  friend bool operator==(const LinearFunctional& a, const LinearFunctional& b) {
    return a.v_ == b.v_;
  }

 private:
  Point v_;
};

}  // namespace alphaconv
