#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "alphaconv/point.hpp"

namespace alphaconv {

/// Open box prod_i (lo[i], hi[i]). Convex and algebraically open over every
/// subfield of R, which is the standing assumption of every checker here.
class BoxDomain {
 public:
  BoxDomain(Point lo, Point hi);

  const Point& lo() const noexcept { return lo_; }
  const Point& hi() const noexcept { return hi_; }
  std::size_t dim() const noexcept { return lo_.dim(); }
  Mode mode() const { return lo_.mode(); }

  bool contains(const Point& x) const;
  /// Throws DomainError naming the point when it is not inside the box.
  void require_contains(const Point& x) const;

  /// Closed box [lo - hi, hi - lo], which contains D - D.
  std::pair<Point, Point> difference_bound() const;
  /// Open box (lo - hi, hi - lo) / 2 = 1/2 (D - D).
  BoxDomain half_difference() const;

  BoxDomain to_mode(Mode mode) const { return BoxDomain(lo_.to_mode(mode), hi_.to_mode(mode)); }

 private:
  Point lo_;
  Point hi_;
};

/// Interior grid with n_per_axis points per axis, each offset half a cell
/// from the faces. Row-major with the last axis varying fastest.
std::vector<Point> sample_domain(const BoxDomain& dom, std::size_t n_per_axis);

}  // namespace alphaconv
