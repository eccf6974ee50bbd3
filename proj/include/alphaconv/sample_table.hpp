#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "alphaconv/point.hpp"

namespace alphaconv {

enum class Interpolation {
  None,    // values exist only at stored points
  Linear,  // d = 1: piecewise linear between neighbouring stored points
};

std::string_view to_string(Interpolation interp);
Interpolation parse_interpolation(std::string_view text);

/// Finite table of (point, value) pairs. Backs both tabulated moduli and
/// tabulated function oracles.
class SampleTable {
 public:
  SampleTable(std::vector<Point> points, std::vector<Scalar> values,
              Interpolation interp = Interpolation::None, double tol = kDefaultTolerance);

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Scalar>& values() const noexcept { return values_; }
  Interpolation interpolation() const noexcept { return interp_; }
  std::size_t dim() const noexcept { return points_.front().dim(); }
  Mode mode() const { return values_.front().mode(); }
  std::size_t size() const noexcept { return points_.size(); }

  /// Index of a stored point matching x (exactly, or within tol in Float mode).
  std::optional<std::size_t> find(const Point& x) const;
  /// Stored value, or the interpolated one; nullopt when neither applies.
  std::optional<Scalar> lookup(const Point& x) const;

 private:
  std::vector<Point> points_;
  std::vector<Scalar> values_;
  Interpolation interp_;
  double tol_;
  std::map<Point, std::size_t, LexLess> index_;   // Exact mode only
  std::vector<std::size_t> order_;                // d = 1, ascending
};

}  // namespace alphaconv
