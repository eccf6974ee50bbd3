#include "alphaconv/sample_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "alphaconv/errors.hpp"

namespace alphaconv {

std::string_view to_string(Interpolation interp) {
  return interp == Interpolation::None ? "none" : "linear";
}

Interpolation parse_interpolation(std::string_view text) {
  if (text == "none") return Interpolation::None;
  if (text == "linear") return Interpolation::Linear;
  throw Error("unknown interpolation rule '" + std::string(text) + "'");
}

SampleTable::SampleTable(std::vector<Point> points, std::vector<Scalar> values,
                         Interpolation interp, double tol)
    : points_(std::move(points)), values_(std::move(values)), interp_(interp), tol_(tol) {
  if (points_.empty()) throw EvaluationError("tabulated data needs at least one point");
  if (points_.size() != values_.size())
    throw EvaluationError("tabulated data has " + std::to_string(points_.size()) + " points but " +
                          std::to_string(values_.size()) + " values");
  const Mode m = values_.front().mode();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != points_.front().dim())
      throw DomainError("tabulated points differ in dimension");
    if (points_[i].mode() != m || values_[i].mode() != m)
      throw ModeError("tabulated data mixes scalar modes");
  }
  if (interp_ == Interpolation::Linear && dim() != 1)
    throw EvaluationError("linear interpolation is only defined for d = 1");

  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (m == Mode::Exact) {
      if (!index_.emplace(points_[i], i).second)
        throw EvaluationError("duplicate tabulated point " + points_[i].to_string());
    } else {
      for (std::size_t j = 0; j < i; ++j)
        if (near(points_[i], points_[j], tol_))
          throw EvaluationError("duplicate tabulated point " + points_[i].to_string());
    }
  }
  if (dim() == 1) {
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return points_[a][0] < points_[b][0]; });
  }
}

std::optional<std::size_t> SampleTable::find(const Point& x) const {
  if (x.dim() != dim() || x.mode() != mode()) return std::nullopt;
  if (mode() == Mode::Exact) {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (near(points_[i], x, tol_)) return i;
  return std::nullopt;
}

std::optional<Scalar> SampleTable::lookup(const Point& x) const {
  if (auto i = find(x)) return values_[*i];
  if (interp_ != Interpolation::Linear || x.dim() != 1 || x.mode() != mode()) return std::nullopt;

  const Scalar& s = x[0];
  auto upper = std::upper_bound(order_.begin(), order_.end(), s, [&](const Scalar& v, std::size_t i) {
    return v < points_[i][0];
  });
  if (upper == order_.begin() || upper == order_.end()) return std::nullopt;
  const std::size_t b = *upper;
  const std::size_t a = *(upper - 1);
  const Scalar& xa = points_[a][0];
  const Scalar& xb = points_[b][0];
  const Scalar w = (s - xa) / (xb - xa);
  return values_[a] + w * (values_[b] - values_[a]);
}

}  // namespace alphaconv
