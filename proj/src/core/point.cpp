#include "alphaconv/point.hpp"

#include <cmath>

#include "alphaconv/errors.hpp"

namespace alphaconv {

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
}

}  // namespace

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c.mode() != coords_.front().mode()) throw ModeError("point coordinates mix scalar modes");
}

Point Point::zeros(std::size_t dim, Mode mode) {
  return Point(std::vector<Scalar>(dim, Scalar::integer(0, mode)));
}

Point Point::unit(std::size_t dim, std::size_t axis, Mode mode) {
  auto coords = std::vector<Scalar>(dim, Scalar::integer(0, mode));
  coords.at(axis) = Scalar::integer(1, mode);
  return Point(std::move(coords));
}

Point Point::of(std::initializer_list<double> values, Mode mode) {
  std::vector<Scalar> coords;
  coords.reserve(values.size());
  for (double v : values) coords.push_back(Scalar::from_double(v, mode));
  return Point(std::move(coords));
}

Mode Point::mode() const {
  if (coords_.empty()) throw DomainError("empty point has no mode");
  return coords_.front().mode();
}

Point& Point::operator+=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Point& Point::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Point Point::operator-() const {
  Point r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Point operator/(Point p, const Scalar& s) {
  for (auto& c : p.coords_) c /= s;
  return p;
}

bool operator==(const Point& a, const Point& b) {
  return a.dim() == b.dim() && a.coords_ == b.coords_;
}

Scalar Point::dot(const Point& other) const {
  require_same_dim(*this, other);
  Scalar sum = Scalar::integer(0, mode());
  for (std::size_t i = 0; i < coords_.size(); ++i) sum += coords_[i] * other.coords_[i];
  return sum;
}

bool Point::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Point Point::to_mode(Mode mode) const {
  std::vector<Scalar> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.push_back(c.to_mode(mode));
  return Point(std::move(coords));
}

std::string Point::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

bool lex_less(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool near(const Point& a, const Point& b, double tol) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!eq_within(a[i], b[i], tol)) return false;
  return true;
}

}  // namespace alphaconv
