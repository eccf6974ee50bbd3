#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace alphaconv {

enum class Mode { Exact, Float };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

inline constexpr double kDefaultTolerance = 1e-9;

/// A real number carried either as an arbitrary-precision rational (Exact)
/// or as a binary64 value (Float). Arithmetic between the two modes is an
/// error; conversions are explicit.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  explicit Scalar(double d) : value_(d) {}

  static Scalar integer(long value, Mode mode);
  static Scalar ratio(long num, long den, Mode mode);
  /// Accepts "p/q", integers and decimals ("-0.25", "1e-3"). Exact results
  /// are canonicalized, so "2/4" parses to 1/2.
  static Scalar parse(std::string_view text, Mode mode);
  /// Exact mode goes through the shortest round-trip decimal, so 0.3 -> 3/10.
  static Scalar from_double(double value, Mode mode);

  Mode mode() const noexcept { return value_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_exact() const noexcept { return mode() == Mode::Exact; }

  const mpq_class& rational() const;
  double to_double() const;
  /// Same value, other representation. Float -> Exact is exact in binary.
  Scalar to_mode(Mode mode) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: "p/q" or "p" in Exact mode, shortest round-trip decimal in Float.
  std::string to_string() const;

 private:
  std::variant<mpq_class, double> value_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar pow_int(const Scalar& base, unsigned exponent);

/// lhs <= rhs, loosened to lhs <= rhs + tol in Float mode only.
bool leq_within(const Scalar& lhs, const Scalar& rhs, double tol);
/// |a - b| <= tol in Float mode, a == b in Exact mode.
bool eq_within(const Scalar& a, const Scalar& b, double tol);

}  // namespace alphaconv
