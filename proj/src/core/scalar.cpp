#include "alphaconv/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "alphaconv/errors.hpp"

namespace alphaconv {

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact" || text == "Exact") return Mode::Exact;
  if (text == "float" || text == "Float") return Mode::Float;
  throw Error("unknown numeric mode '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void mode_mismatch() { throw ModeError("mixed scalar modes"); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, bool allow_sign) {
  bool negative = false;
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error("malformed number '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// [sign] digits [. digits] [(e|E) [sign] digits]
mpq_class parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw Error("malformed exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw Error("malformed decimal '" + std::string(s) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw Error("malformed number '" + std::string(s) + "'");
    digits = std::string(s);
  }
  mpq_class q(mpz_class(digits, 10));
  if (exponent > 0) q *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= pow10(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::string shortest(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  if (ec != std::errc()) throw Error("cannot format double");
  return std::string(buf, end);
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { std::get<0>(value_).canonicalize(); }

Scalar Scalar::integer(long value, Mode mode) {
  if (mode == Mode::Exact) return Scalar(mpq_class(value));
  return Scalar(static_cast<double>(value));
}

Scalar Scalar::ratio(long num, long den, Mode mode) {
  if (den == 0) throw EvaluationError("zero denominator");
  if (mode == Mode::Exact) return Scalar(mpq_class(num, den));
  return Scalar(static_cast<double>(num) / static_cast<double>(den));
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  text = trim(text);
  if (text.empty()) throw Error("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(text.substr(0, slash)), true);
    mpz_class den = parse_integer(trim(text.substr(slash + 1)), false);
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    if (mode == Mode::Exact) return Scalar(mpq_class(num, den));
    return Scalar(num.get_d() / den.get_d());
  }
  if (mode == Mode::Float) {
    // strtod is correctly rounded; validate the grammar first.
    (void)parse_decimal(text);
    return Scalar(std::strtod(std::string(text).c_str(), nullptr));
  }
  return Scalar(parse_decimal(text));
}

Scalar Scalar::from_double(double value, Mode mode) {
  if (!std::isfinite(value)) throw Error("non-finite number");
  if (mode == Mode::Float) return Scalar(value);
  return Scalar(parse_decimal(shortest(value)));
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ModeError("rational value requested from a Float scalar");
}

double Scalar::to_double() const {
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  // mpq_get_d truncates toward zero (at most one ulp off).
  return std::get<mpq_class>(value_).get_d();
}

Scalar Scalar::to_mode(Mode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == Mode::Float) return Scalar(to_double());
  double d = std::get<double>(value_);
  if (!std::isfinite(d)) throw ModeError("non-finite value has no exact form");
  return Scalar(mpq_class(d));
}

int Scalar::sign() const {
  if (const auto* d = std::get_if<double>(&value_)) return (*d > 0) - (*d < 0);
  return sgn(std::get<mpq_class>(value_));
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (mode() != rhs.mode()) mode_mismatch();
  if (auto* d = std::get_if<double>(&value_))
    *d += std::get<double>(rhs.value_);
  else
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (mode() != rhs.mode()) mode_mismatch();
  if (auto* d = std::get_if<double>(&value_))
    *d -= std::get<double>(rhs.value_);
  else
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (mode() != rhs.mode()) mode_mismatch();
  if (auto* d = std::get_if<double>(&value_))
    *d *= std::get<double>(rhs.value_);
  else
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (mode() != rhs.mode()) mode_mismatch();
  if (auto* d = std::get_if<double>(&value_)) {
    *d /= std::get<double>(rhs.value_);
  } else {
    if (rhs.is_zero()) throw EvaluationError("division by zero");
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* d = std::get_if<double>(&value_)) return Scalar(-*d);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mode_mismatch();
  if (a.mode() == Mode::Float) return std::get<double>(a.value_) == std::get<double>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) mode_mismatch();
  if (a.mode() == Mode::Float) return std::get<double>(a.value_) <=> std::get<double>(b.value_);
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string Scalar::to_string() const {
  if (const auto* d = std::get_if<double>(&value_)) return shortest(*d);
  return std::get<mpq_class>(value_).get_str();
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar pow_int(const Scalar& base, unsigned exponent) {
  Scalar result = Scalar::integer(1, base.mode());
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool leq_within(const Scalar& lhs, const Scalar& rhs, double tol) {
  if (lhs.is_exact()) return lhs <= rhs;
  return lhs.to_double() <= rhs.to_double() + tol;
}

bool eq_within(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact()) return a == b;
  return std::abs(a.to_double() - b.to_double()) <= tol;
}

}  // namespace alphaconv
