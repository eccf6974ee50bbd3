#include "alphaconv/field.hpp"

#include <algorithm>
#include <numeric>

#include "alphaconv/errors.hpp"

namespace alphaconv {

namespace {

constexpr unsigned kMaxDyadicDepth = 40;
constexpr std::size_t kMaxFareyOrder = 2000;

std::size_t totient(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

void sort_unique(std::vector<Scalar>& values) {
  std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::Rationals: return "rationals";
    case FieldKind::Dyadics: return "dyadics";
    case FieldKind::Reals: return "reals";
  }
  return "?";
}

std::size_t farey_order(std::size_t budget) {
  std::size_t order = 1;
  std::size_t size = 2;  // F_1 = {0, 1}
  while (order < kMaxFareyOrder) {
    const std::size_t next = size + totient(order + 1);
    if (next > budget) break;
    size = next;
    ++order;
  }
  return order;
}

unsigned dyadic_depth(std::size_t budget) {
  unsigned depth = 0;
  while (depth < kMaxDyadicDepth && (std::size_t{1} << (depth + 1)) + 1 <= budget) ++depth;
  return depth;
}

std::vector<Scalar> enumerate_field(const FieldSpec& field, Mode mode) {
  if (field.sample_budget == 0) throw Error("field sample_budget must be positive");
  std::vector<Scalar> out;
  switch (field.kind) {
    case FieldKind::Rationals: {
      const auto order = static_cast<long>(farey_order(field.sample_budget));
      for (long r = 1; r <= order; ++r)
        for (long q = 0; q <= r; ++q)
          if (std::gcd(q, r) == 1) out.push_back(Scalar::ratio(q, r, mode));
      break;
    }
    case FieldKind::Dyadics: {
      const unsigned depth = dyadic_depth(field.sample_budget);
      const long den = 1L << depth;
      for (long k = 0; k <= den; ++k) out.push_back(Scalar::ratio(k, den, mode));
      break;
    }
    case FieldKind::Reals: {
      const auto n = static_cast<long>(std::max<std::size_t>(field.sample_budget, 2));
      for (long k = 0; k < n; ++k) out.push_back(Scalar::ratio(k, n - 1, mode));
      break;
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Scalar> enumerate_t(const TSet& tset, Mode mode) {
  std::vector<Scalar> out;
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TSet::JensenPoint>) {
          out.push_back(Scalar::ratio(1, 2, mode));
        } else if constexpr (std::is_same_v<V, TSet::FullInterval>) {
          if (v.resolution < 2) throw Error("full_interval resolution must be >= 2");
          const auto m = static_cast<long>(v.resolution);
          for (long k = 0; k < m; ++k) out.push_back(Scalar::ratio(k, m - 1, mode));
        } else if constexpr (std::is_same_v<V, TSet::FieldRestricted>) {
          out = enumerate_field(v.field, mode);
        } else {
          const Scalar zero = Scalar::integer(0, mode);
          const Scalar one = Scalar::integer(1, mode);
          for (const auto& t : v.values) {
            Scalar s = t.to_mode(mode);
            if (zero <= s && s <= one) out.push_back(std::move(s));
          }
        }
      },
      tset.variant());
  sort_unique(out);
  if (out.empty()) throw Error("empty T∩[0,1]");
  return out;
}

}  // namespace alphaconv
