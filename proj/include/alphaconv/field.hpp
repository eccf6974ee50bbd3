#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "alphaconv/scalar.hpp"

namespace alphaconv {

enum class FieldKind { Rationals, Dyadics, Reals };

/// A subfield F of R together with how many points of F ∩ [0,1] to sample.
struct FieldSpec {
  FieldKind kind = FieldKind::Dyadics;
  std::size_t sample_budget = 9;
};

std::string_view to_string(FieldKind kind);

/// Largest denominator R whose Farey sequence F_R fits in the budget (R >= 1).
std::size_t farey_order(std::size_t budget);
/// Largest depth n with 2^n + 1 <= budget (n >= 0).
unsigned dyadic_depth(std::size_t budget);

/// Sorted, deduplicated sample of F ∩ [0,1]; always contains 0 and 1.
std::vector<Scalar> enumerate_field(const FieldSpec& field, Mode mode);

/// The parameter set T; only T ∩ [0,1] is ever used.
class TSet {
 public:
  struct JensenPoint {};
  struct FullInterval {
    std::size_t resolution = 11;
  };
  struct FieldRestricted {
    FieldSpec field;
  };
  struct ExplicitList {
    std::vector<Scalar> values;
  };
  using Variant = std::variant<JensenPoint, FullInterval, FieldRestricted, ExplicitList>;

  TSet() = default;
  TSet(Variant v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static TSet jensen() { return TSet(JensenPoint{}); }
  static TSet full_interval(std::size_t m) { return TSet(FullInterval{m}); }
  static TSet field_restricted(FieldSpec f) { return TSet(FieldRestricted{f}); }
  static TSet explicit_list(std::vector<Scalar> values) { return TSet(ExplicitList{std::move(values)}); }

  const Variant& variant() const noexcept { return v_; }

 private:
  Variant v_;
};

/// Finite sample of T ∩ [0,1], ascending and deduplicated. Throws on an
/// empty result ("empty T∩[0,1]").
std::vector<Scalar> enumerate_t(const TSet& tset, Mode mode);

}  // namespace alphaconv
