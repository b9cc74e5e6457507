#ifndef RGCOUNT_SCALED_VALUE_HPP
#define RGCOUNT_SCALED_VALUE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "rgcount/bignum.hpp"

namespace rgc {

// How estimator outputs are carried.
enum class ValueMode {
  Log,    // log-domain magnitude only (default; magnitudes reach n^k)
  Exact,  // additionally carry an exact non-negative rational
};

// A non-negative real carried in log domain, with ZERO as the unique
// representation of 0. In Exact mode the exact rational rides along and all
// arithmetic on it stays exact; the log view is kept consistent either way.
//
// Sums use a max-shifted reduction, so they are order-independent up to
// 1e-9 relative in the log; exact in rational mode.
class ScaledValue {
 public:
  ScaledValue() = default;  // ZERO

  static ScaledValue zero() { return ScaledValue(); }
  static ScaledValue one(ValueMode mode = ValueMode::Log);
  static ScaledValue from_count(std::uint64_t v, ValueMode mode = ValueMode::Log);
  static ScaledValue from_integer(const BigInt& v);   // exact; v >= 0
  static ScaledValue from_rational(const BigRat& v);  // exact; v >= 0
  static ScaledValue from_log(double natural_log);

  bool is_zero() const { return zero_; }
  bool has_exact() const { return exact_.has_value(); }
  const BigRat& exact_value() const { return *exact_; }

  double log_value() const;    // natural log; requires !is_zero()
  double log10_value() const;
  double to_double() const;    // exp(log), +inf on overflow; 0 for ZERO

  ScaledValue& operator*=(const ScaledValue& o);
  friend ScaledValue operator*(ScaledValue a, const ScaledValue& b) { return a *= b; }

  ScaledValue divided_by(const BigInt& d) const;  // d > 0
  ScaledValue squared() const;

  // Order-independent (to tolerance) sum of a multiset.
  static ScaledValue sum(std::span<const ScaledValue> values);

  // Magnitude order; ZERO sorts first. Exact comparison when both sides
  // carry exact values, log comparison otherwise.
  friend bool operator<(const ScaledValue& a, const ScaledValue& b);

  std::string to_string() const;  // exact "num/den" when carried, else "exp(<log>)"

 private:
  bool zero_ = true;
  double log_ = 0.0;
  std::optional<BigRat> exact_;
};

}  // namespace rgc

#endif
