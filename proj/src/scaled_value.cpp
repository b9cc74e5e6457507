#include "rgcount/scaled_value.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rgc {

ScaledValue ScaledValue::one(ValueMode mode) {
  return from_count(1, mode);
}

ScaledValue ScaledValue::from_count(std::uint64_t v, ValueMode mode) {
  if (v == 0) return zero();
  ScaledValue s;
  s.zero_ = false;
  s.log_ = std::log(static_cast<double>(v));
  if (mode == ValueMode::Exact) s.exact_ = BigRat(BigInt(v));
  return s;
}

ScaledValue ScaledValue::from_integer(const BigInt& v) {
  if (v < 0) throw std::domain_error("ScaledValue: negative value");
  if (v == 0) return zero();
  ScaledValue s;
  s.zero_ = false;
  s.log_ = log_big(v);
  s.exact_ = BigRat(v);
  return s;
}

ScaledValue ScaledValue::from_rational(const BigRat& v) {
  if (v < 0) throw std::domain_error("ScaledValue: negative value");
  if (v == 0) return zero();
  ScaledValue s;
  s.zero_ = false;
  s.log_ = log_big(v);
  s.exact_ = v;
  return s;
}

ScaledValue ScaledValue::from_log(double natural_log) {
  if (!std::isfinite(natural_log)) throw std::domain_error("ScaledValue: non-finite log");
  ScaledValue s;
  s.zero_ = false;
  s.log_ = natural_log;
  return s;
}

double ScaledValue::log_value() const {
  if (zero_) throw std::domain_error("ScaledValue: log of ZERO");
  return log_;
}

double ScaledValue::log10_value() const {
  return log_value() / std::numbers::ln10;
}

double ScaledValue::to_double() const {
  return zero_ ? 0.0 : std::exp(log_);
}

ScaledValue& ScaledValue::operator*=(const ScaledValue& o) {
  if (zero_ || o.zero_) return *this = zero();
  log_ += o.log_;
  if (exact_ && o.exact_) {
    *exact_ *= *o.exact_;
    log_ = log_big(*exact_);  // keep the views consistent in exact mode
  } else {
    exact_.reset();
  }
  return *this;
}

ScaledValue ScaledValue::divided_by(const BigInt& d) const {
  if (d <= 0) throw std::domain_error("ScaledValue: divisor must be positive");
  if (zero_) return zero();
  ScaledValue s;
  s.zero_ = false;
  if (exact_) {
    s.exact_ = *exact_ / BigRat(d);
    s.log_ = log_big(*s.exact_);
  } else {
    s.log_ = log_ - log_big(d);
  }
  return s;
}

ScaledValue ScaledValue::squared() const {
  ScaledValue s = *this;
  s *= *this;
  return s;
}

ScaledValue ScaledValue::sum(std::span<const ScaledValue> values) {
  bool all_exact = true;
  double max_log = -std::numeric_limits<double>::infinity();
  for (const auto& v : values) {
    if (v.zero_) continue;
    all_exact = all_exact && v.exact_.has_value();
    if (v.log_ > max_log) max_log = v.log_;
  }
  if (max_log == -std::numeric_limits<double>::infinity()) return zero();

  if (all_exact) {
    BigRat total = 0;
    for (const auto& v : values)
      if (!v.zero_) total += *v.exact_;
    return from_rational(total);
  }
  double acc = 0.0;
  for (const auto& v : values)
    if (!v.zero_) acc += std::exp(v.log_ - max_log);
  return from_log(max_log + std::log(acc));
}

bool operator<(const ScaledValue& a, const ScaledValue& b) {
  if (a.zero_ || b.zero_) return a.zero_ && !b.zero_;
  if (a.exact_ && b.exact_) return *a.exact_ < *b.exact_;
  return a.log_ < b.log_;
}

std::string ScaledValue::to_string() const {
  if (zero_) return "0";
  if (exact_) return rat_str(*exact_);
  return "exp(" + std::to_string(log_) + ")";
}

}  // namespace rgc
