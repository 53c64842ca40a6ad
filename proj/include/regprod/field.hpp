#ifndef REGPROD_FIELD_HPP
#define REGPROD_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "regprod/error.hpp"

namespace regprod {

/// Coefficient field interface. Elements are plain values; the field object
/// carries whatever runtime parameters the arithmetic needs.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, long k) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(k) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.format(a) } -> std::convertible_to<std::string>;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

/// Z/p for a prime p < 2^31.
class PrimeField {
public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw ConfigError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(long k) const noexcept {
    long r = k % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b);
  }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t(a) * b % p_);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0)
      throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1)
        result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  std::string name() const { return "gf" + std::to_string(p_); }

  /// Symmetric representative, so -1 prints as -1 rather than p-1.
  std::string format(value_type a) const {
    return a > p_ / 2 ? "-" + std::to_string(p_ - a) : std::to_string(a);
  }

private:
  std::uint32_t p_;
};

/// The rationals with arbitrary-precision numerators and denominators.
class RationalField {
public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long k) const { return k; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0)
      throw Error("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }

  std::string name() const { return "q"; }
  std::string format(const value_type& a) const { return a.str(); }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

/// Runtime field selection as it appears on the command line and in reports.
struct FieldConfig {
  enum class Kind { prime, rational };

  Kind kind = Kind::prime;
  std::uint32_t p = 32003;

  static FieldConfig prime_field(std::uint32_t p = 32003) { return {Kind::prime, p}; }
  static FieldConfig rationals() { return {Kind::rational, 0}; }

  std::string name() const { return kind == Kind::prime ? "gf" + std::to_string(p) : "q"; }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

template <class F>
FieldConfig config_of(const F& field) {
  if constexpr (std::same_as<F, PrimeField>)
    return FieldConfig::prime_field(field.characteristic());
  else
    return FieldConfig::rationals();
}

/// Calls fn with the concrete field object selected by cfg.
template <class Fn>
decltype(auto) visit_field(const FieldConfig& cfg, Fn&& fn) {
  if (cfg.kind == FieldConfig::Kind::rational)
    return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{cfg.p});
}

} // namespace regprod

#endif // REGPROD_FIELD_HPP
