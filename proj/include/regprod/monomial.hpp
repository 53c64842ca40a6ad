#ifndef REGPROD_MONOMIAL_HPP
#define REGPROD_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regprod/error.hpp"

namespace regprod {

/// A monomial x1^a1 * ... * xn^an of S = K[x1..xn], stored as its exponent
/// vector. The variable count n is part of the value; mixing monomials of
/// different n raises DimensionError.
///
/// Monomials double as multidegrees: every shift, every evaluation degree and
/// every u_m in the library is a Monomial.
class Monomial {
public:
  using exponent_type = int;

  Monomial() = default;

  /// The unit monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
      if (e < 0)
        throw Error("monomial exponents must be non-negative");
  }

  Monomial(std::initializer_list<exponent_type> exps)
      : Monomial(std::vector<exponent_type>(exps)) {}

  static Monomial unit(std::size_t n) { return Monomial(n); }

  /// x_{i+1} (zero-based index i) in n variables.
  static Monomial variable(std::size_t n, std::size_t i, exponent_type e = 1) {
    Monomial m(n);
    m.exps_.at(i) = e;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  std::span<const exponent_type> exponents() const noexcept { return exps_; }

  int total_degree() const noexcept {
    int d = 0;
    for (auto e : exps_)
      d += e;
    return d;
  }

  bool is_unit() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  bool is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    check_same(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i])
        return false;
    return true;
  }

  /// Zero-based indices of the variables with positive exponent.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0)
        s.push_back(i);
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      r.exps_[i] += b.exps_[i];
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a))
      throw Error("monomial quotient is not a monomial");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      r.exps_[i] -= b.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order on exponent vectors. Monomials of different
  /// lengths order by length first so containers stay well-defined.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                  b.exps_.begin(), b.exps_.end());
  }

  void check_same(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw DimensionError("monomials live in rings with " + std::to_string(exps_.size()) +
                           " and " + std::to_string(other.exps_.size()) + " variables");
  }

private:
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  std::vector<exponent_type> exps_;
};

/// Componentwise maximum, written [a, b] in the literature.
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  a.check_same(b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i)
    r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  a.check_same(b);
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i)
    r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
  return r;
}

inline std::pair<Monomial, Monomial> lcm_gcd(const Monomial& a, const Monomial& b) {
  return {lcm(a, b), gcd(a, b)};
}

/// `x1^2*x2*x3`; the unit monomial prints as `1`.
inline std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  return s;
}

inline int parse_positive(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a number in '" + std::string(context) + "'");
  return std::stoi(std::string(digits));
}

/// Factors (variable index, exponent) of one monomial term; 1-based indices.
inline std::vector<std::pair<int, int>> parse_factors(std::string_view term) {
  std::vector<std::pair<int, int>> factors;
  if (term == "1")
    return factors;
  if (term.empty())
    throw ParseError("empty monomial");
  std::size_t pos = 0;
  while (pos <= term.size()) {
    auto star = term.find('*', pos);
    auto factor = term.substr(pos, star == std::string_view::npos ? term.npos : star - pos);
    if (factor.empty() || factor[0] != 'x')
      throw ParseError("expected a factor x<i> or x<i>^<e> in '" + std::string(term) + "'");
    auto caret = factor.find('^');
    int var = parse_positive(factor.substr(1, caret == factor.npos ? factor.npos : caret - 1),
                             term);
    int exp = caret == factor.npos ? 1 : parse_positive(factor.substr(caret + 1), term);
    if (var < 1)
      throw ParseError("variables are numbered from x1");
    factors.emplace_back(var, exp);
    if (star == std::string_view::npos)
      break;
    pos = star + 1;
  }
  return factors;
}

} // namespace detail

/// Largest variable index (1-based) mentioned in a monomial or ideal text;
/// 0 if none.
inline std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  auto s = detail::strip_spaces(text);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x')
      continue;
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i + 1 && j - i - 1 <= 6)
      best = std::max<std::size_t>(best, std::stoul(s.substr(i + 1, j - i - 1)));
  }
  return best;
}

/// Parses `x1^2*x2` (or `1`) into a monomial with n variables.
inline Monomial parse_monomial(std::string_view text, std::size_t n) {
  auto s = detail::strip_spaces(text);
  std::vector<int> exps(n, 0);
  for (auto [var, exp] : detail::parse_factors(s)) {
    if (static_cast<std::size_t>(var) > n)
      throw ParseError("variable x" + std::to_string(var) + " outside ring with " +
                       std::to_string(n) + " variables");
    exps[var - 1] += exp;
  }
  return Monomial(std::move(exps));
}

} // namespace regprod

template <>
struct std::hash<regprod::Monomial> {
  std::size_t operator()(const regprod::Monomial& m) const noexcept {
    std::size_t h = m.size();
    for (auto e : m.exponents())
      h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

#endif // REGPROD_MONOMIAL_HPP
