#ifndef REGPROD_IDEAL_HPP
#define REGPROD_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regprod/monomial.hpp"

namespace regprod {

/// A set of variables, stored as sorted zero-based indices.
struct VariableSet {
  std::vector<std::size_t> members;

  bool empty() const noexcept { return members.empty(); }
  std::size_t size() const noexcept { return members.size(); }
  bool contains(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

inline VariableSet intersect(const VariableSet& a, const VariableSet& b) {
  VariableSet r;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
  return r;
}

/// `{x2, x3}`.
inline std::string to_string(const VariableSet& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.members.size(); ++k)
    out += (k ? ", x" : "x") + std::to_string(v.members[k] + 1);
  return out + "}";
}

/// Variables dividing at least one member; empty when every member is 1.
inline VariableSet gens_set(std::span<const Monomial> shifts) {
  VariableSet r;
  for (const auto& m : shifts)
    for (auto i : m.support())
      r.members.push_back(i);
  std::sort(r.members.begin(), r.members.end());
  r.members.erase(std::unique(r.members.begin(), r.members.end()), r.members.end());
  return r;
}

/// Inclusion-minimal subset under divisibility, sorted lexicographically.
inline std::vector<Monomial> minimal_subset(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> kept;
  for (auto& m : ms) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant)
      kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// A monomial ideal in n variables, held by its minimal generators in
/// lexicographic order. The zero ideal has no generators; the unit ideal has
/// the single generator 1.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
    for (const auto& g : generators)
      if (g.size() != n)
        throw DimensionError("generator " + regprod::to_string(g) + " is not in a ring with " +
                             std::to_string(n) + " variables");
    gens_ = minimal_subset(std::move(generators));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool contains(const Monomial& m) const {
    if (m.size() != n_)
      throw DimensionError("monomial and ideal live in different rings");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimal_generators(std::size_t n, std::vector<Monomial> ms) {
  return MonomialIdeal(n, std::move(ms));
}

inline bool contains(const MonomialIdeal& I, const Monomial& m) { return I.contains(m); }

inline VariableSet gens_set(const MonomialIdeal& I) { return gens_set(I.generators()); }

namespace detail {
inline void check_same(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient())
    throw DimensionError("ideals live in rings with " + std::to_string(I.ambient()) + " and " +
                         std::to_string(J.ambient()) + " variables");
}
} // namespace detail

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::check_same(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::check_same(I, J);
  std::vector<Monomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators())
      gens.push_back(a * b);
  return MonomialIdeal(I.ambient(), std::move(gens));
}

/// Pairwise lcms; correct for monomial ideals only.
inline MonomialIdeal ideal_intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::check_same(I, J);
  std::vector<Monomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators())
      gens.push_back(lcm(a, b));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

/// I : g restricted to monomials, i.e. the ideal generated by lcm(u, g)/g.
inline MonomialIdeal restriction_ideal(const MonomialIdeal& I, const Monomial& shift) {
  if (shift.size() != I.ambient())
    throw DimensionError("shift and ideal live in different rings");
  std::vector<Monomial> gens;
  for (const auto& u : I.generators())
    gens.push_back(lcm(u, shift) / shift);
  return MonomialIdeal(I.ambient(), std::move(gens));
}

/// Result of polarizing an ideal. New variable k stands for copy
/// `copy_of[k]` (1-based) of original variable `source_of[k]`.
struct Polarization {
  MonomialIdeal ideal;
  std::size_t original_ambient = 0;
  std::vector<std::size_t> source_of;
  std::vector<int> copy_of;
};

/// Standard polarization: x_i^e becomes x_{i,1} ... x_{i,e}. Each original
/// variable receives max(1, largest exponent) copies, so squarefree input
/// maps to itself under the identity renaming.
inline Polarization polarize(const MonomialIdeal& I) {
  const auto n = I.ambient();
  Polarization p;
  p.original_ambient = n;
  std::vector<std::size_t> first(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int copies = 1;
    for (const auto& g : I.generators())
      copies = std::max(copies, g[i]);
    first[i] = p.source_of.size();
    for (int c = 1; c <= copies; ++c) {
      p.source_of.push_back(i);
      p.copy_of.push_back(c);
    }
  }
  const auto np = p.source_of.size();
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<int> e(np, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int c = 0; c < g[i]; ++c)
        e[first[i] + c] = 1;
    gens.emplace_back(std::move(e));
  }
  p.ideal = MonomialIdeal(np, std::move(gens));
  return p;
}

/// Specializes every x_{i,j} back to x_i.
inline MonomialIdeal depolarize(const Polarization& p) {
  std::vector<Monomial> gens;
  for (const auto& g : p.ideal.generators()) {
    std::vector<int> e(p.original_ambient, 0);
    for (std::size_t k = 0; k < g.size(); ++k)
      e[p.source_of[k]] += g[k];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(p.original_ambient, std::move(gens));
}

/// Generators joined by `, `; the zero ideal prints as `0`.
inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < I.size(); ++k)
    out += (k ? ", " : "") + to_string(I.generators()[k]);
  return out;
}

/// Parses a comma-separated list of monomials. `0` (or empty text) is the
/// zero ideal. n = 0 infers the ring from the largest variable mentioned.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t n = 0) {
  n = std::max(n, max_variable_index(text));
  auto s = detail::strip_spaces(text);
  if (s.empty() || s == "0")
    return MonomialIdeal::zero(n);
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  while (true) {
    auto comma = s.find(',', pos);
    gens.push_back(parse_monomial(
        std::string_view(s).substr(pos, comma == std::string::npos ? s.npos : comma - pos), n));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return MonomialIdeal(n, std::move(gens));
}

/// The same generators viewed in a ring with n >= ambient() variables.
inline MonomialIdeal embed(const MonomialIdeal& I, std::size_t n) {
  if (n < I.ambient())
    throw DimensionError("cannot embed into a smaller ring");
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<int> e(g.exponents().begin(), g.exponents().end());
    e.resize(n, 0);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

} // namespace regprod

#endif // REGPROD_IDEAL_HPP
