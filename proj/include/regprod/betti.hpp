#ifndef REGPROD_BETTI_HPP
#define REGPROD_BETTI_HPP

#include <algorithm>
#include <compare>
#include <limits>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regprod/field.hpp"
#include "regprod/monomial.hpp"

namespace regprod {

/// Multigraded Betti numbers: (homological index, multidegree) -> dimension.
/// Zero entries are never stored. Entries iterate in (i, total degree,
/// multidegree) order.
class BettiTable {
public:
  struct Key {
    int index;
    int total;
    Monomial degree;

    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  BettiTable() = default;
  explicit BettiTable(FieldConfig field) : field_(field) {}

  const FieldConfig& field() const noexcept { return field_; }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }

  void add(int i, const Monomial& degree, std::size_t dim) {
    if (dim == 0)
      return;
    entries_[Key{i, degree.total_degree(), degree}] += dim;
  }

  std::size_t at(int i, const Monomial& degree) const {
    auto it = entries_.find(Key{i, degree.total_degree(), degree});
    return it == entries_.end() ? 0 : it->second;
  }

  /// Singly graded view: (i, total degree) -> summed dimension.
  std::map<std::pair<int, int>, std::size_t> graded() const {
    std::map<std::pair<int, int>, std::size_t> g;
    for (const auto& [k, d] : entries_)
      g[{k.index, k.total}] += d;
    return g;
  }

  /// Total rank at each homological index 0..max.
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& [k, d] : entries_) {
      if (static_cast<std::size_t>(k.index) >= r.size())
        r.resize(k.index + 1, 0);
      r[k.index] += d;
    }
    return r;
  }

  /// Reindexes i -> i - steps, dropping entries that fall below 0. With
  /// steps = 1 this turns the table of S/I into the table of I.
  BettiTable shifted(int steps) const {
    BettiTable t(field_);
    for (const auto& [k, d] : entries_)
      if (k.index - steps >= 0)
        t.entries_[Key{k.index - steps, k.total, k.degree}] = d;
    return t;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  FieldConfig field_;
  std::map<Key, std::size_t> entries_;
};

struct RegPd {
  int reg = 0;
  int pd = 0;
  friend bool operator==(const RegPd&, const RegPd&) = default;
};

/// Regularity max(total degree - i) and projective dimension max i.
/// shift_for_module strips that many leading homological steps first, so a
/// table of S/I with shift 1 yields Reg(I) = Reg(S/I) + 1 and pd(I) = pd(S/I) - 1.
inline RegPd reg_pd(const BettiTable& table, int shift_for_module = 0) {
  const auto t = shift_for_module ? table.shifted(shift_for_module) : table;
  if (t.empty())
    throw Error("regularity of an empty Betti table (zero module) is undefined");
  RegPd r{std::numeric_limits<int>::min(), 0};
  for (const auto& [k, d] : t.entries()) {
    r.reg = std::max(r.reg, k.total - k.index);
    r.pd = std::max(r.pd, k.index);
  }
  return r;
}

/// Compact text like `0: 8@4 | 1: 10@5 1@6`.
inline std::string graded_summary(const BettiTable& t) {
  std::string out;
  int last = -1;
  for (const auto& [key, d] : t.graded()) {
    if (key.first != last) {
      if (last >= 0)
        out += " | ";
      out += std::to_string(key.first) + ":";
      last = key.first;
    }
    out += " " + std::to_string(d) + "@" + std::to_string(key.second);
  }
  return out;
}

} // namespace regprod

#endif // REGPROD_BETTI_HPP
