#ifndef REGPROD_FREE_COMPLEX_HPP
#define REGPROD_FREE_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "regprod/betti.hpp"
#include "regprod/field.hpp"
#include "regprod/ideal.hpp"
#include "regprod/linalg.hpp"
#include "regprod/monomial.hpp"

namespace regprod {

struct BasisElement {
  std::string label;
  Monomial shift;
};

/// A multigraded free module S(-u_1) + ... + S(-u_r) with labelled basis.
class FreeModule {
public:
  FreeModule() = default;
  explicit FreeModule(std::size_t n) : n_(n) {}

  FreeModule(std::size_t n, std::vector<BasisElement> basis) : n_(n), basis_(std::move(basis)) {
    std::unordered_set<std::string> seen;
    for (const auto& e : basis_) {
      if (e.shift.size() != n_)
        throw DimensionError("basis element " + e.label + " has a shift outside the ring");
      if (!seen.insert(e.label).second)
        throw Error("duplicate basis label " + e.label);
    }
  }

  std::size_t ambient() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const BasisElement& operator[](std::size_t k) const { return basis_[k]; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const Monomial& shift(std::size_t k) const { return basis_[k].shift; }

  std::vector<Monomial> shifts() const {
    std::vector<Monomial> s;
    s.reserve(basis_.size());
    for (const auto& e : basis_)
      s.push_back(e.shift);
    return s;
  }

private:
  std::size_t n_ = 0;
  std::vector<BasisElement> basis_;
};

template <CoefficientField F>
struct MatrixEntry {
  std::size_t row;
  typename F::value_type coeff;
  Monomial mono;
};

/// A homogeneous map of free modules; entry (row, col) is coeff * mono, and
/// homogeneity means shift(col) = shift(row) * mono. Stored by column with
/// rows ascending; zero coefficients are never stored.
template <CoefficientField F>
class MonomialMatrix {
public:
  using value_type = typename F::value_type;
  using Entry = MatrixEntry<F>;

  MonomialMatrix() = default;
  MonomialMatrix(F field, FreeModule source, FreeModule target)
      : field_(std::move(field)), source_(std::move(source)), target_(std::move(target)),
        cols_(source_.rank()) {}

  const F& field() const noexcept { return field_; }
  const FreeModule& source() const noexcept { return source_; }
  const FreeModule& target() const noexcept { return target_; }
  const std::vector<Entry>& column(std::size_t col) const { return cols_[col]; }

  std::size_t nonzeros() const {
    std::size_t k = 0;
    for (const auto& c : cols_)
      k += c.size();
    return k;
  }

  /// Sets entry (row, col); a zero coefficient erases it.
  void set(std::size_t row, std::size_t col, value_type coeff, Monomial mono) {
    if (row >= target_.rank() || col >= source_.rank())
      throw Error("matrix entry out of range");
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    bool exists = it != c.end() && it->row == row;
    if (field_.is_zero(coeff)) {
      if (exists)
        c.erase(it);
      return;
    }
    if (exists) {
      it->coeff = std::move(coeff);
      it->mono = std::move(mono);
    } else {
      c.insert(it, Entry{row, std::move(coeff), std::move(mono)});
    }
  }

  /// Entry with mono = shift(col)/shift(row), which must be a monomial.
  void set_homogeneous(std::size_t row, std::size_t col, value_type coeff) {
    set(row, col, std::move(coeff), source_.shift(col) / target_.shift(row));
  }

  const Entry* find(std::size_t row, std::size_t col) const {
    const auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    return it != c.end() && it->row == row ? &*it : nullptr;
  }

private:
  F field_;
  FreeModule source_, target_;
  std::vector<std::vector<Entry>> cols_;
};

/// A bounded complex 0 -> C_p -> ... -> C_1 -> C_0 -> 0 of multigraded free
/// modules; d(i) maps term(i) to term(i-1) for 1 <= i <= length().
template <CoefficientField F>
class ChainComplex {
public:
  using value_type = typename F::value_type;

  ChainComplex() = default;

  /// The zero complex in n variables.
  ChainComplex(F field, std::size_t n) : field_(std::move(field)), n_(n), terms_{FreeModule(n)} {}

  ChainComplex(F field, std::size_t n, std::vector<FreeModule> terms,
               std::vector<MonomialMatrix<F>> diffs)
      : field_(std::move(field)), n_(n), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (terms_.empty())
      terms_.emplace_back(n_);
    if (diffs_.size() + 1 != terms_.size())
      throw InvalidComplexError("a complex with " + std::to_string(terms_.size()) +
                                " terms needs " + std::to_string(terms_.size() - 1) +
                                " differentials");
    for (const auto& t : terms_)
      if (t.ambient() != n_)
        throw DimensionError("complex terms live in different rings");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (diffs_[k].source().rank() != terms_[k + 1].rank() ||
          diffs_[k].target().rank() != terms_[k].rank())
        throw InvalidComplexError("differential d" + std::to_string(k + 1) +
                                  " does not match the ranks of its terms");
  }

  const F& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t length() const noexcept { return terms_.size() - 1; }
  const FreeModule& term(std::size_t i) const { return terms_.at(i); }
  const std::vector<FreeModule>& terms() const noexcept { return terms_; }
  const MonomialMatrix<F>& d(std::size_t i) const { return diffs_.at(i - 1); }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& t : terms_)
      r.push_back(t.rank());
    return r;
  }

  std::vector<Monomial> all_shifts() const {
    std::vector<Monomial> s;
    for (const auto& t : terms_)
      for (const auto& e : t.basis())
        s.push_back(e.shift);
    return s;
  }

private:
  F field_;
  std::size_t n_ = 0;
  std::vector<FreeModule> terms_;
  std::vector<MonomialMatrix<F>> diffs_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  enum class Kind { ok, homogeneity, composition };

  Kind kind = Kind::ok;
  std::size_t index = 0; ///< homological index of the offending differential
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;

  bool ok() const noexcept { return kind == Kind::ok; }
};

/// Checks homogeneity of every entry and d(i-1) * d(i) = 0 as a symbolic
/// identity of coefficient-monomial products. Reports the first violation.
template <CoefficientField F>
ValidationReport validate(const ChainComplex<F>& c) {
  const auto& field = c.field();
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const auto& d = c.d(i);
    for (std::size_t col = 0; col < d.source().rank(); ++col)
      for (const auto& e : d.column(col))
        if (d.target().shift(e.row) * e.mono != d.source().shift(col))
          return {ValidationReport::Kind::homogeneity, i, e.row, col,
                  "d" + std::to_string(i) + " entry (" + std::to_string(e.row) + ", " +
                      std::to_string(col) + ") has monomial " + to_string(e.mono) +
                      " but the shift quotient is " + to_string(d.source().shift(col)) + " / " +
                      to_string(d.target().shift(e.row))};
  }
  for (std::size_t i = 2; i <= c.length(); ++i) {
    const auto& outer = c.d(i - 1);
    const auto& inner = c.d(i);
    for (std::size_t col = 0; col < inner.source().rank(); ++col) {
      std::map<std::pair<std::size_t, Monomial>, typename F::value_type> acc;
      for (const auto& e : inner.column(col))
        for (const auto& f : outer.column(e.row)) {
          auto key = std::make_pair(f.row, e.mono * f.mono);
          auto it = acc.try_emplace(key, field.zero()).first;
          it->second = field.add(it->second, field.mul(e.coeff, f.coeff));
        }
      for (const auto& [key, v] : acc)
        if (!field.is_zero(v))
          return {ValidationReport::Kind::composition, i, key.first, col,
                  "d" + std::to_string(i - 1) + " * d" + std::to_string(i) +
                      " is nonzero at (" + std::to_string(key.first) + ", " +
                      std::to_string(col) + ")"};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Degreewise evaluation

/// The K-vector-space complex C_b: basis elements whose shift divides b, with
/// entries reduced to bare coefficients. maps[i-1] is the restriction of d(i).
template <CoefficientField F>
struct Strand {
  Monomial degree;
  std::vector<std::vector<std::size_t>> basis;
  std::vector<DenseMatrix<typename F::value_type>> maps;

  std::size_t dim(std::size_t i) const { return i < basis.size() ? basis[i].size() : 0; }
};

namespace detail {

/// Restricts the complex to the basis elements selected by `keep` and
/// densifies the coefficients of entries between kept elements.
template <CoefficientField F, class Keep>
Strand<F> restrict_complex(const ChainComplex<F>& c, const Monomial& degree, Keep keep) {
  const auto& field = c.field();
  Strand<F> s;
  s.degree = degree;
  std::vector<std::vector<std::size_t>> position(c.length() + 1);
  for (std::size_t i = 0; i <= c.length(); ++i) {
    const auto& t = c.term(i);
    position[i].assign(t.rank(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < t.rank(); ++k)
      if (keep(t.shift(k))) {
        position[i][k] = kept.size();
        kept.push_back(k);
      }
    s.basis.push_back(std::move(kept));
  }
  for (std::size_t i = 1; i <= c.length(); ++i) {
    auto m = zero_matrix(field, s.basis[i - 1].size(), s.basis[i].size());
    const auto& d = c.d(i);
    for (std::size_t col = 0; col < s.basis[i].size(); ++col)
      for (const auto& e : d.column(s.basis[i][col])) {
        auto r = position[i - 1][e.row];
        if (r != static_cast<std::size_t>(-1))
          m(r, col) = e.coeff;
      }
    s.maps.push_back(std::move(m));
  }
  return s;
}

template <CoefficientField F>
std::vector<std::size_t> strand_ranks(const Strand<F>& s, const F& field) {
  std::vector<std::size_t> r;
  for (const auto& m : s.maps)
    r.push_back(rank(m, field));
  return r;
}

} // namespace detail

template <CoefficientField F>
Strand<F> evaluate_at_degree(const ChainComplex<F>& c, const Monomial& b) {
  return detail::restrict_complex(c, b, [&](const Monomial& u) { return u.divides(b); });
}

/// Dimension of H_i(C)_b.
template <CoefficientField F>
std::size_t homology_at(const ChainComplex<F>& c, std::size_t i, const Monomial& b) {
  if (i > c.length())
    return 0;
  const auto& field = c.field();
  auto s = evaluate_at_degree(c, b);
  const auto m = s.dim(i);
  auto d_out = i >= 1 ? s.maps[i - 1] : zero_matrix(field, 0, m);
  auto d_in = i < c.length() ? s.maps[i] : zero_matrix(field, m, 0);
  return homology_dim(d_in, d_out, field);
}

/// dim of (coker d1)_b.
template <CoefficientField F>
std::size_t h0_hilbert_at(const ChainComplex<F>& c, const Monomial& b) {
  auto s = evaluate_at_degree(c, b);
  return s.dim(0) - (c.length() >= 1 ? rank(s.maps[0], c.field()) : 0);
}

/// Closure of shifts + extra + {1} under pairwise lcm, sorted.
inline std::vector<Monomial> scan_degrees(std::size_t n, const std::vector<Monomial>& shifts,
                                          const std::vector<Monomial>& extra = {}) {
  std::unordered_set<Monomial> closure{Monomial(n)};
  auto absorb = [&](const Monomial& m) {
    if (closure.contains(m))
      return;
    std::vector<Monomial> fresh;
    for (const auto& s : closure)
      fresh.push_back(lcm(s, m));
    closure.insert(fresh.begin(), fresh.end());
  };
  for (const auto& m : shifts)
    absorb(m);
  for (const auto& m : extra)
    absorb(m);
  std::vector<Monomial> out(closure.begin(), closure.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Every b with b <= lcm of all shifts componentwise, in lexicographic order.
inline std::vector<Monomial> box_degrees(std::size_t n, const std::vector<Monomial>& shifts) {
  Monomial top(n);
  for (const auto& s : shifts)
    top = lcm(top, s);
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (e[k] < top[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
      if (k == 0)
        return out;
    }
    if (n == 0)
      return out;
  }
}

inline std::size_t box_volume(std::size_t n, const std::vector<Monomial>& shifts) {
  Monomial top(n);
  for (const auto& s : shifts)
    top = lcm(top, s);
  std::size_t v = 1;
  for (auto e : top.exponents())
    v *= static_cast<std::size_t>(e) + 1;
  return v;
}

struct HomologyWitness {
  std::size_t index;
  Monomial degree;
  std::size_t dim;
};

struct AcyclicityResult {
  bool acyclic = true;
  std::optional<HomologyWitness> witness;
  std::size_t degrees_checked = 0;
};

/// Scans H_i(C)_b for i >= 1 over the given degrees; stops at the first
/// nonzero group.
template <CoefficientField F>
AcyclicityResult check_acyclic_on(const ChainComplex<F>& c, const std::vector<Monomial>& degrees) {
  AcyclicityResult result;
  for (const auto& b : degrees) {
    ++result.degrees_checked;
    auto s = evaluate_at_degree(c, b);
    auto r = detail::strand_ranks(s, c.field());
    r.push_back(0);
    for (std::size_t i = 1; i <= c.length(); ++i) {
      auto h = s.dim(i) - r[i - 1] - r[i];
      if (h != 0) {
        result.acyclic = false;
        result.witness = HomologyWitness{i, b, h};
        return result;
      }
    }
  }
  return result;
}

/// Acyclicity in positive homological degrees. The strand at b depends only
/// on which shifts divide b, so it coincides with the strand at the lcm of
/// those shifts; checking the lcm lattice of all shifts therefore covers
/// every degree.
template <CoefficientField F>
AcyclicityResult is_acyclic(const ChainComplex<F>& c) {
  return check_acyclic_on(c, scan_degrees(c.ambient(), c.all_shifts()));
}

/// Exhaustive variant over the full box below the join of all shifts.
template <CoefficientField F>
AcyclicityResult is_acyclic_box(const ChainComplex<F>& c) {
  return check_acyclic_on(c, box_degrees(c.ambient(), c.all_shifts()));
}

// ---------------------------------------------------------------------------
// Betti numbers and minimalization

/// Basis counts per (i, shift); the Betti table when c is minimal.
template <CoefficientField F>
BettiTable basis_table(const ChainComplex<F>& c) {
  BettiTable t(config_of(c.field()));
  for (std::size_t i = 0; i <= c.length(); ++i)
    for (const auto& e : c.term(i).basis())
      t.add(static_cast<int>(i), e.shift, 1);
  return t;
}

/// Betti numbers of H_0(C) for an acyclic C, as the homology of C tensor K:
/// only unit entries survive, and they connect basis elements of equal shift.
template <CoefficientField F>
BettiTable betti_numbers(const ChainComplex<F>& c) {
  auto acyc = is_acyclic(c);
  if (!acyc.acyclic)
    throw InvalidComplexError("betti_numbers needs an acyclic complex; H" +
                              std::to_string(acyc.witness->index) + " is nonzero in degree " +
                              to_string(acyc.witness->degree));
  std::set<Monomial> shifts;
  for (const auto& t : c.terms())
    for (const auto& e : t.basis())
      shifts.insert(e.shift);
  BettiTable table(config_of(c.field()));
  for (const auto& b : shifts) {
    auto s = detail::restrict_complex(c, b, [&](const Monomial& u) { return u == b; });
    auto r = detail::strand_ranks(s, c.field());
    r.push_back(0);
    for (std::size_t i = 0; i <= c.length(); ++i) {
      auto below = i >= 1 ? r[i - 1] : 0;
      table.add(static_cast<int>(i), b, s.dim(i) - below - r[i]);
    }
  }
  return table;
}

/// Cancels every unit entry (mono = 1) by Gaussian elimination of complexes,
/// lowest homological index first and columns in ascending order. The result
/// is homotopy equivalent to c and has no unit entries.
template <CoefficientField F>
ChainComplex<F> minimalize(const ChainComplex<F>& c) {
  using V = typename F::value_type;
  struct Cell {
    V coeff;
    Monomial mono;
  };
  struct Work {
    std::vector<std::map<std::size_t, Cell>> cols;
    std::vector<std::set<std::size_t>> rows;
  };

  const auto& field = c.field();
  const auto p = c.length();
  std::vector<std::vector<bool>> alive;
  for (const auto& t : c.terms())
    alive.emplace_back(t.rank(), true);

  std::vector<Work> work(p + 1); // work[i] holds d(i); work[0] unused
  for (std::size_t i = 1; i <= p; ++i) {
    const auto& d = c.d(i);
    work[i].cols.resize(d.source().rank());
    work[i].rows.resize(d.target().rank());
    for (std::size_t col = 0; col < d.source().rank(); ++col)
      for (const auto& e : d.column(col)) {
        work[i].cols[col].emplace(e.row, Cell{e.coeff, e.mono});
        work[i].rows[e.row].insert(col);
      }
  }

  auto cancel = [&](std::size_t i, std::size_t a, std::size_t b) {
    auto& w = work[i];
    const auto pivot_inv = field.inv(w.cols[a].at(b).coeff);
    std::vector<std::pair<std::size_t, Cell>> col_a;
    for (const auto& [y, cell] : w.cols[a])
      if (y != b)
        col_a.emplace_back(y, cell);
    std::vector<std::pair<std::size_t, Cell>> row_b;
    for (auto x : w.rows[b])
      if (x != a)
        row_b.emplace_back(x, w.cols[x].at(b));

    for (const auto& [x, bx] : row_b) {
      auto scale = field.mul(pivot_inv, bx.coeff);
      for (const auto& [y, ya] : col_a) {
        auto delta = field.mul(ya.coeff, scale);
        auto [it, inserted] = w.cols[x].try_emplace(y, Cell{field.zero(), ya.mono * bx.mono});
        it->second.coeff = field.sub(it->second.coeff, delta);
        if (field.is_zero(it->second.coeff)) {
          w.cols[x].erase(it);
          w.rows[y].erase(x);
        } else if (inserted) {
          w.rows[y].insert(x);
        }
      }
    }
    // Drop column a and row b of d(i).
    for (const auto& [y, cell] : w.cols[a])
      w.rows[y].erase(a);
    w.cols[a].clear();
    for (auto x : std::vector<std::size_t>(w.rows[b].begin(), w.rows[b].end()))
      w.cols[x].erase(b);
    w.rows[b].clear();
    // Drop row a of d(i+1) and column b of d(i-1).
    if (i + 1 <= p) {
      auto& up = work[i + 1];
      for (auto x : up.rows[a])
        up.cols[x].erase(a);
      up.rows[a].clear();
    }
    if (i >= 2) {
      auto& down = work[i - 1];
      for (const auto& [y, cell] : down.cols[b])
        down.rows[y].erase(b);
      down.cols[b].clear();
    }
    alive[i][a] = false;
    alive[i - 1][b] = false;
  };

  for (std::size_t i = 1; i <= p; ++i) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < work[i].cols.size(); ++a) {
        if (!alive[i][a])
          continue;
        for (const auto& [b, cell] : work[i].cols[a])
          if (cell.mono.is_unit()) {
            cancel(i, a, b);
            changed = true;
            break;
          }
      }
    }
  }

  // Reassemble from surviving basis elements.
  std::vector<FreeModule> terms;
  std::vector<std::vector<std::size_t>> new_index(p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    std::vector<BasisElement> basis;
    new_index[i].assign(alive[i].size(), 0);
    for (std::size_t k = 0; k < alive[i].size(); ++k)
      if (alive[i][k]) {
        new_index[i][k] = basis.size();
        basis.push_back(c.term(i)[k]);
      }
    terms.emplace_back(c.ambient(), std::move(basis));
  }
  std::size_t top = p;
  while (top > 0 && terms[top].rank() == 0)
    --top;
  terms.resize(top + 1);

  std::vector<MonomialMatrix<F>> diffs;
  for (std::size_t i = 1; i <= top; ++i) {
    MonomialMatrix<F> m(field, terms[i], terms[i - 1]);
    for (std::size_t a = 0; a < alive[i].size(); ++a) {
      if (!alive[i][a])
        continue;
      for (const auto& [b, cell] : work[i].cols[a])
        m.set(new_index[i - 1][b], new_index[i][a], cell.coeff, cell.mono);
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex<F>(field, c.ambient(), std::move(terms), std::move(diffs));
}

/// True iff no differential has a unit entry.
template <CoefficientField F>
bool is_minimal(const ChainComplex<F>& c) {
  for (std::size_t i = 1; i <= c.length(); ++i)
    for (std::size_t col = 0; col < c.d(i).source().rank(); ++col)
      for (const auto& e : c.d(i).column(col))
        if (e.mono.is_unit())
          return false;
  return true;
}

} // namespace regprod

#endif // REGPROD_FREE_COMPLEX_HPP
