#ifndef REGPROD_LINALG_HPP
#define REGPROD_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "regprod/error.hpp"
#include "regprod/field.hpp"

namespace regprod {

/// Row-major dense matrix over a field's value type.
template <class T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix transpose() const {
    DenseMatrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r)
        t.data_.push_back((*this)(r, c));
    return t;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <CoefficientField F>
DenseMatrix<typename F::value_type> zero_matrix(const F& field, std::size_t rows,
                                                std::size_t cols) {
  return DenseMatrix<typename F::value_type>(rows, cols, field.zero());
}

template <CoefficientField F>
DenseMatrix<typename F::value_type> identity_matrix(const F& field, std::size_t n) {
  auto m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = field.one();
  return m;
}

template <CoefficientField F>
DenseMatrix<typename F::value_type> multiply(const F& field,
                                             const DenseMatrix<typename F::value_type>& a,
                                             const DenseMatrix<typename F::value_type>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product of incompatible shapes");
  auto out = zero_matrix(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k)))
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!field.is_zero(b(k, j)))
          out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Rank by exact Gaussian elimination, pivoting on the first nonzero entry
/// of each column.
template <CoefficientField F>
std::size_t rank(DenseMatrix<typename F::value_type> a, const F& field) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && field.is_zero(a(pivot, c)))
      ++pivot;
    if (pivot == a.rows())
      continue;
    if (pivot != r)
      for (std::size_t k = c; k < a.cols(); ++k)
        std::swap(a(pivot, k), a(r, k));
    auto inv = field.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (field.is_zero(a(i, c)))
        continue;
      auto factor = field.mul(a(i, c), inv);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!field.is_zero(a(r, k)))
          a(i, k) = field.sub(a(i, k), field.mul(factor, a(r, k)));
    }
    ++r;
  }
  return r;
}

/// Homology at the middle space V of  U --d_in--> V --d_out--> W.
/// d_in has dim V rows; d_out has dim V columns.
template <CoefficientField F>
std::size_t homology_dim(const DenseMatrix<typename F::value_type>& d_in,
                         const DenseMatrix<typename F::value_type>& d_out, const F& field) {
  const auto m = d_in.rows();
  if (d_out.cols() != m)
    throw DimensionError("d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                         std::to_string(m) + " rows");
  auto comp = multiply(field, d_out, d_in);
  for (std::size_t i = 0; i < comp.rows(); ++i)
    for (std::size_t j = 0; j < comp.cols(); ++j)
      if (!field.is_zero(comp(i, j)))
        throw InvalidComplexError("d_out * d_in is nonzero");
  return m - rank(d_out, field) - rank(d_in, field);
}

} // namespace regprod

#endif // REGPROD_LINALG_HPP
