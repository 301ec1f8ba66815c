#include "grass/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace grass {

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && sgn((*this)(i, j)) != 0) return false;
    }
  }
  return true;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Rational out = 0;
  for (std::size_t i = 0; i < rows_; ++i) out += (*this)(i, i);
  return out;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix work(*this);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(work(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(rank, j));
    }
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (sgn(work(i, col)) == 0) continue;
      Rational factor = work(i, col) / work(rank, col);
      for (std::size_t j = col; j < cols_; ++j) work(i, j) -= factor * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> row_ids,
                                         std::span<const std::size_t> col_ids) const {
  RationalMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (std::size_t j = 0; j < col_ids.size(); ++j) out(i, j) = (*this)(row_ids[i], col_ids[j]);
  }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  // The operator matrices here are sparse; skip zero entries of the left factor.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Rational& x = a(i, t);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(t, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  }
  return out;
}

std::optional<EntryDiff> first_difference(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return EntryDiff{i, j, a(i, j), b(i, j)};
    }
  }
  return std::nullopt;
}

}  // namespace grass
