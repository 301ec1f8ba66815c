#include "grass/operator_matrix.hpp"

#include <stdexcept>

namespace grass {

namespace {

std::optional<int> combine(std::optional<int> a, std::optional<int> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::optional<int> same_or_none(std::optional<int> a, std::optional<int> b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

}  // namespace

OperatorMatrix::OperatorMatrix(RingContext ctx, RationalMatrix entries, std::optional<int> shift)
    : ctx_(ctx), entries_(std::move(entries)), shift_(shift) {
  std::size_t dim = schubert_basis(ctx_).size();
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("operator matrix for " + ctx_.name() + " must be " + std::to_string(dim) +
                                "x" + std::to_string(dim));
  }
}

OperatorMatrix OperatorMatrix::zero(const RingContext& ctx, std::optional<int> shift) {
  std::size_t dim = schubert_basis(ctx).size();
  return OperatorMatrix(ctx, RationalMatrix(dim, dim), shift);
}

OperatorMatrix OperatorMatrix::identity(const RingContext& ctx) {
  return OperatorMatrix(ctx, RationalMatrix::identity(schubert_basis(ctx).size()), 0);
}

OperatorMatrix OperatorMatrix::from_map(const RingContext& ctx,
                                        const std::function<SchubertVector(const Partition&)>& image,
                                        std::optional<int> shift) {
  const SchubertBasis& basis = schubert_basis(ctx);
  RationalMatrix entries(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    SchubertVector v = image(basis.at(col));
    require_same(ctx, v.context());
    for (const auto& [mu, c] : v.coords()) entries(basis.index_of(mu), col) = c;
  }
  return OperatorMatrix(ctx, std::move(entries), shift);
}

bool OperatorMatrix::respects_shift() const {
  if (!shift_) return true;
  const SchubertBasis& basis = schubert_basis(ctx_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(entries_(i, j)) != 0 && 2 * basis.at(i).size() != 2 * basis.at(j).size() + *shift_) {
        return false;
      }
    }
  }
  return true;
}

SchubertVector OperatorMatrix::apply(const SchubertVector& v) const {
  require_same(ctx_, v.context());
  const SchubertBasis& basis = schubert_basis(ctx_);
  SchubertVector out(ctx_);
  for (const auto& [lambda, c] : v.coords()) {
    std::size_t col = basis.index_of(lambda);
    for (std::size_t row = 0; row < dim(); ++row) {
      if (sgn(entries_(row, col)) != 0) out.add(basis.at(row), entries_(row, col) * c);
    }
  }
  return out;
}

SchubertVector OperatorMatrix::column(const Partition& lambda) const {
  return apply(SchubertVector::basis(ctx_, lambda));
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.ctx_, b.ctx_);
  return OperatorMatrix(a.ctx_, a.entries_ + b.entries_, same_or_none(a.shift_, b.shift_));
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.ctx_, b.ctx_);
  return OperatorMatrix(a.ctx_, a.entries_ - b.entries_, same_or_none(a.shift_, b.shift_));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.ctx_, b.ctx_);
  return OperatorMatrix(a.ctx_, a.entries_ * b.entries_, combine(a.shift_, b.shift_));
}

OperatorMatrix operator*(const Rational& c, const OperatorMatrix& a) {
  return OperatorMatrix(a.ctx_, a.entries_ * c, a.shift_);
}

bool OperatorMatrix::same_entries(const OperatorMatrix& other) const {
  return ctx_ == other.ctx_ && entries_ == other.entries_;
}

OperatorMatrix multiplication_matrix(const CohomologyClass& a) {
  return OperatorMatrix::from_map(a.context(), [&](const Partition& lambda) {
    return schubert_multiply(a.value(), SchubertVector::basis(a.context(), lambda));
  });
}

}  // namespace grass
