#pragma once

#include <functional>
#include <optional>

#include "grass/cohomology.hpp"
#include "grass/matrix.hpp"

namespace grass {

/// A linear operator on A in the Schubert basis. Column lambda holds the image
/// of sigma_lambda. The optional shift records the change of cohomological degree.
class OperatorMatrix {
 public:
  OperatorMatrix(RingContext ctx, RationalMatrix entries, std::optional<int> shift = std::nullopt);
  static OperatorMatrix zero(const RingContext& ctx, std::optional<int> shift = std::nullopt);
  static OperatorMatrix identity(const RingContext& ctx);
  /// Tabulates a linear map on the basis.
  static OperatorMatrix from_map(const RingContext& ctx,
                                 const std::function<SchubertVector(const Partition&)>& image,
                                 std::optional<int> shift = std::nullopt);

  const RingContext& context() const { return ctx_; }
  const RationalMatrix& entries() const { return entries_; }
  std::optional<int> shift() const { return shift_; }
  std::size_t dim() const { return entries_.rows(); }

  /// True iff every nonzero entry (mu, lambda) satisfies 2|mu| = 2|lambda| + shift.
  bool respects_shift() const;

  SchubertVector apply(const SchubertVector& v) const;
  /// Image of sigma_lambda as a vector.
  SchubertVector column(const Partition& lambda) const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const Rational& c, const OperatorMatrix& a);

  /// Entrywise equality; shift tags are not compared.
  bool same_entries(const OperatorMatrix& other) const;

 private:
  RingContext ctx_;
  RationalMatrix entries_;
  std::optional<int> shift_;
};

/// Matrix of c -> a * c.
OperatorMatrix multiplication_matrix(const CohomologyClass& a);

}  // namespace grass
