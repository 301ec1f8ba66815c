#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "grass/operator_matrix.hpp"

namespace grass {

/// e_{j_1} ^ ... ^ e_{j_k} with n-1 >= j_1 > ... > j_k >= 0.
class WedgeBasisElement {
 public:
  /// Throws std::invalid_argument unless indices strictly decrease within [0, n-1] and have length k.
  WedgeBasisElement(std::vector<int> indices, const RingContext& ctx);

  const std::vector<int>& indices() const { return indices_; }
  auto operator<=>(const WedgeBasisElement&) const = default;

 private:
  std::vector<int> indices_;
};

class WedgeVector {
 public:
  using CoordMap = std::map<WedgeBasisElement, Rational>;

  explicit WedgeVector(RingContext ctx) : ctx_(ctx) {}
  static WedgeVector basis(const WedgeBasisElement& e, const RingContext& ctx, const Rational& c = 1);

  const RingContext& context() const { return ctx_; }
  const CoordMap& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Rational coefficient(const WedgeBasisElement& e) const;

  void add(const WedgeBasisElement& e, const Rational& c);
  /// Adds c * e_{indices[0]} ^ ... in any order: sorts with sign, drops repeated indices.
  void add_unsorted(std::vector<int> indices, const Rational& c);

  WedgeVector& operator+=(const WedgeVector& other);
  WedgeVector& operator-=(const WedgeVector& other);
  WedgeVector& operator*=(const Rational& c);
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
  friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
  friend WedgeVector operator*(const Rational& c, WedgeVector a) { return a *= c; }

  bool operator==(const WedgeVector&) const = default;

 private:
  RingContext ctx_;
  CoordMap coords_;
};

/// sigma_lambda -> e_{lambda_1 + k - 1} ^ ... ^ e_{lambda_k}.
WedgeBasisElement partition_to_wedge(const Partition& lambda, const RingContext& ctx);
Partition wedge_to_partition(const WedgeBasisElement& e, const RingContext& ctx);

/// All wedge basis elements, in the Schubert enumeration order.
std::vector<WedgeBasisElement> wedge_basis(const RingContext& ctx);

/// Matrix unit E_ij acting as a derivation: each slot holding e_j is replaced by e_i.
WedgeVector matrix_unit_action(int i, int j, const WedgeVector& v);

/// The principal triple h = sum (n-1-2j) E_jj, e = sum j(n-j) E_{j-1,j}, f = sum E_{j,j-1}.
WedgeVector sl2_h(const WedgeVector& v);
WedgeVector sl2_e(const WedgeVector& v);
WedgeVector sl2_f(const WedgeVector& v);

using WedgeMap = std::function<WedgeVector(const WedgeVector&)>;

/// Conjugates a linear map on the k-th exterior power to A through the Schubert
/// isomorphism. Throws std::invalid_argument if additivity fails on basis pairs.
OperatorMatrix transport_to_cohomology(const WedgeMap& action, const RingContext& ctx,
                                       std::optional<int> shift = std::nullopt);

}  // namespace grass
