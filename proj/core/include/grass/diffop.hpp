#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grass/operator_matrix.hpp"
#include "grass/polynomial.hpp"
#include "grass/report.hpp"

namespace grass {

/// prod_i (d/dx_i)^{orders[i]} over the canonical variable order.
class DerivMonomial {
 public:
  explicit DerivMonomial(int num_vars) : orders_(num_vars, 0) {}
  explicit DerivMonomial(std::vector<int> orders) : orders_(std::move(orders)) {}
  static DerivMonomial of(const RingContext& ctx, std::initializer_list<VarId> vars);

  std::span<const int> orders() const { return orders_; }
  int operator[](std::size_t i) const { return orders_[i]; }
  int& operator[](std::size_t i) { return orders_[i]; }
  std::size_t num_vars() const { return orders_.size(); }
  int total_order() const;
  /// prod_i orders[i]!
  Rational factorial() const;

  auto operator<=>(const DerivMonomial&) const = default;

 private:
  std::vector<int> orders_;
};

/// sum_alpha a_alpha(p, q) * d^alpha, normal ordered: coefficients left of derivatives.
class DiffOperator {
 public:
  using TermMap = std::map<DerivMonomial, Polynomial>;

  explicit DiffOperator(RingContext ctx) : ctx_(ctx) {}
  /// The order-0 operator of multiplication by f.
  static DiffOperator multiplication(const Polynomial& f);
  static DiffOperator term(const Polynomial& coeff, const DerivMonomial& deriv);

  const RingContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total order with a nonzero coefficient; -1 for the zero operator.
  int order() const;
  Polynomial coefficient(const DerivMonomial& deriv) const;

  void add_term(const DerivMonomial& deriv, const Polynomial& coeff);

  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator-=(const DiffOperator& other);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Rational& c, const DiffOperator& a);
  /// Left multiplication by a polynomial (composition with an order-0 operator on the left).
  friend DiffOperator operator*(const Polynomial& f, const DiffOperator& a);
  /// Composition a o b, normal ordered by the Leibniz rule.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);

  bool operator==(const DiffOperator&) const = default;

 private:
  RingContext ctx_;
  TermMap terms_;
};

Polynomial apply(const DiffOperator& op, const Polynomial& f);

/// [a, b] = a o b - b o a, normal ordered.
DiffOperator diff_commutator(const DiffOperator& a, const DiffOperator& b);

/// D_h = -2 sum j p_j d/dp_j - 2 sum j q_j d/dq_j + k(n-k).
DiffOperator build_D_h(const RingContext& ctx);
/// D_f = -p_1.
DiffOperator build_D_f(const RingContext& ctx);
/// The second-order raising operator D_e.
DiffOperator build_D_e(const RingContext& ctx);

/// Coefficient of d^2/dp_j dp_l (j-indexed sum) and its q counterpart; exposed for symmetry checks.
Polynomial de_pp_coefficient(int j, int l, const RingContext& ctx);
Polynomial de_qq_coefficient(int j, int l, const RingContext& ctx);
/// sum_{d=0}^{j-1} p_d q_{j+l-d-1}, the inner sum of the mixed coefficient of D_e.
Polynomial de_pq_inner(int j, int l, const RingContext& ctx);

/// True iff every coefficient of [op, R_m] is in I for every m, which is
/// equivalent to op(I) being contained in I.
bool preserves_ideal(const DiffOperator& op);

/// Coefficient test for every R_m plus spot checks op(g * R_m) in I for random g.
Report ideal_preservation_check(const DiffOperator& op, std::uint64_t seed = 1, int samples = 3);

/// Exact relations [D_h, R_m] = -2m R_m and [D_f, R_m] = 0, and the certificate
/// sums over r + s = m of A_j^{(rs)}, B_l^{(rs)}, C^{(rs)} lying in I.
Report ideal_certificates_check(const RingContext& ctx);

class NotIdealPreserving : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix of c -> NF(op(lift(c))). Throws NotIdealPreserving if op does not preserve I.
OperatorMatrix induced_matrix(const DiffOperator& op, std::optional<int> shift = std::nullopt);

/// Text form "a * d^2/dp1dq2 + ..." for reports.
std::string to_text(const DiffOperator& op);
std::string deriv_text(const DerivMonomial& deriv, const RingContext& ctx);

}  // namespace grass
