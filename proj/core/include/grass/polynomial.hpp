#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grass/context.hpp"
#include "grass/rational.hpp"

namespace grass {

enum class VarFamily { P, Q };

/// p_j = c_j(S) (1 <= j <= k) or q_l = c_l(Q) (1 <= l <= n-k).
struct VarId {
  VarFamily family;
  int index;

  static VarId p(int j) { return {VarFamily::P, j}; }
  static VarId q(int l) { return {VarFamily::Q, l}; }

  /// Weight j of p_j or q_j; the cohomological degree is twice this.
  int weight() const { return index; }
  std::string name() const { return (family == VarFamily::P ? "p" : "q") + std::to_string(index); }

  auto operator<=>(const VarId&) const = default;
};

/// Position of a variable in the canonical order p_1 < ... < p_k < q_1 < ... < q_{n-k}.
int slot(const VarId& v, const RingContext& ctx);
VarId var_at(int slot, const RingContext& ctx);
/// All variables in canonical order.
std::vector<VarId> variables(const RingContext& ctx);
/// Parses "p3" / "q1"; throws if out of range for ctx.
VarId parse_var(const std::string& name, const RingContext& ctx);

/// Dense exponent vector over the canonical variable order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::span<const int> exponents() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  std::size_t num_vars() const { return exps_.size(); }
  int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// 2 * sum_j j*alpha_j + 2 * sum_l l*beta_l.
int coh_degree(const Monomial& m, const RingContext& ctx);

/// Maps normalize with descending lexicographic order ("p1^2*q2" before "p2").
using MonomialOrder = std::greater<Monomial>;

/// Sparse polynomial over Q in the Chern-class variables of one Grassmannian.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(RingContext ctx) : ctx_(ctx) {}
  static Polynomial constant(RingContext ctx, const Rational& c);
  static Polynomial variable(RingContext ctx, VarId v);
  static Polynomial monomial(RingContext ctx, Monomial m, const Rational& c = 1);

  const RingContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Merges c into the coefficient of m, dropping it if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  RingContext ctx_;
  TermMap terms_;
};

/// Monomial whose only exponent is 1 at v.
Monomial unit_monomial(VarId v, const RingContext& ctx);

/// p_j with p_0 = 1 and p_j = 0 outside [0, k]; likewise q_l.
Polynomial p_var(int j, const RingContext& ctx);
Polynomial q_var(int l, const RingContext& ctx);

/// Keyed by cohomological degree; sums back to f.
std::map<int, Polynomial> graded_components(const Polynomial& f);
bool is_homogeneous(const Polynomial& f);

Polynomial partial_derivative(const Polynomial& f, VarId v);
/// Applies prod_i (d/dx_i)^{orders[i]} over the canonical variable order.
Polynomial partial_derivative(const Polynomial& f, std::span<const int> orders);

/// "3*p1^2*q2 - 1/2*p2"; the zero polynomial prints as "0".
std::string to_text(const Polynomial& f);
/// Parses the text form for ctx; throws std::invalid_argument on bad input.
Polynomial parse_polynomial(const RingContext& ctx, const std::string& text);

/// Writes the body of a monomial ("p1^2*q2") using custom variable names.
std::string monomial_text(const Monomial& m, const std::function<std::string(int)>& name_of_slot);
/// Shared term printer for polynomial-shaped maps.
std::string terms_text(const Polynomial::TermMap& terms,
                       const std::function<std::string(int)>& name_of_slot);

}  // namespace grass
