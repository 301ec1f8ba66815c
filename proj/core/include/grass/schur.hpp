#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grass/context.hpp"
#include "grass/partition.hpp"
#include "grass/polynomial.hpp"
#include "grass/rational.hpp"

namespace grass {

struct GradedLess {
  bool operator()(const Partition& a, const Partition& b) const { return graded_less(a, b); }
};

inline Box box_of(const RingContext& ctx) { return Box(ctx.k(), ctx.m()); }

/// Exact linear combination of Schubert classes sigma_lambda, lambda in the
/// k x (n-k) box. Iteration follows the basis order (graded, then lex-descending).
class SchubertVector {
 public:
  using CoordMap = std::map<Partition, Rational, GradedLess>;

  explicit SchubertVector(RingContext ctx) : ctx_(ctx) {}
  static SchubertVector basis(RingContext ctx, const Partition& lambda, const Rational& c = 1);

  const RingContext& context() const { return ctx_; }
  const CoordMap& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  bool is_homogeneous() const;

  /// Throws std::invalid_argument if lambda is outside the box.
  void add(const Partition& lambda, const Rational& c);
  /// Like add, but silently drops out-of-box partitions (quotient truncation).
  void add_truncated(const Partition& lambda, const Rational& c);

  SchubertVector& operator+=(const SchubertVector& other);
  SchubertVector& operator-=(const SchubertVector& other);
  SchubertVector& operator*=(const Rational& c);
  friend SchubertVector operator+(SchubertVector a, const SchubertVector& b) { return a += b; }
  friend SchubertVector operator-(SchubertVector a, const SchubertVector& b) { return a -= b; }
  friend SchubertVector operator*(SchubertVector a, const Rational& c) { return a *= c; }
  friend SchubertVector operator*(const Rational& c, SchubertVector a) { return a *= c; }
  SchubertVector operator-() const { return *this * Rational(-1); }

  bool operator==(const SchubertVector&) const = default;

 private:
  RingContext ctx_;
  CoordMap coords_;
};

/// The Schubert basis of one Grassmannian in the fixed enumeration order.
class SchubertBasis {
 public:
  explicit SchubertBasis(RingContext ctx);

  const RingContext& context() const { return ctx_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Partition>& elements() const { return elements_; }
  const Partition& at(std::size_t i) const { return elements_[i]; }
  /// Throws std::out_of_range for partitions outside the box.
  std::size_t index_of(const Partition& lambda) const;
  /// Basis positions with |lambda| = half_degree.
  const std::vector<std::size_t>& block(int half_degree) const;

 private:
  RingContext ctx_;
  std::vector<Partition> elements_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Shared, immutable basis for ctx (built once per context).
const SchubertBasis& schubert_basis(const RingContext& ctx);

/// Multiplication by sigma_(r) = h_r: horizontal r-strips, truncated to the box.
SchubertVector pieri_h(const SchubertVector& v, int r);
/// Multiplication by sigma_(1^r) = e_r: vertical r-strips, truncated to the box.
SchubertVector pieri_e(const SchubertVector& v, int r);

/// Jacobi-Trudi: det(h_{lambda_i - i + j}) with h_m -> q_m. The canonical q-only lift.
Polynomial jacobi_trudi_h(const Partition& lambda, const RingContext& ctx);
/// Dual Jacobi-Trudi on the conjugate with e_m -> (-1)^m p_m. A p-only lift.
Polynomial giambelli_e(const Partition& lambda, const RingContext& ctx);

/// f * v, where p_j acts as (-1)^j pieri_e(., j) and q_l as pieri_h(., l).
SchubertVector act(const Polynomial& f, const SchubertVector& v);

/// The normal form map C[p,q] -> A in the Schubert basis.
SchubertVector chern_to_schubert(const Polynomial& f);

/// Bilinear product via Jacobi-Trudi expansion of the right factor and iterated Pieri.
SchubertVector schubert_multiply(const SchubertVector& a, const SchubertVector& b);

/// Canonical polynomial representative: sum of c_lambda * jacobi_trudi_h(lambda).
Polynomial lift(const SchubertVector& v);

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const RingContext& ctx);

/// "s[2] + s[1,1]", "4*s[]", "0".
std::string to_text(const SchubertVector& v);

/// Determinant of a square matrix of polynomials by memoized Laplace expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& entries, const RingContext& ctx);

}  // namespace grass
