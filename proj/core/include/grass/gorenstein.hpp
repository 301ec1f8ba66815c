#pragma once

#include <string>

#include "grass/matrix.hpp"
#include "grass/polynomial.hpp"
#include "grass/report.hpp"

namespace grass {

/// Polynomial in the dual variables x_1..x_k, y_1..y_{n-k}. Slot i of a
/// monomial is the dual of slot i of the p, q variables.
class DualPolynomial {
 public:
  explicit DualPolynomial(RingContext ctx) : body_(ctx) {}
  explicit DualPolynomial(Polynomial body) : body_(std::move(body)) {}

  const RingContext& context() const { return body_.context(); }
  const Polynomial::TermMap& terms() const { return body_.terms(); }
  bool is_zero() const { return body_.is_zero(); }
  Rational coefficient(const Monomial& m) const { return body_.coefficient(m); }
  Rational constant_term() const { return body_.constant_term(); }
  /// The same terms read in the p, q variables.
  const Polynomial& body() const { return body_; }

  bool operator==(const DualPolynomial&) const = default;

 private:
  Polynomial body_;
};

/// "x1" for p1's slot, "y2" for q2's slot.
std::string dual_var_name(int slot, const RingContext& ctx);
std::string to_text(const DualPolynomial& P);

/// sum over exponent patterns of weighted degree k(n-k) of
/// integral(p^a q^b) / (a! b!) x^a y^b.
DualPolynomial cogenerator(const RingContext& ctx);

/// f(d/dx, d/dy) P. Throws ContextMismatch if the contexts differ.
DualPolynomial apply_dual(const Polynomial& f, const DualPolynomial& P);

/// Constant term of (f g)(d) P.
Rational apolarity(const Polynomial& f, const Polynomial& g, const DualPolynomial& P);

/// Apolarity pairing of the canonical lifts of the Schubert basis.
RationalMatrix apolarity_matrix(const RingContext& ctx);

/// R_m annihilate P, the pairing on lifts has rank C(n,k), is block antidiagonal,
/// and is a fixed multiple of the Poincare pairing.
Report annihilator_check(const RingContext& ctx, std::uint64_t seed = 1, int samples = 3);

}  // namespace grass
