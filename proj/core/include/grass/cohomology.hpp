#pragma once

#include <cstdint>
#include <vector>

#include "grass/polynomial.hpp"
#include "grass/schur.hpp"

namespace grass {

/// An element of A = C[p,q]/I, held in its unique Schubert normal form.
class CohomologyClass {
 public:
  explicit CohomologyClass(SchubertVector value) : value_(std::move(value)) {}
  static CohomologyClass one(const RingContext& ctx);
  static CohomologyClass schubert(const RingContext& ctx, const Partition& lambda);

  const SchubertVector& value() const { return value_; }
  const RingContext& context() const { return value_.context(); }
  bool is_zero() const { return value_.is_zero(); }

  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    return CohomologyClass(a.value_ + b.value_);
  }
  friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    return CohomologyClass(a.value_ - b.value_);
  }

  bool operator==(const CohomologyClass&) const = default;

 private:
  SchubertVector value_;
};

/// R_m = sum_{r+s=m} p_r q_s with p_0 = q_0 = 1. Throws std::out_of_range unless 1 <= m <= n.
Polynomial relation(int m, const RingContext& ctx);
std::vector<Polynomial> relations(const RingContext& ctx);

CohomologyClass normal_form(const Polynomial& f);
bool ideal_member(const Polynomial& f);

/// b_{2j} for half-degree j = 0..k(n-k).
std::vector<std::int64_t> betti(const RingContext& ctx);

/// Coefficient of the full-box class; the integral is normalized so that it is 1 there.
Rational integrate(const CohomologyClass& c);
Rational poincare_pairing(const CohomologyClass& a, const CohomologyClass& b);

Partition full_box(const RingContext& ctx);

/// Certificate polynomials from the proof that [D_e, R_m] vanishes mod I,
/// built term for term as displayed: A_j^{(rs)}, B_l^{(rs)}, C^{(rs)}.
Polynomial certificate_A(int r, int s, int j, const RingContext& ctx);
Polynomial certificate_B(int r, int s, int l, const RingContext& ctx);
Polynomial certificate_C(int r, int s, const RingContext& ctx);

}  // namespace grass
