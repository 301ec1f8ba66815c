#include "grass/cohomology.hpp"

#include <stdexcept>

namespace grass {

CohomologyClass CohomologyClass::one(const RingContext& ctx) {
  return CohomologyClass(SchubertVector::basis(ctx, Partition()));
}

CohomologyClass CohomologyClass::schubert(const RingContext& ctx, const Partition& lambda) {
  return CohomologyClass(SchubertVector::basis(ctx, lambda));
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
  return CohomologyClass(schubert_multiply(a.value_, b.value_));
}

Polynomial relation(int m, const RingContext& ctx) {
  if (m < 1 || m > ctx.n()) {
    throw std::out_of_range("relation index " + std::to_string(m) + " outside [1, n] for " + ctx.name());
  }
  Polynomial out(ctx);
  for (int r = 0; r <= m; ++r) out += p_var(r, ctx) * q_var(m - r, ctx);
  return out;
}

std::vector<Polynomial> relations(const RingContext& ctx) {
  std::vector<Polynomial> out;
  for (int m = 1; m <= ctx.n(); ++m) out.push_back(relation(m, ctx));
  return out;
}

CohomologyClass normal_form(const Polynomial& f) { return CohomologyClass(chern_to_schubert(f)); }

bool ideal_member(const Polynomial& f) { return chern_to_schubert(f).is_zero(); }

std::vector<std::int64_t> betti(const RingContext& ctx) {
  std::vector<std::int64_t> out(ctx.top_half_degree() + 1, 0);
  for (const auto& lambda : schubert_basis(ctx).elements()) ++out[lambda.size()];
  return out;
}

Partition full_box(const RingContext& ctx) { return Partition(std::vector<int>(ctx.k(), ctx.m())); }

Rational integrate(const CohomologyClass& c) { return c.value().coefficient(full_box(c.context())); }

Rational poincare_pairing(const CohomologyClass& a, const CohomologyClass& b) {
  require_same(a.context(), b.context());
  return integrate(a * b);
}

Polynomial certificate_A(int r, int s, int j, const RingContext& ctx) {
  auto p = [&](int i) { return p_var(i, ctx); };
  auto q = [&](int i) { return q_var(i, ctx); };
  Polynomial first(ctx), second(ctx);
  for (int d = 0; d <= j - 1; ++d) {
    first += Rational(j + r - 2 * d - 1) * (p(d) * p(j + r - d - 1) * q(s));
    second += p(d) * q(j + s - d - 1) * p(r);
  }
  return first + Rational(j + s - 1) * second;
}

Polynomial certificate_B(int r, int s, int l, const RingContext& ctx) {
  auto p = [&](int i) { return p_var(i, ctx); };
  auto q = [&](int i) { return q_var(i, ctx); };
  Polynomial first(ctx), second(ctx);
  for (int d = 0; d <= l - 1; ++d) {
    first += Rational(l + s - 2 * d - 1) * (q(d) * q(l + s - d - 1) * p(r));
    second += p(r + l - d - 1) * q(d) * q(s);
  }
  return first + Rational(r + l - 1) * second;
}

Polynomial certificate_C(int r, int s, const RingContext& ctx) {
  auto p = [&](int i) { return p_var(i, ctx); };
  auto q = [&](int i) { return q_var(i, ctx); };
  const int k = ctx.k(), n = ctx.n();
  Polynomial out = Rational(-(k - r + 1) * (n - k + r - 1)) * (p(r - 1) * q(s));
  out += Rational((k + s - 1) * (n - k - s + 1)) * (p(r) * q(s - 1));
  Polynomial tail(ctx);
  for (int d = 0; d <= r - 1; ++d) tail += p(d) * q(r + s - d - 1);
  return out + Rational(2 * (r + s - 1)) * tail;
}

}  // namespace grass
