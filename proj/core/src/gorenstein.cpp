#include "grass/gorenstein.hpp"

#include <functional>

#include "grass/cohomology.hpp"
#include "grass/random.hpp"

namespace grass {

std::string dual_var_name(int slot, const RingContext& ctx) {
  VarId v = var_at(slot, ctx);
  return (v.family == VarFamily::P ? "x" : "y") + std::to_string(v.index);
}

std::string to_text(const DualPolynomial& P) {
  const RingContext& ctx = P.context();
  return terms_text(P.terms(), [&](int s) { return dual_var_name(s, ctx); });
}

DualPolynomial cogenerator(const RingContext& ctx) {
  const int nv = ctx.num_vars();
  const int target = ctx.top_half_degree();
  Polynomial out(ctx);
  Monomial m(nv);
  // Every exponent vector of weighted degree k(n-k).
  std::function<void(int, int)> fill = [&](int s, int remaining) {
    if (s == nv) {
      if (remaining != 0) return;
      Rational value = integrate(normal_form(Polynomial::monomial(ctx, m)));
      if (value == 0) return;
      Rational denom = 1;
      for (int e : m.exponents()) denom *= factorial(e);
      out.add_term(m, value / denom);
      return;
    }
    int w = var_at(s, ctx).weight();
    for (int e = 0; e * w <= remaining; ++e) {
      m[s] = e;
      fill(s + 1, remaining - e * w);
    }
    m[s] = 0;
  };
  fill(0, target);
  return DualPolynomial(out);
}

DualPolynomial apply_dual(const Polynomial& f, const DualPolynomial& P) {
  require_same(f.context(), P.context());
  Polynomial out(P.context());
  for (const auto& [mono, c] : f.terms()) out += partial_derivative(P.body(), mono.exponents()) * c;
  return DualPolynomial(out);
}

Rational apolarity(const Polynomial& f, const Polynomial& g, const DualPolynomial& P) {
  return apply_dual(f * g, P).constant_term();
}

RationalMatrix apolarity_matrix(const RingContext& ctx) {
  const SchubertBasis& basis = schubert_basis(ctx);
  DualPolynomial P = cogenerator(ctx);
  std::vector<Polynomial> lifts;
  std::vector<DualPolynomial> images;
  for (const auto& lambda : basis.elements()) {
    lifts.push_back(jacobi_trudi_h(lambda, ctx));
    images.push_back(apply_dual(lifts.back(), P));
  }
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // g(d)(f(d)P) has the same constant term as (fg)(d)P.
      out(i, j) = apply_dual(lifts[j], images[i]).constant_term();
    }
  }
  return out;
}

Report annihilator_check(const RingContext& ctx, std::uint64_t seed, int samples) {
  Report report("gorenstein", ctx);
  DualPolynomial P = cogenerator(ctx);
  report.record({{"property", "cogenerator"}, {"terms", P.terms().size()}, {"value", to_text(P)}, {"pass", !P.is_zero()}});
  Rng rng(seed);
  for (int m = 1; m <= ctx.n(); ++m) {
    Polynomial rm = relation(m, ctx);
    bool annihilates = apply_dual(rm, P).is_zero();
    int failures = 0;
    for (int t = 0; t < samples; ++t) {
      Polynomial g = random_polynomial(ctx, rng, 3, ctx.top_half_degree());
      if (!apply_dual(g * rm, P).is_zero()) ++failures;
    }
    report.record({{"property", "R_m annihilates P"},
                   {"m", m},
                   {"random_multiples", samples},
                   {"failures", failures},
                   {"pass", annihilates && failures == 0}});
  }

  const SchubertBasis& basis = schubert_basis(ctx);
  RationalMatrix pairing = apolarity_matrix(ctx);
  std::size_t rank = pairing.rank();
  report.record({{"property", "pairing rank"}, {"rank", rank}, {"dim", basis.size()}, {"pass", rank == basis.size()}});

  bool antidiagonal = true;
  bool blocks_full = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (sgn(pairing(i, j)) != 0 && basis.at(i).size() + basis.at(j).size() != ctx.top_half_degree()) {
        antidiagonal = false;
      }
    }
  }
  for (int j = 0; j <= ctx.top_half_degree(); ++j) {
    RationalMatrix block = pairing.submatrix(basis.block(j), basis.block(ctx.top_half_degree() - j));
    if (block.rank() != basis.block(j).size()) blocks_full = false;
  }
  report.record({{"property", "block antidiagonal with full-rank blocks"}, {"pass", antidiagonal && blocks_full}});

  // One scalar, read off at (s[], full box), must relate the two pairings.
  Rational scale = pairing(basis.index_of(Partition()), basis.index_of(full_box(ctx)));
  bool proportional = scale != 0;
  for (std::size_t i = 0; i < basis.size() && proportional; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // Off the complementary degrees both sides vanish by grading.
      if (basis.at(i).size() + basis.at(j).size() != ctx.top_half_degree()) continue;
      Rational poincare = poincare_pairing(CohomologyClass::schubert(ctx, basis.at(i)),
                                           CohomologyClass::schubert(ctx, basis.at(j)));
      if (pairing(i, j) != scale * poincare) {
        proportional = false;
        break;
      }
    }
  }
  report.record({{"property", "apolarity = scalar * Poincare pairing"},
                 {"scalar", to_string(scale)},
                 {"pass", proportional}});
  return report;
}

}  // namespace grass
