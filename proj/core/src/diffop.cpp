#include "grass/diffop.hpp"

#include <functional>

#include "grass/cohomology.hpp"
#include "grass/random.hpp"

namespace grass {

Polynomial random_polynomial(const RingContext& ctx, Rng& rng, int terms, int max_weight, int coeff_bound) {
  Polynomial out(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx.num_vars());
    int budget = rng.uniform(0, max_weight);
    // Spend the weight budget on random variables that still fit.
    for (int tries = 0; tries < 4 * ctx.num_vars() && budget > 0; ++tries) {
      int s = rng.uniform(0, ctx.num_vars() - 1);
      int w = var_at(s, ctx).weight();
      if (w <= budget) {
        ++m[s];
        budget -= w;
      }
    }
    int c = rng.uniform(-coeff_bound, coeff_bound);
    if (c == 0) c = 1;
    out.add_term(m, c);
  }
  return out;
}

DerivMonomial DerivMonomial::of(const RingContext& ctx, std::initializer_list<VarId> vars) {
  DerivMonomial out(ctx.num_vars());
  for (const auto& v : vars) ++out[slot(v, ctx)];
  return out;
}

int DerivMonomial::total_order() const {
  int out = 0;
  for (int o : orders_) out += o;
  return out;
}

Rational DerivMonomial::factorial() const {
  Rational out = 1;
  for (int o : orders_) out *= grass::factorial(o);
  return out;
}

DiffOperator DiffOperator::multiplication(const Polynomial& f) {
  return term(f, DerivMonomial(f.context().num_vars()));
}

DiffOperator DiffOperator::term(const Polynomial& coeff, const DerivMonomial& deriv) {
  DiffOperator out(coeff.context());
  out.add_term(deriv, coeff);
  return out;
}

int DiffOperator::order() const {
  int out = -1;
  for (const auto& [deriv, coeff] : terms_) out = std::max(out, deriv.total_order());
  return out;
}

Polynomial DiffOperator::coefficient(const DerivMonomial& deriv) const {
  auto it = terms_.find(deriv);
  return it == terms_.end() ? Polynomial(ctx_) : it->second;
}

void DiffOperator::add_term(const DerivMonomial& deriv, const Polynomial& coeff) {
  require_same(ctx_, coeff.context());
  if (static_cast<int>(deriv.num_vars()) != ctx_.num_vars()) {
    throw std::invalid_argument("derivative monomial arity does not match " + ctx_.name());
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(deriv, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [deriv, coeff] : other.terms_) add_term(deriv, coeff);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [deriv, coeff] : other.terms_) add_term(deriv, -coeff);
  return *this;
}

DiffOperator operator*(const Rational& c, const DiffOperator& a) {
  DiffOperator out(a.ctx_);
  for (const auto& [deriv, coeff] : a.terms_) out.add_term(deriv, coeff * c);
  return out;
}

DiffOperator operator*(const Polynomial& f, const DiffOperator& a) {
  require_same(f.context(), a.ctx_);
  DiffOperator out(a.ctx_);
  for (const auto& [deriv, coeff] : a.terms_) out.add_term(deriv, f * coeff);
  return out;
}

namespace {

// Calls visit(gamma, binom) for every gamma <= alpha with binom = prod C(alpha_i, gamma_i).
void for_each_sub_index(const DerivMonomial& alpha,
                        const std::function<void(const DerivMonomial&, const Rational&)>& visit) {
  DerivMonomial gamma(static_cast<int>(alpha.num_vars()));
  std::function<void(std::size_t, const Rational&)> recurse = [&](std::size_t s, const Rational& binom) {
    if (s == alpha.num_vars()) {
      visit(gamma, binom);
      return;
    }
    mpz_class c = 1;
    for (int g = 0; g <= alpha[s]; ++g) {
      gamma[s] = g;
      recurse(s + 1, binom * c);
      c = c * (alpha[s] - g) / (g + 1);
    }
    gamma[s] = 0;
  };
  recurse(0, Rational(1));
}

}  // namespace

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  require_same(a.ctx_, b.ctx_);
  DiffOperator out(a.ctx_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      // d^alpha o (cb d^beta) = sum_gamma C(alpha, gamma) (d^gamma cb) d^(alpha - gamma + beta)
      for_each_sub_index(alpha, [&](const DerivMonomial& gamma, const Rational& binom) {
        Polynomial derived = partial_derivative(cb, gamma.orders());
        if (derived.is_zero()) return;
        DerivMonomial result(alpha);
        for (std::size_t s = 0; s < result.num_vars(); ++s) result[s] += beta[s] - gamma[s];
        out.add_term(result, ca * derived * binom);
      });
    }
  }
  return out;
}

Polynomial apply(const DiffOperator& op, const Polynomial& f) {
  require_same(op.context(), f.context());
  Polynomial out(op.context());
  for (const auto& [deriv, coeff] : op.terms()) {
    Polynomial derived = partial_derivative(f, deriv.orders());
    if (!derived.is_zero()) out += coeff * derived;
  }
  return out;
}

DiffOperator diff_commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

DiffOperator build_D_h(const RingContext& ctx) {
  DiffOperator out = DiffOperator::multiplication(Polynomial::constant(ctx, ctx.top_half_degree()));
  for (const auto& v : variables(ctx)) {
    out.add_term(DerivMonomial::of(ctx, {v}), Polynomial::variable(ctx, v) * Rational(-2 * v.weight()));
  }
  return out;
}

DiffOperator build_D_f(const RingContext& ctx) {
  return DiffOperator::multiplication(-Polynomial::variable(ctx, VarId::p(1)));
}

Polynomial de_pp_coefficient(int j, int l, const RingContext& ctx) {
  Polynomial out(ctx);
  for (int d = 0; d <= j - 1; ++d) out += Rational(j + l - 2 * d - 1) * (p_var(d, ctx) * p_var(j + l - d - 1, ctx));
  return out;
}

Polynomial de_qq_coefficient(int j, int l, const RingContext& ctx) {
  Polynomial out(ctx);
  for (int d = 0; d <= j - 1; ++d) out += Rational(j + l - 2 * d - 1) * (q_var(d, ctx) * q_var(j + l - d - 1, ctx));
  return out;
}

Polynomial de_pq_inner(int j, int l, const RingContext& ctx) {
  Polynomial out(ctx);
  for (int d = 0; d <= j - 1; ++d) out += p_var(d, ctx) * q_var(j + l - d - 1, ctx);
  return out;
}

DiffOperator build_D_e(const RingContext& ctx) {
  const int k = ctx.k(), n = ctx.n(), m = ctx.m();
  DiffOperator out(ctx);
  for (int j = 1; j <= k; ++j) {
    out.add_term(DerivMonomial::of(ctx, {VarId::p(j)}),
                 Rational(-(k - j + 1) * (n - k + j - 1)) * p_var(j - 1, ctx));
  }
  for (int j = 1; j <= m; ++j) {
    out.add_term(DerivMonomial::of(ctx, {VarId::q(j)}),
                 Rational((k + j - 1) * (n - k - j + 1)) * q_var(j - 1, ctx));
  }
  // The double sums run over ordered pairs (j, l); d^2/dx_j dx_l and d^2/dx_l dx_j coincide.
  for (int j = 1; j <= k; ++j) {
    for (int l = 1; l <= k; ++l) {
      out.add_term(DerivMonomial::of(ctx, {VarId::p(j), VarId::p(l)}), de_pp_coefficient(j, l, ctx));
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int l = 1; l <= m; ++l) {
      out.add_term(DerivMonomial::of(ctx, {VarId::q(j), VarId::q(l)}), -de_qq_coefficient(j, l, ctx));
    }
  }
  for (int j = 1; j <= k; ++j) {
    for (int l = 1; l <= m; ++l) {
      out.add_term(DerivMonomial::of(ctx, {VarId::p(j), VarId::q(l)}),
                   Rational(2 * (j + l - 1)) * de_pq_inner(j, l, ctx));
    }
  }
  return out;
}

bool preserves_ideal(const DiffOperator& op) {
  for (int m = 1; m <= op.context().n(); ++m) {
    DiffOperator bracket = diff_commutator(op, DiffOperator::multiplication(relation(m, op.context())));
    for (const auto& [deriv, coeff] : bracket.terms()) {
      if (!ideal_member(coeff)) return false;
    }
  }
  return true;
}

Report ideal_preservation_check(const DiffOperator& op, std::uint64_t seed, int samples) {
  const RingContext& ctx = op.context();
  Report report("ideal_preservation", ctx);
  Rng rng(seed);
  for (int m = 1; m <= ctx.n(); ++m) {
    Polynomial rm = relation(m, ctx);
    DiffOperator bracket = diff_commutator(op, DiffOperator::multiplication(rm));
    nlohmann::json offending = nlohmann::json::array();
    for (const auto& [deriv, coeff] : bracket.terms()) {
      if (!ideal_member(coeff)) offending.push_back({{"derivative", deriv_text(deriv, ctx)}, {"coeff", to_text(coeff)}});
    }
    int spot_failures = 0;
    for (int t = 0; t < samples; ++t) {
      Polynomial g = random_polynomial(ctx, rng, 3, ctx.top_half_degree());
      if (!ideal_member(apply(op, g * rm))) ++spot_failures;
    }
    report.record({{"m", m},
                   {"commutator_terms", bracket.terms().size()},
                   {"non_ideal_coefficients", offending},
                   {"spot_checks", samples},
                   {"spot_failures", spot_failures},
                   {"pass", offending.empty() && spot_failures == 0}});
  }
  return report;
}

OperatorMatrix induced_matrix(const DiffOperator& op, std::optional<int> shift) {
  if (!preserves_ideal(op)) {
    throw NotIdealPreserving("operator does not preserve the ideal I of " + op.context().name() +
                             "; its action on A is not well defined");
  }
  return OperatorMatrix::from_map(
      op.context(),
      [&](const Partition& lambda) { return chern_to_schubert(apply(op, jacobi_trudi_h(lambda, op.context()))); },
      shift);
}

std::string deriv_text(const DerivMonomial& deriv, const RingContext& ctx) {
  int order = deriv.total_order();
  if (order == 0) return "1";
  std::string out = order == 1 ? "d/" : "d^" + std::to_string(order) + "/";
  for (std::size_t s = 0; s < deriv.num_vars(); ++s) {
    if (deriv[s] == 0) continue;
    out += "d" + var_at(static_cast<int>(s), ctx).name();
    if (deriv[s] > 1) out += "^" + std::to_string(deriv[s]);
  }
  return out;
}

std::string to_text(const DiffOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [deriv, coeff] : op.terms()) {
    if (!out.empty()) out += " + ";
    std::string body = to_text(coeff);
    if (deriv.total_order() == 0) {
      out += "(" + body + ")";
    } else {
      out += "(" + body + ")*" + deriv_text(deriv, op.context());
    }
  }
  return out;
}

}  // namespace grass

namespace grass {

Report ideal_certificates_check(const RingContext& ctx) {
  Report report("ideal_certificates", ctx);
  DiffOperator dh = build_D_h(ctx);
  DiffOperator df = build_D_f(ctx);
  for (int m = 1; m <= ctx.n(); ++m) {
    Polynomial rm = relation(m, ctx);
    DiffOperator mult = DiffOperator::multiplication(rm);
    bool dh_exact = diff_commutator(dh, mult) == DiffOperator::multiplication(rm * Rational(-2 * m));
    bool df_exact = diff_commutator(df, mult).is_zero();
    report.record({{"m", m}, {"relation", "[D_h, R_m] = -2m R_m"}, {"pass", dh_exact}});
    report.record({{"m", m}, {"relation", "[D_f, R_m] = 0"}, {"pass", df_exact}});

    nlohmann::json failing = nlohmann::json::array();
    for (int j = 1; j <= ctx.k(); ++j) {
      Polynomial sum(ctx);
      for (int r = 0; r <= m; ++r) sum += certificate_A(r, m - r, j, ctx);
      if (!ideal_member(sum)) failing.push_back("A_" + std::to_string(j));
    }
    for (int l = 1; l <= ctx.m(); ++l) {
      Polynomial sum(ctx);
      for (int r = 0; r <= m; ++r) sum += certificate_B(r, m - r, l, ctx);
      if (!ideal_member(sum)) failing.push_back("B_" + std::to_string(l));
    }
    Polynomial sum_c(ctx);
    for (int r = 0; r <= m; ++r) sum_c += certificate_C(r, m - r, ctx);
    if (!ideal_member(sum_c)) failing.push_back("C");
    report.record({{"m", m}, {"relation", "certificate sums in I"}, {"failing", failing}, {"pass", failing.empty()}});
  }
  return report;
}

}  // namespace grass
