#pragma once

#include "grass/operator_matrix.hpp"
#include "grass/report.hpp"

namespace grass {

/// H(s_l) = (k(n-k) - 2|l|) s_l, shift 0.
OperatorMatrix build_H_schubert(const RingContext& ctx);
/// E(s_l) = sum over removable rows l of (k + l_l - l)(n - k - l_l + l) s_{l^(l)}, shift -2.
OperatorMatrix build_E_schubert(const RingContext& ctx);
/// F(s_l) = sum of s_m over one-box additions inside the box, shift +2.
OperatorMatrix build_F_schubert(const RingContext& ctx);
/// Multiplication by the class of -p1.
OperatorMatrix build_F_mult(const RingContext& ctx);

/// rho(h), rho(e), rho(f) on the k-th exterior power, carried to A.
OperatorMatrix build_H_exterior(const RingContext& ctx);
OperatorMatrix build_E_exterior(const RingContext& ctx);
OperatorMatrix build_F_exterior(const RingContext& ctx);

/// Matrices induced on A by D_h, D_e, D_f.
OperatorMatrix build_H_differential(const RingContext& ctx);
OperatorMatrix build_E_differential(const RingContext& ctx);
OperatorMatrix build_F_differential(const RingContext& ctx);

/// ab - ba; shifts add when both are known.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

enum class Realization { Schubert, Exterior, Differential };
const char* realization_name(Realization r);

/// [H,E] = 2E, [H,F] = -2F, [E,F] = H entrywise, support against shift tags,
/// E(s_empty) = 0 and F(s_full) = 0.
Report sl2_relations_check(const RingContext& ctx, Realization r = Realization::Schubert);
/// H diagonal with eigenvalue k(n-k) - 2j in degree 2j, multiplicities = Betti numbers, trace 0.
Report dynkin_grading_check(const RingContext& ctx);
/// F^(k(n-k)-2j) maps the degree 2j block bijectively onto degree 2(k(n-k)-j).
Report hard_lefschetz_check(const RingContext& ctx);
/// Schubert, exterior and differential realizations of E, F, H agree; F_schubert = F_mult.
Report triple_agreement(const RingContext& ctx);

}  // namespace grass
