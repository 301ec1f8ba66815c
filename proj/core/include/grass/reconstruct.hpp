#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grass/diffop.hpp"
#include "grass/operator_matrix.hpp"
#include "grass/random.hpp"
#include "grass/report.hpp"

namespace grass {

/// A linear operator on A known only through its action on classes.
class BlackBoxOperator {
 public:
  using Action = std::function<SchubertVector(const SchubertVector&)>;

  /// Tabulates the action on the basis. Throws std::invalid_argument if
  /// L(s_a + s_b) != L(s_a) + L(s_b) for some pair of consecutive basis classes.
  BlackBoxOperator(RingContext ctx, const Action& action);
  static BlackBoxOperator from_matrix(const OperatorMatrix& m);

  const RingContext& context() const { return matrix_.context(); }
  SchubertVector operator()(const SchubertVector& v) const { return matrix_.apply(v); }
  const OperatorMatrix& materialize() const { return matrix_; }
  bool is_zero() const { return matrix_.entries().is_zero(); }

 private:
  explicit BlackBoxOperator(OperatorMatrix m) : matrix_(std::move(m)) {}
  OperatorMatrix matrix_;
};

/// c -> L(x c) - x L(c) with x the class of v.
BlackBoxOperator adjoint_descend(const BlackBoxOperator& L, VarId v);

struct RecoveredCoefficient {
  DerivMonomial deriv;
  /// (1/deriv!) Adj^deriv(L)(1) as a class in A.
  SchubertVector value;
};

struct ReconstructionLayer {
  int order;
  std::vector<RecoveredCoefficient> coefficients;
};

struct Reconstruction {
  DiffOperator op;
  int detected_order;
  /// From the detected order down to 0; zero coefficients are dropped.
  std::vector<ReconstructionLayer> layers;
};

class NotDifferentialOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Recovers sum_alpha lift(c_alpha) d^alpha from L. max_order defaults to 2k(n-k),
/// which bounds the order of every linear operator on A.
/// Throws NotDifferentialOperator if some (max_order+1)-fold adjoint is nonzero.
Reconstruction reconstruct(const BlackBoxOperator& L, std::optional<int> max_order = std::nullopt);

/// [op, x]: lowers each derivative in v by one, exactly.
DiffOperator weyl_adjoint(const DiffOperator& op, VarId v);

/// Random operator of order <= 2 that preserves I, built as
/// g0 + g1 D_h + g2 D_e + c D_h D_h + g3 [D_e, x] + i d_u d_v with i in I.
DiffOperator random_ideal_preserving_operator(const RingContext& ctx, Rng& rng);

/// Reconstructs E, F, H and `samples` random ideal-preserving operators from
/// their matrices and compares induced matrices. E must come back with order 2,
/// F with order 0 and H with order 1.
Report reconstruction_check(const RingContext& ctx, std::uint64_t seed = 1, int samples = 3);

}  // namespace grass
