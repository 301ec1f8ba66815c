#pragma once

#include <vector>

#include "grass/context.hpp"
#include "grass/schur.hpp"

namespace grass::testing {

/// Every Gr(k,n) with 1 <= k < n <= max_n.
inline std::vector<RingContext> contexts_up_to(int max_n) {
  std::vector<RingContext> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) out.emplace_back(k, n);
  }
  return out;
}

inline SchubertVector s(const RingContext& ctx, std::initializer_list<int> parts, const Rational& c = 1) {
  return SchubertVector::basis(ctx, Partition(std::vector<int>(parts)), c);
}

inline SchubertVector s(const RingContext& ctx, const Partition& lambda, const Rational& c = 1) {
  return SchubertVector::basis(ctx, lambda, c);
}

}  // namespace grass::testing
