#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace grass {

/// The Grassmannian Gr(k,n); every ring object carries one.
class RingContext {
 public:
  RingContext(int k, int n) : k_(k), n_(n) {
    if (k < 1 || n < 2 || k > n - 1) {
      throw std::invalid_argument("Gr(k,n) requires 1 <= k <= n-1, got k=" + std::to_string(k) +
                                  ", n=" + std::to_string(n));
    }
  }

  int k() const { return k_; }
  int n() const { return n_; }
  /// n - k, the rank of the quotient bundle (number of q variables).
  int m() const { return n_ - k_; }
  /// Half of the top cohomological degree, k(n-k).
  int top_half_degree() const { return k_ * (n_ - k_); }
  /// Total number of Chern-class variables p_1..p_k, q_1..q_{n-k}.
  int num_vars() const { return n_; }

  auto operator<=>(const RingContext&) const = default;

  std::string name() const { return "Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")"; }

 private:
  int k_;
  int n_;
};

class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch(const RingContext& a, const RingContext& b)
      : std::invalid_argument("ring context mismatch: " + a.name() + " vs " + b.name()) {}
};

inline void require_same(const RingContext& a, const RingContext& b) {
  if (a != b) throw ContextMismatch(a, b);
}

}  // namespace grass
