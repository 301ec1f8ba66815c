#include "grass/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace grass {

WedgeBasisElement::WedgeBasisElement(std::vector<int> indices, const RingContext& ctx)
    : indices_(std::move(indices)) {
  if (static_cast<int>(indices_.size()) != ctx.k()) {
    throw std::invalid_argument("wedge basis element needs exactly k indices");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= ctx.n()) throw std::invalid_argument("wedge index out of range");
    if (i + 1 < indices_.size() && indices_[i] <= indices_[i + 1]) {
      throw std::invalid_argument("wedge indices must strictly decrease");
    }
  }
}

WedgeVector WedgeVector::basis(const WedgeBasisElement& e, const RingContext& ctx, const Rational& c) {
  WedgeVector out(ctx);
  out.add(e, c);
  return out;
}

Rational WedgeVector::coefficient(const WedgeBasisElement& e) const {
  auto it = coords_.find(e);
  return it == coords_.end() ? Rational(0) : it->second;
}

void WedgeVector::add(const WedgeBasisElement& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coords_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coords_.erase(it);
  }
}

void WedgeVector::add_unsorted(std::vector<int> indices, const Rational& c) {
  for (int idx : indices) {
    if (idx < 0 || idx >= ctx_.n()) return;  // e_{-1} = e_n = 0
  }
  // Insertion sort into strictly decreasing order, counting transpositions.
  int swaps = 0;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] < indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      ++swaps;
    }
  }
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) return;
  add(WedgeBasisElement(std::move(indices), ctx_), swaps % 2 ? Rational(-c) : c);
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [e, c] : other.coords_) add(e, c);
  return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [e, c] : other.coords_) add(e, -c);
  return *this;
}

WedgeVector& WedgeVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [e, coeff] : coords_) coeff *= c;
  return *this;
}

WedgeBasisElement partition_to_wedge(const Partition& lambda, const RingContext& ctx) {
  if (!fits_box(lambda, box_of(ctx))) {
    throw std::invalid_argument("partition " + to_text(lambda) + " does not fit the box of " + ctx.name());
  }
  std::vector<int> indices(ctx.k());
  for (int j = 1; j <= ctx.k(); ++j) indices[j - 1] = lambda.part(j - 1) + ctx.k() - j;
  return WedgeBasisElement(std::move(indices), ctx);
}

Partition wedge_to_partition(const WedgeBasisElement& e, const RingContext& ctx) {
  const auto& idx = e.indices();
  std::vector<int> parts(ctx.k());
  for (int j = 1; j <= ctx.k(); ++j) parts[j - 1] = idx[j - 1] - (ctx.k() - j);
  return Partition(std::move(parts));
}

std::vector<WedgeBasisElement> wedge_basis(const RingContext& ctx) {
  std::vector<WedgeBasisElement> out;
  for (const auto& lambda : schubert_basis(ctx).elements()) out.push_back(partition_to_wedge(lambda, ctx));
  return out;
}

WedgeVector matrix_unit_action(int i, int j, const WedgeVector& v) {
  const RingContext& ctx = v.context();
  if (i < 0 || j < 0 || i >= ctx.n() || j >= ctx.n()) {
    throw std::out_of_range("matrix unit index outside [0, n-1]");
  }
  WedgeVector out(ctx);
  for (const auto& [e, c] : v.coords()) {
    const auto& idx = e.indices();
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      if (idx[slot] != j) continue;
      std::vector<int> replaced(idx);
      replaced[slot] = i;
      out.add_unsorted(std::move(replaced), c);
    }
  }
  return out;
}

WedgeVector sl2_h(const WedgeVector& v) {
  const RingContext& ctx = v.context();
  WedgeVector out(ctx);
  for (const auto& [e, c] : v.coords()) {
    int sum = 0;
    for (int j : e.indices()) sum += j;
    out.add(e, c * (ctx.k() * (ctx.n() - 1) - 2 * sum));
  }
  return out;
}

namespace {

// Shifts one slot at a time by delta, weighting by weight(j) of the original index.
template <typename Weight>
WedgeVector shift_slots(const WedgeVector& v, int delta, Weight weight) {
  WedgeVector out(v.context());
  for (const auto& [e, c] : v.coords()) {
    const auto& idx = e.indices();
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      int w = weight(idx[slot]);
      if (w == 0) continue;
      std::vector<int> moved(idx);
      moved[slot] += delta;
      out.add_unsorted(std::move(moved), c * w);
    }
  }
  return out;
}

}  // namespace

WedgeVector sl2_e(const WedgeVector& v) {
  const int n = v.context().n();
  return shift_slots(v, -1, [n](int j) { return j * (n - j); });
}

WedgeVector sl2_f(const WedgeVector& v) {
  return shift_slots(v, +1, [](int) { return 1; });
}

OperatorMatrix transport_to_cohomology(const WedgeMap& action, const RingContext& ctx,
                                       std::optional<int> shift) {
  const SchubertBasis& basis = schubert_basis(ctx);
  std::vector<WedgeVector> images;
  images.reserve(basis.size());
  for (const auto& lambda : basis.elements()) {
    images.push_back(action(WedgeVector::basis(partition_to_wedge(lambda, ctx), ctx)));
  }
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    WedgeVector pair = WedgeVector::basis(partition_to_wedge(basis.at(i), ctx), ctx) +
                       WedgeVector::basis(partition_to_wedge(basis.at(i + 1), ctx), ctx);
    if (action(pair) != images[i] + images[i + 1]) {
      throw std::invalid_argument("wedge action is not linear on basis pairs");
    }
  }
  RationalMatrix entries(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [e, c] : images[col].coords()) {
      entries(basis.index_of(wedge_to_partition(e, ctx)), col) = c;
    }
  }
  return OperatorMatrix(ctx, std::move(entries), shift);
}

}  // namespace grass
