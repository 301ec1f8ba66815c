#include "grass/schur.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace grass {

SchubertVector SchubertVector::basis(RingContext ctx, const Partition& lambda, const Rational& c) {
  SchubertVector out(ctx);
  out.add(lambda, c);
  return out;
}

Rational SchubertVector::coefficient(const Partition& lambda) const {
  auto it = coords_.find(lambda);
  return it == coords_.end() ? Rational(0) : it->second;
}

bool SchubertVector::is_homogeneous() const {
  if (coords_.empty()) return true;
  int size = coords_.begin()->first.size();
  return std::all_of(coords_.begin(), coords_.end(),
                     [size](const auto& entry) { return entry.first.size() == size; });
}

void SchubertVector::add(const Partition& lambda, const Rational& c) {
  if (!fits_box(lambda, box_of(ctx_))) {
    throw std::invalid_argument("partition " + to_text(lambda) + " does not fit the box of " +
                                ctx_.name());
  }
  add_truncated(lambda, c);
}

void SchubertVector::add_truncated(const Partition& lambda, const Rational& c) {
  if (sgn(c) == 0 || !fits_box(lambda, box_of(ctx_))) return;
  auto [it, inserted] = coords_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coords_.erase(it);
  }
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [lambda, c] : other.coords_) add_truncated(lambda, c);
  return *this;
}

SchubertVector& SchubertVector::operator-=(const SchubertVector& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [lambda, c] : other.coords_) add_truncated(lambda, -c);
  return *this;
}

SchubertVector& SchubertVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : coords_) coeff *= c;
  return *this;
}

SchubertBasis::SchubertBasis(RingContext ctx)
    : ctx_(ctx), elements_(enumerate_box(box_of(ctx))), blocks_(ctx.top_half_degree() + 1) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    blocks_[elements_[i].size()].push_back(i);
  }
}

std::size_t SchubertBasis::index_of(const Partition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) {
    throw std::out_of_range("partition " + to_text(lambda) + " is not in the basis of " + ctx_.name());
  }
  return it->second;
}

const std::vector<std::size_t>& SchubertBasis::block(int half_degree) const {
  static const std::vector<std::size_t> empty;
  if (half_degree < 0 || half_degree >= static_cast<int>(blocks_.size())) return empty;
  return blocks_[half_degree];
}

namespace {

// Read-through memo keyed by Grassmannian; values are never mutated once stored.
template <typename Key, typename Value>
class Memo {
 public:
  const Value* find(const Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second.get();
  }
  const Value& insert(const Key& key, Value value) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = table_.try_emplace(key, std::make_unique<Value>(std::move(value)));
    return *it->second;
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, std::unique_ptr<Value>> table_;
};

// Horizontal strips: lambda_i <= mu_i <= lambda_{i-1}, mu_1 <= cols.
void horizontal_strips(const Partition& lambda, const Box& box, int row, int remaining,
                       std::vector<int>& mu, std::vector<Partition>& out) {
  if (row == box.rows) {
    if (remaining == 0) out.emplace_back(mu);
    return;
  }
  int base = lambda.part(row);
  int cap = row == 0 ? box.cols : lambda.part(row - 1);
  cap = std::min(cap, box.cols);
  for (int add = 0; add <= remaining && base + add <= cap; ++add) {
    mu[row] = base + add;
    horizontal_strips(lambda, box, row + 1, remaining - add, mu, out);
  }
}

// Vertical strips: each row grows by at most one and mu stays a partition.
void vertical_strips(const Partition& lambda, const Box& box, int row, int remaining,
                     std::vector<int>& mu, std::vector<Partition>& out) {
  if (remaining == 0) {
    for (int r = row; r < box.rows; ++r) mu[r] = lambda.part(r);
    out.emplace_back(mu);
    return;
  }
  if (box.rows - row < remaining) return;
  for (int add = 1; add >= 0; --add) {
    int value = lambda.part(row) + add;
    if (value > box.cols) continue;
    if (row > 0 && value > mu[row - 1]) continue;
    mu[row] = value;
    vertical_strips(lambda, box, row + 1, remaining - add, mu, out);
  }
}

template <typename StripFn>
SchubertVector pieri(const SchubertVector& v, int r, StripFn strips) {
  if (r < 1) throw std::invalid_argument("Pieri degree must be positive");
  Box box = box_of(v.context());
  SchubertVector out(v.context());
  std::vector<Partition> targets;
  std::vector<int> mu(box.rows, 0);
  for (const auto& [lambda, c] : v.coords()) {
    targets.clear();
    strips(lambda, box, 0, r, mu, targets);
    for (const auto& target : targets) out.add_truncated(target, c);
  }
  return out;
}

Polynomial h_entry(int m, const RingContext& ctx) { return q_var(m, ctx); }

Polynomial e_entry(int m, const RingContext& ctx) {
  Polynomial p = p_var(m, ctx);
  return (m % 2 == 0) ? p : -p;
}

// Applies one variable of the Chern presentation to v.
SchubertVector act_variable(int s, const SchubertVector& v) {
  VarId var = var_at(s, v.context());
  if (var.family == VarFamily::Q) return pieri_h(v, var.index);
  SchubertVector out = pieri_e(v, var.index);
  if (var.index % 2 == 1) out *= Rational(-1);
  return out;
}

using MonomialKey = std::pair<RingContext, Monomial>;

Memo<MonomialKey, SchubertVector>& monomial_memo() {
  static Memo<MonomialKey, SchubertVector> memo;
  return memo;
}

const SchubertVector& monomial_normal_form(const RingContext& ctx, const Monomial& m) {
  MonomialKey key{ctx, m};
  if (const auto* hit = monomial_memo().find(key)) return *hit;
  int s = 0;
  while (s < static_cast<int>(m.num_vars()) && m[s] == 0) ++s;
  if (s == static_cast<int>(m.num_vars())) {
    return monomial_memo().insert(key, SchubertVector::basis(ctx, Partition()));
  }
  Monomial rest(m);
  --rest[s];
  SchubertVector value = act_variable(s, monomial_normal_form(ctx, rest));
  return monomial_memo().insert(key, std::move(value));
}

using PartitionKey = std::pair<RingContext, Partition>;

Memo<PartitionKey, Polynomial>& jacobi_trudi_memo() {
  static Memo<PartitionKey, Polynomial> memo;
  return memo;
}

}  // namespace

const SchubertBasis& schubert_basis(const RingContext& ctx) {
  static Memo<RingContext, SchubertBasis> memo;
  if (const auto* hit = memo.find(ctx)) return *hit;
  return memo.insert(ctx, SchubertBasis(ctx));
}

SchubertVector pieri_h(const SchubertVector& v, int r) { return pieri(v, r, horizontal_strips); }

SchubertVector pieri_e(const SchubertVector& v, int r) { return pieri(v, r, vertical_strips); }

Polynomial determinant(const std::vector<std::vector<Polynomial>>& entries, const RingContext& ctx) {
  const std::size_t size = entries.size();
  if (size == 0) return Polynomial::constant(ctx, 1);
  // minors[mask] = determinant of the trailing rows against the columns in mask.
  std::map<unsigned, Polynomial> minors;
  minors.emplace(0u, Polynomial::constant(ctx, 1));
  for (std::size_t depth = 1; depth <= size; ++depth) {
    std::size_t row = size - depth;
    std::map<unsigned, Polynomial> next;
    for (const auto& [mask, minor] : minors) {
      if (minor.is_zero()) continue;
      int position = 0;  // columns of mask left of col: col's place in mask | col
      for (std::size_t col = 0; col < size; ++col) {
        if (mask & (1u << col)) {
          ++position;
          continue;
        }
        const Polynomial& entry = entries[row][col];
        if (entry.is_zero()) continue;
        Polynomial term = entry * minor;
        if (position % 2) term = -term;
        next.try_emplace(mask | (1u << col), ctx).first->second += term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((1u << size) - 1);
  return it == minors.end() ? Polynomial(ctx) : it->second;
}

Polynomial jacobi_trudi_h(const Partition& lambda, const RingContext& ctx) {
  if (!fits_box(lambda, box_of(ctx))) {
    throw std::invalid_argument("partition " + to_text(lambda) + " does not fit the box of " + ctx.name());
  }
  PartitionKey key{ctx, lambda};
  if (const auto* hit = jacobi_trudi_memo().find(key)) return *hit;
  const int len = lambda.length();
  std::vector<std::vector<Polynomial>> entries(len);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) entries[i].push_back(h_entry(lambda.part(i) - i + j, ctx));
  }
  return jacobi_trudi_memo().insert(key, determinant(entries, ctx));
}

Polynomial giambelli_e(const Partition& lambda, const RingContext& ctx) {
  if (!fits_box(lambda, box_of(ctx))) {
    throw std::invalid_argument("partition " + to_text(lambda) + " does not fit the box of " + ctx.name());
  }
  Partition dual = conjugate(lambda);
  const int len = dual.length();
  std::vector<std::vector<Polynomial>> entries(len);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) entries[i].push_back(e_entry(dual.part(i) - i + j, ctx));
  }
  return determinant(entries, ctx);
}

SchubertVector act(const Polynomial& f, const SchubertVector& v) {
  require_same(f.context(), v.context());
  SchubertVector out(v.context());
  for (const auto& [m, c] : f.terms()) {
    SchubertVector current = v;
    for (int s = 0; s < static_cast<int>(m.num_vars()); ++s) {
      for (int t = 0; t < m[s] && !current.is_zero(); ++t) current = act_variable(s, current);
    }
    out += current * c;
  }
  return out;
}

SchubertVector chern_to_schubert(const Polynomial& f) {
  SchubertVector out(f.context());
  for (const auto& [m, c] : f.terms()) out += monomial_normal_form(f.context(), m) * c;
  return out;
}

SchubertVector schubert_multiply(const SchubertVector& a, const SchubertVector& b) {
  require_same(a.context(), b.context());
  SchubertVector out(a.context());
  for (const auto& [mu, cb] : b.coords()) {
    out += act(jacobi_trudi_h(mu, b.context()), a) * cb;
  }
  return out;
}

Polynomial lift(const SchubertVector& v) {
  Polynomial out(v.context());
  for (const auto& [lambda, c] : v.coords()) out += jacobi_trudi_h(lambda, v.context()) * c;
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const RingContext& ctx) {
  for (const auto* p : {&lambda, &mu, &nu}) {
    if (!fits_box(*p, box_of(ctx))) {
      throw std::invalid_argument("partition " + to_text(*p) + " does not fit the box of " + ctx.name());
    }
  }
  if (nu.size() != lambda.size() + mu.size()) return 0;
  Rational c = schubert_multiply(SchubertVector::basis(ctx, lambda), SchubertVector::basis(ctx, mu))
                   .coefficient(nu);
  if (!is_integer(c) || sgn(c) < 0) {
    throw std::logic_error("non-integral or negative Littlewood-Richardson coefficient");
  }
  return c.get_num().get_si();
}

std::string to_text(const SchubertVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : v.coords()) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) out += to_string(magnitude) + '*';
    out += "s[" + (lambda.empty() ? std::string() : to_text(lambda)) + "]";
  }
  return out;
}

}  // namespace grass
