#include "grass/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace grass {

int slot(const VarId& v, const RingContext& ctx) {
  int bound = v.family == VarFamily::P ? ctx.k() : ctx.m();
  if (v.index < 1 || v.index > bound) {
    throw std::out_of_range("variable " + v.name() + " out of range for " + ctx.name());
  }
  return v.family == VarFamily::P ? v.index - 1 : ctx.k() + v.index - 1;
}

VarId var_at(int s, const RingContext& ctx) {
  if (s < 0 || s >= ctx.num_vars()) throw std::out_of_range("variable slot out of range");
  return s < ctx.k() ? VarId::p(s + 1) : VarId::q(s - ctx.k() + 1);
}

std::vector<VarId> variables(const RingContext& ctx) {
  std::vector<VarId> out;
  for (int s = 0; s < ctx.num_vars(); ++s) out.push_back(var_at(s, ctx));
  return out;
}

VarId parse_var(const std::string& name, const RingContext& ctx) {
  if (name.size() < 2 || (name[0] != 'p' && name[0] != 'q')) {
    throw std::invalid_argument("unknown variable '" + name + "'");
  }
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      throw std::invalid_argument("unknown variable '" + name + "'");
    }
  }
  VarId v{name[0] == 'p' ? VarFamily::P : VarFamily::Q, std::stoi(name.substr(1))};
  try {
    slot(v, ctx);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
  return v;
}

int Monomial::total_degree() const {
  int out = 0;
  for (int e : exps_) out += e;
  return out;
}

bool Monomial::is_one() const {
  for (int e : exps_) {
    if (e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

int coh_degree(const Monomial& m, const RingContext& ctx) {
  int half = 0;
  for (int s = 0; s < static_cast<int>(m.num_vars()); ++s) half += m[s] * var_at(s, ctx).weight();
  return 2 * half;
}

Monomial unit_monomial(VarId v, const RingContext& ctx) {
  Monomial m(ctx.num_vars());
  m[slot(v, ctx)] = 1;
  return m;
}

Polynomial Polynomial::constant(RingContext ctx, const Rational& c) {
  Polynomial out(ctx);
  out.add_term(Monomial(ctx.num_vars()), c);
  return out;
}

Polynomial Polynomial::variable(RingContext ctx, VarId v) {
  return monomial(ctx, unit_monomial(v, ctx));
}

Polynomial Polynomial::monomial(RingContext ctx, Monomial m, const Rational& c) {
  if (static_cast<int>(m.num_vars()) != ctx.num_vars()) {
    throw std::invalid_argument("monomial arity does not match " + ctx.name());
  }
  Polynomial out(ctx);
  out.add_term(m, c);
  return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(ctx_.num_vars())); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same(ctx_, other.ctx_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ctx_, b.ctx_);
  Polynomial out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial p_var(int j, const RingContext& ctx) {
  if (j == 0) return Polynomial::constant(ctx, 1);
  if (j < 0 || j > ctx.k()) return Polynomial(ctx);
  return Polynomial::variable(ctx, VarId::p(j));
}

Polynomial q_var(int l, const RingContext& ctx) {
  if (l == 0) return Polynomial::constant(ctx, 1);
  if (l < 0 || l > ctx.m()) return Polynomial(ctx);
  return Polynomial::variable(ctx, VarId::q(l));
}

std::map<int, Polynomial> graded_components(const Polynomial& f) {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : f.terms()) {
    out.try_emplace(coh_degree(m, f.context()), f.context()).first->second.add_term(m, c);
  }
  return out;
}

bool is_homogeneous(const Polynomial& f) { return graded_components(f).size() <= 1; }

Polynomial partial_derivative(const Polynomial& f, VarId v) {
  int s = slot(v, f.context());
  Polynomial out(f.context());
  for (const auto& [m, c] : f.terms()) {
    if (m[s] == 0) continue;
    Monomial d(m);
    --d[s];
    out.add_term(d, c * m[s]);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, std::span<const int> orders) {
  Polynomial out(f.context());
  for (const auto& [m, c] : f.terms()) {
    Monomial d(m);
    Rational factor = c;
    bool vanishes = false;
    for (std::size_t s = 0; s < orders.size() && !vanishes; ++s) {
      for (int t = 0; t < orders[s]; ++t) {
        if (d[s] == 0) {
          vanishes = true;
          break;
        }
        factor *= d[s];
        --d[s];
      }
    }
    if (!vanishes) out.add_term(d, factor);
  }
  return out;
}

std::string monomial_text(const Monomial& m, const std::function<std::string(int)>& name_of_slot) {
  std::string out;
  for (std::size_t s = 0; s < m.num_vars(); ++s) {
    if (m[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of_slot(static_cast<int>(s));
    if (m[s] > 1) out += '^' + std::to_string(m[s]);
  }
  return out;
}

std::string terms_text(const Polynomial::TermMap& terms,
                       const std::function<std::string(int)>& name_of_slot) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string body = monomial_text(m, name_of_slot);
    if (body.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += to_string(magnitude) + '*' + body;
    }
  }
  return out;
}

std::string to_text(const Polynomial& f) {
  const RingContext ctx = f.context();
  return terms_text(f.terms(), [&](int s) { return var_at(s, ctx).name(); });
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const RingContext& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

  Polynomial parse() {
    Polynomial out(ctx_);
    skip_spaces();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_spaces();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      Polynomial term = parse_term();
      out += Rational(sign) * term;
      skip_spaces();
    }
    return out;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = parse_factor();
    skip_spaces();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_spaces();
      term *= parse_factor();
      skip_spaces();
    }
    return term;
  }

  Polynomial parse_factor() {
    if (at_end()) throw error("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      return Polynomial::constant(ctx_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (c == 'p' || c == 'q') {
      std::size_t start = pos_++;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      VarId v = parse_var(text_.substr(start, pos_ - start), ctx_);
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        std::size_t estart = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (estart == pos_) throw error("missing exponent");
        exponent = std::stoi(text_.substr(estart, pos_ - estart));
      }
      Monomial m(ctx_.num_vars());
      m[slot(v, ctx_)] = exponent;
      return Polynomial::monomial(ctx_, m);
    }
    throw error(std::string("unexpected character '") + c + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " +
                                 what + " in '" + text_ + "'");
  }

  RingContext ctx_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingContext& ctx, const std::string& text) {
  return PolynomialParser(ctx, text).parse();
}

}  // namespace grass
