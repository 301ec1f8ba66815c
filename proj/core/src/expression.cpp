#include "grass/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace grass {

namespace {

class Parser {
 public:
  Parser(const RingContext& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

  SchubertVector parse() {
    SchubertVector out = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  SchubertVector expr() {
    SchubertVector out(ctx_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_++] == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      SchubertVector t = term();
      out += sign < 0 ? -t : t;
      first = false;
    }
    return out;
  }

  SchubertVector term() {
    SchubertVector out = factor();
    while (true) {
      skip();
      if (!peek('*')) break;
      ++pos_;
      out = schubert_multiply(out, factor());
    }
    return out;
  }

  SchubertVector factor() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SchubertVector inner = expr();
      skip();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek('/')) {
        ++pos_;
        num += "/" + digits();
      }
      return SchubertVector::basis(ctx_, Partition(), parse_rational(num));
    }
    if (c == 's') {
      ++pos_;
      skip();
      expect('[');
      std::size_t close = text_.find(']', pos_);
      if (close == std::string::npos) error("missing ']'");
      Partition lambda = parse_partition(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      if (!fits_box(lambda, box_of(ctx_))) {
        error("s[" + to_text(lambda) + "] does not fit the " + std::to_string(ctx_.k()) + "x" +
              std::to_string(ctx_.m()) + " box");
      }
      return SchubertVector::basis(ctx_, lambda);
    }
    if (c == 'p' || c == 'q') {
      ++pos_;
      std::string name = std::string(1, c) + digits();
      VarId v = parse_var(name, ctx_);
      int power = 1;
      skip();
      if (peek('^')) {
        ++pos_;
        skip();
        power = std::stoi(digits());
      }
      Monomial m(ctx_.num_vars());
      m[slot(v, ctx_)] = power;
      return chern_to_schubert(Polynomial::monomial(ctx_, m));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return text_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("cannot parse class \"" + text_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  const RingContext& ctx_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SchubertVector parse_class(const RingContext& ctx, const std::string& text) { return Parser(ctx, text).parse(); }

}  // namespace grass
