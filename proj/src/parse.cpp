#include "scf/parse.hpp"

#include <cctype>

namespace scf {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      long long e = integer_literal();
      if (e > kMaxExponent) fail("exponent too large");
      Polynomial r = Polynomial::constant(ring_, 1);
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long long integer_literal() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected integer");
    }
    // reduce while reading so long literals stay in range
    const long long p = ring_->field().prime();
    long long v = 0;
    bool big = false;
    long long raw = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int d = s_[pos_++] - '0';
      v = (v * 10 + d) % p;
      if (!big) {
        raw = raw * 10 + d;
        if (raw > (1LL << 40)) big = true;
      }
    }
    return big ? v : raw;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = integer_literal();
      return Polynomial::constant(ring_, ring_->field().from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (ring_->var_name(i) == name) return Polynomial::variable(ring_, i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace scf
