#include "dcq/symexpr/expr.hpp"

#include <cctype>

namespace dcq {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) terms.push_back(term());
      else if (accept('-')) terms.push_back(-term());
      else break;
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      if (accept('*')) acc = acc * unary();
      else if (accept('/')) acc = acc / unary();
      else break;
    }
    return acc;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) return Expr::power(base, unary());
    return base;
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  Expr number() {
    std::size_t start = pos_;
    Rational whole = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      whole = whole * 10 + (s_[pos_++] - '0');
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      Rational scale = 1;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        scale /= 10;
        whole += scale * (s_[pos_++] - '0');
      }
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
      std::size_t save = pos_++;
      int sign = 1;
      if (s_[pos_] == '-' || s_[pos_] == '+') sign = s_[pos_++] == '-' ? -1 : 1;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = save;
      } else {
        int ex = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ex = ex * 10 + (s_[pos_++] - '0');
        for (int i = 0; i < ex; ++i) whole = sign > 0 ? Rational(whole * 10) : Rational(whole / 10);
      }
    }
    if (start == pos_) fail("expected number");
    return Expr(whole);
  }

  std::vector<std::string> name_list(char terminator) {
    std::vector<std::string> out;
    skip();
    if (pos_ < s_.size() && s_[pos_] == terminator) return out;
    out.push_back(ident());
    while (accept(',')) out.push_back(ident());
    return out;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("unexpected character '" + std::string(1, c) + "'");
    std::size_t name_pos = pos_;
    std::string name = ident();
    if (!accept('(')) {
      if (name == "I") return Expr::imag();
      return Expr::symbol(name);
    }
    if (name == "Df") {
      std::string fn = ident();
      expect('|');
      auto deps = name_list('|');
      expect('|');
      auto orders = name_list(')');
      expect(')');
      return Expr::deriv(fn, deps, orders);
    }
    Expr arg = expr();
    expect(')');
    if (name == "sin") return Expr::sin(arg);
    if (name == "cos") return Expr::cos(arg);
    if (name == "exp") return Expr::exp(arg);
    pos_ = name_pos;
    fail("unknown function '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& text) { return simplify(Parser(text).run()); }

}  // namespace dcq
