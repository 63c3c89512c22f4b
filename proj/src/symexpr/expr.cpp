#include "dcq/symexpr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace dcq {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& r) {
  std::size_t h = boost::multiprecision::hash_value(boost::multiprecision::numerator(r));
  return mix(h, boost::multiprecision::hash_value(boost::multiprecision::denominator(r)));
}

std::pair<std::string, long long> split_index(const std::string& s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || i == 0 || s.size() - i > 15) return {s, -1};
  return {s.substr(0, i), std::stoll(s.substr(i))};
}

int cmp_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = compare_symbol_names(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Number: return "number";
    case Kind::Imag: return "imag";
    case Kind::Symbol: return "symbol";
    case Kind::Deriv: return "deriv";
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Exp: return "exp";
    case Kind::Power: return "power";
    case Kind::Product: return "product";
    case Kind::Sum: return "sum";
  }
  return "?";
}

int compare_symbol_names(const std::string& a, const std::string& b) {
  if (a == b) return 0;
  auto [pa, ia] = split_index(a);
  auto [pb, ib] = split_index(b);
  if (pa != pb) return pa < pb ? -1 : 1;
  if (ia != ib) return ia < ib ? -1 : 1;
  return a < b ? -1 : 1;
}

Expr Expr::make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
  switch (n.kind) {
    case Kind::Number: h = mix(h, hash_rational(n.value)); break;
    case Kind::Symbol: h = mix(h, std::hash<std::string>{}(n.name)); break;
    case Kind::Deriv:
      h = mix(h, std::hash<std::string>{}(n.name));
      for (const auto& d : n.deps) h = mix(h, std::hash<std::string>{}(d));
      for (const auto& d : n.orders) h = mix(h, std::hash<std::string>{}(d) * 31);
      break;
    default:
      for (const auto& c : n.children) h = mix(h, c.hash());
  }
  n.hash = h;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Expr() : Expr(Rational(0)) {}
Expr::Expr(int v) : Expr(Rational(v)) {}
Expr::Expr(const Rational& v) {
  Node n;
  n.kind = Kind::Number;
  n.value = v;
  *this = make(std::move(n));
}

Expr Expr::number(const Rational& v) { return Expr(v); }
Expr Expr::number(long long num, long long den) {
  if (den == 0) throw DivisionByZeroError("rational literal with zero denominator");
  return Expr(Rational(num) / Rational(den));
}

Expr Expr::imag() {
  Node n;
  n.kind = Kind::Imag;
  return make(std::move(n));
}

Expr Expr::symbol(const std::string& name) {
  Node n;
  n.kind = Kind::Symbol;
  n.name = name;
  return make(std::move(n));
}

Expr Expr::deriv(const std::string& name, std::vector<std::string> deps,
                 std::vector<std::string> orders) {
  std::sort(orders.begin(), orders.end(),
            [](const std::string& a, const std::string& b) { return compare_symbol_names(a, b) < 0; });
  Node n;
  n.kind = Kind::Deriv;
  n.name = name;
  n.deps = std::move(deps);
  n.orders = std::move(orders);
  return make(std::move(n));
}


Expr Expr::sin(const Expr& arg) {
  Node n;
  n.kind = Kind::Sin;
  n.children = {arg};
  return make(std::move(n));
}

Expr Expr::cos(const Expr& arg) {
  Node n;
  n.kind = Kind::Cos;
  n.children = {arg};
  return make(std::move(n));
}

Expr Expr::exp(const Expr& arg) {
  Node n;
  n.kind = Kind::Exp;
  n.children = {arg};
  return make(std::move(n));
}

Expr Expr::power(const Expr& base, const Expr& exponent) {
  if (exponent.is_one()) return base;
  Node n;
  n.kind = Kind::Power;
  n.children = {base, exponent};
  return make(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Rational constant = 0;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.children()) {
        if (c.is_number()) constant += c.value();
        else flat.push_back(c);
      }
    } else if (t.is_number()) {
      constant += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (constant != 0) flat.insert(flat.begin(), Expr(constant));
  if (flat.empty()) return Expr(0);
  if (flat.size() == 1) return flat.front();
  Node n;
  n.kind = Kind::Sum;
  n.children = std::move(flat);
  return make(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Rational coeff = 1;
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const auto& c : f.children()) {
        if (c.is_number()) coeff *= c.value();
        else flat.push_back(c);
      }
    } else if (f.is_number()) {
      coeff *= f.value();
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (coeff == 0) return Expr(0);
  if (coeff != 1) flat.insert(flat.begin(), Expr(coeff));
  if (flat.empty()) return Expr(1);
  if (flat.size() == 1) return flat.front();
  Node n;
  n.kind = Kind::Product;
  n.children = std::move(flat);
  return make(std::move(n));
}

bool Expr::is_zero() const { return kind() == Kind::Number && value() == 0; }
bool Expr::is_one() const { return kind() == Kind::Number && value() == 1; }

std::string Expr::deriv_key() const {
  std::string s = "Df(" + name() + "|";
  for (std::size_t i = 0; i < deps().size(); ++i) s += (i ? "," : "") + deps()[i];
  s += "|";
  for (std::size_t i = 0; i < orders().size(); ++i) s += (i ? "," : "") + orders()[i];
  return s + ")";
}

int compare(const Expr& a, const Expr& b) {
  if (&a.children() == &b.children()) return 0;  // same node
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Number:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case Kind::Imag: return 0;
    case Kind::Symbol: return compare_symbol_names(a.name(), b.name());
    case Kind::Deriv: {
      if (a.name() != b.name()) return compare_symbol_names(a.name(), b.name());
      if (int c = cmp_names(a.deps(), b.deps()); c != 0) return c;
      return cmp_names(a.orders(), b.orders());
    }
    default: break;
  }
  if (a.hash() == b.hash() && a.children().size() == b.children().size()) {
    bool same = true;
    for (std::size_t i = 0; i < a.children().size() && same; ++i)
      same = compare(a.children()[i], b.children()[i]) == 0;
    if (same) return 0;
  }
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

int prec_of(const Expr& e) {
  switch (e.kind()) {
    case Kind::Number:
      if (e.value() < 0) return kUnary;
      return boost::multiprecision::denominator(e.value()) == 1 ? kAtom : kProduct;
    case Kind::Sum: return kSum;
    case Kind::Product:
      return (e.children().front().is_number() && e.children().front().value() < 0) ? kUnary : kProduct;
    case Kind::Power: return kPower;
    default: return kAtom;
  }
}

std::string print(const Expr& e);

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return prec_of(e) < min_prec ? "(" + s + ")" : s;
}

std::string print_product_abs(const Expr& e, bool& negative) {
  // Product whose leading numeric coefficient may be negative.
  std::vector<Expr> rest;
  Rational coeff = 1;
  for (const auto& c : e.children()) {
    if (c.is_number()) coeff *= c.value();
    else rest.push_back(c);
  }
  negative = coeff < 0;
  if (negative) coeff = -coeff;
  std::string s;
  if (coeff != 1) s = wrap(Expr(coeff), kPower);
  for (const auto& r : rest) {
    if (!s.empty()) s += "*";
    s += wrap(r, kPower);
  }
  return s.empty() ? "1" : s;
}

std::string print(const Expr& e) {
  switch (e.kind()) {
    case Kind::Number: return rational_str(e.value());
    case Kind::Imag: return "I";
    case Kind::Symbol: return e.name();
    case Kind::Deriv: return e.deriv_key();
    case Kind::Sin: return "sin(" + print(e.children()[0]) + ")";
    case Kind::Cos: return "cos(" + print(e.children()[0]) + ")";
    case Kind::Exp: return "exp(" + print(e.children()[0]) + ")";
    case Kind::Power: {
      const Expr& ex = e.children()[1];
      std::string es = (ex.is_number() && ex.value() >= 0 && boost::multiprecision::denominator(ex.value()) == 1)
                           ? print(ex)
                           : "(" + print(ex) + ")";
      return wrap(e.children()[0], kAtom) + "^" + es;
    }
    case Kind::Product: {
      bool neg = false;
      std::string s = print_product_abs(e, neg);
      return neg ? "-" + s : s;
    }
    case Kind::Sum: {
      std::string s;
      bool first = true;
      for (const auto& c : e.children()) {
        bool neg = false;
        std::string body;
        if (c.is_number()) {
          neg = c.value() < 0;
          body = rational_str(neg ? Rational(-c.value()) : c.value());
        } else if (c.kind() == Kind::Product) {
          body = print_product_abs(c, neg);
        } else {
          body = wrap(c, kProduct);
        }
        if (first) s = neg ? "-" + body : body;
        else s += neg ? " - " + body : " + " + body;
        first = false;
      }
      return s;
    }
  }
  return "?";
}

}  // namespace

std::string Expr::str() const { return print(*this); }

// ---------------------------------------------------------------------------
// Operators

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(-1), a}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_number()) {
    if (b.value() == 0) throw DivisionByZeroError("division by literal zero");
    return Expr::product({a, Expr(Rational(1) / b.value())});
  }
  return Expr::product({a, Expr::power(b, Expr(-1))});
}
Expr pow(const Expr& base, const Expr& exponent) { return Expr::power(base, exponent); }
Expr pow(const Expr& base, int exponent) { return Expr::power(base, Expr(exponent)); }
Expr sym(const std::string& name) { return Expr::symbol(name); }
Expr num(long long n, long long d) { return Expr::number(n, d); }

// ---------------------------------------------------------------------------
// Errors

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : SymbolicError("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

UnboundSymbolError::UnboundSymbolError(const std::string& name)
    : SymbolicError("unbound symbol: " + name), name_(name) {}

}  // namespace dcq
