#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcq {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

enum class Kind {
  Number,
  Imag,
  Symbol,
  Deriv,
  Sin,
  Cos,
  Exp,
  Power,
  Product,
  Sum,
};

const char* kind_name(Kind k);

class Expr;

/// Immutable expression node. Shared between trees; never mutated after
/// construction.
struct Node {
  Kind kind = Kind::Number;
  Rational value;                  // Number
  std::string name;                // Symbol, Deriv (function name)
  std::vector<Expr> children;      // Sum, Product, Power(base, exponent), Sin/Cos/Exp(arg)
  std::vector<std::string> deps;   // Deriv: arguments of the unknown function
  std::vector<std::string> orders; // Deriv: sorted differentiation variables
  std::size_t hash = 0;
};

class Expr {
 public:
  Expr();  // zero
  Expr(int v);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& v);  // NOLINT(google-explicit-constructor)

  static Expr number(const Rational& v);
  static Expr number(long long num, long long den);
  static Expr imag();
  static Expr symbol(const std::string& name);
  /// Placeholder for a partial derivative of an unknown function `name`
  /// depending on `deps`. An empty `orders` list is the function itself.
  static Expr deriv(const std::string& name, std::vector<std::string> deps,
                    std::vector<std::string> orders = {});
  static Expr sin(const Expr& arg);
  static Expr cos(const Expr& arg);
  static Expr exp(const Expr& arg);
  static Expr power(const Expr& base, const Expr& exponent);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  const std::vector<Expr>& children() const { return node_->children; }
  const std::vector<std::string>& deps() const { return node_->deps; }
  const std::vector<std::string>& orders() const { return node_->orders; }
  std::size_t hash() const { return node_->hash; }

  bool is_number() const { return kind() == Kind::Number; }
  bool is_zero() const;
  bool is_one() const;
  /// Binding key for Deriv nodes, e.g. "Df(V|x1,y1|x1)".
  std::string deriv_key() const;

  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);

  std::shared_ptr<const Node> node_;
};

/// Total order on expressions. Symbols order lexicographically on
/// (alphabetic prefix, trailing particle index, full name).
int compare(const Expr& a, const Expr& b);

inline bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
inline bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }
inline bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, const Expr& exponent);
Expr pow(const Expr& base, int exponent);
Expr sym(const std::string& name);
Expr num(long long n, long long d = 1);

int compare_symbol_names(const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Errors

class SymbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public SymbolicError {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class UnboundSymbolError : public SymbolicError {
 public:
  explicit UnboundSymbolError(const std::string& name);
  const std::string& symbol() const { return name_; }

 private:
  std::string name_;
};

class DivisionByZeroError : public SymbolicError {
 public:
  using SymbolicError::SymbolicError;
};

// ---------------------------------------------------------------------------
// Operations

using Binding = std::map<std::string, Complex>;

/// Rewrite pairs applied to a fixed point. Each left-hand side must simplify
/// to a single monomial; matching monomials are replaced by the right-hand
/// side.
struct SideRelations {
  std::vector<std::pair<Expr, Expr>> rules;
  int iteration_cap = 64;

  bool empty() const { return rules.empty(); }
  void add(Expr lhs, Expr rhs) { rules.emplace_back(std::move(lhs), std::move(rhs)); }
  SideRelations merged(const SideRelations& other) const;

  /// Solve `expr == 0` for the term containing `monomial` (which must appear
  /// linearly) and return the rewrite monomial -> rest.
  static SideRelations from_zero(const Expr& expr, const Expr& monomial);
};

Expr simplify(const Expr& e);
Expr reduce(const Expr& e, const SideRelations& rel);
/// Canonical form with denominators split over the polynomial `factor`.
Expr simplify_with_factor(const Expr& e, const Expr& factor);
Expr diff(const Expr& e, const std::string& s);
/// Derivative without canonicalisation; cheap when only evaluated numerically.
Expr diff_raw(const Expr& e, const std::string& s);
Expr subst(const Expr& e, const std::map<std::string, Expr>& map);
Expr subst_raw(const Expr& e, const std::map<std::string, Expr>& map);
Complex eval(const Expr& e, const Binding& b);

/// Free symbol names and Deriv binding keys.
std::vector<std::string> free_symbols(const Expr& e);
bool depends_on(const Expr& e, const std::string& s);

enum class Verdict { Equal, NotEqual, Inconclusive };
const char* verdict_name(Verdict v);

struct EquivResult {
  Verdict verdict = Verdict::NotEqual;
  bool canonical_match = false;
  int probes = 0;
  double max_rel_diff = 0.0;

  explicit operator bool() const { return verdict == Verdict::Equal; }
};

struct EquivOptions {
  int probes = 24;
  double rel_tol = 1e-9;
  unsigned long long seed = 0x5eedULL;
};

EquivResult equiv(const Expr& a, const Expr& b, const SideRelations& rel = {},
                  const EquivOptions& opt = {});

Expr parse(const std::string& text);

}  // namespace dcq
