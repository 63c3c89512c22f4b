#include "dcq/symexpr/rational_function.hpp"

#include <algorithm>

namespace dcq::rf {

namespace {

struct Term {
  Rational coef;
  Monomial mono;
};

Expr canonical(const Expr& e) { return to_expr(to_ratfun(e)); }

void add_atom(std::vector<std::pair<Expr, int>>& atoms, const Expr& a, int e) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), a,
                             [](const std::pair<Expr, int>& p, const Expr& x) { return compare(p.first, x) < 0; });
  if (it != atoms.end() && compare(it->first, a) == 0) {
    it->second += e;
    if (it->second == 0) atoms.erase(it);
  } else if (e != 0) {
    atoms.insert(it, {a, e});
  }
}

Rational rational_pow(const Rational& base, int n) {
  Rational r = 1;
  Rational b = n < 0 ? Rational(1) / base : base;
  for (int i = 0; i < std::abs(n); ++i) r *= b;
  return r;
}

/// Pull whole powers out of x^(1/q) atoms for symbol and numeric bases.
void normalise_fractional(std::vector<std::pair<Expr, int>>& atoms, Rational& coef) {
  std::vector<std::pair<Expr, int>> extra;
  for (auto it = atoms.begin(); it != atoms.end();) {
    const Expr& a = it->first;
    if (a.kind() == Kind::Power && a.children()[1].is_number()) {
      const Expr& base = a.children()[0];
      const Rational& ex = a.children()[1].value();
      long long q = static_cast<long long>(boost::multiprecision::denominator(ex));
      if (boost::multiprecision::numerator(ex) == 1 && q > 1 &&
          (base.kind() == Kind::Symbol || base.is_number()) && std::abs(it->second) >= q) {
        int whole = static_cast<int>(it->second / q);
        int rem = static_cast<int>(it->second % q);
        if (base.is_number()) coef *= rational_pow(base.value(), whole);
        else extra.emplace_back(base, whole);
        if (rem == 0) {
          it = atoms.erase(it);
          continue;
        }
        it->second = rem;
      }
    }
    ++it;
  }
  for (auto& [a, e] : extra) add_atom(atoms, a, e);
}

Term mono_mul(const Monomial& a, const Monomial& b) {
  Term t{Rational(1), {}};
  auto& out = t.mono.atoms;
  out.reserve(a.atoms.size() + b.atoms.size());
  std::size_t i = 0, j = 0;
  while (i < a.atoms.size() || j < b.atoms.size()) {
    if (j == b.atoms.size()) {
      out.push_back(a.atoms[i++]);
    } else if (i == a.atoms.size()) {
      out.push_back(b.atoms[j++]);
    } else {
      int c = compare(a.atoms[i].first, b.atoms[j].first);
      if (c < 0) out.push_back(a.atoms[i++]);
      else if (c > 0) out.push_back(b.atoms[j++]);
      else {
        int e = a.atoms[i].second + b.atoms[j].second;
        if (e != 0) out.emplace_back(a.atoms[i].first, e);
        ++i;
        ++j;
      }
    }
  }
  normalise_fractional(out, t.coef);
  int im = a.imag + b.imag;
  if (im >= 2) {
    im -= 2;
    t.coef = -t.coef;
  }
  t.mono.imag = im;
  if (a.exp_arg && b.exp_arg) {
    Expr s = canonical(*a.exp_arg + *b.exp_arg);
    if (!s.is_zero()) t.mono.exp_arg = s;
  } else if (a.exp_arg) {
    t.mono.exp_arg = a.exp_arg;
  } else if (b.exp_arg) {
    t.mono.exp_arg = b.exp_arg;
  }
  return t;
}

Term mono_inv(const Monomial& m) {
  Term t{Rational(1), {}};
  t.mono.atoms = m.atoms;
  for (auto& [a, e] : t.mono.atoms) e = -e;
  if (m.imag) {
    t.mono.imag = 1;
    t.coef = -1;
  }
  if (m.exp_arg) t.mono.exp_arg = canonical(-*m.exp_arg);
  return t;
}

Term mono_div(const Monomial& a, const Monomial& b) {
  Term inv = mono_inv(b);
  Term t = mono_mul(a, inv.mono);
  t.coef *= inv.coef;
  return t;
}

void accumulate(Poly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

int exponent_of(const Monomial& m, const Expr& a) {
  for (const auto& [x, e] : m.atoms)
    if (compare(x, a) == 0) return e;
  return 0;
}

Poly trig_reduce(Poly p) {
  for (int guard = 0; guard < 256; ++guard) {
    bool changed = false;
    Poly out;
    for (const auto& [m, c] : p) {
      auto it = std::find_if(m.atoms.begin(), m.atoms.end(),
                             [](const auto& pr) { return pr.first.kind() == Kind::Cos && pr.second >= 2; });
      if (it == m.atoms.end()) {
        // sin^2 cos^n with n < 0 -> cos^n - cos^(n+2), so cos can cancel
        auto sn = std::find_if(m.atoms.begin(), m.atoms.end(), [&](const auto& pr) {
          return pr.first.kind() == Kind::Sin && pr.second >= 2 &&
                 exponent_of(m, Expr::cos(pr.first.children()[0])) < 0;
        });
        if (sn == m.atoms.end()) {
          accumulate(out, m, c);
          continue;
        }
        changed = true;
        Monomial rest = m;
        Expr carg = Expr::cos(sn->first.children()[0]);
        add_atom(rest.atoms, sn->first, -2);
        accumulate(out, rest, c);
        Monomial c2;
        c2.atoms.emplace_back(carg, 2);
        Term t = mono_mul(rest, c2);
        accumulate(out, t.mono, -c * t.coef);
        continue;
      }
      changed = true;
      Monomial rest = m;
      Expr arg = it->first.children()[0];
      add_atom(rest.atoms, it->first, -2);
      accumulate(out, rest, c);
      Monomial s2;
      s2.atoms.emplace_back(Expr::sin(arg), 2);
      Term t = mono_mul(rest, s2);
      accumulate(out, t.mono, -c * t.coef);
    }
    p = std::move(out);
    if (!changed) break;
  }
  return p;
}

struct NormalFactor {
  Rational c;
  Monomial m;
  Poly pn;
};

NormalFactor normalise_factor(const Poly& p) {
  NormalFactor nf;
  // Minimum exponent of each atom across all terms (absent counts as 0).
  std::vector<std::pair<Expr, int>> mins;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (first) {
      mins = m.atoms;
      first = false;
      continue;
    }
    std::vector<std::pair<Expr, int>> next;
    // atoms in mins but absent from m -> min(e, 0); atoms in m absent from mins -> min(0, e)
    std::size_t i = 0, j = 0;
    while (i < mins.size() || j < m.atoms.size()) {
      if (j == m.atoms.size() || (i < mins.size() && compare(mins[i].first, m.atoms[j].first) < 0)) {
        int e = std::min(mins[i].second, 0);
        if (e != 0) next.emplace_back(mins[i].first, e);
        ++i;
      } else if (i == mins.size() || compare(mins[i].first, m.atoms[j].first) > 0) {
        int e = std::min(m.atoms[j].second, 0);
        if (e != 0) next.emplace_back(m.atoms[j].first, e);
        ++j;
      } else {
        int e = std::min(mins[i].second, m.atoms[j].second);
        if (e != 0) next.emplace_back(mins[i].first, e);
        ++i;
        ++j;
      }
    }
    mins = std::move(next);
  }
  nf.m.atoms = mins;
  bool all_imag = !p.empty();
  std::optional<Expr> common_exp = p.empty() ? std::nullopt : p.begin()->first.exp_arg;
  for (const auto& [m, c] : p) {
    if (!m.imag) all_imag = false;
    if (common_exp && (!m.exp_arg || compare(*m.exp_arg, *common_exp) != 0)) common_exp.reset();
  }
  nf.m.imag = all_imag ? 1 : 0;
  nf.m.exp_arg = common_exp;

  Term inv = mono_inv(nf.m);
  Poly shifted;
  for (const auto& [m, c] : p) {
    Term t = mono_mul(m, inv.mono);
    accumulate(shifted, t.mono, c * t.coef * inv.coef);
  }
  nf.c = shifted.empty() ? Rational(1) : shifted.begin()->second;
  for (auto& [m, c] : shifted) c /= nf.c;
  nf.pn = std::move(shifted);
  return nf;
}

bool divides_mono(const Monomial& b, const Monomial& a) {
  for (const auto& [x, e] : b.atoms)
    if (exponent_of(a, x) < e) return false;
  if (b.imag > a.imag) return false;
  if (b.exp_arg && (!a.exp_arg || compare(*a.exp_arg, *b.exp_arg) != 0)) return false;
  return true;
}

Monomial nonneg_shift(const Poly& p) {
  Monomial s;
  for (const auto& [m, c] : p)
    for (const auto& [a, e] : m.atoms)
      if (e < 0 && -e > exponent_of(s, a)) {
        int cur = exponent_of(s, a);
        add_atom(s.atoms, a, -e - cur);
      }
  return s;
}

Poly times_mono(const Poly& p, const Monomial& m) { return poly_mul_term(p, Rational(1), m); }

Poly pow_poly(const Poly& p, int n) {
  Poly r = poly_constant(1);
  for (int i = 0; i < n; ++i) r = poly_mul(r, p);
  return r;
}

bool is_single_term(const Poly& p) { return p.size() == 1; }

}  // namespace

bool operator==(const Monomial& a, const Monomial& b) { return compare_mono(a, b) == 0; }

int compare_mono(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.atoms.size() || j < b.atoms.size()) {
    int c;
    int ea, eb;
    if (j == b.atoms.size()) c = -1;
    else if (i == a.atoms.size()) c = 1;
    else c = compare(a.atoms[i].first, b.atoms[j].first);
    if (c < 0) {
      ea = a.atoms[i++].second;
      eb = 0;
    } else if (c > 0) {
      ea = 0;
      eb = b.atoms[j++].second;
    } else {
      ea = a.atoms[i++].second;
      eb = b.atoms[j++].second;
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  if (a.imag != b.imag) return a.imag < b.imag ? -1 : 1;
  if (a.exp_arg.has_value() != b.exp_arg.has_value()) return a.exp_arg ? 1 : -1;
  if (a.exp_arg) return compare(*a.exp_arg, *b.exp_arg);
  return 0;
}

int compare_poly(const Poly& a, const Poly& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (int c = compare_mono(ia->first, ib->first); c != 0) return c;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Poly poly_constant(const Rational& c) {
  Poly p;
  if (c != 0) p.emplace(Monomial{}, c);
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b) accumulate(r, m, c);
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& [m, v] : r) v *= c;
  return r;
}

Poly poly_mul_term(const Poly& a, const Rational& c, const Monomial& m) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [am, ac] : a) {
    Term t = mono_mul(am, m);
    accumulate(r, t.mono, ac * c * t.coef);
  }
  return trig_reduce(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [am, ac] : a)
    for (const auto& [bm, bc] : b) {
      Term t = mono_mul(am, bm);
      accumulate(r, t.mono, ac * bc * t.coef);
    }
  return trig_reduce(std::move(r));
}

std::optional<Poly> poly_exact_div(const Poly& num, const Poly& den) {
  if (den.empty()) throw DivisionByZeroError("polynomial division by zero");
  if (num.empty()) return Poly{};
  if (is_single_term(den)) {
    const auto& [dm, dc] = *den.begin();
    Term inv = mono_inv(dm);
    return poly_mul_term(num, inv.coef / dc, inv.mono);
  }
  Monomial s = nonneg_shift(num);
  Monomial t = nonneg_shift(den);
  Poly n = times_mono(num, s);
  Poly d = times_mono(den, t);
  Poly q;
  const auto& [ldm, ldc] = *d.begin();
  int steps = 0;
  while (!n.empty()) {
    if (++steps > 20000) return std::nullopt;
    const auto [lm, lc] = *n.begin();
    if (!divides_mono(ldm, lm)) return std::nullopt;
    Term qt = mono_div(lm, ldm);
    Rational qc = lc / ldc * qt.coef;
    accumulate(q, qt.mono, qc);
    Poly sub = poly_mul_term(d, -qc, qt.mono);
    n = poly_add(n, sub);
  }
  // num/den = (n/d) * t / s
  Term sinv = mono_inv(s);
  Term ts = mono_mul(t, sinv.mono);
  return poly_mul_term(q, ts.coef * sinv.coef, ts.mono);
}

// ---------------------------------------------------------------------------

RatFun RatFun::constant(const Rational& c) { return RatFun(poly_constant(c)); }

RatFun RatFun::atom(const Expr& a) {
  Monomial m;
  m.atoms.emplace_back(a, 1);
  Poly p;
  p.emplace(m, Rational(1));
  return RatFun(std::move(p));
}

RatFun RatFun::imag() {
  Monomial m;
  m.imag = 1;
  Poly p;
  p.emplace(m, Rational(1));
  return RatFun(std::move(p));
}

RatFun RatFun::exponential(const Expr& arg) {
  if (arg.is_zero()) return constant(1);
  Monomial m;
  m.exp_arg = arg;
  Poly p;
  p.emplace(m, Rational(1));
  return RatFun(std::move(p));
}

bool RatFun::is_constant() const {
  if (!den_.empty()) return false;
  return num_.empty() || (num_.size() == 1 && num_.begin()->first.is_one());
}

std::optional<Rational> RatFun::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.empty() ? Rational(0) : num_.begin()->second;
}

// Split denominator factors that are exact multiples of another factor so
// that shared pieces can cancel against the numerator.
void RatFun::refine() {
  for (int guard = 0; guard < 32; ++guard) {
    bool changed = false;
    for (std::size_t i = 0; i < den_.size() && !changed; ++i) {
      for (std::size_t j = 0; j < den_.size() && !changed; ++j) {
        if (i == j || den_[j].poly.size() < den_[i].poly.size()) continue;
        auto q = poly_exact_div(den_[j].poly, den_[i].poly);
        if (!q) continue;
        NormalFactor nf = normalise_factor(*q);
        int k = den_[j].multiplicity;
        Term inv = mono_inv(nf.m);
        Rational scale = 1;
        Monomial shift;
        for (int t = 0; t < k; ++t) {
          Term st = mono_mul(shift, inv.mono);
          shift = st.mono;
          scale *= st.coef * inv.coef / nf.c;
        }
        num_ = poly_mul_term(num_, scale, shift);
        den_[i].multiplicity += k;
        if (nf.pn.size() > 1) den_[j] = Factor{nf.pn, k};
        else den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
    if (!changed) break;
    // merge duplicates created by splitting
    std::vector<Factor> merged;
    for (auto& f : den_) {
      auto it = std::find_if(merged.begin(), merged.end(),
                             [&](const Factor& g) { return compare_poly(g.poly, f.poly) == 0; });
      if (it == merged.end()) merged.push_back(f);
      else it->multiplicity += f.multiplicity;
    }
    den_ = std::move(merged);
  }
  std::sort(den_.begin(), den_.end(), [](const Factor& x, const Factor& y) { return compare_poly(x.poly, y.poly) < 0; });
}

void RatFun::cancel() {
  if (num_.empty()) {
    den_.clear();
    return;
  }
  refine();
  for (auto& f : den_) {
    while (f.multiplicity > 0) {
      auto q = poly_exact_div(num_, f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.multiplicity;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.multiplicity == 0; }),
             den_.end());
}

namespace {

int multiplicity_of(const std::vector<Factor>& fs, const Poly& p) {
  for (const auto& f : fs)
    if (compare_poly(f.poly, p) == 0) return f.multiplicity;
  return 0;
}

std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool add) {
  std::vector<Factor> out = a;
  for (const auto& f : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& g) { return compare_poly(g.poly, f.poly) == 0; });
    if (it == out.end()) out.push_back(f);
    else it->multiplicity = add ? it->multiplicity + f.multiplicity : std::max(it->multiplicity, f.multiplicity);
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return compare_poly(x.poly, y.poly) < 0; });
  return out;
}

}  // namespace

RatFun RatFun::operator+(const RatFun& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  RatFun r;
  if (den_.empty() && o.den_.empty()) {
    r.num_ = poly_add(num_, o.num_);
    return r;
  }
  r.den_ = merge_factors(den_, o.den_, false);
  Poly na = num_;
  Poly nb = o.num_;
  for (const auto& f : r.den_) {
    int ka = f.multiplicity - multiplicity_of(den_, f.poly);
    int kb = f.multiplicity - multiplicity_of(o.den_, f.poly);
    if (ka > 0) na = poly_mul(na, pow_poly(f.poly, ka));
    if (kb > 0) nb = poly_mul(nb, pow_poly(f.poly, kb));
  }
  r.num_ = poly_add(na, nb);
  r.cancel();
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  for (auto& [m, c] : r.num_) c = -c;
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun{};
  RatFun r;
  r.num_ = poly_mul(num_, o.num_);
  if (den_.empty() && o.den_.empty()) return r;
  r.den_ = merge_factors(den_, o.den_, true);
  r.cancel();
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZeroError("division by an expression that simplifies to zero");
  NormalFactor nf = normalise_factor(num_);
  RatFun r;
  Poly n = poly_constant(1);
  for (const auto& f : den_) n = poly_mul(n, pow_poly(f.poly, f.multiplicity));
  Term inv = mono_inv(nf.m);
  r.num_ = poly_mul_term(n, inv.coef / nf.c, inv.mono);
  if (nf.pn.size() > 1) r.den_.push_back(Factor{nf.pn, 1});
  r.cancel();
  return r;
}

RatFun RatFun::with_hint(const Poly& factor) const {
  if (is_zero() || den_.empty()) return *this;
  NormalFactor nf = normalise_factor(factor);
  if (nf.pn.size() < 2) return *this;
  RatFun r = *this;
  r.den_.push_back(Factor{nf.pn, 0});
  r.cancel();
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFun result = constant(1);
  RatFun base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool RatFun::operator==(const RatFun& o) const {
  if (compare_poly(num_, o.num_) != 0 || den_.size() != o.den_.size()) return false;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i].multiplicity != o.den_[i].multiplicity || compare_poly(den_[i].poly, o.den_[i].poly) != 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Conversion

RatFun to_ratfun(const Expr& e) {
  switch (e.kind()) {
    case Kind::Number: return RatFun::constant(e.value());
    case Kind::Imag: return RatFun::imag();
    case Kind::Symbol:
    case Kind::Deriv: return RatFun::atom(e);
    case Kind::Sin: {
      Expr arg = canonical(e.children()[0]);
      if (arg.is_zero()) return RatFun{};
      return RatFun::atom(Expr::sin(arg));
    }
    case Kind::Cos: {
      Expr arg = canonical(e.children()[0]);
      if (arg.is_zero()) return RatFun::constant(1);
      return RatFun::atom(Expr::cos(arg));
    }
    case Kind::Exp: return RatFun::exponential(canonical(e.children()[0]));
    case Kind::Power: {
      auto ex = to_ratfun(e.children()[1]).constant_value();
      if (!ex) throw SymbolicError("unsupported non-constant exponent in " + e.str());
      RatFun base = to_ratfun(e.children()[0]);
      auto p = boost::multiprecision::numerator(*ex);
      auto q = boost::multiprecision::denominator(*ex);
      if (q == 1) {
        if (p > 1000 || p < -1000) throw SymbolicError("exponent too large in " + e.str());
        return base.pow(static_cast<int>(p));
      }
      if (base.is_zero()) {
        if (*ex > 0) return RatFun{};
        throw DivisionByZeroError("zero raised to a negative power");
      }
      if (auto bv = base.constant_value(); bv && *bv == 1) return RatFun::constant(1);
      Expr b = to_expr(base);
      Expr atom = Expr::power(b, Expr(Rational(1) / Rational(q)));
      return RatFun::atom(atom).pow(static_cast<int>(p));
    }
    case Kind::Product: {
      RatFun r = RatFun::constant(1);
      for (const auto& c : e.children()) {
        r = r * to_ratfun(c);
        if (r.is_zero()) break;
      }
      return r;
    }
    case Kind::Sum: {
      RatFun r;
      for (const auto& c : e.children()) r = r + to_ratfun(c);
      return r;
    }
  }
  return RatFun{};
}

namespace {

Expr atom_power(const Expr& a, int e) {
  if (a.kind() == Kind::Power && a.children()[1].is_number()) {
    return Expr::power(a.children()[0], Expr(a.children()[1].value() * e));
  }
  return e == 1 ? a : Expr::power(a, Expr(e));
}

Expr term_to_expr(const Monomial& m, const Rational& c) {
  std::vector<Expr> fs;
  fs.emplace_back(c);
  for (const auto& [a, e] : m.atoms) fs.push_back(atom_power(a, e));
  if (m.imag) fs.push_back(Expr::imag());
  if (m.exp_arg) fs.push_back(Expr::exp(*m.exp_arg));
  return Expr::product(std::move(fs));
}

}  // namespace

Expr poly_to_expr(const Poly& p) {
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p) terms.push_back(term_to_expr(m, c));
  return Expr::sum(std::move(terms));
}

Expr to_expr(const RatFun& r) {
  Expr n = poly_to_expr(r.num());
  if (r.den().empty()) return n;
  std::vector<Expr> fs{n};
  for (const auto& f : r.den()) fs.push_back(Expr::power(poly_to_expr(f.poly), Expr(-f.multiplicity)));
  return Expr::product(std::move(fs));
}

// ---------------------------------------------------------------------------
// Side relations

std::vector<Rule> compile_rules(const SideRelations& rel) {
  std::vector<Rule> rules;
  for (const auto& [lhs, rhs] : rel.rules) {
    RatFun l = to_ratfun(lhs);
    if (!l.den().empty() || l.num().size() != 1)
      throw SymbolicError("side relation left-hand side must be a single monomial: " + lhs.str());
    const auto& [m, c] = *l.num().begin();
    if (m.imag || m.exp_arg) throw SymbolicError("side relation left-hand side must be a plain monomial");
    for (const auto& [a, e] : m.atoms)
      if (e <= 0) throw SymbolicError("side relation left-hand side must have positive exponents");
    if (m.atoms.empty()) throw SymbolicError("side relation left-hand side is a constant");
    RatFun r = to_ratfun(rhs);
    if (!r.den().empty()) throw SymbolicError("side relation right-hand side must be polynomial: " + rhs.str());
    rules.push_back(Rule{m, poly_scale(r.num(), Rational(1) / c)});
  }
  return rules;
}

namespace {

bool divides_positive(const Monomial& lhs, const Monomial& m) {
  for (const auto& [a, e] : lhs.atoms)
    if (exponent_of(m, a) < e) return false;
  return true;
}

Poly reduce_poly(Poly p, const std::vector<Rule>& rules, int cap) {
  for (int iter = 0; iter < cap; ++iter) {
    bool changed = false;
    Poly out;
    for (const auto& [m, c] : p) {
      bool matched = false;
      for (const auto& rule : rules) {
        if (!divides_positive(rule.lhs, m)) continue;
        Term q = mono_div(m, rule.lhs);
        out = poly_add(out, poly_mul_term(rule.rhs, c * q.coef, q.mono));
        matched = changed = true;
        break;
      }
      if (!matched) accumulate(out, m, c);
    }
    p = std::move(out);
    if (!changed) break;
  }
  return trig_reduce(std::move(p));
}

RatFun reduce_once(const RatFun& r, const std::vector<Rule>& rules, int cap) {
  RatFun out(reduce_poly(r.num(), rules, cap));
  for (const auto& f : r.den()) {
    RatFun fr(reduce_poly(f.poly, rules, cap));
    out = out * fr.inverse().pow(f.multiplicity);
  }
  return out;
}

}  // namespace

RatFun reduce(const RatFun& r, const std::vector<Rule>& rules, int cap) {
  if (rules.empty()) return r;
  RatFun cur = reduce_once(r, rules, cap);
  for (int i = 0; i < 4; ++i) {
    RatFun next = reduce_once(cur, rules, cap);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

int degree_in(const RatFun& r, const Expr& s) {
  int d = 0;
  for (const auto& [m, c] : r.num()) d = std::max(d, exponent_of(m, s));
  return d;
}

}  // namespace dcq::rf
