#include "dcq/dirac/reference.hpp"

namespace dcq::dirac {

using P = mech::PhaseSpace;

namespace {

Expr ka2(int k) { return Expr(k) * pow(P::a(), 2); }

Expr rdotpi(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) t.push_back(P::x(j) * P::pix(j) + P::y(j) * P::piy(j));
  return Expr::sum(t);
}

Expr pi2(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) t.push_back(pow(P::pix(j), 2) + pow(P::piy(j), 2));
  return Expr::sum(t);
}

Expr vx(int j) { return P::V(j, {"x" + std::to_string(j)}); }
Expr vy(int j) { return P::V(j, {"y" + std::to_string(j)}); }
Expr vxx(int j) { return P::V(j, {"x" + std::to_string(j), "x" + std::to_string(j)}); }
Expr vxy(int j) { return P::V(j, {"x" + std::to_string(j), "y" + std::to_string(j)}); }
Expr vyy(int j) { return P::V(j, {"y" + std::to_string(j), "y" + std::to_string(j)}); }

Expr r_grad_v(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) t.push_back(P::x(j) * vx(j) + P::y(j) * vy(j));
  return Expr::sum(t);
}

// r . Hess(V) . r
Expr r_hess_r(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j)
    t.push_back(pow(P::x(j), 2) * vxx(j) + Expr(2) * P::x(j) * P::y(j) * vxy(j) + pow(P::y(j), 2) * vyy(j));
  return Expr::sum(t);
}

// pi . Hess(V) . r
Expr pi_hess_r(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) {
    t.push_back(P::pix(j) * (vxx(j) * P::x(j) + vxy(j) * P::y(j)));
    t.push_back(P::piy(j) * (vxy(j) * P::x(j) + vyy(j) * P::y(j)));
  }
  return Expr::sum(t);
}

Expr pi_grad_v(int k) {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) t.push_back(P::pix(j) * vx(j) + P::piy(j) * vy(j));
  return Expr::sum(t);
}

void add(std::vector<PrintedBracket>& out, const std::string& fam, const Expr& u, const Expr& v, const Expr& e) {
  out.push_back({fam, u.name(), v.name(), simplify(e)});
}

}  // namespace

std::vector<PrintedBracket> printed_brackets(int k) {
  std::vector<PrintedBracket> out;
  Expr d = ka2(k);
  Expr e = P::e();
  for (int j = 1; j <= k; ++j) {
    add(out, "x_k,Px_k", P::x(j), P::px(j), Expr(1) - pow(P::x(j), 2) / d);
    add(out, "y_k,Py_k", P::y(j), P::py(j), Expr(1) - pow(P::y(j), 2) / d);
    add(out, "x_k,Py_k", P::x(j), P::py(j), -(P::x(j) * P::y(j)) / d);
    add(out, "y_k,Px_k", P::y(j), P::px(j), -(P::x(j) * P::y(j)) / d);
    add(out, "Px_k,Py_k", P::px(j), P::py(j),
        (-P::lz(j) + e * (P::x(j) * P::ay(j) - P::y(j) * P::ax(j))) / d);
    for (int m = 1; m <= k; ++m) {
      add(out, "x_j,x_k", P::x(j), P::x(m), Expr(0));
      add(out, "y_j,y_k", P::y(j), P::y(m), Expr(0));
      add(out, "x_j,y_k", P::x(j), P::y(m), Expr(0));
      if (m == j) continue;
      add(out, "x_j,Px_k", P::x(j), P::px(m), -(P::x(j) * P::x(m)) / d);
      add(out, "y_j,Py_k", P::y(j), P::py(m), -(P::y(j) * P::y(m)) / d);
      add(out, "x_j,Py_k", P::x(j), P::py(m), -(P::x(j) * P::y(m)) / d);
      add(out, "y_j,Px_k", P::y(j), P::px(m), -(P::x(m) * P::y(j)) / d);
      add(out, "Px_j,Py_k", P::px(j), P::py(m),
          (P::y(m) * P::px(j) - P::x(j) * P::py(m) + e * (P::x(j) * P::ay(m) - P::ax(j) * P::y(m))) / d);
      if (j < m) {
        add(out, "Px_j,Px_k", P::px(j), P::px(m),
            (P::x(m) * P::px(j) - P::x(j) * P::px(m) + e * (P::x(j) * P::ax(m) - P::x(m) * P::ax(j))) / d);
        add(out, "Py_j,Py_k", P::py(j), P::py(m),
            (P::y(m) * P::py(j) - P::y(j) * P::py(m) + e * (P::y(j) * P::ay(m) - P::y(m) * P::ay(j))) / d);
      }
    }
  }
  return out;
}

const char* reading_name(RadiusReading r) { return r == RadiusReading::Summed ? "summed" : "per_particle"; }

Matrix printed_delta(int k, RadiusReading reading) {
  P ps(k);
  Expr r2 = reading == RadiusReading::Summed ? ps.r2_sum() : pow(P::a(), 2);
  Expr e = P::e();
  Expr top = Expr(2) * pi2(k) + Expr(4) * P::lam() * r2 + e * r_grad_v(k) + e * r_hess_r(k);
  Expr d12 = -top / (Expr(4) * pow(r2, 2));
  Expr d13 = rdotpi(k) / pow(r2, 2);
  Expr half = Expr(1) / (Expr(2) * r2);
  Matrix m = zero_matrix(4);
  m[0][1] = simplify(d12);
  m[1][0] = simplify(-d12);
  m[0][2] = simplify(d13);
  m[2][0] = simplify(-d13);
  m[0][3] = simplify(-half);
  m[3][0] = simplify(half);
  m[1][2] = simplify(-half);
  m[2][1] = simplify(half);
  return m;
}

Expr printed_sigma(int n, int k) {
  P ps(k);
  switch (n) {
    case 1: return P::plam();
    case 2: return simplify(ps.r2_sum() - ka2(k));
    case 3: return simplify(rdotpi(k));
    case 4: return simplify(pi2(k) - P::e() * r_grad_v(k) - Expr(2) * P::lam() * ps.r2_sum());
    default: throw std::out_of_range("constraint index out of range");
  }
}

Expr printed_u1(int k) {
  P ps(k);
  Expr e = P::e();
  Expr num = Expr(3) * e * pi_grad_v(k) + Expr(4) * P::lam() * rdotpi(k) + e * pi_hess_r(k);
  return simplify(-num / (Expr(2) * ps.r2_sum()));
}

SideRelations comparison_relations(int k) {
  P ps(k);
  SideRelations rel = ps.surface();
  return rel.merged(SideRelations::from_zero(printed_sigma(3, k), P::x(1) * P::px(1)));
}

}  // namespace dcq::dirac
