#include "dcq/mechanics/phase_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcq::mech {

PhaseSpace::PhaseSpace(int k_) : k(k_) {
  if (k < 1) throw std::invalid_argument("particle count must be at least 1");
}

std::vector<std::string> PhaseSpace::coordinates() const {
  std::vector<std::string> v;
  for (int j = 1; j <= k; ++j) {
    v.push_back("x" + std::to_string(j));
    v.push_back("y" + std::to_string(j));
  }
  v.push_back("lam");
  return v;
}

std::vector<std::string> PhaseSpace::momenta() const {
  std::vector<std::string> v;
  for (int j = 1; j <= k; ++j) {
    v.push_back("Px" + std::to_string(j));
    v.push_back("Py" + std::to_string(j));
  }
  v.push_back("Plam");
  return v;
}

std::vector<std::string> PhaseSpace::canonical() const {
  auto v = coordinates();
  auto m = momenta();
  v.insert(v.end(), m.begin(), m.end());
  return v;
}

std::vector<std::string> PhaseSpace::parameters() const {
  std::vector<std::string> v{"a", "e", "A"};
  for (int j = 1; j <= k; ++j) {
    v.push_back("Ax" + std::to_string(j));
    v.push_back("Ay" + std::to_string(j));
  }
  return v;
}

bool PhaseSpace::is_canonical(const std::string& name) const {
  auto c = canonical();
  return std::find(c.begin(), c.end(), name) != c.end();
}

Expr PhaseSpace::V(int j, std::vector<std::string> orders) {
  return Expr::deriv("V", {"x" + std::to_string(j), "y" + std::to_string(j)}, std::move(orders));
}

Expr PhaseSpace::r2_sum() const {
  std::vector<Expr> t;
  for (int j = 1; j <= k; ++j) t.push_back(r2(j));
  return Expr::sum(t);
}

SideRelations PhaseSpace::surface() const {
  SideRelations rel;
  Expr rest = Expr(k) * pow(a(), 2) - pow(x(k), 2);
  for (int j = 1; j < k; ++j) rest = rest - r2(j);
  rel.add(pow(y(k), 2), rest);
  return rel;
}

}  // namespace dcq::mech
