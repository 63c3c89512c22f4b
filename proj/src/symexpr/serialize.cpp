#include "dcq/symexpr/serialize.hpp"

#include <sstream>

namespace dcq {

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Kind kind_from_name(const std::string& s) {
  for (Kind k : {Kind::Number, Kind::Imag, Kind::Symbol, Kind::Deriv, Kind::Sin, Kind::Cos, Kind::Exp, Kind::Power,
                 Kind::Product, Kind::Sum})
    if (s == kind_name(k)) return k;
  throw SymbolicError("unknown expression kind '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const Expr& e) {
  nlohmann::json j;
  j["kind"] = kind_name(e.kind());
  switch (e.kind()) {
    case Kind::Number: j["value"] = rational_text(e.value()); break;
    case Kind::Imag: break;
    case Kind::Symbol: j["name"] = e.name(); break;
    case Kind::Deriv:
      j["name"] = e.name();
      j["deps"] = e.deps();
      j["orders"] = e.orders();
      break;
    default: {
      auto& cs = j["children"] = nlohmann::json::array();
      for (const auto& c : e.children()) cs.push_back(to_json(c));
    }
  }
  return j;
}

Expr from_json(const nlohmann::json& j) {
  Kind k = kind_from_name(j.at("kind").get<std::string>());
  auto child = [&](std::size_t i) { return from_json(j.at("children").at(i)); };
  switch (k) {
    case Kind::Number: return Expr(Rational(j.at("value").get<std::string>()));
    case Kind::Imag: return Expr::imag();
    case Kind::Symbol: return Expr::symbol(j.at("name").get<std::string>());
    case Kind::Deriv:
      return Expr::deriv(j.at("name").get<std::string>(), j.at("deps").get<std::vector<std::string>>(),
                         j.value("orders", std::vector<std::string>{}));
    case Kind::Sin: return Expr::sin(child(0));
    case Kind::Cos: return Expr::cos(child(0));
    case Kind::Exp: return Expr::exp(child(0));
    case Kind::Power: return Expr::power(child(0), child(1));
    case Kind::Product:
    case Kind::Sum: {
      std::vector<Expr> cs;
      for (const auto& c : j.at("children")) cs.push_back(from_json(c));
      return k == Kind::Sum ? Expr::sum(std::move(cs)) : Expr::product(std::move(cs));
    }
  }
  throw SymbolicError("unreachable expression kind");
}

}  // namespace dcq
