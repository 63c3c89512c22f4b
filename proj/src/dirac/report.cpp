#include "dcq/dirac/report.hpp"

#include "dcq/symexpr/serialize.hpp"

#include <sstream>

namespace dcq::dirac {

namespace {

Comparison compare_forms(std::string label, const Expr& computed, const Expr& printed, const SideRelations& rel,
                         std::string rel_name) {
  return Comparison{std::move(label), computed, printed, equiv(computed, printed, rel).verdict, std::move(rel_name)};
}

}  // namespace

DerivationReport derive(int k) {
  DerivationReport r;
  r.k = k;
  r.lagrangian = mech::build_lagrangian(k, true);
  r.degeneracy = mech::hessian_degeneracy(r.lagrangian);
  r.h1 = mech::legendre(r.lagrangian);
  r.h2 = mech::total_hamiltonian(r.h1);
  r.h3 = mech::reduced_hamiltonian(r.h2);
  Constraint s1{"sigma1", mech::PhaseSpace::plam(), Generation::Primary, ConstraintClass::Unknown};
  r.chain = generate_chain(r.h2, {s1});
  classify(r.chain);
  r.cm = build_and_invert(r.chain);
  DiracSystem ds(r.chain, r.cm);
  r.table = ds.table(ds.particle_vars());

  SideRelations none;
  SideRelations surf = r.chain.ps.surface();
  SideRelations weak = comparison_relations(k);
  for (std::size_t n = 0; n < r.chain.constraints.size() && n < 4; ++n)
    r.comparisons.push_back(compare_forms(r.chain.constraints[n].label, r.chain.constraints[n].expr,
                                          printed_sigma(static_cast<int>(n) + 1, k), none, "none"));
  if (r.chain.u1) {
    r.comparisons.push_back(compare_forms("u1", *r.chain.u1, printed_u1(k), none, "none"));
    r.comparisons.push_back(compare_forms("u1", *r.chain.u1, printed_u1(k), weak, "surface+sigma3"));
  }
  for (auto reading : {RadiusReading::Summed, RadiusReading::PerParticle}) {
    Matrix pd = printed_delta(k, reading);
    for (std::size_t i = 0; i < 4 && i < r.cm.delta.size(); ++i)
      for (std::size_t j = 0; j < 4; ++j)
        r.comparisons.push_back(compare_forms("Delta" + std::to_string(i + 1) + std::to_string(j + 1) + "/" +
                                                  reading_name(reading),
                                              r.cm.delta[i][j], pd[i][j], none, "none"));
  }
  for (const auto& pb : printed_brackets(k))
    r.comparisons.push_back(
        compare_forms("[" + pb.u + "," + pb.v + "] " + pb.family, r.table.at(pb.u, pb.v), pb.printed, surf, "surface"));
  return r;
}

nlohmann::json report_json(const DerivationReport& r) {
  using nlohmann::json;
  json j;
  j["k"] = r.k;
  j["lagrangian"] = r.lagrangian.L.str();
  j["degeneracy"] = {{"degenerate", r.degeneracy.degenerate},
                     {"null_directions", r.degeneracy.null_directions},
                     {"determinant", r.degeneracy.determinant.str()}};
  j["hamiltonians"] = {{"H1", r.h1.H.str()}, {"H2", r.h2.H.str()}, {"H3", r.h3.H.str()}};
  json cs = json::array();
  for (const auto& c : r.chain.constraints)
    cs.push_back({{"label", c.label},
                  {"expr", c.expr.str()},
                  {"tree", to_json(c.expr)},
                  {"generation", generation_name(c.generation)},
                  {"class", class_name(c.cls)}});
  j["chain"] = {{"constraints", cs},
                {"u1", r.chain.u1 ? json(r.chain.u1->str()) : json(nullptr)},
                {"termination", r.chain.termination}};
  auto mat = [](const Matrix& m) {
    json a = json::array();
    for (const auto& row : m) {
      json jr = json::array();
      for (const auto& e : row) jr.push_back(e.str());
      a.push_back(jr);
    }
    return a;
  };
  j["phi"] = mat(r.cm.phi);
  j["delta"] = mat(r.cm.delta);
  j["delta_reduced"] = mat(r.cm.delta_reduced);
  j["det_phi"] = r.cm.det.str();
  json tb = json::array();
  for (std::size_t i = 0; i < r.table.vars.size(); ++i)
    for (std::size_t k = i + 1; k < r.table.vars.size(); ++k) {
      const auto& u = r.table.vars[i];
      const auto& v = r.table.vars[k];
      tb.push_back({{"u", u}, {"v", v}, {"value", r.table.at(u, v).str()}});
    }
  j["brackets"] = {{"flavor", flavor_name(r.table.flavor)}, {"entries", tb}};
  json cmp = json::array();
  for (const auto& c : r.comparisons)
    cmp.push_back({{"label", c.label},
                   {"verdict", verdict_name(c.verdict)},
                   {"relations", c.relations},
                   {"printed", c.printed.str()}});
  j["comparisons"] = cmp;
  return j;
}

std::string report_text(const DerivationReport& r) {
  std::ostringstream os;
  os << "Constrained system, k = " << r.k << "\n\n";
  os << "L  = " << r.lagrangian.L.str() << "\n";
  os << "velocity Hessian degenerate: " << (r.degeneracy.degenerate ? "yes" : "no");
  for (const auto& d : r.degeneracy.null_directions) os << " [" << d << "]";
  os << "\n\nH1 = " << r.h1.H.str() << "\nH2 = " << r.h2.H.str() << "\nH3 = " << r.h3.H.str() << "\n\n";
  for (const auto& c : r.chain.constraints)
    os << c.label << " (" << generation_name(c.generation) << ", " << class_name(c.cls) << ") = " << c.expr.str()
       << "\n";
  if (r.chain.u1) os << "u1 = " << r.chain.u1->str() << "\n";
  os << "\nDelta:\n";
  for (std::size_t i = 0; i < r.cm.delta.size(); ++i)
    for (std::size_t j = 0; j < r.cm.delta.size(); ++j)
      if (!r.cm.delta[i][j].is_zero())
        os << "  D" << i + 1 << j + 1 << " = " << r.cm.delta[i][j].str() << "\n";
  os << "\nDirac brackets on the surface:\n";
  for (std::size_t i = 0; i < r.table.vars.size(); ++i)
    for (std::size_t k = i + 1; k < r.table.vars.size(); ++k) {
      const Expr& e = r.table.at(r.table.vars[i], r.table.vars[k]);
      if (!e.is_zero()) os << "  [" << r.table.vars[i] << ", " << r.table.vars[k] << "] = " << e.str() << "\n";
    }
  os << "\nComparisons:\n";
  for (const auto& c : r.comparisons)
    os << "  " << verdict_name(c.verdict) << "  " << c.label << " (" << c.relations << ")\n";
  return os.str();
}

}  // namespace dcq::dirac
