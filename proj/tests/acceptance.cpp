#include "dcq/cli/reproduce.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>

// One line per acceptance criterion. Exits 0 after reporting; --strict turns failures into exit 1.
int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  auto t0 = std::chrono::steady_clock::now();
  auto rep = dcq::cli::reproduce();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::map<int, const char*> titles = {
      {1, "Dirac bracket and commutator golden table"}, {2, "Delta matrix and Delta Phi = I"},
      {3, "constraint brackets vanish"},                {4, "Jacobi identity"},
      {5, "printed bound and baselines"},               {6, "field conversions"},
      {7, "threshold laws and calibrated sweeps"},      {8, "momentum ansatz"},
      {9, "hermiticity and Weyl ordering"},             {10, "energy shift, L_z additivity, reality"},
      {11, "formula vs quadrature oracle"}};
  std::map<int, int> total, failed;
  for (const auto& row : rep.rows) {
    if (!row.gating) continue;
    ++total[row.criterion];
    if (!row.pass) ++failed[row.criterion];
  }
  bool all = true, first_ten = true;
  for (const auto& [c, title] : titles) {
    bool ok = total[c] > 0 && failed[c] == 0;
    all = all && ok;
    if (c <= 10) first_ten = first_ten && ok;
    std::printf("criterion %2d: %s  %s (%d/%d rows)\n", c, ok ? "PASS" : "FAIL", title, total[c] - failed[c], total[c]);
    for (const auto& row : rep.rows)
      if (row.criterion == c && row.gating && !row.pass)
        std::printf("    failing: %s: expected %s, computed %s (tol %s)\n", row.id.c_str(), row.expected.c_str(),
                    row.computed.c_str(), row.tolerance.c_str());
  }
  bool ok12 = secs < 60 && first_ten;
  all = all && ok12;
  std::printf("criterion 12: %s  reproduce end to end in %.2f s, criteria 1-10 %s\n", ok12 ? "PASS" : "FAIL", secs,
              first_ten ? "pass" : "do not all pass");
  return strict && !all ? 1 : 0;
}
