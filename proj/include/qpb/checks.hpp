#pragma once

#include <string>
#include <vector>

#include "qpb/bundle.hpp"

namespace qpb {

/// Default verification grid: 1 <= n <= n_max, 2 <= r <= r_max, ascending
/// splitting types with 1 <= m_1 <= ... <= m_r <= m_max.
struct GridBounds {
  int n_max = 6;
  int r_max = 5;
  int m_max = 4;
};

/// All split specs in the grid (every splitting type, any m_1).
std::vector<BundleSpec> split_grid(const GridBounds& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  long cases = 0;       // number of individual comparisons performed
  std::string detail;   // first failure, or a short summary
};

/// The eight exact verification criteria. Each runs two independent
/// computation routes against each other (or frozen known values) over the
/// grid; all comparisons are exact integer equalities.
CheckResult check_w_two_path(const GridBounds& g);
CheckResult check_w_classical_pairing(const GridBounds& g);
CheckResult check_split_relation_goldens();
CheckResult check_tangent_two_way();
CheckResult check_schubert_integrals();
CheckResult check_quantum_soundness(const GridBounds& g);
CheckResult check_segre_inverse(const GridBounds& g);
CheckResult check_geometry_formulas(const GridBounds& g);

std::vector<CheckResult> run_all_checks(const GridBounds& g);

}  // namespace qpb
