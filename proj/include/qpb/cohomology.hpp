#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/intpoly.hpp"

namespace qpb {

inline const std::vector<std::string> kHXiVars = {"h", "xi"};

/// Element of H*(P(V); Z) in normal form: integer coefficients on the basis
/// monomials h^i xi^j with 0 <= i <= n, 0 <= j <= r-1. The zero class has an
/// empty coefficient map.
struct CohClass {
  BundleSpec spec;
  std::map<std::pair<int, int>, Int> coeff;  // (i, j) -> coefficient

  bool operator==(const CohClass& o) const {
    return spec == o.spec && coeff == o.coeff;
  }
  bool is_zero() const { return coeff.empty(); }
};

CohClass coh_zero(const BundleSpec& spec);
CohClass coh_one(const BundleSpec& spec);
/// The basis monomial h^i xi^j; indices must lie in the basis box.
CohClass coh_monomial(const BundleSpec& spec, int i, int j);

/// The class as a polynomial over {h, xi}.
IntPoly to_poly(const CohClass& c);

/// Full reduction of a polynomial in h, xi: every xi^r occurrence is
/// replaced through xi^r = sum_{i=1..r} (-1)^{i+1} c_i h^i xi^{r-i}
/// (innermost first), then h-exponents above n are truncated to zero.
CohClass normal_form_classical(const IntPoly& p, const BundleSpec& spec);

/// Cup product: polynomial product followed by reduction to normal form.
CohClass cup(const CohClass& a, const CohClass& b);

/// Coefficient of the point class h^n xi^{r-1}; zero for classes of other
/// degrees.
Int integrate(const CohClass& a);

/// Coefficient of xi^{r-1} (times h^{i-(r-1)}) in the reduction of xi^i:
/// (-1)^{i-(r-1)} s_{i-(r-1)} with s the Segre numbers. Requires i >= r-1.
Int xi_top_coefficient(const BundleSpec& spec, int i);

/// Signed-combination rendering "a h^i xi^j", lexicographic in (i, j).
std::string render(const CohClass& c);

}  // namespace qpb
