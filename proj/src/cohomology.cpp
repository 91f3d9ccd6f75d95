#include "qpb/cohomology.hpp"

#include <stdexcept>

namespace qpb {

namespace {
constexpr std::size_t kH = 0;
constexpr std::size_t kXi = 1;

// xi^r = sum_{i=1..r} (-1)^{i+1} c_i h^i xi^{r-i}
IntPoly xi_rule_rhs(const BundleSpec& spec) {
  IntPoly rhs(kHXiVars);
  for (int i = 1; i <= spec.r(); ++i) {
    Int c = (i % 2 == 1) ? spec.c(i) : -spec.c(i);
    rhs.add_term({i, spec.r() - i}, c);
  }
  return rhs;
}
}  // namespace

CohClass coh_zero(const BundleSpec& spec) { return CohClass{spec, {}}; }

CohClass coh_one(const BundleSpec& spec) {
  return CohClass{spec, {{{0, 0}, Int(1)}}};
}

CohClass coh_monomial(const BundleSpec& spec, int i, int j) {
  if (i < 0 || i > spec.n() || j < 0 || j > spec.r() - 1)
    throw std::invalid_argument("basis monomial outside the basis box");
  return CohClass{spec, {{{i, j}, Int(1)}}};
}

IntPoly to_poly(const CohClass& c) {
  IntPoly p(kHXiVars);
  for (const auto& [ij, v] : c.coeff) p.add_term({ij.first, ij.second}, v);
  return p;
}

CohClass normal_form_classical(const IntPoly& p, const BundleSpec& spec) {
  if (p.vars() != kHXiVars)
    throw std::invalid_argument("expected a polynomial in h, xi");
  const int n = spec.n();
  const int r = spec.r();
  const IntPoly rule = xi_rule_rhs(spec);

  IntPoly work = p;
  // Each pass strictly lowers the maximal xi-exponent of the reducible part.
  while (work.degree_in(kXi) >= r) {
    IntPoly next(kHXiVars);
    for (const auto& [e, c] : work.terms()) {
      if (e[kXi] < r) {
        next.add_term(e, c);
      } else {
        next += rule.times_monomial({e[kH], e[kXi] - r}, c);
      }
    }
    work = std::move(next);
  }
  work = work.drop_above(kH, n);

  CohClass out = coh_zero(spec);
  for (const auto& [e, c] : work.terms())
    out.coeff.emplace(std::make_pair(e[kH], e[kXi]), c);
  return out;
}

CohClass cup(const CohClass& a, const CohClass& b) {
  if (!(a.spec == b.spec))
    throw std::invalid_argument("cup: bundle specs differ");
  return normal_form_classical(to_poly(a) * to_poly(b), a.spec);
}

Int integrate(const CohClass& a) {
  auto it = a.coeff.find({a.spec.n(), a.spec.r() - 1});
  return it == a.coeff.end() ? Int(0) : it->second;
}

Int xi_top_coefficient(const BundleSpec& spec, int i) {
  if (i < spec.r() - 1)
    throw std::invalid_argument("xi_top_coefficient requires i >= r-1");
  const int d = i - (spec.r() - 1);
  Int s = segre_classes(spec, d)[static_cast<std::size_t>(d)];
  return (d % 2 == 0) ? s : -s;
}

std::string render(const CohClass& c) {
  return to_poly(c).str();
}

}  // namespace qpb
