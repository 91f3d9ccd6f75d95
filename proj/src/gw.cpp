#include "qpb/gw.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpb/cohomology.hpp"
#include "qpb/errors.hpp"
#include "qpb/fano.hpp"
#include "qpb/schubert.hpp"
#include "qpb/series.hpp"

namespace qpb {

long degree_deficit(const GwQuery& q) {
  long total = 0;
  for (const auto& [i, j] : q.insertions) total += i + j;
  Int balanced =
      Int(q.spec.dim()) + anticanonical_degree(q.spec, q.curve);
  Int deficit = Int(total) - balanced;
  if (!deficit.fits_slong_p())
    throw std::invalid_argument("degree deficit out of range");
  return deficit.get_si();
}

Int expected_dim(const BundleSpec& spec, const CurveClass& A) {
  return anticanonical_degree(spec, A) + spec.dim() - 3;
}

Int gw_fiber_line(const BundleSpec& spec) {
  if (spec.r() < 2)
    throw std::invalid_argument("fiber lines need fiber dimension >= 1");
  return 1;
}

bool gw_vanishes_fiber_multiple(const BundleSpec& spec, long b, int q1,
                                int q2) {
  if (b < 1) throw std::invalid_argument("fiber multiple must be >= 1");
  if (q1 < 0 || q2 < 0)
    throw std::invalid_argument("xi-degrees must be non-negative");
  return q1 + q2 < spec.r();
}

Int gw_W(const BundleSpec& spec, int i) {
  // The integral route carries the hypothesis checks; run it first so a
  // refusal precedes any series work.
  Int integral = gw_integral_W(spec, i);
  std::vector<LinearFactor> factors;
  for (int m : spec.splitting())
    factors.push_back({m, static_cast<long>(m) - 2});
  Int series = series_expand(factors, i).int_coeff(i);
  if (series != integral)
    throw invariant_error("W_" + std::to_string(i) + " path disagreement: " +
                          series.get_str() + " (series) vs " +
                          integral.get_str() + " (integral) for " +
                          spec.describe());
  return series;
}

namespace {
void require_tangent_n(int n) {
  if (n < 2) throw std::invalid_argument("tangent invariants need n >= 2");
}
}  // namespace

Int gw_tangent_h_coefficient(int n) {
  require_tangent_n(n);
  return n;
}

Int gw_tangent_unit_count(int n, int j, int k, int s, int t) {
  require_tangent_n(n);
  if (j < 0 || k < 0 || s < 0 || t < 0)
    throw std::invalid_argument("insertion exponents must be non-negative");
  if (std::max(j, k) == 0 || std::max(s, t) == 0 || j + k + s + t != n)
    throw std::invalid_argument(
        "insertions outside the unit-count hypotheses");
  return 1;
}

Int gw_tangent_xi_leading(int n) {
  require_tangent_n(n);
  return 1;
}

namespace {

using Insertions = std::vector<std::pair<int, int>>;

Insertions sorted(Insertions v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool matches(const Insertions& got, Insertions want) {
  return got == sorted(std::move(want));
}

GwResult known(Int value, const char* tag, std::string note = {}) {
  return GwResult{true, std::move(value), tag, std::move(note)};
}

GwResult unknown(std::string note = {}) {
  return GwResult{false, 0, provenance::kUnknown, std::move(note)};
}

}  // namespace

GwResult gw_lookup(const GwQuery& q) {
  const BundleSpec& spec = q.spec;
  const int n = spec.n();
  const int r = spec.r();
  const long c1 = spec.c1();

  for (const auto& [i, j] : q.insertions)
    if (i < 0 || i > n || j < 0 || j > r - 1)
      throw std::invalid_argument("insertion outside the basis box");
  if (r < 2 && q.curve.b != 0)
    throw std::invalid_argument("fiber-class leg undefined for r = 1");

  if (degree_deficit(q) != 0)
    return known(0, provenance::kDegreeBalance, "degree deficit forces 0");

  const Insertions ins = sorted(q.insertions);
  const long a = q.curve.a;
  const long b = q.curve.b;

  if (a == 0 && b == 0) {
    CohClass prod = coh_one(spec);
    for (const auto& [i, j] : q.insertions)
      prod = cup(prod, coh_monomial(spec, i, j));
    return known(integrate(prod), provenance::kClassicalCup);
  }

  if (a == 0 && b >= 1) {
    if (ins.size() == 3) {
      // Two insertions with xi-degrees summing below r kill the invariant.
      std::vector<int> xi = {ins[0].second, ins[1].second, ins[2].second};
      std::sort(xi.begin(), xi.end());
      if (xi[0] + xi[1] < r)
        return known(0, provenance::kFiberVanishing);
      if (b == 1 && matches(ins, {{0, 1}, {0, r - 1}, {n, r - 1}}))
        return known(gw_fiber_line(spec), provenance::kFiberLine);
    }
    return unknown(b >= 2 ? "fiber multiples are only covered by the "
                            "vanishing criterion"
                          : "");
  }

  if (a == 1) {
    const long m = c1 + b;  // xi-degree of the curve class
    const int m1 = spec.is_split() ? spec.m1() : 1;
    if (m < m1)
      return known(0, provenance::kEmptyModuli,
                   "no maps from lines with this xi-degree");
    if (m == 1 && m1 == 1 && ins.size() == 3) {
      if (spec.is_split()) {
        if (c1 < 2 * r && 2 * c1 < n + 1 + 2 * r) {
          const int ntilde = (n + 1) / 2;
          for (int i = 0; i <= static_cast<int>(c1) - r; ++i) {
            const int top = static_cast<int>(2 * r - c1 - 1) + i;
            if (top > r - 1 || n - i < 0) continue;
            if (matches(ins,
                        {{ntilde, 0}, {n + 1 - ntilde, 0}, {n - i, top}}))
              return known(gw_W(spec, i), provenance::kTwoPathW);
          }
        }
        if (c1 < 2 * r && 2 * r - c1 - 1 <= r - 1 &&
            matches(ins, {{1, 0},
                          {n, 0},
                          {n, static_cast<int>(2 * r - c1 - 1)}}))
          return known(1, provenance::kCobLeading);
      } else if (spec.is_tangent() && n >= 2) {
        if (matches(ins, {{1, 0}, {n, 0}, {n - 1, n - 1}}))
          return known(gw_tangent_h_coefficient(n), provenance::kTangentH);
        if (matches(ins, {{1, 0}, {n, 0}, {n, n - 2}}))
          return known(gw_tangent_xi_leading(n), provenance::kCobLeading);
        // (h^j xi^k, h^s xi^t, h^n xi^{n-1}): peel off the point-like class.
        auto it = std::find(ins.begin(), ins.end(),
                            std::make_pair(n, n - 1));
        if (it != ins.end()) {
          Insertions rest = ins;
          rest.erase(rest.begin() + (it - ins.begin()));
          const auto [j, k] = rest[0];
          const auto [s, t] = rest[1];
          if (std::max(j, k) > 0 && std::max(s, t) > 0 && j + k + s + t == n)
            return known(gw_tangent_unit_count(n, j, k, s, t),
                         provenance::kTangentUnit);
        }
      }
    }
    return unknown();
  }

  if (a >= 2)
    return unknown("multiples of the section ray are outside the catalog");
  return unknown();
}

}  // namespace qpb
