#include "qpb/fano.hpp"

#include <stdexcept>

#include "qpb/errors.hpp"

namespace qpb {

Int anticanonical_degree(const BundleSpec& spec, const CurveClass& A) {
  const long c1 = spec.c1();
  return Int(A.a) * (spec.n() + 1 - c1) + Int(spec.r()) * (A.a * c1 + A.b);
}

ExtremalA2 extremal_A2(const BundleSpec& spec) {
  const long c1 = spec.c1();
  CurveClass a2{1, spec.m1() - c1};
  if (2 * c1 <= spec.n() + 1)
    return {a2, ExtremalA2::Cert::SmallC1Bound};
  // V(-m_1) is globally generated for split V, so xi - m_1 h is nef.
  return {a2, ExtremalA2::Cert::NefDivisor};
}

ModuliDim moduli_dimension(const BundleSpec& spec, int m) {
  const auto& mm = spec.splitting();
  if (m < mm.front()) return {ModuliDim::Kind::Empty};
  if (m == mm.front())
    return {ModuliDim::Kind::Value, 2L * spec.n() + spec.k()};
  if (m >= mm.back())
    return {ModuliDim::Kind::Value,
            2L * spec.n() + spec.r() + static_cast<long>(spec.r()) * m -
                spec.c1()};
  return {ModuliDim::Kind::NotCovered};
}

long obstruction_rank(const BundleSpec& spec) {
  if (spec.m1() != 1)
    throw std::invalid_argument("obstruction_rank requires m_1 = 1");
  return spec.c1() + spec.k() - 2L * spec.r();
}

HypothesisReport classify_hypotheses(const BundleSpec& spec) {
  const long c1 = spec.c1();
  const long n = spec.n();
  const long r = spec.r();

  HypothesisReport rep;
  // For split bundles with all m_i >= 1, V(-1) = (+) O(m_i - 1) is nef; for
  // the tangent bundle xi - h is nef. Both kinds handled here are twist-nef.
  rep.twist_nef = true;
  rep.xi_m1h_nef = true;

  rep.split_closed_form_bound =
      spec.is_split() && c1 < 2 * r && 2 * c1 < n + 1 + 2 * r &&
      2 * c1 < 2 * n + 2 + r;
  rep.template_c1_le_n = c1 <= n;
  rep.template_twist_nef = c1 <= n + r && rep.twist_nef;
  rep.leading_coeff_bound = c1 < 2 * r;
  rep.f1_single_ray_bound =
      c1 < 2 * r &&
      (2 * c1 <= n + r || (2 * c1 <= n + 2 * r && rep.twist_nef));
  rep.f2_single_ray_bound = 2 * c1 <= 2 * n + r + 1 && rep.twist_nef;
  rep.small_c1_ray_bound = 2 * c1 <= n + 1;
  return rep;
}

}  // namespace qpb
