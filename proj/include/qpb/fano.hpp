#pragma once

#include "qpb/bundle.hpp"

namespace qpb {

/// Degree of -K_{P(V)} = (n+1-c_1) h + r xi against a curve class:
/// a(n+1-c_1) + r(a c_1 + b).
Int anticanonical_degree(const BundleSpec& spec, const CurveClass& A);

/// The section class A_2 = (1, m_1 - c_1) together with a certificate for
/// whether it generates the second extremal ray of the curve cone.
struct ExtremalA2 {
  enum class Cert {
    SmallC1Bound,       // 2 c_1 <= n+1 forces it
    NefDivisor,         // xi - m_1 h is nef, which is equivalent to it
    RepresentativeOnly  // no criterion applies; the class is only known to
                        // be represented by a section over a line
  };
  CurveClass a2;
  Cert cert;
};

/// Split specs only; xi - m_1 h is always nef there, so the certificate is
/// NefDivisor whenever the small-c_1 bound fails.
ExtremalA2 extremal_A2(const BundleSpec& spec);

/// Dimension of the space of maps from lines with xi-degree m (split specs).
/// Empty when m < m_1; 2n+k when m = m_1; 2n+r+rm-c_1 when m >= m_r; the
/// intermediate range is not covered by a closed formula.
struct ModuliDim {
  enum class Kind { Empty, Value, NotCovered };
  Kind kind;
  long dim = 0;  // meaningful for Kind::Value
};
ModuliDim moduli_dimension(const BundleSpec& spec, int m);

/// Rank c_1 + k - 2r of the first-cohomology obstruction space along a
/// section over a line; split specs with m_1 = 1. Always >= 0 and equal to
/// the total degree of the obstruction Euler class.
long obstruction_rank(const BundleSpec& spec);

/// One boolean per applicability bound used by the relation builders and
/// the extremal-ray analysis. Each flag is pure arithmetic in (n, r, m_i).
struct HypothesisReport {
  // c_1 < min(2r, (n+1+2r)/2, (2n+2+r)/2): closed-form split relations.
  bool split_closed_form_bound = false;
  // c_1 <= n: first clause gating the general relation template.
  bool template_c1_le_n = false;
  // c_1 <= n+r with V(-1) nef: second clause gating the template.
  bool template_twist_nef = false;
  // c_1 < 2r: the leading template coefficient is pinned to 1.
  bool leading_coeff_bound = false;
  // c_1 < 2r and (2c_1 <= n+r, or 2c_1 <= n+2r with V(-1) nef):
  // only the section ray corrects the first relation.
  bool f1_single_ray_bound = false;
  // 2c_1 <= 2n+r+1 with V(-1) nef: only the fiber and section rays correct
  // the second relation.
  bool f2_single_ray_bound = false;
  // 2c_1 <= n+1: the section class generates the second extremal ray.
  bool small_c1_ray_bound = false;
  // V tensor O(-1) is nef.
  bool twist_nef = false;
  // xi - m_1 h is nef (split and tangent specs; always true here).
  bool xi_m1h_nef = false;
};
HypothesisReport classify_hypotheses(const BundleSpec& spec);

}  // namespace qpb
