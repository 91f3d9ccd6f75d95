#pragma once

#include <string>
#include <vector>

#include "qpb/ints.hpp"

namespace qpb {

/// Degree-2 homology class a*(h^{n-1} xi^{r-1})_* + b*(h^n xi^{r-2})_* of
/// P(V). Integrality only; effectivity is a separate question.
struct CurveClass {
  long a = 0;
  long b = 0;
  bool operator==(const CurveClass&) const = default;
};

/// Elementary symmetric polynomials e_0..e_r of the twist degrees; e_i is
/// the i-th Chern number. Rejects an empty list.
std::vector<Int> chern_from_splitting(const std::vector<int>& m);

/// The projectivization P(V) of a rank-r bundle V over P^n, for V either a
/// direct sum of line bundles O(m_1) + ... + O(m_r) (sorted ascending on
/// construction, all m_i >= 1) or the tangent bundle of P^n. Carries the
/// Chern numbers c_i with c_i(V) = c_i h^i; immutable after construction.
class BundleSpec {
public:
  enum class Kind { Split, Tangent };

  static BundleSpec split(int n, std::vector<int> m);
  static BundleSpec tangent(int n);

  Kind kind() const { return kind_; }
  bool is_split() const { return kind_ == Kind::Split; }
  bool is_tangent() const { return kind_ == Kind::Tangent; }
  int n() const { return n_; }
  int r() const { return r_; }
  /// Dimension of P(V).
  int dim() const { return n_ + r_ - 1; }

  /// Twist degrees, ascending. Split specs only.
  const std::vector<int>& splitting() const;
  int m1() const;
  /// Number of summands of minimal degree. Split specs only.
  int k() const;

  const std::vector<Int>& chern() const { return chern_; }
  const Int& c(int i) const;
  /// c_1 as a machine integer (always small here).
  long c1() const;

  /// The bundle twisted by O(d); P(V) is unchanged. Split specs only.
  BundleSpec twisted(int d) const;
  /// Twisted so the minimal degree becomes 1.
  BundleSpec normalized() const;

  bool operator==(const BundleSpec& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_;
  }

  std::string describe() const;

private:
  BundleSpec() = default;

  Kind kind_ = Kind::Split;
  int n_ = 0;
  int r_ = 0;
  std::vector<int> m_;       // empty for tangent
  std::vector<Int> chern_;   // c_0 .. c_r
};

/// Segre numbers s_0..s_order from the recursion
/// s_i = -(c_1 s_{i-1} + ... + c_min(i,r) s_{i-min(i,r)}), s_0 = 1.
std::vector<Int> segre_classes(const BundleSpec& spec, int order);

}  // namespace qpb
