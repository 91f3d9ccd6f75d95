#pragma once

#include <string>
#include <vector>

#include "qpb/ints.hpp"

namespace qpb {

/// Truncated univariate power series with exact rational coefficients.
///
/// Arithmetic is closed under the truncation order. When the integral flag
/// is set, every coefficient must have denominator 1; this is asserted after
/// every operation so a non-integral intermediate is caught immediately.
class TruncSeries {
public:
  TruncSeries(std::string var, int order, bool integral);
  static TruncSeries one(std::string var, int order, bool integral = true);

  const std::string& var() const { return var_; }
  int order() const { return order_; }
  bool integral() const { return integral_; }

  const Rat& coeff(int i) const;
  /// Coefficient as an integer; requires denominator 1.
  Int int_coeff(int i) const;
  void set_coeff(int i, Rat c);

  TruncSeries truncated(int new_order) const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries& o) const;

  std::string str() const;

private:
  void check_integral() const;

  std::string var_;
  int order_;
  bool integral_;
  std::vector<Rat> coeffs_;  // c_0 .. c_order
};

/// One factor (1 - m t)^e; the exponent may be negative.
struct LinearFactor {
  long m;
  long e;
};

/// Truncated expansion of a product of integer powers of linear forms
/// 1 - m t. Negative exponents expand through the binomial series; the
/// coefficients are exact integers.
TruncSeries series_expand(const std::vector<LinearFactor>& factors, int order,
                          const std::string& var = "t");

}  // namespace qpb
