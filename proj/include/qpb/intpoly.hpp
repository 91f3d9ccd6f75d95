#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpb/ints.hpp"

namespace qpb {

/// Sparse multivariate polynomial over arbitrary-precision integers.
///
/// Terms are keyed by exponent vectors (one slot per named variable) and
/// iterate in lexicographic order, so printed output is reproducible.
/// No zero coefficient is ever stored and exponents are non-negative.
/// Values are immutable in practice: every operation returns a new value,
/// and const instances are safe to share across threads.
class IntPoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Int>;

  IntPoly() = default;  // zero polynomial over the empty variable list
  explicit IntPoly(std::vector<std::string> vars);

  static IntPoly constant(std::vector<std::string> vars, Int c);
  static IntPoly variable(std::vector<std::string> vars,
                          const std::string& name, int exp = 1);
  static IntPoly monomial(std::vector<std::string> vars, Exponents exps,
                          Int c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t var_index(const std::string& name) const;
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const Exponents& exps) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator*(const IntPoly& o) const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  bool operator==(const IntPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  IntPoly scaled(const Int& c) const;
  /// *this * c * x^exps.
  IntPoly times_monomial(const Exponents& exps, const Int& c) const;
  IntPoly pow(int e) const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Degree when all terms share it, nullopt otherwise (zero counts as
  /// homogeneous of every degree and reports nullopt as well).
  std::optional<int> homogeneous_degree() const;

  /// Terms whose exponent in `var` equals `exp`, with that slot zeroed.
  IntPoly coeff_of(std::size_t var, int exp) const;
  /// Drops terms whose exponent in `var` exceeds `max_exp`.
  IntPoly drop_above(std::size_t var, int max_exp) const;
  /// Substitutes var = 0.
  IntPoly subst_zero(std::size_t var) const;
  IntPoly swap_vars(std::size_t a, std::size_t b) const;

  /// Adds c * x^exps in place.
  void add_term(const Exponents& exps, const Int& c);

  std::string str() const;

private:
  void require_same_vars(const IntPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace qpb
