#include "qpb/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qpb/errors.hpp"

namespace qpb {

TruncSeries::TruncSeries(std::string var, int order, bool integral)
    : var_(std::move(var)), order_(order), integral_(integral) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncSeries TruncSeries::one(std::string var, int order, bool integral) {
  TruncSeries s(std::move(var), order, integral);
  s.coeffs_[0] = 1;
  return s;
}

const Rat& TruncSeries::coeff(int i) const {
  if (i < 0 || i > order_)
    throw std::invalid_argument("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(i)];
}

Int TruncSeries::int_coeff(int i) const {
  const Rat& c = coeff(i);
  if (c.get_den() != 1)
    throw invariant_error("series coefficient is not an integer");
  return c.get_num();
}

void TruncSeries::set_coeff(int i, Rat c) {
  if (i < 0 || i > order_)
    throw std::invalid_argument("coefficient index out of range");
  c.canonicalize();
  if (integral_ && c.get_den() != 1)
    throw invariant_error("non-integral coefficient in integral series");
  coeffs_[static_cast<std::size_t>(i)] = std::move(c);
}

void TruncSeries::check_integral() const {
  if (!integral_) return;
  for (const Rat& c : coeffs_)
    if (c.get_den() != 1)
      throw invariant_error("non-integral coefficient in integral series");
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("cannot extend a truncated series");
  TruncSeries s(var_, new_order, integral_);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1,
            s.coeffs_.begin());
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("series variable mismatch");
  int n = std::min(order_, o.order_);
  TruncSeries s(var_, n, integral_ && o.integral_);
  for (int i = 0; i <= n; ++i) s.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  s.check_integral();
  return s;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("series variable mismatch");
  int n = std::min(order_, o.order_);
  TruncSeries s(var_, n, integral_ && o.integral_);
  for (int i = 0; i <= n; ++i) {
    Rat acc(0);
    for (int j = 0; j <= i; ++j) acc += coeffs_[j] * o.coeffs_[i - j];
    s.coeffs_[i] = acc;
  }
  s.check_integral();
  return s;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return var_ == o.var_ && order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << " ";
      os << var_;
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << order_ + 1 << ")";
  return os.str();
}

TruncSeries series_expand(const std::vector<LinearFactor>& factors, int order,
                          const std::string& var) {
  // (1 - m t)^e = sum_i C(e, i) (-m)^i t^i for any integer e.
  TruncSeries acc = TruncSeries::one(var, order);
  for (const LinearFactor& f : factors) {
    TruncSeries s(var, order, true);
    Int pw = 1;
    for (int i = 0; i <= order; ++i) {
      s.set_coeff(i, Rat(binom(Int(f.e), i) * pw));
      pw *= -f.m;
    }
    acc = acc * s;
  }
  return acc;
}

}  // namespace qpb
