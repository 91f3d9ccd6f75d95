#include "qpb/bundle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpb {

std::vector<Int> chern_from_splitting(const std::vector<int>& m) {
  if (m.empty())
    throw std::invalid_argument("chern_from_splitting: empty splitting");
  std::vector<Int> e(m.size() + 1, Int(0));
  e[0] = 1;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t i = u + 1; i >= 1; --i) e[i] += Int(m[u]) * e[i - 1];
  return e;
}

BundleSpec BundleSpec::split(int n, std::vector<int> m) {
  if (n < 1) throw std::invalid_argument("base dimension must be >= 1");
  if (m.empty()) throw std::invalid_argument("empty splitting type");
  for (int mi : m)
    if (mi < 1) throw std::invalid_argument("twist degrees must be >= 1");
  std::sort(m.begin(), m.end());
  BundleSpec s;
  s.kind_ = Kind::Split;
  s.n_ = n;
  s.r_ = static_cast<int>(m.size());
  s.chern_ = chern_from_splitting(m);
  s.m_ = std::move(m);
  return s;
}

BundleSpec BundleSpec::tangent(int n) {
  if (n < 1) throw std::invalid_argument("base dimension must be >= 1");
  BundleSpec s;
  s.kind_ = Kind::Tangent;
  s.n_ = n;
  s.r_ = n;
  s.chern_.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) s.chern_[i] = binom(n + 1, i);
  return s;
}

const std::vector<int>& BundleSpec::splitting() const {
  if (!is_split())
    throw std::invalid_argument("splitting type: not a split bundle");
  return m_;
}

int BundleSpec::m1() const { return splitting().front(); }

int BundleSpec::k() const {
  const auto& m = splitting();
  return static_cast<int>(std::count(m.begin(), m.end(), m.front()));
}

const Int& BundleSpec::c(int i) const {
  if (i < 0 || i > r_)
    throw std::invalid_argument("Chern index out of range");
  return chern_[static_cast<std::size_t>(i)];
}

long BundleSpec::c1() const {
  if (!chern_[1].fits_slong_p())
    throw std::invalid_argument("c1 does not fit a machine integer");
  return chern_[1].get_si();
}

BundleSpec BundleSpec::twisted(int d) const {
  std::vector<int> m = splitting();
  for (int& mi : m) mi += d;
  return split(n_, std::move(m));
}

BundleSpec BundleSpec::normalized() const { return twisted(1 - m1()); }

std::string BundleSpec::describe() const {
  std::ostringstream os;
  if (is_tangent()) {
    os << "P(T) over P^" << n_;
  } else {
    os << "P(";
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) os << "+";
      os << "O(" << m_[i] << ")";
    }
    os << ") over P^" << n_;
  }
  return os.str();
}

std::vector<Int> segre_classes(const BundleSpec& spec, int order) {
  if (order < 0) throw std::invalid_argument("segre order must be >= 0");
  std::vector<Int> s(static_cast<std::size_t>(order) + 1, Int(0));
  s[0] = 1;
  for (int i = 1; i <= order; ++i) {
    Int acc = 0;
    for (int j = 1; j <= std::min(i, spec.r()); ++j)
      acc += spec.c(j) * s[static_cast<std::size_t>(i - j)];
    s[static_cast<std::size_t>(i)] = -acc;
  }
  return s;
}

}  // namespace qpb
