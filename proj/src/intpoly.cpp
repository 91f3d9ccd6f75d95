#include "qpb/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpb {

IntPoly::IntPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

IntPoly IntPoly::constant(std::vector<std::string> vars, Int c) {
  IntPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
  return p;
}

IntPoly IntPoly::variable(std::vector<std::string> vars,
                          const std::string& name, int exp) {
  IntPoly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = exp;
  return monomial(p.vars_, std::move(e), 1);
}

IntPoly IntPoly::monomial(std::vector<std::string> vars, Exponents exps,
                          Int c) {
  IntPoly p(std::move(vars));
  if (exps.size() != p.vars_.size())
    throw std::invalid_argument("monomial: exponent arity mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

std::size_t IntPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw std::invalid_argument("unknown variable: " + name);
  return static_cast<std::size_t>(it - vars_.begin());
}

Int IntPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

void IntPoly::require_same_vars(const IntPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomials over different variable lists");
}

IntPoly IntPoly::operator-() const {
  IntPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

void IntPoly::add_term(const Exponents& exps, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  require_same_vars(o);
  IntPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

IntPoly IntPoly::scaled(const Int& c) const {
  IntPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

IntPoly IntPoly::times_monomial(const Exponents& exps, const Int& c) const {
  if (exps.size() != vars_.size())
    throw std::invalid_argument("times_monomial: exponent arity mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("times_monomial: negative exponent");
  IntPoly r(vars_);
  if (c == 0) return r;
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + exps[i];
    r.terms_.emplace(e, ca * c);
  }
  return r;
}

IntPoly IntPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  IntPoly r = constant(vars_, 1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

int IntPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

int IntPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::optional<int> IntPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    if (!d)
      d = t;
    else if (*d != t)
      return std::nullopt;
  }
  return d;
}

IntPoly IntPoly::coeff_of(std::size_t var, int exp) const {
  IntPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != exp) continue;
    Exponents f = e;
    f[var] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

IntPoly IntPoly::drop_above(std::size_t var, int max_exp) const {
  IntPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] <= max_exp) r.terms_.emplace(e, c);
  return r;
}

IntPoly IntPoly::subst_zero(std::size_t var) const {
  return coeff_of(var, 0);
}

IntPoly IntPoly::swap_vars(std::size_t a, std::size_t b) const {
  IntPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[a], f[b]);
    r.add_term(f, c);
  }
  return r;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
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
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << " ";
      mono << vars_[i];
      if (e[i] != 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << " ";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace qpb
