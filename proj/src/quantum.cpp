#include "qpb/quantum.hpp"

#include <stdexcept>

#include "qpb/errors.hpp"
#include "qpb/fano.hpp"
#include "qpb/gw.hpp"

namespace qpb {

namespace {
constexpr std::size_t kH = 0;
constexpr std::size_t kXi = 1;
constexpr std::size_t kQ = 2;

// prod_u (xi - m_u h)^{e(m_u)} over {h, xi, q}.
IntPoly split_product(const BundleSpec& spec, int shift) {
  IntPoly prod = IntPoly::constant(kHXiQVars, 1);
  for (int m : spec.splitting()) {
    IntPoly f(kHXiQVars);
    f.add_term({0, 1, 0}, 1);
    f.add_term({1, 0, 0}, -m);
    prod = prod * f.pow(m + shift);
  }
  return prod;
}
}  // namespace

bool QClass::is_homogeneous() const {
  std::optional<int> d;
  for (const auto& [ijk, c] : coeff) {
    int t = std::get<0>(ijk) + std::get<1>(ijk) + std::get<2>(ijk);
    if (!d)
      d = t;
    else if (*d != t)
      return false;
  }
  return true;
}

IntPoly to_poly(const QClass& c) {
  IntPoly p(kHXiQVars);
  for (const auto& [ijk, v] : c.coeff)
    p.add_term({std::get<0>(ijk), std::get<1>(ijk), std::get<2>(ijk)}, v);
  return p;
}

IntPoly classical_lhs1(const BundleSpec& spec) {
  return IntPoly::monomial(kHXiQVars, {spec.n() + 1, 0, 0}, 1);
}

IntPoly classical_lhs2(const BundleSpec& spec) {
  IntPoly p(kHXiQVars);
  for (int i = 0; i <= spec.r(); ++i) {
    Int c = (i % 2 == 0) ? spec.c(i) : -spec.c(i);
    p.add_term({i, spec.r() - i, 0}, c);
  }
  return p;
}

QuantumRelations::QuantumRelations(BundleSpec spec, IntPoly rhs1,
                                   IntPoly rhs2, Source src)
    : spec_(std::move(spec)),
      rhs1_(std::move(rhs1)),
      rhs2_(std::move(rhs2)),
      source_(src) {
  if (rhs1_.vars() != kHXiQVars || rhs2_.vars() != kHXiQVars)
    throw std::invalid_argument("relations must live over {h, xi, q}");
  auto check = [](const IntPoly& rhs, int degree, const char* which) {
    for (const auto& [e, c] : rhs.terms()) {
      if (e[kH] + e[kXi] + e[kQ] != degree)
        throw invariant_error(std::string(which) +
                              ": inhomogeneous right-hand side");
      if (e[kQ] < 1)
        throw invariant_error(std::string(which) +
                              ": q-free quantum correction");
    }
  };
  check(rhs1_, spec_.n() + 1, "first relation");
  check(rhs2_, spec_.r(), "second relation");

  // xi^r = rhs2 - (lhs2 - xi^r) = rhs2 + sum_{i>=1} (-1)^{i+1} c_i h^i xi^{r-i}
  xi_rule_ = rhs2_;
  for (int i = 1; i <= spec_.r(); ++i) {
    Int c = (i % 2 == 1) ? spec_.c(i) : -spec_.c(i);
    xi_rule_.add_term({i, spec_.r() - i, 0}, c);
  }
}

QuantumRelations relations_split(const BundleSpec& spec) {
  const long c1 = spec.c1();
  const long n = spec.n();
  const long r = spec.r();
  if (!spec.is_split())
    throw std::invalid_argument("relations_split needs a split bundle");
  if (!(c1 < 2 * r))
    throw hypothesis_error("c_1 < 2r fails: " + std::to_string(c1) +
                           " >= " + std::to_string(2 * r));
  if (!(2 * c1 < n + 1 + 2 * r))
    throw hypothesis_error("2c_1 < n+1+2r fails: " + std::to_string(2 * c1) +
                           " >= " + std::to_string(n + 1 + 2 * r));
  if (!(2 * c1 < 2 * n + 2 + r))
    throw hypothesis_error("2c_1 < 2n+2+r fails: " + std::to_string(2 * c1) +
                           " >= " + std::to_string(2 * n + 2 + r));

  IntPoly rhs1 = split_product(spec, -1).times_monomial(
      {0, 0, static_cast<int>(n + 1 + r - c1)}, 1);
  IntPoly rhs2 =
      IntPoly::monomial(kHXiQVars, {0, 0, static_cast<int>(r)}, 1);
  return QuantumRelations(spec, std::move(rhs1), std::move(rhs2),
                          QuantumRelations::Source::SplitClosedForm);
}

QuantumRelations relations_tangent(int n) {
  if (n < 2) throw std::invalid_argument("tangent relations need n >= 2");
  BundleSpec spec = BundleSpec::tangent(n);
  IntPoly rhs1 = IntPoly::monomial(kHXiQVars, {0, 1, n}, 1);
  IntPoly rhs2(kHXiQVars);
  rhs2.add_term({0, 0, n}, 1 + ((n % 2 == 0) ? 1 : -1));
  return QuantumRelations(spec, std::move(rhs1), std::move(rhs2),
                          QuantumRelations::Source::TangentClosedForm);
}

QuantumRelations derive_tangent_relations(int n) {
  if (n < 2) throw std::invalid_argument("tangent relations need n >= 2");
  BundleSpec spec = BundleSpec::tangent(n);

  // First relation: h^{n+1} = ((a1' + a2') h + a3' xi) q^n.
  Int a1p = gw_tangent_unit_count(n, 1, 0, n - 1, 0);
  Int a3p = gw_tangent_xi_leading(n);
  Int a2p = gw_tangent_h_coefficient(n) - spec.c(1) * a3p;
  IntPoly rhs1(kHXiQVars);
  rhs1.add_term({1, 0, n}, a1p + a2p);
  rhs1.add_term({0, 1, n}, a3p);

  // Second relation: (1 + sum (-1)^i c_i b2^{(n-i)}) q^n, each b2 from the
  // catalog: b2^{(0)} and b2^{(n)} pair a power of h or xi with the
  // complementary power, interior ones mix the two.
  auto b2 = [n](int i) {
    if (i == 0) return gw_tangent_unit_count(n, n - 1, 0, 1, 0);
    if (i == n) return gw_tangent_unit_count(n, 0, 1, 0, n - 1);
    return gw_tangent_unit_count(n, n - i, 0, 0, i);
  };
  Int c0 = 1;
  for (int i = 0; i <= n; ++i) {
    Int term = spec.c(i) * b2(n - i);
    c0 += (i % 2 == 0) ? term : -term;
  }
  IntPoly rhs2(kHXiQVars);
  rhs2.add_term({0, 0, n}, c0);
  return QuantumRelations(spec, std::move(rhs1), std::move(rhs2),
                          QuantumRelations::Source::TangentAssembled);
}

RelationTemplate::RelationTemplate(BundleSpec spec, Holes a, Holes b)
    : spec_(std::move(spec)), a_(std::move(a)), b_(std::move(b)) {}

bool RelationTemplate::complete() const {
  for (const auto& [ij, v] : a_)
    if (!v) return false;
  for (const auto& [ij, v] : b_)
    if (!v) return false;
  return true;
}

QuantumRelations RelationTemplate::to_relations() const {
  if (!complete())
    throw std::invalid_argument("relation template still has holes");
  IntPoly rhs1(kHXiQVars);
  for (const auto& [ij, v] : a_)
    rhs1.add_term({ij.first, ij.second, spec_.n() + 1 - ij.first - ij.second},
                  *v);
  IntPoly rhs2 =
      IntPoly::monomial(kHXiQVars, {0, 0, spec_.r()}, 1);
  for (const auto& [ij, v] : b_)
    rhs2.add_term({ij.first, ij.second, spec_.r() - ij.first - ij.second},
                  *v);
  return QuantumRelations(spec_, std::move(rhs1), std::move(rhs2),
                          QuantumRelations::Source::TemplateFilled);
}

RelationTemplate relations_template_general(const BundleSpec& spec) {
  const long c1 = spec.c1();
  const long n = spec.n();
  const long r = spec.r();
  HypothesisReport rep = classify_hypotheses(spec);
  if (!rep.template_c1_le_n && !rep.template_twist_nef)
    throw hypothesis_error(
        "neither c_1 <= n nor (c_1 <= n+r with V(-1) nef): c_1 = " +
        std::to_string(c1));

  RelationTemplate::Holes a;
  for (long i = 0; i + r <= c1; ++i)
    for (long j = 0; i + j + r <= c1; ++j)
      a[{static_cast<int>(i), static_cast<int>(j)}] = std::nullopt;
  RelationTemplate::Holes b;
  for (long i = 0; i + n + 1 <= c1; ++i)
    for (long j = 0; i + j + n + 1 <= c1; ++j)
      b[{static_cast<int>(i), static_cast<int>(j)}] = std::nullopt;

  if (c1 < 2 * r) a[{0, static_cast<int>(c1 - r)}] = Int(1);

  // The two closed-form relations hold under separate bounds, so each side
  // of the template is filled independently.
  if (spec.is_split() && c1 < 2 * r && 2 * c1 < n + 1 + 2 * r) {
    IntPoly prod = split_product(spec, -1);
    for (auto& [ij, v] : a)
      v = (ij.first + ij.second == c1 - r)
              ? prod.coeff({ij.first, ij.second, 0})
              : Int(0);
  }
  if (spec.is_split() && spec.m1() == 1 && 2 * c1 < 2 * n + 2 + r) {
    for (auto& [ij, v] : b)
      v = Int(0);  // the second relation is exactly q^r
  }
  return RelationTemplate(spec, std::move(a), std::move(b));
}

QClass q_normal_form(const IntPoly& p, const QuantumRelations& rel) {
  if (p.vars() != kHXiQVars)
    throw std::invalid_argument("expected a polynomial in h, xi, q");
  const BundleSpec& spec = rel.spec();
  const int n = spec.n();
  const int r = spec.r();

  IntPoly work = p;
  for (;;) {
    if (work.degree_in(kXi) >= r) {
      IntPoly next(kHXiQVars);
      for (const auto& [e, c] : work.terms()) {
        if (e[kXi] < r)
          next.add_term(e, c);
        else
          next += rel.xi_rule().times_monomial({e[kH], e[kXi] - r, e[kQ]}, c);
      }
      work = std::move(next);
      continue;
    }
    if (work.degree_in(kH) >= n + 1) {
      IntPoly next(kHXiQVars);
      for (const auto& [e, c] : work.terms()) {
        if (e[kH] < n + 1)
          next.add_term(e, c);
        else
          next += rel.rhs1().times_monomial({e[kH] - n - 1, e[kXi], e[kQ]}, c);
      }
      work = std::move(next);
      continue;
    }
    break;
  }

  QClass out{spec, {}};
  for (const auto& [e, c] : work.terms())
    out.coeff.emplace(std::make_tuple(e[kH], e[kXi], e[kQ]), c);
  return out;
}

QClass q_product(const QClass& x, const QClass& y,
                 const QuantumRelations& rel) {
  if (!(x.spec == y.spec) || !(x.spec == rel.spec()))
    throw std::invalid_argument("q_product: bundle specs differ");
  return q_normal_form(to_poly(x) * to_poly(y), rel);
}

bool verify_w_pairing(const BundleSpec& spec, int i) {
  const long c1 = spec.c1();
  const int r = spec.r();
  const int n = spec.n();
  // gw_W gates on the invariant's own hypotheses (m_1 = 1, c_1 < 2r,
  // 2c_1 < n+1+2r, 0 <= i <= c_1-r); the pairing side is total.
  Int w = gw_W(spec, i);

  IntPoly prod = IntPoly::constant(kHXiVars, 1);
  for (int m : spec.splitting()) {
    IntPoly f(kHXiVars);
    f.add_term({0, 1}, 1);
    f.add_term({1, 0}, -m);
    prod = prod * f.pow(m - 1);
  }
  prod = prod.times_monomial(
      {n - i, static_cast<int>(2 * r - c1 - 1) + i}, 1);
  Int paired = integrate(normal_form_classical(prod, spec));
  return w == paired;
}

}  // namespace qpb
