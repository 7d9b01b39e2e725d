#include "painleve/expr/rational_function.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace painleve::expr {
namespace {

mpz_class mpz_abs(const mpz_class& v) { return v < 0 ? mpz_class(-v) : v; }

// Exact k-th root of v when it exists (negative v allowed for odd k).
std::optional<mpz_class> exact_root(const mpz_class& v, unsigned k) {
  if (k == 1) return v;
  if (v < 0 && k % 2 == 0) return std::nullopt;
  mpz_class a = mpz_abs(v), r;
  if (!mpz_root(r.get_mpz_t(), a.get_mpz_t(), k)) return std::nullopt;
  return v < 0 ? mpz_class(-r) : r;
}

std::complex<double> principal_pow(std::complex<double> z, double e) {
  if (z.imag() == 0.0) z = {z.real(), 0.0};  // fold -0 so the branch cut is approached from above
  if (z == std::complex<double>(0.0, 0.0)) return e > 0 ? std::complex<double>(0.0, 0.0) : std::complex<double>(NAN, NAN);
  return std::exp(e * std::log(z));
}

}  // namespace

std::complex<double> branch_pow(std::complex<double> z, const mpq_class& e, RootBranch branch) {
  if (z.imag() == 0.0) z = {z.real(), 0.0};
  if (e.get_den() == 1) {
    if (z == std::complex<double>(0.0, 0.0) && e < 0) return {NAN, NAN};
    return std::pow(z, static_cast<int>(e.get_num().get_si()));
  }
  if (branch == RootBranch::RealOdd && z.imag() == 0.0 && z.real() < 0 && e.get_den().get_ui() % 2 == 1) {
    double m = std::pow(-z.real(), e.get_d());
    return {mpz_odd_p(e.get_num().get_mpz_t()) ? -m : m, 0.0};
  }
  return principal_pow(z, e.get_d());
}

RationalFunction::RationalFunction(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, std::array<unsigned, 2> roots)
    : num_(std::move(num)), den_(std::move(den)), roots_(roots) {}

RationalFunction RationalFunction::symbol(SymbolId v) {
  return RationalFunction(Polynomial::variable(v), Polynomial(1), {1, 1});
}

RationalFunction RationalFunction::symbol_power(SymbolId v, const mpq_class& e) {
  mpq_class ee = e;
  ee.canonicalize();
  if (ee.get_den() != 1 && !is_base_variable(v)) {
    throw NotRepresentable("fractional power of parameter '" + SymbolTable::name(v) + "'");
  }
  if (!ee.get_den().fits_uint_p() || !ee.get_num().fits_slong_p())
    throw NotRepresentable("exponent out of range");
  unsigned k = static_cast<unsigned>(ee.get_den().get_ui());
  long n = ee.get_num().get_si();
  std::array<unsigned, 2> roots{1, 1};
  if (is_base_variable(v)) roots[v] = k;
  Polynomial power = Polynomial::variable(v, static_cast<unsigned>(std::labs(n)));
  RationalFunction r = n >= 0 ? RationalFunction(power, Polynomial(1), roots)
                              : RationalFunction(Polynomial(1), power, roots);
  r.normalize_content_and_roots();
  return r;
}

std::optional<mpq_class> RationalFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  mpq_class q(num_.constant_value(), den_.constant_value());
  q.canonicalize();
  return q;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return roots_ == o.roots_ && num_ == o.num_ && den_ == o.den_;
}

void RationalFunction::lift_roots(std::array<unsigned, 2> target) {
  for (SymbolId v : {kX, kY}) {
    if (target[v] == roots_[v]) continue;
    unsigned f = target[v] / roots_[v];
    num_ = num_.inflate(v, f);
    den_ = den_.inflate(v, f);
    roots_[v] = target[v];
  }
}

void RationalFunction::align(RationalFunction& a, RationalFunction& b) {
  std::array<unsigned, 2> t{std::lcm(a.roots_[0], b.roots_[0]), std::lcm(a.roots_[1], b.roots_[1])};
  a.lift_roots(t);
  b.lift_roots(t);
}

void RationalFunction::normalize_content_and_roots() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    roots_ = {1, 1};
    return;
  }
  mpz_class cn = mpz_abs(num_.content()), cd = mpz_abs(den_.content()), g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g != 1) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  for (SymbolId v : {kX, kY}) {
    if (roots_[v] == 1) continue;
    unsigned e = std::gcd(std::gcd(num_.exponent_gcd(v), den_.exponent_gcd(v)), roots_[v]);
    if (e > 1) {
      num_ = num_.deflate(v, e);
      den_ = den_.deflate(v, e);
      roots_[v] /= e;
    }
  }
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (!num_.is_zero() && !den_.is_constant() && !num_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide(g);
      den_ = *den_.divide(g);
    }
  }
  normalize_content_and_roots();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RationalFunction a = *this, b = o;
  align(a, b);
  if (a.den_ == b.den_) {
    RationalFunction r(a.num_ + b.num_, a.den_, a.roots_);
    r.canonicalize();
    return r;
  }
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RationalFunction r(a.num_ * b.den_.constant_value() + b.num_ * a.den_.constant_value(),
                       Polynomial(mpz_class(a.den_.constant_value() * b.den_.constant_value())), a.roots_);
    r.normalize_content_and_roots();
    return r;
  }
  Polynomial g = gcd(a.den_, b.den_);
  Polynomial da = *a.den_.divide(g), db = *b.den_.divide(g);
  Polynomial num = a.num_ * db + b.num_ * da;
  Polynomial den = a.den_ * db;
  if (!g.is_constant() && !num.is_zero()) {
    Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
      num = *num.divide(h);
      den = *den.divide(h);
    }
  }
  RationalFunction r(std::move(num), std::move(den), a.roots_);
  r.normalize_content_and_roots();
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return {};
  RationalFunction a = *this, b = o;
  align(a, b);
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial n1 = g1.is_constant() ? a.num_ : *a.num_.divide(g1);
  Polynomial d2 = g1.is_constant() ? b.den_ : *b.den_.divide(g1);
  Polynomial n2 = g2.is_constant() ? b.num_ : *b.num_.divide(g2);
  Polynomial d1 = g2.is_constant() ? a.den_ : *a.den_.divide(g2);
  RationalFunction r(n1 * n2, d1 * d2, a.roots_);
  r.normalize_content_and_roots();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  RationalFunction r(den_, num_, roots_);
  r.normalize_content_and_roots();
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long n) const {
  if (n == 0) return RationalFunction(1);
  if (n < 0) return inverse().pow(-n);
  RationalFunction r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), roots_);
  r.normalize_content_and_roots();
  return r;
}

RationalFunction RationalFunction::pow(const mpq_class& e) const {
  mpq_class ee = e;
  ee.canonicalize();
  if (ee.get_den() == 1) {
    if (!ee.get_num().fits_slong_p()) throw NotRepresentable("exponent out of range");
    return pow(ee.get_num().get_si());
  }
  if (is_zero()) {
    if (ee < 0) throw std::domain_error("negative power of zero");
    return {};
  }
  if (!num_.is_monomial() || !den_.is_monomial())
    throw NotRepresentable("fractional power of a non-monomial expression");
  if (!ee.get_den().fits_uint_p()) throw NotRepresentable("exponent out of range");
  unsigned q = static_cast<unsigned>(ee.get_den().get_ui());
  mpz_class p = ee.get_num();

  auto rn = exact_root(num_.leading().coeff, q);
  auto rd = exact_root(den_.leading().coeff, q);
  if (!rn || !rd) throw NotRepresentable("fractional power of a constant that is not a perfect power");
  RationalFunction result = RationalFunction(mpq_class(*rn, *rd)).pow(p.get_si());

  const Monomial& mn = num_.leading().mono;
  const Monomial& md = den_.leading().mono;
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    long net = long(mn.exp[v]) - long(md.exp[v]);
    if (net == 0) continue;
    mpq_class ex(net * p, mpz_class(q) * root(v));
    ex.canonicalize();
    result = result * symbol_power(v, ex);
  }
  return result;
}

RationalFunction RationalFunction::diff(SymbolId v) const {
  if (!depends_on(v)) return {};
  Polynomial dn = num_.derivative(v);
  RationalFunction r;
  if (den_.is_constant()) {
    r = RationalFunction(std::move(dn), den_, roots_);
  } else {
    Polynomial dd = den_.derivative(v);
    Polynomial h = gcd(den_, dd);
    Polynomial e = *den_.divide(h);
    Polynomial f = *dd.divide(h);
    Polynomial num = dn * e - num_ * f;
    Polynomial den = h * e * e;
    if (!num.is_zero() && !h.is_constant()) {
      Polynomial g = gcd(num, h);
      if (!g.is_constant()) {
        num = *num.divide(g);
        den = *den.divide(g);
      }
    }
    r = RationalFunction(std::move(num), std::move(den), roots_);
  }
  r.normalize_content_and_roots();
  if (is_base_variable(v) && roots_[v] > 1) {
    // d/dv = (1/k) t^(1-k) d/dt for t = v^(1/k)
    unsigned k = roots_[v];
    std::array<unsigned, 2> rr = roots_;
    RationalFunction chain(Polynomial(1), Polynomial::variable(v, k - 1) * mpz_class(k), rr);
    chain.normalize_content_and_roots();
    r.lift_roots(roots_);
    r = r * chain;
  }
  return r;
}

RationalFunction RationalFunction::diff(unsigned i, unsigned j) const {
  RationalFunction r = *this;
  for (unsigned a = 0; a < i && !r.is_zero(); ++a) r = r.diff(kX);
  for (unsigned b = 0; b < j && !r.is_zero(); ++b) r = r.diff(kY);
  return r;
}

RationalFunction RationalFunction::substitute(const std::map<SymbolId, RationalFunction>& images) const {
  std::uint32_t used = support();
  std::array<std::optional<RationalFunction>, kMaxSymbols> img;
  std::array<unsigned, 2> target = roots_;
  bool any = false;
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    auto it = images.find(v);
    if (it == images.end()) continue;
    any = true;
    img[v] = (is_base_variable(v) && roots_[v] > 1) ? it->second.pow(mpq_class(1, roots_[v])) : it->second;
    target[0] = std::lcm(target[0], img[v]->roots_[0]);
    target[1] = std::lcm(target[1], img[v]->roots_[1]);
  }
  if (!any) return *this;

  RationalFunction self = *this;
  // Variables without an image are kept; they must keep their meaning under lifted roots.
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!((used >> v) & 1u) || img[v]) continue;
    RationalFunction id(Polynomial::variable(v), Polynomial(1), roots_);
    img[v] = id;
    target[0] = std::lcm(target[0], roots_[0]);
    target[1] = std::lcm(target[1], roots_[1]);
  }
  for (auto& m : img)
    if (m) m->lift_roots(target);

  std::array<unsigned, kMaxSymbols> deg{};
  for (SymbolId v = 0; v < kMaxSymbols; ++v) deg[v] = std::max(self.num_.degree(v), self.den_.degree(v));

  std::array<std::vector<Polynomial>, kMaxSymbols> num_pow, den_pow;
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!img[v]) continue;
    num_pow[v].push_back(Polynomial(1));
    den_pow[v].push_back(Polynomial(1));
    for (unsigned k = 1; k <= deg[v]; ++k) {
      num_pow[v].push_back(num_pow[v].back() * img[v]->num_);
      den_pow[v].push_back(den_pow[v].back() * img[v]->den_);
    }
  }
  auto expand = [&](const Polynomial& poly) {
    Polynomial acc;
    std::vector<Term> constant_terms;
    for (const auto& t : poly.terms()) {
      Polynomial term(t.coeff);
      for (SymbolId v = 0; v < kMaxSymbols; ++v) {
        if (!img[v]) continue;
        unsigned e = t.mono.exp[v];
        if (e) term = term * num_pow[v][e];
        if (deg[v] - e) term = term * den_pow[v][deg[v] - e];
      }
      acc += term;
    }
    return acc;
  };
  RationalFunction r(expand(self.num_), expand(self.den_), target);
  if (r.den_.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  r.canonicalize();
  return r;
}

std::optional<mpq_class> RationalFunction::evaluate_roots(std::span<const mpq_class, kMaxSymbols> values) const {
  auto eval = [&](const Polynomial& p) {
    std::array<std::vector<mpq_class>, kMaxSymbols> powers;
    mpq_class acc = 0;
    for (const auto& t : p.terms()) {
      mpq_class term(t.coeff);
      for (SymbolId v = 0; v < kMaxSymbols; ++v) {
        unsigned e = t.mono.exp[v];
        if (!e) continue;
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(mpq_class(1));
        while (pw.size() <= e) pw.push_back(pw.back() * values[v]);
        term *= pw[e];
      }
      acc += term;
    }
    return acc;
  };
  mpq_class d = eval(den_);
  if (d == 0) return std::nullopt;
  mpq_class r = eval(num_) / d;
  r.canonicalize();
  return r;
}

std::optional<double> RationalFunction::evaluate(std::span<const double, kMaxSymbols> values) const {
  std::array<mpq_class, kMaxSymbols> vv;
  std::uint32_t used = support();
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    double val = values[v];
    if (!std::isfinite(val)) return std::nullopt;
    unsigned k = root(v);
    if (k > 1) {
      if (val < 0) return std::nullopt;
      val = std::pow(val, 1.0 / k);
    }
    vv[v] = mpq_class(val);
  }
  auto r = evaluate_roots(vv);
  if (!r) return std::nullopt;
  return r->get_d();
}

std::optional<std::complex<double>> RationalFunction::evaluate(
    std::span<const std::complex<double>, kMaxSymbols> values, RootBranch branch) const {
  std::array<std::complex<double>, kMaxSymbols> vv{};
  std::uint32_t used = support();
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    unsigned k = root(v);
    vv[v] = k > 1 ? branch_pow(values[v], mpq_class(1, k), branch) : values[v];
  }
  auto eval = [&](const Polynomial& p) {
    std::complex<double> acc = 0;
    for (const auto& t : p.terms()) {
      std::complex<double> term = t.coeff.get_d();
      for (SymbolId v = 0; v < kMaxSymbols; ++v) {
        unsigned e = t.mono.exp[v];
        if (e) term *= std::pow(vv[v], int(e));
      }
      acc += term;
    }
    return acc;
  };
  std::complex<double> d = eval(den_);
  if (d == std::complex<double>(0.0, 0.0)) return std::nullopt;
  return eval(num_) / d;
}

std::vector<RationalFunction> RationalFunction::coefficients_in(SymbolId s) const {
  if (is_base_variable(s)) throw std::invalid_argument("coefficients_in: base variable");
  if (den_.depends_on(s)) throw NotRepresentable("denominator depends on '" + SymbolTable::name(s) + "'");
  std::vector<RationalFunction> out;
  for (auto& c : num_.coefficients(s)) {
    RationalFunction r(std::move(c), den_, roots_);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

std::string RationalFunction::debug_string() const {
  std::ostringstream os;
  os << "(" << num_.debug_string() << ")/(" << den_.debug_string() << ")";
  if (roots_[0] != 1 || roots_[1] != 1) os << " [x^(1/" << roots_[0] << "), y^(1/" << roots_[1] << ")]";
  return os.str();
}

}  // namespace painleve::expr
