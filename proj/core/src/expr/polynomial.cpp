#include "painleve/expr/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace painleve::expr {

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned s = unsigned(exp[i]) + other.exp[i];
    if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.exp[i] = other.exp[i] - exp[i];
  return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial basics

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

mpz_class isqrt(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(SymbolId v, unsigned power) {
  Monomial m;
  m.exp[v] = static_cast<std::uint16_t>(power);
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().mono.is_one() ? terms_.back().coeff : mpz_class(0);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[j];
    if (a.mono > b.mono) {
      r.terms_.push_back(a);
      ++i;
    } else if (b.mono > a.mono) {
      r.terms_.push_back(b);
      ++j;
    } else {
      mpz_class s = a.coeff + b.coeff;
      if (s != 0) r.terms_.push_back({a.mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].mono) * o.terms_[0].coeff;
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].mono) * terms_[0].coeff;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(std::move(prod));
}

Polynomial Polynomial::operator*(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::div_exact(const mpz_class& c) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

Polynomial Polynomial::div_monomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = m.quotient_of(t.mono);
  return r;
}

std::optional<Polynomial> Polynomial::divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Polynomial{};
  if (divisor.terms_.size() == 1) {
    const auto& d = divisor.terms_[0];
    Polynomial q = *this;
    for (auto& t : q.terms_) {
      if (!d.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t()))
        return std::nullopt;
      t.mono = d.mono.quotient_of(t.mono);
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.coeff.get_mpz_t());
    }
    return q;
  }
  // Cheap necessary conditions before long division.
  for (SymbolId v = 0; v < kMaxSymbols; ++v)
    if (divisor.degree(v) > degree(v)) return std::nullopt;
  if (!divisor.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;

  const Term& lead = divisor.terms_.front();
  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Monomial qm = lead.mono.quotient_of(it->first);
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto& dt = divisor.terms_[k];
      Monomial m = dt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m);
      pos->second -= qc * dt.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

Polynomial Polynomial::derivative(SymbolId v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.exp[v] == 0) continue;
    Term d = t;
    d.coeff *= t.mono.exp[v];
    d.mono.exp[v] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

unsigned Polynomial::degree(SymbolId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[v]);
  return d;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (t.mono.exp[i]) mask |= 1u << i;
  return mask;
}

Polynomial Polynomial::evaluate(SymbolId v, const mpz_class& value) const {
  unsigned d = degree(v);
  if (d == 0) return *this;
  std::vector<mpz_class> powers(d + 1);
  powers[0] = 1;
  for (unsigned k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r{t.mono, t.coeff * powers[t.mono.exp[v]]};
    r.mono.exp[v] = 0;
    out.push_back(std::move(r));
  }
  return from_terms(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients(SymbolId v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term r = t;
    r.mono.exp[v] = 0;
    buckets[t.mono.exp[v]].push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial p;
    p.terms_ = std::move(b);  // relative order preserved since v's exponent is constant per bucket
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial Polynomial::from_coefficients(SymbolId v, std::span<const Polynomial> coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) {
      Term r = t;
      r.mono.exp[v] = static_cast<std::uint16_t>(r.mono.exp[v] + k);
      out.push_back(std::move(r));
    }
  return from_terms(std::move(out));
}

Polynomial Polynomial::inflate(SymbolId v, unsigned factor) const {
  if (factor == 1) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    unsigned e = unsigned(t.mono.exp[v]) * factor;
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    t.mono.exp[v] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Polynomial Polynomial::deflate(SymbolId v, unsigned factor) const {
  if (factor == 1) return *this;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono.exp[v] = static_cast<std::uint16_t>(t.mono.exp[v] / factor);
  return r;
}

unsigned Polynomial::exponent_gcd(SymbolId v) const {
  unsigned g = 0;
  for (const auto& t : terms_) g = std::gcd(g, unsigned(t.mono.exp[v]));
  return g;
}

mpz_class Polynomial::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (terms_.front().coeff < 0) g = -g;
  return g;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return {};
  mpz_class c = content();
  if (c == 1) return *this;
  return div_exact(c);
}

mpz_class Polynomial::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_) {
    mpz_class a = abs(t.coeff);
    if (a > m) m = a;
  }
  return m;
}

Monomial Polynomial::monomial_gcd() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

std::string Polynomial::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    first = false;
    mpz_class a = abs(t.coeff);
    bool printed = false;
    if (a != 1 || t.mono.is_one()) {
      os << a.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (!t.mono.exp[i]) continue;
      if (printed) os << "*";
      os << SymbolTable::name(static_cast<SymbolId>(i));
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
      printed = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Polynomial positive_lead(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

SymbolId main_variable(std::uint32_t mask) {
  SymbolId v = 0;
  for (SymbolId i = 0; i < kMaxSymbols; ++i)
    if ((mask >> i) & 1u) v = i;
  return v;
}

// Symmetric-residue expansion of h in powers of xi, reassembled as a polynomial in v.
Polynomial interpolate(Polynomial h, const mpz_class& xi, SymbolId v) {
  std::vector<Polynomial> digits;
  mpz_class half = xi / 2;
  while (!h.is_zero()) {
    std::vector<Term> g;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) g.push_back({t.mono, r});
    }
    Polynomial gp = Polynomial::from_terms(std::move(g));
    h = (h - gp).div_exact(xi);
    digits.push_back(std::move(gp));
  }
  return positive_lead(Polynomial::from_coefficients(v, digits));
}

struct HeuResult {
  Polynomial h, cff, cfg;
};

constexpr int kHeuristicAttempts = 6;

std::optional<HeuResult> heu(const Polynomial& f0, const Polynomial& g0) {
  if (f0.is_constant() && g0.is_constant()) {
    mpz_class a = f0.constant_value(), b = g0.constant_value();
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (h == 0) return std::nullopt;
    return HeuResult{Polynomial(h), Polynomial(mpz_class(a / h)), Polynomial(mpz_class(b / h))};
  }
  mpz_class gc;
  {
    mpz_class cf = abs(f0.content()), cg = abs(g0.content());
    mpz_gcd(gc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  }
  Polynomial f = f0.div_exact(gc), g = g0.div_exact(gc);
  SymbolId v = main_variable(f.support() | g.support());

  mpz_class fn = f.max_norm(), gn = g.max_norm();
  mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class xi = std::min(b, mpz_class(99 * isqrt(b)));
  mpz_class alt = 2 * std::min(mpz_class(fn / abs(f.leading().coeff)), mpz_class(gn / abs(g.leading().coeff))) + 4;
  if (alt > xi) xi = alt;

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    Polynomial ff = f.evaluate(v, xi), gg = g.evaluate(v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto r = heu(ff, gg);
      if (!r) return std::nullopt;
      Polynomial h = interpolate(r->h, xi, v).primitive();
      if (auto cff = f.divide(h)) {
        if (auto cfg = g.divide(h)) return HeuResult{h * gc, std::move(*cff), std::move(*cfg)};
      }
      Polynomial cff = interpolate(r->cff, xi, v);
      if (!cff.is_zero()) {
        if (auto h2 = f.divide(cff)) {
          if (auto cfg = g.divide(*h2)) return HeuResult{*h2 * gc, std::move(cff), std::move(*cfg)};
        }
      }
      Polynomial cfg = interpolate(r->cfg, xi, v);
      if (!cfg.is_zero()) {
        if (auto h3 = g.divide(cfg)) {
          if (auto cff2 = f.divide(*h3)) return HeuResult{*h3 * gc, std::move(*cff2), std::move(cfg)};
        }
      }
    }
    xi = 73794 * xi * isqrt(isqrt(xi)) / 27011;
  }
  return std::nullopt;
}

Polynomial content_in(const Polynomial& f, SymbolId v) {
  Polynomial g;
  for (const auto& c : f.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd_prs(g, c);
    if (g.is_constant() && abs(g.constant_value()) == 1) break;
  }
  return g;
}

Polynomial leading_in(const Polynomial& f, SymbolId v) { return f.coefficients(v).back(); }

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, SymbolId v) {
  unsigned db = b.degree(v);
  Polynomial lb = leading_in(b, v);
  Polynomial r = a;
  int e = int(a.degree(v)) - int(db) + 1;
  while (!r.is_zero() && r.degree(v) >= db && r.depends_on(v)) {
    unsigned dr = r.degree(v);
    Polynomial lr = leading_in(r, v);
    r = r * lb - lr * b * Polynomial::variable(v, dr - db);
    --e;
  }
  if (e > 0) r = r * lb.pow(unsigned(e));
  return r;
}

}  // namespace

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class ca = abs(a.content()), cb = abs(b.content()), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(g);
  }
  SymbolId v = main_variable(a.support() | b.support());
  if (!a.depends_on(v)) return gcd_prs(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd_prs(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial pa = *a.divide(ca), pb = *b.divide(cb);
  Polynomial d = gcd_prs(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = *r.divide(content_in(r, v));
  }
  pb = *pb.divide(content_in(pb, v));
  return positive_lead(d * pb);
}

std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return positive_lead(a.is_zero() ? b : a);
  auto r = heu(a, b);
  if (!r) return std::nullopt;
  return positive_lead(r->h);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Monomial ma = a.monomial_gcd(), mb = b.monomial_gcd();
  Monomial m = Monomial::min(ma, mb);
  Polynomial a1 = a.div_monomial(ma), b1 = b.div_monomial(mb);
  mpz_class ca = abs(a1.content()), cb = abs(b1.content()), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a1 = a1.primitive();
  b1 = b1.primitive();

  Polynomial core(1);
  if (a1.is_constant() || b1.is_constant() || (a1.support() & b1.support()) == 0) {
    // constant core
  } else if (a1 == b1) {
    core = a1;
  } else if (auto q = a1.divide(b1)) {
    core = b1;
  } else if (auto q2 = b1.divide(a1)) {
    core = a1;
  } else if (auto h = gcd_heuristic(a1, b1)) {
    core = *h;
  } else {
    core = gcd_prs(a1, b1);
  }
  return positive_lead(Polynomial::monomial(m, c) * core);
}

}  // namespace painleve::expr
