#include "painleve/expr/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace painleve::expr {

struct Expr::Node {
  Kind kind = Kind::Constant;
  mpq_class value;  // constant value, or exponent of a Power
  SymbolId sym = 0;
  std::vector<Expr> children;
};

namespace {

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

std::optional<mpq_class> exact_rational_power(const mpq_class& base, const mpq_class& e) {
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_uint_p()) return std::nullopt;
  unsigned q = static_cast<unsigned>(e.get_den().get_ui());
  long p = e.get_num().get_si();
  if (base == 0) {
    if (p < 0) return std::nullopt;
    return mpq_class(0);
  }
  if (q > 1 && base < 0) return std::nullopt;  // keep real-domain semantics explicit
  mpz_class num = base.get_num(), den = base.get_den(), rn, rd;
  if (q > 1) {
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), q)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), q)) return std::nullopt;
  } else {
    rn = num;
    rd = den;
  }
  unsigned ap = static_cast<unsigned>(std::labs(p));
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), rn.get_mpz_t(), ap);
  mpz_pow_ui(pd.get_mpz_t(), rd.get_mpz_t(), ap);
  mpq_class r = p >= 0 ? mpq_class(pn, pd) : mpq_class(pd, pn);
  r.canonicalize();
  return r;
}

}  // namespace

Expr::Expr() {
  static const std::shared_ptr<const Node> zero = [] {
    auto p = std::make_shared<Node>();
    p->value = 0;
    return std::shared_ptr<const Node>(std::move(p));
  }();
  node_ = zero;
}

Expr::Expr(long c) : Expr(mpq_class(c)) {}

Expr::Expr(const mpq_class& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = c;
  n->value.canonicalize();
  node_ = std::move(n);
}

Expr Expr::symbol(SymbolId id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->sym = id;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const mpq_class& Expr::value() const { return node_->value; }
SymbolId Expr::symbol_id() const { return node_->sym; }
std::span<const Expr> Expr::children() const { return node_->children; }
const Expr& Expr::base() const { return node_->children.front(); }
const mpq_class& Expr::exponent() const { return node_->value; }

bool Expr::is_constant(const mpq_class& c) const { return kind() == Kind::Constant && value() == c; }

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  mpq_class constant = 0;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.children()) {
        if (c.kind() == Kind::Constant) constant += c.value();
        else flat.push_back(c);
      }
    } else if (t.kind() == Kind::Constant) {
      constant += t.value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (constant != 0) flat.emplace_back(constant);
  if (flat.empty()) return Expr();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  mpq_class constant = 1;
  auto absorb = [&](const Expr& f, auto& self) -> void {
    switch (f.kind()) {
      case Kind::Constant:
        constant *= f.value();
        break;
      case Kind::Product:
        for (const auto& c : f.children()) self(c, self);
        break;
      case Kind::Negation:
        constant = -constant;
        self(f.base(), self);
        break;
      default:
        flat.push_back(f);
    }
  };
  for (const auto& f : factors) absorb(f, absorb);
  if (constant == 0) return Expr();
  if (flat.empty()) return Expr(constant);
  if (constant == 1 && flat.size() == 1) return flat.front();
  if (constant != 1) flat.insert(flat.begin(), Expr(constant));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::power(Expr base, const mpq_class& exponent) {
  mpq_class e = exponent;
  e.canonicalize();
  if (e == 0) return Expr(1);
  if (e == 1) return base;
  if (base.kind() == Kind::Constant) {
    if (auto r = exact_rational_power(base.value(), e)) return Expr(*r);
  }
  if (base.kind() == Kind::Power && is_integer(e)) {
    return power(base.base(), base.exponent() * e);
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->value = e;
  n->children.push_back(std::move(base));
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::negate(Expr inner) {
  switch (inner.kind()) {
    case Kind::Constant:
      return Expr(mpq_class(-inner.value()));
    case Kind::Negation:
      return inner.base();
    case Kind::Product:
      return product({Expr(-1), inner});
    default:
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negation;
  n->children.push_back(std::move(inner));
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

bool Expr::structurally_equal(const Expr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Constant:
      return value() == o.value();
    case Kind::Symbol:
      return symbol_id() == o.symbol_id();
    case Kind::Power:
      if (exponent() != o.exponent()) return false;
      [[fallthrough]];
    default:
      break;
  }
  if (node_->children.size() != o.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i)
    if (!node_->children[i].structurally_equal(o.node_->children[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// printing

namespace {

enum Prec { kSum = 1, kUnary = 2, kProd = 3, kPow = 4, kAtom = 5 };

struct Printed {
  std::string text;
  int prec;
};

Printed print(const Expr& e);

std::string wrap(const Printed& p, int min_prec) {
  if (p.prec < min_prec) return "(" + p.text + ")";
  return p.text;
}

std::string exponent_text(const mpq_class& e) {
  if (is_integer(e) && e > 0) return e.get_str();
  return "(" + e.get_num().get_str() + (is_integer(e) ? "" : "/" + e.get_den().get_str()) + ")";
}

// True when the expression prints with a leading minus that a sum can turn into subtraction.
bool is_negative(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e.value() < 0;
    case Expr::Kind::Negation:
      return true;
    case Expr::Kind::Product:
      return e.children().front().kind() == Expr::Kind::Constant && e.children().front().value() < 0;
    default:
      return false;
  }
}

Expr flip_sign(const Expr& e) { return Expr::negate(e); }

Printed print_product(std::span<const Expr> factors) {
  mpq_class c = 1;
  std::vector<Expr> num, den;
  for (const auto& f : factors) {
    if (f.kind() == Expr::Kind::Constant) {
      c *= f.value();
    } else if (f.kind() == Expr::Kind::Power && f.exponent() < 0) {
      den.push_back(Expr::power(f.base(), -f.exponent()));
    } else {
      num.push_back(f);
    }
  }
  bool negative = c < 0;
  mpz_class cn = abs(c.get_num()), cd = c.get_den();
  std::vector<std::string> num_parts, den_parts;
  if (cn != 1 || num.empty()) num_parts.push_back(cn.get_str());
  for (const auto& f : num) num_parts.push_back(wrap(print(f), kPow));
  if (cd != 1) den_parts.push_back(cd.get_str());
  for (const auto& f : den) den_parts.push_back(wrap(print(f), kPow));

  std::string text;
  for (std::size_t i = 0; i < num_parts.size(); ++i) text += (i ? "*" : "") + num_parts[i];
  if (!den_parts.empty()) {
    std::string d;
    for (std::size_t i = 0; i < den_parts.size(); ++i) d += (i ? "*" : "") + den_parts[i];
    text += "/" + (den_parts.size() > 1 ? "(" + d + ")" : d);
  }
  int prec = (num_parts.size() > 1 || !den_parts.empty()) ? kProd : kPow;
  if (num_parts.size() == 1 && den_parts.empty() && num.size() == 1) prec = print(num.front()).prec;
  if (negative) return {"-" + (prec < kProd ? "(" + text + ")" : text), kUnary};
  return {text, prec};
}

Printed print(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant: {
      const mpq_class& v = e.value();
      if (is_integer(v)) return {v.get_str(), v < 0 ? kUnary : kAtom};
      return print_product(std::span<const Expr>(&e, 1));
    }
    case Expr::Kind::Symbol:
      return {SymbolTable::name(e.symbol_id()), kAtom};
    case Expr::Kind::Sum: {
      std::string text;
      bool first = true;
      for (const auto& t : e.children()) {
        if (first) {
          text = wrap(print(t), kUnary);
        } else if (is_negative(t)) {
          text += " - " + wrap(print(flip_sign(t)), kUnary + 1);
        } else {
          text += " + " + wrap(print(t), kUnary);
        }
        first = false;
      }
      return {text, kSum};
    }
    case Expr::Kind::Product:
      return print_product(e.children());
    case Expr::Kind::Power: {
      if (e.exponent() < 0) return print_product(std::span<const Expr>(&e, 1));
      Printed b = print(e.base());
      std::string bt = (b.prec == kAtom && !(e.base().kind() == Expr::Kind::Constant && e.base().value() < 0))
                           ? b.text
                           : "(" + b.text + ")";
      return {bt + "^" + exponent_text(e.exponent()), kPow};
    }
    case Expr::Kind::Negation:
      return {"-" + wrap(print(e.base()), kProd), kUnary};
  }
  return {"?", kAtom};
}

}  // namespace

std::string Expr::to_string() const { return print(*this).text; }

// ---------------------------------------------------------------------------
// parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Expr term() {
    Expr acc = unary();
    while (true) {
      if (accept('*')) acc = acc * unary();
      else if (accept('/')) acc = acc / unary();
      else return acc;
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return pow();
  }

  Expr pow() {
    Expr base = atom();
    if (accept('^')) return Expr::power(base, exponent());
    return base;
  }

  mpz_class integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    mpz_class v(std::string(s_.substr(start, pos_ - start)));
    return neg ? mpz_class(-v) : v;
  }

  mpq_class exponent() {
    skip();
    if (accept('(')) {
      mpz_class num = integer(true);
      mpz_class den = 1;
      if (accept('/')) den = integer(false);
      if (den == 0) fail("zero denominator in exponent");
      expect(')');
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("symbolic exponents are not supported");
    return mpq_class(integer(true));
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Expr::symbol(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string whole(s_.substr(start, pos_ - start));
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      frac = std::string(s_.substr(fs, pos_ - fs));
    }
    if (whole.empty() && frac.empty()) fail("malformed number");
    mpz_class n(whole.empty() ? std::string("0") : whole);
    mpz_class scale = 1;
    for (char d : frac) {
      n = n * 10 + (d - '0');
      scale *= 10;
    }
    mpq_class q(n, scale);
    q.canonicalize();
    return Expr(q);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// structural operations

std::uint32_t symbols_of(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return 0;
    case Expr::Kind::Symbol:
      return 1u << e.symbol_id();
    case Expr::Kind::Power:
    case Expr::Kind::Negation:
      return symbols_of(e.base());
    default: {
      std::uint32_t m = 0;
      for (const auto& c : e.children()) m |= symbols_of(c);
      return m;
    }
  }
}

Expr diff(const Expr& e, SymbolId v) {
  if (!((symbols_of(e) >> v) & 1u)) return Expr();
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return Expr();
    case Expr::Kind::Symbol:
      return Expr(e.symbol_id() == v ? 1 : 0);
    case Expr::Kind::Sum: {
      std::vector<Expr> parts;
      for (const auto& c : e.children()) parts.push_back(diff(c, v));
      return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Product: {
      auto ch = e.children();
      std::vector<Expr> parts;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        Expr di = diff(ch[i], v);
        if (di.is_constant(0)) continue;
        std::vector<Expr> f(ch.begin(), ch.end());
        f[i] = di;
        parts.push_back(Expr::product(std::move(f)));
      }
      return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Power: {
      const mpq_class& r = e.exponent();
      return Expr::product({Expr(r), Expr::power(e.base(), r - 1), diff(e.base(), v)});
    }
    case Expr::Kind::Negation:
      return -diff(e.base(), v);
  }
  return Expr();
}

Expr diff(const Expr& e, unsigned i, unsigned j) {
  Expr r = e;
  for (unsigned a = 0; a < i; ++a) r = diff(r, kX);
  for (unsigned b = 0; b < j; ++b) r = diff(r, kY);
  return r;
}

Expr subst(const Expr& e, const std::map<SymbolId, Expr>& bindings) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Symbol: {
      auto it = bindings.find(e.symbol_id());
      return it == bindings.end() ? e : it->second;
    }
    case Expr::Kind::Sum: {
      std::vector<Expr> parts;
      for (const auto& c : e.children()) parts.push_back(subst(c, bindings));
      return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Product: {
      std::vector<Expr> parts;
      for (const auto& c : e.children()) parts.push_back(subst(c, bindings));
      return Expr::product(std::move(parts));
    }
    case Expr::Kind::Power:
      return Expr::power(subst(e.base(), bindings), e.exponent());
    case Expr::Kind::Negation:
      return -subst(e.base(), bindings);
  }
  return e;
}

// ---------------------------------------------------------------------------
// normal form

RationalFunction to_rational_function(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return RationalFunction(e.value());
    case Expr::Kind::Symbol:
      return RationalFunction::symbol(e.symbol_id());
    case Expr::Kind::Sum: {
      RationalFunction acc;
      for (const auto& c : e.children()) acc += to_rational_function(c);
      return acc;
    }
    case Expr::Kind::Product: {
      RationalFunction acc(1);
      for (const auto& c : e.children()) acc *= to_rational_function(c);
      return acc;
    }
    case Expr::Kind::Power:
      return to_rational_function(e.base()).pow(e.exponent());
    case Expr::Kind::Negation:
      return -to_rational_function(e.base());
  }
  return {};
}

namespace {

// Printing order: x, y, then the remaining symbols by name.
std::vector<SymbolId> print_order(std::uint32_t mask) {
  std::vector<SymbolId> ids;
  for (SymbolId v = 0; v < kMaxSymbols; ++v)
    if ((mask >> v) & 1u) ids.push_back(v);
  std::sort(ids.begin(), ids.end(), [](SymbolId a, SymbolId b) {
    bool ba = is_base_variable(a), bb = is_base_variable(b);
    if (ba != bb) return ba;
    if (ba) return a < b;
    return SymbolTable::name(a) < SymbolTable::name(b);
  });
  return ids;
}

Expr polynomial_to_expr(const Polynomial& p, const RationalFunction& owner) {
  if (p.is_zero()) return Expr();
  auto order = print_order(p.support());
  std::vector<const Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term* a, const Term* b) {
    for (SymbolId v : order) {
      if (a->mono.exp[v] != b->mono.exp[v]) return a->mono.exp[v] > b->mono.exp[v];
    }
    return false;
  });
  std::vector<Expr> parts;
  for (const Term* t : terms) {
    std::vector<Expr> f{Expr(mpq_class(t->coeff))};
    for (SymbolId v : order) {
      unsigned e = t->mono.exp[v];
      if (!e) continue;
      f.push_back(Expr::power(Expr::symbol(v), mpq_class(e, owner.root(v))));
    }
    parts.push_back(Expr::product(std::move(f)));
  }
  return Expr::sum(std::move(parts));
}

}  // namespace

Expr to_expr(const RationalFunction& f) {
  Expr num = polynomial_to_expr(f.numerator(), f);
  if (f.denominator().is_constant()) {
    mpz_class d = f.denominator().constant_value();
    if (d == 1) return num;
    if (f.numerator().is_monomial()) return Expr::product({Expr(mpq_class(1, d)), num});
    return Expr::product({num, Expr::power(Expr(mpq_class(d)), -1)});
  }
  Expr den = polynomial_to_expr(f.denominator(), f);
  return Expr::product({num, Expr::power(den, -1)});
}

Expr normalize(const Expr& e) { return to_expr(to_rational_function(e)); }

// ---------------------------------------------------------------------------
// evaluation

EvalResult eval(const Expr& e, const Assignment& a) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return {EvalStatus::Ok, e.value().get_d()};
    case Expr::Kind::Symbol:
      if (!a.has(e.symbol_id()))
        throw UnassignedSymbol("no value for symbol '" + SymbolTable::name(e.symbol_id()) + "'");
      return {EvalStatus::Ok, a.values[e.symbol_id()]};
    case Expr::Kind::Sum: {
      double acc = 0;
      for (const auto& c : e.children()) {
        auto r = eval(c, a);
        if (!r.ok()) return r;
        acc += r.value;
      }
      return {EvalStatus::Ok, acc};
    }
    case Expr::Kind::Product: {
      double acc = 1;
      EvalResult bad{EvalStatus::Ok, 0.0};
      for (const auto& c : e.children()) {
        auto r = eval(c, a);
        if (!r.ok()) {
          if (bad.ok() || r.status == EvalStatus::DomainError) bad = r;
          continue;
        }
        acc *= r.value;
      }
      if (!bad.ok()) return bad;
      return {EvalStatus::Ok, acc};
    }
    case Expr::Kind::Power: {
      auto b = eval(e.base(), a);
      if (!b.ok()) return b;
      const mpq_class& r = e.exponent();
      if (b.value == 0.0 && r < 0) return {EvalStatus::Pole, 0.0};
      if (is_integer(r)) {
        return {EvalStatus::Ok, std::pow(b.value, static_cast<double>(r.get_num().get_si()))};
      }
      if (b.value < 0) return {EvalStatus::DomainError, 0.0};
      double v = std::pow(b.value, r.get_d());
      if (!std::isfinite(v)) return {EvalStatus::Pole, 0.0};
      return {EvalStatus::Ok, v};
    }
    case Expr::Kind::Negation: {
      auto r = eval(e.base(), a);
      r.value = -r.value;
      return r;
    }
  }
  return {};
}

ComplexEvalResult eval_complex(const Expr& e, const ComplexAssignment& a, RootBranch branch) {
  using C = std::complex<double>;
  switch (e.kind()) {
    case Expr::Kind::Constant: {
      double v = e.value().get_d();
      return {EvalStatus::Ok, C(v, 0.0), std::abs(v)};
    }
    case Expr::Kind::Symbol:
      if (!a.has(e.symbol_id()))
        throw UnassignedSymbol("no value for symbol '" + SymbolTable::name(e.symbol_id()) + "'");
      return {EvalStatus::Ok, a.values[e.symbol_id()], std::abs(a.values[e.symbol_id()])};
    case Expr::Kind::Sum: {
      ComplexEvalResult acc{EvalStatus::Ok, C(0.0, 0.0), 0.0};
      for (const auto& c : e.children()) {
        auto r = eval_complex(c, a, branch);
        if (!r.ok()) return r;
        acc.value += r.value;
        acc.scale += r.scale;
      }
      return acc;
    }
    case Expr::Kind::Product: {
      ComplexEvalResult acc{EvalStatus::Ok, C(1.0, 0.0), 1.0};
      for (const auto& c : e.children()) {
        auto r = eval_complex(c, a, branch);
        if (!r.ok()) return r;
        acc.value *= r.value;
        acc.scale *= r.scale;
      }
      return acc;
    }
    case Expr::Kind::Power: {
      auto b = eval_complex(e.base(), a, branch);
      if (!b.ok()) return b;
      const mpq_class& r = e.exponent();
      C z = b.value;
      if (z.imag() == 0.0) z = C(z.real(), 0.0);
      if (z == C(0.0, 0.0)) {
        if (r < 0) return {EvalStatus::Pole, C(0.0, 0.0), 0.0};
        return {EvalStatus::Ok, C(0.0, 0.0), std::pow(b.scale, r.get_d())};
      }
      C v = branch_pow(z, r, branch);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {EvalStatus::Pole, C(0.0, 0.0), 0.0};
      // The modulus of a negative power measures the value itself, not a sum of parts.
      double scale = r > 0 ? std::pow(b.scale, r.get_d()) : std::abs(v);
      return {EvalStatus::Ok, v, scale};
    }
    case Expr::Kind::Negation: {
      auto r = eval_complex(e.base(), a, branch);
      r.value = -r.value;
      return r;
    }
  }
  return {};
}

}  // namespace painleve::expr
