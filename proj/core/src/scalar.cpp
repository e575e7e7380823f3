#include "tlk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "tlk/errors.hpp"

namespace tlk {

namespace mono {

bool divides(Monomial a, Monomial b) {
  for (int v = 0; v < kNumVars; ++v)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}

Monomial lcm(Monomial a, Monomial b) {
  std::array<unsigned, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v) e[v] = std::max(exponent(a, v), exponent(b, v));
  return make(e);
}

Monomial gcd(Monomial a, Monomial b) {
  std::array<unsigned, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v) e[v] = std::min(exponent(a, v), exponent(b, v));
  return make(e);
}

}  // namespace mono

// ---------------------------------------------------------------------------
// Poly

Poly from_sorted_terms(std::vector<Term> t) {
  Poly p;
  p.terms_ = std::move(t);
  return p;
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.push_back({0, c});
}

Poly Poly::monomial(Monomial m, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

mpq_class Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().mono == 0 ? terms_.back().coef : mpq_class(0);
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, mono::exponent(t.mono, static_cast<int>(v)));
  return d;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return 0;
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = mono::gcd(g, t.mono);
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, bool subtract) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back({y[j].mono, subtract ? mpq_class(-y[j].coef) : y[j].coef});
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(x[i].coef - y[j].coef) : mpq_class(x[i].coef + y[j].coef);
      if (c != 0) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.terms_.empty() || y.terms_.empty()) return Poly();
  if (x.terms_.size() == 1) return y.times_monomial(x.terms_[0].mono).scaled(x.terms_[0].coef);
  if (y.terms_.size() == 1) return x.times_monomial(y.terms_[0].mono).scaled(y.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) prod.push_back({s.mono + t.mono, s.coef * t.coef});
  std::sort(prod.begin(), prod.end(), [](const Term& l, const Term& r) { return l.mono > r.mono; });
  std::vector<Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return from_sorted_terms(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly();
  if (c == 1) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Poly Poly::times_monomial(Monomial m) const {
  if (m == 0) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.mono += m;
  return p;
}

Poly Poly::divided_by_monomial(Monomial m) const {
  if (m == 0) return *this;
  Poly p = *this;
  for (auto& t : p.terms_) t.mono -= m;
  return p;
}

bool operator==(const Poly& x, const Poly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i)
    if (x.terms_[i].mono != y.terms_[i].mono || x.terms_[i].coef != y.terms_[i].coef) return false;
  return true;
}

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
  if (mpz_size(z.get_mpz_t()) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * 0x9E3779B97F4A7C15ull;
  return h ^ (mpz_sgn(z.get_mpz_t()) < 0 ? 0x5bd1e995u : 0u);
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2);
}

}  // namespace

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    hash_combine(h, std::hash<std::uint64_t>{}(t.mono));
    hash_combine(h, hash_mpz(t.coef.get_num()));
    hash_combine(h, hash_mpz(t.coef.get_den()));
  }
  return h;
}

namespace {

const char* kVarNames[kNumVars] = {"b", "d", "ď", "f"};

std::string monomial_string(Monomial m) {
  std::string s;
  for (int v = 0; v < kNumVars; ++v) {
    unsigned e = mono::exponent(m, v);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[v];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string m = monomial_string(t.mono);
    if (m.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += m;
    } else {
      out += c.get_str() + "*" + m;
    }
  }
  return out;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  const int vi = static_cast<int>(v);
  std::vector<Poly> out(degree(v) + 1);
  // Terms arrive in decreasing lex order, but removing v can break the order
  // within each bucket when v is not the leading variable; collect then sort.
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : terms_) {
    unsigned e = mono::exponent(t.mono, vi);
    buckets[e].push_back({t.mono - (Monomial(e) << mono::kShift[vi]), t.coef});
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::sort(buckets[k].begin(), buckets[k].end(), [](const Term& l, const Term& r) { return l.mono > r.mono; });
    out[k] = from_sorted_terms(std::move(buckets[k]));
  }
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, Var v) {
  Poly out;
  const int vi = static_cast<int>(v);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out += coeffs[k].times_monomial(Monomial(k) << mono::kShift[vi]);
  return out;
}

std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (dividend.is_zero()) return Poly();
  if (divisor.is_monomial()) {
    const Term& lt = divisor.leading();
    for (const auto& t : dividend.terms())
      if (!mono::divides(lt.mono, t.mono)) return std::nullopt;
    return dividend.divided_by_monomial(lt.mono).scaled(1 / lt.coef);
  }
  const Term lt = divisor.leading();
  const mpq_class inv = 1 / lt.coef;
  Poly rem = dividend;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!mono::divides(lt.mono, r.mono)) return std::nullopt;
    Term q{r.mono - lt.mono, r.coef * inv};
    rem -= divisor.times_monomial(q.mono).scaled(q.coef);
    quot.push_back(std::move(q));
  }
  return from_sorted_terms(std::move(quot));
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading().coef);
}

Poly exact(const Poly& x, const Poly& y) {
  auto q = divide_exact(x, y);
  if (!q) throw Error("internal: inexact polynomial division");
  return *std::move(q);
}

int main_variable(const Poly& x, const Poly& y) {
  for (int v = 0; v < kNumVars; ++v)
    if (x.degree(static_cast<Var>(v)) > 0 || y.degree(static_cast<Var>(v)) > 0) return v;
  return -1;
}

Poly gcd_impl(const Poly& x, const Poly& y);

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly pseudo_remainder(const Poly& x, const Poly& y, Var v) {
  std::vector<Poly> r = x.coefficients_in(v);
  const std::vector<Poly> b = y.coefficients_in(v);
  const std::size_t db = b.size() - 1;
  const Poly& lb = b.back();
  while (r.size() > db && !(r.size() == 1 && r[0].is_zero())) {
    const std::size_t k = r.size() - 1 - db;
    const Poly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) r[i + k] -= lr * b[i];
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    if (r.size() == 1 && db == 0) {
      r[0] = Poly();
      break;
    }
  }
  return Poly::from_coefficients(r, v);
}

// Images in F_p[v] after substituting fixed values for the other variables.
namespace modp {

constexpr std::uint64_t kP = (std::uint64_t(1) << 61) - 1;
using UPolyP = std::vector<std::uint64_t>;  // increasing degree

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(t & kP) + static_cast<std::uint64_t>(t >> 61);
  return r >= kP ? r - kP : r;
}
std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a + b >= kP ? a + b - kP : a + b; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
std::uint64_t inv(std::uint64_t a) { return pow(a, kP - 2); }

// nullopt when a coefficient denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const mpq_class& q) {
  const std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kP);
  const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kP);
  if (d == 0) return std::nullopt;
  return mul(n, inv(d));
}

std::optional<UPolyP> image(const Poly& p, int v, const std::array<std::uint64_t, kNumVars>& at) {
  UPolyP out(p.degree(static_cast<Var>(v)) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = reduce(t.coef);
    if (!c) return std::nullopt;
    std::uint64_t val = *c;
    for (int w = 0; w < kNumVars; ++w)
      if (w != v) val = mul(val, pow(at[w], mono::exponent(t.mono, w)));
    auto& slot = out[mono::exponent(t.mono, v)];
    slot = add(slot, val);
  }
  return out;
}

void trim(UPolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t gcd_degree(UPolyP a, UPolyP b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t lb = inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t q = mul(a.back(), lb);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(q, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace modp

// True when x and y certainly have no common factor of positive degree in v.
// If G divides both and lc_v(x) survives the substitution, the image of G has
// the same v-degree and divides both images.
bool coprime_in(const Poly& x, const Poly& y, int v) {
  static constexpr std::array<std::array<std::uint64_t, kNumVars>, 2> kPoints = {{
      {1000003, 2718281, 3141592, 1414213},
      {7777793, 1234577, 5555567, 9876553},
  }};
  for (const auto& at : kPoints) {
    const auto ix = modp::image(x, v, at), iy = modp::image(y, v, at);
    if (!ix || !iy) continue;
    if (ix->back() == 0 || iy->back() == 0) continue;
    return modp::gcd_degree(*ix, *iy) == 0;
  }
  return false;
}

// gcd of two nonzero polynomials, monic.
Poly gcd_impl(const Poly& x, const Poly& y) {
  if (x.is_zero()) return monic(y);
  if (y.is_zero()) return monic(x);
  const Monomial mx = x.monomial_content();
  const Monomial my = y.monomial_content();
  const Monomial g = mono::gcd(mx, my);
  Poly px = x.divided_by_monomial(mx);
  Poly py = y.divided_by_monomial(my);
  if (px.is_constant() || py.is_constant()) return Poly::monomial(g);
  const int vi = main_variable(px, py);
  const Var v = static_cast<Var>(vi);
  Poly core;
  if (py.degree(v) == 0) {
    core = gcd_impl(content_in(px, v), py);
  } else if (px.degree(v) == 0) {
    core = gcd_impl(px, content_in(py, v));
  } else {
    const Poly cx = content_in(px, v);
    const Poly cy = content_in(py, v);
    const Poly gc = gcd_impl(cx, cy);
    if (coprime_in(px, py, vi)) return monic(gc.times_monomial(g));
    Poly a = exact(px, cx);
    Poly b = exact(py, cy);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly result;
    for (;;) {
      Poly r = pseudo_remainder(a, b, v);
      if (r.is_zero()) {
        result = b;
        break;
      }
      if (r.degree(v) == 0) {
        result = Poly(1);
        break;
      }
      a = std::move(b);
      b = exact(r, content_in(r, v));
    }
    if (result.degree(v) > 0) result = exact(result, content_in(result, v));
    core = gc * result;
  }
  return monic(core.times_monomial(g));
}

}  // namespace

Poly gcd(const Poly& x, const Poly& y) {
  if (x.is_zero() && y.is_zero()) return Poly();
  return gcd_impl(x, y);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_monomial()) {
    const Term lt = den_.leading();
    const Monomial g = mono::gcd(num_.monomial_content(), lt.mono);
    num_ = num_.divided_by_monomial(g);
    if (lt.coef != 1) num_ = num_.scaled(1 / lt.coef);
    den_ = Poly::monomial(lt.mono - g);
    return;
  }
  const Monomial g = mono::gcd(num_.monomial_content(), den_.monomial_content());
  num_ = num_.divided_by_monomial(g);
  den_ = den_.divided_by_monomial(g);
  const Poly common = gcd(num_, den_);
  if (!common.is_one()) {
    num_ = exact(num_, common);
    den_ = exact(den_, common);
  }
  const mpq_class lc = den_.leading().coef;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Scalar Scalar::a() { return Scalar(Poly::variable(Var::D) + Poly::variable(Var::DCheck)); }
Scalar Scalar::b() { return Scalar(Poly::variable(Var::B)); }
Scalar Scalar::c() {
  return Scalar(-Poly::monomial(mono::unit(Var::D) + mono::unit(Var::DCheck)), Poly::variable(Var::B));
}
Scalar Scalar::d() { return Scalar(Poly::variable(Var::D)); }
Scalar Scalar::dcheck() { return Scalar(Poly::variable(Var::DCheck)); }
Scalar Scalar::f() { return Scalar(Poly::variable(Var::F)); }

mpq_class Scalar::constant_value() const {
  if (!is_constant()) throw Error("scalar is not a constant: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    const Monomial l = mono::lcm(den_.leading().mono, o.den_.leading().mono);
    num_ = num_.times_monomial(l - den_.leading().mono) + o.num_.times_monomial(l - o.den_.leading().mono);
    den_ = Poly::monomial(l);
  } else {
    const Poly g = gcd(den_, o.den_);
    const Poly d1 = exact(den_, g);
    const Poly d2 = exact(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.den_.is_one() && o.num_.is_constant()) {
    num_ = num_.scaled(o.num_.constant_value());
    return *this;
  }
  if (den_.is_monomial() && o.den_.is_monomial()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
  } else {
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    num_ = exact(num_, g1) * exact(o.num_, g2);
    den_ = exact(den_, g2) * exact(o.den_, g1);
  }
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.normalize();
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(unsigned n) const {
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::size_t Scalar::hash() const {
  std::size_t h = num_.hash();
  hash_combine(h, den_.hash());
  return h;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

Scalar evaluate(const Poly& p, const std::array<Scalar, kNumVars>& sub) {
  std::array<std::vector<Scalar>, kNumVars> powers;
  for (int v = 0; v < kNumVars; ++v) {
    powers[v].push_back(Scalar(1));
    unsigned deg = p.degree(static_cast<Var>(v));
    for (unsigned e = 1; e <= deg; ++e) powers[v].push_back(powers[v].back() * sub[v]);
  }
  Scalar total;
  for (const auto& t : p.terms()) {
    Scalar term(t.coef);
    for (int v = 0; v < kNumVars; ++v) {
      unsigned e = mono::exponent(t.mono, v);
      if (e > 0) term *= powers[v][e];
    }
    total += term;
  }
  return total;
}

}  // namespace

Scalar Scalar::specialize(const Specialization& s) const {
  if (s.empty()) return *this;
  const auto sub = s.substitution();
  Scalar num = evaluate(num_, sub);
  Scalar den = evaluate(den_, sub);
  if (den.is_zero()) throw PoleAtSpecialization(to_string() + " at " + s.to_string());
  return num / den;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Scalar parse_all() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool eat_minus() { return eat("-") || eat("−"); }
  bool eat_times() { return eat("*") || eat("·") || eat("⋅"); }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat("+")) {
        v += term();
      } else if (eat_minus()) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat_times()) {
        v *= unary();
      } else if (eat("/")) {
        Scalar r = unary();
        if (r.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
        v /= r;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat_minus()) return -unary();
    if (eat("+")) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (eat("^")) {
      bool negative = eat_minus();
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      base = base.pow(e);
      if (negative) base = base.inverse();
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (eat("(")) {
      Scalar v = expr();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (eat("ď") || eat("dcheck")) return Scalar::dcheck();
    if (eat("a")) return Scalar::a();
    if (eat("b")) return Scalar::b();
    if (eat("c")) return Scalar::c();
    if (eat("d")) return Scalar::d();
    if (eat("f")) return Scalar::f();
    fail("expected a number, a parameter or '('");
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Specialization

std::optional<mpq_class> Specialization::induced_c() const {
  if (!a || !b || !d || *b == 0) return std::nullopt;
  return mpq_class(*d * (*d - *a) / *b);
}

bool Specialization::star_compatible() const {
  return a && b && d && *a > 0 && *b > 0 && *d > *a;
}

std::array<Scalar, kNumVars> Specialization::substitution() const {
  std::array<Scalar, kNumVars> sub = {Scalar(Poly::variable(Var::B)), Scalar(Poly::variable(Var::D)),
                                      Scalar(Poly::variable(Var::DCheck)), Scalar(Poly::variable(Var::F))};
  if (b) sub[0] = Scalar(*b);
  if (d) sub[1] = Scalar(*d);
  if (a) sub[2] = Scalar(*a) - sub[1];
  if (f) sub[3] = Scalar(*f);
  return sub;
}

Specialization Specialization::parse(std::string_view text) {
  Specialization s;
  std::size_t pos = 0;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      continue;
    }
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(item) + "'");
    std::string key(trim(item.substr(0, eq)));
    std::string value(trim(item.substr(eq + 1)));
    mpq_class q;
    if (value.empty() || q.set_str(value, 10) != 0) throw ParseError("bad rational '" + value + "'");
    q.canonicalize();
    if (key == "a") {
      s.a = q;
    } else if (key == "b") {
      s.b = q;
    } else if (key == "d") {
      s.d = q;
    } else if (key == "f") {
      s.f = q;
    } else {
      throw ParseError("unknown parameter '" + key + "' (expected a, b, d or f)");
    }
  }
  return s;
}

Specialization Specialization::default_point() {
  Specialization s;
  s.a = 1;
  s.b = 1;
  s.d = 2;
  return s;
}

std::string Specialization::to_string() const {
  std::string out;
  auto add = [&](const char* k, const std::optional<mpq_class>& v) {
    if (!v) return;
    if (!out.empty()) out += ",";
    out += std::string(k) + "=" + v->get_str();
  };
  add("a", a);
  add("b", b);
  add("d", d);
  add("f", f);
  return out;
}

}  // namespace tlk
