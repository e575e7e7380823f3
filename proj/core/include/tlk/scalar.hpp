#pragma once

// Exact coefficient field for the Lawrence-Krammer constructions.
//
// The field is Q(a, b, d, f) subject to d^2 - a d - b c = 0 with c eliminated.
// Internally it is presented as Q(b, d, ď, f) with ď := a - d, so that
//
//     a = d + ď,    c = -d ď / b,
//
// and the defining relation holds identically. Every value the representation
// theory produces is then a Laurent polynomial in b, d, ď with polynomial
// dependence on f, which keeps normalization on the monomial fast path. A
// general multivariate gcd backs the rare non-monomial denominators.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlk {

enum class Var : int { B = 0, D = 1, DCheck = 2, F = 3 };
inline constexpr int kNumVars = 4;

// Exponent vector packed into 16-bit lanes; b occupies the most significant
// lane, so comparing packed keys as integers is lex order b > d > ď > f.
using Monomial = std::uint64_t;

namespace mono {
inline constexpr int kShift[kNumVars] = {48, 32, 16, 0};
inline unsigned exponent(Monomial m, int v) { return (m >> kShift[v]) & 0xFFFFu; }
inline Monomial make(const std::array<unsigned, kNumVars>& e) {
  Monomial m = 0;
  for (int v = 0; v < kNumVars; ++v) m |= Monomial(e[v]) << kShift[v];
  return m;
}
bool divides(Monomial a, Monomial b);  // a | b
Monomial lcm(Monomial a, Monomial b);
Monomial gcd(Monomial a, Monomial b);
inline Monomial unit(Var v) { return Monomial(1) << kShift[static_cast<int>(v)]; }
}  // namespace mono

struct Term {
  Monomial mono;
  mpq_class coef;
};

// Polynomial over Q in (b, d, ď, f); terms strictly decreasing by monomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(long c) : Poly(mpq_class(c)) {}
  static Poly monomial(Monomial m, const mpq_class& c = 1);
  static Poly variable(Var v) { return monomial(mono::unit(v)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coef == 1; }
  mpq_class constant_value() const;
  const Term& leading() const { return terms_.front(); }
  unsigned degree(Var v) const;
  // Largest monomial dividing every term.
  Monomial monomial_content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const mpq_class& c) const;
  Poly times_monomial(Monomial m) const;
  // Requires m to divide every term.
  Poly divided_by_monomial(Monomial m) const;

  friend bool operator==(const Poly& x, const Poly& y);
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

  std::size_t hash() const;
  std::string to_string() const;

  // Coefficients with respect to v: result[k] is the v^k part with v removed.
  std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, Var v);

 private:
  std::vector<Term> terms_;
  friend Poly from_sorted_terms(std::vector<Term> t);
};

// Exact quotient, or nullopt when divisor does not divide dividend.
std::optional<Poly> divide_exact(const Poly& dividend, const Poly& divisor);
// Monic (leading coefficient 1) gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& x, const Poly& y);

class Specialization;

// Element of Q(b, d, ď, f). Canonical: gcd(num, den) = 1 and den is monic.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
  Scalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  explicit Scalar(const Poly& p) : num_(p), den_(1) {}
  Scalar(const Poly& num, const Poly& den);

  static Scalar a();
  static Scalar b();
  static Scalar c();
  static Scalar d();
  static Scalar dcheck();
  static Scalar f();

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;
  // Number of terms, used as a cheap size measure for pivot selection.
  std::size_t weight() const { return num_.terms().size() + den_.terms().size(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar pow(unsigned n) const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar specialize(const Specialization& s) const;
  std::size_t hash() const;
  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Poly num_;
  Poly den_;
  void normalize();
};

// Partial assignment of rational values to a, b, d, f.
class Specialization {
 public:
  std::optional<mpq_class> a, b, d, f;

  bool empty() const { return !a && !b && !d && !f; }
  // c = d(d - a)/b when a, b, d are all assigned and b != 0.
  std::optional<mpq_class> induced_c() const;
  // a, b, d positive with d > a, so that c > 0 and ď < 0.
  bool star_compatible() const;
  // The value substituted for each internal variable.
  std::array<Scalar, kNumVars> substitution() const;

  // "a=1,b=1,d=2,f=1/3"; unknown keys or malformed values raise ParseError.
  static Specialization parse(std::string_view text);
  static Specialization default_point();  // a=1, b=1, d=2, f symbolic
  std::string to_string() const;
};

}  // namespace tlk
