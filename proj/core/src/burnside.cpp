#include "tlk/burnside.hpp"

#include "tlk/errors.hpp"

namespace tlk {

const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "modp"; }

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "modp") return Backend::ModP;
  throw ParseError("unknown backend '" + s + "' (expected exact or modp)");
}

RationalMatrix to_rational(const Matrix& m) {
  RationalMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_constant()) throw Error("matrix entry " + m(r, c).to_string() + " is not a rational number");
      out[r][c] = m(r, c).constant_value();
    }
  return out;
}

namespace {

struct RationalField {
  using T = mpq_class;
  static T zero() { return 0; }
  static T one() { return 1; }
  static bool is_zero(const T& x) { return x == 0; }
  static T add(const T& x, const T& y) { return x + y; }
  static T sub(const T& x, const T& y) { return x - y; }
  static T mul(const T& x, const T& y) { return x * y; }
  static T inv(const T& x) { return 1 / x; }
  static T from(const mpq_class& q) { return q; }
};

struct PrimeField {
  using T = std::uint64_t;
  static constexpr T p = kBurnsidePrime;
  static T zero() { return 0; }
  static T one() { return 1; }
  static bool is_zero(T x) { return x == 0; }
  static T add(T x, T y) {
    T s = x + y;
    return s >= p ? s - p : s;
  }
  static T sub(T x, T y) { return x >= y ? x - y : x + p - y; }
  static T mul(T x, T y) {
    unsigned __int128 z = static_cast<unsigned __int128>(x) * y;
    T lo = static_cast<T>(z & p), hi = static_cast<T>(z >> 61);
    return add(lo, hi);
  }
  static T pow(T x, T e) {
    T r = 1;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  static T inv(T x) { return pow(x, p - 2); }
  static T reduce(const mpz_class& z) {
    static const mpz_class modulus(static_cast<unsigned long>(p));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
    return static_cast<T>(r.get_ui());
  }
  static T from(const mpq_class& q) {
    T den = reduce(q.get_den());
    if (den == 0) throw PoleAtSpecialization("denominator vanishes modulo the prime");
    return mul(reduce(q.get_num()), inv(den));
  }
};

template <class F>
BurnsideResult span(const std::vector<RationalMatrix>& rational, std::size_t max_products) {
  using T = typename F::T;
  BurnsideResult res;
  if (rational.empty()) return res;
  const std::size_t n = rational.front().size();
  res.n = n;
  const std::size_t full = n * n;
  std::vector<std::vector<T>> gens;
  for (const auto& g : rational) {
    std::vector<T> flat(full, F::zero());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = F::from(g[r][c]);
    gens.push_back(std::move(flat));
  }

  std::vector<std::vector<T>> basis;
  std::vector<std::size_t> pivot;
  // Reduces v against the basis; appends it when independent.
  auto insert = [&](std::vector<T> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const T coef = v[pivot[b]];
      if (F::is_zero(coef)) continue;
      const auto& row = basis[b];
      for (std::size_t k = 0; k < full; ++k)
        if (!F::is_zero(row[k])) v[k] = F::sub(v[k], F::mul(coef, row[k]));
    }
    std::size_t p = 0;
    while (p < full && F::is_zero(v[p])) ++p;
    if (p == full) return;
    const T inv = F::inv(v[p]);
    for (auto& x : v)
      if (!F::is_zero(x)) x = F::mul(x, inv);
    basis.push_back(std::move(v));
    pivot.push_back(p);
  };

  std::vector<T> id(full, F::zero());
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = F::one();
  insert(std::move(id));

  for (std::size_t next = 0; next < basis.size() && basis.size() < full; ++next) {
    for (const auto& g : gens) {
      if (basis.size() == full) break;
      if (res.products >= max_products)
        throw BudgetExceeded("span not stable after " + std::to_string(max_products) + " products (dimension " +
                             std::to_string(basis.size()) + " so far)");
      ++res.products;
      const std::vector<T> x = basis[next];
      std::vector<T> prod(full, F::zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const T& a = x[i * n + k];
          if (F::is_zero(a)) continue;
          for (std::size_t j = 0; j < n; ++j) {
            const T& b = g[k * n + j];
            if (!F::is_zero(b)) prod[i * n + j] = F::add(prod[i * n + j], F::mul(a, b));
          }
        }
      insert(std::move(prod));
    }
  }
  res.dimension = basis.size();
  return res;
}

}  // namespace

BurnsideResult algebra_dimension(const std::vector<RationalMatrix>& gens, std::size_t max_products, Backend backend) {
  BurnsideResult res =
      backend == Backend::Exact ? span<RationalField>(gens, max_products) : span<PrimeField>(gens, max_products);
  res.backend = backend;
  return res;
}

BurnsideResult burnside_certificate(const TwistedContext& ctx, const Specialization& at, std::size_t max_products,
                                    Backend backend) {
  if (!at.a || !at.b || !at.d || !at.f)
    throw ParseError("the irreducibility certificate needs a, b, d and f all assigned");
  if (*at.f == 0) throw ParseError("the irreducibility certificate needs f != 0");
  if (!at.star_compatible()) throw ParseError("the irreducibility certificate needs b > 0 and d > a > 0");
  std::vector<RationalMatrix> gens;
  for (const auto& g : ctx.generators()) gens.push_back(to_rational(g.psi.specialize(at)));
  return algebra_dimension(gens, max_products, backend);
}

}  // namespace tlk
