#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tlk/matrix.hpp"
#include "tlk/scalar.hpp"
#include "tlk/twisted.hpp"

namespace tlk {

// Exact: rational arithmetic. ModP: reduction modulo the prime 2^61 - 1,
// itself a further specialization, so full dimension there is full dimension
// over Q as well.
enum class Backend { Exact, ModP };
const char* backend_name(Backend b);
Backend parse_backend(const std::string& s);

inline constexpr std::uint64_t kBurnsidePrime = (std::uint64_t(1) << 61) - 1;

struct BurnsideResult {
  std::size_t n = 0;          // matrix size
  std::size_t dimension = 0;  // dimension of the generated unital algebra
  std::size_t products = 0;   // matrix products spent
  Backend backend = Backend::Exact;
  bool irreducible() const { return dimension == n * n; }
};

using RationalMatrix = std::vector<std::vector<mpq_class>>;

BurnsideResult algebra_dimension(const std::vector<RationalMatrix>& gens, std::size_t max_products, Backend backend);

// Needs a, b, d and f all assigned, with f nonzero.
BurnsideResult burnside_certificate(const TwistedContext& ctx, const Specialization& at, std::size_t max_products,
                                    Backend backend);

RationalMatrix to_rational(const Matrix& m);

}  // namespace tlk
