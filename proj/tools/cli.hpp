#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tlk::cli {

struct Budget {
  std::size_t root_cap = 10000;
  std::size_t word_cap = 1u << 20;
  std::size_t product_cap = 100000;
};

// "root=N,word=N,product=N", any subset; ParseError on anything else.
Budget parse_budget(const std::string& text, Budget base = {});

// Contexts with more orbits than this need --heavy for the irreducibility certificate.
inline constexpr std::size_t kHeavyDimension = 20;

// args excludes the program name. Exit codes: 0 ok, 1 verification failed,
// 2 usage error, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlk::cli
