#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlk/burnside.hpp"
#include "tlk/monoid.hpp"
#include "tlk/twisted.hpp"

namespace tlk {

using Json = nlohmann::ordered_json;

// Verification reports carry a top-level "pass".
Json context_json(const TwistedContext& ctx);
Json roots_json(const TwistedContext& ctx);
Json census_json(const TwistedContext& ctx);

const std::vector<std::string>& verify_check_names();
// Unknown names raise ParseError. The specialization feeds the spectrum rank checks.
Json verify_json(const TwistedContext& ctx, const std::vector<std::string>& checks, const Specialization& at);

Json spectrum_json(const TwistedContext& ctx, const Specialization& at);
Json annihilator_json(const TwistedContext& ctx);
Json coupling_json(const TwistedContext& ctx);
Json irreducible_json(const TwistedContext& ctx, const Specialization& at, const BurnsideResult& r);
Json faithful_json(const TwistedContext& ctx, const FaithfulnessReport& r, const MultiplicativityReport& mult);
Json equiv_json(const TwistedContext& x, const Specialization& sx, const TwistedContext& y, const Specialization& sy,
                const EquivalenceResult& r);

}  // namespace tlk
