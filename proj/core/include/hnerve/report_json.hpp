#pragma once

#include <nlohmann/json.hpp>

#include "hnerve/homology.hpp"
#include "hnerve/invariants.hpp"
#include "hnerve/monomial.hpp"

namespace hnerve {

using Json = nlohmann::ordered_json;

/// {"d","n","s","table","chi","chi_reduced","depth":{"value","witness"},"f","h","cm","checks"}
/// with table[j-1][i+1] = b_{ij} and witness = [i, j]. Key order is fixed.
Json to_json(const InvariantReport& report);
InvariantReport report_from_json(const Json& j);

Json to_json(const CheckResult& check);
CheckResult check_from_json(const Json& j);

/// {"field", "betti": [b_-1, b_0, ...]}
Json to_json(const BettiProfile& betti);

/// {"reg", "witness": [i, j], "module"}; with `module`, reg is reg(S/I) = reg(I) - 1.
Json to_json(const RegularityResult& result, bool module);

}  // namespace hnerve
