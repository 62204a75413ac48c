#include "hnerve/config.hpp"

#include <charconv>
#include <string>

#include "hnerve/error.hpp"

namespace hnerve {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > (1U << 31)) throw PreconditionError("field characteristic must be below 2^31");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("gf:")) {
    const auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || p > (1ULL << 31))
      throw PreconditionError("bad field '" + std::string(text) + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw PreconditionError("bad field '" + std::string(text) + "' (expected q or gf:p)");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

}  // namespace hnerve
