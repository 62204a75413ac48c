#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hnerve {

/// Enumeration caps. Exceeding one raises CapExceeded instead of blowing up.
struct Limits {
  std::size_t max_faces = std::size_t{1} << 22;
  std::size_t max_facets = 25;  // ground-set size r for nerves and LCM complexes
  std::size_t max_subdivision_faces = std::size_t{1} << 15;  // guard for validation only
  std::size_t max_subsets = std::size_t{1} << 22;            // connectivity brute force
};

/// Coefficient field for homology: exact rationals or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "gf:p".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

/// Counters filled in by the homology engine when auditing is enabled.
struct AuditCounters {
  std::atomic<std::uint64_t> complexes{0};
  std::atomic<std::uint64_t> boundary_violations{0};
  std::atomic<std::uint64_t> euler_violations{0};
};

struct Config {
  Field field = Field::rationals();
  Limits limits{};
  /// When set, every homology computation also checks d∘d = 0 and Euler–Poincaré.
  AuditCounters* audit = nullptr;
};

}  // namespace hnerve
