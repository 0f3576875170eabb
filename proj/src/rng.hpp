#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace inkdrop {

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

// FNV-1a 64-bit. Used for seed derivation and artifact content hashing.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
  return fnv1a(s.data(), s.size(), h);
}

// One master seed fans out into independent substreams keyed by (tag, index).
// Stream identity does not depend on the order streams are created in.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
  std::uint64_t h = fnv1a(&seed, sizeof seed);
  h = fnv1a(tag, h);
  h = fnv1a(&index, sizeof index, h);
  return h ? h : 0x9e3779b97f4a7c15ull;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(seed, tag, index));
}

}  // namespace inkdrop
