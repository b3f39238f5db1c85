#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "hv/algebra.hpp"
#include "hv/derivation.hpp"

namespace hv {

/// Seeded generator for fixtures and samples. Only the raw mt19937_64 stream
/// is used (its output is fixed by the standard), so draws are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero rational p/q with |p| <= height and 1 <= q <= height.
  Coefficient coefficient(std::int64_t height);

  /// Symbol of one of the given kinds, index in [-max_index, max_index].
  BasisSymbol symbol(std::int64_t max_index, std::initializer_list<SymbolKind> kinds);

  /// Sum of `terms` random terms over the given kinds. Cancelling draws can
  /// make it shorter.
  Element element(std::int64_t max_index, int terms, std::int64_t height,
                  std::initializer_list<SymbolKind> kinds = {SymbolKind::L, SymbolKind::I, SymbolKind::CL,
                                                             SymbolKind::CLI, SymbolKind::CI});

  /// Params with a, b supported on [-radius, radius], each entry present
  /// with probability 1/2, and nonzero-or-zero alpha, beta, gamma.
  DerivationParams params(std::int64_t radius, std::int64_t height);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hv
