#include "hv/random.hpp"

#include <limits>
#include <vector>

namespace hv {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t draw = engine_();
  while (draw > limit) draw = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

Coefficient Rng::coefficient(std::int64_t height) {
  std::int64_t num = 0;
  while (num == 0) num = uniform(-height, height);
  const std::int64_t den = uniform(1, height);
  return Coefficient(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

BasisSymbol Rng::symbol(std::int64_t max_index, std::initializer_list<SymbolKind> kinds) {
  const std::vector<SymbolKind> pool(kinds);
  const SymbolKind kind = pool[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
  if (kind == SymbolKind::L || kind == SymbolKind::I) return {kind, uniform(-max_index, max_index)};
  return {kind, 0};
}

Element Rng::element(std::int64_t max_index, int terms, std::int64_t height, std::initializer_list<SymbolKind> kinds) {
  Element out;
  for (int t = 0; t < terms; ++t) out.add_term(symbol(max_index, kinds), coefficient(height));
  return out;
}

DerivationParams Rng::params(std::int64_t radius, std::int64_t height) {
  DerivationParams p;
  for (std::int64_t j = -radius; j <= radius; ++j) {
    if (coin()) p.a[j] = coefficient(height);
    if (coin()) p.b[j] = coefficient(height);
  }
  if (coin()) p.l1 = coefficient(height);
  if (coin()) p.l2 = coefficient(height);
  if (coin()) p.l3 = coefficient(height);
  if (coin()) p.alpha = coefficient(height);
  if (coin()) p.beta = coefficient(height);
  if (coin()) p.gamma = coefficient(height);
  return p;
}

}  // namespace hv
