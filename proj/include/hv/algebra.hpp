#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hv/coefficient.hpp"

namespace hv {

enum class SymbolKind : std::uint8_t { L, I, CL, CLI, CI };

/// One basis vector: L(n), I(n) or one of the three central symbols. The
/// central symbols always carry index 0. Ordering is the canonical print
/// order: L by index, then I by index, then C_L, C_LI, C_I.
struct BasisSymbol {
  SymbolKind kind = SymbolKind::L;
  std::int64_t index = 0;

  static BasisSymbol L(std::int64_t n) { return {SymbolKind::L, n}; }
  static BasisSymbol I(std::int64_t n) { return {SymbolKind::I, n}; }
  static BasisSymbol C_L() { return {SymbolKind::CL, 0}; }
  static BasisSymbol C_LI() { return {SymbolKind::CLI, 0}; }
  static BasisSymbol C_I() { return {SymbolKind::CI, 0}; }

  bool is_indexed() const { return kind == SymbolKind::L || kind == SymbolKind::I; }
  bool is_central_symbol() const { return !is_indexed(); }

  /// "L[2]", "I[-1]", "C_L", ...
  std::string to_string() const;

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Which sign multiplies the C_LI term of [L_n, I_m]. `Paper` is sigma = +1
/// (the relations as usually printed); `Consistent` is sigma = -1, the sign
/// under which D2 and D3 are derivations.
enum class CocycleSign { Paper, Consistent };

inline int sigma(CocycleSign s) { return s == CocycleSign::Paper ? 1 : -1; }
std::string to_string(CocycleSign s);
std::optional<CocycleSign> parse_sign(const std::string& name);

/// Finitely supported linear combination of basis symbols. No zero
/// coefficient is ever stored.
class Element {
 public:
  using Terms = std::map<BasisSymbol, Coefficient>;

  Element() = default;
  Element(BasisSymbol s, Coefficient c = 1);  // NOLINT(google-explicit-constructor)

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coeff(const BasisSymbol& s) const;
  /// Adds c to the coefficient of s, dropping the term if it cancels.
  void add_term(const BasisSymbol& s, const Coefficient& c);

  /// Largest |index| over L/I terms; nullopt when there are none.
  std::optional<std::int64_t> max_abs_index() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Coefficient& k);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Coefficient(-1); }
  friend Element operator*(const Coefficient& k, Element x) { return x *= k; }

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

Element add(const Element& x, const Element& y);
Element scale(const Coefficient& k, const Element& x);

/// Lie bracket on basis symbols.
Element bracket(const BasisSymbol& a, const BasisSymbol& b, CocycleSign sign);
/// Bilinear extension of the basis bracket.
Element bracket(const Element& x, const Element& y, CocycleSign sign);

/// True for I_0, C_L, C_LI, C_I: the symbols spanning the center.
bool is_center_symbol(const BasisSymbol& s);
/// x with its center components removed.
Element center_project(const Element& x);

/// W_N in canonical print order: L_{-N..N}, I_{-N..N}, C_L, C_LI, C_I.
std::vector<BasisSymbol> window_basis(std::int64_t n);

/// W_N in sweep order, by shell |n|: L_0, I_0, then for k = 1..N
/// L_k, L_{-k}, I_k, I_{-k}; the centrals last. Sweeps enumerate pairs and
/// triples by the position of their last member, so the first violation
/// reported is one living in the smallest window.
std::vector<BasisSymbol> sweep_order(std::int64_t n);

struct JacobiViolation {
  std::array<BasisSymbol, 3> triple;
  Element value;
};

struct JacobiReport {
  std::int64_t max_degree = 0;
  CocycleSign sign = CocycleSign::Consistent;
  std::size_t triples_checked = 0;
  std::vector<JacobiViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Evaluates [[a,b],c] + [[b,c],a] + [[c,a],b] over every multiset of three
/// symbols from W_max_degree.
JacobiReport jacobi_check(std::int64_t max_degree, CocycleSign sign);

}  // namespace hv
