#include "hv/algebra.hpp"

#include <stdexcept>

#include "hv/error.hpp"

namespace hv {

std::string BasisSymbol::to_string() const {
  switch (kind) {
    case SymbolKind::L: return "L[" + std::to_string(index) + "]";
    case SymbolKind::I: return "I[" + std::to_string(index) + "]";
    case SymbolKind::CL: return "C_L";
    case SymbolKind::CLI: return "C_LI";
    case SymbolKind::CI: return "C_I";
  }
  return {};
}

std::string to_string(CocycleSign s) { return s == CocycleSign::Paper ? "paper" : "consistent"; }

std::optional<CocycleSign> parse_sign(const std::string& name) {
  if (name == "paper") return CocycleSign::Paper;
  if (name == "consistent") return CocycleSign::Consistent;
  return std::nullopt;
}

Element::Element(BasisSymbol s, Coefficient c) {
  if (s.is_central_symbol()) s.index = 0;
  if (!c.is_zero()) terms_.emplace(s, std::move(c));
}

Coefficient Element::coeff(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void Element::add_term(const BasisSymbol& s, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<std::int64_t> Element::max_abs_index() const {
  std::optional<std::int64_t> out;
  for (const auto& [s, c] : terms_) {
    if (!s.is_indexed()) continue;
    std::int64_t a = s.index < 0 ? -s.index : s.index;
    if (!out || a > *out) out = a;
  }
  return out;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

Element& Element::operator*=(const Coefficient& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= k;
  return *this;
}

Element add(const Element& x, const Element& y) { return x + y; }
Element scale(const Coefficient& k, const Element& x) { return k * x; }

namespace {

std::int64_t index_sum(std::int64_t n, std::int64_t m) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(n, m, &out)) throw Error("basis index overflow in bracket");
  return out;
}

mpz_class big(std::int64_t n) { return mpz_class(static_cast<long>(n)); }

// [L_n, L_m] = (n-m) L_{n+m} + delta_{n+m,0} (n^3-n)/12 C_L
Element bracket_ll(std::int64_t n, std::int64_t m) {
  Element out;
  const mpz_class bn = big(n), bm = big(m);
  out.add_term(BasisSymbol::L(index_sum(n, m)), Coefficient(mpq_class(bn - bm)));
  if (bn + bm == 0) out.add_term(BasisSymbol::C_L(), Coefficient(bn * bn * bn - bn, mpz_class(12)));
  return out;
}

// [L_n, I_m] = -m I_{n+m} + sigma delta_{n+m,0} (n^2+n) C_LI
Element bracket_li(std::int64_t n, std::int64_t m, CocycleSign sign) {
  Element out;
  const mpz_class bn = big(n), bm = big(m);
  out.add_term(BasisSymbol::I(index_sum(n, m)), Coefficient(mpq_class(-bm)));
  if (bn + bm == 0) out.add_term(BasisSymbol::C_LI(), Coefficient(mpq_class(sigma(sign) * (bn * bn + bn))));
  return out;
}

// [I_n, I_m] = n delta_{n+m,0} C_I
Element bracket_ii(std::int64_t n, std::int64_t m) {
  Element out;
  const mpz_class bn = big(n), bm = big(m);
  if (bn + bm == 0) out.add_term(BasisSymbol::C_I(), Coefficient(mpq_class(bn)));
  return out;
}

}  // namespace

Element bracket(const BasisSymbol& a, const BasisSymbol& b, CocycleSign sign) {
  if (a.is_central_symbol() || b.is_central_symbol()) return {};
  if (a.kind == SymbolKind::L && b.kind == SymbolKind::L) return bracket_ll(a.index, b.index);
  if (a.kind == SymbolKind::L && b.kind == SymbolKind::I) return bracket_li(a.index, b.index, sign);
  if (a.kind == SymbolKind::I && b.kind == SymbolKind::L) return -bracket_li(b.index, a.index, sign);
  return bracket_ii(a.index, b.index);
}

Element bracket(const Element& x, const Element& y, CocycleSign sign) {
  Element out;
  for (const auto& [sa, ca] : x.terms()) {
    if (sa.is_central_symbol()) continue;
    for (const auto& [sb, cb] : y.terms()) {
      if (sb.is_central_symbol()) continue;
      const Coefficient k = ca * cb;
      const Element term = bracket(sa, sb, sign);
      for (const auto& [s, c] : term.terms()) out.add_term(s, k * c);
    }
  }
  return out;
}

bool is_center_symbol(const BasisSymbol& s) {
  return s.is_central_symbol() || (s.kind == SymbolKind::I && s.index == 0);
}

Element center_project(const Element& x) {
  Element out;
  for (const auto& [s, c] : x.terms())
    if (!is_center_symbol(s)) out.add_term(s, c);
  return out;
}

std::vector<BasisSymbol> window_basis(std::int64_t n) {
  std::vector<BasisSymbol> out;
  for (std::int64_t k = -n; k <= n; ++k) out.push_back(BasisSymbol::L(k));
  for (std::int64_t k = -n; k <= n; ++k) out.push_back(BasisSymbol::I(k));
  out.push_back(BasisSymbol::C_L());
  out.push_back(BasisSymbol::C_LI());
  out.push_back(BasisSymbol::C_I());
  return out;
}

std::vector<BasisSymbol> sweep_order(std::int64_t n) {
  std::vector<BasisSymbol> out{BasisSymbol::L(0), BasisSymbol::I(0)};
  for (std::int64_t k = 1; k <= n; ++k) {
    out.push_back(BasisSymbol::L(k));
    out.push_back(BasisSymbol::L(-k));
    out.push_back(BasisSymbol::I(k));
    out.push_back(BasisSymbol::I(-k));
  }
  out.push_back(BasisSymbol::C_L());
  out.push_back(BasisSymbol::C_LI());
  out.push_back(BasisSymbol::C_I());
  return out;
}

JacobiReport jacobi_check(std::int64_t max_degree, CocycleSign sign) {
  if (max_degree < 1) throw std::invalid_argument("jacobi_check requires max_degree >= 1");
  JacobiReport report;
  report.max_degree = max_degree;
  report.sign = sign;
  const auto basis = sweep_order(max_degree);
  const std::size_t n = basis.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        const Element a(basis[i]), b(basis[j]), c(basis[k]);
        Element sum = bracket(bracket(a, b, sign), c, sign);
        sum += bracket(bracket(b, c, sign), a, sign);
        sum += bracket(bracket(c, a, sign), b, sign);
        ++report.triples_checked;
        if (!sum.is_zero()) report.violations.push_back({{basis[i], basis[j], basis[k]}, std::move(sum)});
      }
    }
  }
  return report;
}

}  // namespace hv
