#include "hv/derivation.hpp"

#include <algorithm>
#include <stdexcept>

#include "hv/error.hpp"

namespace hv {

std::string to_string(OuterKind k) {
  switch (k) {
    case OuterKind::D1: return "D1";
    case OuterKind::D2: return "D2";
    case OuterKind::D3: return "D3";
  }
  return {};
}

Element apply_outer(OuterKind kind, const BasisSymbol& s) {
  const auto n = s.index;
  switch (kind) {
    case OuterKind::D1:
      switch (s.kind) {
        case SymbolKind::L:
        case SymbolKind::CL: return {};
        case SymbolKind::I: return Element(s);
        case SymbolKind::CLI: return Element(BasisSymbol::C_LI());
        case SymbolKind::CI: return Element(BasisSymbol::C_I(), 2);
      }
      break;
    case OuterKind::D2:
      switch (s.kind) {
        case SymbolKind::L: {
          Element out(BasisSymbol::I(n), n);
          if (n == 0) out.add_term(BasisSymbol::C_LI(), 1);
          return out;
        }
        case SymbolKind::I: return n == 0 ? Element(BasisSymbol::C_I(), -1) : Element();
        case SymbolKind::CL: return Element(BasisSymbol::C_LI(), 24);
        case SymbolKind::CLI: return Element(BasisSymbol::C_I(), -1);
        case SymbolKind::CI: return {};
      }
      break;
    case OuterKind::D3:
      switch (s.kind) {
        case SymbolKind::L: return Element(BasisSymbol::I(n), Coefficient(n) + 1);
        case SymbolKind::I: return {};
        case SymbolKind::CL: return Element(BasisSymbol::C_LI(), 24);
        case SymbolKind::CLI: return Element(BasisSymbol::C_I(), -1);
        case SymbolKind::CI: return {};
      }
      break;
  }
  return {};
}

Element apply_outer(OuterKind kind, const Element& x) {
  Element out;
  for (const auto& [s, c] : x.terms()) out += c * apply_outer(kind, s);
  return out;
}

// --- DerivationParams -------------------------------------------------------

Element DerivationParams::inner_element() const {
  Element z;
  for (const auto& [j, c] : a) z.add_term(BasisSymbol::L(j), c);
  for (const auto& [j, c] : b) z.add_term(BasisSymbol::I(j), c);
  z.add_term(BasisSymbol::C_L(), l1);
  z.add_term(BasisSymbol::C_LI(), l2);
  z.add_term(BasisSymbol::C_I(), l3);
  return z;
}

DerivationParams DerivationParams::modulo_center() const {
  DerivationParams out;
  for (const auto& [j, c] : a)
    if (!c.is_zero()) out.a.emplace(j, c);
  for (const auto& [j, c] : b)
    if (j != 0 && !c.is_zero()) out.b.emplace(j, c);
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  return out;
}

bool DerivationParams::equivalent(const DerivationParams& o) const { return modulo_center() == o.modulo_center(); }

std::int64_t DerivationParams::support_radius() const {
  std::int64_t r = 0;
  for (const auto& [j, c] : a)
    if (!c.is_zero()) r = std::max(r, j < 0 ? -j : j);
  for (const auto& [j, c] : b)
    if (j != 0 && !c.is_zero()) r = std::max(r, j < 0 ? -j : j);
  return r;
}

Element DerivationParams::apply(const Element& x, CocycleSign sign) const {
  Element out = bracket(inner_element(), x, sign);
  if (!alpha.is_zero()) out += alpha * apply_outer(OuterKind::D1, x);
  if (!beta.is_zero()) out += beta * apply_outer(OuterKind::D2, x);
  if (!gamma.is_zero()) out += gamma * apply_outer(OuterKind::D3, x);
  return out;
}

DerivationParams& DerivationParams::operator+=(const DerivationParams& o) {
  for (const auto& [j, c] : o.a) a[j] += c;
  for (const auto& [j, c] : o.b) b[j] += c;
  l1 += o.l1;
  l2 += o.l2;
  l3 += o.l3;
  alpha += o.alpha;
  beta += o.beta;
  gamma += o.gamma;
  return *this;
}

// --- DerivationTable --------------------------------------------------------

DerivationTable::DerivationTable(std::int64_t window) : window_(window) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  for (const auto& s : window_basis(window)) images_.emplace(s, Element{});
}

bool DerivationTable::in_domain(const BasisSymbol& s) const { return images_.count(s) != 0; }

bool DerivationTable::covers(const Element& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return in_domain(t.first); });
}

const Element& DerivationTable::image(const BasisSymbol& s) const {
  auto it = images_.find(s);
  if (it == images_.end()) throw std::out_of_range(s.to_string() + " is outside the table window");
  return it->second;
}

void DerivationTable::set_image(const BasisSymbol& s, Element image) {
  auto it = images_.find(s);
  if (it == images_.end()) throw std::out_of_range(s.to_string() + " is outside the table window");
  it->second = std::move(image);
}

Element DerivationTable::apply(const Element& x) const {
  Element out;
  for (const auto& [s, c] : x.terms()) out += c * image(s);
  return out;
}

DerivationTable& DerivationTable::operator+=(const DerivationTable& o) {
  if (o.window_ != window_) throw std::invalid_argument("table windows differ");
  for (auto& [s, img] : images_) img += o.image(s);
  return *this;
}

DerivationTable ad(const Element& z, std::int64_t window, CocycleSign sign) {
  DerivationTable t(window);
  for (const auto& s : window_basis(window)) t.set_image(s, bracket(z, Element(s), sign));
  return t;
}

DerivationTable outer_table(OuterKind kind, std::int64_t window) {
  DerivationTable t(window);
  for (const auto& s : window_basis(window)) t.set_image(s, apply_outer(kind, s));
  return t;
}

DerivationTable realize(const DerivationParams& params, std::int64_t window, CocycleSign sign) {
  DerivationTable t(window);
  for (const auto& s : window_basis(window)) t.set_image(s, params.apply(Element(s), sign));
  return t;
}

LeibnizReport leibniz_check(const DerivationTable& table, CocycleSign sign) {
  LeibnizReport report;
  const auto order = sweep_order(table.window());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element x(order[j]), y(order[k]);
      const Element xy = bracket(x, y, sign);
      if (!table.covers(xy)) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      Element defect = table.apply(xy);
      defect -= bracket(table.image(order[j]), y, sign);
      defect -= bracket(x, table.image(order[k]), sign);
      if (!defect.is_zero()) report.violations.push_back({order[j], order[k], std::move(defect)});
    }
  }
  if (report.checked == 0) throw DomainTooSmall("no pair of the window brackets back into the window");
  return report;
}

// --- Constraint systems -----------------------------------------------------

ParamLayout::ParamLayout(std::int64_t window) : window_(window) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  for (std::int64_t j = -window; j <= window; ++j) names_.push_back("a[" + std::to_string(j) + "]");
  for (std::int64_t j = -window; j <= window; ++j)
    if (j != 0) names_.push_back("b[" + std::to_string(j) + "]");
  names_.push_back("alpha");
  names_.push_back("beta");
  names_.push_back("gamma");
}

std::size_t ParamLayout::a(std::int64_t j) const {
  if (j < -window_ || j > window_) throw std::out_of_range("a index outside window");
  return static_cast<std::size_t>(j + window_);
}

std::size_t ParamLayout::b(std::int64_t j) const {
  if (j == 0 || j < -window_ || j > window_) throw std::out_of_range("b index outside window or central");
  const auto base = static_cast<std::size_t>(2 * window_ + 1);
  return base + static_cast<std::size_t>(j < 0 ? j + window_ : j + window_ - 1);
}

DerivationParams ParamLayout::unit(std::size_t u) const {
  Assignment v(size(), Coefficient{});
  v.at(u) = 1;
  return to_params(v);
}

DerivationParams ParamLayout::to_params(const Assignment& v) const {
  if (v.size() != size()) throw std::invalid_argument("assignment size does not match layout");
  DerivationParams p;
  for (std::int64_t j = -window_; j <= window_; ++j) {
    if (!v[a(j)].is_zero()) p.a.emplace(j, v[a(j)]);
    if (j != 0 && !v[b(j)].is_zero()) p.b.emplace(j, v[b(j)]);
  }
  p.alpha = v[alpha()];
  p.beta = v[beta()];
  p.gamma = v[gamma()];
  return p;
}

std::int64_t default_constraint_window(std::span<const std::pair<Element, Element>> constraints) {
  std::int64_t in = 0, out = 0;
  for (const auto& [x, y] : constraints) {
    in = std::max(in, x.max_abs_index().value_or(0));
    out = std::max(out, y.max_abs_index().value_or(0));
  }
  return in + out;
}

namespace {

std::int64_t abs_diff(std::int64_t p, std::int64_t q) { return p > q ? p - q : q - p; }

bool reachable(const Element& x, const BasisSymbol& target, std::int64_t window) {
  for (const auto& [s, c] : x.terms()) {
    if (!s.is_indexed()) continue;
    const std::int64_t shift = target.is_indexed() ? abs_diff(target.index, s.index) : (s.index < 0 ? -s.index : s.index);
    if (shift > window) return false;
  }
  return true;
}

}  // namespace

ConstraintSystem constraint_system(std::span<const std::pair<Element, Element>> constraints, CocycleSign sign,
                                   std::optional<std::int64_t> window) {
  const std::int64_t m = window.value_or(default_constraint_window(constraints));
  ConstraintSystem out{ParamLayout(m), LinSystem(), {}};
  out.system = LinSystem(out.layout.names());
  const std::size_t n = out.layout.size();

  std::vector<DerivationParams> units;
  units.reserve(n);
  for (std::size_t u = 0; u < n; ++u) units.push_back(out.layout.unit(u));

  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    const auto& [x, y] = constraints[ci];
    std::map<BasisSymbol, LinRow> rows;
    for (std::size_t u = 0; u < n; ++u) {
      const Element image = units[u].apply(x, sign);
      for (const auto& [s, c] : image.terms()) rows[s].coeffs.emplace(u, c);
    }
    for (const auto& [s, c] : y.terms()) rows[s].rhs = c;
    for (auto& [s, row] : rows) {
      if (row.coeffs.empty() && !row.rhs.is_zero() && !reachable(x, s, m))
        out.unrepresentable.push_back({ci, s});
      out.system.add_row(std::move(row));
    }
  }
  return out;
}

DecomposeResult decompose(const DerivationTable& table, CocycleSign sign) {
  DecomposeResult result;
  result.leibniz = leibniz_check(table, sign);
  if (!result.leibniz.ok()) {
    result.status = DecomposeStatus::NotADerivation;
    return result;
  }
  std::vector<std::pair<Element, Element>> constraints;
  for (const auto& [s, img] : table.images()) constraints.emplace_back(Element(s), img);
  const auto cs = constraint_system(constraints, sign);
  result.unknown_window = cs.layout.window();
  const auto sol = solve(cs.system);
  if (!sol.solved()) {
    result.status = DecomposeStatus::InconsistentTable;
    return result;
  }
  result.params = cs.layout.to_params(sol.particular).modulo_center();
  return result;
}

AuditReport sign_audit(std::int64_t max_degree) {
  if (max_degree < 2) throw std::invalid_argument("sign_audit requires max_degree >= 2");
  AuditReport report;
  report.max_degree = max_degree;
  bool pattern = true;
  for (OuterKind kind : {OuterKind::D1, OuterKind::D2, OuterKind::D3}) {
    const auto table = outer_table(kind, max_degree);
    for (CocycleSign sign : {CocycleSign::Paper, CocycleSign::Consistent}) {
      const auto lr = leibniz_check(table, sign);
      AuditEntry e{kind, sign, false, std::nullopt};
      e.pass = lr.ok();
      e.violations = lr.violations.size();
      e.checked = lr.checked;
      e.skipped = lr.skipped;
      if (!lr.ok()) e.first_violation = lr.violations.front();
      const bool expected = kind == OuterKind::D1 || sign == CocycleSign::Consistent;
      pattern = pattern && (e.pass == expected);
      report.entries.push_back(std::move(e));
    }
  }
  report.expected_pattern_holds = pattern;

  for (CocycleSign sign : {CocycleSign::Paper, CocycleSign::Consistent}) {
    for (std::int64_t i = 1; i <= max_degree; ++i) {
      const Element img = bracket(Element(BasisSymbol::I(-i)), Element(BasisSymbol::L(i)), sign);
      report.central_checks.push_back({i, sign, img.coeff(BasisSymbol::C_LI()), Coefficient(i * i - i)});
    }
  }
  report.notes = {
      "outer classes are D1, D2, D3; the reference classification lists D2 twice and the third summand is read as D3",
      "D1(C_I) = 2 C_I is the only reading of the doubled central image that satisfies Leibniz on [I_n, I_-n]",
      "central_checks: the C_LI coefficient of [I_-i, L_i] is -sigma (i^2+i); the reference value i^2-i matches "
      "under neither sign",
  };
  return report;
}

}  // namespace hv
