#include "doctest.h"

#include "hv/derivation.hpp"
#include "hv/random.hpp"
#include "util.hpp"

using namespace testutil;
using hv::BasisSymbol;
using hv::CocycleSign;
using hv::DerivationParams;
using hv::Element;
using hv::OuterKind;

namespace {

constexpr CocycleSign kC = CocycleSign::Consistent;
constexpr CocycleSign kP = CocycleSign::Paper;

hv::ConstraintSystem zero_system(const Element& x, std::int64_t m) {
  const std::vector<std::pair<Element, Element>> cs{{x, Element{}}};
  return hv::constraint_system(cs, kC, m);
}

oracle::Matrix engine_matrix(const hv::ConstraintSystem& cs) {
  oracle::Matrix out;
  for (const auto& r : cs.system.rows()) {
    std::vector<mpq_class> row(cs.layout.size());
    for (const auto& [u, c] : r.coeffs) row[u] = c.value();
    out.push_back(row);
  }
  return out;
}

std::vector<mpq_class> dense(const hv::Assignment& v) {
  std::vector<mpq_class> out;
  for (const auto& c : v) out.push_back(c.value());
  return out;
}

// Kernel of the engine's system equals the null space of the independently
// built matrix.
void check_against_oracle(const Element& x, std::int64_t m, std::size_t expected_dim) {
  const auto cs = zero_system(x, m);
  const auto sol = hv::solve(cs.system);
  REQUIRE(sol.solved());
  const auto ref = oracle::zero_constraint_matrix(to_oracle(x), m, -1);
  const auto mine = engine_matrix(cs);
  CHECK(sol.kernel_dimension() == expected_dim);
  CHECK(cs.layout.size() - oracle::rank(ref) == expected_dim);
  auto stacked = ref;
  stacked.insert(stacked.end(), mine.begin(), mine.end());
  CHECK(oracle::rank(stacked) == oracle::rank(ref));
  CHECK(oracle::rank(mine) == oracle::rank(ref));
  for (const auto& v : sol.kernel_basis) CHECK(oracle::annihilates(ref, dense(v)));
}

}  // namespace

TEST_SUITE("derivation_engine") {
  TEST_CASE("outer derivations on basis symbols") {
    CHECK(hv::apply_outer(OuterKind::D2, L(0)) == CLI());
    CHECK(hv::apply_outer(OuterKind::D3, L(2)) == 3 * I(2));
    CHECK(hv::apply_outer(OuterKind::D1, CI()) == 2 * CI());
    CHECK(hv::apply_outer(OuterKind::D1, L(7) + CL()).is_zero());
    CHECK(hv::apply_outer(OuterKind::D2, I(0)) == -1 * CI());
    CHECK(hv::apply_outer(OuterKind::D2, I(3)).is_zero());
    CHECK(hv::apply_outer(OuterKind::D2, CL()) == 24 * CLI());
    CHECK(hv::apply_outer(OuterKind::D3, CLI()) == -1 * CI());
    CHECK(hv::apply_outer(OuterKind::D3, L(-1)).is_zero());
    for (int w = 1; w <= 3; ++w)
      for (const auto& s : hv::window_basis(5))
        CHECK(to_oracle(hv::apply_outer(static_cast<OuterKind>(w - 1), s)) ==
              oracle::outer(w, {static_cast<int>(s.kind), s.index}));
  }

  TEST_CASE("inner derivations") {
    const auto t = hv::ad(L(0), 2, kC);
    CHECK(t.image(BasisSymbol::L(1)) == -1 * L(1));
    CHECK(t.image(BasisSymbol::L(-2)) == 2 * L(-2));
    CHECK(t.image(BasisSymbol::I(1)) == -1 * I(1));
    CHECK(t.image(BasisSymbol::C_L()).is_zero());
    const auto i0 = hv::ad(I(0), 6, kC);
    for (const auto& [s, img] : i0.images()) CHECK(img.is_zero());
    const auto cl = hv::ad(CL(), 6, kP);
    for (const auto& [s, img] : cl.images()) CHECK(img.is_zero());
  }

  TEST_CASE("realize") {
    DerivationParams d1;
    d1.alpha = 1;
    CHECK(hv::realize(d1, 4, kC) == hv::outer_table(OuterKind::D1, 4));
    DerivationParams l1;
    l1.a[1] = 1;
    CHECK(hv::realize(l1, 4, kC) == hv::ad(L(1), 4, kC));

    DerivationParams p;
    p.a[2] = 2;
    p.b[1] = -3;
    p.beta = q(1, 2);
    auto expected = hv::ad(2 * L(2) - 3 * I(1), 3, kC);
    for (const auto& s : hv::window_basis(3))
      expected.set_image(s, expected.image(s) + q(1, 2) * hv::apply_outer(OuterKind::D2, s));
    CHECK(hv::realize(p, 3, kC) == expected);
  }

  TEST_CASE("realize is linear in params") {
    hv::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      const auto p = rng.params(3, 20), r = rng.params(3, 20);
      auto sum = p;
      sum += r;
      auto tables = hv::realize(p, 4, kC);
      tables += hv::realize(r, 4, kC);
      CHECK(hv::realize(sum, 4, kC) == tables);
    }
  }

  TEST_CASE("table domain") {
    hv::DerivationTable t(1);
    CHECK(t.images().size() == 9);
    CHECK_THROWS_AS(t.image(BasisSymbol::L(2)), std::out_of_range);
    CHECK_THROWS_AS(t.set_image(BasisSymbol::I(-2), L(0)), std::out_of_range);
    CHECK_THROWS_AS(t.apply(L(3)), std::out_of_range);
    CHECK(t.covers(L(1) + CI()));
  }

  TEST_CASE("leibniz: D2 under sigma = +1 fails at (L_1, L_-1)") {
    const auto r = hv::leibniz_check(hv::outer_table(OuterKind::D2, 6), kP);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().first == BasisSymbol::L(1));
    CHECK(r.violations.front().second == BasisSymbol::L(-1));
    CHECK(r.violations.front().defect == 4 * CLI());
    CHECK(r.skipped > 0);
    CHECK(hv::leibniz_check(hv::outer_table(OuterKind::D2, 6), kC).ok());
  }

  TEST_CASE("leibniz: D2 defects on (L_n, L_-n) are 4n^3 C_LI under sigma = +1") {
    const auto r = hv::leibniz_check(hv::outer_table(OuterKind::D2, 6), kP);
    for (std::int64_t n = 1; n <= 3; ++n) {
      auto it = std::find_if(r.violations.begin(), r.violations.end(), [&](const auto& v) {
        return v.first == BasisSymbol::L(n) && v.second == BasisSymbol::L(-n);
      });
      REQUIRE(it != r.violations.end());
      CHECK(it->defect == 4 * n * n * n * CLI());
    }
  }

  TEST_CASE("leibniz: inner maps pass under both signs") {
    hv::Rng rng(9);
    for (int i = 0; i < 15; ++i) {
      const Element z = rng.element(4, 5, 50);
      for (CocycleSign s : {kC, kP}) CHECK(hv::leibniz_check(hv::ad(z, 5, s), s).ok());
    }
  }

  TEST_CASE("leibniz detects a non-derivation") {
    auto t = hv::outer_table(OuterKind::D1, 3);
    t.set_image(BasisSymbol::L(1), I(2));
    CHECK_FALSE(hv::leibniz_check(t, kC).ok());
  }

  TEST_CASE("constraint system: D(L_0) = 0") {
    const auto cs = zero_system(L(0), 5);
    const auto sol = hv::solve(cs.system);
    REQUIRE(sol.solved());
    const auto& lay = cs.layout;
    CHECK(sol.kernel_dimension() == 2);
    CHECK_FALSE(sol.kernel_forces_zero(lay.alpha()));
    CHECK_FALSE(sol.kernel_forces_zero(lay.a(0)));
    CHECK(sol.kernel_forces_zero(lay.beta()));
    CHECK(sol.kernel_forces_zero(lay.gamma()));
    check_against_oracle(L(0), 5, 2);
  }

  TEST_CASE("constraint system: D(I_0) = 0") {
    const auto cs = zero_system(I(0), 5);
    CHECK(cs.layout.size() == 24);
    CHECK(cs.system.rows().size() == 2);
    const auto sol = hv::solve(cs.system);
    CHECK(sol.kernel_dimension() == 22);
    for (std::size_t u = 0; u < cs.layout.size(); ++u)
      CHECK(sol.kernel_forces_zero(u) == (u == cs.layout.alpha() || u == cs.layout.beta()));
    check_against_oracle(I(0), 5, 22);
  }

  TEST_CASE("constraint system: D(L_2) = 0") {
    const auto cs = zero_system(L(2), 5);
    const auto sol = hv::solve(cs.system);
    REQUIRE(sol.kernel_dimension() == 3);
    const auto& lay = cs.layout;
    // Expected span{a_2, alpha, 3 beta - 2 gamma}: every expected vector lies in the kernel.
    hv::Assignment a2(lay.size()), alpha(lay.size()), pencil(lay.size());
    a2[lay.a(2)] = 1;
    alpha[lay.alpha()] = 1;
    pencil[lay.beta()] = 3;
    pencil[lay.gamma()] = -2;
    oracle::Matrix span;
    for (const auto& v : sol.kernel_basis) span.push_back(dense(v));
    for (const auto& v : {a2, alpha, pencil}) {
      CHECK(hv::satisfies(cs.system, v, true));
      auto plus = span;
      plus.push_back(dense(v));
      CHECK(oracle::rank(plus) == 3);
    }
    check_against_oracle(L(2), 5, 3);
  }

  TEST_CASE("constraint system: D(L_2 + I_1) = 0") {
    const auto cs = zero_system(L(2) + I(1), 5);
    const auto sol = hv::solve(cs.system);
    CHECK(sol.kernel_forces_zero(cs.layout.alpha()));
    for (const auto& v : sol.kernel_basis) {
      CHECK(v[cs.layout.gamma()] == q(-2, 3) * v[cs.layout.beta()]);
      CHECK(v[cs.layout.a(2)] == v[cs.layout.b(1)]);
    }
    check_against_oracle(L(2) + I(1), 5, 2);
  }

  TEST_CASE("kernel dimensions for every single L_i") {
    for (std::int64_t i = -5; i <= 5; ++i) {
      const auto cs = zero_system(L(i), 5);
      const auto sol = hv::solve(cs.system);
      CHECK(sol.kernel_dimension() == (i == 0 ? 2u : 3u));
      for (const auto& v : sol.kernel_basis)
        CHECK((hv::Coefficient(i) * v[cs.layout.beta()] + hv::Coefficient(i + 1) * v[cs.layout.gamma()]).is_zero());
      check_against_oracle(L(i), 5, i == 0 ? 2 : 3);
    }
  }

  TEST_CASE("unrepresentable constraints are flagged") {
    const std::vector<std::pair<Element, Element>> cs{{L(0), L(4)}};
    const auto sys = hv::constraint_system(cs, kC, 2);
    REQUIRE(sys.unrepresentable.size() == 1);
    CHECK(sys.unrepresentable[0].symbol == BasisSymbol::L(4));
    CHECK_FALSE(hv::solve(sys.system).solved());
    const auto wide = hv::constraint_system(cs, kC);
    CHECK(wide.layout.window() == 4);
    CHECK(wide.unrepresentable.empty());
    CHECK(hv::solve(wide.system).solved());
  }

  TEST_CASE("constraint solutions realize to the constraints") {
    hv::Rng rng(21);
    for (int i = 0; i < 10; ++i) {
      const auto p = rng.params(3, 30);
      std::vector<std::pair<Element, Element>> cs;
      for (int k = 0; k < 3; ++k) {
        const Element x = rng.element(3, 3, 10);
        cs.emplace_back(x, p.apply(x, kC));
      }
      const auto sys = hv::constraint_system(cs, kC, 3);
      const auto sol = hv::solve(sys.system);
      REQUIRE(sol.solved());
      const auto w = sys.layout.to_params(sol.particular);
      for (const auto& [x, y] : cs) CHECK(w.apply(x, kC) == y);
    }
  }

  TEST_CASE("decompose round trips") {
    DerivationParams d1;
    d1.alpha = 1;
    auto r = hv::decompose(hv::realize(d1, 6, kC), kC);
    REQUIRE(r.status == hv::DecomposeStatus::Ok);
    CHECK(*r.params == d1);

    DerivationParams l1;
    l1.a[1] = 1;
    l1.b[0] = 5;
    l1.l2 = 3;
    r = hv::decompose(hv::realize(l1, 6, kC), kC);
    REQUIRE(r.status == hv::DecomposeStatus::Ok);
    CHECK(r.params->equivalent(l1));
    CHECK(r.params->b.empty());

    hv::Rng rng(17);
    for (int i = 0; i < 10; ++i) {
      const auto p = rng.params(3, 100);
      const auto res = hv::decompose(hv::realize(p, 6, kC), kC);
      REQUIRE(res.status == hv::DecomposeStatus::Ok);
      CHECK(res.params->equivalent(p));
    }
  }

  TEST_CASE("decompose under sigma = +1 handles inner and D1 parts") {
    DerivationParams p;
    p.a[-2] = q(3, 7);
    p.b[1] = -2;
    p.alpha = 5;
    const auto r = hv::decompose(hv::realize(p, 5, kP), kP);
    REQUIRE(r.status == hv::DecomposeStatus::Ok);
    CHECK(r.params->equivalent(p));
  }

  TEST_CASE("decompose rejects non-derivations") {
    const auto r = hv::decompose(hv::outer_table(OuterKind::D2, 4), kP);
    CHECK(r.status == hv::DecomposeStatus::NotADerivation);
    CHECK_FALSE(r.params.has_value());
    CHECK_FALSE(r.leibniz.ok());

    hv::DerivationTable t(0);
    t.set_image(BasisSymbol::L(0), CL());
    const auto inc = hv::decompose(t, kC);
    CHECK(inc.leibniz.ok());
    CHECK(inc.status == hv::DecomposeStatus::InconsistentTable);
  }

  TEST_CASE("sign audit") {
    const auto a = hv::sign_audit(6);
    CHECK(a.expected_pattern_holds);
    REQUIRE(a.entries.size() == 6);
    for (const auto& e : a.entries) {
      const bool expected = e.kind == OuterKind::D1 || e.sign == kC;
      CHECK(e.pass == expected);
      if (e.kind == OuterKind::D2 && e.sign == kP) {
        REQUIRE(e.first_violation);
        CHECK(e.first_violation->first == BasisSymbol::L(1));
        CHECK(e.first_violation->second == BasisSymbol::L(-1));
        CHECK(e.first_violation->defect == 4 * CLI());
      }
    }
    for (const auto& c : a.central_checks) {
      CHECK(c.computed == hv::Coefficient(-hv::sigma(c.sign) * (c.i * c.i + c.i)));
      CHECK(c.computed != c.reference);
    }
    CHECK_THROWS_AS(hv::sign_audit(1), std::invalid_argument);
  }

  TEST_CASE("D3 central defects cancel under the consistent sign") {
    const auto t = hv::outer_table(OuterKind::D3, 6);
    CHECK(hv::leibniz_check(t, kC).ok());
    const auto bad = hv::leibniz_check(t, kP);
    for (const auto& v : bad.violations) {
      // Under sigma = +1 the defect on (L_n, I_-n) is -2(n^2+n) C_I.
      if (v.first.kind == hv::SymbolKind::L && v.second.kind == hv::SymbolKind::I && v.first.index == -v.second.index) {
        const auto n = v.first.index;
        CHECK(v.defect == -2 * (n * n + n) * CI());
      }
    }
  }
}
