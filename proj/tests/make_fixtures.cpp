// Regenerates the golden CLI fixture corpus:
//   make_fixtures <output-dir>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hv/derivation.hpp"
#include "hv/expr.hpp"
#include "hv/random.hpp"
#include "hv/report.hpp"
#include "hv/two_local.hpp"

namespace {

void write(const std::filesystem::path& path, const hv::Json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

std::vector<hv::Element> with_keys(std::vector<hv::Element> keys, const std::vector<hv::Element>& samples) {
  keys.insert(keys.end(), samples.begin(), samples.end());
  return keys;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const auto sign = hv::CocycleSign::Consistent;
  constexpr std::int64_t window = 3;

  const auto samples = hv::default_samples(12, window, 20240601);
  write(dir / "samples.json", hv::samples_to_json(samples));
  // (k, x) pairs for homogeneity checks; both x and k x become keys.
  hv::Rng rng(20240602);
  hv::Json pairs = hv::Json::array();
  std::vector<hv::Element> scaled;
  for (std::size_t i = 0; i < 20; ++i) {
    const hv::Coefficient k = rng.coefficient(20);
    const hv::Element& x = samples[i % samples.size()];
    pairs.push_back(hv::Json{{"k", k.to_string()}, {"x", hv::format(x)}});
    scaled.push_back(k * x);
  }
  write(dir / "homogeneity.json", hv::Json{{"pairs", pairs}});
  auto keys = with_keys(hv::reduction_keys(window), samples);
  for (const auto& kx : scaled)
    if (std::find(keys.begin(), keys.end(), kx) == keys.end()) keys.push_back(kx);

  // ad(L_2) + 3 D1
  hv::DerivationParams hidden;
  hidden.a[2] = 1;
  hidden.alpha = 3;
  write(dir / "certified_assignment.json",
        hv::assignment_to_json(hv::synthesize_assignment(hv::HiddenDerivation{hidden}, keys, sign), sign));

  hv::DerivationParams d2;
  d2.beta = 1;
  write(dir / "d2_assignment.json",
        hv::assignment_to_json(hv::synthesize_assignment(hv::HiddenDerivation{d2}, keys, sign), sign));

  hv::DerivationParams one_d1, two_d1;
  one_d1.alpha = 1;
  two_d1.alpha = 2;
  write(dir / "nonadditive_assignment.json",
        hv::assignment_to_json(
            hv::synthesize_assignment(hv::NonAdditive{hv::BasisSymbol::I(1), one_d1, two_d1}, keys, sign), sign));
  write(dir / "scaled_assignment.json",
        hv::assignment_to_json(
            hv::synthesize_assignment(hv::Scaled{one_d1, hv::BasisSymbol::I(1), 2}, keys, sign), sign));

  // ad(L_5) has no witness with support in [-3, 3].
  hv::DerivationParams far;
  far.a[5] = 1;
  write(dir / "far_assignment.json",
        hv::assignment_to_json(hv::synthesize_assignment(hv::HiddenDerivation{far}, keys, sign), sign));

  write(dir / "table_d2.json", hv::table_to_json(hv::outer_table(hv::OuterKind::D2, 4), sign));
  hv::DerivationParams mixed;
  mixed.a[-1] = hv::Coefficient(mpz_class(3), mpz_class(2));
  mixed.b[2] = -5;
  mixed.alpha = 7;
  mixed.gamma = hv::Coefficient(mpz_class(-1), mpz_class(4));
  write(dir / "table_mixed.json", hv::table_to_json(hv::realize(mixed, 4, sign), sign));
  return 0;
}
