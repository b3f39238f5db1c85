#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/derivation.hpp"
#include "hv/linsys.hpp"

namespace hv {

struct Provenance {
  enum class Kind { FromTable, FromFile, Synthetic };
  Kind kind = Kind::Synthetic;
  std::string descriptor;
};

/// A finite table x -> Delta(x). Nothing about linearity is assumed.
class TwoLocalAssignment {
 public:
  TwoLocalAssignment() = default;
  explicit TwoLocalAssignment(Provenance provenance) : provenance_(std::move(provenance)) {}

  /// Throws InputError on a duplicate key.
  void insert(const Element& key, Element value);
  bool contains(const Element& key) const { return entries_.count(key) != 0; }
  /// Throws MissingKey.
  const Element& at(const Element& key) const;

  const std::map<Element, Element>& entries() const { return entries_; }
  const Provenance& provenance() const { return provenance_; }

 private:
  std::map<Element, Element> entries_;
  Provenance provenance_;
};

/// Linear extension of a table onto the requested keys.
TwoLocalAssignment assignment_from_table(const DerivationTable& table, std::span<const Element> keys);

struct WitnessCertificate {
  std::pair<Element, Element> pair;
  DerivationParams params;
  std::int64_t window = 0;
};

struct WitnessSearch {
  ConstraintSystem constraints;
  SolutionSpace solution;

  /// Particular solution as params (free unknowns zero); nullopt when
  /// inconsistent.
  std::optional<DerivationParams> particular() const;
};

/// Solution space of the derivations D with D(x) = Delta(x), D(y) = Delta(y)
/// and support inside the window. Inconsistent only rules out witnesses at
/// this window.
WitnessSearch find_witness(const TwoLocalAssignment& assignment, const Element& x, const Element& y,
                           std::int64_t window, CocycleSign sign);

struct HomogeneityViolation {
  Coefficient k;
  Element x;
  Element expected;  // k * Delta(x)
  Element actual;    // Delta(k x)
};

struct HomogeneityReport {
  std::size_t checked = 0;
  std::vector<HomogeneityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks Delta(k x) = k Delta(x) on each sample. Both x and k x must be keys.
HomogeneityReport homogeneity_check(const TwoLocalAssignment& assignment,
                                    std::span<const std::pair<Coefficient, Element>> samples);

enum class Verdict { Certified, Refuted };

/// Which stage of the reduction failed.
enum class RefutationStage {
  LLineNotKilled,      // Delta_1(L_i) != 0 for some |i| <= M
  I0NotProportional,   // Delta_1(I_0) is not a multiple of I_0
  SampleResidual,      // Delta_2(s) != 0 on a sample
};

std::string to_string(RefutationStage s);

struct Refutation {
  RefutationStage stage;
  Element element;
  Element residual;
};

/// Outcome of the reduction Delta -> Delta_1 = Delta - D_{L0,L1} ->
/// Delta_2 = Delta_1 - lambda D1. Verification covers only the keys it
/// touched: L_i for |i| <= window, I_0, and the samples.
struct ReductionCertificate {
  WitnessCertificate witness01;
  Coefficient lambda;
  std::vector<std::pair<Element, Element>> residual_report;
  Verdict verdict = Verdict::Certified;
  std::optional<Refutation> refutation;
  std::size_t keys_checked = 0;

  bool certified() const { return verdict == Verdict::Certified; }
  /// The certified derivation: realize(witness01.params) + lambda D1.
  DerivationParams derivation() const;
};

/// Throws MissingKey if a required key is absent and NoWitnessAtWindow if
/// no (L_0, L_1) witness exists at this window.
ReductionCertificate reduce_by_theorem(const TwoLocalAssignment& assignment, std::int64_t window,
                                       std::span<const Element> samples, CocycleSign sign);

struct KernelCase {
  std::string label;
  Element input;
  std::size_t dimension = 0;
  std::vector<std::string> forced_zero;
  bool passed = false;
  std::string detail;
};

struct LemmaKernelReport {
  std::int64_t window = 0;
  CocycleSign sign = CocycleSign::Consistent;
  std::vector<KernelCase> cases;
  bool ok() const;
};

/// Kernels of the single zero constraints D(L_i) = 0 (|i| <= M),
/// D(I_0) = 0 and D(L_{2p} + I_p) = 0 (1 <= |p|, 2|p| <= M), each checked
/// against its expected witness shape:
///   L_i:          dim 3 (i != 0) or 2 (i = 0), i beta + (i+1) gamma = 0
///   I_0:          dim 4M+2, forced zero set exactly {alpha, beta}
///   L_{2p}+I_p:   alpha = 0, 2p beta + (2p+1) gamma = 0, a[2p] = b[p]
LemmaKernelReport lemma_kernel_suite(std::int64_t window, CocycleSign sign = CocycleSign::Consistent);

// --- Synthetic assignments --------------------------------------------------

struct HiddenDerivation {
  DerivationParams params;
};

/// Images of realize(params), multiplied by `factor` on every key with a
/// nonzero `trigger` component.
struct Scaled {
  DerivationParams params;
  BasisSymbol trigger;
  Coefficient factor;
};

/// Piecewise rule: keys with a nonzero `trigger` component are sent through
/// realize(when_present), every other key through realize(when_absent).
struct NonAdditive {
  BasisSymbol trigger;
  DerivationParams when_present;
  DerivationParams when_absent;
};

using SynthesisKind = std::variant<HiddenDerivation, Scaled, NonAdditive>;

TwoLocalAssignment synthesize_assignment(const SynthesisKind& kind, std::span<const Element> keys, CocycleSign sign);

/// Keys the reduction needs: L_i for |i| <= window, and I_0.
std::vector<Element> reduction_keys(std::int64_t window);

/// Deterministic samples: thirds of pure-I (I terms, C_LI, C_I), pure-L
/// (L terms, C_L) and mixed elements, in that rotation, indices in
/// [-max_index, max_index].
std::vector<Element> default_samples(std::size_t count, std::int64_t max_index, std::uint64_t seed);

}  // namespace hv
