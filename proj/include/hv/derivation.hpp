#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/linsys.hpp"

namespace hv {

/// The three outer derivation classes.
///   D1: L_n -> 0, C_L -> 0, I_n -> I_n, C_LI -> C_LI, C_I -> 2 C_I
///   D2: L_n -> n I_n + delta_{n,0} C_LI, I_n -> -delta_{n,0} C_I,
///       C_L -> 24 C_LI, C_LI -> -C_I, C_I -> 0
///   D3: L_n -> (n+1) I_n, I_n -> 0, C_L -> 24 C_LI, C_LI -> -C_I, C_I -> 0
enum class OuterKind { D1, D2, D3 };

std::string to_string(OuterKind k);

Element apply_outer(OuterKind kind, const BasisSymbol& s);
Element apply_outer(OuterKind kind, const Element& x);

/// Coefficients of ad(z) + alpha D1 + beta D2 + gamma D3, where
/// z = sum a[j] L_j + sum b[j] I_j + l1 C_L + l2 C_LI + l3 C_I.
/// b[0], l1, l2, l3 do not change the induced map.
struct DerivationParams {
  std::map<std::int64_t, Coefficient> a;
  std::map<std::int64_t, Coefficient> b;
  Coefficient l1, l2, l3;
  Coefficient alpha, beta, gamma;

  Element inner_element() const;
  /// Copy with b[0], l1, l2, l3 and every zero entry dropped.
  DerivationParams modulo_center() const;
  /// Equality of the induced maps.
  bool equivalent(const DerivationParams& o) const;
  /// Largest |j| with a nonzero a[j] or b[j] (b[0] ignored).
  std::int64_t support_radius() const;

  Element apply(const Element& x, CocycleSign sign) const;

  DerivationParams& operator+=(const DerivationParams& o);
  friend bool operator==(const DerivationParams&, const DerivationParams&) = default;
};

/// A linear map given by its images on W_N. Every window symbol has exactly
/// one image; images may leave the window.
class DerivationTable {
 public:
  explicit DerivationTable(std::int64_t window);

  std::int64_t window() const { return window_; }
  const std::map<BasisSymbol, Element>& images() const { return images_; }

  bool in_domain(const BasisSymbol& s) const;
  bool covers(const Element& x) const;

  /// Throws std::out_of_range outside the window.
  const Element& image(const BasisSymbol& s) const;
  void set_image(const BasisSymbol& s, Element image);

  /// Linear extension over the window. Throws std::out_of_range if x has
  /// support outside it.
  Element apply(const Element& x) const;

  DerivationTable& operator+=(const DerivationTable& o);
  friend bool operator==(const DerivationTable&, const DerivationTable&) = default;

 private:
  std::int64_t window_;
  std::map<BasisSymbol, Element> images_;
};

DerivationTable ad(const Element& z, std::int64_t window, CocycleSign sign);
DerivationTable outer_table(OuterKind kind, std::int64_t window);
DerivationTable realize(const DerivationParams& params, std::int64_t window, CocycleSign sign);

struct LeibnizViolation {
  BasisSymbol first;
  BasisSymbol second;
  /// D([first, second]) - [D first, second] - [first, D second]
  Element defect;
};

struct LeibnizReport {
  std::vector<LeibnizViolation> violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool ok() const { return violations.empty(); }
};

/// Sweeps distinct pairs of window symbols in sweep order. Pairs whose
/// bracket leaves the window are skipped and counted. Throws DomainTooSmall
/// if nothing could be checked.
LeibnizReport leibniz_check(const DerivationTable& table, CocycleSign sign);

/// Index layout of the unknowns of a witness system at window M:
/// a[-M..M], b[-M..-1], b[1..M], alpha, beta, gamma. b[0] and the central
/// components of z are absent since they act trivially.
class ParamLayout {
 public:
  explicit ParamLayout(std::int64_t window);

  std::int64_t window() const { return window_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t a(std::int64_t j) const;
  std::size_t b(std::int64_t j) const;
  std::size_t alpha() const { return size() - 3; }
  std::size_t beta() const { return size() - 2; }
  std::size_t gamma() const { return size() - 1; }

  DerivationParams unit(std::size_t u) const;
  DerivationParams to_params(const Assignment& v) const;

 private:
  std::int64_t window_;
  std::vector<std::string> names_;
};

/// A constraint output that no unknown in the window can reach: the needed
/// shift exceeds M.
struct UnrepresentableConstraint {
  std::size_t constraint;
  BasisSymbol symbol;
};

struct ConstraintSystem {
  ParamLayout layout;
  LinSystem system;
  std::vector<UnrepresentableConstraint> unrepresentable;
};

/// Default unknown window for a constraint set: largest input index plus
/// largest output index.
std::int64_t default_constraint_window(std::span<const std::pair<Element, Element>> constraints);

/// Rows asserting (ad(z) + alpha D1 + beta D2 + gamma D3)(x) = y coefficient
/// by coefficient, for every constraint (x, y). Rows follow constraint order,
/// then canonical symbol order.
ConstraintSystem constraint_system(std::span<const std::pair<Element, Element>> constraints, CocycleSign sign,
                                   std::optional<std::int64_t> window = std::nullopt);

enum class DecomposeStatus { Ok, NotADerivation, InconsistentTable };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Ok;
  /// Reported modulo center. Present iff status is Ok.
  std::optional<DerivationParams> params;
  LeibnizReport leibniz;
  std::int64_t unknown_window = 0;
};

DecomposeResult decompose(const DerivationTable& table, CocycleSign sign);

struct AuditEntry {
  OuterKind kind;
  CocycleSign sign;
  bool pass = false;
  std::optional<LeibnizViolation> first_violation;
  std::size_t violations = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
};

/// C_LI coefficient carried by b[-i] when ad(b[-i] I_{-i}) hits L_i.
struct CentralCoefficientCheck {
  std::int64_t i;
  CocycleSign sign;
  Coefficient computed;
  Coefficient reference;  // i^2 - i
};

struct AuditReport {
  std::int64_t max_degree = 0;
  std::vector<AuditEntry> entries;
  bool expected_pattern_holds = false;
  std::vector<CentralCoefficientCheck> central_checks;
  std::vector<std::string> notes;
};

/// Leibniz sweeps of D1, D2, D3 under both signs. The expected pattern is
/// D1 passing under both, D2 and D3 passing only under the consistent sign.
AuditReport sign_audit(std::int64_t max_degree);

}  // namespace hv
