#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hv/coefficient.hpp"

namespace hv {

/// One linear equation: sum of coeffs[u] * unknown[u] = rhs. Sparse; zero
/// coefficients are never stored.
struct LinRow {
  std::map<std::size_t, Coefficient> coeffs;
  Coefficient rhs;
};

/// A linear system over a registry of named unknowns.
class LinSystem {
 public:
  LinSystem() = default;
  explicit LinSystem(std::vector<std::string> unknowns);

  /// Registers an unknown and returns its index.
  std::size_t add_unknown(std::string name);

  /// Appends a row. Throws std::out_of_range if it references an unregistered
  /// unknown. Zero coefficients are dropped.
  void add_row(LinRow row);

  std::optional<std::size_t> index_of(const std::string& name) const;

  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::vector<LinRow>& rows() const { return rows_; }
  std::size_t num_unknowns() const { return unknowns_.size(); }

 private:
  std::vector<std::string> unknowns_;
  std::vector<LinRow> rows_;
};

/// Dense assignment of a value to every unknown, indexed like the registry.
using Assignment = std::vector<Coefficient>;

enum class SolveStatus { Inconsistent, Solved };

/// Result of solve(). When Solved, every solution is particular plus a
/// rational combination of kernel_basis. The kernel basis is read off the
/// reduced echelon form: one vector per free unknown, in increasing index
/// order, with that unknown set to 1 and every other free unknown set to 0.
struct SolutionSpace {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<std::string> unknowns;
  Assignment particular;
  std::vector<Assignment> kernel_basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_unknowns;
  /// Index of the first row that exposed the inconsistency.
  std::optional<std::size_t> inconsistent_row;

  bool solved() const { return status == SolveStatus::Solved; }
  std::size_t kernel_dimension() const { return kernel_basis.size(); }

  /// True when the unknown is identically zero across the whole kernel.
  bool kernel_forces_zero(std::size_t unknown) const;
  /// True when the unknown has the same value in every solution.
  bool determined(std::size_t unknown) const { return kernel_forces_zero(unknown); }
};

/// Exact Gauss-Jordan elimination. Pivots are taken at the lowest-indexed
/// unknown of each reduced row, so the result is the unique reduced row
/// echelon form and the particular solution (free unknowns zero) is
/// reproducible.
SolutionSpace solve(const LinSystem& system);

/// Checks every row exactly. With homogeneous = true, right-hand sides are
/// treated as zero.
bool satisfies(const LinSystem& system, const Assignment& values, bool homogeneous = false);

}  // namespace hv
