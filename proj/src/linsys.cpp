#include "hv/linsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace hv {

LinSystem::LinSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {}

std::size_t LinSystem::add_unknown(std::string name) {
  unknowns_.push_back(std::move(name));
  return unknowns_.size() - 1;
}

void LinSystem::add_row(LinRow row) {
  for (auto it = row.coeffs.begin(); it != row.coeffs.end();) {
    if (it->first >= unknowns_.size()) throw std::out_of_range("row references unknown index " + std::to_string(it->first));
    if (it->second.is_zero())
      it = row.coeffs.erase(it);
    else
      ++it;
  }
  rows_.push_back(std::move(row));
}

std::optional<std::size_t> LinSystem::index_of(const std::string& name) const {
  auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
  if (it == unknowns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - unknowns_.begin());
}

bool SolutionSpace::kernel_forces_zero(std::size_t unknown) const {
  return std::all_of(kernel_basis.begin(), kernel_basis.end(),
                     [&](const Assignment& v) { return v.at(unknown).is_zero(); });
}

namespace {

// target -= factor * source, sparse.
void axpy(LinRow& target, const Coefficient& factor, const LinRow& source) {
  for (const auto& [u, c] : source.coeffs) {
    auto [it, inserted] = target.coeffs.try_emplace(u);
    it->second -= factor * c;
    if (it->second.is_zero()) target.coeffs.erase(it);
  }
  target.rhs -= factor * source.rhs;
}

}  // namespace

SolutionSpace solve(const LinSystem& system) {
  SolutionSpace out;
  out.unknowns = system.unknowns();
  const std::size_t n = system.num_unknowns();

  // Reduced pivot rows keyed by pivot unknown. Each stored row has a unit
  // pivot and no entries in any other pivot column.
  std::map<std::size_t, LinRow> reduced;

  for (std::size_t r = 0; r < system.rows().size(); ++r) {
    LinRow row = system.rows()[r];
    for (const auto& [p, prow] : reduced) {
      auto it = row.coeffs.find(p);
      if (it == row.coeffs.end()) continue;
      Coefficient f = it->second;
      axpy(row, f, prow);
    }
    if (row.coeffs.empty()) {
      if (!row.rhs.is_zero()) {
        out.status = SolveStatus::Inconsistent;
        out.inconsistent_row = r;
        return out;
      }
      continue;
    }
    const std::size_t pivot = row.coeffs.begin()->first;
    const Coefficient scale = row.coeffs.begin()->second.inv();
    for (auto& [u, c] : row.coeffs) c *= scale;
    row.rhs *= scale;
    for (auto& [p, prow] : reduced) {
      auto it = prow.coeffs.find(pivot);
      if (it == prow.coeffs.end()) continue;
      Coefficient f = it->second;
      axpy(prow, f, row);
    }
    reduced.emplace(pivot, std::move(row));
  }

  out.status = SolveStatus::Solved;
  out.particular.assign(n, Coefficient{});
  for (const auto& [p, prow] : reduced) {
    out.pivots.push_back(p);
    out.particular[p] = prow.rhs;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (reduced.count(u)) continue;
    out.free_unknowns.push_back(u);
    Assignment v(n, Coefficient{});
    v[u] = 1;
    for (const auto& [p, prow] : reduced) {
      auto it = prow.coeffs.find(u);
      if (it != prow.coeffs.end()) v[p] = -it->second;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

bool satisfies(const LinSystem& system, const Assignment& values, bool homogeneous) {
  if (values.size() != system.num_unknowns()) return false;
  for (const auto& row : system.rows()) {
    Coefficient lhs;
    for (const auto& [u, c] : row.coeffs) lhs += c * values[u];
    if (lhs != (homogeneous ? Coefficient{} : row.rhs)) return false;
  }
  return true;
}

}  // namespace hv
