#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// the engine's bracket, outer maps, constraint builder or solver: structure
// constants are written out from the defining relations and rank is computed
// by a separate dense elimination.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// 0 = L, 1 = I, 2 = C_L, 3 = C_LI, 4 = C_I; centrals use index 0.
using Sym = std::pair<int, long>;
using Vec = std::map<Sym, mpq_class>;

inline mpq_class q(long num, long den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

inline void acc(Vec& v, Sym s, const mpq_class& c) {
  if (c == 0) return;
  v[s] += c;
  if (v[s] == 0) v.erase(s);
}

inline Vec basis_bracket(Sym x, Sym y, int sigma) {
  Vec out;
  const auto [kx, n] = x;
  const auto [ky, m] = y;
  if (kx >= 2 || ky >= 2) return out;
  const bool paired = n + m == 0;
  if (kx == 0 && ky == 0) {
    acc(out, {0, n + m}, mpq_class(n - m));
    if (paired) acc(out, {2, 0}, q(n * n * n - n, 12));
  } else if (kx == 0 && ky == 1) {
    acc(out, {1, n + m}, mpq_class(-m));
    if (paired) acc(out, {3, 0}, mpq_class(sigma * (n * n + n)));
  } else if (kx == 1 && ky == 0) {
    // [I_n, L_m] = n I_{n+m} - sigma delta (m^2 + m) C_LI
    acc(out, {1, n + m}, mpq_class(n));
    if (paired) acc(out, {3, 0}, mpq_class(-sigma * (m * m + m)));
  } else if (paired) {
    acc(out, {4, 0}, mpq_class(n));
  }
  return out;
}

inline Vec bracket(const Vec& x, const Vec& y, int sigma) {
  Vec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [s, c] : basis_bracket(a, b, sigma)) acc(out, s, ca * cb * c);
  return out;
}

// D1, D2, D3 on one symbol.
inline Vec outer(int which, Sym s) {
  Vec out;
  const auto [k, n] = s;
  if (which == 1) {
    if (k == 1) acc(out, s, 1);
    if (k == 3) acc(out, {3, 0}, 1);
    if (k == 4) acc(out, {4, 0}, 2);
  } else {
    if (k == 0) acc(out, {1, n}, mpq_class(which == 2 ? n : n + 1));
    if (which == 2 && k == 0 && n == 0) acc(out, {3, 0}, 1);
    if (which == 2 && k == 1 && n == 0) acc(out, {4, 0}, -1);
    if (k == 2) acc(out, {3, 0}, 24);
    if (k == 3) acc(out, {4, 0}, -1);
  }
  return out;
}

inline Vec outer(int which, const Vec& x) {
  Vec out;
  for (const auto& [s, c] : x)
    for (const auto& [t, d] : outer(which, s)) acc(out, t, c * d);
  return out;
}

using Matrix = std::vector<std::vector<mpq_class>>;

// Dense matrix of D(x) = 0 over a[-M..M], b[-M..M] minus b[0], alpha, beta,
// gamma (column order matches the engine's layout).
inline Matrix zero_constraint_matrix(const Vec& x, long window, int sigma) {
  std::vector<Vec> columns;
  for (long j = -window; j <= window; ++j) columns.push_back(bracket(Vec{{{0, j}, 1}}, x, sigma));
  for (long j = -window; j <= window; ++j)
    if (j != 0) columns.push_back(bracket(Vec{{{1, j}, 1}}, x, sigma));
  for (int w = 1; w <= 3; ++w) columns.push_back(outer(w, x));
  std::map<Sym, std::vector<mpq_class>> rows;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [s, v] : columns[c]) {
      auto& row = rows[s];
      row.resize(columns.size());
      row[c] = v;
    }
  Matrix out;
  for (auto& [s, row] : rows) out.push_back(row);
  return out;
}

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline bool annihilates(const Matrix& m, const std::vector<mpq_class>& v) {
  for (const auto& row : m) {
    mpq_class s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * v[k];
    if (s != 0) return false;
  }
  return true;
}

inline Vec jacobi_sum(const Vec& a, const Vec& b, const Vec& c, int sigma) {
  Vec out;
  for (const auto& t : {bracket(bracket(a, b, sigma), c, sigma), bracket(bracket(b, c, sigma), a, sigma),
                        bracket(bracket(c, a, sigma), b, sigma)})
    for (const auto& [s, v] : t) acc(out, s, v);
  return out;
}

}  // namespace oracle
