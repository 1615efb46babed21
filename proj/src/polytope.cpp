#include "crown/polytope.hpp"

namespace crown {

std::optional<RatVector> solve_exact(std::vector<RatVector> a, RatVector b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RatVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::set<RatVector> omega_vertices(const RootSystemData& rs) {
  std::vector<RatVector> rows;
  for (const auto& r : rs.positive_roots)
    if (r.tag != OrbitTag::Half) rows.push_back(r.coeffs);
  int n = rs.rank;
  int m = static_cast<int>(rows.size());
  std::set<RatVector> out;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<RatVector> a;
      RatVector b;
      for (int i = 0; i < n; ++i) {
        a.push_back(rows[pick[i]]);
        b.push_back((signs >> i) & 1 ? Rat(-1) : Rat(1));
      }
      auto y = solve_exact(a, b);
      if (y && omega_membership(rs, *y) != OmegaVerdict::Exterior) out.insert(*y);
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::set<RatVector> extremal_orbit_union(const RootSystemData& rs) {
  std::set<RatVector> out;
  for (const auto& b : extremal_points(rs))
    for (auto& v : weyl_orbit(rs, b.eta)) out.insert(v);
  return out;
}

}  // namespace crown
