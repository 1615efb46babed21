#include "tables.hpp"

namespace crown::cli {

namespace {

std::string w(int j, int d = 1) { return "w" + std::to_string(j) + (d == 1 ? "" : "/" + std::to_string(d)); }

// constant + c_long m1 + c_other m2 + c_half mh
AffineForm form(Rat constant, Rat c_long, Rat c_other = Rat(0), Rat c_half = Rat(0)) {
  return {constant, c_half, c_long, c_other};
}

CharacterLabel part(Partition p) { return CharacterLabel::partition(std::move(p)); }
CharacterLabel bip(Partition l, Partition m) { return CharacterLabel::bipartition(std::move(l), std::move(m)); }
CharacterLabel dpair(Partition l, Partition m) { return CharacterLabel::d_pair(std::move(l), std::move(m)); }

std::string cartan(char letter, int rank) { return std::string(1, letter) + "_" + std::to_string(rank); }

}  // namespace

std::vector<std::pair<Family, int>> all_types(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::BC, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.emplace_back(Family::E, r);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

Table1Row expected_table1(Family f, int n) {
  Table1Row row{f, n, {}, {}};
  switch (f) {
    case Family::A:
      for (int j = 1; j <= n; ++j) row.extremal.push_back(w(j));
      row.minuscule = row.extremal;
      break;
    case Family::B:
      if (n == 2) {
        row.extremal = {w(1)};
        row.minuscule = {w(1)};
      } else {
        row.extremal = {w(1), w(n, 2)};
        row.minuscule = {w(1)};
      }
      break;
    case Family::C:
    case Family::BC:
      row.extremal = {w(n)};
      row.minuscule = {w(n)};
      break;
    case Family::D:
      row.extremal = {w(1), w(n - 1), w(n)};
      row.minuscule = row.extremal;
      break;
    case Family::E:
      if (n == 6) {
        row.extremal = {w(1), w(6)};
        row.minuscule = row.extremal;
      } else if (n == 7) {
        row.extremal = {w(2, 2), w(7)};
        row.minuscule = {w(7)};
      } else {
        row.extremal = {w(1, 2), w(2, 3)};
      }
      break;
    case Family::F:
      row.extremal = {w(4, 2)};
      break;
    case Family::G:
      row.extremal = {w(1, 3)};
      break;
  }
  return row;
}

std::vector<Table4Row> expected_table4(Family f, int n) {
  std::vector<Table4Row> rows;
  auto add = [&](std::string eta, std::string aff, CharacterLabel sigma, AffineForm s, std::string deg,
                 bool sym = false, bool corrected = false) {
    rows.push_back({f, n, std::move(eta), std::move(aff), std::move(sigma), s, std::move(deg), sym, corrected});
  };
  switch (f) {
    case Family::A: {
      // A_{2r}: (2r-j+1, j), j(1-(2r+2-j)m/2); A_{2r-1}: (2r-j, j), j(1-(2r+1-j)m/2), d = 1 iff m=1 & j=r.
      int top = n + 1;  // 2r+1 or 2r
      for (int j = 1; j <= n; ++j) {
        int i = std::min(j, top - j);
        Rat jj(i);
        AffineForm s = form(jj, -jj * Rat(top + 1 - i, 2));
        std::string deg = (top % 2 == 0 && 2 * i == top) ? "m=1" : "never";
        add(w(j), cartan('A', n), part({top - i, i}), s, deg, i != j);
      }
      break;
    }
    case Family::B: {
      if (n == 2) {
        // same space as C_2; the BC_{2r} row at r = 1 with mh = 0 and the roles of m1, m2 as in C_2
        add(w(1), "B_2", bip({1}, {1}), form(1, -1, -1), "never");
        break;
      }
      add(w(1), cartan('B', n), bip({n - 1}, {1}), form(1, -(n - 1), -1), "never");
      if (n == 3) {
        add(w(3, 2), "A_3", part({3, 1}), form(1, -2), "never");
      } else if (n % 2 == 0) {
        int r = n / 2;
        add(w(n, 2), cartan('D', n), CharacterLabel::d_split({r}, 1), form(r, -r * r), "m1=1", false, true);
      } else {
        int r = (n - 1) / 2;
        add(w(n, 2), cartan('D', n), dpair({r + 1}, {r}), form(r, -r * (r + 1)), "never");
      }
      break;
    }
    case Family::C:
    case Family::BC: {
      if (n == 1) {
        add(w(1), "A_1", part({1, 1}), form(1, -1), "m1=1");
      } else if (n % 2 == 0) {
        int r = n / 2;
        add(w(n), cartan('C', n), bip({r}, {r}), form(r, -r, -r * r), "never");
      } else {
        int r = (n - 1) / 2;
        add(w(n), cartan('C', n), bip({r}, {r + 1}), form(r + 1, -(r + 1), -(r + 1) * r), "m1=1");
      }
      break;
    }
    case Family::D: {
      add(w(1), cartan('D', n), dpair({n - 1, 1}, {}), form(2, -n), "m=1");
      if (n % 2 == 0) {
        int r = n / 2;
        auto sigma = CharacterLabel::d_split({r}, 1);
        add(w(n - 1), cartan('D', n), sigma, form(r, -r * r), "m=1", true, true);
        add(w(n), cartan('D', n), sigma, form(r, -r * r), "m=1", false, true);
      } else {
        int r = (n - 1) / 2;
        auto sigma = dpair({r + 1}, {r});
        add(w(n - 1), cartan('D', n), sigma, form(r, -r * (r + 1)), "never", true);
        add(w(n), cartan('D', n), sigma, form(r, -r * (r + 1)), "never");
      }
      break;
    }
    case Family::E:
      if (n == 6) {
        auto sigma = CharacterLabel::exceptional("E6", "phi20,2");
        add(w(1), "E_6", sigma, form(2, -9), "never");
        add(w(6), "E_6", sigma, form(2, -9), "never", true);
      } else if (n == 7) {
        add(w(2, 2), "A_7", part({7, 1}), form(1, -4), "never");
        add(w(7), "E_7", CharacterLabel::exceptional("E7", "phi21,3"), form(3, -15), "m=1");
      } else {
        add(w(1, 2), "D_8", dpair({7, 1}, {}), form(2, -8), "m=1");
        add(w(2, 3), "A_8", part({8, 1}), form(1, Rat(-9, 2)), "never");
      }
      break;
    case Family::F:
      add(w(4, 2), "B_4", bip({3}, {1}), form(1, -3, -1), "never");
      break;
    case Family::G:
      add(w(1, 3), "A_2", part({2, 1}), form(1, Rat(-3, 2)), "never");
      break;
  }
  return rows;
}

}  // namespace crown::cli
