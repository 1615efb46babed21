#include "crown/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "crown/errors.hpp"

namespace crown {

std::string DiagramComponent::label() const {
  return std::string(1, letter) + "_" + std::to_string(rank);
}

std::string DiagramClass::label() const {
  if (!finite) return "not finite type";
  if (components.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "x";
    s += components[i].label();
  }
  return s;
}

IntMatrix delete_node(const IntMatrix& m, int node) {
  IntMatrix r;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (i == node) continue;
    std::vector<int> row;
    for (int j = 0; j < static_cast<int>(m.size()); ++j)
      if (j != node) row.push_back(m[i][j]);
    r.push_back(row);
  }
  return r;
}

namespace {

struct Graph {
  const IntMatrix& a;
  std::vector<int> nodes;

  std::vector<int> neighbours(int v) const {
    std::vector<int> r;
    for (int w : nodes)
      if (w != v && a[v][w] != 0) r.push_back(w);
    return r;
  }
  int mult(int v, int w) const { return a[v][w] * a[w][v]; }
  bool shorter(int v, int w) const { return std::abs(a[v][w]) > std::abs(a[w][v]); }
};

// Walk a path starting at endpoint `start`.
std::vector<int> walk_path(const Graph& g, int start) {
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : g.neighbours(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

// Walk from the branch node outward through neighbour `first`.
std::vector<int> walk_arm(const Graph& g, int branch, int first) {
  std::vector<int> out{first};
  int prev = branch, cur = first;
  while (true) {
    int next = -1;
    for (int w : g.neighbours(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

bool classify_component(const Graph& g, DiagramComponent& out) {
  const auto& nodes = g.nodes;
  int n = static_cast<int>(nodes.size());
  out.rank = n;
  if (n == 1) {
    out.letter = 'A';
    out.order = nodes;
    return true;
  }
  int edges = 0, doubles = 0, triples = 0, branch = -1, branches = 0;
  for (int v : nodes) {
    auto nb = g.neighbours(v);
    if (nb.size() > 3) return false;
    if (nb.size() == 3) {
      ++branches;
      branch = v;
    }
    for (int w : nb) {
      if (w < v) continue;
      ++edges;
      int m = g.mult(v, w);
      if (m == 2) ++doubles;
      else if (m == 3) ++triples;
      else if (m != 1) return false;
    }
  }
  if (edges != n - 1) return false;
  if (branches > 1) return false;
  if (triples) {
    if (n != 2) return false;
    int s = nodes[0], l = nodes[1];
    if (!g.shorter(s, l)) std::swap(s, l);
    out.letter = 'G';
    out.order = {s, l};
    return true;
  }
  if (doubles) {
    if (doubles > 1 || branches) return false;
    std::vector<int> ends;
    for (int v : nodes)
      if (g.neighbours(v).size() == 1) ends.push_back(v);
    auto path = walk_path(g, ends[0]);
    int di = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (g.mult(path[i], path[i + 1]) == 2) di = i;
    if (di == 0) {
      std::reverse(path.begin(), path.end());
      di = n - 2;
    }
    if (di == n - 2) {
      if (n == 2) {
        // B_2: node 1 long, node 2 short.
        if (g.shorter(path[0], path[1])) std::swap(path[0], path[1]);
        out.letter = 'B';
        out.order = path;
        return true;
      }
      out.letter = g.shorter(path[n - 1], path[n - 2]) ? 'B' : 'C';
      out.order = path;
      return true;
    }
    if (n == 4 && di == 1) {
      if (g.shorter(path[1], path[2])) std::reverse(path.begin(), path.end());
      out.letter = 'F';
      out.order = path;
      return true;
    }
    return false;
  }
  if (!branches) {
    std::vector<int> ends;
    for (int v : nodes)
      if (g.neighbours(v).size() == 1) ends.push_back(v);
    out.letter = 'A';
    out.order = walk_path(g, std::min(ends[0], ends[1]));
    return true;
  }
  std::vector<std::vector<int>> arms;
  for (int w : g.neighbours(branch)) arms.push_back(walk_arm(g, branch, w));
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
  if (p == 1 && q == 1) {
    out.letter = 'D';
    std::vector<int> ord(arms[2].rbegin(), arms[2].rend());
    ord.push_back(branch);
    int s1 = arms[0][0], s2 = arms[1][0];
    ord.push_back(std::min(s1, s2));
    ord.push_back(std::max(s1, s2));
    out.order = ord;
    return true;
  }
  if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    out.letter = 'E';
    // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
    std::vector<int> ord(n);
    ord[1] = arms[0][0];
    ord[3] = branch;
    ord[2] = arms[1][0];
    ord[0] = arms[1][1];
    for (size_t i = 0; i < r; ++i) ord[4 + i] = arms[2][i];
    out.order = ord;
    return true;
  }
  return false;
}

}  // namespace

DiagramClass classify_diagram(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedGraph, "non-square matrix");
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw Error(ErrorKind::MalformedGraph, "diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw Error(ErrorKind::MalformedGraph, "positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw Error(ErrorKind::MalformedGraph, "asymmetric zero pattern");
    }
  }
  DiagramClass out;
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, nodes;
    comp[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && a[v][w] != 0 && comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    Graph g{a, nodes};
    DiagramComponent c;
    if (!classify_component(g, c)) {
      out.finite = false;
      out.components.clear();
      return out;
    }
    out.components.push_back(c);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const DiagramComponent& x, const DiagramComponent& y) {
              if (x.letter != y.letter) return x.letter < y.letter;
              if (x.rank != y.rank) return x.rank > y.rank;
              return x.order < y.order;
            });
  return out;
}

std::vector<std::vector<int>> automorphic_orders(const DiagramComponent& c) {
  std::vector<std::vector<int>> out{c.order};
  int n = c.rank;
  if (c.letter == 'A' && n > 1) {
    out.emplace_back(c.order.rbegin(), c.order.rend());
  } else if (c.letter == 'D' && n == 4) {
    std::vector<int> leaves{c.order[0], c.order[2], c.order[3]};
    std::sort(leaves.begin(), leaves.end());
    out.clear();
    do {
      out.push_back({leaves[0], c.order[1], leaves[1], leaves[2]});
    } while (std::next_permutation(leaves.begin(), leaves.end()));
  } else if (c.letter == 'D' && n > 4) {
    auto o = c.order;
    std::swap(o[n - 2], o[n - 1]);
    out.push_back(o);
  } else if (c.letter == 'E' && n == 6) {
    auto o = c.order;
    std::swap(o[0], o[5]);
    std::swap(o[2], o[4]);
    out.push_back(o);
  }
  return out;
}

}  // namespace crown
