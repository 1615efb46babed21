#include "crown/weylchar.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "crown/errors.hpp"
#include "crown/exceptional.hpp"
#include "crown/rootsys.hpp"

namespace crown {

std::string WeylType::label() const { return std::string(1, letter) + "_" + std::to_string(rank); }

long long positive_root_count(char letter, int r) {
  switch (letter) {
    case 'A': return 1LL * r * (r + 1) / 2;
    case 'B':
    case 'C': return 1LL * r * r;
    case 'D': return 1LL * r * (r - 1);
    case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw Error(ErrorKind::UnsupportedType, std::string("unknown letter ") + letter);
}

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Family family_of(char letter) {
  switch (letter) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw Error(ErrorKind::UnsupportedType, std::string("unknown letter ") + letter);
}

long long order_of(char letter, int r) {
  switch (letter) {
    case 'A': return factorial(r + 1);
    case 'B':
    case 'C': return (1LL << r) * factorial(r);
    case 'D': return (1LL << (r - 1)) * factorial(r);
    case 'E': return r == 6 ? 51840LL : r == 7 ? 2903040LL : 696729600LL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw Error(ErrorKind::UnsupportedType, std::string("unknown letter ") + letter);
}

DiagramClass parabolic_class(const IsotropyPair& p) {
  if (p.deleted_node < 1 || p.deleted_node > p.affine.rank)
    throw Error(ErrorKind::UnsupportedPair, "deleted node out of range");
  auto rs = build_root_system(family_of(p.affine.letter), p.affine.rank);
  return classify_diagram(delete_node(rs.cartan, p.deleted_node - 1));
}

std::string exceptional_group_name(const WeylType& t) { return "E" + std::to_string(t.rank); }

// Beta-number rim hook removal: returns (smaller partition, height) pairs.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  std::vector<std::pair<Partition, int>> out;
  int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    int nb = beta[i] - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++height;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Partition mu(len);
    for (int k = 0; k < len; ++k) mu[k] = nbeta[k] - (len - 1 - k);
    out.emplace_back(canonical(mu), height);
  }
  return out;
}

struct SignedCycle {
  int length;
  int sign;
};

long long mn_b(const Partition& l, const Partition& m, const std::vector<SignedCycle>& cycles, size_t idx,
               std::map<std::tuple<Partition, Partition, size_t>, long long>& memo) {
  if (idx == cycles.size()) return l.empty() && m.empty() ? 1 : 0;
  auto key = std::make_tuple(l, m, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& c = cycles[idx];
  long long total = 0;
  for (auto& [sub, h] : remove_rim_hooks(l, c.length))
    total += (h % 2 ? -1 : 1) * mn_b(sub, m, cycles, idx + 1, memo);
  for (auto& [sub, h] : remove_rim_hooks(m, c.length))
    total += c.sign * (h % 2 ? -1 : 1) * mn_b(l, sub, cycles, idx + 1, memo);
  memo[key] = total;
  return total;
}

}  // namespace

long long weyl_group_order(const WeylType& t) { return order_of(t.letter, t.rank); }

long long parabolic_positive_roots(const IsotropyPair& p) {
  long long s = 0;
  for (const auto& c : parabolic_class(p).components) s += positive_root_count(c.letter, c.rank);
  return s;
}

long long parabolic_index(const IsotropyPair& p) {
  long long sub = 1;
  for (const auto& c : parabolic_class(p).components) sub *= order_of(c.letter, c.rank);
  return weyl_group_order(p.affine) / sub;
}

long long mn_symmetric(const Partition& lambda, const std::vector<int>& cycles) {
  std::vector<SignedCycle> sc;
  for (int c : cycles) sc.push_back({c, 1});
  std::sort(sc.begin(), sc.end(), [](auto& a, auto& b) { return a.length > b.length; });
  std::map<std::tuple<Partition, Partition, size_t>, long long> memo;
  return mn_b(canonical(lambda), {}, sc, 0, memo);
}

long long mn_hyperoctahedral(const Partition& lambda, const Partition& mu, const std::vector<int>& positive_cycles,
                             const std::vector<int>& negative_cycles) {
  std::vector<SignedCycle> sc;
  for (int c : positive_cycles) sc.push_back({c, 1});
  for (int c : negative_cycles) sc.push_back({c, -1});
  std::sort(sc.begin(), sc.end(), [](auto& a, auto& b) { return a.length > b.length; });
  std::map<std::tuple<Partition, Partition, size_t>, long long> memo;
  return mn_b(canonical(lambda), canonical(mu), sc, 0, memo);
}

long long dim_irrep(const CharacterLabel& l) {
  switch (l.kind) {
    case LabelKind::Partition: return standard_tableaux(l.lambda);
    case LabelKind::Bipartition:
    case LabelKind::DUnordered:
      return binom(l.rank(), size_of(l.lambda)) * standard_tableaux(l.lambda) * standard_tableaux(l.mu);
    case LabelKind::DSplit:
      return binom(l.rank(), size_of(l.lambda)) * standard_tableaux(l.lambda) * standard_tableaux(l.mu) / 2;
    case LabelKind::Exceptional: return find_exceptional(l.group, l.name).degree;
  }
  return 0;
}

int b_invariant(const CharacterLabel& l) {
  switch (l.kind) {
    case LabelKind::Partition: return n_invariant(l.lambda);
    case LabelKind::Bipartition: return 2 * n_invariant(l.lambda) + 2 * n_invariant(l.mu) + size_of(l.mu);
    case LabelKind::DUnordered:
    case LabelKind::DSplit:
      return 2 * n_invariant(l.lambda) + 2 * n_invariant(l.mu) + std::min(size_of(l.lambda), size_of(l.mu));
    case LabelKind::Exceptional: return find_exceptional(l.group, l.name).b_invariant;
  }
  return 0;
}

CharacterLabel sign_twist(const CharacterLabel& l) {
  switch (l.kind) {
    case LabelKind::Partition: return CharacterLabel::partition(transpose(l.lambda));
    case LabelKind::Bipartition: return CharacterLabel::bipartition(transpose(l.mu), transpose(l.lambda));
    case LabelKind::DUnordered: return CharacterLabel::d_pair(transpose(l.lambda), transpose(l.mu));
    case LabelKind::DSplit: {
      // The halves swap exactly when the hook lengths of lambda sum to an odd number,
      // i.e. when n(lambda) + n(lambda^t) + |lambda| is odd (checked against the W(D_4), W(D_6) tables).
      int hooks = n_invariant(l.lambda) + n_invariant(transpose(l.lambda)) + size_of(l.lambda);
      int prime = hooks % 2 ? 3 - l.split : l.split;
      return CharacterLabel::d_split(transpose(l.lambda), prime);
    }
    case LabelKind::Exceptional: break;
  }
  throw Error(ErrorKind::UnsupportedLabel, "no sign twist label for " + l.to_string());
}

namespace {

int sign_twisted_b(const CharacterLabel& l) {
  if (l.kind == LabelKind::Exceptional) return find_exceptional(l.group, l.name).sign_b;
  return b_invariant(sign_twist(l));
}

}  // namespace

std::vector<CharacterLabel> irreducible_labels(const WeylType& t) {
  std::vector<CharacterLabel> out;
  int n = t.rank;
  if (t.letter == 'A') {
    for (auto& p : partitions_of(n + 1)) out.push_back(CharacterLabel::partition(p));
  } else if (t.letter == 'B' || t.letter == 'C') {
    for (int k = n; k >= 0; --k)
      for (auto& a : partitions_of(k))
        for (auto& b : partitions_of(n - k)) out.push_back(CharacterLabel::bipartition(a, b));
  } else if (t.letter == 'D') {
    for (int k = n; 2 * k >= n; --k)
      for (auto& a : partitions_of(k))
        for (auto& b : partitions_of(n - k)) {
          if (a == b) {
            out.push_back(CharacterLabel::d_split(a, 1));
            out.push_back(CharacterLabel::d_split(a, 2));
          } else if (2 * k > n || a > b) {
            out.push_back(CharacterLabel::d_pair(a, b));
          }
        }
  } else {
    throw Error(ErrorKind::UnsupportedLabel, "no classical labels for " + t.label());
  }
  return out;
}

LabelMultiset induce_trivial(const IsotropyPair& p) {
  LabelMultiset out;
  int l = p.affine.rank, d = p.deleted_node;
  char x = p.affine.letter;
  if (x == 'A') {
    int n = l + 1;
    for (int k = 0; k <= std::min(d, n - d); ++k) out.push_back({CharacterLabel::partition({n - k, k}), 1});
    return out;
  }
  if ((x == 'B' || x == 'C') && d == 1) {
    out.push_back({CharacterLabel::bipartition({l}, {}), 1});
    out.push_back({CharacterLabel::bipartition({l - 1}, {1}), 1});
    out.push_back({CharacterLabel::bipartition({l - 1, 1}, {}), 1});
    return out;
  }
  if ((x == 'B' || x == 'C') && d == l) {
    for (int i = 0; i <= l; ++i) out.push_back({CharacterLabel::bipartition({i}, {l - i}), 1});
    return out;
  }
  if (x == 'D' && l >= 4 && d == 1) {
    out.push_back({CharacterLabel::d_pair({l}, {}), 1});
    out.push_back({CharacterLabel::d_pair({l - 1}, {1}), 1});
    out.push_back({CharacterLabel::d_pair({l - 1, 1}, {}), 1});
    return out;
  }
  if (x == 'D' && l >= 4 && d == l) {
    if (l % 2 == 0) out.push_back({CharacterLabel::d_split({l / 2}, 1), 1});
    for (int i = l / 2 + 1; i <= l; ++i) out.push_back({CharacterLabel::d_pair({i}, {l - i}), 1});
    return out;
  }
  if (x == 'E' && ((l == 6 && (d == 1 || d == 6)) || (l == 7 && d == 7))) {
    for (const auto& r : exceptional_group(exceptional_group_name(p.affine)))
      out.push_back({CharacterLabel::exceptional(r.group, r.name), 1});
    return out;
  }
  throw Error(ErrorKind::UnsupportedPair,
              "no induction rule for " + p.affine.label() + " minus node " + std::to_string(d));
}

LabelMultiset induce_sign(const IsotropyPair& p) {
  LabelMultiset out;
  for (auto& [lab, mult] : induce_trivial(p)) out.push_back({sign_twist(lab), mult});
  return out;
}

CharacterLabel j_induce_sign(const IsotropyPair& p) {
  long long target = parabolic_positive_roots(p);
  std::vector<CharacterLabel> hits;
  for (auto& [lab, mult] : induce_trivial(p)) {
    if (sign_twisted_b(lab) != target) continue;
    if (mult != 1) throw Error(ErrorKind::AmbiguousComponent, "multiplicity above one in degree " + std::to_string(target));
    hits.push_back(lab);
  }
  if (hits.size() != 1)
    throw Error(ErrorKind::AmbiguousComponent,
                std::to_string(hits.size()) + " components in degree " + std::to_string(target) + " for " +
                    p.affine.label());
  return hits[0];
}

std::vector<ReflectionClassDatum> reflection_values(const CharacterLabel& l, const WeylType& t) {
  std::vector<ReflectionClassDatum> out;
  int n = t.rank;
  switch (t.letter) {
    case 'A': {
      if (l.kind != LabelKind::Partition || size_of(l.lambda) != n + 1) break;
      std::vector<int> cyc{2};
      cyc.resize(n, 1);
      out.push_back({"reflection", true, 1LL * (n + 1) * n / 2, Rat(mn_symmetric(l.lambda, cyc))});
      return out;
    }
    case 'B':
    case 'C': {
      if (l.kind != LabelKind::Bipartition || l.rank() != n) break;
      std::vector<int> ones(n - 1, 1);
      out.push_back({"sign-change", t.letter == 'C', n, Rat(mn_hyperoctahedral(l.lambda, l.mu, ones, {1}))});
      if (n >= 2) {
        std::vector<int> cyc{2};
        cyc.resize(n - 1, 1);
        out.push_back({"transposition", t.letter == 'B', 1LL * n * (n - 1),
                       Rat(mn_hyperoctahedral(l.lambda, l.mu, cyc, {}))});
      }
      return out;
    }
    case 'D': {
      if ((l.kind != LabelKind::DUnordered && l.kind != LabelKind::DSplit) || l.rank() != n) break;
      std::vector<int> cyc{2};
      cyc.resize(n - 1, 1);
      Rat v(mn_hyperoctahedral(l.lambda, l.mu, cyc, {}));
      if (l.kind == LabelKind::DSplit) v /= 2;
      out.push_back({"reflection", true, 1LL * n * (n - 1), v});
      return out;
    }
    case 'E': {
      if (l.kind != LabelKind::Exceptional || l.group != exceptional_group_name(t)) break;
      const auto& r = find_exceptional(l.group, l.name);
      out.push_back({"reflection", true, exceptional_reflection_count(l.group), r.reflection_value});
      return out;
    }
  }
  throw Error(ErrorKind::UnsupportedLabel, "no reflection values for " + l.to_string() + " in " + t.label());
}

ReflectionClassDatum reflection_value_for_length(const CharacterLabel& label, const WeylType& t, bool long_root) {
  auto all = reflection_values(label, t);
  if (all.size() == 1) return all[0];
  for (const auto& d : all)
    if (d.long_roots == long_root) return d;
  throw Error(ErrorKind::UnsupportedLabel, "no reflection class of requested length in " + t.label());
}

}  // namespace crown
