#include "crown/labels.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "crown/errors.hpp"

namespace crown {

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition canonical(Partition p) {
  p.erase(std::remove(p.begin(), p.end(), 0), p.end());
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int c = 1; c <= p[0]; ++c) {
    int rows = 0;
    for (int v : p)
      if (v >= c) ++rows;
    t.push_back(rows);
  }
  return t;
}

int n_invariant(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

int content_sum(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) s += j - static_cast<int>(i);
  return s;
}

long long standard_tableaux(const Partition& p) {
  int n = size_of(p);
  Partition t = transpose(p);
  // n! / prod hooks, accumulated with cancellation to stay exact
  std::vector<int> hooks;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks.push_back(p[i] - j - 1 + t[j] - static_cast<int>(i) - 1 + 1);
  std::vector<int> num(n);
  std::iota(num.begin(), num.end(), 1);
  for (int h : hooks) {
    int rem = h;
    for (auto& v : num) {
      int g = std::gcd(v, rem);
      v /= g;
      rem /= g;
      if (rem == 1) break;
    }
    if (rem != 1) throw Error(ErrorKind::UnsupportedLabel, "hook cancellation failed");
  }
  long long r = 1;
  for (int v : num) r *= v;
  return r;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

CharacterLabel CharacterLabel::partition(Partition p) {
  CharacterLabel l;
  l.kind = LabelKind::Partition;
  l.lambda = canonical(std::move(p));
  return l;
}

CharacterLabel CharacterLabel::bipartition(Partition a, Partition b) {
  CharacterLabel l;
  l.kind = LabelKind::Bipartition;
  l.lambda = canonical(std::move(a));
  l.mu = canonical(std::move(b));
  return l;
}

CharacterLabel CharacterLabel::d_pair(Partition a, Partition b) {
  a = canonical(std::move(a));
  b = canonical(std::move(b));
  if (a == b) throw Error(ErrorKind::UnsupportedLabel, "equal D pair needs a split marker");
  if (std::make_tuple(size_of(a), a) < std::make_tuple(size_of(b), b)) std::swap(a, b);
  CharacterLabel l;
  l.kind = LabelKind::DUnordered;
  l.lambda = a;
  l.mu = b;
  return l;
}

CharacterLabel CharacterLabel::d_split(Partition a, int prime) {
  if (prime != 1 && prime != 2) throw Error(ErrorKind::UnsupportedLabel, "split marker must be 1 or 2");
  CharacterLabel l;
  l.kind = LabelKind::DSplit;
  l.lambda = canonical(std::move(a));
  l.mu = l.lambda;
  l.split = prime;
  return l;
}

CharacterLabel CharacterLabel::exceptional(std::string group, std::string name) {
  CharacterLabel l;
  l.kind = LabelKind::Exceptional;
  l.group = std::move(group);
  l.name = std::move(name);
  return l;
}

int CharacterLabel::rank() const { return size_of(lambda) + size_of(mu); }

namespace {

std::string join(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

std::string inner(const Partition& p) {
  if (p.empty()) return "-";
  if (p.size() == 1) return std::to_string(p[0]);
  return "(" + join(p) + ")";
}

}  // namespace

std::string CharacterLabel::to_string() const {
  switch (kind) {
    case LabelKind::Partition: {
      if (lambda.size() > 1 && std::all_of(lambda.begin(), lambda.end(), [&](int v) { return v == lambda[0]; }))
        return std::to_string(lambda[0]) + "^" + std::to_string(lambda.size());
      return "(" + join(lambda) + ")";
    }
    case LabelKind::Bipartition:
    case LabelKind::DUnordered:
      return "(" + inner(lambda) + "," + inner(mu) + ")";
    case LabelKind::DSplit:
      return "(" + inner(lambda) + "," + inner(mu) + ")" + (split == 1 ? "'" : "''");
    case LabelKind::Exceptional:
      return name;
  }
  return "?";
}

bool CharacterLabel::operator==(const CharacterLabel& o) const {
  return kind == o.kind && lambda == o.lambda && mu == o.mu && split == o.split && group == o.group &&
         name == o.name;
}

bool CharacterLabel::operator<(const CharacterLabel& o) const {
  return std::tie(kind, lambda, mu, split, group, name) <
         std::tie(o.kind, o.lambda, o.mu, o.split, o.group, o.name);
}

}  // namespace crown
