#include "crown/char_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "crown/errors.hpp"

namespace crown {

namespace {
constexpr long long kOracleLimit = 50000;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  p.sign.assign(n, 1);
  return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  int n = static_cast<int>(image.size());
  SignedPerm r;
  r.image.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    int j = o.image[i];
    r.image[i] = image[j];
    r.sign[i] = o.sign[i] * sign[j];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  int n = static_cast<int>(image.size());
  SignedPerm r;
  r.image.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.image[image[i]] = i;
    r.sign[image[i]] = sign[i];
  }
  return r;
}

std::uint64_t SignedPerm::key() const {
  std::uint64_t k = 0;
  for (size_t i = 0; i < image.size(); ++i) {
    std::uint64_t cell = static_cast<std::uint64_t>(image[i]) | (sign[i] < 0 ? 16u : 0u);
    k |= cell << (5 * i);
  }
  return k;
}

int SignedPerm::det() const {
  int n = static_cast<int>(image.size());
  int d = 1;
  for (int s : sign) d *= s;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) d = -d;
  }
  return d;
}

void SignedPerm::cycle_type(std::vector<int>& positive, std::vector<int>& negative) const {
  int n = static_cast<int>(image.size());
  positive.clear();
  negative.clear();
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, s = 1;
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      s *= sign[j];
      ++len;
    }
    (s > 0 ? positive : negative).push_back(len);
  }
  std::sort(positive.rbegin(), positive.rend());
  std::sort(negative.rbegin(), negative.rend());
}

CharacterOracle::CharacterOracle(const WeylType& t, unsigned seed) : type_(t) {
  if (t.letter != 'A' && t.letter != 'B' && t.letter != 'C' && t.letter != 'D')
    throw Error(ErrorKind::UnsupportedType, "oracle supports A, B, C, D only");
  if ((t.letter == 'D' && t.rank < 2) || t.rank < 1) throw Error(ErrorKind::UnsupportedType, "rank too small");
  if (weyl_group_order(t) > kOracleLimit)
    throw Error(ErrorKind::TooLarge, t.label() + " has more than " + std::to_string(kOracleLimit) + " elements");
  n_ = t.letter == 'A' ? t.rank + 1 : t.rank;
  auto swap_gen = [&](int i) {
    auto g = SignedPerm::identity(n_);
    std::swap(g.image[i], g.image[i + 1]);
    return g;
  };
  for (int i = 0; i + 1 < n_; ++i) gens_.push_back(swap_gen(i));
  if (t.letter == 'B' || t.letter == 'C') {
    auto g = SignedPerm::identity(n_);
    g.sign[n_ - 1] = -1;
    gens_.push_back(g);
  } else if (t.letter == 'D') {
    auto g = SignedPerm::identity(n_);
    std::swap(g.image[n_ - 2], g.image[n_ - 1]);
    g.sign[n_ - 2] = -1;
    g.sign[n_ - 1] = -1;
    gens_.push_back(g);
  }
  enumerate();
  build_classes();
  build_characters(seed);
  compute_b_invariants();
  assign_labels();
}

void CharacterOracle::enumerate() {
  std::unordered_map<std::uint64_t, int> seen;
  elements_.push_back(SignedPerm::identity(n_));
  seen[elements_[0].key()] = 0;
  for (size_t idx = 0; idx < elements_.size(); ++idx)
    for (const auto& g : gens_) {
      auto x = g * elements_[idx];
      if (seen.emplace(x.key(), 0).second) elements_.push_back(x);
    }
  if (static_cast<long long>(elements_.size()) != weyl_group_order(type_))
    throw Error(ErrorKind::TooLarge, "group enumeration size mismatch");
}

void CharacterOracle::build_classes() {
  for (const auto& x : elements_) {
    if (class_of_.count(x.key())) continue;
    int id = static_cast<int>(classes_.size());
    OracleClass c;
    c.rep = x;
    x.cycle_type(c.positive_cycles, c.negative_cycles);
    std::vector<SignedPerm> stack{x};
    class_of_[x.key()] = id;
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      ++c.size;
      if (std::all_of(y.sign.begin(), y.sign.end(), [](int s) { return s > 0; })) ++c.unsigned_count;
      for (const auto& g : gens_) {
        auto z = g * y * g;
        if (class_of_.emplace(z.key(), id).second) stack.push_back(z);
      }
    }
    classes_.push_back(c);
    det_of_class_.push_back(x.det());
  }
}

void CharacterOracle::build_characters(unsigned seed) {
  int h = static_cast<int>(classes_.size());
  // c[i][j][k] = #{(x, y) : x in C_i, y in C_j, x y = z_k}
  std::vector<long long> c(static_cast<size_t>(h) * h * h, 0);
  auto at = [&](int i, int j, int k) -> long long& { return c[(static_cast<size_t>(i) * h + j) * h + k]; };
  for (int k = 0; k < h; ++k) {
    const auto& z = classes_[k].rep;
    for (const auto& x : elements_) {
      auto y = x.inverse() * z;
      ++at(class_of_.at(x.key()), class_of_.at(y.key()), k);
    }
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.5, 1.5);
  long long order = this->order();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<double> r(h);
    for (auto& v : r) v = unif(rng);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(h, h);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        for (int k = 0; k < h; ++k) m(j, k) += r[i] * static_cast<double>(at(i, j, k));
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) continue;
    auto ev = es.eigenvalues();
    bool distinct = true;
    for (int a = 0; a < h && distinct; ++a)
      for (int b = a + 1; b < h; ++b)
        if (std::abs(ev(a) - ev(b)) < 1e-6 * (1 + std::abs(ev(a)))) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    std::vector<OracleCharacter> chars;
    bool ok = true;
    for (int a = 0; a < h && ok; ++a) {
      Eigen::VectorXcd v = es.eigenvectors().col(a);
      if (std::abs(v(0)) < 1e-12) {
        ok = false;
        break;
      }
      v /= v(0);
      double norm = 0;
      for (int j = 0; j < h; ++j) norm += std::norm(v(j)) / static_cast<double>(classes_[j].size);
      double deg = std::sqrt(static_cast<double>(order) / norm);
      OracleCharacter ch;
      ch.degree = std::llround(deg);
      for (int j = 0; j < h; ++j) {
        std::complex<double> val = v(j) * deg / static_cast<double>(classes_[j].size);
        if (std::abs(val.imag()) > 1e-6 || std::abs(val.real() - std::round(val.real())) > 1e-6) ok = false;
        ch.values.push_back(std::llround(val.real()));
      }
      chars.push_back(ch);
    }
    if (!ok) continue;
    // exact orthogonality
    for (int a = 0; a < h && ok; ++a)
      for (int b = 0; b < h && ok; ++b) {
        long long s = 0;
        for (int j = 0; j < h; ++j) s += classes_[j].size * chars[a].values[j] * chars[b].values[j];
        if (s != (a == b ? order : 0)) ok = false;
      }
    if (!ok) continue;
    std::sort(chars.begin(), chars.end(), [](const auto& x, const auto& y) {
      if (x.degree != y.degree) return x.degree < y.degree;
      return x.values > y.values;
    });
    chars_ = chars;
    return;
  }
  throw Error(ErrorKind::TooLarge, "character table did not stabilise for " + type_.label());
}

void CharacterOracle::compute_b_invariants() {
  int top = static_cast<int>(positive_root_count(type_.letter, type_.rank));
  int h = static_cast<int>(classes_.size());
  std::vector<std::vector<long long>> series(h);
  for (int j = 0; j < h; ++j) {
    std::vector<long long> s(top + 1, 0);
    s[0] = 1;
    auto multiply = [&](int k, int eps) {
      // s *= 1 / (1 - eps q^k)
      for (int d = k; d <= top; ++d) s[d] += eps * s[d - k];
    };
    for (int k : classes_[j].positive_cycles) multiply(k, 1);
    for (int k : classes_[j].negative_cycles) multiply(k, -1);
    series[j] = s;
  }
  for (auto& ch : chars_) {
    ch.b_invariant = -1;
    for (int d = 0; d <= top; ++d) {
      long long s = 0;
      for (int j = 0; j < h; ++j) s += classes_[j].size * ch.values[j] * series[j][d];
      if (s % order() != 0) throw Error(ErrorKind::TooLarge, "non-integral graded multiplicity");
      if (s != 0) {
        ch.b_invariant = d;
        break;
      }
    }
    if (ch.b_invariant < 0) throw Error(ErrorKind::TooLarge, "no occurrence up to the top degree");
  }
}

void CharacterOracle::assign_labels() {
  int h = static_cast<int>(classes_.size());
  std::vector<bool> done(chars_.size(), false);
  auto match = [&](const CharacterLabel& lab, const std::vector<long long>& vals) {
    for (size_t i = 0; i < chars_.size(); ++i)
      if (!done[i] && chars_[i].values == vals) {
        chars_[i].label = lab;
        done[i] = true;
        return true;
      }
    return false;
  };
  auto b_values = [&](const Partition& l, const Partition& m) {
    std::vector<long long> v;
    for (const auto& c : classes_) v.push_back(mn_hyperoctahedral(l, m, c.positive_cycles, c.negative_cycles));
    return v;
  };
  if (type_.letter == 'A') {
    for (auto& p : partitions_of(n_)) {
      std::vector<long long> v;
      for (const auto& c : classes_) v.push_back(mn_symmetric(p, c.positive_cycles));
      if (!match(CharacterLabel::partition(p), v)) throw Error(ErrorKind::UnsupportedLabel, "unmatched partition");
    }
  } else if (type_.letter == 'B' || type_.letter == 'C') {
    for (const auto& lab : irreducible_labels(type_))
      if (!match(lab, b_values(lab.lambda, lab.mu)))
        throw Error(ErrorKind::UnsupportedLabel, "unmatched bipartition " + lab.to_string());
  } else {
    long long nfact = 1;
    for (int i = 2; i <= n_; ++i) nfact *= i;
    for (int k = n_; 2 * k >= n_; --k)
      for (auto& a : partitions_of(k))
        for (auto& b : partitions_of(n_ - k)) {
          if (a != b) {
            if (2 * k == n_ && a < b) continue;
            auto lab = CharacterLabel::d_pair(a, b);
            if (!match(lab, b_values(lab.lambda, lab.mu)))
              throw Error(ErrorKind::UnsupportedLabel, "unmatched pair " + lab.to_string());
            continue;
          }
          auto total = b_values(a, a);
          bool found = false;
          for (size_t i = 0; i < chars_.size() && !found; ++i)
            for (size_t j = 0; j < chars_.size() && !found; ++j) {
              if (i == j || done[i] || done[j]) continue;
              bool sum = true;
              for (int c = 0; c < h; ++c)
                if (chars_[i].values[c] + chars_[j].values[c] != total[c]) sum = false;
              if (!sum) continue;
              long long inner = 0;
              for (int c = 0; c < h; ++c) inner += classes_[c].unsigned_count * chars_[i].values[c];
              size_t first = inner == nfact ? i : j;
              size_t second = first == i ? j : i;
              chars_[first].label = CharacterLabel::d_split(a, 1);
              chars_[second].label = CharacterLabel::d_split(a, 2);
              done[first] = done[second] = true;
              found = true;
            }
          if (!found) throw Error(ErrorKind::UnsupportedLabel, "unmatched split pair");
        }
  }
  for (bool d : done)
    if (!d) throw Error(ErrorKind::UnsupportedLabel, "oracle character left unlabelled");
}

const OracleCharacter& CharacterOracle::by_label(const CharacterLabel& l) const {
  for (const auto& c : chars_)
    if (c.label == l) return c;
  throw Error(ErrorKind::UnsupportedLabel, "oracle has no character " + l.to_string());
}

int CharacterOracle::generator_class(int node) const { return class_of_.at(gens_.at(node - 1).key()); }

std::vector<long long> CharacterOracle::induced(int deleted_node, bool sign) const {
  std::vector<SignedPerm> sub;
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
    if (i != deleted_node - 1) sub.push_back(gens_[i]);
  std::unordered_map<std::uint64_t, int> seen;
  std::vector<SignedPerm> h{SignedPerm::identity(n_)};
  seen[h[0].key()] = 0;
  for (size_t idx = 0; idx < h.size(); ++idx)
    for (const auto& g : sub) {
      auto x = g * h[idx];
      if (seen.emplace(x.key(), 0).second) h.push_back(x);
    }
  std::vector<long long> weight(classes_.size(), 0);
  for (const auto& x : h) weight[class_of_.at(x.key())] += sign ? x.det() : 1;
  std::vector<long long> out;
  for (const auto& ch : chars_) {
    long long s = 0;
    for (size_t c = 0; c < classes_.size(); ++c) s += weight[c] * ch.values[c];
    if (s % static_cast<long long>(h.size()) != 0) throw Error(ErrorKind::TooLarge, "non-integral multiplicity");
    out.push_back(s / static_cast<long long>(h.size()));
  }
  return out;
}

int CharacterOracle::sign_twist_index(int i) const {
  std::vector<long long> v = chars_[i].values;
  for (size_t c = 0; c < v.size(); ++c) v[c] *= det_of_class_[c];
  for (size_t k = 0; k < chars_.size(); ++k)
    if (chars_[k].values == v) return static_cast<int>(k);
  throw Error(ErrorKind::UnsupportedLabel, "sign twist not found");
}

}  // namespace crown
