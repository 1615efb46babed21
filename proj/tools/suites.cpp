#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "crown/char_oracle.hpp"
#include "crown/errors.hpp"
#include "crown/exponents.hpp"
#include "crown/hypergeom.hpp"
#include "crown/maass.hpp"
#include "crown/models.hpp"
#include "crown/polytope.hpp"
#include "crown/rootsys.hpp"
#include "crown/spherical.hpp"
#include "crown/tolerances.hpp"
#include "crown/weylchar.hpp"
#include "tables.hpp"

namespace crown::cli {

namespace {

// Collects results for one suite.
class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // Exact check: measured is a mismatch count.
  void exact(const std::string& name, const std::vector<std::string>& mismatches, std::string detail = {}) {
    std::string d = detail;
    if (!mismatches.empty()) d = join(mismatches, 5) + (d.empty() ? "" : "; " + d);
    push(name, mismatches.empty() ? Status::Pass : Status::Fail, static_cast<double>(mismatches.size()), 0, d);
  }

  // measured <= tolerance
  void bound(const std::string& name, double measured, double tolerance, std::string detail = {}) {
    bool ok = std::isfinite(measured) && measured <= tolerance;
    push(name, ok ? Status::Pass : Status::Fail, measured, tolerance, std::move(detail));
  }

  void flag(const std::string& name, bool ok, double measured, double tolerance, std::string detail = {},
            Status on_failure = Status::Fail) {
    push(name, ok ? Status::Pass : on_failure, measured, tolerance, std::move(detail));
  }

  // Runs `body`, turning a library error into a failed entry.
  template <class F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      push(name, Status::Fail, NAN, 0, e.what());
    }
  }

  std::vector<VerificationResult> take() { return std::move(out_); }

 private:
  static std::string join(const std::vector<std::string>& v, size_t limit) {
    std::string s;
    for (size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > limit) s += "; +" + std::to_string(v.size() - limit) + " more";
    return s;
  }

  void push(const std::string& name, Status st, double measured, double tolerance, std::string detail) {
    out_.push_back({suite_, name, st, measured, tolerance, std::move(detail)});
  }

  std::string suite_;
  std::vector<VerificationResult> out_;
};

std::vector<std::string> labels_of(const std::vector<BoundaryPoint>& pts) {
  std::vector<std::string> v;
  for (const auto& p : pts) v.push_back(p.label());
  return v;
}

std::string fmt(double v) { return format_number(v); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rootsys", "weylchar", "tables", "complex",
                                                 "matrix",  "hypergeom", "maass", "stirling"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<VerificationResult> run_suite(const std::string& name, unsigned seed) {
  using Fn = std::vector<VerificationResult> (*)(unsigned);
  static const std::map<std::string, Fn> table = {
      {"rootsys", rootsys_suite}, {"weylchar", weylchar_suite},   {"tables", tables_suite},
      {"complex", complex_suite}, {"matrix", matrix_suite},       {"hypergeom", hypergeom_suite},
      {"maass", maass_suite},     {"stirling", stirling_suite}};
  if (name == "all") {
    std::vector<VerificationResult> all;
    for (const auto& n : suite_names()) {
      auto part = table.at(n)(seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::UnsupportedType, "unknown suite " + name);
  return it->second(seed);
}

std::vector<VerificationResult> rootsys_suite(unsigned) {
  Recorder rec("rootsys");
  rec.guarded("table1", [&] {
    std::vector<std::string> bad;
    for (auto [f, n] : all_types()) {
      auto rs = build_root_system(f, n);
      auto want = expected_table1(f, n);
      auto ext = labels_of(extremal_points(rs)), min = labels_of(minuscule_points(rs));
      if (ext != want.extremal || min != want.minuscule) bad.push_back(rs.label());
    }
    rec.exact("table1", bad, "all types of rank <= 8, E_7 includes w2/2");
  });
  rec.guarded("positive-root-counts", [&] {
    std::vector<std::string> bad;
    for (auto [f, n] : all_types()) {
      auto rs = build_root_system(f, n);
      if (static_cast<long long>(rs.positive_roots.size()) != expected_positive_root_count(f, n))
        bad.push_back(rs.label());
    }
    rec.exact("positive-root-counts", bad);
  });
  rec.guarded("affine-kernel", [&] {
    std::vector<std::string> bad;
    for (auto [f, n] : all_types()) {
      auto rs = build_root_system(f, n);
      std::vector<int> k = {1};
      k.insert(k.end(), rs.highest_root_coeffs.begin(), rs.highest_root_coeffs.end());
      for (size_t j = 0; j < k.size(); ++j) {
        long long sum = 0;
        for (size_t i = 0; i < k.size(); ++i) sum += static_cast<long long>(rs.affine_cartan[j][i]) * k[i];
        if (sum != 0) {
          bad.push_back(rs.label() + " row " + std::to_string(j));
          break;
        }
      }
    }
    rec.exact("affine-kernel", bad);
  });
  rec.guarded("polytope-vertices", [&] {
    std::vector<std::string> bad;
    for (auto [f, n] : all_types(3)) {
      auto rs = build_root_system(f, n);
      if (omega_vertices(rs) != extremal_orbit_union(rs)) bad.push_back(rs.label());
    }
    rec.exact("polytope-vertices", bad, "rank <= 3");
  });
  return rec.take();
}

std::vector<VerificationResult> weylchar_suite(unsigned seed) {
  Recorder rec("weylchar");
  std::vector<WeylType> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'D', 4}, {'D', 5}, {'D', 6}};
  std::vector<std::string> dims, bs, induced, sign_induced, refl, jind;
  rec.guarded("oracle", [&] {
    for (const auto& t : types) {
      CharacterOracle oracle(t, seed);
      std::string g = t.label();
      for (const auto& c : oracle.characters()) {
        std::string id = g + " " + c.label.to_string();
        if (dim_irrep(c.label) != c.degree) dims.push_back(id);
        if (b_invariant(c.label) != c.b_invariant) bs.push_back(id);
        for (int node = 1; node <= t.rank; ++node) {
          bool long_root = !(t.letter == 'B' && node == t.rank);
          auto datum = reflection_value_for_length(c.label, t, long_root);
          if (datum.value != Rat(c.values[oracle.generator_class(node)]))
            refl.push_back(id + " node " + std::to_string(node));
        }
      }
      // the parabolics that occur as isotropy pairs: any node in A, end nodes in B and D
      std::vector<int> nodes;
      for (int node = 1; node <= t.rank; ++node)
        if (t.letter == 'A' || node == 1 || node == t.rank) nodes.push_back(node);
      for (int node : nodes) {
        IsotropyPair pair{t, node};
        for (bool sign : {false, true}) {
          auto got = sign ? induce_sign(pair) : induce_trivial(pair);
          auto want = oracle.induced(node, sign);
          std::map<int, long long> by_index;
          bool unknown = false;
          for (const auto& [label, mult] : got) {
            try {
              by_index[static_cast<int>(&oracle.by_label(label) - &oracle.characters()[0])] += mult;
            } catch (const Error&) {
              unknown = true;
            }
          }
          bool ok = !unknown;
          for (size_t i = 0; i < want.size(); ++i) ok = ok && by_index[static_cast<int>(i)] == want[i];
          if (!ok) (sign ? sign_induced : induced).push_back(g + " node " + std::to_string(node));
        }
        // truncated induction: unique component of the sign-induced character with minimal b
        auto want = oracle.induced(node, true);
        int best_b = 1 << 30, count = 0, best = -1;
        for (size_t i = 0; i < want.size(); ++i) {
          if (want[i] == 0) continue;
          int b = oracle.characters()[i].b_invariant;
          if (b < best_b) {
            best_b = b;
            count = 1;
            best = static_cast<int>(i);
          } else if (b == best_b) {
            ++count;
          }
        }
        // j_induce_sign returns det tensor the j-induced sign character
        if (count != 1 || j_induce_sign(pair) != oracle.characters()[oracle.sign_twist_index(best)].label)
          jind.push_back(g + " node " + std::to_string(node));
      }
    }
    std::string scope = "S_2..S_5, W(B_2), W(B_3), W(D_4..6); induction at the isotropy parabolics";
    rec.exact("oracle-dimensions", dims, scope);
    rec.exact("oracle-b-invariants", bs, scope + "; D b-invariants follow the oracle");
    rec.exact("oracle-reflection-values", refl, scope);
    rec.exact("oracle-induced-trivial", induced, scope);
    rec.exact("oracle-induced-sign", sign_induced, scope);
    rec.exact("oracle-truncated-induction", jind, scope);
  });
  return rec.take();
}

std::vector<VerificationResult> tables_suite(unsigned) {
  Recorder rec("tables");
  rec.guarded("table4", [&] {
    std::vector<std::string> bad, corrected;
    for (auto [f, n] : all_types()) {
      if (f == Family::C) continue;  // the published table lists BC_n; C_n is checked against it below
      auto rs = build_root_system(f, n);
      auto want = expected_table4(f, n);
      auto pts = extremal_points(rs);
      if (pts.size() != want.size()) {
        bad.push_back(rs.label() + " row count");
        continue;
      }
      for (size_t i = 0; i < pts.size(); ++i) {
        auto rep = exponent_report(rs, pts[i]);
        const auto& w = want[i];
        std::string cell = rs.label() + " " + w.eta;
        if (pts[i].label() != w.eta) bad.push_back(cell + " eta " + pts[i].label());
        if (rep.isotropy.classified_affine_type != w.affine_type)
          bad.push_back(cell + " affine " + rep.isotropy.classified_affine_type);
        if (rep.leading_character != w.sigma) bad.push_back(cell + " sigma " + rep.leading_character.to_string());
        if (rep.leading_exponent != w.s) bad.push_back(cell + " s " + rep.leading_exponent.to_string(rs.simply_laced()));
        if (rep.degeneracy.description != w.degeneracy) bad.push_back(cell + " d " + rep.degeneracy.description);
        if (w.corrected) corrected.push_back(cell);
      }
    }
    rec.exact("table4", bad,
              "rank <= 8; degeneracy corrected to the computed tie at " + std::to_string(corrected.size()) +
                  " cells (D_2r w2r-1, w2r and B_2r w2r/2)");
  });
  rec.guarded("table4-c-matches-bc", [&] {
    std::vector<std::string> bad;
    for (int n = 2; n <= 8; ++n) {
      auto c = build_root_system(Family::C, n), bc = build_root_system(Family::BC, n);
      auto rc = exponent_report(c, extremal_points(c)[0]), rbc = exponent_report(bc, extremal_points(bc)[0]);
      AffineForm s = rbc.leading_exponent;
      s.c_half = Rat(0);
      if (rc.leading_character != rbc.leading_character || rc.leading_exponent != s ||
          rc.degeneracy.description != rbc.degeneracy.description)
        bad.push_back(c.label());
    }
    rec.exact("table4-c-matches-bc", bad);
  });
  rec.guarded("table4-degeneracy-tie", [&] {
    // s_{(r,r)'} and s_{((r+1),(r-1))} coincide at m = 1 for D_2r w2r and B_2r w2r/2
    std::vector<std::string> bad;
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::D, 4}, {Family::D, 6}, {Family::D, 8},
                                                           {Family::B, 4}, {Family::B, 6}, {Family::B, 8}}) {
      auto rs = build_root_system(f, n);
      auto pts = extremal_points(rs);
      auto rep = exponent_report(rs, pts.back());
      int r = n / 2;
      auto other = CharacterLabel::d_pair({r + 1}, {r - 1});
      bool found = false;
      for (const auto& e : rep.J) {
        if (e.label != other) continue;
        found = true;
        MultiplicityFunction one{Rat(0), Rat(1), Rat(1), false};
        if (e.s.evaluate(one) != rep.leading_exponent.evaluate(one) ||
            rep.leading_exponent.evaluate(one) != Rat(-r * (r - 1)))
          bad.push_back(rs.label());
      }
      if (!found) bad.push_back(rs.label() + " missing " + other.to_string());
    }
    rec.exact("table4-degeneracy-tie", bad, "s = -r(r-1) for both characters at m = 1");
  });
  return rec.take();
}

std::vector<VerificationResult> complex_suite(unsigned) {
  Recorder rec("complex");
  rec.guarded("complex-case", [&] {
    std::vector<std::string> bad;
    int checked = 0;
    for (auto [f, n] : all_types()) {
      if (f == Family::BC) continue;
      auto rs = build_root_system(f, n);
      for (const auto& eta : extremal_points(rs)) {
        auto c = complex_cross_check(rs, eta);
        ++checked;
        if (!c.ok) bad.push_back(rs.label() + " " + eta.label() + " " + std::to_string(c.value));
      }
    }
    rec.exact("complex-case", bad, std::to_string(checked) + " extremal points of reduced types, rank <= 8");
  });
  auto pinned = [&](Family f, int n, int j, long long want) {
    std::string name = "pinned-" + build_root_system(f, n).label();
    rec.guarded(name, [&] {
      auto rs = build_root_system(f, n);
      auto c = complex_cross_check(rs, boundary_point(rs, j));
      rec.flag(name, c.value == want && c.ok, static_cast<double>(c.value), 0, "expected " + std::to_string(want));
    });
  };
  pinned(Family::E, 6, 1, -16);
  pinned(Family::E, 7, 7, -27);
  return rec.take();
}

std::vector<VerificationResult> matrix_suite(unsigned seed) {
  Recorder rec("matrix");
  rec.guarded("so12-orbit-identity", [&] {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      double t = -M_PI / 4 + (k + 0.5) * (M_PI / 2) / 100;
      worst = std::max(worst, so12_identity_check(t).deviation);
    }
    rec.bound("so12-orbit-identity", worst, tol::kOrbitIdentity, "100 points in (-pi/4, pi/4)");
  });
  rec.guarded("boundary-map", [&] {
    auto r = so12_boundary_suite(seed);
    rec.bound("boundary-map", r.boundary_max_deviation, tol::kBoundaryMap,
              std::to_string(r.boundary_points) + " points, s in [0,10]");
    for (int fam = 0; fam < 3; ++fam) {
      std::string name = "horocycle-witness-" + std::to_string(fam + 1);
      bool ok = r.witness_failures[fam] == 0 && r.witness_max_residual[fam] <= tol::kWitness;
      rec.flag(name, ok, r.witness_max_residual[fam], tol::kWitness,
               std::to_string(r.witness_samples[fam]) + " samples, " + std::to_string(r.witness_failures[fam]) +
                   " without witness");
    }
    rec.flag("imaginary-no-witness", r.imaginary_witnesses == 0, r.imaginary_witnesses, 0,
             std::to_string(r.imaginary_samples) + " purely imaginary points");
  });
  rec.guarded("form-preservation", [&] {
    double worst = 0;
    for (int n = 2; n <= 4; ++n) worst = std::max(worst, so1n_form_deviation(n, 50, seed));
    rec.bound("form-preservation-so1n", worst, tol::kFormPreservation, "n = 2, 3, 4");
    double sp = std::max(sp_form_deviation(2, 50, seed), sp_form_deviation(3, 50, seed));
    rec.bound("form-preservation-sp", sp, tol::kFormPreservation, "n = 2, 3");
  });
  rec.guarded("sp-orbit-identity", [&] {
    auto c = sp_orbit_identity_check({0.3, -0.5, 0.7});
    rec.bound("sp-orbit-identity", std::max(c.invariant_deviation, c.block_deviation), tol::kOrbitIdentity);
  });
  for (int n : {2, 3}) {
    std::string name = "convexity-sl" + std::to_string(n);
    rec.guarded(name, [&] {
      auto r = convexity_check(n, 1000, seed + n);
      rec.flag(name, r.violations == 0 && r.chart_failures == 0, r.max_excess, tol::kConvexity,
               std::to_string(r.samples) + " samples, " + std::to_string(r.chart_failures) + " chart failures");
    });
  }
  rec.guarded("sp-region-flip", [&] {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    RMatrix z(2, 2);
    z << g(rng), g(rng), 0, g(rng);
    z(1, 0) = z(0, 1);
    z /= z.jacobiSvd().singularValues()(0);
    double flip = sp_flip_location(z, 0.9 + tol::kGridResolution / 2, tol::kGridResolution, 200);
    rec.bound("sp-region-flip", std::abs(flip - 1), tol::kGridResolution, "first outside point " + fmt(flip));
  });
  rec.guarded("su21-grid-agreement", [&] {
    auto g = su21_grid_agreement(50, seed);
    rec.flag("su21-grid-agreement", g.disagreements == 0, g.disagreements, 0,
             std::to_string(g.points) + " points, witness residual " + fmt(g.max_witness_residual));
  });
  rec.guarded("so1n-region", [&] {
    int bad = 0;
    for (double y : {0.5, 2.0, 3.9, 4.1}) {
      auto v = crown_region_check("SO(1,3)", {y, 0});
      if (!v.consistent) ++bad;
    }
    rec.flag("so1n-region", bad == 0, bad, 0, "closed form against zero-locus scan");
  });
  for (int n : {2, 3, 4}) {
    std::string name = "sln-phase-n" + std::to_string(n);
    rec.guarded(name, [&] {
      auto r = sln_phase_bound(n, 0.5, 10000, seed + n);
      rec.flag(name, r.violations == 0, r.max_phase, r.bound,
               std::to_string(r.samples) + " samples, exact maximum " + fmt(r.extremal_phase) + ", gap " + fmt(r.gap));
    });
  }
  return rec.take();
}

std::vector<VerificationResult> hypergeom_suite(unsigned) {
  Recorder rec("hypergeom");
  for (int q : {2, 3, 5}) {
    std::string name = "fit-q" + std::to_string(q);
    rec.guarded(name, [&] {
      auto f = exponent_fit(0, q, 0.7);
      rec.bound(name, std::abs(f.exponent_estimate - (1 - q)), tol::kExponentFit,
                "estimate " + fmt(f.exponent_estimate));
    });
  }
  rec.guarded("log-q1", [&] {
    auto f = exponent_fit(0, 1, 0.7);
    rec.flag("log-q1", f.log_degree_estimate == 1 && std::abs(f.exponent_estimate) <= tol::kExponentFit,
             f.exponent_estimate, tol::kExponentFit, "log degree " + std::to_string(f.log_degree_estimate));
  });
  rec.guarded("terminating", [&] {
    auto f = exponent_fit(0, 3, -1.5);
    rec.flag("terminating", f.exponent_estimate >= -tol::kExponentFit && std::isfinite(f.max_abs), f.max_abs,
             tol::kExponentFit, "lambda = -(p/4 + q/2), estimate " + fmt(f.exponent_estimate));
  });
  rec.guarded("fit-stability", [&] {
    double worst = 0;
    FitGrid coarse;
    coarse.points = 21;
    for (int q : {2, 3, 5}) worst = std::max(worst, std::abs(exponent_fit(0, q, 0.7).exponent_estimate -
                                                             exponent_fit(0, q, 0.7, coarse).exponent_estimate));
    rec.bound("fit-stability", worst, tol::kFitStability, "41 against 21 grid points");
  });
  rec.guarded("spherical-base-point", [&] {
    rec.bound("spherical-base-point", std::abs(spherical_so12(1.3, 0) - 1.0), tol::kSymmetry);
  });
  rec.guarded("spherical-symmetry", [&] {
    double worst = 0;
    for (double lam : {0.5, 1.0, 2.0, 3.0})
      for (double y : {0.3, 0.7, 1.2}) worst = std::max(worst, std::abs(spherical_so12(lam, y) - spherical_so12(-lam, y)));
    rec.bound("spherical-symmetry", worst, tol::kSymmetry);
  });
  rec.guarded("doubling", [&] {
    double worst = 0;
    for (double lam : {0.0, 0.5, 1.0, 2.0, 3.0})
      for (double y : {0.3, 0.7}) worst = std::max(worst, doubling_check(lam, y).relative);
    rec.bound("doubling", worst, tol::kDoubling, "10 points (lambda, y)");
  });
  return rec.take();
}

std::vector<VerificationResult> maass_suite(unsigned seed) {
  Recorder rec("maass");
  rec.guarded("bessel-half-closed-form", [&] {
    double worst = 0;
    for (double y : {0.5, 2.0, 10.0, 40.0}) {
      double exact = std::sqrt(M_PI / (2 * y)) * std::exp(-y);
      worst = std::max(worst, std::abs(bessel_k(0.5, y).real() / exact - 1));
    }
    rec.bound("bessel-half-closed-form", worst, tol::kBesselClosedForm);
  });
  rec.guarded("bessel-large-argument", [&] {
    double worst = 0;
    for (double nu : {0.0, 1.0, 2.5})
      worst = std::max(worst, std::abs(bessel_k(nu, 400.0) / bessel_k_asymptotic(nu, 400.0, 4) - 1.0));
    rec.bound("bessel-large-argument", worst, tol::kBesselClosedForm, "Hankel expansion, 4 terms, y = 400");
  });
  std::vector<double> ys;
  for (int i = 0; i <= 16; ++i) ys.push_back(2 + 0.5 * i);
  const cplx nu(0, 9.5337);
  for (auto coeffs : {MaassCoefficients::hecke_extremal(), MaassCoefficients::random(seed)}) {
    std::string name = "majorant-" + coeffs.name;
    rec.guarded(name, [&] {
      auto r = maass_decay_demo(coeffs, nu, ys);
      double tail = 0;
      for (const auto& p : r.points) tail = std::max(tail, p.tail_bound);
      rec.flag(name, r.majorant_holds && std::isfinite(r.sup_scaled) && tail < tol::kMaassTail, r.sup_scaled,
               r.points.front().majorant, "sup over y in [2,10] at y = " + fmt(r.argmax_y));
    });
  }
  rec.guarded("argmax-at-grid-min", [&] {
    auto r = maass_decay_demo(MaassCoefficients::hecke_extremal(), nu, ys);
    rec.flag("argmax-at-grid-min", r.attained_at_grid_min, r.argmax_y, ys.front(),
             "nu = 9.5337i: |phi|e^{2 pi y} grows on [2,10], only the majorant decreases", Status::Warn);
  });
  rec.guarded("argmax-real-nu", [&] {
    auto r = maass_decay_demo(MaassCoefficients::hecke_extremal(), 1.0, ys);
    rec.flag("argmax-real-nu", r.attained_at_grid_min, r.argmax_y, ys.front(), "nu = 1");
  });
  return rec.take();
}

std::vector<VerificationResult> stirling_suite(unsigned) {
  Recorder rec("stirling");
  const cplx alpha(0, 0.3), beta(0, -0.1);
  rec.guarded("diagonal-substitution", [&] {
    double s = 12;
    cplx direct = 0.25 * std::pow(M_PI, -2 * s) * std::pow(gamma_fn(s / 2), 6) / gamma_fn(s);
    rec.bound("diagonal-substitution", std::abs(mellin_rhs(s, s, 0, 0) / direct - 1.0), 1e-12);
  });
  rec.guarded("a1-corrected", [&] {
    auto r40 = stirling_diagonal(40, alpha, beta), r80 = stirling_diagonal(80, alpha, beta);
    double e40 = std::abs(r40.corrected - 1.0), e80 = std::abs(r80.corrected - 1.0);
    rec.flag("a1-corrected", e40 <= 1.0 / 40 && e80 <= 1.0 / 80 && e80 < e40, e40, 1.0 / 40,
             "|ratio-1| " + fmt(e40) + " (s=40), " + fmt(e80) + " (s=80); O(1/s) correction");
  });
  rec.guarded("a1-printed", [&] {
    auto r40 = stirling_diagonal(40, alpha, beta), r80 = stirling_diagonal(80, alpha, beta);
    double e40 = std::abs(r40.printed - 1.0), e80 = std::abs(r80.printed - 1.0);
    rec.flag("a1-printed", e40 <= tol::kStirlingRatio && e80 < e40, e40, tol::kStirlingRatio,
             "printed form is off by 4/s^2: ratio " + fmt(std::abs(r40.printed)) + " (s=40)", Status::Warn);
  });
  rec.guarded("a2", [&] {
    double e40 = std::abs(stirling_axis(40, alpha, beta) - 1.0), e80 = std::abs(stirling_axis(80, alpha, beta) - 1.0);
    rec.flag("a2", e40 <= tol::kStirlingRatio && e80 < e40, e40, tol::kStirlingRatio,
             "|ratio-1| " + fmt(e80) + " at s=80; alpha = 0.3i, beta = -0.1i");
  });
  rec.guarded("pole-guard", [&] {
    bool thrown = false;
    try {
      stirling_axis(40, 0, 0);
    } catch (const Error& e) {
      thrown = e.kind() == ErrorKind::PoleProximity;
    }
    rec.flag("pole-guard", thrown, thrown ? 1 : 0, 1, "alpha = beta = 0 on the (s,0) axis");
  });
  return rec.take();
}

}  // namespace crown::cli
