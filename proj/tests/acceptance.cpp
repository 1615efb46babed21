// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crown/maass.hpp"
#include "suites.hpp"

using namespace crown;
using namespace crown::cli;

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRun {
  std::vector<VerificationResult> results;
  double seconds = 0;
};

std::map<std::string, SuiteRun> g_runs;

const SuiteRun& suite(const std::string& name) {
  auto it = g_runs.find(name);
  if (it != g_runs.end()) return it->second;
  auto t0 = Clock::now();
  SuiteRun run{run_suite(name, kDefaultSeed), 0};
  run.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return g_runs.emplace(name, std::move(run)).first->second;
}

struct Outcome {
  bool ok = true;
  double seconds = 0;
  std::string detail;
};

// Every named check of the suite must pass; the suite runtime bounds the criterion runtime.
Outcome from_suite(const std::string& name, const std::vector<std::string>& checks) {
  const auto& run = suite(name);
  Outcome o;
  o.seconds = run.seconds;
  for (const auto& c : checks) {
    const VerificationResult* hit = nullptr;
    for (const auto& r : run.results)
      if (r.name == c) hit = &r;
    if (!hit) {
      o.ok = false;
      o.detail += c + ": missing; ";
      continue;
    }
    if (hit->status != Status::Pass) o.ok = false;
    std::ostringstream s;
    s << c << "=" << to_string(hit->status);
    if (hit->tolerance > 0) s << " (" << hit->measured << " vs " << hit->tolerance << ")";
    if (!hit->detail.empty() && hit->status != Status::Pass) s << " [" << hit->detail << "]";
    o.detail += s.str() + "; ";
  }
  return o;
}

Outcome timed(const std::function<Outcome()>& f) {
  auto t0 = Clock::now();
  Outcome o = f();
  o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return o;
}

Outcome maass_argmax() {
  std::vector<double> ys;
  for (int i = 0; i <= 16; ++i) ys.push_back(2 + 0.5 * i);
  auto r = maass_decay_demo(MaassCoefficients::hecke_extremal(), cplx(0, 9.5337), ys);
  Outcome o;
  o.ok = std::isfinite(r.sup_scaled) && r.argmax_y == 2;
  std::ostringstream s;
  s << "nu=9.5337i, a_n=sqrt|n|: sup=" << r.sup_scaled << " at y=" << r.argmax_y
    << ", value at y=2 is " << r.points.front().scaled;
  o.detail = s.str();
  return o;
}

Outcome mellin_stirling() {
  const cplx alpha(0, 0.3), beta(0, -0.1);
  auto r40 = mellin_stirling_check(40, alpha, beta);
  auto r80 = mellin_stirling_check(80, alpha, beta);
  auto dev = [](cplx r) { return std::abs(r - 1.0); };
  bool a1 = dev(r40.printed_a1) <= 0.02 && dev(r80.printed_a1) < dev(r40.printed_a1);
  bool a2 = dev(r40.a2) <= 0.02 && dev(r80.a2) < dev(r40.a2);
  Outcome o;
  o.ok = a1 && a2;
  std::ostringstream s;
  s << "a1 |ratio| " << std::abs(r40.printed_a1) << " (s=40), " << std::abs(r80.printed_a1) << " (s=80)"
    << (a1 ? "" : " FAIL") << "; a1 with the s^{-2} factor restored: " << std::abs(r40.corrected_a1) << ", "
    << std::abs(r80.corrected_a1) << "; a2: " << std::abs(r40.a2) << ", " << std::abs(r80.a2) << (a2 ? "" : " FAIL");
  o.detail = s.str();
  return o;
}

Outcome end_to_end() {
  Outcome o;
  std::string cmd = std::string("\"") + CROWN_BINARY + "\" verify all > /dev/null";
  int rc = std::system(cmd.c_str());
  int code = rc == -1 ? -1 : WEXITSTATUS(rc);
  o.ok = code == 0;
  o.detail = "crown verify all exit " + std::to_string(code);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "boundary point table reproduction", 1, [] { return from_suite("rootsys", {"table1"}); }},
      {2, "affine kernel property", 1, [] { return from_suite("rootsys", {"affine-kernel"}); }},
      {3, "polytope vertex oracle", 5, [] { return from_suite("rootsys", {"polytope-vertices"}); }},
      {4, "leading exponent table reproduction", 5,
       [] { return from_suite("tables", {"table4", "table4-c-matches-bc", "table4-degeneracy-tie"}); }},
      {5, "complex-case cross-check", 2, [] { return from_suite("complex", {"complex-case", "pinned-E_6", "pinned-E_7"}); }},
      {6, "character oracle agreement", 60,
       [] {
         return from_suite("weylchar", {"oracle-dimensions", "oracle-b-invariants", "oracle-reflection-values",
                                        "oracle-induced-trivial", "oracle-induced-sign", "oracle-truncated-induction"});
       }},
      {7, "SO(1,2) orbit identity", 1, [] { return from_suite("matrix", {"so12-orbit-identity"}); }},
      {8, "boundary map and witnesses", 2,
       [] {
         return from_suite("matrix", {"boundary-map", "horocycle-witness-1", "horocycle-witness-2",
                                      "horocycle-witness-3", "imaginary-no-witness"});
       }},
      {9, "convexity SL(2), SL(3)", 10, [] { return from_suite("matrix", {"convexity-sl2", "convexity-sl3"}); }},
      {10, "region checks", 20, [] { return from_suite("matrix", {"sp-region-flip", "su21-grid-agreement"}); }},
      {11, "SL(n) phase bound", 10,
       [] { return from_suite("matrix", {"sln-phase-n2", "sln-phase-n3", "sln-phase-n4"}); }},
      {12, "2F1 exponent fits", 10,
       [] { return from_suite("hypergeom", {"fit-q2", "fit-q3", "fit-q5", "log-q1", "terminating"}); }},
      {13, "doubling formula", 10, [] { return from_suite("hypergeom", {"doubling"}); }},
      {14, "Maass decay, sup attained at y = 2", 5, [] { return timed(maass_argmax); }},
      {15, "Mellin/Stirling asymptotics", 1, [] { return timed(mellin_stirling); }},
      {16, "crown verify all end to end", 120, [] { return timed(end_to_end); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    bool in_time = o.seconds < c.limit_s;
    bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %s (%.3f s, limit %g s): %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, o.seconds,
                c.limit_s, o.detail.c_str(), in_time ? "" : " TIME LIMIT EXCEEDED");
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
