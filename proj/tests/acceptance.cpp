// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <iostream>

#include "nfbridge/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool check_passed(const std::vector<nfb::CheckResult>& checks,
                  const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c.pass;
  return false;
}

struct Gate {
  int failures = 0;

  void report(int number, const std::string& label, bool pass,
              const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
              << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
  }
};

}  // namespace

int main() {
  using S = nfb::ExactComplex;
  nfb::Scenario sc;
  sc.mode = "exact";
  sc.seed = 1;
  sc.bilinear_trials = 1000;
  sc.random_trials = 100;
  sc.grid.h = 1.0 / 32;

  Gate gate;
  const auto t_total = Clock::now();

  // 1. Dirac-set certification, exact, under one second.
  {
    const auto t0 = Clock::now();
    const auto checks = nfb::suites::algebra<S>(sc);
    const double ms = ms_since(t0);
    const bool pass = check_passed(checks, "algebra.dirac-anticommutation") &&
                      check_passed(checks, "algebra.alpha5") &&
                      check_passed(checks, "algebra.tensor-antisymmetry") &&
                      ms < 1000.0;
    gate.report(1, "Dirac-set certification", pass,
                "exact anticommutation + tensor antisymmetry, " +
                    nfb::fmt(ms) + " ms");
  }

  // 2. Bilinear table on 1000 random rational quads, exact, zero failures.
  {
    const auto checks = nfb::suites::bilinears_suite<S>(sc);
    gate.report(2, "bilinear table", check_passed(checks, "bilinears.table"),
                "1000 quads, every printed closed form");
  }

  // 3. Massless equivalence: null-space dimensions and free rows.
  {
    const auto checks = nfb::suites::planewave_suite<S>(sc);
    gate.report(3, "massless equivalence",
                check_passed(checks, "planewave.null-space") &&
                    check_passed(checks, "planewave.massless-solutions"),
                "2-dimensional on shell, trivial off shell");

    // 4. Klein-Gordon factorization for 100 random (w, k) pairs.
    gate.report(4, "Klein-Gordon factorization",
                check_passed(checks, "planewave.klein-gordon") &&
                    check_passed(checks, "planewave.factorization-value"));
  }

  // 5. Current correspondence with one shared constant per system.
  {
    const auto checks = nfb::suites::currents<S>(sc);
    gate.report(5, "current correspondence",
                check_passed(checks, "currents.2.13'-kappa") &&
                    check_passed(checks, "currents.2.13''-kappa") &&
                    check_passed(checks, "currents.2.16-kappa") &&
                    check_passed(checks, "currents.2.17-kappa") &&
                    check_passed(checks, "currents.conjugate-pairs-flip"),
                "100 states per system, conjugate pair flips kappa");
  }

  // 6. Direction frames and the per-axis systems.
  {
    const auto checks = nfb::suites::directions<S>(sc);
    gate.report(6, "direction frames",
                check_passed(checks, "directions.poynting-signs") &&
                    check_passed(checks, "directions.per-axis-systems") &&
                    check_passed(checks, "directions.twelve-equations"));
  }

  // 7. Canonical invariance.
  {
    const auto checks = nfb::suites::canonical<S>(sc);
    gate.report(7, "canonical invariance",
                check_passed(checks, "canonical.s-unitary") &&
                    check_passed(checks, "canonical.primed-bispinor") &&
                    check_passed(checks, "canonical.bilinear-invariance"),
                "100 quads, every enumerated matrix");
  }

  // 8. Conservation: analytic zero and FD order 2.0 +- 0.1, under 10 s.
  {
    const auto t0 = Clock::now();
    const auto checks = nfb::suites::conservation(sc);
    const double ms = ms_since(t0);
    gate.report(8, "conservation",
                check_passed(checks, "conservation.analytic-zero") &&
                    check_passed(checks, "conservation.fd-order") &&
                    check_passed(checks, "conservation.probability-route") &&
                    ms < 10000.0,
                "h in {1/32, 1/64}, " + nfb::fmt(ms) + " ms");
  }

  // 9. Lagrangian: on-shell zeros and termwise proportionality.
  {
    const auto checks = nfb::suites::lagrangian<S>(sc);
    gate.report(9, "Lagrangian",
                check_passed(checks, "lagrangian.on-shell-zero") &&
                    check_passed(checks, "lagrangian.termwise") &&
                    check_passed(checks, "lagrangian.current-route"));
  }

  // 10. Forces: spin-tensor zero, spinning closed forms, ring balance.
  {
    const auto checks = nfb::suites::forces_suite<S>(sc);
    gate.report(10, "forces",
                check_passed(checks, "forces.spin-on-shell-zero") &&
                    check_passed(checks, "forces.spinning-closed-forms") &&
                    check_passed(checks, "forces.ring-balance") &&
                    check_passed(checks, "forces.ring-examples"),
                "ring uses E_p = 1/2, H_p = 1");
  }

  // 11. Hydrodynamics: curl ratio, Newton balance, Heisenberg rate.
  {
    const auto checks = nfb::suites::hydro(sc);
    gate.report(11, "hydrodynamics",
                check_passed(checks, "hydro.curl-rigid") &&
                    check_passed(checks, "hydro.curl-order") &&
                    check_passed(checks, "hydro.newton-balance") &&
                    check_passed(checks, "hydro.heisenberg-constant"),
                "ratio 4 +- 10% under h-halving");
  }

  // 12. Determinism of the full run and the overall time budget.
  {
    auto fast = sc;
    fast.suite = "all";
    const auto a = nfb::run_suite("all", fast);
    const auto b = nfb::run_suite("all", fast);
    const bool identical =
        nfb::report_json_string(a) == nfb::report_json_string(b);
    const double total_ms = ms_since(t_total);
    gate.report(12, "determinism and budget",
                identical && a.all_pass() && total_ms < 60000.0,
                "byte-identical reports, total " + nfb::fmt(total_ms) + " ms");
  }

  std::cout << (gate.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                   : "ACCEPTANCE: " +
                                         std::to_string(gate.failures) +
                                         " criterion(s) failed")
            << "\n";
  return gate.failures == 0 ? 0 : 1;
}
