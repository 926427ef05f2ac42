// Acceptance gate: runs the nine acceptance criteria, prints one PASS/FAIL
// line per criterion (with indented evidence lines), and exits nonzero if any
// selected criterion fails.
//
// Usage: acceptance [N ...]   e.g. `acceptance 1 8 9`; no arguments runs all.
//
// Every measurement is deterministic. Inversion cells use the documented seed
// chain derive_seed(1912, cell_index, realization) with a fixed global index
// per cell (0-8 accuracy grid, 10-15 orientation study, 20-28 Broyden study,
// 90-92 localization study), so a partial run reproduces the full run's
// numbers bit for bit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "emsound/forward.hpp"
#include "emsound/hankel.hpp"
#include "emsound/harness.hpp"
#include "emsound/jacobian.hpp"
#include "emsound/model.hpp"
#include "emsound/regularize.hpp"
#include "emsound/rng.hpp"
#include "emsound/solver.hpp"

namespace {

using namespace emsound;

std::string fmt(const char* f, ...) {
  va_list ap;
  va_start(ap, f);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct Criterion {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool cond, const std::string& what) {
    ok = ok && cond;
    lines.push_back(fmt("    %s  %s", cond ? "ok  " : "FAIL", what.c_str()));
  }
  void note(const std::string& what) { lines.push_back("    ....  " + what); }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Larger-of-the-two-ways ratio: 1 means equal, 2 means a factor 2 apart.
double off_factor(double a, double b) { return a > b ? a / b : b / a; }

Eigen::MatrixXd random_matrix(NormalRng& rng, int rows, int cols) {
  Eigen::MatrixXd A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = rng.normal();
  return A;
}

// ---------------------------------------------------------------------------
// Shared inversion cells (criteria 4, 5, 6, 9). Cached per global index so the
// exact-Jacobian grid is computed once even when several criteria consume it.
// ---------------------------------------------------------------------------

struct GridRow {
  TestProfile::Kind kind;
  const char* name;
  RegKind reg;
  const char* regname;
};
constexpr GridRow kGrid[3] = {
    {TestProfile::Kind::f1, "f1", RegKind::second_difference, "D2"},
    {TestProfile::Kind::f2, "f2", RegKind::first_difference, "D1"},
    {TestProfile::Kind::f3, "f3", RegKind::first_difference, "D1"},
};
constexpr int kM[3] = {5, 10, 20};

CellSpec grid_spec(int pi, int mi) {
  CellSpec s;
  s.profile.kind = kGrid[pi].kind;
  s.reg = kGrid[pi].reg;
  s.n = 20;
  s.m = kM[mi];
  return s;
}

const CellResult& cell(const CellSpec& spec, std::uint64_t index) {
  static std::map<std::uint64_t, CellResult> cache;
  auto it = cache.find(index);
  if (it == cache.end()) it = cache.emplace(index, run_cell(spec, 1912, index)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// 1. Hankel oracle: closed-form transform pairs, relative error < 1e-6.
// ---------------------------------------------------------------------------
void criterion_1(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const HankelFilter& f0 = builtin_j0_filter();
  const HankelFilter& f1 = builtin_j1_filter();
  double worst = 0.0;
  int points = 0;
  for (double a : {0.5, 1.0, 2.0, 5.0}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const auto kernel = [a](double lam) { return std::complex<double>(std::exp(-a * lam)); };
      const double scale = std::pow(a * a + r * r, 1.5);
      const double e0 = std::abs(transform(kernel, f0, r).real() - a / scale) / (a / scale);
      const double e1 = std::abs(transform(kernel, f1, r).real() - r / scale) / (r / scale);
      worst = std::max({worst, e0, e1});
      points += 2;
    }
  }
  c.check(worst < 1e-6,
          fmt("%d closed-form transforms: max relative error %.2e (gate 1e-6)", points, worst));
  const double secs = seconds_since(t0);
  c.check(secs < 1.0, fmt("runtime %.3f s (gate 1 s)", secs));
}

// ---------------------------------------------------------------------------
// 2. Analytic Jacobian vs central finite differences on 50 random models.
// ---------------------------------------------------------------------------
void criterion_2(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  double max_rel = 0.0, min_abs = 1e300;
  int worst_trial = -1;
  long compared = 0;
  for (int trial = 0; trial < 50; ++trial) {
    NormalRng rng(derive_seed(2026, 2, trial));
    const int n = trial % 3 == 0 ? 5 : trial % 3 == 1 ? 10 : 20;
    Eigen::VectorXd sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = 0.05 + 4.95 * rng.uniform();
    const LayeredEarthModel model =
        make_model(sigma, Eigen::VectorXd::Constant(n - 1, 2.0 / (n - 1)));
    InstrumentSetup setup;
    setup.heights = make_heights(10, preset_hbar(10));
    const Eigen::MatrixXd Ja = analytic_jacobian(model, setup).entries;
    for (int j = 0; j < n; ++j) {
      const double delta = 3e-4 * std::max(sigma[j], 1.0);
      LayeredEarthModel up = model, dn = model;
      up.sigma[j] += delta;
      dn.sigma[j] -= delta;
      const Eigen::VectorXd fd =
          -(forward_map(up, setup) - forward_map(dn, setup)) / (2.0 * delta);
      for (int i = 0; i < Ja.rows(); ++i) {
        const double mag = std::abs(Ja(i, j));
        if (mag <= 1e-12) continue;
        ++compared;
        min_abs = std::min(min_abs, mag);
        const double rel = std::abs(Ja(i, j) - fd[i]) / mag;
        if (rel > max_rel) {
          max_rel = rel;
          worst_trial = trial;
        }
      }
    }
  }
  c.check(max_rel < 1e-5, fmt("50 models (n cycling 5/10/20, m=10, sigma ~ U[0.05,5]): max "
                              "relative discrepancy %.2e (gate 1e-5), worst at model %d",
                              max_rel, worst_trial));
  c.note(fmt("%ld entries above the 1e-12 magnitude floor; smallest compared entry %.2e",
             compared, min_abs));
  const double secs = seconds_since(t0);
  c.check(secs < 60.0, fmt("runtime %.1f s (gate 60 s)", secs));
}

// ---------------------------------------------------------------------------
// 3. Ill-conditioning: condition number > 1e12 in each of 100 random trials,
//    and the singular values fall by >= 10 orders over the first 15 indices.
// ---------------------------------------------------------------------------
void criterion_3(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 20;
  double min_cond = 1e300, min_decay = 1e300;
  int cond_fail = 0, decay_fail = 0;
  for (int trial = 0; trial < 100; ++trial) {
    NormalRng rng(derive_seed(1912, 3, trial));
    Eigen::VectorXd sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = std::max(100.0 * rng.uniform(), 1e-9);
    const LayeredEarthModel model =
        make_model(sigma, Eigen::VectorXd::Constant(n - 1, 2.0 / (n - 1)));
    InstrumentSetup setup;
    setup.heights = make_heights(10, preset_hbar(10));
    const Eigen::MatrixXd J = analytic_jacobian(model, setup).entries;
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues();
    const double cond = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : 1e308;
    const double decay = sv[14] > 0.0 ? sv[0] / sv[14] : 1e308;
    min_cond = std::min(min_cond, cond);
    min_decay = std::min(min_decay, decay);
    cond_fail += cond <= 1e12;
    decay_fail += decay < 1e10;
  }
  c.check(cond_fail == 0, fmt("100 trials (sigma ~ U[0,100]^20, m=10): min condition number "
                              "%.2e (gate 1e12), %d below",
                              min_cond, cond_fail));
  c.check(decay_fail == 0,
          fmt("min decay sv[0]/sv[14] = %.2e (gate 1e10), %d below", min_decay, decay_fail));
  const double secs = seconds_since(t0);
  c.check(secs < 120.0, fmt("runtime %.1f s (gate 120 s)", secs));
}

// ---------------------------------------------------------------------------
// 4. Accuracy grid: nine cells {f1/D2, f2/D1, f3/D1} x {m=5,10,20} at n=20,
//    mean e_opt over 20 realizations within a factor 2 of the published value.
// ---------------------------------------------------------------------------
void criterion_4(Criterion& c) {
  for (int pi = 0; pi < 3; ++pi) {
    for (int mi = 0; mi < 3; ++mi) {
      const CellSpec spec = grid_spec(pi, mi);
      const CellResult& res = cell(spec, static_cast<std::uint64_t>(pi * 3 + mi));
      const double pub = published_eopt("table1", kGrid[pi].name, spec.reg, "both", 20, spec.m);
      if (!(pub > 0.0)) {
        c.check(false, fmt("%s/%s m=%d: no published reference value", kGrid[pi].name,
                           kGrid[pi].regname, spec.m));
        continue;
      }
      const double f = off_factor(res.mean_eopt, pub);
      c.check(f <= 2.0,
              fmt("%s/%s m=%-2d  mean e_opt %.3e (sd %.1e, mean ell %.1f) vs published %.1e — "
                  "factor %.2f (gate 2)",
                  kGrid[pi].name, kGrid[pi].regname, spec.m, res.mean_eopt, res.std_eopt,
                  res.mean_ell, pub, f));
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Orientation study: single-orientation runs degrade (or equal) the
//    both-orientation mean e_opt for f2 at every m, and match the published
//    single-orientation values within a factor 2.
// ---------------------------------------------------------------------------
void criterion_5(Criterion& c) {
  for (int oi = 0; oi < 2; ++oi) {
    const char* oname = oi == 0 ? "vertical" : "horizontal";
    for (int mi = 0; mi < 3; ++mi) {
      CellSpec spec = grid_spec(1, mi);  // f2 / D1
      spec.vertical = oi == 0;
      spec.horizontal = oi == 1;
      const CellResult& single = cell(spec, static_cast<std::uint64_t>(10 + oi * 3 + mi));
      const CellResult& both = cell(grid_spec(1, mi), static_cast<std::uint64_t>(3 + mi));
      c.check(single.mean_eopt >= both.mean_eopt,
              fmt("f2/D1 %-10s m=%-2d  mean e_opt %.3e >= both-orientation %.3e", oname,
                  spec.m, single.mean_eopt, both.mean_eopt));
      const double pub =
          published_eopt("table2", "f2", RegKind::first_difference, oname, 20, spec.m);
      if (!(pub > 0.0)) {
        c.check(false, fmt("f2/D1 %s m=%d: no published reference value", oname, spec.m));
        continue;
      }
      const double f = off_factor(single.mean_eopt, pub);
      c.check(f <= 2.0, fmt("f2/D1 %-10s m=%-2d  vs published %.1e — factor %.2f (gate 2)",
                            oname, spec.m, pub, f));
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Broyden accuracy: k_B = 10 cells within a factor 2 of the published
//    values and within 1.5x of the exact-Jacobian runs on the same cells.
// ---------------------------------------------------------------------------
void criterion_6(Criterion& c) {
  for (int pi = 0; pi < 3; ++pi) {
    for (int mi = 0; mi < 3; ++mi) {
      CellSpec spec = grid_spec(pi, mi);
      spec.step_source = JacobianSource::broyden;
      spec.broyden_refresh = 10;
      const CellResult& broy = cell(spec, static_cast<std::uint64_t>(20 + pi * 3 + mi));
      const CellResult& exact = cell(grid_spec(pi, mi), static_cast<std::uint64_t>(pi * 3 + mi));
      const double pub = published_eopt("table3", kGrid[pi].name, spec.reg, "both", 20, spec.m);
      if (!(pub > 0.0)) {
        c.check(false, fmt("%s/%s m=%d: no published reference value", kGrid[pi].name,
                           kGrid[pi].regname, spec.m));
        continue;
      }
      const double fpub = off_factor(broy.mean_eopt, pub);
      c.check(fpub <= 2.0,
              fmt("%s/%s m=%-2d  broyden mean e_opt %.3e vs published %.1e — factor %.2f (gate 2)",
                  kGrid[pi].name, kGrid[pi].regname, spec.m, broy.mean_eopt, pub, fpub));
      const double fex = off_factor(broy.mean_eopt, exact.mean_eopt);
      c.check(fex <= 1.5,
              fmt("%s/%s m=%-2d  vs exact-Jacobian mean %.3e — factor %.2f (gate 1.5)",
                  kGrid[pi].name, kGrid[pi].regname, spec.m, exact.mean_eopt, fex));
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Broyden speedup: 100 fixed iterations at n=40, m=10, ell=4, L=D2;
//    Broyden k_B = 10 wall clock at least 2x faster than exact-Jacobian.
//    Only the ratio is asserted; absolute times are hardware-dependent.
// ---------------------------------------------------------------------------
void criterion_7(Criterion& c) {
  TestProfile prof;
  prof.kind = TestProfile::Kind::f2;
  const int n = 40, m = 10, ell = 4;
  InstrumentSetup base;
  NoiseSpec noise;
  noise.tau = 1e-3;
  noise.seed = derive_seed(1912, 7, 0);
  const Synthetic syn = synthesize(prof, n, m, noise, base);
  const RegularizationOperator L = build_operator(RegKind::second_difference, n);
  const double sigma0 = std::clamp(syn.data.b.mean(), 1e-3, 1.0);

  long forwards = 0;
  const auto residual_fn = [&](const Eigen::VectorXd& s) -> Eigen::VectorXd {
    ++forwards;
    LayeredEarthModel trial = syn.model;
    trial.sigma = s;
    return syn.data.b - forward_map(trial, syn.setup);
  };
  const auto run_policy = [&](bool use_broyden, int& accepted, long& fw) -> double {
    forwards = 0;
    accepted = 0;
    const auto t0 = std::chrono::steady_clock::now();
    Eigen::VectorXd sigma = Eigen::VectorXd::Constant(n, sigma0);
    Eigen::VectorXd r = residual_fn(sigma);
    JacobianMatrix J;
    for (int k = 0; k < 100; ++k) {
      if (!use_broyden || k % 10 == 0) {
        LayeredEarthModel cur = syn.model;
        cur.sigma = sigma;
        J = analytic_jacobian(cur, syn.setup);
      }
      const GsvdFactors F = gsvd_factors(J.entries, L);
      const Eigen::VectorXd s = tgsvd_step(F, r, ell);
      const LineSearchResult ls = armijo_step(sigma, s, r, J.entries, residual_fn);
      if (ls.accepted) {
        ++accepted;
        if (use_broyden && k % 10 != 9) broyden_update(J, ls.alpha * s, ls.trial_residual - r);
        sigma += ls.alpha * s;
        r = ls.trial_residual;
      }
    }
    const double secs = seconds_since(t0);
    fw = forwards;
    return secs;
  };

  int acc_e = 0, acc_b = 0;
  long fw_e = 0, fw_b = 0;
  run_policy(false, acc_e, fw_e);  // warm-up, untimed
  double te = 1e300, tb = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    te = std::min(te, run_policy(false, acc_e, fw_e));
    tb = std::min(tb, run_policy(true, acc_b, fw_b));
  }
  c.note(fmt("f2 data, tau=1e-3, sigma0=%.3f, n=40, m=10, ell=4, L=D2, 100 fixed iterations, "
             "min of 3 reps",
             sigma0));
  c.note(fmt("exact Jacobian every iteration: %.3f s  (%d accepted steps, %ld forward evals)",
             te, acc_e, fw_e));
  c.note(fmt("Broyden, exact refresh every 10: %.3f s  (%d accepted steps, %ld forward evals)",
             tb, acc_b, fw_b));
  c.check(te >= 2.0 * tb, fmt("wall-clock ratio exact/broyden = %.2f (gate 2)", te / tb));
}

// ---------------------------------------------------------------------------
// 8. Solver property suite over randomized instances.
// ---------------------------------------------------------------------------
void criterion_8(Criterion& c) {
  // (a) Armijo ladder semantics: pinned example plus randomized instances.
  {
    int bad = 0, total = 0;
    {
      ++total;
      // r(x) = x + 0.9 keeps the decrease condition true on every rung, so
      // positivity alone caps the step: 0.1 - alpha*0.2 > 0 first at 1/4.
      Eigen::VectorXd sigma(1), step(1);
      sigma << 0.1;
      step << -0.2;
      Eigen::MatrixXd J(1, 1);
      J << 1.0;
      const auto rf = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return Eigen::VectorXd::Constant(1, x[0] + 0.9);
      };
      const LineSearchResult ls = armijo_step(sigma, step, rf(sigma), J, rf);
      if (!ls.accepted || ls.alpha != 0.25) ++bad;
    }
    for (int t = 0; t < 40; ++t) {
      ++total;
      NormalRng rng(derive_seed(2026, 80, t));
      const int M = 4 + static_cast<int>(rng.uniform(0.0, 5.0));
      const int n = 3 + static_cast<int>(rng.uniform(0.0, 4.0));
      const Eigen::MatrixXd A = random_matrix(rng, M, n);
      Eigen::VectorXd xstar(n), sigma(n);
      for (int j = 0; j < n; ++j) {
        xstar[j] = rng.normal();
        sigma[j] = 0.05 + std::abs(rng.normal());
      }
      const auto rf = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return A * (x - xstar);
      };
      const Eigen::VectorXd r = rf(sigma);
      Eigen::VectorXd s;
      if (t % 2 == 0) {
        const SvdFactors F = svd_factors(A);
        s = tsvd_step(F, r, std::min(2, F.p));
      } else {
        s.resize(n);
        for (int j = 0; j < n; ++j) s[j] = 3.0 * rng.normal();
      }
      const LineSearchResult ls = armijo_step(sigma, s, r, A, rf);
      const double js2 = (A * s).squaredNorm();
      const auto rung_valid = [&](double alpha) {
        const Eigen::VectorXd trial = sigma + alpha * s;
        if (!(trial.minCoeff() > 0.0)) return false;
        return r.squaredNorm() - rf(trial).squaredNorm() >= 0.5 * alpha * js2;
      };
      if (ls.accepted) {
        const Eigen::VectorXd trial = sigma + ls.alpha * s;
        const bool pos = trial.minCoeff() > 0.0;
        const bool dec = r.squaredNorm() - ls.trial_residual.squaredNorm() >=
                         0.5 * ls.alpha * js2 - 1e-12 * r.squaredNorm();
        const bool maximal = ls.alpha >= 1.0 || !rung_valid(2.0 * ls.alpha);
        if (!pos || !dec || !maximal) ++bad;
      } else {
        bool any_valid = false;
        for (double alpha = 1.0; alpha >= 1e-5; alpha /= 2.0) any_valid = any_valid || rung_valid(alpha);
        if (any_valid) ++bad;
      }
    }
    c.check(bad == 0, fmt("Armijo ladder semantics: %d/%d instances clean "
                          "(positivity, sufficient decrease, rung maximality)",
                          total - bad, total));
  }

  // (b) Damped iterations: monotone residual history, strictly positive
  //     iterates, on small synthetic problems across profiles/operators.
  {
    int bad = 0, total = 0;
    for (int t = 0; t < 8; ++t) {
      ++total;
      NormalRng rng(derive_seed(2026, 81, t));
      TestProfile prof;
      prof.kind = t % 3 == 0   ? TestProfile::Kind::f1
                  : t % 3 == 1 ? TestProfile::Kind::f2
                               : TestProfile::Kind::f3;
      const int n = 5 + static_cast<int>(rng.uniform(0.0, 6.0));
      const int m = 5 + static_cast<int>(rng.uniform(0.0, 6.0));
      NoiseSpec noise;
      noise.tau = t % 2 == 0 ? 1e-3 : 1e-2;
      noise.seed = derive_seed(2026, 82, t);
      InstrumentSetup base;
      const Synthetic syn = synthesize(prof, n, m, noise, base);
      SolverConfig cfg;
      cfg.regularizer = t % 3 == 0   ? RegKind::identity
                        : t % 3 == 1 ? RegKind::first_difference
                                     : RegKind::second_difference;
      const EllRecord rec =
          solve_one_ell(cfg, syn.setup, syn.data, syn.model.d, 1 + t % 2);
      bool good = rec.termination != Termination::aborted && rec.sigma.minCoeff() > 0.0;
      const double sigma0 = std::clamp(syn.data.b.mean(), 1e-3, 1.0);
      LayeredEarthModel start = syn.model;
      start.sigma.setConstant(sigma0);
      double prev = (syn.data.b - forward_map(start, syn.setup)).norm();
      for (const IterationRecord& it : rec.history) {
        good = good && it.residual_norm <= prev * (1.0 + 1e-12);
        prev = it.residual_norm;
      }
      if (!good) ++bad;
    }
    c.check(bad == 0,
            fmt("damped iterations: %d/%d runs with monotone residual history and strictly "
                "positive iterates",
                total - bad, total));
  }

  // (c) Broyden rank-one update: secant identity and minimal change.
  {
    int bad = 0, total = 0;
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
      ++total;
      NormalRng rng(derive_seed(2026, 83, t));
      const int M = 4 + static_cast<int>(rng.uniform(0.0, 7.0));
      const int n = 3 + static_cast<int>(rng.uniform(0.0, 6.0));
      const Eigen::MatrixXd J0 = random_matrix(rng, M, n);
      Eigen::VectorXd s(n), y(M), v(n);
      for (int j = 0; j < n; ++j) s[j] = rng.normal();
      for (int i = 0; i < M; ++i) y[i] = rng.normal();
      for (int j = 0; j < n; ++j) v[j] = rng.normal();
      v -= s * (v.dot(s) / s.squaredNorm());  // v orthogonal to s
      JacobianMatrix jac;
      jac.entries = J0;
      const int age0 = jac.age;
      broyden_update(jac, s, y);
      const double secant = (jac.entries * s - y).norm() /
                            (1.0 + y.norm() + J0.norm() * s.norm());
      const double drift = ((jac.entries - J0) * v).norm() /
                           (1.0 + (y - J0 * s).norm() * v.norm() / s.norm());
      worst = std::max({worst, secant, drift});
      if (secant > 1e-12 || drift > 1e-12 || jac.age != age0 + 1) ++bad;
    }
    c.check(bad == 0, fmt("Broyden update: %d/%d instances satisfy the secant identity and "
                          "leave the orthogonal complement unchanged (worst %.1e, gate 1e-12)",
                          total - bad, total, worst));
  }

  // (d) TSVD/TGSVD monotonicity: data residual nonincreasing and (semi)norm
  //     nondecreasing as the truncation index grows.
  {
    int bad = 0, total = 0;
    for (int t = 0; t < 20; ++t) {
      ++total;
      NormalRng rng(derive_seed(2026, 84, t));
      const int n = 4 + static_cast<int>(rng.uniform(0.0, 7.0));
      const bool tall = t % 2 == 0;
      int M = tall ? n + 1 + static_cast<int>(rng.uniform(0.0, 5.0))
                   : std::max(3, n - 1 - static_cast<int>(rng.uniform(0.0, 2.0)));
      const RegularizationOperator L = build_operator(
          t % 2 == 0 ? RegKind::first_difference : RegKind::second_difference, n);
      if (M < n && M - n + L.rows() <= 0) M = n - L.rows() + 1;
      const Eigen::MatrixXd A = random_matrix(rng, M, n);
      Eigen::VectorXd r(M);
      for (int i = 0; i < M; ++i) r[i] = rng.normal();
      bool good = true;
      {
        const SvdFactors F = svd_factors(A);
        double prev_res = r.norm(), prev_norm = 0.0;
        for (int ell = 1; ell <= F.p; ++ell) {
          const Eigen::VectorXd s = tsvd_step(F, r, ell);
          const double res = (A * s + r).norm(), ns = s.norm();
          good = good && res <= prev_res * (1.0 + 1e-12) + 1e-12 &&
                 ns >= prev_norm * (1.0 - 1e-12) - 1e-12;
          prev_res = res;
          prev_norm = ns;
        }
      }
      {
        const GsvdFactors F = gsvd_factors(A, L);
        double prev_res = 1e300, prev_semi = -1.0;
        for (int ell = 0; ell <= F.pbar; ++ell) {
          const Eigen::VectorXd s = tgsvd_step(F, r, ell);
          const double res = (A * s + r).norm(), semi = (L.matrix * s).norm();
          good = good && res <= prev_res * (1.0 + 1e-12) + 1e-12 &&
                 semi >= prev_semi * (1.0 - 1e-12) - 1e-12;
          prev_res = res;
          prev_semi = semi;
        }
      }
      if (!good) ++bad;
    }
    c.check(bad == 0, fmt("TSVD/TGSVD truncation sweeps: %d/%d instances monotone in the "
                          "data residual and step (semi)norm",
                          total - bad, total));
  }

  // (e) GSVD structural audit: reconstruction residuals below 1e-10.
  {
    int bad = 0, total = 0;
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
      NormalRng rng(derive_seed(2026, 85, t));
      const int n = 4 + static_cast<int>(rng.uniform(0.0, 9.0));
      const bool tall = t % 2 == 0;
      int M = tall ? n + 1 + static_cast<int>(rng.uniform(0.0, 6.0))
                   : std::max(3, n - 1 - static_cast<int>(rng.uniform(0.0, 2.0)));
      const RegKind kind = t % 3 == 0   ? RegKind::identity
                           : t % 3 == 1 ? RegKind::first_difference
                                        : RegKind::second_difference;
      const RegularizationOperator L = build_operator(kind, n);
      if (M < n && M - n + L.rows() <= 0) M = n - L.rows() + 1;
      ++total;
      const Eigen::MatrixXd J = random_matrix(rng, M, n);
      const GsvdFactors F = gsvd_factors(J, L);
      const int t_rows = L.rows();
      Eigen::MatrixXd SigmaJ = Eigen::MatrixXd::Zero(M, n);
      for (int j = std::max(0, n - M); j < n; ++j) SigmaJ(j + M - n, j) = F.c[j];
      Eigen::MatrixXd SigmaL = Eigen::MatrixXd::Zero(t_rows, n);
      for (int j = 0; j < t_rows; ++j) SigmaL(j, j) = F.s[j];
      const double relJ =
          (J - F.U * SigmaJ * F.Zinv).norm() / std::max(1.0, J.norm());
      const double relL =
          (L.matrix - F.V * SigmaL * F.Zinv).norm() / std::max(1.0, L.matrix.norm());
      double pairc = 0.0;
      for (int j = 0; j < n; ++j)
        pairc = std::max(pairc, std::abs(F.c[j] * F.c[j] + F.s[j] * F.s[j] - 1.0));
      const double orthU =
          (F.U.transpose() * F.U - Eigen::MatrixXd::Identity(M, M)).norm() / M;
      worst = std::max({worst, relJ, relL});
      if (relJ > 1e-10 || relL > 1e-10 || pairc > 1e-12 || orthU > 1e-12) ++bad;
    }
    c.check(bad == 0, fmt("GSVD audit: %d/%d factorizations reconstruct both matrices below "
                          "1e-10 (worst %.1e) with orthogonal U and c^2+s^2=1",
                          total - bad, total, worst));
  }
}

// ---------------------------------------------------------------------------
// 9. Localization: the reconstructed argmax falls within 2 layers of the true
//    step support in >= 80% of 20 realizations, for xi in {0.7, 1.0, 1.5}.
// ---------------------------------------------------------------------------
void criterion_9(Criterion& c) {
  const double xis[3] = {0.7, 1.0, 1.5};
  for (int i = 0; i < 3; ++i) {
    CellSpec spec;
    spec.profile.kind = TestProfile::Kind::f3;
    spec.profile.xi = xis[i];
    spec.reg = RegKind::first_difference;
    spec.n = 40;
    spec.m = 20;
    spec.tau = 1e-2;
    const CellResult& res = cell(spec, static_cast<std::uint64_t>(90 + i));
    const LayeredEarthModel truth = discretize(spec.profile, spec.n);
    int jmin = -1, jmax = -1;
    for (int j = 0; j < spec.n; ++j) {
      if (truth.sigma[j] > 0.5) {
        if (jmin < 0) jmin = j;
        jmax = j;
      }
    }
    int hits = 0;
    for (const RealizationRecord& rec : res.records)
      if (rec.argmax_layer >= jmin - 2 && rec.argmax_layer <= jmax + 2) ++hits;
    c.check(hits >= 16, fmt("xi=%.1f (n=40, m=20, tau=1e-2, D1): argmax within 2 layers of the "
                            "true support [%d,%d] in %d/%zu realizations (gate 16)",
                            xis[i], jmin, jmax, hits, res.records.size()));
  }
}

struct Entry {
  int num;
  const char* name;
  void (*fn)(Criterion&);
};
constexpr Entry kCriteria[] = {
    {1, "Hankel filter closed-form oracle", criterion_1},
    {2, "analytic Jacobian vs central differences", criterion_2},
    {3, "Jacobian ill-conditioning reproduction", criterion_3},
    {4, "inversion accuracy grid (table1 preset, n=20)", criterion_4},
    {5, "orientation degradation (table2 preset)", criterion_5},
    {6, "Broyden accuracy (table3 preset)", criterion_6},
    {7, "Broyden wall-clock speedup (100 fixed iterations)", criterion_7},
    {8, "solver property suite", criterion_8},
    {9, "anomaly localization (f3 step profiles)", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "all") {
      selected.clear();
      break;
    }
    char* end = nullptr;
    const long v = std::strtol(arg.c_str(), &end, 10);
    if (end == arg.c_str() || *end != '\0' || v < 1 || v > 9) {
      std::fprintf(stderr, "usage: acceptance [N ...] with N in 1..9 (default: all)\n");
      return 2;
    }
    selected.push_back(static_cast<int>(v));
  }

  int ran = 0, failed = 0;
  for (const Entry& entry : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), entry.num) == selected.end())
      continue;
    ++ran;
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      entry.fn(c);
    } catch (const std::exception& e) {
      c.check(false, fmt("unhandled exception: %s", e.what()));
    }
    const double secs = seconds_since(t0);
    std::printf("%s  criterion %d: %s  [%.1f s]\n", c.ok ? "PASS" : "FAIL", entry.num,
                entry.name, secs);
    for (const std::string& line : c.lines) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    failed += c.ok ? 0 : 1;
  }
  std::printf("\nacceptance: %d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
