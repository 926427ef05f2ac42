// Kernel benchmark: OpenMP production kernels vs the serial reference.
//
// Measures forward_map and analytic_jacobian at representative experiment
// sizes, checks bit-for-bit agreement between the two implementations, and
// reports medians and speedups. On a single-core host the speedup is ~1x by
// construction; the agreement check is the part that must always hold.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <Eigen/Dense>

#include "emsound/forward.hpp"
#include "emsound/harness.hpp"
#include "emsound/jacobian.hpp"
#include "emsound/model.hpp"
#include "emsound/reference.hpp"

namespace {

using namespace emsound;

template <typename F>
double median_ms(int reps, F&& fn) {
  std::vector<double> times;
  times.reserve(reps);
  fn();  // warm-up, untimed
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP (serial production kernels)\n");
#endif

  const int reps = 30;
  bool all_match = true;
  for (const auto& [n, m] : {std::pair{20, 20}, std::pair{40, 20}}) {
    TestProfile prof;
    prof.kind = TestProfile::Kind::f1;
    const LayeredEarthModel model = discretize(prof, n);
    InstrumentSetup setup;
    setup.heights = make_heights(m, preset_hbar(m));

    const Eigen::VectorXd f_prod = forward_map(model, setup);
    const Eigen::VectorXd f_ref = reference::forward_map(model, setup);
    const Eigen::MatrixXd j_prod = analytic_jacobian(model, setup).entries;
    const Eigen::MatrixXd j_ref = reference::analytic_jacobian(model, setup).entries;
    const bool f_match = (f_prod.array() == f_ref.array()).all();
    const bool j_match = (j_prod.array() == j_ref.array()).all();
    all_match = all_match && f_match && j_match;

    volatile double sink = 0.0;
    const double tf_p = median_ms(reps, [&] { sink = sink + forward_map(model, setup).sum(); });
    const double tf_r =
        median_ms(reps, [&] { sink = sink + reference::forward_map(model, setup).sum(); });
    const double tj_p =
        median_ms(reps, [&] { sink = sink + analytic_jacobian(model, setup).entries.sum(); });
    const double tj_r = median_ms(
        reps, [&] { sink = sink + reference::analytic_jacobian(model, setup).entries.sum(); });

    std::printf("\nn=%d, m=%d (%d medians)\n", n, m, reps);
    std::printf("  forward_map        production %8.3f ms   reference %8.3f ms   speedup %.2fx   "
                "bit-identical: %s\n",
                tf_p, tf_r, tf_r / tf_p, f_match ? "yes" : "NO");
    std::printf("  analytic_jacobian  production %8.3f ms   reference %8.3f ms   speedup %.2fx   "
                "bit-identical: %s\n",
                tj_p, tj_r, tj_r / tj_p, j_match ? "yes" : "NO");
  }

  if (!all_match) {
    std::printf("\nFAIL: production and reference kernels disagree\n");
    return 1;
  }
  std::printf("\nall kernels bit-identical to the serial reference\n");
  return 0;
}
