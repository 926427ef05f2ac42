#include "emsound/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace emsound {

RegularizationOperator build_operator(RegKind kind, int n) {
  RegularizationOperator op;
  op.kind = kind;
  switch (kind) {
    case RegKind::identity:
      if (n < 1) throw std::invalid_argument("build_operator: n must be at least 1");
      op.matrix = Eigen::MatrixXd::Identity(n, n);
      break;
    case RegKind::first_difference: {
      if (n < 2) throw std::invalid_argument("build_operator: D1 needs n >= 2");
      op.matrix = Eigen::MatrixXd::Zero(n - 1, n);
      for (int i = 0; i < n - 1; ++i) {
        op.matrix(i, i) = -1.0;
        op.matrix(i, i + 1) = 1.0;
      }
      break;
    }
    case RegKind::second_difference: {
      if (n < 3) throw std::invalid_argument("build_operator: D2 needs n >= 3");
      op.matrix = Eigen::MatrixXd::Zero(n - 2, n);
      for (int i = 0; i < n - 2; ++i) {
        op.matrix(i, i) = 1.0;
        op.matrix(i, i + 1) = -2.0;
        op.matrix(i, i + 2) = 1.0;
      }
      break;
    }
  }
  return op;
}

SvdFactors svd_factors(const Eigen::MatrixXd& J) {
  if (J.size() == 0) throw std::invalid_argument("svd_factors: empty matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdFactors f;
  f.U = svd.matrixU();
  f.V = svd.matrixV();
  const Eigen::VectorXd& all = svd.singularValues();
  const double cutoff = 1e-14 * (all.size() ? all[0] : 0.0);
  int p = 0;
  while (p < all.size() && all[p] > cutoff && all[p] > 0.0) ++p;
  f.p = p;
  f.gamma = all.head(p);
  return f;
}

Eigen::VectorXd tsvd_step(const SvdFactors& factors, const Eigen::VectorXd& r, int ell) {
  if (ell < 1 || ell > factors.p)
    throw std::invalid_argument("tsvd_step: ell must lie in 1.." + std::to_string(factors.p));
  if (r.size() != factors.U.rows())
    throw std::invalid_argument("tsvd_step: residual length mismatch");
  Eigen::VectorXd s = Eigen::VectorXd::Zero(factors.V.rows());
  for (int i = 0; i < ell; ++i)
    s.noalias() -= (factors.U.col(i).dot(r) / factors.gamma[i]) * factors.V.col(i);
  return s;
}

GsvdFactors gsvd_factors(const Eigen::MatrixXd& J, const RegularizationOperator& L) {
  const int M = static_cast<int>(J.rows());
  const int n = static_cast<int>(J.cols());
  const int t = L.rows();
  if (L.cols() != n) throw std::invalid_argument("gsvd: J and L column counts differ");
  if (t > n) throw std::invalid_argument("gsvd: L must have at most n rows");
  if (M < n && M - n + t <= 0)
    throw std::invalid_argument(
        "gsvd: wide case needs 2m - n + t > 0 (L too small for this data size)");
  {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> lqr(L.matrix.transpose());
    if (lqr.rank() < t) throw std::invalid_argument("gsvd: L must have full row rank");
  }

  // QR of the stacked matrix, then a CS decomposition of the partitioned
  // orthogonal factor: K P = Q R, Q2 = V S~ W^T, Z = P R^{-1} W.
  Eigen::MatrixXd K(M + t, n);
  K.topRows(M) = J;
  K.bottomRows(t) = L.matrix;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(K);
  if (qr.rank() < n)
    throw std::invalid_argument(
        "gsvd: stacked [J; L] is rank deficient (N(J) and N(L) intersect)");
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(M + t, n);
  Eigen::MatrixXd R = qr.matrixR().topLeftCorner(n, n).triangularView<Eigen::Upper>();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Q.bottomRows(t),
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd& W = svd.matrixV();  // n x n

  GsvdFactors f;
  f.m_rows = M;
  f.t = t;
  f.tall = M >= n;
  f.pbar = f.tall ? t : M - n + t;
  f.V = svd.matrixU();
  f.s = Eigen::VectorXd::Zero(n);
  f.s.head(svd.singularValues().size()) = svd.singularValues();

  const Eigen::MatrixXd T = Q.topRows(M) * W;  // columns orthogonal, norms c_j
  f.c.resize(n);
  for (int j = 0; j < n; ++j) f.c[j] = T.col(j).norm();

  Eigen::MatrixXd RinvW = R.triangularView<Eigen::Upper>().solve(W);
  f.Z = qr.colsPermutation() * RinvW;
  f.Zinv = W.transpose() * (R * qr.colsPermutation().transpose());

  if (f.tall) {
    // Normalized T columns give the last n columns of U; complete the first
    // M - n columns from the orthogonal complement of their span.
    Eigen::MatrixXd Uc(M, n);
    for (int j = 0; j < n; ++j)
      Uc.col(j) = (f.c[j] > 0.0) ? Eigen::VectorXd(T.col(j) / f.c[j]) : T.col(j);
    f.U.resize(M, M);
    if (M > n) {
      Eigen::HouseholderQR<Eigen::MatrixXd> hqr(Uc);
      Eigen::MatrixXd Qfull = hqr.householderQ();
      f.U.leftCols(M - n) = Qfull.rightCols(M - n);
    }
    f.U.rightCols(n) = Uc;
  } else {
    // Wide case: Z columns j < n - M span N(J) and carry no U column; the
    // remaining M columns of T are nonzero and orthogonal.
    f.U.resize(M, M);
    for (int j = n - M; j < n; ++j) {
      const int jj = j + M - n;
      f.U.col(jj) = (f.c[j] > 0.0) ? Eigen::VectorXd(T.col(j) / f.c[j]) : T.col(j);
    }
  }
  return f;
}

Eigen::VectorXd tgsvd_step(const GsvdFactors& factors, const Eigen::VectorXd& r, int ell) {
  if (ell < 0 || ell > factors.pbar)
    throw std::invalid_argument("tgsvd_step: ell must lie in 0.." + std::to_string(factors.pbar));
  if (r.size() != factors.m_rows)
    throw std::invalid_argument("tgsvd_step: residual length mismatch");
  const int n = static_cast<int>(factors.Z.cols());
  const int M = factors.m_rows;
  const int t = factors.t;
  Eigen::VectorXd step = Eigen::VectorXd::Zero(n);
  for (int j = t - ell; j < n; ++j) {
    const int ucol = j + M - n;
    double coef = factors.U.col(ucol).dot(r);
    if (j < t) {  // penalized block; the unpenalized tail keeps the raw coefficient
      if (!(factors.c[j] > 0.0))
        throw std::runtime_error("tgsvd_step: zero generalized value inside kept window");
      coef /= factors.c[j];
    }
    step.noalias() -= coef * factors.Z.col(j);
  }
  return step;
}

PickResult discrepancy_pick(const std::vector<double>& residual_norms, double noise_norm,
                            double kappa) {
  if (residual_norms.empty()) throw std::invalid_argument("discrepancy_pick: no points");
  if (!(kappa > 1.0)) throw std::invalid_argument("discrepancy_pick: kappa must exceed 1");
  if (!(noise_norm >= 0.0)) throw std::invalid_argument("discrepancy_pick: negative noise norm");
  const double threshold = kappa * noise_norm;
  for (std::size_t i = 0; i < residual_norms.size(); ++i)
    if (residual_norms[i] <= threshold) return {static_cast<int>(i), {}};
  const auto it = std::min_element(residual_norms.begin(), residual_norms.end());
  return {static_cast<int>(it - residual_norms.begin()), {"discrepancy_unsatisfied"}};
}

namespace {

struct Pt {
  double x, y;  // log10 residual, log10 seminorm
  int orig;     // position in the input sequences
};

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Sharpest correctly-oriented interior wedge of the polyline; -1 if none.
int sharpest_wedge(const std::vector<Pt>& v) {
  int best = -1;
  double best_angle = -1e-6;  // require a genuinely negative (rightward) turn
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double ax = v[i].x - v[i - 1].x, ay = v[i].y - v[i - 1].y;
    const double bx = v[i + 1].x - v[i].x, by = v[i + 1].y - v[i].y;
    const double angle = std::atan2(cross2(ax, ay, bx, by), ax * bx + ay * by);
    if (angle < best_angle) {
      best_angle = angle;
      best = static_cast<int>(i);
    }
  }
  return best;
}

// Interior vertex farthest on the corner side of the chord; -1 if none.
int farthest_from_chord(const std::vector<Pt>& v) {
  const Pt& a = v.front();
  const Pt& b = v.back();
  const double cx = b.x - a.x, cy = b.y - a.y;
  const double clen = std::hypot(cx, cy);
  if (!(clen > 0.0)) return -1;
  int best = -1;
  double best_dist = 1e-9 * clen;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double d = cross2(cx, cy, v[i].x - a.x, v[i].y - a.y) / clen;
    if (d > best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

PickResult lcurve_corner(const std::vector<double>& residual_norms,
                         const std::vector<double>& seminorms) {
  if (residual_norms.size() != seminorms.size())
    throw std::invalid_argument("lcurve_corner: length mismatch");
  if (residual_norms.size() < 3) throw std::invalid_argument("lcurve_corner: need >= 3 points");

  std::vector<Pt> pts;
  for (std::size_t i = 0; i < residual_norms.size(); ++i) {
    const double r = residual_norms[i], s = seminorms[i];
    if (std::isfinite(r) && std::isfinite(s) && r > 0.0 && s > 0.0)
      pts.push_back({std::log10(r), std::log10(s), static_cast<int>(i)});
  }
  if (pts.size() < 3) {
    const int last = pts.empty() ? static_cast<int>(residual_norms.size()) - 1 : pts.back().orig;
    return {last, {"no_corner", "degenerate_curve"}};
  }
  const int V = static_cast<int>(pts.size());

  // Segment order shared by every pruning level: longest first, stable.
  std::vector<int> seg_order(V - 1);
  std::iota(seg_order.begin(), seg_order.end(), 0);
  std::vector<double> seg_len(V - 1);
  for (int i = 0; i < V - 1; ++i)
    seg_len[i] = std::hypot(pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y);
  std::stable_sort(seg_order.begin(), seg_order.end(),
                   [&](int a, int b) { return seg_len[a] > seg_len[b]; });

  std::vector<int> candidates;
  auto add_candidate = [&](int orig) {
    if (std::find(candidates.begin(), candidates.end(), orig) == candidates.end())
      candidates.push_back(orig);
  };
  int w = V - 1;
  while (true) {
    std::vector<char> keep_vertex(V, 0);
    for (int i = 0; i < w; ++i) {
      keep_vertex[seg_order[i]] = 1;
      keep_vertex[seg_order[i] + 1] = 1;
    }
    std::vector<Pt> pruned;
    for (int i = 0; i < V; ++i)
      if (keep_vertex[i]) pruned.push_back(pts[i]);
    if (pruned.size() >= 3) {
      const int a = sharpest_wedge(pruned);
      if (a >= 0) add_candidate(pruned[a].orig);
      const int b = farthest_from_chord(pruned);
      if (b >= 0) add_candidate(pruned[b].orig);
    }
    if (w == 2) break;
    w = (w + 1) / 2;
  }

  if (candidates.empty()) {
    // Degenerate curve (typically near-collinear): fall back to the discrete
    // maximum-curvature point, or the last index when there is none.
    int best = -1;
    double best_curv = 1e-10;
    for (int i = 1; i + 1 < V; ++i) {
      const double ax = pts[i].x - pts[i - 1].x, ay = pts[i].y - pts[i - 1].y;
      const double bx = pts[i + 1].x - pts[i].x, by = pts[i + 1].y - pts[i].y;
      const double cr = cross2(ax, ay, bx, by);
      if (cr >= 0.0) continue;  // wrong orientation for a corner
      const double la = std::hypot(ax, ay), lb = std::hypot(bx, by);
      const double lc = std::hypot(ax + bx, ay + by);
      if (!(la > 0.0 && lb > 0.0 && lc > 0.0)) continue;
      const double curv = 2.0 * std::abs(cr) / (la * lb * lc);
      if (curv > best_curv) {
        best_curv = curv;
        best = i;
      }
    }
    return {best >= 0 ? pts[best].orig : pts.back().orig, {"no_corner"}};
  }

  // Final choice: candidate closest to the lower-left corner of the
  // normalized bounding box (small residual, small seminorm).
  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const Pt& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double xr = xmax > xmin ? xmax - xmin : 1.0;
  const double yr = ymax > ymin ? ymax - ymin : 1.0;
  int best = candidates.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (int orig : candidates) {
    const Pt& p = *std::find_if(pts.begin(), pts.end(),
                                [&](const Pt& q) { return q.orig == orig; });
    const double dx = (p.x - xmin) / xr, dy = (p.y - ymin) / yr;
    const double d = dx * dx + dy * dy;
    if (d < best_d - 1e-15 || (std::abs(d - best_d) <= 1e-15 && orig < best)) {
      best_d = d;
      best = orig;
    }
  }
  return {best, {}};
}

PickResult resreg_pick(const std::vector<double>& residual_norms,
                       const std::vector<double>& seminorms) {
  if (residual_norms.size() != seminorms.size())
    throw std::invalid_argument("resreg_pick: length mismatch");
  const int N = static_cast<int>(residual_norms.size());
  if (N < 2) throw std::invalid_argument("resreg_pick: need >= 2 points");

  auto psi = [&](int i) { return residual_norms[i] * seminorms[i]; };

  // Maximal contiguous runs where the residual is nonincreasing and the
  // seminorm nondecreasing; these are the index sets the restriction allows.
  std::vector<std::pair<int, int>> runs;
  int a = 0;
  for (int i = 0; i + 1 < N; ++i) {
    const bool ok = residual_norms[i + 1] <= residual_norms[i] && seminorms[i + 1] >= seminorms[i];
    if (!ok) {
      if (i > a) runs.emplace_back(a, i);
      a = i + 1;
    }
  }
  if (N - 1 > a) runs.emplace_back(a, N - 1);

  if (runs.empty()) {
    int best = 0;
    for (int i = 1; i < N; ++i)
      if (psi(i) < psi(best)) best = i;
    return {best, {"resreg_unrestricted"}};
  }

  const int g = static_cast<int>(std::min_element(residual_norms.begin(), residual_norms.end()) -
                                 residual_norms.begin());
  std::pair<int, int> pick{-1, -1};
  for (const auto& run : runs) {  // prefer the run holding the global residual descent
    if (run.first <= g && g <= run.second &&
        (pick.first < 0 || run.second - run.first > pick.second - pick.first))
      pick = run;
  }
  if (pick.first < 0) {
    for (const auto& run : runs)
      if (pick.first < 0 || run.second - run.first > pick.second - pick.first) pick = run;
  }

  int best = pick.first;
  for (int i = pick.first + 1; i <= pick.second; ++i)
    if (psi(i) < psi(best)) best = i;
  return {best, {}};
}

}  // namespace emsound
