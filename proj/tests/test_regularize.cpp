#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emsound/regularize.hpp"
#include "emsound/rng.hpp"

using namespace emsound;

namespace {

Eigen::MatrixXd random_matrix(NormalRng& rng, int rows, int cols) {
  Eigen::MatrixXd A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = rng.normal();
  return A;
}

// Full structural audit of one factorization.
void check_gsvd(const Eigen::MatrixXd& J, const RegularizationOperator& L) {
  const GsvdFactors F = gsvd_factors(J, L);
  const int M = static_cast<int>(J.rows());
  const int n = static_cast<int>(J.cols());
  const int t = L.rows();
  REQUIRE(F.m_rows == M);
  REQUIRE(F.t == t);
  REQUIRE(F.tall == (M >= n));
  REQUIRE(F.pbar == (M >= n ? t : M - n + t));

  CHECK((F.U.transpose() * F.U - Eigen::MatrixXd::Identity(M, M)).norm() <= 1e-12 * M);
  CHECK((F.V.transpose() * F.V - Eigen::MatrixXd::Identity(t, t)).norm() <= 1e-12 * t);
  CHECK((F.Z * F.Zinv - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-10 * n);

  Eigen::MatrixXd SigmaJ = Eigen::MatrixXd::Zero(M, n);
  for (int j = std::max(0, n - M); j < n; ++j) SigmaJ(j + M - n, j) = F.c[j];
  CHECK((J - F.U * SigmaJ * F.Zinv).norm() <= 1e-10 * std::max(1.0, J.norm()));

  Eigen::MatrixXd SigmaL = Eigen::MatrixXd::Zero(t, n);
  for (int j = 0; j < t; ++j) SigmaL(j, j) = F.s[j];
  CHECK((L.matrix - F.V * SigmaL * F.Zinv).norm() <= 1e-10 * std::max(1.0, L.matrix.norm()));

  for (int j = 0; j < n; ++j)
    CHECK(F.c[j] * F.c[j] + F.s[j] * F.s[j] == doctest::Approx(1.0).epsilon(1e-12));
  // generalized values c/s nondecreasing over the penalized block
  for (int j = 0; j + 1 < t; ++j)
    CHECK(F.c[j] * F.s[j + 1] <= F.c[j + 1] * F.s[j] + 1e-12);
  // pairing identity J z_j = c_j u_{j+M-n}, L z_j = s_j v_j
  for (int j = std::max(0, n - M); j < n; ++j)
    CHECK((J * F.Z.col(j) - F.c[j] * F.U.col(j + M - n)).norm() <=
          1e-10 * std::max(1.0, J.norm()));
  for (int j = 0; j < t; ++j)
    CHECK((L.matrix * F.Z.col(j) - F.s[j] * F.V.col(j)).norm() <=
          1e-10 * std::max(1.0, L.matrix.norm()));
}

}  // namespace

TEST_CASE("difference operators have the exact stencils") {
  const RegularizationOperator I = build_operator(RegKind::identity, 4);
  CHECK(I.matrix == Eigen::MatrixXd::Identity(4, 4));

  const RegularizationOperator D1 = build_operator(RegKind::first_difference, 3);
  Eigen::MatrixXd d1(2, 3);
  d1 << -1, 1, 0, 0, -1, 1;
  CHECK(D1.matrix == d1);

  const RegularizationOperator D2 = build_operator(RegKind::second_difference, 4);
  Eigen::MatrixXd d2(2, 4);
  d2 << 1, -2, 1, 0, 0, 1, -2, 1;
  CHECK(D2.matrix == d2);

  // Constants are annihilated by both difference operators.
  CHECK((D1.matrix * Eigen::VectorXd::Ones(3)).norm() == 0.0);
  CHECK((D2.matrix * Eigen::VectorXd::Ones(4)).norm() == 0.0);
  // Affine profiles are annihilated by D2 only.
  Eigen::VectorXd lin(4);
  lin << 1, 2, 3, 4;
  CHECK((D2.matrix * lin).norm() == 0.0);

  CHECK_THROWS_AS(build_operator(RegKind::identity, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_operator(RegKind::first_difference, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_operator(RegKind::second_difference, 2), std::invalid_argument);
}

TEST_CASE("TSVD steps on a diagonal system") {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2, 2);
  J(0, 0) = 2.0;
  J(1, 1) = 1.0;
  const SvdFactors F = svd_factors(J);
  REQUIRE(F.p == 2);
  CHECK(F.gamma[0] == doctest::Approx(2.0));
  CHECK(F.gamma[1] == doctest::Approx(1.0));

  Eigen::VectorXd r(2);
  r << 2.0, 3.0;
  const Eigen::VectorXd s1 = tsvd_step(F, r, 1);
  CHECK(s1[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s1[1] == doctest::Approx(0.0).epsilon(1e-14));
  const Eigen::VectorXd s2 = tsvd_step(F, r, 2);
  CHECK(s2[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s2[1] == doctest::Approx(-3.0).epsilon(1e-14));

  CHECK_THROWS_AS(tsvd_step(F, r, 0), std::invalid_argument);
  CHECK_THROWS_AS(tsvd_step(F, r, 3), std::invalid_argument);
  CHECK_THROWS_AS(tsvd_step(F, Eigen::VectorXd::Zero(3), 1), std::invalid_argument);
}

TEST_CASE("full TSVD step is the least-squares step") {
  NormalRng rng(21);
  const Eigen::MatrixXd J = random_matrix(rng, 9, 5);
  Eigen::VectorXd r(9);
  for (int i = 0; i < 9; ++i) r[i] = rng.normal();
  const SvdFactors F = svd_factors(J);
  REQUIRE(F.p == 5);
  const Eigen::VectorXd s = tsvd_step(F, r, 5);
  const Eigen::VectorXd ls = J.colPivHouseholderQr().solve(-r);
  CHECK((s - ls).norm() <= 1e-10 * ls.norm());
}

TEST_CASE("residuals orthogonal to the kept subspace give a zero step") {
  NormalRng rng(77);
  const Eigen::MatrixXd J = random_matrix(rng, 8, 4);
  const SvdFactors F = svd_factors(J);
  // r in the span of u_3, u_4 (and the left null space): step for ell = 2 is 0.
  Eigen::VectorXd r = F.U.col(2) + 0.5 * F.U.col(3) + 2.0 * F.U.col(6);
  const Eigen::VectorXd s = tsvd_step(F, r, 2);
  CHECK(s.norm() <= 1e-13);
}

TEST_CASE("TSVD data residual is monotone in the truncation index") {
  NormalRng rng(4);
  const Eigen::MatrixXd J = random_matrix(rng, 10, 6);
  Eigen::VectorXd r(10);
  for (int i = 0; i < 10; ++i) r[i] = rng.normal();
  const SvdFactors F = svd_factors(J);
  double prev = r.norm();
  for (int ell = 1; ell <= F.p; ++ell) {
    const double now = (r + J * tsvd_step(F, r, ell)).norm();
    CHECK(now <= prev + 1e-12);
    prev = now;
  }
}

TEST_CASE("GSVD reconstructs random pairs in tall and wide shapes") {
  NormalRng rng(31);
  SUBCASE("one tall pair, D1") {
    const Eigen::MatrixXd J = random_matrix(rng, 8, 4);
    check_gsvd(J, build_operator(RegKind::first_difference, 4));
  }
  SUBCASE("one wide pair, D1") {
    const Eigen::MatrixXd J = random_matrix(rng, 4, 8);
    check_gsvd(J, build_operator(RegKind::first_difference, 8));
  }
  SUBCASE("random sweep over shapes and operators") {
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 4 + static_cast<int>(rng.uniform(0.0, 9.0));
      const bool tall = trial % 2 == 0;
      const int M = tall ? n + 1 + static_cast<int>(rng.uniform(0.0, 6.0))
                         : std::max(3, n - 1 - static_cast<int>(rng.uniform(0.0, 2.0)));
      const RegKind kind = trial % 3 == 0 ? RegKind::identity
                          : trial % 3 == 1 ? RegKind::first_difference
                                           : RegKind::second_difference;
      const RegularizationOperator L = build_operator(kind, n);
      // wide shapes need M - n + t > 0
      if (M < n && M - n + L.rows() <= 0) continue;
      check_gsvd(random_matrix(rng, M, n), L);
    }
  }
}

TEST_CASE("GSVD rejects overlapping null spaces and bad shapes") {
  // D2 as the data matrix and D1 as the operator: both annihilate constants.
  const Eigen::MatrixXd J = build_operator(RegKind::second_difference, 5).matrix;
  const RegularizationOperator D1 = build_operator(RegKind::first_difference, 5);
  CHECK_THROWS_AS(gsvd_factors(J, D1), std::invalid_argument);

  NormalRng rng(9);
  const Eigen::MatrixXd A = random_matrix(rng, 6, 4);
  RegularizationOperator wrong = build_operator(RegKind::first_difference, 5);
  CHECK_THROWS_AS(gsvd_factors(A, wrong), std::invalid_argument);

  RegularizationOperator rank_deficient = build_operator(RegKind::first_difference, 4);
  rank_deficient.matrix.row(1) = rank_deficient.matrix.row(0);
  CHECK_THROWS_AS(gsvd_factors(A, rank_deficient), std::invalid_argument);
}

TEST_CASE("TGSVD with L = I reproduces TSVD steps") {
  NormalRng rng(13);
  const Eigen::MatrixXd J = random_matrix(rng, 9, 5);
  Eigen::VectorXd r(9);
  for (int i = 0; i < 9; ++i) r[i] = rng.normal();
  const SvdFactors S = svd_factors(J);
  const GsvdFactors G = gsvd_factors(J, build_operator(RegKind::identity, 5));
  for (int ell = 1; ell <= 5; ++ell) {
    const Eigen::VectorXd a = tsvd_step(S, r, ell);
    const Eigen::VectorXd b = tgsvd_step(G, r, ell);
    CHECK((a - b).norm() <= 1e-8 * (1.0 + a.norm()));
  }
}

TEST_CASE("TGSVD window bounds and the ell = 0 step") {
  NormalRng rng(41);
  const Eigen::MatrixXd J = random_matrix(rng, 10, 6);
  const RegularizationOperator D1 = build_operator(RegKind::first_difference, 6);
  const GsvdFactors F = gsvd_factors(J, D1);
  REQUIRE(F.pbar == 5);
  Eigen::VectorXd r(10);
  for (int i = 0; i < 10; ++i) r[i] = rng.normal();

  // ell = 0 keeps only the unpenalized tail: the step lies in N(L) = constants.
  const Eigen::VectorXd s0 = tgsvd_step(F, r, 0);
  CHECK((D1.matrix * s0).norm() <= 1e-10 * std::max(1.0, s0.norm()));

  CHECK_THROWS_AS(tgsvd_step(F, r, -1), std::invalid_argument);
  CHECK_THROWS_AS(tgsvd_step(F, r, F.pbar + 1), std::invalid_argument);
  CHECK_THROWS_AS(tgsvd_step(F, Eigen::VectorXd::Zero(9), 1), std::invalid_argument);

  // Data residual is monotone in ell here too.
  double prev = (r + J * s0).norm();
  for (int ell = 1; ell <= F.pbar; ++ell) {
    const double now = (r + J * tgsvd_step(F, r, ell)).norm();
    CHECK(now <= prev + 1e-12);
    prev = now;
  }
}

TEST_CASE("discrepancy principle picks the first index under the threshold") {
  const std::vector<double> res{5.0, 2.0, 1.0, 0.9};
  const PickResult pick = discrepancy_pick(res, 1.0, 1.5);
  CHECK(pick.index == 2);
  CHECK(pick.flags.empty());

  // Scaling both the residuals and the noise leaves the pick unchanged.
  std::vector<double> scaled = res;
  for (double& x : scaled) x *= 3.7;
  CHECK(discrepancy_pick(scaled, 3.7, 1.5).index == 2);

  const PickResult fallback = discrepancy_pick(res, 0.1, 1.5);
  CHECK(fallback.index == 3);  // argmin
  REQUIRE(fallback.flags.size() == 1);
  CHECK(fallback.flags[0] == "discrepancy_unsatisfied");

  CHECK_THROWS_AS(discrepancy_pick({}, 1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(discrepancy_pick(res, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(discrepancy_pick(res, -1.0, 1.5), std::invalid_argument);
}

TEST_CASE("L-curve corner detection on an ideal L") {
  // Steep descent in residual down to the corner at index 5, then the
  // seminorm blows up while the residual barely moves.
  std::vector<double> res, semi;
  for (int i = 0; i <= 5; ++i) {
    res.push_back(std::pow(10.0, 5 - i));
    semi.push_back(1.0);
  }
  for (int i = 6; i < 15; ++i) {
    res.push_back(std::pow(10.0, -0.01 * (i - 5)));
    semi.push_back(std::pow(10.0, i - 5));
  }
  const PickResult pick = lcurve_corner(res, semi);
  CHECK(pick.index == 5);
  CHECK(pick.flags.empty());
}

TEST_CASE("straight log-log lines have no corner") {
  std::vector<double> res, semi;
  for (int i = 0; i < 10; ++i) {
    res.push_back(std::pow(10.0, -i));
    semi.push_back(std::pow(10.0, i));
  }
  const PickResult pick = lcurve_corner(res, semi);
  CHECK(pick.index == 9);
  REQUIRE(!pick.flags.empty());
  CHECK(pick.flags[0] == "no_corner");
}

TEST_CASE("L-curve filters nonpositive points but reports original indices") {
  std::vector<double> res{0.0, 1e3, 1e0, 0.99, 0.98};
  std::vector<double> semi{1.0, 1.0, 1.0, 1e2, 1e4};
  const PickResult pick = lcurve_corner(res, semi);
  CHECK(pick.index == 2);  // corner of the valid sub-curve, original numbering

  // Fewer than three valid points: degenerate.
  const PickResult degenerate = lcurve_corner({0.0, -1.0, 2.0}, {1.0, 1.0, 1.0});
  CHECK(degenerate.index == 2);
  CHECK(degenerate.flags ==
        std::vector<std::string>{"no_corner", "degenerate_curve"});

  CHECK_THROWS_AS(lcurve_corner({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(lcurve_corner({1.0, 2.0, 3.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("restricted product rule picks the monotone-run minimizer") {
  const std::vector<double> res{6.0, 2.0, 1.5, 1.0};
  const std::vector<double> semi{1.0, 1.0, 2.0, 8.0};
  // psi = (6, 2, 3, 8); the whole range is one valid run containing the
  // global residual minimum, so the pick is index 1.
  const PickResult pick = resreg_pick(res, semi);
  CHECK(pick.index == 1);
  CHECK(pick.flags.empty());
}

TEST_CASE("restricted product rule tie-breaks toward the smaller index") {
  const std::vector<double> res{4.0, 2.0, 1.0};
  const std::vector<double> semi{1.0, 2.0, 4.0};
  // psi = (4, 4, 4): all tied inside one run.
  CHECK(resreg_pick(res, semi).index == 0);
}

TEST_CASE("restricted product rule falls back when no run exists") {
  const std::vector<double> res{1.0, 2.0, 3.0};
  const std::vector<double> semi{3.0, 2.0, 1.0};
  // Residual rises and seminorm falls everywhere: no valid run.
  const PickResult pick = resreg_pick(res, semi);
  CHECK(pick.index == 0);  // psi = (3, 4, 3), tie -> smaller index
  REQUIRE(!pick.flags.empty());
  CHECK(pick.flags[0] == "resreg_unrestricted");

  CHECK_THROWS_AS(resreg_pick({1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(resreg_pick({1.0, 2.0}, {1.0}), std::invalid_argument);
}
