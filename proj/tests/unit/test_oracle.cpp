#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dirac_rm/errors.hpp"
#include "dirac_rm/oracle.hpp"

using namespace dirac_rm;

namespace {

TridiagonalOperator make_op(std::vector<double> d, std::vector<double> e) {
  TridiagonalOperator op;
  op.r.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) op.r[i] = static_cast<double>(i);
  op.diagonal = std::move(d);
  op.off_diagonal = std::move(e);
  return op;
}

// Cyclic Jacobi rotations on a small dense symmetric matrix.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

ModelConfig spin_set() {
  ModelConfig m;
  m.mass = 5.0;
  m.symmetry = Symmetry::spin(0.0);
  m.params = PotentialParams::rosen_morse(4.0, 1.0, 1.0);
  return m;
}

}  // namespace

TEST(Tridiagonal, TwoByTwo) {
  const auto op = make_op({2.0, 2.0}, {-1.0});
  const auto ev = eigenvalues(op, 2, Exec::serial);
  EXPECT_NEAR(ev[0], 1.0, 1e-12);
  EXPECT_NEAR(ev[1], 3.0, 1e-12);
  EXPECT_EQ(sturm_count(op, 2.0), 1);
  EXPECT_EQ(sturm_count(op, 0.5), 0);
  EXPECT_EQ(sturm_count(op, 10.0), 2);
}

TEST(Tridiagonal, DiagonalMatrix) {
  const auto op = make_op({4.0, -1.0, 2.5, 0.0}, {0.0, 0.0, 0.0});
  const auto ev = eigenvalues(op, 4, Exec::serial);
  const std::vector<double> expected{-1.0, 0.0, 2.5, 4.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(Tridiagonal, RandomFiveByFiveAgainstJacobi) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> d(5);
    std::vector<double> e(4);
    for (auto& x : d) x = u(rng);
    for (auto& x : e) x = u(rng);
    std::vector<std::vector<double>> dense(5, std::vector<double>(5, 0.0));
    for (std::size_t i = 0; i < 5; ++i) dense[i][i] = d[i];
    for (std::size_t i = 0; i < 4; ++i) dense[i][i + 1] = dense[i + 1][i] = e[i];
    const auto expected = jacobi_eigenvalues(dense);
    const auto ev = eigenvalues(make_op(d, e), 5, Exec::serial);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-10);
  }
}

TEST(Tridiagonal, TooManyEigenvalues) {
  EXPECT_THROW(eigenvalues(make_op({1.0, 2.0}, {0.5}), 3), InvalidArgument);
}

TEST(Discretize, FreeBoxMatchesDiscreteSpectrum) {
  const auto cfg = OracleConfig::half_line(std::numbers::pi, 1000);
  const auto op = discretize_potential([](double) { return 0.0; }, cfg);
  const double h = cfg.spacing();
  EXPECT_NEAR(h, std::numbers::pi / 1001.0, 1e-15);
  const auto ev = eigenvalues(op, 4, Exec::serial);
  for (int k = 1; k <= 4; ++k) {
    const double exact = 4.0 / (h * h) * std::pow(std::sin(k * h / 2.0), 2);
    EXPECT_NEAR(ev[static_cast<std::size_t>(k - 1)], exact, 1e-9);
    EXPECT_NEAR(ev[static_cast<std::size_t>(k - 1)], k * k, 1e-4 * k * k * k * k);
    EXPECT_EQ(node_count(op, ev[static_cast<std::size_t>(k - 1)]), k - 1);
  }
}

TEST(Discretize, ConstantShift) {
  const auto cfg = OracleConfig::half_line(std::numbers::pi, 500);
  const auto a = eigenvalues(discretize_potential([](double) { return 0.0; }, cfg), 3);
  const auto b = eigenvalues(discretize_potential([](double) { return 2.75; }, cfg), 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(b[i] - a[i], 2.75, 1e-10);
}

TEST(Discretize, SechSquaredWell) {
  const auto cfg = OracleConfig::full_line(15.0, 4000);
  // beta = 1: one bound level at -alpha^2.
  const auto one = discretize(EffectiveCoefficients{-2.0, 0.0, 0.0}, 1.0, cfg);
  EXPECT_NEAR(eigenvalue(one, 0), -1.0, 1e-4);
  EXPECT_GT(eigenvalue(one, 1), -1e-3);
  EXPECT_EQ(node_count(one, eigenvalue(one, 0)), 0);
  // beta = 2 at alpha = 0.8: levels at -4 a^2 and -a^2.
  const auto two = discretize(EffectiveCoefficients{-6.0 * 0.64, 0.0, 0.0}, 0.8, cfg);
  EXPECT_NEAR(eigenvalue(two, 0), -4.0 * 0.64, 1e-4);
  EXPECT_NEAR(eigenvalue(two, 1), -0.64, 1e-4);
  EXPECT_EQ(node_count(two, eigenvalue(two, 1)), 1);
}

TEST(Discretize, RejectsComplexCoefficients) {
  const auto cfg = OracleConfig::full_line(15.0, 400);
  EXPECT_THROW(discretize(EffectiveCoefficients{-2.0, cplx(0.0, 1.0), 0.0}, 1.0, cfg),
               InvalidArgument);
}

TEST(Discretize, DeterministicEigenvalues) {
  const auto cfg = OracleConfig::full_line(15.0, 2000);
  const auto op = discretize(EffectiveCoefficients{-6.0, 1.0, 0.0}, 1.0, cfg);
  EXPECT_EQ(eigenvalues(op, 3, Exec::serial), eigenvalues(op, 3, Exec::serial));
  const auto ev = eigenvalues(op, 3);
  EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
}

TEST(Config, Validation) {
  EXPECT_THROW(OracleConfig::full_line(15.0, 100).validate(1.0), InvalidArgument);
  EXPECT_THROW(OracleConfig::full_line(4.0, 1000).validate(1.0), InvalidArgument);
  EXPECT_NO_THROW(OracleConfig::full_line(15.0, 1000).validate(1.0));
  EXPECT_NEAR(OracleConfig::full_line(15.0, 5999).spacing(), 30.0 / 6000.0, 1e-15);
}

TEST(SelfConsistent, SpinLevelsAgreeWithClosedForm) {
  const auto cfg = OracleConfig::full_line(15.0, 3000);
  const double expected[] = {1.6291417082837670981, 2.727643233013997256, 3.4897669435597037069};
  for (int n = 0; n < 3; ++n) {
    const double e = self_consistent_energy(spin_set(), cfg, n);
    EXPECT_NEAR(e, expected[n], 5e-4) << "n=" << n;
    const auto eff = effective_coefficients(spin_set(), e);
    const auto op = discretize(eff, 1.0, cfg);
    EXPECT_EQ(node_count(op, eigenvalue(op, n)), n);
  }
}

TEST(SelfConsistent, ReflectionlessLevel) {
  ModelConfig m;
  m.mass = 1.0;
  m.params = PotentialParams::reflectionless(1, 1.0);
  const double e = self_consistent_energy(m, OracleConfig::full_line(15.0, 4000), 0);
  EXPECT_NEAR(e, 0.54368901269207636157, 5e-4);
}

TEST(SelfConsistent, GridConvergenceIsSecondOrder) {
  ModelConfig m = spin_set();
  const double exact = 1.6291417082837670981;
  std::vector<double> err;
  for (int points : {999, 1999, 3999}) {
    err.push_back(std::abs(self_consistent_energy(m, OracleConfig::full_line(15.0, points), 0) - exact));
  }
  const double ratio = (err[0] - err[1]) / (err[1] - err[2]);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(SelfConsistent, NoWellHasNoBoundState) {
  ModelConfig m = spin_set();
  m.params = PotentialParams::rosen_morse(0.0, 0.0, 1.0);
  EXPECT_THROW(self_consistent_energy(m, OracleConfig::full_line(15.0, 1000), 0), NoBoundState);
}

TEST(SelfConsistent, ScanIsReproducible) {
  const auto cfg = OracleConfig::full_line(15.0, 1000);
  EXPECT_EQ(self_consistent_scan(spin_set(), cfg, 0, Exec::serial),
            self_consistent_scan(spin_set(), cfg, 0, Exec::serial));
}

TEST(SelfConsistent, HalfLineFindsLevel) {
  const auto cfg = OracleConfig::half_line(15.0, 3000);
  const auto [lo, hi] = spin_set().window();
  const auto energies = self_consistent_energies(spin_set(), cfg, 0);
  ASSERT_FALSE(energies.empty());
  for (double e : energies) {
    EXPECT_GT(e, lo);
    EXPECT_LT(e, hi);
  }
}
