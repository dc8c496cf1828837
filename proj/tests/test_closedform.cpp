#include <gtest/gtest.h>

#include <cmath>

#include "sbm/closedform.hpp"
#include "sbm/eig.hpp"
#include "sbm/entangle.hpp"
#include "sbm/errors.hpp"
#include "sbm/gsi.hpp"
#include "sbm/model.hpp"

using namespace sbm;

namespace {

double numeric_energy(int lambda, double r, double k) {
  const auto p = ModelParams::single_mode(2, r, k);
  return lambda + lowest_eigenpair(build_single_mode_block(p, Excitation::integer(lambda)).matrix).value;
}

double numeric_concurrence(int lambda, double r, double k) {
  const auto p = ModelParams::single_mode(2, r, k);
  return spin_concurrence(block_ground_state(p, Excitation::integer(lambda)), 2);
}

}  // namespace

TEST(ClosedForm, Energies) {
  EXPECT_EQ(energy_closed(-1, 0.3, 2.0), -1.0);
  EXPECT_NEAR(energy_closed(0, 0.0, 0.5), -std::sqrt(2.0) * 0.5, 1e-15);
  for (double k : {0.1, 0.7, 2.3}) EXPECT_NEAR(energy_closed(1, 0.0, k), 1 - std::sqrt(6.0) * k, 1e-13);
  EXPECT_EQ(energy_closed(4, 0.0, 0.0), 4.0);
  EXPECT_THROW(energy_closed(-2, 0.0, 1.0), DomainError);
}

TEST(ClosedForm, EnergiesMatchBlocks) {
  for (double r : {-0.9, -0.5, 0.0, 0.5, 1.0, 5.0, 10.0}) {
    for (int lambda = -1; lambda <= 40; lambda += 3) {
      for (double k : {0.06, 0.5, 1.37, 3.0}) {
        EXPECT_NEAR(energy_closed(lambda, r, k), numeric_energy(lambda, r, k), 1e-10)
            << "r=" << r << " lambda=" << lambda << " kappa=" << k;
      }
    }
  }
}

TEST(ClosedForm, AuxiliaryAngleRanges) {
  for (double r : {0.01, 0.5, 3.0, 50.0}) {
    for (int lambda = 1; lambda <= 30; ++lambda) {
      for (double k : {0.01, 0.3, 1.0, 4.0}) {
        const auto aux = closed_form_auxiliaries(lambda, r, k);
        EXPECT_EQ(aux.tau, 1 + 2 * lambda);
        EXPECT_GE(aux.phi, std::acos(1.0 / aux.tau) - 1e-12);
        EXPECT_LE(aux.phi, std::acos(-1.0 / aux.tau) + 1e-12);
        EXPECT_NEAR(aux.zeta, std::cos(aux.theta), 1e-15);
        EXPECT_GT(aux.zeta, 0.80);
        EXPECT_LT(aux.zeta, 0.92);
      }
    }
  }
  EXPECT_THROW(closed_form_auxiliaries(1, 0.0, 0.0), DomainError);
}

TEST(ClosedForm, EigenvectorExamples) {
  const auto v0 = eigenvector_closed(0, 0.0, 0.8);
  EXPECT_NEAR(v0.amplitudes[0], 1.0, 1e-14);
  const auto v1 = eigenvector_closed(0, 1.0, 1.0);
  EXPECT_NEAR(v1.amplitudes[0], std::sqrt(2.0), 1e-14);
  const auto n1 = v1.normalized();
  EXPECT_NEAR(n1[0] * n1[0], 2.0 / 3.0, 1e-14);
  EXPECT_THROW(eigenvector_closed(1, 1.0, 0.0), DomainError);
  EXPECT_THROW(eigenvector_closed(-1, 1.0, 1.0), DomainError);
}

TEST(ClosedForm, EigenvectorsMatchBlocks) {
  for (double r : {-0.6, 0.0, 1.0, 4.0}) {
    for (int lambda = 0; lambda <= 12; ++lambda) {
      for (double k : {0.2, 1.0, 2.0}) {
        const auto p = ModelParams::single_mode(2, r, k);
        const auto block = build_single_mode_block(p, Excitation::integer(lambda));
        const Eigen::VectorXd numeric = lowest_eigenpair(block.matrix).vector;
        const auto closed = eigenvector_closed(lambda, r, k).normalized();
        ASSERT_EQ(static_cast<int>(closed.size()), block.dimension());
        double norm = 0.0;
        for (double c : closed) norm += c * c;
        EXPECT_NEAR(norm, 1.0, 1e-12);
        // Amplitudes are listed by descending m; blocks use ascending photon
        // number, which is the same order. Odd photon numbers flip sign.
        double same = 0.0, flipped = 0.0;
        for (int i = 0; i < block.dimension(); ++i) {
          const double parity = block.basis[i].photon_numbers[0] % 2 ? -1.0 : 1.0;
          same += std::abs(std::abs(numeric(i)) - std::abs(closed[i]));
          flipped += parity * closed[i] * numeric(i);
        }
        EXPECT_LT(same, 1e-9);
        EXPECT_NEAR(std::abs(flipped), 1.0, 1e-9) << "r=" << r << " lambda=" << lambda << " k=" << k;
      }
    }
  }
}

TEST(ClosedForm, ConcurrenceExamples) {
  for (double k : {0.3, 0.8, 2.0}) EXPECT_NEAR(c0_closed(0.0, k), 0.5, 1e-14);
  EXPECT_NEAR(c0_closed(1.0, 1.0), 2.0 / 3.0, 1e-14);
  for (double k : {0.5, 1.2}) {
    EXPECT_NEAR(clambda_closed(1, 0.0, k), std::pow(std::sqrt(2.0) - 1, 2) / 6, 1e-12);
    EXPECT_NEAR(clambda_closed(2, 0.0, k), std::pow(std::sqrt(3.0) - std::sqrt(2.0), 2) / 10, 1e-12);
  }
  for (double k = 1.7; k <= 3.13; k += 0.1) {
    EXPECT_EQ(clambda_closed(1, 1.3, k), 0.0);
    EXPECT_LT(clambda_closed_raw(1, 1.3, k), 0.0);
  }
  EXPECT_THROW(c0_closed(0.0, 0.0), DomainError);
  EXPECT_THROW(clambda_closed(0, 0.0, 1.0), DomainError);
}

TEST(ClosedForm, ResonantConcurrence) {
  EXPECT_DOUBLE_EQ(clambda_resonant(0), 0.5);
  EXPECT_NEAR(clambda_resonant(1), 0.0285954792089682, 1e-15);
  EXPECT_LT(clambda_resonant(1000), 1e-7);
  for (int l = 1; l < 50; ++l) EXPECT_LT(clambda_resonant(l), clambda_resonant(l - 1));
  EXPECT_THROW(clambda_resonant(-1), DomainError);
}

TEST(ClosedForm, ConcurrencesMatchNumericPipeline) {
  for (double r : {-0.9, -0.3, 0.0, 0.5, 1.0, 1.3, 3.0}) {
    for (double k : {0.1, 0.6, 1.5, 3.0}) {
      EXPECT_NEAR(c0_closed(r, k), numeric_concurrence(0, r, k), 1e-10);
      for (int lambda = 1; lambda <= 10; ++lambda) {
        EXPECT_NEAR(clambda_closed(lambda, r, k), numeric_concurrence(lambda, r, k), 1e-9)
            << "r=" << r << " lambda=" << lambda << " k=" << k;
      }
    }
  }
}

TEST(ClosedForm, EnergiesNonIncreasingInKappa) {
  for (double r : {-0.5, 0.0, 2.0}) {
    for (int lambda = 0; lambda <= 10; ++lambda) {
      double previous = energy_closed(lambda, r, 0.0);
      for (int i = 1; i <= 400; ++i) {
        const double e = energy_closed(lambda, r, 0.01 * i);
        EXPECT_LE(e, previous + 1e-12);
        previous = e;
      }
    }
  }
}
