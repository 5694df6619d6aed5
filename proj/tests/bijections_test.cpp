#include <gtest/gtest.h>

#include <set>

#include "rrcomb/bijections.hpp"
#include "rrcomb/durfee.hpp"
#include "rrcomb/errors.hpp"

using namespace rrcomb;

namespace {

const Partition kFig4({10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1});
const Partition kFig4Hat({10, 9, 9, 7, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1});
const Partition kFig5({14, 10, 9, 9, 8, 7, 7, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1});
const Partition kFig5Hat({13, 10, 9, 8, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1});

}  // namespace

TEST(Phi, WorkedExample) {
  EXPECT_EQ(phi(kFig4), kFig4Hat);
  EXPECT_EQ(phi(kFig4Hat), kFig4);
  EXPECT_EQ(rank_2m(kFig4, 0), 1);
  EXPECT_EQ(rank_2m(kFig4Hat, 0), -1);
}

TEST(Phi, FiveTupleOfWorkedExample) {
  const auto f = phi_split(*decompose(kFig4, 0));
  EXPECT_EQ(f.mu, Partition({2, 1, 1}));
  EXPECT_EQ(f.sigma.size() + f.rho.size(), 7);
  EXPECT_EQ(phi_assemble(f, 6, 3), *decompose(kFig4Hat, 0));
}

TEST(Phi, Smallest) {
  EXPECT_EQ(phi(Partition({2, 1})), Partition({1, 1, 1}));
  EXPECT_EQ(phi(Partition({1, 1, 1})), Partition({2, 1}));
  EXPECT_EQ(phi(Partition({1, 1})), Partition({1, 1}));
}

TEST(Phi, RejectsRogersRamanujanAndNonzeroOffset) {
  EXPECT_THROW(phi(Partition({3, 3})), DomainError);
  EXPECT_THROW(phi(Partition()), DomainError);
  EXPECT_THROW(phi_split(*decompose(kFig4, 1)), DomainError);
}

TEST(Phi, InvolutionExhaustive) {
  for (int n = 2; n <= 22; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      if (is_rogers_ramanujan(lambda)) return;
      const auto d = *decompose(lambda, 0);
      const auto image = phi(lambda);
      const auto di = *decompose(image, 0);
      EXPECT_EQ(image.size(), n);
      EXPECT_EQ(di.s, d.s);
      EXPECT_EQ(di.t, d.t);
      EXPECT_EQ(rank_2m(di), -rank_2m(d)) << lambda;
      EXPECT_EQ(phi(image), lambda) << lambda;
    });
  }
}

TEST(Phi, ColumnSplitIsMonotone) {
  // rho + sigma recovers gamma' and rho stays inside the s - t columns.
  for (int n = 2; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      if (is_rogers_ramanujan(lambda)) return;
      const auto d = *decompose(lambda, 0);
      const auto f = phi_split(d);
      for (int j = 1; j < f.rho.length(); ++j) EXPECT_GE(f.rho.part(j), f.rho.part(j + 1));
      const auto gamma_c = conjugate(d.gamma);
      for (int j = 1; j <= gamma_c.length(); ++j) {
        EXPECT_LE(f.rho.part(j), d.s - d.t);
        EXPECT_EQ(f.rho.part(j) + f.sigma.part(j), gamma_c.part(j));
      }
      EXPECT_EQ(phi_assemble(f, d.s, d.t).beta, f.rho);
    });
  }
}

TEST(Psi, WorkedExample) {
  const auto d = *decompose(kFig5, 0);
  EXPECT_EQ(d.s, 7);
  EXPECT_EQ(d.t, 3);
  EXPECT_EQ(rank_2m(d), -5);
  EXPECT_EQ(psi_k1(d, 2), 3);
  const auto image = psi(kFig5, 0, 2);
  EXPECT_EQ(image, kFig5Hat);
  EXPECT_EQ(image.size(), 88);
  EXPECT_EQ(rank_2m(image, 2), 1);
  EXPECT_EQ(psi_inverse(image, 0, 2), kFig5);
}

TEST(Psi, ParameterValidity) {
  EXPECT_TRUE(psi_parameters_valid(0, 0));
  EXPECT_TRUE(psi_parameters_valid(0, 3));
  EXPECT_TRUE(psi_parameters_valid(2, 1));
  EXPECT_FALSE(psi_parameters_valid(1, 0));
  EXPECT_FALSE(psi_parameters_valid(0, -1));
  EXPECT_FALSE(psi_parameters_valid(-1, 1));
  EXPECT_THROW(psi(kFig5, 1, 0), DomainError);
  EXPECT_THROW(psi(kFig5, 0, 6), DomainError);  // rank -5 > -6
  EXPECT_THROW(psi(Partition({4, 4}), 0, 0), DomainError);
  EXPECT_THROW(psi_inverse(Partition({1}), 1, 0), DomainError);
  EXPECT_THROW(psi_inverse(Partition({1, 1, 1, 1, 1, 1, 1}), 0, 0), DomainError);  // rank_{2,2} = -1
}

TEST(Psi, SmallestCases) {
  // The only partition of 2 with rank <= 0 lands on the empty partition.
  EXPECT_EQ(psi(Partition({1, 1}), 0, 0), Partition());
  EXPECT_EQ(psi_inverse(Partition(), 0, 0), Partition({1, 1}));
}

TEST(Psi, KOneIsAtLeastBetaOne) {
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      for (int r = 0; r <= 2; ++r) {
        const auto d = decompose(lambda, 0);
        if (!d || rank_2m(*d) > -r) continue;
        const int k1 = psi_k1(*d, r);
        EXPECT_GE(k1, d->beta.part(1)) << lambda;
        EXPECT_LE(k1, d->s - d->t);
      }
    });
  }
}

TEST(Psi, BijectionOntoCodomainSmallN) {
  const std::vector<std::pair<int, int>> grid{{0, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 2}, {2, 1}, {3, 2}};
  for (const auto& [m, r] : grid) {
    for (int n = 0; n <= 22; ++n) {
      std::multiset<Partition> images;
      for_each_partition(n, [&](const Partition& lambda) {
        const auto rank = rank_2m(lambda, m);
        if (!rank || *rank > -r) return;
        const auto image = psi(lambda, m, r);
        EXPECT_EQ(psi_inverse(image, m, r), lambda);
        images.insert(image);
      });
      std::multiset<Partition> codomain;
      const int target = n - r - 2 * m - 2;
      if (target >= 0) {
        for_each_partition(target, [&](const Partition& mu) {
          const auto rank = rank_2m(mu, m + 2);
          if (rank && *rank >= -r) codomain.insert(mu);
        });
      }
      EXPECT_EQ(images, codomain) << "n=" << n << " m=" << m << " r=" << r;
    }
  }
}
