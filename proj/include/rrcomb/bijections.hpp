#ifndef RRCOMB_BIJECTIONS_HPP
#define RRCOMB_BIJECTIONS_HPP

#include "rrcomb/durfee.hpp"
#include "rrcomb/mutation.hpp"
#include "rrcomb/partition.hpp"

namespace rrcomb {

/// Intermediate stage of phi. mu = beta; nu holds the parts pulled out of
/// alpha and pi the parts left behind; rho_j = k_j and sigma_j = gamma'_j - k_j.
struct FiveTuple {
  Partition mu;
  Partition nu;
  Partition pi;
  Partition rho;
  Partition sigma;

  friend bool operator==(const FiveTuple&, const FiveTuple&) = default;
};

/// First half of phi on an m = 0 decomposition. Throws DomainError otherwise.
FiveTuple phi_split(const DurfeeDecomposition& d, Mutation mutation = Mutation::none);

/// Second half of phi: gamma-hat' = nu + mu, alpha-hat = sigma u pi,
/// beta-hat = rho, Durfee squares s and t kept. Throws InternalError if the
/// result does not fit around the squares.
DurfeeDecomposition phi_assemble(const FiveTuple& f, int s, int t);

/// The rank-negating involution on non-Rogers-Ramanujan partitions. It keeps
/// the size and both Durfee squares. Throws DomainError on a
/// Rogers-Ramanujan partition.
Partition phi(const Partition& lambda, Mutation mutation = Mutation::none);

/// (m, r) for which psi_{m,r} is defined: m, r > 0, or m = 0 and r >= 0.
bool psi_parameters_valid(int m, int r);

/// k_1 = max{k <= s - t : gamma'_1 - r - k >= alpha_{s-t-k+1}}.
int psi_k1(const DurfeeDecomposition& d, int r, Mutation mutation = Mutation::none);

/// psi_{m,r}: partitions of n with (2,m)-rank <= -r onto partitions of
/// n - r - 2m - 2 with (2,m+2)-rank >= -r. Throws DomainError for invalid
/// (m, r) or an input outside the domain.
Partition psi(const Partition& lambda, int m, int r, Mutation mutation = Mutation::none);

/// Inverse of psi_{m,r}. Throws DomainError when lambda_hat is not in the
/// codomain.
Partition psi_inverse(const Partition& lambda_hat, int m, int r);

}  // namespace rrcomb

#endif  // RRCOMB_BIJECTIONS_HPP
