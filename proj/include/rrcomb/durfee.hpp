#ifndef RRCOMB_DURFEE_HPP
#define RRCOMB_DURFEE_HPP

#include <map>
#include <optional>

#include "rrcomb/bigint.hpp"
#include "rrcomb/partition.hpp"

namespace rrcomb {

/// A partition cut by its two m-Durfee rectangles.
///
/// An m-rectangle has height minus width equal to m; width 0 is allowed,
/// height 0 is not. The first rectangle has height s (width s - m), the
/// second sits directly below it with height t (width t - m). alpha holds
/// the cells to the right of the first rectangle, beta those to the right of
/// the second, gamma everything below both.
///
/// A decomposition is valid when s, t >= max(m, 1), t <= s, alpha has at most
/// s parts, beta has at most t parts each <= s - t, and every part of gamma
/// is <= t - m. Those bounds are exactly what makes the two rectangles the
/// maximal ones of the recomposed partition.
struct DurfeeDecomposition {
  int m = 0;
  int s = 0;
  int t = 0;
  Partition alpha;
  Partition beta;
  Partition gamma;

  friend bool operator==(const DurfeeDecomposition&, const DurfeeDecomposition&) = default;
};

/// Height of the largest m-rectangle fitting in the diagram. Throws
/// DomainError for m < 0, or for m = 0 on the empty partition.
int first_durfee_height(const Partition& lambda, int m);

/// Height of the largest m-rectangle fitting below the first one (whose
/// height is s). Absent exactly when m = 0 and lambda_{s+1} = 0.
std::optional<int> second_durfee_height(const Partition& lambda, int m, int s);

/// Absent iff the second rectangle is absent (m = 0 on a Rogers-Ramanujan
/// partition, including the empty one).
std::optional<DurfeeDecomposition> decompose(const Partition& lambda, int m);

/// Throws ValidationError describing the first violated bound.
void validate(const DurfeeDecomposition& d);

/// Inverse of decompose. Validates first; throws ValidationError.
Partition recompose(const DurfeeDecomposition& d);

/// r_{2,m} = beta_1 + alpha_{s - t - beta_1 + 1} - gamma'_1.
int rank_2m(const DurfeeDecomposition& d);

/// Absent when the decomposition is absent.
std::optional<int> rank_2m(const Partition& lambda, int m);

enum class Comparison { equal, at_most, at_least };

/// Rank value -> number of partitions of n with that (2,m)-rank.
/// Rank-absent partitions are not counted.
std::map<int, BigInt> rank_histogram(int n, int m);

/// h(n, m, cmp r). Zero for negative n.
BigInt h_count(int n, int m, Comparison cmp, int r);

/// Same as h_count but reads an existing histogram.
BigInt h_count(const std::map<int, BigInt>& histogram, Comparison cmp, int r);

}  // namespace rrcomb

#endif  // RRCOMB_DURFEE_HPP
