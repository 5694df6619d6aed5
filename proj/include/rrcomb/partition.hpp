#ifndef RRCOMB_PARTITION_HPP
#define RRCOMB_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rrcomb/bigint.hpp"

namespace rrcomb {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Parts are stored largest first (lambda_1 >= lambda_2 >= ...). Access past
/// the last part through part() yields 0. The empty sequence is the unique
/// partition of 0. Values are immutable once constructed.
class Partition {
 public:
  Partition() = default;

  /// Validates `parts`; throws ValidationError naming the first bad index.
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zero entries; throws ValidationError on negatives.
  static Partition from_multiset(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }

  /// lambda_j with 1-based j, zero-extended. Throws ValidationError if j < 1.
  int part(int j) const;

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition make_partition(std::vector<int> parts);

int part_at(const Partition& lambda, int j);

/// Transpose of the Young diagram: lambda'_j = #{i : lambda_i >= j}.
Partition conjugate(const Partition& lambda);

/// Smallest part at least the number of parts. True for the empty partition.
bool is_rogers_ramanujan(const Partition& lambda);

/// Componentwise sum, (nu + mu)_j = nu_j + mu_j.
Partition sum_partitions(const Partition& nu, const Partition& mu);

/// Multiset union of parts, sorted decreasingly.
Partition union_partitions(const Partition& sigma, const Partition& pi);

/// Removes the first column: (lambda_1 - 1, lambda_2 - 1, ...), zeros dropped.
Partition remove_first_column(const Partition& lambda);

std::string to_string(const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

inline constexpr int kDefaultEnumerationBound = 120;

/// Streams the partitions of n in reverse-lexicographic order, starting at
/// (n) and ending at (1,...,1). For n = 0 the single value is the empty
/// partition. Single consumer.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int bound = kDefaultEnumerationBound);

  std::optional<Partition> next();

 private:
  std::vector<int> current_;
  int n_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int bound = kDefaultEnumerationBound);

/// p(n) via Euler's pentagonal recurrence; 0 for negative n.
BigInt count_p(long n);

/// q(n): number of Rogers-Ramanujan partitions of n (filtered enumeration);
/// 0 for negative n.
BigInt count_q(long n, int bound = kDefaultEnumerationBound);

}  // namespace rrcomb

template <>
struct std::hash<rrcomb::Partition> {
  std::size_t operator()(const rrcomb::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

#endif  // RRCOMB_PARTITION_HPP
