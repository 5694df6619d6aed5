#include "rrcomb/durfee.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "rrcomb/errors.hpp"

namespace rrcomb {

namespace {

Partition tail_from(const Partition& lambda, int first_row, int shift) {
  // Rows first_row, first_row+1, ... of lambda, each reduced by shift.
  std::vector<int> out;
  for (int i = first_row; i <= lambda.length(); ++i) {
    const int v = lambda.part(i) - shift;
    if (v <= 0) break;
    out.push_back(v);
  }
  return Partition(std::move(out));
}

Partition rows_minus(const Partition& lambda, int first_row, int count, int shift) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    const int v = lambda.part(first_row + i) - shift;
    if (v <= 0) break;
    out.push_back(v);
  }
  return Partition(std::move(out));
}

}  // namespace

int first_durfee_height(const Partition& lambda, int m) {
  if (m < 0) throw DomainError("m must be nonnegative, got " + std::to_string(m));
  if (m == 0 && lambda.empty()) {
    throw DomainError("the Durfee square of the empty partition is undefined");
  }
  for (int s = lambda.length() + m;; --s) {
    if (lambda.part(s) >= s - m) return s;
  }
}

std::optional<int> second_durfee_height(const Partition& lambda, int m, int s) {
  if (m == 0 && lambda.part(s + 1) == 0) return std::nullopt;
  const int below = std::max(lambda.length() - s, 0);
  for (int t = below + m;; --t) {
    if (lambda.part(s + t) >= t - m) return t;
  }
}

std::optional<DurfeeDecomposition> decompose(const Partition& lambda, int m) {
  if (m < 0) throw DomainError("m must be nonnegative, got " + std::to_string(m));
  if (m == 0 && lambda.empty()) return std::nullopt;
  const int s = first_durfee_height(lambda, m);
  const auto t = second_durfee_height(lambda, m, s);
  if (!t) return std::nullopt;
  DurfeeDecomposition d;
  d.m = m;
  d.s = s;
  d.t = *t;
  d.alpha = rows_minus(lambda, 1, s, s - m);
  d.beta = rows_minus(lambda, s + 1, *t, *t - m);
  d.gamma = tail_from(lambda, s + *t + 1, 0);
  return d;
}

void validate(const DurfeeDecomposition& d) {
  const auto fail = [](const std::string& what) { throw ValidationError("decomposition: " + what); };
  if (d.m < 0) fail("m must be nonnegative");
  const int least = std::max(d.m, 1);
  if (d.s < least) fail("s = " + std::to_string(d.s) + " below " + std::to_string(least));
  if (d.t < least) fail("t = " + std::to_string(d.t) + " below " + std::to_string(least));
  if (d.t > d.s) fail("t exceeds s");
  if (d.alpha.length() > d.s) fail("alpha has more than s parts");
  if (d.beta.length() > d.t) fail("beta has more than t parts");
  if (d.beta.largest() > d.s - d.t) fail("beta has a part larger than s - t");
  if (d.gamma.largest() > d.t - d.m) fail("gamma has a part wider than the second rectangle");
}

Partition recompose(const DurfeeDecomposition& d) {
  validate(d);
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(d.s + d.t + d.gamma.length()));
  for (int i = 1; i <= d.s; ++i) rows.push_back(d.s - d.m + d.alpha.part(i));
  for (int i = 1; i <= d.t; ++i) rows.push_back(d.t - d.m + d.beta.part(i));
  for (int g : d.gamma.parts()) rows.push_back(g);
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

int rank_2m(const DurfeeDecomposition& d) {
  const int b1 = d.beta.part(1);
  return b1 + d.alpha.part(d.s - d.t - b1 + 1) - d.gamma.length();
}

std::optional<int> rank_2m(const Partition& lambda, int m) {
  const auto d = decompose(lambda, m);
  if (!d) return std::nullopt;
  return rank_2m(*d);
}

std::map<int, BigInt> rank_histogram(int n, int m) {
  std::map<int, unsigned long> counts;
  if (n >= 0) {
    for_each_partition(n, [&](const Partition& lambda) {
      if (auto r = rank_2m(lambda, m)) ++counts[*r];
    });
  }
  std::map<int, BigInt> out;
  for (const auto& [rank, c] : counts) out.emplace(rank, BigInt(c));
  return out;
}

BigInt h_count(const std::map<int, BigInt>& histogram, Comparison cmp, int r) {
  BigInt total = 0;
  for (const auto& [rank, c] : histogram) {
    const bool match = cmp == Comparison::equal     ? rank == r
                       : cmp == Comparison::at_most ? rank <= r
                                                    : rank >= r;
    if (match) total += c;
  }
  return total;
}

BigInt h_count(int n, int m, Comparison cmp, int r) {
  if (n < 0) return 0;
  return h_count(rank_histogram(n, m), cmp, r);
}

}  // namespace rrcomb
