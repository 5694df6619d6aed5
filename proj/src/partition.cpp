#include "rrcomb/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rrcomb/errors.hpp"

namespace rrcomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ValidationError("part at index " + std::to_string(i) + " is not positive (" +
                                std::to_string(parts_[i]) + ")",
                            static_cast<std::ptrdiff_t>(i));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("part at index " + std::to_string(i) + " exceeds its predecessor (" +
                                std::to_string(parts_[i]) + " > " + std::to_string(parts_[i - 1]) +
                                ")",
                            static_cast<std::ptrdiff_t>(i));
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) {
      throw ValidationError("negative part at index " + std::to_string(i),
                            static_cast<std::ptrdiff_t>(i));
    }
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::part(int j) const {
  if (j < 1) throw ValidationError("part index must be >= 1, got " + std::to_string(j));
  return j <= length() ? parts_[static_cast<std::size_t>(j - 1)] : 0;
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

int part_at(const Partition& lambda, int j) { return lambda.part(j); }

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

bool is_rogers_ramanujan(const Partition& lambda) {
  return lambda.smallest() >= lambda.length();
}

Partition sum_partitions(const Partition& nu, const Partition& mu) {
  const int len = std::max(nu.length(), mu.length());
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int j = 1; j <= len; ++j) out[static_cast<std::size_t>(j - 1)] = nu.part(j) + mu.part(j);
  return Partition(std::move(out));
}

Partition union_partitions(const Partition& sigma, const Partition& pi) {
  std::vector<int> out;
  out.reserve(sigma.parts().size() + pi.parts().size());
  std::merge(sigma.parts().begin(), sigma.parts().end(), pi.parts().begin(), pi.parts().end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

Partition remove_first_column(const Partition& lambda) {
  std::vector<int> out;
  for (int p : lambda.parts()) {
    if (p > 1) out.push_back(p - 1);
  }
  return Partition(std::move(out));
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << lambda;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  os << '(';
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) os << ',';
    os << lambda.parts()[i];
  }
  return os << ')';
}

PartitionStream::PartitionStream(int n, int bound) : n_(n) {
  if (n < 0) throw ValidationError("cannot enumerate partitions of a negative integer");
  if (n > bound) {
    throw ResourceError("enumeration of partitions of " + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(bound));
  }
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ > 0) current_.assign(1, n_);
    if (n_ == 0) done_ = true;
    return Partition(current_);
  }
  // Rightmost part larger than 1.
  auto it = std::find_if(current_.rbegin(), current_.rend(), [](int x) { return x > 1; });
  if (it == current_.rend()) {
    done_ = true;
    return std::nullopt;
  }
  const auto i = static_cast<std::size_t>(std::distance(it, current_.rend()) - 1);
  int remainder = static_cast<int>(current_.size() - i - 1) + 1;
  const int v = current_[i] - 1;
  current_.resize(i + 1);
  current_[i] = v;
  while (remainder >= v) {
    current_.push_back(v);
    remainder -= v;
  }
  if (remainder > 0) current_.push_back(remainder);
  return Partition(current_);
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
  std::vector<Partition> out;
  PartitionStream stream(n, bound);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int bound) {
  PartitionStream stream(n, bound);
  while (auto p = stream.next()) visit(*p);
}

BigInt count_p(long n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (long k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const long g2 = j * (3 * j + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) term += p[static_cast<std::size_t>(k - g2)];
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

BigInt count_q(long n, int bound) {
  if (n < 0) return 0;
  BigInt count = 0;
  for_each_partition(
      static_cast<int>(n),
      [&](const Partition& lambda) {
        if (is_rogers_ramanujan(lambda)) ++count;
      },
      bound);
  return count;
}

}  // namespace rrcomb
