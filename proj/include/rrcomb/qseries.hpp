#ifndef RRCOMB_QSERIES_HPP
#define RRCOMB_QSERIES_HPP

#include <optional>
#include <span>
#include <vector>

#include "rrcomb/bigint.hpp"
#include "rrcomb/mutation.hpp"

namespace rrcomb {

/// A power series in t with exact integer coefficients, kept modulo t^{N+1}.
/// Binary operations on series of different orders truncate to the smaller.
class TruncatedSeries {
 public:
  /// Zero series of order N.
  explicit TruncatedSeries(int order);
  /// Coefficients beyond N are dropped, missing ones are zero.
  TruncatedSeries(int order, std::vector<BigInt> coeffs);

  static TruncatedSeries one(int order);
  /// c * t^exponent (zero when exponent > order).
  static TruncatedSeries monomial(int order, int exponent, const BigInt& c = 1);

  int order() const noexcept { return order_; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^n; zero for n outside [0, N].
  BigInt coefficient(int n) const;
  void set_coefficient(int n, const BigInt& value);
  void add_to_coefficient(int n, const BigInt& value);

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& b);
  TruncatedSeries& operator-=(const TruncatedSeries& b);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<BigInt> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);

/// Multiplicative inverse of a series with constant term +-1. Throws
/// DomainError otherwise.
TruncatedSeries series_inverse_unit(const TruncatedSeries& a);

/// a * (1 + c t^e); exact in O(N).
TruncatedSeries times_binomial(const TruncatedSeries& a, int exponent, int c);
/// a / (1 - t^e); exact in O(N).
TruncatedSeries over_one_minus(const TruncatedSeries& a, int exponent);

/// Smallest exponent where the coefficients differ, over the common order.
std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod_{i >= 1} (1 - t^i).
TruncatedSeries euler_product(int order);
/// P(t) = prod_{i >= 1} 1/(1 - t^i); coefficients p(n).
TruncatedSeries euler_inverse_product(int order);
/// Q(t) = 1 + sum_{k >= 1} t^{k^2} / ((1-t)...(1-t^k)).
TruncatedSeries rr_sum_side(int order);
/// prod_{i >= 0} 1/((1 - t^{5i+1})(1 - t^{5i+4})).
TruncatedSeries rr_product_side(int order);
/// sum_{m in Z} (-1)^m t^{m(5m-1)/2}.
TruncatedSeries pentagonal_theta(int order);
/// P(t) * sum_{m in Z} (-1)^m t^{m(5m-1)/2}.
TruncatedSeries schur_rhs(int order);

/// Generating function of h(n, m, <= -r):
/// P(t) * sum_{j >= 1} (-1)^{j-1} t^{jr + 2jm + j(5j-1)/2}.
/// Throws DomainError unless m, r > 0 or m = 0, r >= 0.
TruncatedSeries maltese_series(int m, int r, int order, Mutation mutation = Mutation::none);

/// Laurent polynomial in z whose coefficients are truncated series in q.
///
/// z-exponents live in [-K, K] with K = z_radius(N). Products discard
/// z-exponents outside that window; this is exact for the triple-product
/// factors, where a z^k term always carries q-degree at least
/// min(k(k+1)/2, k(k-1)/2) > N once |k| > K. Generic multiplication is the
/// plain convolution, O(K^2 N^2).
class BivariateLaurent {
 public:
  explicit BivariateLaurent(int order);

  static BivariateLaurent one(int order);

  /// K(N) = 1 + max{k : k(k+1)/2 <= N}.
  static int z_radius(int order);

  int order() const noexcept { return order_; }
  int radius() const noexcept { return radius_; }

  /// q-series multiplying z^k; zero outside the window.
  const TruncatedSeries& slice(int k) const;
  BigInt coefficient(int z_exp, int q_exp) const;
  void add_term(int z_exp, int q_exp, const BigInt& c);

  /// this * (1 + c z^{z_exp} q^{q_exp}).
  BivariateLaurent times_binomial(int z_exp, int q_exp, int c) const;
  /// Multiplies every z-slice by a q-series.
  BivariateLaurent times_q_series(const TruncatedSeries& f) const;

  friend BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b);
  friend bool operator==(const BivariateLaurent& a, const BivariateLaurent& b) {
    return a.order_ == b.order_ && a.slices_ == b.slices_;
  }

 private:
  int order_;
  int radius_;
  std::vector<TruncatedSeries> slices_;  // index k + radius_
  TruncatedSeries zero_;
};

/// sum_k z^k q^{k(k+1)/2}.
BivariateLaurent jtp_lhs(int order);
/// prod_{i>=1} (1 + z q^i) prod_{j>=0} (1 + z^{-1} q^j) prod_{i>=1} (1 - q^i).
BivariateLaurent jtp_rhs(int order);

/// The triple product under q <- t^5, z <- -t^{-2}, as univariate series.
struct SpecializedTripleProduct {
  TruncatedSeries bilateral_sum;  // sum_k (-1)^k t^{k(5k+1)/2}, from the z-sum
  TruncatedSeries product;        // prod (1 - t^{5i-2})(1 - t^{5j+2})(1 - t^{5i})
  TruncatedSeries rr_product;     // prod 1/((1 - t^{5i+1})(1 - t^{5i+4}))
  TruncatedSeries schur_form;     // bilateral_sum * P(t)
};

SpecializedTripleProduct jtp_specialized_sides(int order);

/// First exponent where either displayed equality fails, or nullopt.
std::optional<int> jtp_specialized_mismatch(const SpecializedTripleProduct& sides);

bool jtp_specialized_check(int order);

}  // namespace rrcomb

#endif  // RRCOMB_QSERIES_HPP
