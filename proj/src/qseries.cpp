#include "rrcomb/qseries.hpp"

#include <algorithm>
#include <string>

#include "rrcomb/bijections.hpp"
#include "rrcomb/errors.hpp"

namespace rrcomb {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(order, 0, 1); }

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, const BigInt& c) {
  TruncatedSeries out(order);
  if (exponent >= 0 && exponent <= order) out.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return out;
}

BigInt TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order_) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coefficient(int n, const BigInt& value) {
  if (n < 0 || n > order_) return;
  coeffs_[static_cast<std::size_t>(n)] = value;
}

void TruncatedSeries::add_to_coefficient(int n, const BigInt& value) {
  if (n < 0 || n > order_) return;
  coeffs_[static_cast<std::size_t>(n)] += value;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  const int o = std::min(order, order_);
  return TruncatedSeries(o, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + o + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] += b.coeffs_[static_cast<std::size_t>(n)];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] -= b.coeffs_[static_cast<std::size_t>(n)];
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator-(TruncatedSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries series_neg(const TruncatedSeries& a) { return -a; }

TruncatedSeries series_inverse_unit(const TruncatedSeries& a) {
  const BigInt a0 = a.coefficient(0);
  if (a0 != 1 && a0 != -1) {
    throw DomainError("series_inverse_unit: constant term must be +1 or -1, got " + a0.get_str());
  }
  // b_0 = 1/a_0 = a_0; b_n = -a_0 * sum_{i=1..n} a_i b_{n-i}.
  TruncatedSeries b(a.order());
  b.set_coefficient(0, a0);
  for (int n = 1; n <= a.order(); ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= n; ++i) acc += a.coefficient(i) * b.coefficient(n - i);
    b.set_coefficient(n, -a0 * acc);
  }
  return b;
}

TruncatedSeries times_binomial(const TruncatedSeries& a, int exponent, int c) {
  if (exponent <= 0) throw ValidationError("times_binomial: exponent must be positive");
  TruncatedSeries out = a;
  for (int n = a.order(); n >= exponent; --n) out.add_to_coefficient(n, c * a.coefficient(n - exponent));
  return out;
}

TruncatedSeries over_one_minus(const TruncatedSeries& a, int exponent) {
  if (exponent <= 0) throw ValidationError("over_one_minus: exponent must be positive");
  TruncatedSeries out = a;
  for (int n = exponent; n <= a.order(); ++n) out.add_to_coefficient(n, out.coefficient(n - exponent));
  return out;
}

std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int n = 0; n <= order; ++n) {
    if (a.coefficient(n) != b.coefficient(n)) return n;
  }
  return std::nullopt;
}

TruncatedSeries euler_product(int order) {
  auto out = TruncatedSeries::one(order);
  for (int i = 1; i <= order; ++i) out = times_binomial(out, i, -1);
  return out;
}

TruncatedSeries euler_inverse_product(int order) {
  auto out = TruncatedSeries::one(order);
  for (int i = 1; i <= order; ++i) out = over_one_minus(out, i);
  return out;
}

TruncatedSeries rr_sum_side(int order) {
  auto out = TruncatedSeries::one(order);
  for (int k = 1; k * k <= order; ++k) {
    auto term = TruncatedSeries::monomial(order, k * k);
    for (int i = 1; i <= k; ++i) term = over_one_minus(term, i);
    out += term;
  }
  return out;
}

TruncatedSeries rr_product_side(int order) {
  auto out = TruncatedSeries::one(order);
  for (int i = 0; 5 * i + 1 <= order; ++i) {
    out = over_one_minus(out, 5 * i + 1);
    if (5 * i + 4 <= order) out = over_one_minus(out, 5 * i + 4);
  }
  return out;
}

TruncatedSeries pentagonal_theta(int order) {
  TruncatedSeries out(order);
  out.add_to_coefficient(0, 1);
  // m(5m-1)/2 grows in |m| on both sides, so stop once both exceed order.
  for (long m = 1;; ++m) {
    const long pos = m * (5 * m - 1) / 2;
    const long neg = m * (5 * m + 1) / 2;  // exponent for -m
    if (pos > order) break;
    const BigInt sign = (m % 2 == 0) ? 1 : -1;
    out.add_to_coefficient(static_cast<int>(pos), sign);
    if (neg <= order) out.add_to_coefficient(static_cast<int>(neg), sign);
  }
  return out;
}

TruncatedSeries schur_rhs(int order) { return euler_inverse_product(order) * pentagonal_theta(order); }

TruncatedSeries maltese_series(int m, int r, int order, Mutation mutation) {
  if (!psi_parameters_valid(m, r)) {
    throw DomainError("maltese_series: (m, r) = (" + std::to_string(m) + ", " + std::to_string(r) +
                      ") outside m, r > 0 or m = 0, r >= 0");
  }
  TruncatedSeries sum(order);
  for (long j = 1;; ++j) {
    long e = j * r + 2 * j * m + j * (5 * j - 1) / 2;
    if (mutation == Mutation::maltese_exponent_shift) e += 1;
    if (e > order) break;
    sum.add_to_coefficient(static_cast<int>(e), j % 2 == 1 ? 1 : -1);
  }
  return euler_inverse_product(order) * sum;
}

// ---------------------------------------------------------------------------

int BivariateLaurent::z_radius(int order) {
  int k = 0;
  while ((k + 1) * (k + 2) / 2 <= order) ++k;
  return k + 1;
}

BivariateLaurent::BivariateLaurent(int order)
    : order_(order),
      radius_(z_radius(order)),
      slices_(static_cast<std::size_t>(2 * radius_ + 1), TruncatedSeries(order)),
      zero_(order) {}

BivariateLaurent BivariateLaurent::one(int order) {
  BivariateLaurent out(order);
  out.add_term(0, 0, 1);
  return out;
}

const TruncatedSeries& BivariateLaurent::slice(int k) const {
  if (k < -radius_ || k > radius_) return zero_;
  return slices_[static_cast<std::size_t>(k + radius_)];
}

BigInt BivariateLaurent::coefficient(int z_exp, int q_exp) const { return slice(z_exp).coefficient(q_exp); }

void BivariateLaurent::add_term(int z_exp, int q_exp, const BigInt& c) {
  if (z_exp < -radius_ || z_exp > radius_) return;
  slices_[static_cast<std::size_t>(z_exp + radius_)].add_to_coefficient(q_exp, c);
}

BivariateLaurent BivariateLaurent::times_binomial(int z_exp, int q_exp, int c) const {
  BivariateLaurent out = *this;
  for (int k = -radius_; k <= radius_; ++k) {
    const auto& src = slice(k);
    for (int e = 0; e + q_exp <= order_; ++e) {
      const BigInt& v = src.coefficients()[static_cast<std::size_t>(e)];
      if (v != 0) out.add_term(k + z_exp, e + q_exp, c * v);
    }
  }
  return out;
}

BivariateLaurent BivariateLaurent::times_q_series(const TruncatedSeries& f) const {
  if (f.order() < order_) throw ValidationError("times_q_series: factor has lower order than the series");
  BivariateLaurent out(order_);
  for (std::size_t i = 0; i < slices_.size(); ++i) out.slices_[i] = slices_[i] * f;
  return out;
}

BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b) {
  const int order = std::min(a.order_, b.order_);
  BivariateLaurent out(order);
  for (int i = -a.radius_; i <= a.radius_; ++i) {
    for (int j = -b.radius_; j <= b.radius_; ++j) {
      const int k = i + j;
      if (k < -out.radius_ || k > out.radius_) continue;
      auto prod = a.slice(i) * b.slice(j);
      for (int e = 0; e <= order; ++e) out.add_term(k, e, prod.coefficient(e));
    }
  }
  return out;
}

BivariateLaurent jtp_lhs(int order) {
  BivariateLaurent out(order);
  for (int k = -out.radius(); k <= out.radius(); ++k) {
    const long e = static_cast<long>(k) * (k + 1) / 2;
    if (e <= order) out.add_term(k, static_cast<int>(e), 1);
  }
  return out;
}

BivariateLaurent jtp_rhs(int order) {
  auto out = BivariateLaurent::one(order);
  for (int i = 1; i <= order; ++i) out = out.times_binomial(1, i, 1);
  for (int j = 0; j <= order; ++j) out = out.times_binomial(-1, j, 1);
  return out.times_q_series(euler_product(order));
}

SpecializedTripleProduct jtp_specialized_sides(int order) {
  SpecializedTripleProduct sides{TruncatedSeries(order), TruncatedSeries::one(order),
                                 rr_product_side(order), TruncatedSeries(order)};
  // z^k q^e  ->  (-1)^k t^{5e - 2k}. Every lhs term with 5e - 2k <= order has
  // e <= order, so jtp_lhs(order) carries all of them.
  const auto lhs = jtp_lhs(order);
  for (int k = -lhs.radius(); k <= lhs.radius(); ++k) {
    for (int e = 0; e <= order; ++e) {
      const BigInt c = lhs.coefficient(k, e);
      if (c == 0) continue;
      const long texp = 5L * e - 2L * k;
      if (texp >= 0 && texp <= order) sides.bilateral_sum.add_to_coefficient(static_cast<int>(texp), (k % 2 == 0) ? c : BigInt(-c));
    }
  }
  // (1 + z q^i) -> (1 - t^{5i-2}); (1 + z^{-1} q^j) -> (1 - t^{5j+2}); (1 - q^i) -> (1 - t^{5i}).
  for (int i = 1; 5 * i - 2 <= order; ++i) sides.product = times_binomial(sides.product, 5 * i - 2, -1);
  for (int j = 0; 5 * j + 2 <= order; ++j) sides.product = times_binomial(sides.product, 5 * j + 2, -1);
  for (int i = 1; 5 * i <= order; ++i) sides.product = times_binomial(sides.product, 5 * i, -1);
  sides.schur_form = sides.bilateral_sum * euler_inverse_product(order);
  return sides;
}

std::optional<int> jtp_specialized_mismatch(const SpecializedTripleProduct& sides) {
  auto a = first_difference(sides.bilateral_sum, sides.product);
  auto b = first_difference(sides.rr_product, sides.schur_form);
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

bool jtp_specialized_check(int order) { return !jtp_specialized_mismatch(jtp_specialized_sides(order)); }

}  // namespace rrcomb
