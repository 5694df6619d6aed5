#ifndef RRCOMB_VERIFY_HPP
#define RRCOMB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrcomb/io.hpp"
#include "rrcomb/mutation.hpp"

namespace rrcomb {

enum class Status { pass, fail };

/// Outcome of one executable check. A failing report always carries a
/// counterexample that reproduces the failure (partitions, exponent, counts).
struct VerificationReport {
  std::string check;
  json params = json::object();
  Status status = Status::pass;
  json counterexample;  // null while passing
  std::uint64_t examined = 0;
  double elapsed_ms = 0.0;
  std::string detail;

  bool passed() const noexcept { return status == Status::pass; }
};

/// Keys are emitted in sorted order; elapsed_ms only when with_timing.
json report_to_json(const VerificationReport& report, bool with_timing = true);

/// Replays the worked examples: conjugation, the two decompositions and
/// their ranks, phi on the 71-cell example and psi_{0,2} on the 92-cell one.
VerificationReport verify_figures();

/// h(n,0,r) = h(n,0,-r) for all r, the histogram totals p(n) - q(n), and phi
/// is a size- and Durfee-preserving, rank-negating involution on every
/// non-Rogers-Ramanujan partition of n.
VerificationReport verify_first_symmetry(int n, Mutation mutation = Mutation::none);

/// psi_{m,r} maps {rank_{2,m} <= -r} in P_n onto {rank_{2,m+2} >= -r} in
/// P_{n-r-2m-2}: image multiset against the enumerated codomain, count
/// identity, and both inverse round trips. DomainError for invalid (m, r).
VerificationReport verify_second_symmetry(int n, int m, int r, Mutation mutation = Mutation::none);

/// h(n,m,<=r) + h(n,m,>=r+1) = p(n) (m > 0) or p(n) - q(n) (m = 0).
VerificationReport verify_dividetimes(int n, int m, int r);

/// Recounts a_j, b_j at every level and checks a_j = b_{j+1},
/// a_j + b_j = p(n_j) for j >= 1, and the alternating p-sum for
/// h(n,m,<=-r). `levels` defaults to the first J with n_{J+1} < 0; a smaller
/// explicit value is a DomainError.
VerificationReport verify_telescoping(int n, int m, int r, std::optional<int> levels = std::nullopt);

VerificationReport verify_rr_identity(int order);
VerificationReport verify_schur_identity(int order);
VerificationReport verify_jtp_bivariate(int order);
VerificationReport verify_jtp_specialized(int order);
/// maltese_series(m, r) against brute-force h(n, m, <= -r), 1 <= n <= n_max,
/// over (m, r) in {(0,0), (0,1), (0,2), (1,1), (2,1)}.
VerificationReport verify_maltese_counts(int n_max, Mutation mutation = Mutation::none);
/// H_{0,<=0} + H_{0,<=-1} = P - Q with both H written through their explicit
/// pentagonal-type exponents.
VerificationReport verify_difference_corollary(int order);

/// All series checks at `order`; the bivariate check is capped at q-order 60
/// and the count comparison at n <= 32.
std::vector<VerificationReport> verify_series_suite(int order, Mutation mutation = Mutation::none);

struct SuiteConfig {
  int n_max = 35;
  std::vector<int> m_values{0, 1, 2};
  std::vector<int> r_values{0, 1, 2, 3};
  std::optional<int> series_order = 120;
  bool figures = true;
  Mutation mutation = Mutation::none;
};

/// Keys: n_max, m, r, N (int or null), figures, mutation. Missing keys keep
/// their defaults; anything else raises ConfigError.
SuiteConfig parse_suite_config(const json& j);
SuiteConfig load_suite_config(const std::string& path);

struct SuiteResult {
  std::vector<VerificationReport> reports;
  bool passed() const noexcept;
};

SuiteResult run_suite(const SuiteConfig& config);

std::string to_json_lines(const SuiteResult& result, bool with_timing = true);
std::string summary_table(const SuiteResult& result);

}  // namespace rrcomb

#endif  // RRCOMB_VERIFY_HPP
