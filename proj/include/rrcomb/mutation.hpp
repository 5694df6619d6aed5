#ifndef RRCOMB_MUTATION_HPP
#define RRCOMB_MUTATION_HPP

#include <optional>
#include <string>
#include <string_view>

namespace rrcomb {

// Deliberate faults used as negative controls for the verification harness.
// Production callers always use Mutation::none.
enum class Mutation {
  none,
  phi_skip_k_step,        // phi: skip the k_j computation (rho empty, sigma = gamma')
  psi_k1_ascending,       // psi: pick the smallest admissible k_1 instead of the largest
  maltese_exponent_shift  // maltese_series: exponent off by one
};

std::string_view mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

}  // namespace rrcomb

#endif  // RRCOMB_MUTATION_HPP
