#include "rrcomb/mutation.hpp"

#include <array>
#include <utility>

namespace rrcomb {

namespace {

constexpr std::array<std::pair<Mutation, std::string_view>, 4> kNames{{
    {Mutation::none, "none"},
    {Mutation::phi_skip_k_step, "phi-skip-k-step"},
    {Mutation::psi_k1_ascending, "psi-k1-ascending"},
    {Mutation::maltese_exponent_shift, "maltese-exponent-shift"},
}};

}  // namespace

std::string_view mutation_name(Mutation m) {
  for (const auto& [value, name] : kNames) {
    if (value == m) return name;
  }
  return "unknown";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (const auto& [value, n] : kNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

}  // namespace rrcomb
