#ifndef RRCOMB_BIGINT_HPP
#define RRCOMB_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace rrcomb {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace rrcomb

#endif  // RRCOMB_BIGINT_HPP
