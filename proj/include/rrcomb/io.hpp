#ifndef RRCOMB_IO_HPP
#define RRCOMB_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "rrcomb/durfee.hpp"
#include "rrcomb/partition.hpp"
#include "rrcomb/qseries.hpp"

namespace rrcomb {

using json = nlohmann::json;

// Partition <-> [5,5,4,1]; the empty partition is [].
json partition_to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

/// "10,10,9,1" (whitespace tolerated, empty string = empty partition).
Partition parse_partition_list(std::string_view text);

// {"m":..,"s":..,"t":..|null,"alpha":[..],"beta":[..],"gamma":[..]}
json decomposition_to_json(const DurfeeDecomposition& d);
/// Describes lambda at offset m even when the second rectangle is absent
/// ("t": null, beta and gamma empty). Throws DomainError for m = 0 on the
/// empty partition.
json describe_to_json(const Partition& lambda, int m);
DurfeeDecomposition decomposition_from_json(const json& j);

// {"N":..,"coeffs":["1","1","2",...]}
json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const json& j);

}  // namespace rrcomb

#endif  // RRCOMB_IO_HPP
