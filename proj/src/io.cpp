#include "rrcomb/io.hpp"

#include <charconv>
#include <vector>

#include "rrcomb/errors.hpp"

namespace rrcomb {

json partition_to_json(const Partition& lambda) { return json(lambda.vec()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("partition JSON must be an array of integers");
  std::vector<int> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw ValidationError("partition entry " + std::to_string(i) + " is not an integer",
                            static_cast<std::ptrdiff_t>(i));
    }
    parts.push_back(j[i].get<int>());
  }
  return Partition(std::move(parts));
}

Partition parse_partition_list(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto trim = [&](std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return Partition();
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ValidationError("cannot parse part " + std::to_string(parts.size()) + " ('" +
                                std::string(token) + "')",
                            static_cast<std::ptrdiff_t>(parts.size()));
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

json decomposition_to_json(const DurfeeDecomposition& d) {
  return json{{"m", d.m},
              {"s", d.s},
              {"t", d.t},
              {"alpha", partition_to_json(d.alpha)},
              {"beta", partition_to_json(d.beta)},
              {"gamma", partition_to_json(d.gamma)}};
}

json describe_to_json(const Partition& lambda, int m) {
  if (auto d = decompose(lambda, m)) return decomposition_to_json(*d);
  const int s = first_durfee_height(lambda, m);
  std::vector<int> alpha;
  for (int i = 1; i <= s && lambda.part(i) > s - m; ++i) alpha.push_back(lambda.part(i) - (s - m));
  return json{{"m", m},
              {"s", s},
              {"t", nullptr},
              {"alpha", alpha},
              {"beta", json::array()},
              {"gamma", json::array()}};
}

DurfeeDecomposition decomposition_from_json(const json& j) {
  try {
    DurfeeDecomposition d;
    d.m = j.at("m").get<int>();
    d.s = j.at("s").get<int>();
    if (j.at("t").is_null()) throw ValidationError("decomposition without a second rectangle");
    d.t = j.at("t").get<int>();
    d.alpha = partition_from_json(j.at("alpha"));
    d.beta = partition_from_json(j.at("beta"));
    d.gamma = partition_from_json(j.at("gamma"));
    return d;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

json series_to_json(const TruncatedSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(c.get_str());
  return json{{"N", f.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
  try {
    const int order = j.at("N").get<int>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(order) + 1) {
      throw ValidationError("series JSON: expected N+1 coefficients");
    }
    std::vector<BigInt> coeffs;
    for (const auto& c : arr) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw ValidationError("series JSON: bad integer");
      coeffs.push_back(v);
    }
    return TruncatedSeries(order, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace rrcomb
