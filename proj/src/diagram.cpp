#include "rrcomb/diagram.hpp"

#include <algorithm>

namespace rrcomb {

namespace {

std::string clip(std::string row, int max_width) {
  const auto limit = static_cast<std::size_t>(std::max(max_width, 4));
  if (row.size() > limit) {
    row.resize(limit - 3);
    row += "...";
  }
  return row;
}

}  // namespace

std::string render_diagram(const Partition& lambda, const std::optional<DurfeeDecomposition>& d,
                           int max_width) {
  std::string out;
  const int rows = d ? std::max(lambda.length(), d->s + d->t) : lambda.length();
  for (int i = 1; i <= rows; ++i) {
    const int len = lambda.part(i);
    std::string row;
    if (!d) {
      row.assign(static_cast<std::size_t>(len), 'o');
    } else if (i <= d->s || i <= d->s + d->t) {
      const bool first = i <= d->s;
      const int width = first ? d->s - d->m : d->t - d->m;
      row.assign(static_cast<std::size_t>(width), first ? '#' : '=');
      row += '|';
      row.append(static_cast<std::size_t>(len - width), 'o');
    } else {
      row.assign(static_cast<std::size_t>(len), 'o');
    }
    out += clip(std::move(row), max_width);
    out += '\n';
    if (d && (i == d->s || i == d->s + d->t)) {
      const int rule = std::max({lambda.largest(), d->s - d->m, 0}) + 1;
      out += clip(std::string(static_cast<std::size_t>(rule), '-'), max_width);
      out += '\n';
    }
  }
  return out;
}

}  // namespace rrcomb
