// Brute-force reference implementations used only by the tests. They share no
// code with the library: partitions are plain vectors, rectangles are found by
// trying every height, counts come from dynamic programming.
#ifndef RRCOMB_TESTS_ORACLES_HPP
#define RRCOMB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline void generate(int n, int max_part, Parts& prefix, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts prefix;
  generate(n, n, prefix, out);
  return out;
}

inline int at(const Parts& p, int i) { return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }

// Transpose through an explicit cell matrix.
inline Parts conjugate(const Parts& p) {
  if (p.empty()) return {};
  std::vector<std::vector<bool>> cells(p.size(), std::vector<bool>(p.front(), false));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) cells[i][j] = true;
  Parts c;
  for (int j = 0; j < p.front(); ++j) {
    int col = 0;
    for (std::size_t i = 0; i < p.size(); ++i) col += cells[i][j] ? 1 : 0;
    c.push_back(col);
  }
  return c;
}

inline bool rogers_ramanujan(const Parts& p) { return p.empty() || p.back() >= static_cast<int>(p.size()); }

inline std::int64_t p_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) ways[i] += ways[i - k];
  return ways[n];
}

// Partitions of n into parts congruent to +-1 mod 5.
inline std::int64_t one_four_mod_five_count(int n) {
  std::vector<std::int64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k) {
    if (k % 5 != 1 && k % 5 != 4) continue;
    for (int i = k; i <= n; ++i) ways[i] += ways[i - k];
  }
  return ways[n];
}

inline std::int64_t rr_count(int n) {
  std::int64_t c = 0;
  for (const auto& p : partitions(n)) c += rogers_ramanujan(p) ? 1 : 0;
  return c;
}

struct Rectangles {
  int s = 0;
  std::optional<int> t;
};

// Does an h x (h - m) rectangle fit with its top row at row offset + 1?
inline bool fits(const Parts& p, int offset, int h, int m) {
  const int w = h - m;
  if (h < 1 || w < 0) return false;
  for (int i = offset + 1; i <= offset + h; ++i)
    if (at(p, i) < w) return false;
  return true;
}

inline Rectangles rectangles(const Parts& p, int m) {
  Rectangles r;
  const int limit = static_cast<int>(p.size()) + m + 1;
  for (int h = 1; h <= limit; ++h)
    if (fits(p, 0, h, m)) r.s = h;
  for (int h = 1; h <= limit; ++h)
    if (fits(p, r.s, h, m)) r.t = h;
  return r;
}

inline std::optional<int> rank(const Parts& p, int m) {
  if (m == 0 && p.empty()) return std::nullopt;
  const auto rect = rectangles(p, m);
  if (!rect.t) return std::nullopt;
  const int s = rect.s, t = *rect.t;
  const int beta1 = at(p, s + 1) - (t - m);
  const int idx = s - t - beta1 + 1;
  const int alpha = idx <= s ? at(p, idx) - (s - m) : 0;
  const int gamma_len = std::max(0, static_cast<int>(p.size()) - s - t);
  return beta1 + alpha - gamma_len;
}

inline std::map<int, std::int64_t> histogram(int n, int m) {
  std::map<int, std::int64_t> h;
  for (const auto& p : partitions(n))
    if (auto r = rank(p, m)) ++h[*r];
  return h;
}

inline std::int64_t at_most(int n, int m, int r) {
  std::int64_t c = 0;
  for (const auto& [k, v] : histogram(n, m))
    if (k <= r) c += v;
  return c;
}

inline std::int64_t at_least(int n, int m, int r) {
  std::int64_t c = 0;
  for (const auto& [k, v] : histogram(n, m))
    if (k >= r) c += v;
  return c;
}

}  // namespace oracle

#endif  // RRCOMB_TESTS_ORACLES_HPP
