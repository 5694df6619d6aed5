#include "rrcomb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "rrcomb/bijections.hpp"
#include "rrcomb/durfee.hpp"
#include "rrcomb/errors.hpp"

namespace rrcomb {

namespace {

using Clock = std::chrono::steady_clock;

// Memoized rank histograms, keyed by (n, m).
const std::map<int, BigInt>& cached_histogram(int n, int m) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::map<int, BigInt>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, m});
  if (it == cache.end()) it = cache.emplace(std::pair{n, m}, rank_histogram(n, m)).first;
  return it->second;
}

BigInt h(int n, int m, Comparison cmp, int r) {
  if (n < 0) return 0;
  return h_count(cached_histogram(n, m), cmp, r);
}

class ReportBuilder {
 public:
  ReportBuilder(std::string check, json params) : start_(Clock::now()) {
    report_.check = std::move(check);
    report_.params = std::move(params);
  }

  bool failed() const { return report_.status == Status::fail; }

  // Records the first failure only; later ones are dropped.
  void fail(json counterexample) {
    if (failed()) return;
    report_.status = Status::fail;
    report_.counterexample = std::move(counterexample);
  }

  void examined(std::uint64_t k = 1) { report_.examined += k; }
  void detail(std::string d) { report_.detail = std::move(d); }

  VerificationReport finish() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

json big(const BigInt& x) { return x.get_str(); }

json series_mismatch(int exponent, const BigInt& lhs, const BigInt& rhs) {
  return json{{"exponent", exponent}, {"lhs", big(lhs)}, {"rhs", big(rhs)}};
}

void compare_series(ReportBuilder& b, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  b.examined(static_cast<std::uint64_t>(std::min(lhs.order(), rhs.order()) + 1));
  if (auto e = first_difference(lhs, rhs)) b.fail(series_mismatch(*e, lhs.coefficient(*e), rhs.coefficient(*e)));
}

}  // namespace

json report_to_json(const VerificationReport& report, bool with_timing) {
  json j{{"check", report.check},
         {"params", report.params},
         {"status", report.passed() ? "pass" : "fail"},
         {"counterexample", report.counterexample},
         {"examined", report.examined},
         {"detail", report.detail}};
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

VerificationReport verify_figures() {
  ReportBuilder b("figures", json::object());
  const auto expect = [&](const std::string& figure, bool ok, json got) {
    b.examined();
    if (!ok) b.fail(json{{"figure", figure}, {"got", std::move(got)}});
  };
  try {
    const Partition fig1{{5, 5, 4, 1}};
    const auto c = conjugate(fig1);
    expect("1", c == Partition({4, 3, 3, 3, 2}), partition_to_json(c));

    const Partition fig2{{10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1}};
    const auto d2 = decompose(fig2, 0);
    const bool ok2 = d2 && d2->s == 6 && d2->t == 3 && d2->alpha == Partition({4, 4, 3, 3, 1}) &&
                     d2->beta == Partition({2, 1, 1}) && d2->gamma == Partition({2, 2, 1, 1, 1}) &&
                     rank_2m(*d2) == 1;
    expect("2", ok2, describe_to_json(fig2, 0));

    const Partition fig3{{7, 6, 4, 4, 3, 3, 1}};
    const auto d3 = decompose(fig3, 2);
    const bool ok3 = d3 && d3->s == 5 && d3->t == 2 && d3->alpha == Partition({4, 3, 1, 1}) &&
                     d3->beta == Partition({3, 1}) && d3->gamma.empty() && rank_2m(*d3) == 7;
    expect("3", ok3, describe_to_json(fig3, 2));

    const Partition fig4_hat{{10, 9, 9, 7, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1}};
    const auto p4 = phi(fig2);
    expect("4", p4 == fig4_hat && rank_2m(p4, 0) == -1, partition_to_json(p4));

    const Partition fig5{{14, 10, 9, 9, 8, 7, 7, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1}};
    const Partition fig5_hat{{13, 10, 9, 8, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1}};
    const auto d5 = decompose(fig5, 0);
    const auto p5 = psi(fig5, 0, 2);
    const bool ok5 = d5 && d5->s == 7 && d5->t == 3 && rank_2m(*d5) == -5 && psi_k1(*d5, 2) == 3 &&
                     p5 == fig5_hat && p5.size() == 88 && rank_2m(p5, 2) == 1 &&
                     psi_inverse(fig5_hat, 0, 2) == fig5;
    expect("5", ok5, partition_to_json(p5));
  } catch (const std::exception& e) {
    b.fail(json{{"exception", e.what()}});
  }
  return b.finish();
}

VerificationReport verify_first_symmetry(int n, Mutation mutation) {
  ReportBuilder b("first_symmetry", json{{"n", n}});

  // Counting side, independent of phi.
  const auto& hist = cached_histogram(n, 0);
  BigInt total = 0;
  for (const auto& [rank, count] : hist) {
    total += count;
    const auto mirror = hist.find(-rank);
    const BigInt other = mirror == hist.end() ? BigInt(0) : mirror->second;
    if (count != other) {
      b.fail(json{{"claim", "h(n,0,r) = h(n,0,-r)"}, {"r", rank}, {"h_r", big(count)}, {"h_minus_r", big(other)}});
    }
  }
  const BigInt expected = count_p(n) - count_q(n);
  if (total != expected) {
    b.fail(json{{"claim", "sum_r h(n,0,r) = p(n) - q(n)"}, {"sum", big(total)}, {"expected", big(expected)}});
  }

  for_each_partition(n, [&](const Partition& lambda) {
    if (b.failed()) return;
    const auto d = decompose(lambda, 0);
    if (!d) return;
    b.examined();
    try {
      const Partition image = phi(lambda, mutation);
      const auto di = decompose(image, 0);
      const char* claim = nullptr;
      if (image.size() != lambda.size()) {
        claim = "phi preserves size";
      } else if (!di || di->s != d->s || di->t != d->t) {
        claim = "phi preserves both Durfee squares";
      } else if (rank_2m(*di) != -rank_2m(*d)) {
        claim = "phi negates the (2,0)-rank";
      } else if (phi(image, mutation) != lambda) {
        claim = "phi is an involution";
      }
      if (claim) {
        b.fail(json{{"claim", claim}, {"partition", partition_to_json(lambda)}, {"image", partition_to_json(image)}});
      }
    } catch (const std::exception& e) {
      b.fail(json{{"claim", "phi is defined"}, {"partition", partition_to_json(lambda)}, {"exception", e.what()}});
    }
  });
  return b.finish();
}

VerificationReport verify_second_symmetry(int n, int m, int r, Mutation mutation) {
  if (!psi_parameters_valid(m, r)) {
    throw DomainError("second symmetry needs m, r > 0 or m = 0, r >= 0");
  }
  ReportBuilder b("second_symmetry", json{{"n", n}, {"m", m}, {"r", r}});
  const int target = n - r - 2 * m - 2;

  std::vector<Partition> images;
  for_each_partition(n, [&](const Partition& lambda) {
    const auto rank = rank_2m(lambda, m);
    if (!rank || *rank > -r) return;
    b.examined();
    try {
      Partition image = psi(lambda, m, r, mutation);
      if (image.size() != target) {
        b.fail(json{{"claim", "psi lowers the size by r + 2m + 2"}, {"partition", partition_to_json(lambda)}, {"image", partition_to_json(image)}});
      }
      const auto back = psi_inverse(image, m, r);
      if (back != lambda) {
        b.fail(json{{"claim", "psi_inverse(psi(lambda)) = lambda"},
                    {"partition", partition_to_json(lambda)},
                    {"image", partition_to_json(image)},
                    {"inverse", partition_to_json(back)}});
      }
      images.push_back(std::move(image));
    } catch (const std::exception& e) {
      b.fail(json{{"claim", "psi is defined on its domain"}, {"partition", partition_to_json(lambda)}, {"exception", e.what()}});
    }
  });

  std::vector<Partition> codomain;
  if (target >= 0) {
    for_each_partition(target, [&](const Partition& mu) {
      const auto rank = rank_2m(mu, m + 2);
      if (rank && *rank >= -r) codomain.push_back(mu);
    });
  }
  b.examined(codomain.size());

  std::sort(images.begin(), images.end());
  if (const auto dup = std::adjacent_find(images.begin(), images.end()); dup != images.end()) {
    b.fail(json{{"claim", "psi is injective"}, {"image", partition_to_json(*dup)}});
  }
  std::sort(codomain.begin(), codomain.end());
  if (!b.failed() && images != codomain) {
    std::vector<Partition> missing;
    std::vector<Partition> extra;
    std::set_difference(codomain.begin(), codomain.end(), images.begin(), images.end(), std::back_inserter(missing));
    std::set_difference(images.begin(), images.end(), codomain.begin(), codomain.end(), std::back_inserter(extra));
    json cx{{"claim", "image of psi equals the codomain"}};
    if (!missing.empty()) cx["missing"] = partition_to_json(missing.front());
    if (!extra.empty()) cx["extra"] = partition_to_json(extra.front());
    b.fail(std::move(cx));
  }

  for (const auto& mu : codomain) {
    if (b.failed()) break;
    try {
      const auto pre = psi_inverse(mu, m, r);
      const auto again = psi(pre, m, r, mutation);
      if (again != mu) {
        b.fail(json{{"claim", "psi(psi_inverse(mu)) = mu"}, {"partition", partition_to_json(mu)}, {"preimage", partition_to_json(pre)}, {"image", partition_to_json(again)}});
      }
    } catch (const std::exception& e) {
      b.fail(json{{"claim", "psi_inverse is defined on the codomain"}, {"partition", partition_to_json(mu)}, {"exception", e.what()}});
    }
  }

  const BigInt lhs = h(n, m, Comparison::at_most, -r);
  const BigInt rhs = h(target, m + 2, Comparison::at_least, -r);
  if (lhs != rhs) {
    b.fail(json{{"claim", "h(n,m,<=-r) = h(n-r-2m-2,m+2,>=-r)"}, {"lhs", big(lhs)}, {"rhs", big(rhs)}});
  }
  b.detail("domain " + std::to_string(images.size()) + ", codomain " + std::to_string(codomain.size()));
  return b.finish();
}

VerificationReport verify_dividetimes(int n, int m, int r) {
  ReportBuilder b("dividetimes", json{{"n", n}, {"m", m}, {"r", r}});
  const BigInt lhs = h(n, m, Comparison::at_most, r) + h(n, m, Comparison::at_least, r + 1);
  const BigInt rhs = m > 0 ? count_p(n) : BigInt(count_p(n) - count_q(n));
  b.examined();
  if (lhs != rhs) b.fail(json{{"lhs", big(lhs)}, {"rhs", big(rhs)}});
  return b.finish();
}

VerificationReport verify_telescoping(int n, int m, int r, std::optional<int> levels) {
  if (!psi_parameters_valid(m, r)) throw DomainError("telescoping needs m, r > 0 or m = 0, r >= 0");
  const auto level_size = [&](long j) { return n - j * r - 2 * j * m - j * (5 * j - 1) / 2; };
  int auto_levels = 0;
  while (level_size(auto_levels + 1) >= 0) ++auto_levels;
  const int depth = levels.value_or(auto_levels);
  if (depth < auto_levels) {
    throw DomainError("telescoping: " + std::to_string(depth) + " levels do not reach a negative size (need " +
                      std::to_string(auto_levels) + ")");
  }
  ReportBuilder b("telescoping", json{{"n", n}, {"m", m}, {"r", r}, {"levels", depth}});

  std::vector<BigInt> a(static_cast<std::size_t>(depth) + 2);
  std::vector<BigInt> bb(static_cast<std::size_t>(depth) + 2);
  for (int j = 0; j <= depth + 1; ++j) {
    const int nj = static_cast<int>(level_size(j));
    a[static_cast<std::size_t>(j)] = h(nj, m + 2 * j, Comparison::at_most, -r - j);
    bb[static_cast<std::size_t>(j)] = h(nj, m + 2 * j, Comparison::at_least, -r - j + 1);
    b.examined();
  }
  for (int j = 0; j <= depth; ++j) {
    if (a[static_cast<std::size_t>(j)] != bb[static_cast<std::size_t>(j) + 1]) {
      b.fail(json{{"claim", "a_j = b_{j+1}"}, {"j", j}, {"a_j", big(a[static_cast<std::size_t>(j)])}, {"b_j+1", big(bb[static_cast<std::size_t>(j) + 1])}});
    }
  }
  BigInt alternating = 0;
  for (int j = 1; j <= depth; ++j) {
    const long nj = level_size(j);
    const BigInt pj = count_p(nj);
    if (a[static_cast<std::size_t>(j)] + bb[static_cast<std::size_t>(j)] != pj) {
      b.fail(json{{"claim", "a_j + b_j = p(n_j)"}, {"j", j}, {"sum", big(a[static_cast<std::size_t>(j)] + bb[static_cast<std::size_t>(j)])}, {"p", big(pj)}});
    }
    if (j % 2 == 1) {
      alternating += pj;
    } else {
      alternating -= pj;
    }
  }
  const BigInt direct = h(n, m, Comparison::at_most, -r);
  if (direct != alternating) {
    b.fail(json{{"claim", "h(n,m,<=-r) = sum_j (-1)^{j-1} p(n_j)"}, {"h", big(direct)}, {"sum", big(alternating)}});
  }
  return b.finish();
}

VerificationReport verify_rr_identity(int order) {
  ReportBuilder b("rr_identity", json{{"N", order}});
  compare_series(b, rr_sum_side(order), rr_product_side(order));
  return b.finish();
}

VerificationReport verify_schur_identity(int order) {
  ReportBuilder b("schur_identity", json{{"N", order}});
  compare_series(b, rr_sum_side(order), schur_rhs(order));
  return b.finish();
}

VerificationReport verify_jtp_bivariate(int order) {
  ReportBuilder b("jtp_bivariate", json{{"N", order}});
  const auto lhs = jtp_lhs(order);
  const auto rhs = jtp_rhs(order);
  for (int k = -lhs.radius(); k <= lhs.radius() && !b.failed(); ++k) {
    b.examined(static_cast<std::uint64_t>(order) + 1);
    if (auto e = first_difference(lhs.slice(k), rhs.slice(k))) {
      b.fail(json{{"z_exponent", k}, {"exponent", *e}, {"lhs", big(lhs.coefficient(k, *e))}, {"rhs", big(rhs.coefficient(k, *e))}});
    }
  }
  return b.finish();
}

VerificationReport verify_jtp_specialized(int order) {
  ReportBuilder b("jtp_specialized", json{{"N", order}});
  const auto sides = jtp_specialized_sides(order);
  compare_series(b, sides.bilateral_sum, sides.product);
  compare_series(b, sides.rr_product, sides.schur_form);
  return b.finish();
}

VerificationReport verify_maltese_counts(int n_max, Mutation mutation) {
  ReportBuilder b("maltese_counts", json{{"n_max", n_max}});
  static constexpr std::pair<int, int> kGrid[] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}};
  for (const auto& [m, r] : kGrid) {
    const auto series = maltese_series(m, r, n_max, mutation);
    for (int n = 1; n <= n_max && !b.failed(); ++n) {
      b.examined();
      const BigInt count = h(n, m, Comparison::at_most, -r);
      if (series.coefficient(n) != count) {
        b.fail(json{{"m", m}, {"r", r}, {"exponent", n}, {"series", big(series.coefficient(n))}, {"count", big(count)}});
      }
    }
  }
  return b.finish();
}

VerificationReport verify_difference_corollary(int order) {
  ReportBuilder b("difference_corollary", json{{"N", order}});
  TruncatedSeries sums(order);
  for (long j = 1; j * (5 * j - 1) / 2 <= order; ++j) {
    const int sign = j % 2 == 1 ? 1 : -1;
    sums.add_to_coefficient(static_cast<int>(j * (5 * j - 1) / 2), sign);
    sums.add_to_coefficient(static_cast<int>(j * (5 * j + 1) / 2), sign);
  }
  const auto p = euler_inverse_product(order);
  compare_series(b, p * sums, p - rr_sum_side(order));
  return b.finish();
}

std::vector<VerificationReport> verify_series_suite(int order, Mutation mutation) {
  std::vector<VerificationReport> out;
  out.push_back(verify_rr_identity(order));
  out.push_back(verify_schur_identity(order));
  out.push_back(verify_jtp_bivariate(std::min(order, 60)));
  out.push_back(verify_jtp_specialized(order));
  out.push_back(verify_maltese_counts(std::min(order, 32), mutation));
  out.push_back(verify_difference_corollary(order));
  return out;
}

SuiteConfig parse_suite_config(const json& j) {
  if (!j.is_object()) throw ConfigError("suite config must be a JSON object");
  SuiteConfig c;
  const auto read_int = [](const json& v, const char* key, int lo, int hi) {
    if (!v.is_number_integer()) throw ConfigError(std::string("config '") + key + "' must be an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > hi) {
      throw ConfigError(std::string("config '") + key + "' out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(x);
  };
  const auto read_list = [&](const json& v, const char* key) {
    if (!v.is_array()) throw ConfigError(std::string("config '") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& x : v) out.push_back(read_int(x, key, 0, 50));
    return out;
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "n_max") {
      c.n_max = read_int(value, "n_max", 0, kDefaultEnumerationBound);
    } else if (key == "m") {
      c.m_values = read_list(value, "m");
    } else if (key == "r") {
      c.r_values = read_list(value, "r");
    } else if (key == "N") {
      c.series_order = value.is_null() ? std::nullopt : std::optional<int>(read_int(value, "N", 0, 2000));
    } else if (key == "figures") {
      if (!value.is_boolean()) throw ConfigError("config 'figures' must be a boolean");
      c.figures = value.get<bool>();
    } else if (key == "mutation") {
      if (!value.is_string()) throw ConfigError("config 'mutation' must be a string");
      const auto mut = parse_mutation(value.get<std::string>());
      if (!mut) throw ConfigError("unknown mutation '" + value.get<std::string>() + "'");
      c.mutation = *mut;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  try {
    return parse_suite_config(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

bool SuiteResult::passed() const noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  auto& out = result.reports;
  if (config.figures) out.push_back(verify_figures());

  std::vector<std::pair<int, int>> shifts;
  for (int m : config.m_values) {
    for (int r : config.r_values) {
      if (psi_parameters_valid(m, r)) shifts.emplace_back(m, r);
    }
  }
  const int r_span = config.r_values.empty() ? 0 : *std::max_element(config.r_values.begin(), config.r_values.end());

  for (int n = 1; n <= config.n_max; ++n) out.push_back(verify_first_symmetry(n, config.mutation));
  for (const auto& [m, r] : shifts) {
    for (int n = 1; n <= config.n_max; ++n) out.push_back(verify_second_symmetry(n, m, r, config.mutation));
  }
  for (int m : config.m_values) {
    for (int r = -r_span; r <= r_span; ++r) {
      for (int n = 1; n <= config.n_max; ++n) out.push_back(verify_dividetimes(n, m, r));
    }
  }
  for (const auto& [m, r] : shifts) {
    for (int n = 1; n <= config.n_max; ++n) out.push_back(verify_telescoping(n, m, r));
  }
  if (config.series_order) {
    for (auto& rep : verify_series_suite(*config.series_order, config.mutation)) out.push_back(std::move(rep));
  }
  return result;
}

std::string to_json_lines(const SuiteResult& result, bool with_timing) {
  std::string out;
  for (const auto& r : result.reports) {
    out += report_to_json(r, with_timing).dump();
    out += '\n';
  }
  return out;
}

std::string summary_table(const SuiteResult& result) {
  struct Row {
    std::size_t runs = 0;
    std::size_t failed = 0;
    std::uint64_t examined = 0;
    double ms = 0;
    const VerificationReport* first_failure = nullptr;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const auto& r : result.reports) {
    auto [it, fresh] = rows.try_emplace(r.check);
    if (fresh) order.push_back(r.check);
    auto& row = it->second;
    ++row.runs;
    row.examined += r.examined;
    row.ms += r.elapsed_ms;
    if (!r.passed()) {
      ++row.failed;
      if (!row.first_failure) row.first_failure = &r;
    }
  }
  std::ostringstream os;
  os << std::left << std::setw(22) << "check" << std::right << std::setw(7) << "runs" << std::setw(8) << "failed"
     << std::setw(12) << "examined" << std::setw(11) << "ms" << "  status\n";
  for (const auto& name : order) {
    const auto& row = rows.at(name);
    os << std::left << std::setw(22) << name << std::right << std::setw(7) << row.runs << std::setw(8) << row.failed
       << std::setw(12) << row.examined << std::setw(11) << std::fixed << std::setprecision(1) << row.ms << "  "
       << (row.failed ? "FAIL" : "pass") << '\n';
  }
  for (const auto& name : order) {
    if (const auto* f = rows.at(name).first_failure) {
      os << "first failure in " << name << ' ' << f->params.dump() << ": " << f->counterexample.dump() << '\n';
    }
  }
  os << (result.passed() ? "ALL PASS" : "FAILURES PRESENT") << " (" << result.reports.size() << " reports)\n";
  return os.str();
}

}  // namespace rrcomb
