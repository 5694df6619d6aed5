#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rrcomb/bijections.hpp"
#include "rrcomb/diagram.hpp"
#include "rrcomb/durfee.hpp"
#include "rrcomb/errors.hpp"
#include "rrcomb/io.hpp"
#include "rrcomb/qseries.hpp"
#include "rrcomb/verify.hpp"

namespace rrcomb::cli {

namespace {

struct PartitionArg {
  std::string list;
  std::string file;
  bool list_given = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("partition", list, "Parts, comma separated (e.g. 5,5,4,1)");
    cmd->add_option("--partition-file", file, "JSON file holding the partition as an array");
  }

  Partition resolve(const CLI::App* cmd) const {
    const bool has_list = cmd->count("partition") > 0;
    const bool has_file = cmd->count("--partition-file") > 0;
    if (has_list == has_file) throw ValidationError("give exactly one of a part list or --partition-file");
    if (has_list) return parse_partition_list(list);
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open partition file " + file);
    try {
      return partition_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("partition file is not valid JSON: ") + e.what());
    }
  }
};

std::string rank_text(const std::optional<int>& r) {
  return r ? std::to_string(*r) : std::string("undefined");
}

json rank_json(const std::optional<int>& r) { return r ? json(*r) : json(nullptr); }

TruncatedSeries named_series(const std::string& which, int order, int m, int r) {
  if (which == "euler") return euler_inverse_product(order);
  if (which == "euler-product") return euler_product(order);
  if (which == "rr-sum") return rr_sum_side(order);
  if (which == "rr-product") return rr_product_side(order);
  if (which == "schur") return schur_rhs(order);
  if (which == "theta") return pentagonal_theta(order);
  if (which == "maltese") return maltese_series(m, r, order);
  throw ValidationError("unknown series '" + which + "'");
}

void print_map_result(std::ostream& out, bool as_json, const char* name, const Partition& in, const Partition& res,
                      int m_in, int m_out) {
  const auto r_in = rank_2m(in, m_in);
  const auto r_out = rank_2m(res, m_out);
  if (as_json) {
    out << json{{"map", name},
                {"input", partition_to_json(in)},
                {"output", partition_to_json(res)},
                {"rank_in", rank_json(r_in)},
                {"rank_out", rank_json(r_out)}}
               .dump()
        << '\n';
    return;
  }
  out << "input  " << in << "  n=" << in.size() << "  r_{2," << m_in << "}=" << rank_text(r_in) << '\n';
  out << "output " << res << "  n=" << res.size() << "  r_{2," << m_out << "}=" << rank_text(r_out) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Durfee-rectangle ranks, the phi/psi bijections and Rogers-Ramanujan series checks", "rrcomb"};
  app.require_subcommand(1, 1);

  int m = 0;
  int r = 0;
  int n = 0;
  int order = 20;
  bool as_json = false;
  bool no_timing = false;
  std::string config_path;
  std::string fault;
  std::string which;

  PartitionArg part_decompose, part_rank, part_phi, part_psi, part_psi_inv;

  auto* decompose_cmd = app.add_subcommand("decompose", "Show the two m-Durfee rectangles, alpha/beta/gamma and the rank");
  part_decompose.attach(decompose_cmd);
  decompose_cmd->add_option("--m", m, "Rectangle offset (height - width)")->check(CLI::NonNegativeNumber);
  decompose_cmd->add_flag("--json", as_json);

  auto* rank_cmd = app.add_subcommand("rank", "Print the (2,m)-rank");
  part_rank.attach(rank_cmd);
  rank_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  rank_cmd->add_flag("--json", as_json);

  auto* phi_cmd = app.add_subcommand("phi", "Apply the rank-negating involution");
  part_phi.attach(phi_cmd);
  phi_cmd->add_flag("--json", as_json);

  auto* psi_cmd = app.add_subcommand("psi", "Apply psi_{m,r}");
  part_psi.attach(psi_cmd);
  psi_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  psi_cmd->add_option("--r", r);
  psi_cmd->add_flag("--json", as_json);

  auto* psi_inv_cmd = app.add_subcommand("psi-inv", "Apply the inverse of psi_{m,r}");
  part_psi_inv.attach(psi_inv_cmd);
  psi_inv_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  psi_inv_cmd->add_option("--r", r);
  psi_inv_cmd->add_flag("--json", as_json);

  auto* series_cmd = app.add_subcommand("series", "Print series coefficients t^0..t^N");
  series_cmd->add_option("which", which, "euler | euler-product | rr-sum | rr-product | schur | theta | maltese")->required();
  series_cmd->add_option("--N", order, "Truncation order")->check(CLI::Range(0, 5000));
  series_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--r", r);
  series_cmd->add_flag("--json", as_json);

  auto* count_cmd = app.add_subcommand("count", "p(n), q(n) and, with --m, the (2,m)-rank histogram");
  count_cmd->add_option("--n", n)->required()->check(CLI::Range(0, kDefaultEnumerationBound));
  count_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  count_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--config", config_path, "JSON file with suite ranges");
  verify_cmd->add_option("--n", n, "Override n_max")->check(CLI::Range(0, kDefaultEnumerationBound));
  verify_cmd->add_option("--N", order, "Override the series order")->check(CLI::Range(0, 2000));
  verify_cmd->add_flag("--json", as_json, "Emit JSON lines");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit elapsed_ms from JSON lines");
  verify_cmd->add_option("--inject-fault", fault)->group("");

  auto* figures_cmd = app.add_subcommand("figures", "Replay the five worked examples");
  figures_cmd->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) {
      const auto lambda = part_decompose.resolve(decompose_cmd);
      if (m == 0 && lambda.empty()) {
        if (as_json) {
          out << json{{"partition", json::array()}, {"decomposition", nullptr}, {"rank", nullptr}}.dump() << '\n';
        } else {
          out << "lambda = () n=0 m=0\nrank undefined (Rogers-Ramanujan partition)\n";
        }
        return kExitOk;
      }
      const auto d = decompose(lambda, m);
      const auto rank = d ? std::optional<int>(rank_2m(*d)) : std::nullopt;
      if (as_json) {
        out << json{{"partition", partition_to_json(lambda)}, {"decomposition", describe_to_json(lambda, m)}, {"rank", rank_json(rank)}}.dump()
            << '\n';
        return kExitOk;
      }
      out << "lambda = " << lambda << " n=" << lambda.size() << " m=" << m << '\n';
      if (!d) {
        out << "s=" << first_durfee_height(lambda, m) << " t=absent\n";
        out << "rank undefined (Rogers-Ramanujan partition)\n";
        out << render_diagram(lambda);
        return kExitOk;
      }
      out << "s=" << d->s << " (width " << d->s - m << ") t=" << d->t << " (width " << d->t - m << ")\n";
      out << "alpha=" << d->alpha << " beta=" << d->beta << " gamma=" << (d->gamma.empty() ? "() empty" : to_string(d->gamma))
          << '\n';
      out << "rank=" << *rank << '\n';
      out << render_diagram(lambda, d);
      return kExitOk;
    }
    if (rank_cmd->parsed()) {
      const auto lambda = part_rank.resolve(rank_cmd);
      const auto rank = rank_2m(lambda, m);
      if (as_json) {
        out << json{{"partition", partition_to_json(lambda)}, {"m", m}, {"rank", rank_json(rank)}}.dump() << '\n';
      } else if (rank) {
        out << *rank << '\n';
      } else {
        out << "rank undefined (Rogers-Ramanujan partition)\n";
      }
      return kExitOk;
    }
    if (phi_cmd->parsed()) {
      const auto lambda = part_phi.resolve(phi_cmd);
      print_map_result(out, as_json, "phi", lambda, phi(lambda), 0, 0);
      return kExitOk;
    }
    if (psi_cmd->parsed()) {
      const auto lambda = part_psi.resolve(psi_cmd);
      print_map_result(out, as_json, "psi", lambda, psi(lambda, m, r), m, m + 2);
      return kExitOk;
    }
    if (psi_inv_cmd->parsed()) {
      const auto lambda = part_psi_inv.resolve(psi_inv_cmd);
      print_map_result(out, as_json, "psi-inv", lambda, psi_inverse(lambda, m, r), m + 2, m);
      return kExitOk;
    }
    if (series_cmd->parsed()) {
      const auto f = named_series(which, order, m, r);
      if (as_json) {
        out << series_to_json(f).dump() << '\n';
      } else {
        out << which << " N=" << f.order() << '\n';
        for (int i = 0; i <= f.order(); ++i) out << (i ? " " : "") << f.coefficient(i).get_str();
        out << '\n';
      }
      return kExitOk;
    }
    if (count_cmd->parsed()) {
      const BigInt p = count_p(n);
      const BigInt q = count_q(n);
      const bool with_hist = count_cmd->count("--m") > 0;
      std::map<int, BigInt> hist;
      if (with_hist) hist = rank_histogram(n, m);
      if (as_json) {
        json j{{"n", n}, {"p", p.get_str()}, {"q", q.get_str()}};
        if (with_hist) {
          json h = json::object();
          for (const auto& [rank, c] : hist) h[std::to_string(rank)] = c.get_str();
          j["m"] = m;
          j["histogram"] = h;
        }
        out << j.dump() << '\n';
      } else {
        out << "p(" << n << ")=" << p.get_str() << " q(" << n << ")=" << q.get_str() << '\n';
        for (const auto& [rank, c] : hist) out << "h(" << n << "," << m << "," << rank << ")=" << c.get_str() << '\n';
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      SuiteConfig config = config_path.empty() ? SuiteConfig{} : load_suite_config(config_path);
      if (verify_cmd->count("--n")) config.n_max = n;
      if (verify_cmd->count("--N")) config.series_order = order;
      if (!fault.empty()) {
        const auto mut = parse_mutation(fault);
        if (!mut) throw ConfigError("unknown fault '" + fault + "'");
        config.mutation = *mut;
      }
      const auto result = run_suite(config);
      out << (as_json ? to_json_lines(result, !no_timing) : summary_table(result));
      return result.passed() ? kExitOk : kExitVerificationFailed;
    }
    if (figures_cmd->parsed()) {
      const auto report = verify_figures();
      if (as_json) {
        out << report_to_json(report, false).dump() << '\n';
      } else {
        out << "figures: " << (report.passed() ? "pass" : "FAIL") << " (" << report.examined << " examples)\n";
        if (!report.passed()) out << report.counterexample.dump() << '\n';
      }
      return report.passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rrcomb::cli
