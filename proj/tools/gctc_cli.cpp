#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gctc/sweep.hpp"
#include "json.hpp"

namespace {

using namespace gctc;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  out << text;
}

unsigned default_threads() {
  if (const char* env = std::getenv("GCTC_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::string cur;
    for (char ch : item + ",") {
      if (ch == ',' || ch == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
  }
  return out;
}

struct SweepFlags {
  std::string config;
  std::vector<std::string> checks;
  std::uint64_t prime_min = 0;
  std::uint64_t prime_max = 0;
  std::string params;
  std::int64_t b_min = 0, b_max = 0, c_min = 0, c_max = 0;
  std::string m_mode;
  std::vector<std::string> m;
  std::int64_t t_min = 0, t_max = 0;
  unsigned threads = 0;
  std::string format;
  std::string output;
  bool timing = false;
};

void add_sweep(CLI::App& app, SweepFlags& f) {
  auto* cmd = app.add_subcommand("sweep", "Run congruence checks over a prime range");
  cmd->add_option("--config", f.config, "key=value config file; flags override it");
  cmd->add_option("--checks", f.checks, "Check ids (comma separated); default all");
  cmd->add_option("--prime-min", f.prime_min, "Smallest prime (>= 3)");
  cmd->add_option("--prime-max", f.prime_max, "Largest prime (<= 10^8)");
  cmd->add_option("--params", f.params, "Explicit b:c list, e.g. 4:1,3:2");
  cmd->add_option("--b-min", f.b_min);
  cmd->add_option("--b-max", f.b_max);
  cmd->add_option("--c-min", f.c_min);
  cmd->add_option("--c-max", f.c_max);
  cmd->add_option("--m-mode", f.m_mode, "auto or explicit");
  cmd->add_option("--m", f.m, "m values for explicit mode");
  cmd->add_option("--t-min", f.t_min);
  cmd->add_option("--t-max", f.t_max, "0 means every t < p");
  cmd->add_option("--threads", f.threads, "Worker threads (default $GCTC_THREADS or 1)");
  cmd->add_option("--format", f.format, "json or csv");
  cmd->add_option("--output,-o", f.output, "Report path; stdout when omitted");
  cmd->add_flag("--timing", f.timing, "Print wall time to stderr");
}

SweepConfig sweep_config(const CLI::App& cmd, const SweepFlags& f) {
  SweepConfig cfg;
  cfg.threads = default_threads();
  if (!f.config.empty()) cfg = load_config_file(f.config, cfg);
  std::string overrides;
  const auto set = [&](const char* flag, const char* key, const std::string& value) {
    if (cmd.count(flag) > 0) overrides += std::string(key) + " = " + value + "\n";
  };
  std::string checks;
  for (const auto& c : split_list(f.checks)) checks += c + ",";
  std::string ms;
  for (const auto& m : split_list(f.m)) ms += m + ",";
  set("--checks", "checks", checks);
  set("--prime-min", "prime_min", std::to_string(f.prime_min));
  set("--prime-max", "prime_max", std::to_string(f.prime_max));
  set("--params", "params", f.params);
  set("--b-min", "b_min", std::to_string(f.b_min));
  set("--b-max", "b_max", std::to_string(f.b_max));
  set("--c-min", "c_min", std::to_string(f.c_min));
  set("--c-max", "c_max", std::to_string(f.c_max));
  set("--m-mode", "m_mode", f.m_mode);
  set("--m", "m", ms);
  set("--t-min", "t_min", std::to_string(f.t_min));
  set("--t-max", "t_max", std::to_string(f.t_max));
  set("--threads", "threads", std::to_string(f.threads));
  set("--format", "format", f.format);
  set("--output", "output", f.output);
  return parse_config_text(overrides, cfg);
}

int run_sweep_cmd(const CLI::App& cmd, const SweepFlags& f) {
  const SweepConfig cfg = sweep_config(cmd, f);
  const SweepReport report = run_sweep(cfg);
  write_output(emit_report(report, cfg.format), cfg.output);
  if (f.timing) {
    std::fprintf(stderr, "wall time %.3f s, %zu verdicts, %u thread(s)\n", report.wall_seconds,
                 report.verdicts.size(), cfg.threads);
  }
  std::fprintf(stderr, "pass %zu, fail %zu, skip %zu\n", report.summary.pass,
               report.summary.fail, report.summary.skip);
  return report.summary.fail == 0 ? 0 : 1;
}

struct IdentityFlags {
  std::vector<std::string> suites;
  unsigned n_max = 30;
  std::uint64_t p_max = 200;
  unsigned threads = 0;
  std::string format = "json";
  std::string output;
};

int run_identity_cmd(const CLI::App& cmd, const IdentityFlags& f) {
  IdentitySweepConfig cfg;
  cfg.suites = split_list(f.suites);
  cfg.n_max = f.n_max;
  cfg.p_max = f.p_max;
  cfg.threads = cmd.count("--threads") > 0 ? f.threads : default_threads();
  const auto result = run_identity_sweep(cfg);
  write_output(emit_identity_report(result, parse_format(f.format)), f.output);
  return result.fail == 0 ? 0 : 1;
}

struct CheckFlags {
  std::string name;
  std::uint64_t p = 0;
  std::optional<std::int64_t> b, c, m, t;
  std::string format = "json";
};

int run_check_cmd(const CheckFlags& f) {
  SweepReport report;
  report.config.checks = {f.name};
  report.config.prime_min = report.config.prime_max = f.p;
  report.config.params.clear();
  const CheckVerdict v = run_check(f.name, f.p, f.b, f.c, f.m, f.t);
  report.verdicts.push_back(v);
  (v.skipped() ? report.summary.skip : v.passed() ? report.summary.pass : report.summary.fail)++;
  if (parse_format(f.format) == ReportFormat::kCsv) {
    std::cout << emit_report(report, ReportFormat::kCsv);
  } else {
    // The verdict object alone, as it appears in sweep reports.
    const auto doc = nlohmann::ordered_json::parse(emit_report(report, ReportFormat::kJson));
    std::cout << doc["verdicts"][0].dump(2) << "\n";
  }
  return v.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gctc: supercongruence verification for generalized central trinomial coefficients"};
  app.require_subcommand(1);

  SweepFlags sweep;
  add_sweep(app, sweep);

  IdentityFlags ident;
  auto* identity = app.add_subcommand("identity", "Verify exact identities and auxiliary congruences");
  identity->add_option("--suite", ident.suites, "Suite ids (comma separated); default all");
  identity->add_option("--n-max", ident.n_max, "Largest n for exact identities");
  identity->add_option("--p-max", ident.p_max, "Largest prime for modular suites");
  identity->add_option("--threads", ident.threads);
  identity->add_option("--format", ident.format, "json or csv");
  identity->add_option("--output,-o", ident.output);

  std::int64_t sb = 0, sc = 0;
  auto* solve = app.add_subcommand("solve-m", "Integer m with (m-d)^2 = 16mc");
  solve->add_option("--b", sb)->required();
  solve->add_option("--c", sc)->required();

  std::uint64_t rp = 0;
  auto* represent = app.add_subcommand("represent", "Write p = x^2 + 4y^2 with x = 1 (mod 4)");
  represent->add_option("--p", rp)->required();

  CheckFlags check;
  auto* single = app.add_subcommand("check", "Run one check at one prime");
  single->add_option("--name", check.name)->required();
  single->add_option("--p", check.p)->required();
  single->add_option("--b", check.b);
  single->add_option("--c", check.c);
  single->add_option("--m", check.m);
  single->add_option("--t", check.t);
  single->add_option("--format", check.format, "json or csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("sweep")) return run_sweep_cmd(*app.get_subcommand("sweep"), sweep);
    if (*identity) return run_identity_cmd(*identity, ident);
    if (*solve) {
      const auto roots = solve_m(TrinomialParams(sb, sc));
      for (std::size_t i = 0; i < roots.size(); ++i) std::cout << (i ? " " : "") << roots[i];
      std::cout << "\n";
      return 0;
    }
    if (*represent) {
      if (!is_prime(rp) || rp % 4 != 1) {
        throw Error(Errc::kInvalidArgument, "p must be a prime with p = 1 (mod 4)");
      }
      const auto rep = cornacchia_x2_4y2(rp);
      std::cout << "x=" << rep.x << " y=" << rep.y << "\n";
      return 0;
    }
    if (*single) return run_check_cmd(check);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
