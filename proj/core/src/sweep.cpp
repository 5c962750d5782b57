#include "gctc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

namespace gctc {

std::string_view to_string(MMode mode) noexcept {
  return mode == MMode::kAutoSolve ? "auto" : "explicit";
}

std::string_view to_string(ReportFormat format) noexcept {
  return format == ReportFormat::kJson ? "json" : "csv";
}

MMode parse_m_mode(std::string_view text) {
  if (text == "auto" || text == "auto-solve") return MMode::kAutoSolve;
  if (text == "explicit" || text == "list") return MMode::kExplicit;
  throw Error(Errc::kInvalidArgument, "unknown m mode '" + std::string(text) + "'");
}

ReportFormat parse_format(std::string_view text) {
  if (text == "json" || text == "JSON") return ReportFormat::kJson;
  if (text == "csv" || text == "CSV") return ReportFormat::kCsv;
  throw Error(Errc::kInvalidArgument, "unknown report format '" + std::string(text) + "'");
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> kChecks = {
      "bc2_family", "conj_5_4", "cor_1_7",        "cor_1_8",     "cor_1_9", "eq_1_3",
      "eq_1_4",     "mortenson", "s_closed_forms", "sun_tauraso", "thm_i",   "thm_ii",
  };
  return kChecks;
}

namespace {

bool is_known_check(std::string_view name) {
  const auto& all = known_checks();
  return std::find(all.begin(), all.end(), name) != all.end();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string_view::npos) {
      if (auto t = trim(cur); !t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (auto t = trim(cur); !t.empty()) out.push_back(t);
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(Errc::kInvalidArgument, "bad integer for '" + key + "': " + v);
  }
}

}  // namespace

void validate(const SweepConfig& config) {
  if (config.prime_min < 3) throw Error(Errc::kInvalidArgument, "prime_min must be >= 3");
  if (config.prime_max > 100000000) {
    throw Error(Errc::kInvalidArgument, "prime_max must be <= 10^8");
  }
  for (const auto& name : config.checks) {
    if (!is_known_check(name)) throw Error(Errc::kUnknownCheck, "unknown check '" + name + "'");
  }
  if (config.threads == 0) throw Error(Errc::kInvalidArgument, "threads must be positive");
  if (config.params.empty() &&
      (config.grid.b_min > config.grid.b_max || config.grid.c_min > config.grid.c_max)) {
    throw Error(Errc::kInvalidArgument, "empty parameter grid");
  }
  if (config.t_min < 1) throw Error(Errc::kInvalidArgument, "t_min must be >= 1");
}

SweepConfig parse_config_text(std::string_view text, SweepConfig base) {
  SweepConfig cfg = std::move(base);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::kInvalidArgument, "config line without '=': " + trim(line));
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "checks") {
      cfg.checks = split(value, ", ");
    } else if (key == "prime_min") {
      cfg.prime_min = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "prime_max") {
      cfg.prime_max = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "params") {
      cfg.params.clear();
      for (const auto& item : split(value, ", ;")) {
        const auto parts = split(item, ":");
        if (parts.size() != 2) throw Error(Errc::kInvalidArgument, "params entry must be b:c");
        cfg.params.emplace_back(to_int(key, parts[0]), to_int(key, parts[1]));
      }
    } else if (key == "b_min") {
      cfg.grid.b_min = to_int(key, value);
    } else if (key == "b_max") {
      cfg.grid.b_max = to_int(key, value);
    } else if (key == "c_min") {
      cfg.grid.c_min = to_int(key, value);
    } else if (key == "c_max") {
      cfg.grid.c_max = to_int(key, value);
    } else if (key == "m_mode") {
      cfg.m_mode = parse_m_mode(value);
    } else if (key == "m") {
      cfg.m_values.clear();
      for (const auto& item : split(value, ", ")) cfg.m_values.push_back(to_int(key, item));
    } else if (key == "t_min") {
      cfg.t_min = to_int(key, value);
    } else if (key == "t_max") {
      cfg.t_max = to_int(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(to_int(key, value));
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else {
      throw Error(Errc::kInvalidArgument, "unknown config key '" + key + "'");
    }
  }
  return cfg;
}

SweepConfig load_config_file(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

std::vector<std::pair<std::int64_t, std::int64_t>> expand_params(const SweepConfig& config) {
  if (!config.params.empty()) return config.params;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t b = config.grid.b_min; b <= config.grid.b_max; ++b) {
    for (std::int64_t c = config.grid.c_min; c <= config.grid.c_max; ++c) out.emplace_back(b, c);
  }
  return out;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi || hi > 100000000) {
    throw Error(Errc::kOutOfRange, "sieve bounds must satisfy 2 <= lo <= hi <= 10^8");
  }
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!composite[n]) primes.push_back(n);
  }
  return primes;
}

namespace {

// Runs fn(i) for i in [0, count) over `threads` workers and returns the
// results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (n <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

bool is_perfect_square(std::int64_t c, std::int64_t* root) {
  if (c < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(c)));
  while (r * r > c) --r;
  while ((r + 1) * (r + 1) <= c) ++r;
  if (r * r != c) return false;
  *root = r;
  return true;
}

std::vector<std::int64_t> m_candidates(const SweepConfig& config, const TrinomialParams& params) {
  if (config.m_mode == MMode::kAutoSolve) return solve_m(params);
  std::vector<std::int64_t> out;
  const __int128 d = params.d();
  for (const std::int64_t m : config.m_values) {
    const __int128 diff = static_cast<__int128>(m) - d;
    if (diff * diff == 16 * static_cast<__int128>(m) * params.c()) out.push_back(m);
  }
  return out;
}

CheckVerdict no_m_verdict(const std::string& check, std::uint64_t p, const TrinomialParams& params) {
  CheckVerdict v;
  v.check = check;
  v.p = p;
  v.b = params.b();
  v.c = params.c();
  v.e = check == "thm_ii" ? 2 : 1;
  v.skip_reason = "no integer m with (m-d)^2 = 16mc";
  return v;
}

std::vector<CheckVerdict> run_prime(const SweepConfig& config,
                                    const std::vector<std::pair<std::int64_t, std::int64_t>>& grid,
                                    std::uint64_t p) {
  std::vector<CheckVerdict> out;
  for (const auto& check : config.checks) {
    if (check == "thm_i" || check == "eq_1_3") {
      for (const auto& [b, c] : grid) {
        const TrinomialParams params(b, c);
        out.push_back(check == "thm_i" ? check_thm_i(params, p) : check_eq_1_3(params, p));
      }
    } else if (check == "thm_ii" || check == "s_closed_forms") {
      for (const auto& [b, c] : grid) {
        const TrinomialParams params(b, c);
        const auto ms = m_candidates(config, params);
        if (ms.empty()) {
          out.push_back(no_m_verdict(check, p, params));
          continue;
        }
        for (const std::int64_t m : ms) {
          if (check == "thm_ii") {
            out.push_back(check_thm_ii(params, m, p));
          } else {
            CheckVerdict v = check_s_closed_forms(m, params.d(), p);
            v.b = b;
            v.c = c;
            out.push_back(std::move(v));
          }
        }
      }
    } else if (check == "bc2_family") {
      for (const auto& [b, c] : grid) {
        std::int64_t gamma = 0;
        if (c < 1 || !is_perfect_square(c, &gamma)) continue;
        out.push_back(check_bc2_family(b, gamma, p));
      }
    } else if (check == "sun_tauraso") {
      const auto sp = static_cast<std::int64_t>(p);
      const std::int64_t hi = config.t_max == 0 ? sp - 1 : config.t_max;
      for (std::int64_t t = config.t_min; t <= hi; ++t) out.push_back(check_sun_tauraso(t, p));
    } else if (check == "eq_1_4") {
      out.push_back(check_eq_1_4(p));
    } else if (check == "cor_1_7") {
      out.push_back(check_cor_1_7(p));
    } else if (check == "cor_1_8") {
      out.push_back(check_cor_1_8(p));
    } else if (check == "cor_1_9") {
      out.push_back(check_cor_1_9(p));
    } else if (check == "conj_5_4") {
      out.push_back(check_conj_5_4(p));
    } else if (check == "mortenson") {
      out.push_back(check_mortenson(p));
    }
  }
  return out;
}

auto sort_key(const CheckVerdict& v) {
  return std::tie(v.check, v.p, v.b, v.c, v.m, v.t);
}

}  // namespace

SweepReport run_sweep(const SweepConfig& requested) {
  validate(requested);
  const auto start = std::chrono::steady_clock::now();
  SweepConfig config = requested;
  if (config.checks.empty()) config.checks = known_checks();
  SweepReport report;
  report.config = config;
  std::vector<std::uint64_t> primes;
  if (config.prime_min <= config.prime_max) primes = sieve_primes(config.prime_min, config.prime_max);
  const auto grid = expand_params(config);

  auto per_prime = parallel_map<std::vector<CheckVerdict>>(
      primes.size(), config.threads,
      [&](std::size_t i) { return run_prime(config, grid, primes[i]); });
  for (auto& chunk : per_prime) {
    for (auto& v : chunk) report.verdicts.push_back(std::move(v));
  }
  std::stable_sort(report.verdicts.begin(), report.verdicts.end(),
                   [](const CheckVerdict& a, const CheckVerdict& b) {
                     return sort_key(a) < sort_key(b);
                   });
  for (const auto& v : report.verdicts) {
    if (v.skipped()) {
      ++report.summary.skip;
    } else if (v.passed()) {
      ++report.summary.pass;
    } else {
      ++report.summary.fail;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckVerdict run_check(std::string_view name, std::uint64_t p, std::optional<std::int64_t> b,
                       std::optional<std::int64_t> c, std::optional<std::int64_t> m,
                       std::optional<std::int64_t> t) {
  const auto need = [&](const std::optional<std::int64_t>& v, const char* what) {
    if (!v) throw Error(Errc::kInvalidArgument, std::string(name) + " needs --" + what);
    return *v;
  };
  if (name == "thm_i") return check_thm_i(TrinomialParams(need(b, "b"), need(c, "c")), p);
  if (name == "eq_1_3") return check_eq_1_3(TrinomialParams(need(b, "b"), need(c, "c")), p);
  if (name == "thm_ii") {
    return check_thm_ii(TrinomialParams(need(b, "b"), need(c, "c")), need(m, "m"), p);
  }
  if (name == "s_closed_forms") {
    const TrinomialParams params(need(b, "b"), need(c, "c"));
    CheckVerdict v = check_s_closed_forms(need(m, "m"), params.d(), p);
    v.b = params.b();
    v.c = params.c();
    return v;
  }
  if (name == "bc2_family") {
    std::int64_t gamma = 0;
    const std::int64_t cc = need(c, "c");
    if (cc < 1 || !is_perfect_square(cc, &gamma)) {
      throw Error(Errc::kInvalidArgument, "bc2_family needs c to be a positive square");
    }
    return check_bc2_family(need(b, "b"), gamma, p);
  }
  if (name == "sun_tauraso") return check_sun_tauraso(need(t, "t"), p);
  if (name == "eq_1_4") return check_eq_1_4(p);
  if (name == "cor_1_7") return check_cor_1_7(p);
  if (name == "cor_1_8") return check_cor_1_8(p);
  if (name == "cor_1_9") return check_cor_1_9(p);
  if (name == "conj_5_4") return check_conj_5_4(p);
  if (name == "mortenson") return check_mortenson(p);
  throw Error(Errc::kUnknownCheck, "unknown check '" + std::string(name) + "'");
}

// --- identity suites ---------------------------------------------------------

const std::vector<std::string>& known_identity_suites() {
  static const std::vector<std::string> kSuites = {
      "clausen_square",      "harmonic_identity", "harmonic_recurrence", "known_inverse_binom",
      "lemma3",              "lemma3_recurrence", "lemma4",              "lemma4_recurrence",
      "legendre_connection", "lemma5",            "lemma6",              "transition_binomials",
      "sun_lemma31",         "wolstenholme",
  };
  return kSuites;
}

std::vector<BigRat> default_x_samples() {
  return {BigRat(1, 2), BigRat(-1, 2), BigRat(2),    BigRat(-2),   BigRat(3, 5),
          BigRat(-7, 3), BigRat(1),    BigRat(-1),   BigRat(0),    BigRat(-3),
          BigRat(5, 7)};
}

std::vector<BigRat> extend_samples(const std::vector<BigRat>& fixed, std::size_t count) {
  std::vector<BigRat> out;
  const auto add = [&](const BigRat& x) {
    if (x == -1 || out.size() >= count) return;
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& x : fixed) add(x);
  for (long j = 3; out.size() < count; ++j) {
    add(BigRat(j));
    add(BigRat(-j));
    add(make_rational(1, j));
  }
  return out;
}

namespace {

using Task = std::function<IdentityReport()>;

void add_exact_suites(const std::string& suite, const IdentitySweepConfig& cfg,
                      std::vector<Task>& tasks) {
  const unsigned nmax = cfg.n_max;
  const auto& fixed = cfg.x_samples.empty() ? default_x_samples() : cfg.x_samples;
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t b = cfg.grid.b_min; b <= cfg.grid.b_max; ++b) {
    for (std::int64_t c = cfg.grid.c_min; c <= cfg.grid.c_max; ++c) grid.emplace_back(b, c);
  }

  if (suite == "clausen_square" || suite == "legendre_connection") {
    for (const auto& [b, c] : grid) {
      const TrinomialParams params(b, c);
      if (suite == "legendre_connection" && params.d() == 0) continue;
      for (unsigned n = 0; n <= nmax; ++n) {
        if (suite == "clausen_square") {
          tasks.emplace_back([=] { return verify_clausen_square(n, params); });
        } else {
          tasks.emplace_back([=] { return verify_legendre_connection(n, params); });
        }
      }
    }
  } else if (suite == "harmonic_identity" || suite == "harmonic_recurrence") {
    // Both sides are polynomials in x of degree <= n + 4 after multiplying out.
    for (unsigned n = 0; n <= nmax; ++n) {
      for (const auto& x : extend_samples(fixed, n + 5)) {
        if (suite == "harmonic_identity") {
          tasks.emplace_back([=] { return verify_harmonic_identity(n, x); });
        } else {
          tasks.emplace_back([=] { return verify_harmonic_recurrence(n, x); });
        }
      }
    }
  } else if (suite == "known_inverse_binom") {
    // Cleared of (x+1)^{n+1}, degree <= 2n + 2.
    for (unsigned n = 0; n <= nmax; ++n) {
      for (const auto& x : extend_samples(fixed, 2 * n + 3)) {
        tasks.emplace_back([=] { return verify_known_inverse_binom(n, x); });
      }
    }
  } else if (suite == "lemma3" || suite == "lemma3_recurrence") {
    // Cleared of (x+1)^{2n+3}, degree <= 4n + 4.
    for (unsigned n = 1; n <= nmax; ++n) {
      for (const auto& x : extend_samples(fixed, 4 * n + 5)) {
        if (suite == "lemma3") {
          tasks.emplace_back([=] { return verify_lemma3(n, x); });
        } else {
          tasks.emplace_back([=] { return verify_lemma3_recurrence(n, x); });
        }
      }
    }
  } else if (suite == "lemma4" || suite == "lemma4_recurrence") {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs = cfg.md_pairs;
    if (pairs.empty()) {
      pairs = {{4, 12}, {36, 12}, {1, 5}, {25, 5}};
      for (const auto& [b, c] : grid) {
        const TrinomialParams params(b, c);
        for (const std::int64_t m : solve_m(params)) {
          if (m != 0 && params.d() != 0 && m + params.d() != 0) pairs.emplace_back(m, params.d());
        }
      }
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    for (const auto& [m, d] : pairs) {
      for (unsigned n = suite == "lemma4" ? 1 : 0; n <= nmax; ++n) {
        if (suite == "lemma4") {
          tasks.emplace_back([=] { return verify_lemma4(n, m, d); });
        } else {
          tasks.emplace_back([=] { return verify_lemma4_recurrence(n, m, d); });
        }
      }
    }
  }
}

void add_modular_suites(const std::string& suite, const IdentitySweepConfig& cfg,
                        std::vector<Task>& tasks) {
  if (cfg.p_max < 3) return;
  const auto primes = sieve_primes(3, std::max<std::uint64_t>(3, cfg.p_max));
  const auto& fixed = cfg.x_samples.empty() ? default_x_samples() : cfg.x_samples;
  for (const std::uint64_t p : primes) {
    const std::uint64_t half = (p - 1) / 2;
    if (suite == "transition_binomials") {
      for (std::uint64_t l = 1; l <= half; ++l) {
        const std::uint64_t kmax = std::max(p - 2 * l - 1, l - 1);
        for (std::uint64_t k = 0; k <= kmax; ++k) {
          tasks.emplace_back([=] { return verify_transition_binomials(p, l, k); });
        }
      }
    } else if (suite == "sun_lemma31") {
      for (std::uint64_t l = 0; l <= half; ++l) {
        tasks.emplace_back([=] { return verify_sun_lemma31(p, l); });
      }
    } else if (suite == "wolstenholme") {
      if (p > 3) tasks.emplace_back([=] { return verify_wolstenholme(p); });
    } else if (suite == "lemma5" || suite == "lemma6") {
      std::vector<BigRat> xs = fixed;
      for (long x = 0; x <= 9; ++x) xs.emplace_back(x);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
      for (const auto& x : xs) {
        if (mod.reduce(x.get_den()) == 0) continue;
        if (suite == "lemma5") {
          const Residue xr = to_residue(x, mod);
          if (xr.is_zero() || (Residue::one(mod) - xr).is_zero()) continue;
          tasks.emplace_back([=] { return verify_lemma5(p, x); });
        } else {
          tasks.emplace_back([=] { return verify_lemma6(p, x); });
        }
      }
    }
  }
}

}  // namespace

IdentitySweepResult run_identity_sweep(const IdentitySweepConfig& config) {
  const auto& all = known_identity_suites();
  const std::vector<std::string>& suites = config.suites.empty() ? all : config.suites;
  std::vector<Task> tasks;
  for (const auto& suite : suites) {
    if (std::find(all.begin(), all.end(), suite) == all.end()) {
      throw Error(Errc::kUnknownCheck, "unknown identity suite '" + suite + "'");
    }
    add_exact_suites(suite, config, tasks);
    add_modular_suites(suite, config, tasks);
  }
  IdentitySweepResult result;
  result.reports = parallel_map<IdentityReport>(tasks.size(), std::max(1u, config.threads),
                                                [&](std::size_t i) { return tasks[i](); });
  for (const auto& r : result.reports) (r.holds ? result.pass : result.fail)++;
  return result;
}

}  // namespace gctc
