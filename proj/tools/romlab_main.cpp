// romlab - command-line laboratory for floor-power sumset densities.
//
// Subcommands: sumset, fn, pairsum, rearrange, integrate, scan, cache.
// Every report-writing command also drops <out>.manifest.json with the
// resolved parameters, a config hash and output digests. Exit codes:
//   0 ok, 1 unexpected failure, 2 invalid flags or contract violation,
//   3 resource budget exceeded, 4 cache directory not writable.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "romlab/cache.hpp"
#include "romlab/criterion.hpp"
#include "romlab/errors.hpp"
#include "romlab/integrate.hpp"
#include "romlab/manifest.hpp"
#include "romlab/scan.hpp"
#include "romlab/serialize.hpp"
#include "romlab/sha256.hpp"
#include "romlab/sumset.hpp"
#include "romlab/version.hpp"

using namespace romlab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputSpec {
  std::string out_path;  // empty: stdout, no manifest
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputSpec& spec) {
  cmd->add_option("--out", spec.out_path, "report file (stdout when omitted)");
  cmd->add_option("--format", spec.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

// Writes the report (and its manifest) or prints it; returns the wall time
// consumed so far for the manifest.
void emit(const OutputSpec& spec, const std::string& command,
          const std::vector<std::string>& argv, const ordered_json& params,
          const std::string& report, double wall_s) {
  if (spec.out_path.empty()) {
    std::cout << report;
    if (!report.empty() && report.back() != '\n') std::cout << '\n';
    return;
  }
  {
    std::ofstream out(spec.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + spec.out_path);
    out << report;
  }
  RunManifest m;
  m.tool_name = "romlab";
  m.tool_version = kVersion;
  m.command = command;
  m.argv = argv;
  m.params_json = params.dump();
  m.config_hash = Sha256::of(m.params_json);
  m.wall_time_s = wall_s;
  m.outputs.push_back({spec.out_path, Sha256::of_file(spec.out_path),
                       static_cast<std::uint64_t>(report.size())});
  std::ofstream mf(spec.out_path + ".manifest.json",
                   std::ios::binary | std::ios::trunc);
  if (!mf) throw std::runtime_error("cannot write manifest for " + spec.out_path);
  mf << to_json(m) << "\n";
}

// Smallest cached sieve covering min_limit, else a fresh one.
PrimeSet obtain_primes(std::uint64_t min_limit) {
  try {
    const CacheStore cache(CacheStore::default_dir());
    std::optional<std::uint64_t> best;
    for (const CacheEntry& e : cache.list()) {
      if (e.kind != "sieve" || !e.valid) continue;
      std::uint64_t lim = 0;
      try {
        lim = std::stoull(e.key);
      } catch (const std::exception&) {
        continue;
      }
      if (lim >= min_limit && (!best || lim < *best)) best = lim;
    }
    if (best) {
      if (auto ps = cache.load_sieve(*best)) return std::move(*ps);
    }
  } catch (const cache_error&) {
    // No usable cache directory: sieve from scratch.
  }
  return sieve(min_limit);
}

std::uint64_t sqrt_limit(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 2;
  return std::max<std::uint64_t>(r, 1000);
}

std::vector<std::uint64_t> parse_ladder(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoull(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (out.empty()) throw CLI::ValidationError("--n-ladder", "empty ladder");
  return out;
}

GridSpec parse_grid(const std::string& text, bool log_spacing) {
  GridSpec spec;
  spec.spacing =
      log_spacing ? GridSpec::Spacing::log : GridSpec::Spacing::uniform;
  if (text.find_first_of("/.,") == std::string::npos) {
    spec.count = std::stoull(text);
    return spec;
  }
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        spec.explicit_points.push_back(parse_y(cur).value());
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return spec;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational laboratory for densities of p + floor(y^k)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("romlab ") + kVersion);
  const std::vector<std::string> full_argv(argv, argv + argc);

  // --- sumset ---
  auto* c_sumset = app.add_subcommand(
      "sumset", "count n <= N representable as p + floor(y^k)");
  std::string s_y;
  std::uint64_t s_n = 0;
  unsigned s_kmin = 1;
  std::string s_ladder;
  OutputSpec s_out;
  c_sumset->add_option("--y", s_y, "rational y > 1 (p/q, integer or decimal)")
      ->required();
  c_sumset->add_option("--n", s_n, "upper bound N (or use --n-ladder)");
  c_sumset->add_option("--kmin", s_kmin, "smallest exponent k (default 1)");
  c_sumset->add_option("--n-ladder", s_ladder,
                       "comma-separated N values for a density-vs-N table");
  add_output_flags(c_sumset, s_out);

  // --- fn ---
  auto* c_fn = app.add_subcommand("fn", "evaluate the criterion sum f_N(y)");
  std::string f_y;
  std::uint64_t f_n = 0, f_dmax = 0;
  unsigned f_kmin = 1;
  std::string f_mode = "exact";
  bool f_per_d = false;
  OutputSpec f_out;
  c_fn->add_option("--y", f_y)->required();
  c_fn->add_option("--n", f_n)->required();
  c_fn->add_option("--kmin", f_kmin);
  c_fn->add_option("--dmax", f_dmax, "truncate the d-sum (default: N)");
  c_fn->add_option("--mode", f_mode)->check(CLI::IsMember({"exact", "float"}));
  c_fn->add_flag("--per-d", f_per_d, "record per-d maxima");
  add_output_flags(c_fn, f_out);

  // --- pairsum ---
  auto* c_pair = app.add_subcommand(
      "pairsum", "sum prod(1+1/p) over floor-power difference pairs");
  std::string p_y;
  std::uint64_t p_n = 0;
  unsigned p_kmin = 1;
  OutputSpec p_out;
  c_pair->add_option("--y", p_y)->required();
  c_pair->add_option("--n", p_n)->required();
  c_pair->add_option("--kmin", p_kmin);
  add_output_flags(c_pair, p_out);

  // --- rearrange ---
  auto* c_re = app.add_subcommand(
      "rearrange", "check pair sum <= (K/2) * f_N (exact)");
  std::string r_y;
  std::uint64_t r_n = 0;
  unsigned r_kmin = 1;
  OutputSpec r_out;
  c_re->add_option("--y", r_y)->required();
  c_re->add_option("--n", r_n)->required();
  c_re->add_option("--kmin", r_kmin);
  add_output_flags(c_re, r_out);

  // --- integrate ---
  auto* c_int = app.add_subcommand(
      "integrate", "enclose the integral of f_N over (Y1,Y2) and verify the bound");
  std::string i_y1, i_y2;
  std::uint64_t i_n = 0, i_budget = kDefaultPointBudget;
  unsigned i_kmin = 1, i_prec = 128;
  std::uint64_t i_mc = 0, i_seed = 0;
  OutputSpec i_out;
  c_int->add_option("--y1", i_y1)->required();
  c_int->add_option("--y2", i_y2)->required();
  c_int->add_option("--n", i_n)->required();
  c_int->add_option("--kmin", i_kmin);
  c_int->add_option("--precision-bits", i_prec);
  c_int->add_option("--budget", i_budget, "breakpoint enumeration budget");
  c_int->add_option("--mc-samples", i_mc,
                    "use seeded Monte Carlo instead of exact integration");
  c_int->add_option("--seed", i_seed);
  add_output_flags(c_int, i_out);

  // --- scan ---
  auto* c_scan = app.add_subcommand("scan", "profile f_N over a y-grid");
  std::string g_y1, g_y2, g_grid = "16";
  std::uint64_t g_n = 0;
  unsigned g_kmin = 1;
  bool g_log = false;
  double g_pct = 95.0;
  OutputSpec g_out;
  c_scan->add_option("--y1", g_y1)->required();
  c_scan->add_option("--y2", g_y2)->required();
  c_scan->add_option("--n", g_n)->required();
  c_scan->add_option("--kmin", g_kmin);
  c_scan->add_option("--grid", g_grid,
                     "point count, or comma-separated explicit rationals");
  c_scan->add_flag("--log-spacing", g_log);
  c_scan->add_option("--flag-percentile", g_pct);
  add_output_flags(c_scan, g_out);

  // --- cache ---
  auto* c_cache = app.add_subcommand("cache", "manage the on-disk sieve cache");
  auto* cc_list = c_cache->add_subcommand("list", "show entries");
  auto* cc_clear = c_cache->add_subcommand("clear", "remove all entries");
  auto* cc_warm = c_cache->add_subcommand("warm", "build and persist a sieve");
  std::uint64_t w_limit = 0;
  cc_warm->add_option("--sieve-limit", w_limit)->required();
  c_cache->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*c_sumset) {
      const RationalY y = parse_y(s_y);
      if (s_ladder.empty() && s_n == 0) {
        throw std::invalid_argument("sumset needs --n or --n-ladder");
      }
      std::vector<std::uint64_t> ns =
          s_ladder.empty() ? std::vector<std::uint64_t>{s_n}
                           : parse_ladder(s_ladder);
      const std::uint64_t max_n = *std::max_element(ns.begin(), ns.end());
      const PrimeSet primes = obtain_primes(max_n);
      std::vector<SumsetResult> rows;
      for (std::uint64_t n : ns) {
        rows.push_back(sumset_count(y, n, s_kmin, primes));
      }
      const SumsetResult& last = rows.back();
      ordered_json params{{"y", y.str()},
                          {"n_ladder", ns},
                          {"k_min", s_kmin},
                          {"format", s_out.format}};
      const std::string report =
          rows.size() == 1
              ? (s_out.format == "json" ? to_json(last) : to_csv(last))
              : (s_out.format == "json" ? to_json(rows) : to_csv(rows));
      emit(s_out, "sumset", full_argv, params, report, seconds_since(t0));
      std::fprintf(stderr,
                   "sumset y=%s N=%llu kmin=%u: count=%llu density=%s "
                   "cs_lower=%s\n",
                   y.str().c_str(),
                   static_cast<unsigned long long>(last.n_limit), s_kmin,
                   static_cast<unsigned long long>(last.count),
                   last.density.get_str().c_str(),
                   last.cs_lower.get_str().c_str());
    } else if (*c_fn) {
      const RationalY y = parse_y(f_y);
      const FnMode mode = f_mode == "exact" ? FnMode::exact : FnMode::floating;
      const FnProfile fn = fn_profile(y, f_n, f_kmin, f_dmax, mode, f_per_d);
      ordered_json params{{"y", y.str()},     {"n", f_n},
                          {"k_min", f_kmin},  {"d_max", fn.d_max},
                          {"mode", f_mode},   {"per_d", f_per_d},
                          {"format", f_out.format}};
      emit(f_out, "fn", full_argv, params,
           f_out.format == "json" ? to_json(fn) : to_csv(fn),
           seconds_since(t0));
      if (mode == FnMode::exact) {
        std::fprintf(stderr, "f_N(%s) = %s (~%.6f), rho=%.6f\n",
                     y.str().c_str(), fn.value_exact.get_str().c_str(),
                     fn.value, fn.rho);
      } else {
        std::fprintf(stderr, "f_N(%s) ~ %.12g, rho=%.6f\n", y.str().c_str(),
                     fn.value, fn.rho);
      }
    } else if (*c_pair) {
      const RationalY y = parse_y(p_y);
      const PrimeSet primes = obtain_primes(sqrt_limit(p_n));
      const PairSumResult ps = pair_sum(y, p_n, p_kmin, primes);
      ordered_json params{{"y", y.str()},
                          {"n", p_n},
                          {"k_min", p_kmin},
                          {"format", p_out.format}};
      emit(p_out, "pairsum", full_argv, params, to_json(ps), seconds_since(t0));
      std::fprintf(stderr, "pair sum = %s, zero_diff_pairs=%llu\n",
                   ps.value.get_str().c_str(),
                   static_cast<unsigned long long>(ps.zero_diff_pairs));
    } else if (*c_re) {
      const RationalY y = parse_y(r_y);
      const PrimeSet primes = obtain_primes(sqrt_limit(r_n));
      const RearrangementCheck rc = rearrangement_check(y, r_n, r_kmin, primes);
      ordered_json params{{"y", y.str()},
                          {"n", r_n},
                          {"k_min", r_kmin},
                          {"format", r_out.format}};
      emit(r_out, "rearrange", full_argv, params, to_json(rc),
           seconds_since(t0));
      std::fprintf(stderr, "eq1=%s bound=%s holds=%s\n",
                   rc.eq1.get_str().c_str(), rc.bound.get_str().c_str(),
                   rc.holds ? "true" : "false");
    } else if (*c_int) {
      const RationalY y1 = parse_y(i_y1), y2 = parse_y(i_y2);
      ordered_json params{{"y1", y1.str()},        {"y2", y2.str()},
                          {"n", i_n},              {"k_min", i_kmin},
                          {"precision_bits", i_prec}, {"budget", i_budget},
                          {"mc_samples", i_mc},    {"seed", i_seed},
                          {"format", i_out.format}};
      if (i_mc > 0) {
        const McEstimate mc = mc_estimate(y1, y2, i_n, i_kmin, i_mc, i_seed);
        emit(i_out, "integrate", full_argv, params, to_json(mc),
             seconds_since(t0));
        std::fprintf(stderr, "mc estimate %.12g +- %.3g (n=%llu, seed=%llu)\n",
                     mc.estimate, mc.stderr_,
                     static_cast<unsigned long long>(i_mc),
                     static_cast<unsigned long long>(i_seed));
      } else {
        const BoundCheck bc =
            verify_bound(y1, y2, i_n, i_kmin, i_prec, i_budget);
        emit(i_out, "integrate", full_argv, params,
             i_out.format == "json" ? to_json(bc) : to_csv(bc),
             seconds_since(t0));
        std::fprintf(stderr,
                     "integral in [%s, %s], bound %s, holds=%s, pieces=%llu\n",
                     bc.integral.lo.str(12, Round::down).c_str(),
                     bc.integral.hi.str(12, Round::up).c_str(),
                     bc.bound.str(12, Round::up).c_str(),
                     bc.holds ? "true" : "false",
                     static_cast<unsigned long long>(bc.integral.piece_count));
      }
    } else if (*c_scan) {
      const RationalY y1 = parse_y(g_y1), y2 = parse_y(g_y2);
      const GridSpec grid = parse_grid(g_grid, g_log);
      const ScanReport rep = scan(y1, y2, g_n, g_kmin, grid, g_pct);
      ordered_json params{{"y1", y1.str()},
                          {"y2", y2.str()},
                          {"n", g_n},
                          {"k_min", g_kmin},
                          {"grid", g_grid},
                          {"log_spacing", g_log},
                          {"flag_percentile", g_pct},
                          {"format", g_out.format}};
      emit(g_out, "scan", full_argv, params,
           g_out.format == "json" ? to_json(rep) : to_csv(rep),
           seconds_since(t0));
      std::fprintf(stderr, "scan: %zu points, rho in [%.6g, %.6g], %zu flagged\n",
                   rep.grid.size(), rep.quantiles.min, rep.quantiles.max,
                   rep.flagged.size());
    } else if (*c_cache) {
      CacheStore cache(CacheStore::default_dir());
      if (*cc_warm) {
        cache.warm_sieve(w_limit);
        std::printf("warmed sieve to %llu in %s\n",
                    static_cast<unsigned long long>(w_limit),
                    cache.dir().string().c_str());
      } else if (*cc_clear) {
        cache.clear();
        std::printf("cache cleared: %s\n", cache.dir().string().c_str());
      } else if (*cc_list) {
        const auto entries = cache.list();
        std::printf("cache dir: %s\n", cache.dir().string().c_str());
        for (const CacheEntry& e : entries) {
          std::printf("  %-8s key=%-12s v%d %s%s\n", e.kind.c_str(),
                      e.key.c_str(), e.format_version, e.payload.c_str(),
                      e.valid ? "" : "  [INVALID: digest mismatch, ignored]");
        }
        if (entries.empty()) std::printf("  (empty)\n");
      }
    }
  } catch (const budget_error& e) {
    std::fprintf(stderr, "error (budget): %s\n", e.what());
    return 3;
  } catch (const cache_error& e) {
    std::fprintf(stderr, "error (cache): %s\n", e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error (invalid argument): %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
