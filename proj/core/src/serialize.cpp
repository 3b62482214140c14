#include "romlab/serialize.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cstdio>

#include "romlab/version.hpp"

namespace romlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class q_parse(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

// Shortest round-trip decimal for a double.
std::string d_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json header(const char* kind) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void expect_kind(const ordered_json& j, const char* kind) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version");
  }
  if (j.at("kind").get<std::string>() != kind) {
    throw std::invalid_argument("report kind mismatch: expected " +
                                std::string(kind));
  }
}

}  // namespace

std::string to_json(const SumsetResult& r) {
  ordered_json j = header("sumset");
  j["y"] = r.y.str();
  j["n"] = r.n_limit;
  j["k_min"] = r.k_min;
  j["count"] = r.count;
  j["density"] = q_str(r.density);
  j["r1"] = r.r1.get_str();
  j["r2"] = r.r2.get_str();
  j["cs_lower"] = q_str(r.cs_lower);
  return j.dump(2);
}

SumsetResult sumset_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "sumset");
  SumsetResult r{parse_y(j.at("y").get<std::string>()),
                 j.at("n").get<std::uint64_t>(),
                 j.at("k_min").get<unsigned>(),
                 j.at("count").get<std::uint64_t>(),
                 q_parse(j.at("density").get<std::string>()),
                 mpz_class(j.at("r1").get<std::string>()),
                 mpz_class(j.at("r2").get<std::string>()),
                 q_parse(j.at("cs_lower").get<std::string>())};
  return r;
}

std::string to_json(const FnProfile& r) {
  ordered_json j = header("fn");
  j["y"] = r.y.str();
  j["n"] = r.n_limit;
  j["k_min"] = r.k_min;
  j["d_max"] = r.d_max;
  j["mode"] = r.mode == FnMode::exact ? "exact" : "float";
  if (r.mode == FnMode::exact) j["value_exact"] = q_str(r.value_exact);
  j["value"] = r.value;
  j["rho"] = r.rho;
  if (r.per_d) {
    ordered_json arr = ordered_json::array();
    for (const auto& pd : *r.per_d) {
      arr.push_back({{"d", pd.d},
                     {"max_count", pd.max_count},
                     {"argmax_residue", pd.argmax_residue}});
    }
    j["per_d"] = std::move(arr);
  }
  return j.dump(2);
}

FnProfile fn_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "fn");
  FnProfile r{parse_y(j.at("y").get<std::string>()),
              j.at("n").get<std::uint64_t>(),
              j.at("k_min").get<unsigned>(),
              j.at("d_max").get<std::uint64_t>(),
              j.at("mode").get<std::string>() == "exact" ? FnMode::exact
                                                         : FnMode::floating,
              mpq_class(0),
              j.at("value").get<double>(),
              j.at("rho").get<double>(),
              std::nullopt};
  if (r.mode == FnMode::exact) {
    r.value_exact = q_parse(j.at("value_exact").get<std::string>());
  }
  if (j.contains("per_d")) {
    r.per_d.emplace();
    for (const auto& pd : j.at("per_d")) {
      r.per_d->push_back({pd.at("d").get<std::uint64_t>(),
                          pd.at("max_count").get<std::uint64_t>(),
                          pd.at("argmax_residue").get<std::uint64_t>()});
    }
  }
  return r;
}

std::string to_json(const PairSumResult& r) {
  ordered_json j = header("pairsum");
  j["y"] = r.y.str();
  j["n"] = r.n_limit;
  j["k_min"] = r.k_min;
  j["value"] = q_str(r.value);
  j["zero_diff_pairs"] = r.zero_diff_pairs;
  return j.dump(2);
}

PairSumResult pair_sum_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "pairsum");
  return {parse_y(j.at("y").get<std::string>()),
          j.at("n").get<std::uint64_t>(), j.at("k_min").get<unsigned>(),
          q_parse(j.at("value").get<std::string>()),
          j.at("zero_diff_pairs").get<std::uint64_t>()};
}

std::string to_json(const RearrangementCheck& r) {
  ordered_json j = header("rearrange");
  j["eq1"] = q_str(r.eq1);
  j["bound"] = q_str(r.bound);
  j["k_count"] = r.k_count;
  j["holds"] = r.holds;
  return j.dump(2);
}

RearrangementCheck rearrangement_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "rearrange");
  return {q_parse(j.at("eq1").get<std::string>()),
          q_parse(j.at("bound").get<std::string>()),
          j.at("k_count").get<std::uint64_t>(), j.at("holds").get<bool>()};
}

std::string to_json(const BoundCheck& r) {
  ordered_json j = header("integrate");
  j["precision_bits"] = r.integral.precision_bits;
  j["piece_count"] = r.integral.piece_count;
  j["lo"] = r.integral.lo.str(40, Round::down);
  j["hi"] = r.integral.hi.str(40, Round::up);
  j["lo_hex"] = r.integral.lo.hex();
  j["hi_hex"] = r.integral.hi.hex();
  j["bound"] = r.bound.str(40, Round::up);
  j["bound_hex"] = r.bound.hex();
  j["holds"] = r.holds;
  return j.dump(2);
}

BoundCheck bound_check_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "integrate");
  const auto prec = j.at("precision_bits").get<unsigned>();
  BoundCheck r{{BigFloat::from_hex(j.at("lo_hex").get<std::string>(), prec),
                BigFloat::from_hex(j.at("hi_hex").get<std::string>(), prec),
                prec, j.at("piece_count").get<std::uint64_t>()},
               BigFloat::from_hex(j.at("bound_hex").get<std::string>(), prec),
               j.at("holds").get<bool>()};
  return r;
}

std::string to_json(const ScanReport& r) {
  ordered_json j = header("scan");
  j["y1"] = r.y1.str();
  j["y2"] = r.y2.str();
  j["n"] = r.n_limit;
  j["k_min"] = r.k_min;
  ordered_json grid = ordered_json::array();
  for (const ScanPoint& p : r.grid) {
    grid.push_back(
        {{"y", q_str(p.y)}, {"fn_value", p.fn_value}, {"rho", p.rho}});
  }
  j["grid"] = std::move(grid);
  j["quantiles"] = {{"min", r.quantiles.min},       {"q25", r.quantiles.q25},
                    {"median", r.quantiles.median}, {"q75", r.quantiles.q75},
                    {"q95", r.quantiles.q95},       {"max", r.quantiles.max}};
  j["flag_percentile"] = r.flag_percentile;
  j["flagged"] = r.flagged;
  return j.dump(2);
}

ScanReport scan_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "scan");
  ScanReport r{parse_y(j.at("y1").get<std::string>()),
               parse_y(j.at("y2").get<std::string>()),
               j.at("n").get<std::uint64_t>(),
               j.at("k_min").get<unsigned>(),
               {},
               {},
               j.at("flag_percentile").get<double>(),
               {}};
  for (const auto& p : j.at("grid")) {
    r.grid.push_back({q_parse(p.at("y").get<std::string>()),
                      p.at("fn_value").get<double>(),
                      p.at("rho").get<double>()});
  }
  const auto& q = j.at("quantiles");
  r.quantiles = {q.at("min").get<double>(),    q.at("q25").get<double>(),
                 q.at("median").get<double>(), q.at("q75").get<double>(),
                 q.at("q95").get<double>(),    q.at("max").get<double>()};
  r.flagged = j.at("flagged").get<std::vector<std::size_t>>();
  return r;
}

std::string to_json(const McEstimate& r) {
  ordered_json j = header("mc");
  j["estimate"] = r.estimate;
  j["stderr"] = r.stderr_;
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  return j.dump(2);
}

McEstimate mc_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  expect_kind(j, "mc");
  return {j.at("estimate").get<double>(), j.at("stderr").get<double>(),
          j.at("n_samples").get<std::size_t>(),
          j.at("seed").get<std::uint64_t>()};
}

std::string to_csv(const ScanReport& r) {
  std::string out = "y_num,y_den,fn_value,rho\n";
  for (const ScanPoint& p : r.grid) {
    out += p.y.get_num().get_str() + "," + p.y.get_den().get_str() + "," +
           d_str(p.fn_value) + "," + d_str(p.rho) + "\n";
  }
  return out;
}

std::string to_csv(const BoundCheck& r) {
  std::string out = "lo,hi,bound,holds,piece_count\n";
  out += r.integral.lo.str(40, Round::down) + "," +
         r.integral.hi.str(40, Round::up) + "," + r.bound.str(40, Round::up) +
         "," + (r.holds ? "true" : "false") + "," +
         std::to_string(r.integral.piece_count) + "\n";
  return out;
}

std::string to_csv(const SumsetResult& r) {
  std::string out = "n,count,density,r1,r2,cs_lower\n";
  out += std::to_string(r.n_limit) + "," + std::to_string(r.count) + "," +
         q_str(r.density) + "," + r.r1.get_str() + "," + r.r2.get_str() + "," +
         q_str(r.cs_lower) + "\n";
  return out;
}

std::string to_csv(const std::vector<SumsetResult>& ladder) {
  std::string out = "n,count,density,r1,r2,cs_lower\n";
  for (const SumsetResult& r : ladder) {
    out += std::to_string(r.n_limit) + "," + std::to_string(r.count) + "," +
           q_str(r.density) + "," + r.r1.get_str() + "," + r.r2.get_str() +
           "," + q_str(r.cs_lower) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<SumsetResult>& ladder) {
  ordered_json j = header("sumset_ladder");
  ordered_json rows = ordered_json::array();
  for (const SumsetResult& r : ladder) {
    rows.push_back({{"y", r.y.str()},
                    {"n", r.n_limit},
                    {"k_min", r.k_min},
                    {"count", r.count},
                    {"density", q_str(r.density)},
                    {"r1", r.r1.get_str()},
                    {"r2", r.r2.get_str()},
                    {"cs_lower", q_str(r.cs_lower)}});
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string to_csv(const FnProfile& r) {
  if (r.per_d) {
    std::string out = "d,max_count,argmax_residue\n";
    for (const auto& pd : *r.per_d) {
      out += std::to_string(pd.d) + "," + std::to_string(pd.max_count) + "," +
             std::to_string(pd.argmax_residue) + "\n";
    }
    return out;
  }
  std::string out = "y_num,y_den,n,value,rho\n";
  out += r.y.num().get_str() + "," + r.y.den().get_str() + "," +
         std::to_string(r.n_limit) + "," +
         (r.mode == FnMode::exact ? q_str(r.value_exact) : d_str(r.value)) +
         "," + d_str(r.rho) + "\n";
  return out;
}

}  // namespace romlab
