#include "planar_gw/cli.hpp"

#include "planar_gw/gw_table.hpp"
#include "planar_gw/p2_oracle.hpp"
#include "planar_gw/serialize.hpp"
#include "planar_gw/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>

namespace planar_gw::cli {

namespace {

using io::Json;
using verify::CheckResult;

struct Config {
  int d = 0;
  int r = 0;
  int s = 0;
  int theta = 0;
  int dmax = 0;
  std::string format;
  std::string cache_path;
};

const std::vector<std::string> kFormats{"json", "csv", "text"};

Json key_json(const gw::GWKey& k, const Rational& v) {
  return Json{{"d", k.d}, {"r", k.r}, {"s", k.s}, {"theta", k.theta}, {"value", to_string(v)}};
}

void emit_values(const std::vector<std::pair<gw::GWKey, Rational>>& rows, const std::string& format, bool single,
                 std::ostream& out) {
  if (format == "json") {
    if (single) {
      out << key_json(rows.front().first, rows.front().second).dump() << '\n';
      return;
    }
    Json arr = Json::array();
    for (const auto& [k, v] : rows) arr.push_back(key_json(k, v));
    out << arr.dump() << '\n';
  } else if (format == "csv") {
    out << "d,r,s,theta,value\n";
    for (const auto& [k, v] : rows) out << k.d << ',' << k.r << ',' << k.s << ',' << k.theta << ',' << to_string(v) << '\n';
  } else if (single) {
    out << to_string(rows.front().second) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << "N_" << k.d << '(' << k.r << ',' << k.s << ',' << k.theta << ") = " << to_string(v) << '\n';
  }
}

// Loads the cache when the file exists. Integrity and format problems both
// surface as exceptions for the caller to map onto exit code 2.
void load_if_present(const std::string& path, gw::MemoTable& memo) {
  if (path.empty() || !std::filesystem::exists(path)) return;
  gw::load_cache(path, memo);
}

void save_if_requested(const std::string& path, const gw::MemoTable& memo) {
  if (!path.empty()) gw::save_cache(path, memo);
}

int run_verify(const Config& cfg, gw::MemoTable& memo, std::ostream& out, std::ostream& err) {
  const auto results = verify::run_all(cfg.dmax, memo);
  const CheckResult* first_failure = nullptr;
  int wdvv1_ok = 0;
  int wdvv1_total = 0;
  for (const auto& r : results) {
    if (!r.ok && first_failure == nullptr) first_failure = &r;
    if (r.wdvv1) {
      ++wdvv1_total;
      wdvv1_ok += r.ok ? 1 : 0;
    }
  }

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      if (r.wdvv1) {
        const auto& w = *r.wdvv1;
        arr.push_back(Json{{"check", "wdvv1"}, {"d", w.key.d}, {"r", w.key.r}, {"s", w.key.s}, {"theta", w.key.theta},
                           {"ok", r.ok}, {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}});
      } else {
        Json j{{"check", r.name}, {"ok", r.ok}};
        if (!r.ok) j["detail"] = r.detail;
        arr.push_back(std::move(j));
      }
    }
    out << arr.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "check,ok,detail\n";
    for (const auto& r : results) {
      std::string name = r.name;
      if (r.wdvv1) name += "[" + gw::to_string(r.wdvv1->key) + "]";
      out << '"' << name << "\"," << (r.ok ? "ok" : "FAIL") << ",\"" << r.detail << "\"\n";
    }
  } else {
    for (const auto& r : results) {
      if (r.wdvv1) {
        if (!r.ok) out << "FAIL  qh.wdvv1: " << r.detail << '\n';
        continue;
      }
      out << (r.ok ? "ok    " : "FAIL  ") << r.name;
      if (!r.ok) out << ": " << r.detail;
      out << '\n';
    }
    out << (wdvv1_ok == wdvv1_total ? "ok    " : "FAIL  ") << "qh.wdvv1 (" << wdvv1_ok << "/" << wdvv1_total
        << " keys)\n";
  }

  if (first_failure != nullptr) {
    err << "verification failed: " << first_failure->name << ": " << first_failure->detail << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
  CLI::App app{"Genus-0 invariants of planar curves in P^3", "planar-gw"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", cfg.cache_path, std::string("Memo cache file (default: $") + kCacheEnv + ")");
  };

  auto* compute = app.add_subcommand("compute", "Print one value N_d(r,s,theta)");
  compute->add_option("--d", cfg.d, "Curve degree")->required()->check(CLI::PositiveNumber);
  compute->add_option("--r", cfg.r, "Number of line conditions")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--s", cfg.s, "Number of point conditions")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--theta", cfg.theta, "Exponent of the base class a")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Print every balanced value with d <= dmax");
  auto* verify_cmd = app.add_subcommand("verify", "Run the full identity suite up to degree dmax");
  auto* oracle = app.add_subcommand("oracle", "Print the plane-curve counts K_d for d <= dmax");
  for (auto* sub : {table, verify_cmd, oracle}) {
    sub->add_option("--dmax", cfg.dmax, "Maximal degree")->required()->check(CLI::PositiveNumber);
  }
  auto* ring_cmd = app.add_subcommand("ring", "Dump the pairing matrix, dual basis and diagonal tensor");

  // Format defaults differ per subcommand; the option binds to the same field.
  std::map<CLI::App*, std::string> default_format{
      {compute, "text"}, {table, "csv"}, {verify_cmd, "text"}, {oracle, "json"}, {ring_cmd, "json"}};
  for (auto* sub : {compute, table, verify_cmd, oracle, ring_cmd}) {
    sub->add_option("--format", cfg.format, "Output format (json, csv, text)")->check(CLI::IsMember(kFormats));
  }
  for (auto* sub : {compute, table, verify_cmd}) add_cache(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (cfg.format.empty()) cfg.format = default_format.at(chosen);
  if (cfg.cache_path.empty()) {
    if (auto it = env.find(kCacheEnv); it != env.end()) cfg.cache_path = it->second;
  }

  gw::MemoTable memo;
  try {
    if (chosen == ring_cmd) {
      if (cfg.format != "json") {
        err << "error: ring only supports --format json\n";
        return kExitUsage;
      }
      out << io::ring_report().dump() << '\n';
      return kExitOk;
    }
    if (chosen == oracle) {
      if (cfg.format == "json") {
        Json arr = Json::array();
        for (int d = 1; d <= cfg.dmax; ++d) arr.push_back(Json{{"d", d}, {"value", to_string(p2::kontsevich(d))}});
        out << arr.dump() << '\n';
      } else if (cfg.format == "csv") {
        out << "d,value\n";
        for (int d = 1; d <= cfg.dmax; ++d) out << d << ',' << to_string(p2::kontsevich(d)) << '\n';
      } else {
        for (int d = 1; d <= cfg.dmax; ++d) out << "K_" << d << " = " << to_string(p2::kontsevich(d)) << '\n';
      }
      return kExitOk;
    }

    load_if_present(cfg.cache_path, memo);
    int code = kExitOk;
    if (chosen == compute) {
      const gw::GWKey key{cfg.d, cfg.r, cfg.s, cfg.theta};
      emit_values({{key, gw::n_planar(key, memo)}}, cfg.format, true, out);
    } else if (chosen == table) {
      emit_values(gw::full_table(cfg.dmax, memo), cfg.format, false, out);
    } else {
      code = run_verify(cfg, memo, out, err);
    }
    save_if_requested(cfg.cache_path, memo);
    return code;
  } catch (const gw::IntegrityError& e) {
    err << "cache integrity violation: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace planar_gw::cli
