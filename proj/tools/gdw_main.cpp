// Copyright 2026 The gdw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: bounds, tradeoff, mub, simulate, certify, oracle.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdw/bound_solver.hpp"
#include "gdw/certify.hpp"
#include "gdw/errors.hpp"
#include "gdw/json_io.hpp"
#include "gdw/mub_encoding.hpp"
#include "gdw/oracles.hpp"
#include "gdw/product_structure.hpp"
#include "gdw/qrac_sim.hpp"
#include "gdw/tradeoff.hpp"
#include "gdw/version.hpp"

namespace {

using nlohmann::json;

std::string double_str(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string fixed_str(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  return buffer;
}

enum class OutFormat { Text, Json, Csv };

struct OutTarget {
  OutFormat format = OutFormat::Text;
  std::string path;  // empty = stdout
};

// --out accepts a format keyword ("json", "csv") for stdout, or a file path
// whose extension picks the format.
OutTarget parse_out(const std::string& value, bool csv_allowed) {
  OutTarget target;
  if (value.empty()) {
    return target;
  }
  if (value == "json") {
    target.format = OutFormat::Json;
    return target;
  }
  if (value == "csv") {
    if (!csv_allowed) {
      throw std::invalid_argument("csv output is not available here");
    }
    target.format = OutFormat::Csv;
    return target;
  }
  target.path = value;
  if (csv_allowed && value.size() >= 4 &&
      value.compare(value.size() - 4, 4, ".csv") == 0) {
    target.format = OutFormat::Csv;
  } else {
    target.format = OutFormat::Json;
  }
  return target;
}

void emit(const OutTarget& target, const std::string& content) {
  if (target.path.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream file(target.path);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + target.path);
  }
  file << content;
}

// Applies a JSON config file underneath command line flags: a key sets its
// option only when that option was not passed explicitly. Unknown keys are
// errors.
class ConfigMerge {
 public:
  explicit ConfigMerge(CLI::App* cmd) : cmd_(cmd) {}

  template <typename T>
  void bind(const std::string& key, T* var) {
    entries_.push_back(Entry{
        key, cmd_->get_option("--" + key),
        [var](const json& value) { *var = value.get<T>(); }});
  }

  // Returns the keys that were actually applied.
  std::vector<std::string> apply(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
      throw std::runtime_error("cannot open config file: " + path);
    }
    json doc;
    try {
      file >> doc;
    } catch (const json::exception& e) {
      throw std::runtime_error("config file " + path + ": " + e.what());
    }
    if (!doc.is_object()) {
      throw std::runtime_error("config file must hold a flat JSON object");
    }
    std::vector<std::string> unknown, applied;
    for (const auto& [key, value] : doc.items()) {
      const Entry* entry = nullptr;
      for (const Entry& e : entries_) {
        if (e.key == key) {
          entry = &e;
          break;
        }
      }
      if (entry == nullptr) {
        unknown.push_back(key);
        continue;
      }
      if (entry->option->count() == 0) {
        try {
          entry->assign(value);
        } catch (const json::exception&) {
          throw std::runtime_error("config key '" + key + "' has the wrong type");
        }
        applied.push_back(key);
      }
    }
    if (!unknown.empty()) {
      std::string message = "unknown config key(s):";
      for (const std::string& key : unknown) {
        message += " " + key;
      }
      throw std::runtime_error(message);
    }
    return applied;
  }

 private:
  struct Entry {
    std::string key;
    CLI::Option* option;
    std::function<void(const json&)> assign;
  };

  CLI::App* cmd_;
  std::vector<Entry> entries_;
};

std::uint64_t entropy_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOptions {
  std::int64_t dim = 0;
  bool quantum_only = false;
  std::string structures;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  int precision = 6;
};

int run_bounds(const BoundsOptions& opt) {
  gdw::SolverConfig config;
  config.box_tolerance = opt.tol;
  config.seed = opt.seed;

  std::vector<gdw::BoundResult> results;
  std::int64_t dim = opt.dim;
  if (!opt.structures.empty()) {
    std::vector<gdw::ProductStructure> wanted;
    std::stringstream stream(opt.structures);
    std::string token;
    while (std::getline(stream, token, ',')) {
      wanted.push_back(gdw::parse_structure(token));
    }
    if (wanted.empty()) {
      throw std::invalid_argument("--structures lists no structures");
    }
    for (const auto& s : wanted) {
      if (dim == 0) {
        dim = s.total_dim();
      } else if (s.total_dim() != dim) {
        throw std::invalid_argument(
            "structure " + s.render() + " does not multiply to " +
            std::to_string(dim));
      }
    }
    for (const auto& s : wanted) {
      results.push_back(gdw::solve_bound(s, config));
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const gdw::BoundResult& a, const gdw::BoundResult& b) {
                       if (a.asp != b.asp) {
                         return a.asp > b.asp;
                       }
                       return gdw::structure_less(a.structure, b.structure);
                     });
  } else {
    if (dim < 2) {
      throw std::invalid_argument("--dim is required (>= 2)");
    }
    results = gdw::bound_table(dim,
                               opt.quantum_only
                                   ? gdw::StructureFilter::QuantumOnly
                                   : gdw::StructureFilter::All,
                               config);
  }

  const OutTarget target = parse_out(opt.out, /*csv_allowed=*/true);
  if (target.format == OutFormat::Json) {
    std::map<std::string, std::string> params{
        {"dim", std::to_string(dim)},
        {"filter", opt.quantum_only ? "quantum-only" : "all"},
        {"tol", double_str(opt.tol)},
        {"precision", std::to_string(opt.precision)},
    };
    if (!opt.structures.empty()) {
      params["structures"] = opt.structures;
    }
    const gdw::RunManifest manifest =
        gdw::make_manifest("bounds", std::move(params), opt.seed);
    emit(target, gdw::bounds_to_json(dim, results, manifest).dump(2) + "\n");
    return 0;
  }

  std::string body;
  if (target.format == OutFormat::Csv) {
    for (const auto& result : results) {
      body += result.structure.render() + "," +
              fixed_str(result.asp, opt.precision) + "\n";
    }
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "%-34s %s\n", "structure", "asp");
    body += line;
    for (const auto& result : results) {
      std::snprintf(line, sizeof line, "%-34s %s\n",
                    result.structure.render().c_str(),
                    fixed_str(result.asp, opt.precision).c_str());
      body += line;
    }
  }
  emit(target, body);
  return 0;
}

// ---------------------------------------------------------------------------
// tradeoff

struct TradeoffOptions {
  std::int64_t dim = 0;
  std::string kind = "q";
  std::optional<double> z;
  std::optional<int> curve;
};

int run_tradeoff(const TradeoffOptions& opt) {
  if (opt.z.has_value() == opt.curve.has_value()) {
    throw std::invalid_argument("pass exactly one of --z and --curve");
  }
  const bool quantum = opt.kind == "q";
  const auto eval = [&](double z) {
    return quantum ? gdw::tradeoff_q(opt.dim, z) : gdw::tradeoff_c(opt.dim, z);
  };
  if (opt.z.has_value()) {
    std::printf("%.6f\n", eval(*opt.z));
    return 0;
  }
  const int points = *opt.curve;
  if (points < 1) {
    throw std::invalid_argument("--curve needs at least 1 interval");
  }
  const double lo = 1.0 / static_cast<double>(opt.dim);
  for (int i = 0; i <= points; ++i) {
    const double z = lo + (1.0 - lo) * static_cast<double>(i) / points;
    std::printf("%.10g,%.10g\n", z, eval(z));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mub

struct MubOptions {
  int k = 1;
  int basis = 1;
  std::string out;
  std::string format = "pm1";
};

int run_mub(const MubOptions& opt) {
  const gdw::MubPair mubs = gdw::build_mub(opt.k);
  const gdw::SignMatrix& m = opt.basis == 1 ? mubs.basis1 : mubs.basis2;

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + opt.out);
    }
    os = &file;
  }

  if (opt.format == "pm1") {
    *os << "# mub d=" << mubs.dim << " basis=" << opt.basis << " k=" << mubs.k
        << "\n";
    std::string row(static_cast<std::size_t>(mubs.dim), '+');
    for (int i = 0; i < mubs.dim; ++i) {
      for (int j = 0; j < mubs.dim; ++j) {
        row[static_cast<std::size_t>(j)] = m.entry(i, j) > 0 ? '+' : '-';
      }
      *os << row << "\n";
    }
  } else {
    for (int i = 0; i < mubs.dim; ++i) {
      for (int j = 0; j < mubs.dim; ++j) {
        if (j > 0) {
          *os << ',';
        }
        *os << m.entry(i, j);
      }
      *os << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
  gdw::SimConfig config;
  bool seed_given = false;
  std::string log_path;
  std::string out;
};

json sim_config_to_json(const gdw::SimConfig& config) {
  return {
      {"k", config.k},
      {"mu", config.mu},
      {"nu", config.nu},
      {"visibility", config.visibility},
      {"visibility_model", "white_noise"},
      {"rounds", config.rounds},
      {"seed", config.seed},
      {"sample_photons", config.sample_photons},
  };
}

int run_simulate(const SimulateOptions& opt) {
  const gdw::SimConfig& config = opt.config;
  config.validate();

  std::int64_t dim = 1;
  for (int i = 0; i < config.k; ++i) {
    dim *= 4;
  }
  const double hit_overlap = config.visibility * gdw::tradeoff_fixed_point(dim) +
                             (1.0 - config.visibility) / static_cast<double>(dim);
  const double rate1 =
      gdw::expected_click_rates(hit_overlap, dim, config.nu * config.mu).first;
  const double expected_d1 =
      static_cast<double>(config.rounds) / static_cast<double>(dim) * rate1;
  if (expected_d1 < 100.0) {
    const double per_round = rate1 / static_cast<double>(dim);
    const std::uint64_t suggested =
        per_round > 0.0 ? static_cast<std::uint64_t>(std::ceil(100.0 / per_round))
                        : 0;
    std::fprintf(stderr,
                 "warning: expected D1 is about %.1f clicks; statistics will be "
                 "poor (suggested --rounds >= %" PRIu64 ")\n",
                 expected_d1, suggested);
  }

  gdw::ClickTally tally;
  if (!opt.log_path.empty()) {
    std::ofstream log(opt.log_path);
    if (!log) {
      throw std::runtime_error("cannot open click log: " + opt.log_path);
    }
    tally = gdw::simulate(config, &log);
  } else {
    tally = gdw::simulate(config);
  }

  const double closed_form =
      gdw::fom_closed_form(hit_overlap, dim, config.nu * config.mu);
  const bool has_clicks = tally.D1 + tally.D2 > 0;
  double p_hat = 0.0, sigma = 0.0;
  if (has_clicks) {
    std::tie(p_hat, sigma) = gdw::estimate_asp(tally);
  }

  const OutTarget target = parse_out(opt.out, /*csv_allowed=*/false);
  if (target.format == OutFormat::Json) {
    std::map<std::string, std::string> params{
        {"k", std::to_string(config.k)},
        {"mu", double_str(config.mu)},
        {"nu", double_str(config.nu)},
        {"visibility", double_str(config.visibility)},
        {"rounds", std::to_string(config.rounds)},
        {"sample_photons", config.sample_photons ? "true" : "false"},
    };
    if (!opt.log_path.empty()) {
      params["log"] = opt.log_path;
    }
    const gdw::RunManifest manifest =
        gdw::make_manifest("simulate", std::move(params), config.seed);
    json doc = {
        {"manifest", gdw::manifest_to_json(manifest)},
        {"config", sim_config_to_json(config)},
        {"tally", gdw::tally_to_json(tally)},
        {"fom", has_clicks ? json(p_hat) : json(nullptr)},
        {"fom_closed_form", closed_form},
    };
    emit(target, doc.dump(2) + "\n");
    return 0;
  }

  std::printf("rounds    %" PRIu64 "\n", config.rounds);
  std::printf("X1        %" PRIu64 "\n", tally.X1);
  std::printf("X2        %" PRIu64 "\n", tally.X2);
  std::printf("D1        %" PRIu64 "\n", tally.D1);
  std::printf("D2        %" PRIu64 "\n", tally.D2);
  if (has_clicks) {
    std::printf("fom       %.6f\n", p_hat);
    std::printf("sigma     %.6f\n", sigma);
  } else {
    std::printf("fom       n/a (no clicks)\n");
  }
  std::printf("expected  %.6f\n", closed_form);
  return 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOptions {
  std::string counts;
  std::string log_path;
  std::int64_t dim = 0;
  double sigma_threshold = 3.0;
  std::string bounds_file;
  std::string out;
  std::uint64_t seed = 0;
};

int run_certify(const CertifyOptions& opt) {
  if (opt.dim < 2) {
    throw std::invalid_argument("--dim is required (>= 2)");
  }
  if (opt.counts.empty() == opt.log_path.empty()) {
    throw std::invalid_argument("pass exactly one of --counts and --log");
  }

  gdw::ClickTally tally;
  if (!opt.counts.empty()) {
    std::uint64_t d1 = 0, d2 = 0;
    if (std::sscanf(opt.counts.c_str(), "%" SCNu64 ",%" SCNu64, &d1, &d2) != 2) {
      throw std::invalid_argument("--counts must look like D1,D2");
    }
    tally = {d1, d2, d1, d2};
  } else {
    tally = gdw::ingest_click_log_file(opt.log_path, opt.dim);
  }

  std::vector<gdw::BoundResult> bounds;
  if (!opt.bounds_file.empty()) {
    std::ifstream file(opt.bounds_file);
    if (!file) {
      throw std::runtime_error("cannot open bounds file: " + opt.bounds_file);
    }
    json doc;
    file >> doc;
    std::int64_t file_dim = 0;
    bounds = gdw::bounds_from_json(doc, &file_dim);
    if (file_dim != opt.dim) {
      throw std::invalid_argument("bounds file is for dimension " +
                                  std::to_string(file_dim) + ", not " +
                                  std::to_string(opt.dim));
    }
  } else {
    gdw::SolverConfig config;
    config.seed = opt.seed;
    bounds = gdw::bound_table(opt.dim, gdw::StructureFilter::All, config);
  }

  const gdw::CertificationReport report =
      gdw::certify(tally, opt.dim, bounds, opt.sigma_threshold);

  const OutTarget target = parse_out(opt.out, /*csv_allowed=*/false);
  if (target.format == OutFormat::Json) {
    std::map<std::string, std::string> params{
        {"dim", std::to_string(opt.dim)},
        {"sigma", double_str(opt.sigma_threshold)},
        {"source", opt.counts.empty() ? "log:" + opt.log_path
                                      : "counts:" + opt.counts},
        {"bounds", opt.bounds_file.empty() ? "computed" : opt.bounds_file},
    };
    const gdw::RunManifest manifest =
        gdw::make_manifest("certify", std::move(params), opt.seed);
    emit(target, gdw::report_to_json(report, manifest).dump(2) + "\n");
  } else {
    std::printf("p_hat     %.6f\n", report.p_hat);
    std::printf("sigma     %.6f\n", report.sigma);
    std::printf("threshold %.2f sigma\n", report.sigma_threshold);
    std::printf("%-34s %-10s %10s  %s\n", "structure", "asp", "z-score",
                "violated");
    for (const gdw::BoundCheck& check : report.bounds) {
      std::printf("%-34s %.6f %10.2f  %s\n", check.structure.render().c_str(),
                  check.asp, check.z_score, check.violated ? "yes" : "no");
    }
    if (!report.covers_all_structures) {
      std::printf(
          "note: supplied bounds do not cover every structure of dimension "
          "%" PRId64 "\n",
          report.dim);
    }
    if (report.verdict == gdw::VerdictKind::IrreducibleQuantum) {
      std::printf("verdict   IrreducibleQuantum(%" PRId64 ")\n", report.dim);
    } else if (report.verdict == gdw::VerdictKind::ViolatesOnly) {
      std::string list;
      for (const std::string& name : report.violated_structures) {
        if (!list.empty()) {
          list += ", ";
        }
        list += name;
      }
      std::printf("verdict   ViolatesOnly(%s)\n", list.c_str());
    } else {
      std::printf("verdict   Inconclusive\n");
    }
  }
  return report.verdict == gdw::VerdictKind::IrreducibleQuantum ? 0 : 2;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle_classical(std::int64_t dim, bool identity) {
  const double oracle =
      gdw::classical_rac_exhaustive(static_cast<int>(dim), identity);
  const double analytic = 0.5 * (1.0 + 1.0 / static_cast<double>(dim));
  std::printf("classical-rac d=%" PRId64 "%s: oracle=%.9f analytic=%.9f "
              "abs_diff=%.3g\n",
              dim, identity ? " identity-decoding" : "", oracle, analytic,
              std::abs(oracle - analytic));
  return 0;
}

int run_oracle_tradeoff(std::int64_t dim, int resolution) {
  const gdw::OracleReport report = gdw::tradeoff_grid_check(dim, resolution);
  constexpr double kTolerance = 1e-10;
  const bool ok = report.abs_diff <= kTolerance;
  std::printf("%s %s: max_deviation=%.3g tolerance=%.0e %s\n",
              report.name.c_str(), report.instance.c_str(), report.abs_diff,
              kTolerance, ok ? "OK" : "FAILED");
  return ok ? 0 : 1;
}

int run_oracle_grid_bound(const std::string& structure_text, int resolution,
                          std::uint64_t seed) {
  const gdw::ProductStructure structure = gdw::parse_structure(structure_text);
  const double oracle = gdw::two_factor_grid_bound(structure, resolution);
  gdw::SolverConfig config;
  config.seed = seed;
  const gdw::BoundResult solved = gdw::solve_bound(structure, config);
  std::printf("grid-bound %s resolution=%d: oracle=%.9f solver=%.9f "
              "abs_diff=%.3g\n",
              structure.render().c_str(), resolution, oracle, solved.asp,
              std::abs(oracle - solved.asp));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension witness bounds, sign-matrix bases, detector "
               "simulation and irreducibility certification"};
  app.set_version_flag("--version", gdw::kToolVersion);
  app.require_subcommand(1);

  // bounds
  BoundsOptions bounds_opt;
  std::string bounds_config;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "optimal success probabilities per structure");
  bounds_cmd->add_option("--dim", bounds_opt.dim, "composite dimension");
  bounds_cmd->add_flag("--quantum-only", bounds_opt.quantum_only,
                       "only fully quantum structures");
  bounds_cmd->add_option("--structures", bounds_opt.structures,
                         "comma-separated structures instead of enumeration");
  bounds_cmd->add_option("--tol", bounds_opt.tol, "search box tolerance");
  CLI::Option* bounds_seed =
      bounds_cmd->add_option("--seed", bounds_opt.seed, "multistart seed");
  bounds_cmd->add_option("--out", bounds_opt.out,
                         "json|csv or an output file path");
  bounds_cmd->add_option("--precision", bounds_opt.precision,
                         "decimal places in text and csv output");
  bounds_cmd->add_option("--config", bounds_config, "JSON config file");

  // tradeoff
  TradeoffOptions tradeoff_opt;
  CLI::App* tradeoff_cmd =
      app.add_subcommand("tradeoff", "first/second dit trade-off curve");
  tradeoff_cmd->add_option("--dim", tradeoff_opt.dim, "dimension")->required();
  tradeoff_cmd->add_option("--kind", tradeoff_opt.kind, "q or c")
      ->check(CLI::IsMember({"q", "c"}));
  double tradeoff_z = 0.0;
  int tradeoff_curve = 0;
  CLI::Option* z_opt =
      tradeoff_cmd->add_option("--z", tradeoff_z, "evaluate at one z");
  CLI::Option* curve_opt = tradeoff_cmd->add_option(
      "--curve", tradeoff_curve, "emit a CSV curve with this many intervals");

  // mub
  MubOptions mub_opt;
  CLI::App* mub_cmd =
      app.add_subcommand("mub", "write one of the two sign-matrix bases");
  mub_cmd->add_option("--k", mub_opt.k, "tensor power, dimension 4^k")
      ->required();
  mub_cmd->add_option("--basis", mub_opt.basis, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  mub_cmd->add_option("--out", mub_opt.out, "output file (default stdout)");
  mub_cmd->add_option("--format", mub_opt.format, "pm1 or csv")
      ->check(CLI::IsMember({"pm1", "csv"}));

  // simulate
  SimulateOptions sim_opt;
  std::string sim_config_path;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "run the single-detector experiment");
  sim_cmd->add_option("--k", sim_opt.config.k, "tensor power, dimension 4^k");
  sim_cmd->add_option("--mu", sim_opt.config.mu, "mean photon number");
  sim_cmd->add_option("--nu", sim_opt.config.nu, "detector efficiency");
  sim_cmd->add_option("--visibility", sim_opt.config.visibility,
                      "interferometric visibility");
  sim_cmd->add_option("--rounds", sim_opt.config.rounds, "number of rounds");
  CLI::Option* sim_seed =
      sim_cmd->add_option("--seed", sim_opt.config.seed, "randomness seed");
  sim_cmd->add_flag("--sample-photons", sim_opt.config.sample_photons,
                    "draw explicit photon counts (debug path)");
  sim_cmd->add_option("--log", sim_opt.log_path, "write a per-round click log");
  sim_cmd->add_option("--out", sim_opt.out, "json or an output file path");
  sim_cmd->add_option("--config", sim_config_path, "JSON config file");

  // certify
  CertifyOptions certify_opt;
  std::string certify_config;
  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "test click statistics against every reducible bound");
  certify_cmd->add_option("--counts", certify_opt.counts, "clicks as D1,D2");
  certify_cmd->add_option("--log", certify_opt.log_path, "click log file");
  certify_cmd->add_option("--dim", certify_opt.dim, "composite dimension");
  certify_cmd->add_option("--sigma", certify_opt.sigma_threshold,
                          "violation threshold in sigmas");
  certify_cmd->add_option("--bounds-file", certify_opt.bounds_file,
                          "bounds JSON from a previous run");
  certify_cmd->add_option("--out", certify_opt.out,
                          "json or an output file path");
  certify_cmd->add_option("--seed", certify_opt.seed,
                          "solver seed when bounds are computed here");
  certify_cmd->add_option("--config", certify_config, "JSON config file");

  // oracle
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "slow reference computations");
  oracle_cmd->require_subcommand(1);
  std::int64_t oracle_dim = 2;
  bool oracle_identity = false;
  CLI::App* oracle_classical = oracle_cmd->add_subcommand(
      "classical-rac", "exhaustive classical strategy search");
  oracle_classical->add_option("--dim", oracle_dim, "2 or 3")->required();
  oracle_classical->add_flag("--identity-decoding", oracle_identity,
                             "fix both decoders to the identity");
  std::int64_t oracle_tr_dim = 4;
  int oracle_tr_res = 10000;
  CLI::App* oracle_tradeoff = oracle_cmd->add_subcommand(
      "tradeoff", "explicit encodings against the analytic curve");
  oracle_tradeoff->add_option("--dim", oracle_tr_dim, "dimension")->required();
  oracle_tradeoff->add_option("--resolution", oracle_tr_res, "sweep points");
  std::string oracle_gb_structure;
  int oracle_gb_res = 1000;
  std::uint64_t oracle_gb_seed = 0;
  CLI::App* oracle_grid = oracle_cmd->add_subcommand(
      "grid-bound", "dense grid bound for a two-factor structure");
  oracle_grid->add_option("--structure", oracle_gb_structure, "e.g. Q13*Q3")
      ->required();
  oracle_grid->add_option("--resolution", oracle_gb_res, "grid points per axis");
  oracle_grid->add_option("--seed", oracle_gb_seed, "solver seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (bounds_cmd->parsed()) {
      if (!bounds_config.empty()) {
        ConfigMerge merge(bounds_cmd);
        merge.bind("dim", &bounds_opt.dim);
        merge.bind("quantum-only", &bounds_opt.quantum_only);
        merge.bind("structures", &bounds_opt.structures);
        merge.bind("tol", &bounds_opt.tol);
        merge.bind("seed", &bounds_opt.seed);
        merge.bind("out", &bounds_opt.out);
        merge.bind("precision", &bounds_opt.precision);
        for (const std::string& key : merge.apply(bounds_config)) {
          if (key == "seed") {
            bounds_opt.seed_given = true;
          }
        }
      }
      bounds_opt.seed_given |= bounds_seed->count() > 0;
      if (!bounds_opt.seed_given) {
        bounds_opt.seed = entropy_seed();
      }
      return run_bounds(bounds_opt);
    }
    if (tradeoff_cmd->parsed()) {
      if (z_opt->count() > 0) {
        tradeoff_opt.z = tradeoff_z;
      }
      if (curve_opt->count() > 0) {
        tradeoff_opt.curve = tradeoff_curve;
      }
      return run_tradeoff(tradeoff_opt);
    }
    if (mub_cmd->parsed()) {
      return run_mub(mub_opt);
    }
    if (sim_cmd->parsed()) {
      if (!sim_config_path.empty()) {
        ConfigMerge merge(sim_cmd);
        merge.bind("k", &sim_opt.config.k);
        merge.bind("mu", &sim_opt.config.mu);
        merge.bind("nu", &sim_opt.config.nu);
        merge.bind("visibility", &sim_opt.config.visibility);
        merge.bind("rounds", &sim_opt.config.rounds);
        merge.bind("seed", &sim_opt.config.seed);
        merge.bind("sample-photons", &sim_opt.config.sample_photons);
        merge.bind("log", &sim_opt.log_path);
        merge.bind("out", &sim_opt.out);
        for (const std::string& key : merge.apply(sim_config_path)) {
          if (key == "seed") {
            sim_opt.seed_given = true;
          }
        }
      }
      sim_opt.seed_given |= sim_seed->count() > 0;
      if (!sim_opt.seed_given) {
        sim_opt.config.seed = entropy_seed();
      }
      return run_simulate(sim_opt);
    }
    if (certify_cmd->parsed()) {
      if (!certify_config.empty()) {
        ConfigMerge merge(certify_cmd);
        merge.bind("counts", &certify_opt.counts);
        merge.bind("log", &certify_opt.log_path);
        merge.bind("dim", &certify_opt.dim);
        merge.bind("sigma", &certify_opt.sigma_threshold);
        merge.bind("bounds-file", &certify_opt.bounds_file);
        merge.bind("out", &certify_opt.out);
        merge.bind("seed", &certify_opt.seed);
        merge.apply(certify_config);
      }
      return run_certify(certify_opt);
    }
    if (oracle_classical->parsed()) {
      return run_oracle_classical(oracle_dim, oracle_identity);
    }
    if (oracle_tradeoff->parsed()) {
      return run_oracle_tradeoff(oracle_tr_dim, oracle_tr_res);
    }
    if (oracle_grid->parsed()) {
      return run_oracle_grid_bound(oracle_gb_structure, oracle_gb_res,
                                   oracle_gb_seed);
    }
  } catch (const gdw::ParseError& e) {
    std::fprintf(stderr, "gdw: parse error at %zu: %s\n", e.position(),
                 e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gdw: error: %s\n", e.what());
    return 1;
  }
  return 1;
}
