#include "eur/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "eur/batch.hpp"
#include "eur/errors.hpp"

namespace eur::cli {

namespace {

constexpr const char* kFilePrefix = "file:";

bool has_file_prefix(const std::string& s) { return s.rfind(kFilePrefix, 0) == 0; }

std::unique_ptr<CLI::App> build_app(RunConfig& c) {
  auto app = std::make_unique<CLI::App>(
      "Entanglement-uncertainty equality toolkit: verification, bound sweeps, witnesses and "
      "guessing-game simulation.");
  app->require_subcommand(1);

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--d", c.d, "dimension of Alice's system");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out", c.output, "write output to this file instead of stdout");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app->add_subcommand("verify", "check a relation on sampled or given states");
  add_common(verify);
  verify->add_option("--relation", c.relation, "relation to verify")
      ->check(CLI::IsMember({"main", "monogamy", "bounds", "two-to-all"}));
  verify->add_option("--db", c.db, "dimension of Bob's system (default: d)");
  verify->add_option("--de", c.de, "dimension of Eve's system for monogamy (default: d)");
  verify->add_option("--family", c.family, "mub | sic | clifford | file:<path>");
  verify->add_option("--state", c.state, "random | pure | separable | max-entangled | maximally-mixed | file:<path>");
  verify->add_option("--samples", c.samples, "number of sampled states");
  verify->add_option("--nu", c.nu, "entropy family parameter in [0, 1]");
  verify->add_option("--n", c.n, "bounds: number of bases (default: all of 1..d+1)");
  verify->add_option("--tol", c.tolerance, "tolerance override");
  verify->add_option("--threads", c.threads, "worker threads (0: OpenMP default)");

  auto* sweep = app->add_subcommand("sweep", "tabulate n-basis bounds against recovery fidelity");
  add_common(sweep);
  sweep->add_option("--grid", c.grid, "number of fidelity grid points on [0, 1]");

  auto* witness = app->add_subcommand("witness", "evaluate the entanglement witness on a statistics file");
  witness->add_option("--input", c.input, "joint distribution JSON file")->required();
  witness->add_option("--tol", c.tolerance, "margin required before certifying");
  witness->add_option("--out", c.output, "also write the JSON report here");

  auto* game = app->add_subcommand("game", "simulate the uncertainty game");
  add_common(game);
  game->add_option("--db", c.db, "dimension of Bob's system (default: d)");
  game->add_option("--family", c.family, "mub | sic | clifford | file:<path>");
  game->add_option("--state", c.state, "max-entangled | maximally-mixed | random | pure | separable | file:<path>");
  game->add_option("--trials", c.trials, "number of rounds");
  game->add_option("--threads", c.threads, "worker threads (0: OpenMP default)");

  auto* family = app->add_subcommand("family", "emit a measurement family as JSON");
  family->add_option("--d", c.d, "dimension");
  family->add_option("--family", c.family, "mub | sic | clifford");
  family->add_option("--out", c.output, "output file");

  return app;
}

MeasurementFamily make_family(const std::string& spec, int d) {
  if (spec == "mub") return mub_family(d);
  if (spec == "sic") return sic_povm(d);
  if (spec == "clifford") {
    if (d != 2) throw UnsupportedDimensionError("clifford family exists for d = 2 only");
    return clifford_orbit_family();
  }
  if (has_file_prefix(spec)) {
    MeasurementFamily f = family_from_json(read_json_file(spec.substr(5)));
    if (f.d != d) throw ParameterError("family file has d = " + std::to_string(f.d));
    return f;
  }
  throw ParameterError("unknown family '" + spec + "'");
}

DensityMatrix make_state(const std::string& spec, int d, int db, std::uint64_t seed) {
  if (spec == "max-entangled") {
    if (db != d) throw ParameterError("max-entangled requires db = d");
    return DensityMatrix::from_pure(max_entangled(d), {d, d});
  }
  if (spec == "maximally-mixed") return maximally_mixed({d, db});
  if (spec == "random") return random_density(d, db, d * db, {seed, 0});
  if (spec == "pure") return DensityMatrix::from_pure(random_pure(d * db, {seed, 0}), {d, db});
  if (spec == "separable") return random_separable(d, db, 3, {seed, 0});
  if (has_file_prefix(spec)) {
    DensityMatrix rho = density_from_json(read_json_file(spec.substr(5)));
    if (!rho.is_bipartite()) throw DimensionError("state file must be bipartite");
    return rho;
  }
  throw ParameterError("unknown state '" + spec + "'");
}

std::optional<SampleKind> sample_kind(const std::string& spec) {
  if (spec == "random") return SampleKind::Mixed;
  if (spec == "pure") return SampleKind::Pure;
  if (spec == "separable") return SampleKind::Separable;
  return std::nullopt;
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw ParameterError("cannot write " + c.output);
  f << text;
}

int emit_reports(const RunConfig& c, std::ostream& out, const std::vector<RelationReport>& reports) {
  std::ostringstream os;
  if (c.format == "csv") {
    os << reports_csv_header() << '\n';
    for (const auto& r : reports) os << report_csv_row(r) << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    os << arr.dump(2) << '\n';
  }
  emit(c, out, os.str());
  for (const auto& r : reports) {
    if (!r.holds()) return kViolation;
  }
  return kSuccess;
}

std::vector<RelationReport> per_state(const RunConfig& c, int db,
                                      const std::function<void(const DensityMatrix&,
                                                               std::vector<RelationReport>&)>& fn) {
  std::vector<RelationReport> reports;
  if (const auto kind = sample_kind(c.state)) {
    auto batches = map_samples(c.samples, Execution::Parallel, [&](long i) {
      std::vector<RelationReport> local;
      fn(sample_state(*kind, c.d, db, c.seed, i), local);
      return local;
    });
    for (auto& b : batches) reports.insert(reports.end(), b.begin(), b.end());
  } else {
    fn(make_state(c.state, c.d, db, c.seed), reports);
  }
  return reports;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const int db = c.db > 0 ? c.db : c.d;
  if (c.samples < 1) throw ParameterError("--samples must be >= 1");
  if (c.threads > 0) omp_set_num_threads(c.threads);
  if (c.relation == "monogamy") {
    const int de = c.de > 0 ? c.de : c.d;
    const MeasurementFamily mubs = make_family(c.family, c.d);
    return emit_reports(c, out,
                        monogamy_batch({c.d, db, de}, mubs, c.samples, c.seed, Execution::Parallel,
                                       c.tolerance.value_or(kMonogamyTol)));
  }
  const double tol = c.tolerance.value_or(kEqualityTol);
  if (c.relation == "main") {
    const MeasurementFamily family = make_family(c.family, c.d);
    if (const auto kind = sample_kind(c.state)) {
      return emit_reports(c, out,
                          equality_batch(c.d, db, family, c.nu, c.samples, c.seed,
                                         Execution::Parallel, *kind, tol));
    }
    return emit_reports(c, out, {equality_report(make_state(c.state, c.d, db, c.seed), family, c.nu, tol)});
  }
  const MeasurementFamily mubs = mub_family(c.d);
  if (c.relation == "bounds") {
    if (c.n < 0 || c.n > c.d + 1) throw ParameterError("--n must be in 1..d+1");
    return emit_reports(c, out, per_state(c, db, [&](const DensityMatrix& rho, auto& sink) {
                          const int first = c.n > 0 ? c.n : 1, last = c.n > 0 ? c.n : c.d + 1;
                          for (int n = first; n <= last; ++n) {
                            auto [lo, hi] = nbasis_bounds(rho, mubs, n, tol);
                            sink.push_back(lo);
                            sink.push_back(hi);
                          }
                        }));
  }
  return emit_reports(c, out, per_state(c, db, [&](const DensityMatrix& rho, auto& sink) {
                        sink.push_back(two_to_full_report(rho, mubs, tol));
                      }));
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  if (!is_prime(c.d)) throw UnsupportedDimensionError("sweep: d must be prime");
  if (c.grid < 2) throw ParameterError("sweep: --grid must be >= 2");
  std::ostringstream os;
  json rows = json::array();
  if (c.format == "csv") os << "fidelity,n,lower,upper\n";
  for (int i = 0; i < c.grid; ++i) {
    const double f = static_cast<double>(i) / (c.grid - 1);
    for (int n = 1; n <= c.d + 1; ++n) {
      const BoundPair b = nbasis_bound_values(c.d, n, f);
      if (c.format == "csv") {
        os << format12(f) << ',' << n << ',' << format12(b.lower) << ',' << format12(b.upper)
           << '\n';
      } else {
        rows.push_back({{"fidelity", round12(f)},
                        {"n", n},
                        {"lower", round12(b.lower)},
                        {"upper", round12(b.upper)}});
      }
    }
  }
  if (c.format != "csv") os << rows.dump(2) << '\n';
  emit(c, out, os.str());
  return kSuccess;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  const JointDistribution joint = joint_from_json(read_json_file(c.input));
  const RelationReport r = witness(joint, joint.d_a, c.tolerance.value_or(kWitnessTol));
  char line[128];
  const bool entangled = !r.holds();
  std::snprintf(line, sizeof line, "%s (%.3f %s %.3f)", entangled ? "ENTANGLED" : "INCONCLUSIVE",
                r.lhs, entangled ? ">" : "<=", r.rhs);
  out << line << '\n';
  if (!c.output.empty()) emit(c, out, report_to_json(r).dump(2) + "\n");
  return entangled ? kSuccess : kInconclusive;
}

int cmd_game(const RunConfig& c, std::ostream& out) {
  const int db = c.db > 0 ? c.db : c.d;
  const DensityMatrix rho = make_state(c.state, c.d, db, c.seed);
  const MeasurementFamily family = make_family(c.family, c.d);
  const GameResult g = simulate_game(rho, family, c.trials, {c.seed, 1}, c.threads);
  emit(c, out, game_to_json(g).dump(2) + "\n");
  return g.within(4.0) ? kSuccess : kViolation;
}

int cmd_family(const RunConfig& c, std::ostream& out) {
  emit(c, out, family_to_json(make_family(c.family, c.d)).dump(2) + "\n");
  return kSuccess;
}

}  // namespace

json config_to_json(const RunConfig& c) {
  json j = {{"command", c.command}, {"relation", c.relation}, {"d", c.d},
            {"db", c.db},           {"de", c.de},             {"family", c.family},
            {"state", c.state},     {"nu", c.nu},             {"n", c.n},
            {"samples", c.samples},
            {"trials", c.trials},   {"seed", c.seed},         {"grid", c.grid},
            {"threads", c.threads}, {"input", c.input},       {"output", c.output},
            {"format", c.format}};
  j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    c.relation = j.at("relation").get<std::string>();
    c.d = j.at("d").get<int>();
    c.db = j.at("db").get<int>();
    c.de = j.at("de").get<int>();
    c.family = j.at("family").get<std::string>();
    c.state = j.at("state").get<std::string>();
    c.nu = j.at("nu").get<double>();
    c.n = j.at("n").get<int>();
    c.samples = j.at("samples").get<long>();
    c.trials = j.at("trials").get<long>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.grid = j.at("grid").get<int>();
    c.threads = j.at("threads").get<int>();
    c.input = j.at("input").get<std::string>();
    c.output = j.at("output").get<std::string>();
    c.format = j.at("format").get<std::string>();
    if (!j.at("tolerance").is_null()) c.tolerance = j.at("tolerance").get<double>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig c;
  auto app = build_app(c);
  app->parse(argc, argv);
  for (const auto* sub : app->get_subcommands()) c.command = sub->get_name();
  return c;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.d < 1) throw ParameterError("--d must be >= 1");
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "sweep") return cmd_sweep(c, out);
    if (c.command == "witness") return cmd_witness(c, out);
    if (c.command == "game") return cmd_game(c, out);
    if (c.command == "family") return cmd_family(c, out);
    throw ParameterError("unknown command '" + c.command + "'");
  } catch (const UnsupportedDimensionError& e) {
    err << "UnsupportedDimensionError: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "FormatError: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  auto app = build_app(c);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every other parse failure is a usage error.
    return app->exit(e, out, err) == 0 ? kSuccess : kUsage;
  }
  for (const auto* sub : app->get_subcommands()) c.command = sub->get_name();
  return execute(c, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"eur"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace eur::cli
