#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moshop/errors.hpp"
#include "moshop/instance_io.hpp"
#include "moshop/pareto.hpp"
#include "moshop/service.hpp"
#include "moshop/solvers.hpp"

namespace moshop::cli {

namespace fs = std::filesystem;

namespace {

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

template <class F>
auto guard(int code, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Failure{code, e.what()};
  }
}

Instance load_instance(const std::string& path) {
  if (!fs::exists(path)) throw Failure{bad_arguments, "no such file: " + path};
  guard(bad_arguments, [&] { return format_from_path(path); });
  try {
    return read_instance_file(path);
  } catch (const ParseError& e) {
    throw Failure{bad_input, path + ": " + e.what()};
  } catch (const SchemaError& e) {
    throw Failure{bad_input, path + ": " + e.what()};
  } catch (const ContractError& e) {
    throw Failure{bad_input, path + ": " + e.what()};
  }
}

std::string front_json(std::vector<ObjectiveVector> front) {
  std::sort(front.begin(), front.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : front) out.push_back(v.values);
  return out.dump();
}

// --- solve --------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string method = "moea";
  std::size_t budget = 1000;
  std::string objectives;
  std::uint64_t seed = 1;
  std::string store;
  std::string output;
  std::optional<std::size_t> capacity;
};

int cmd_solve(const SolveArgs& a) {
  SolverConfig config;
  config.method = guard(bad_arguments, [&] { return method_from_string(a.method); });
  config.budget = a.budget;
  config.seed = a.seed;
  config.archive_capacity = a.capacity;
  const ObjectiveSpec spec = guard(bad_arguments, [&] { return ObjectiveSpec::parse(a.objectives); });
  const Instance inst = load_instance(a.instance);

  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult result = guard(solver_contract, [&] {
    config.validate();
    spec.check(inst);
    return solve(inst, spec, config);
  });
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string payload = front_json(result.archive.vectors()) + "\n";
  if (a.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{bad_arguments, "cannot write " + a.output};
    out << payload;
  }
  if (!a.store.empty()) {
    const std::string id = guard(runtime_failure, [&] {
      return save_run(make_run_record(inst.name, spec, config, result, wall), a.store);
    });
    std::cerr << "saved run " << id << "\n";
  }
  return ok;
}

// --- compare ------------------------------------------------------------------

int cmd_compare(const std::vector<std::string>& files) {
  if (files.size() < 2) throw Failure{bad_arguments, "compare needs at least two run files"};
  std::vector<RunRecord> runs;
  for (const auto& f : files) {
    if (!fs::exists(f)) throw Failure{bad_arguments, "no such file: " + f};
    runs.push_back(guard(bad_input, [&] { return read_run_file(f); }));
  }
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].instance != runs[0].instance) {
      throw Failure{bad_arguments, files[i] + " is a run on '" + runs[i].instance + "', not '" + runs[0].instance + "'"};
    }
    if (runs[i].spec != runs[0].spec) throw Failure{bad_arguments, files[i] + " uses different objectives"};
  }
  std::vector<std::vector<ObjectiveVector>> fronts;
  for (const auto& r : runs) {
    std::vector<ObjectiveVector> f;
    for (const auto& e : r.archive) f.push_back(e.vector);
    fronts.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < fronts.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < fronts.size(); ++j) {
      char cell[16];
      std::snprintf(cell, sizeof cell, "%.3f", coverage(fronts[i], fronts[j]));
      row += (j ? " " : "") + std::string(cell);
    }
    std::cout << row << "\n";
  }
  return ok;
}

// --- enumerate ----------------------------------------------------------------

int cmd_enumerate(const std::string& instance, const std::string& objectives, unsigned long long limit) {
  const ObjectiveSpec spec = guard(bad_arguments, [&] { return ObjectiveSpec::parse(objectives); });
  const Instance inst = load_instance(instance);
  guard(solver_contract, [&] { spec.check(inst); });
  try {
    std::cout << front_json(brute_force_front(inst, spec, limit)) << "\n";
  } catch (const RefusalError& e) {
    throw Failure{refused, e.what()};
  }
  return ok;
}

// --- convert ------------------------------------------------------------------

int cmd_convert(const std::string& input, const std::string& output, bool force) {
  const InstanceFormat target = guard(bad_arguments, [&] { return format_from_path(output); });
  if (fs::exists(output) && !force) throw Failure{bad_arguments, output + " exists; pass --force to overwrite"};
  const Instance inst = load_instance(input);
  if (target != InstanceFormat::extended_json) {
    bool dropped = false;
    for (const Job& j : inst.jobs) dropped = dropped || j.release != 0 || j.due.has_value();
    if (dropped) std::cerr << "warning: release and due dates are not representable in " << output << "\n";
  }
  const std::string text = guard(bad_arguments, [&] { return write_instance(inst, target); });
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{bad_arguments, "cannot write " + output};
  out << text;
  return ok;
}

// --- serve --------------------------------------------------------------------

int cmd_serve(const std::string& store, const std::string& listen) {
  const auto colon = listen.rfind(':');
  int port = -1;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      port = std::stoi(listen.substr(colon + 1), &used);
      if (used != listen.size() - colon - 1) port = -1;
    } catch (const std::exception&) {
      port = -1;
    }
  }
  if (port < 0 || port > 65535) throw Failure{bad_arguments, "--listen expects host:port, got '" + listen + "'"};
  guard(runtime_failure, [&] { serve(store, listen.substr(0, colon), port); });
  return ok;
}

} // namespace

int run(int argc, char** argv) {
  CLI::App app{"Multi-objective shop scheduling workbench"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate the Pareto front of an instance");
  solve_cmd->add_option("--instance", solve_args.instance, "Instance file (.jss, .fsp, .json)")->required();
  solve_cmd->add_option("--method", solve_args.method, "priority, hillclimb, moea or mosa")->capture_default_str();
  solve_cmd->add_option("--budget", solve_args.budget, "Objective evaluations")->capture_default_str();
  solve_cmd->add_option("--objectives", solve_args.objectives, "Comma-separated: cmax,csum,tmax,u")->required();
  solve_cmd->add_option("--seed", solve_args.seed)->capture_default_str();
  solve_cmd->add_option("--store", solve_args.store, "Persist a run record under this store");
  solve_cmd->add_option("--output", solve_args.output, "Write the front here instead of stdout");
  solve_cmd->add_option("--archive-capacity", solve_args.capacity);

  std::vector<std::string> compare_files;
  auto* compare_cmd = app.add_subcommand("compare", "Pairwise coverage of stored runs (rows cover columns)");
  compare_cmd->add_option("runs", compare_files, "Run record files")->required();

  std::string enum_instance, enum_objectives;
  unsigned long long limit = 100000;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exact front by exhaustive enumeration");
  enum_cmd->add_option("--instance", enum_instance)->required();
  enum_cmd->add_option("--objectives", enum_objectives)->required();
  enum_cmd->add_option("--limit", limit, "Refuse above this many sequences")->capture_default_str();

  std::string conv_in, conv_out;
  bool force = false;
  auto* conv_cmd = app.add_subcommand("convert", "Convert between instance formats by extension");
  conv_cmd->add_option("input", conv_in)->required();
  conv_cmd->add_option("output", conv_out)->required();
  conv_cmd->add_flag("--force", force, "Overwrite an existing output file");

  std::string store = "./data", listen = "127.0.0.1:8080";
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API over a store");
  serve_cmd->add_option("--store", store)->capture_default_str();
  serve_cmd->add_option("--listen", listen)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_arguments;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*compare_cmd) return cmd_compare(compare_files);
    if (*enum_cmd) return cmd_enumerate(enum_instance, enum_objectives, limit);
    if (*conv_cmd) return cmd_convert(conv_in, conv_out, force);
    if (*serve_cmd) return cmd_serve(store, listen);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return runtime_failure;
  }
  return bad_arguments;
}

} // namespace moshop::cli
