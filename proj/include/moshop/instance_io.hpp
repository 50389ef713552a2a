#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "moshop/model.hpp"
#include "moshop/pareto.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

// OR-Library job shop: optional preamble, then "n m", then n lines of m
// "machine duration" pairs with 0-based machines in routing order.
Instance parse_orlib_jobshop(std::string_view text, std::string name = "");
std::string write_orlib_jobshop(const Instance& inst);

// Flow shop: "n m" then n rows of m durations; every job visits 0..m-1.
Instance parse_flowshop(std::string_view text, std::string name = "");
std::string write_flowshop(const Instance& inst);

// Extended JSON carrying release and due dates. Errors name the JSON path.
Instance parse_extended_json(std::string_view text);
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& inst);
std::string write_extended_json(const Instance& inst);

enum class InstanceFormat { orlib_jobshop, flowshop, extended_json };

// By extension: .jss, .fsp, .json. Throws ContractError otherwise.
InstanceFormat format_from_path(const std::filesystem::path& path);
Instance parse_instance(std::string_view text, InstanceFormat format, std::string name);
std::string write_instance(const Instance& inst, InstanceFormat format);

// Reads a file, picking the parser by extension; the instance is named after
// the file stem unless the format carries a name.
Instance read_instance_file(const std::filesystem::path& path);

// Job shop with a uniformly random machine permutation per job and uniform
// durations in [lo, hi]. With a due factor f, d_j = ceil(f * total work of j).
Instance generate_random_instance(int jobs, int machines, Time lo, Time hi, std::optional<double> due_factor,
                                  std::uint64_t seed);

struct RunRecord {
  std::string id;
  std::string instance;
  ObjectiveSpec spec;
  SolverConfig config;
  std::vector<ArchiveEntry> archive;
  std::size_t evaluations = 0;
  double wall_time_seconds = 0.0;
  std::string timestamp;
};

// Record of a finished solve; the archive is sorted lexicographically by
// vector and the timestamp is the current UTC time. The id is left empty.
RunRecord make_run_record(const std::string& instance, const ObjectiveSpec& spec, const SolverConfig& config,
                          const SolveResult& result, double wall_time_seconds);

// Equality of everything but the id, which the store assigns.
bool same_content(const RunRecord& a, const RunRecord& b);

nlohmann::json config_to_json(const SolverConfig& config);
// Missing keys keep their defaults. Throws SchemaError on bad values.
SolverConfig config_from_json(const nlohmann::json& doc);

nlohmann::json run_record_to_json(const RunRecord& record);
// Throws IntegrityError when the document is malformed or its archive is
// not pairwise nondominated.
RunRecord run_record_from_json(const nlohmann::json& doc);

// Writes <store>/runs/<id>.json with a fresh unique id (the record's own id
// is ignored) and returns that id.
std::string save_run(RunRecord record, const std::filesystem::path& store);
// A fresh id not yet used under <store>/runs; unique within the process.
std::string new_run_id(const std::filesystem::path& store);
// Writes the record under its own id, replacing any previous file.
void write_run(const RunRecord& record, const std::filesystem::path& store);
RunRecord load_run(const std::filesystem::path& store, const std::string& id);
RunRecord read_run_file(const std::filesystem::path& path);
std::vector<std::string> list_runs(const std::filesystem::path& store);

// <store>/instances/<name>.json
void save_instance(const std::filesystem::path& store, const Instance& inst);
std::vector<Instance> load_store_instances(const std::filesystem::path& store);

} // namespace moshop
