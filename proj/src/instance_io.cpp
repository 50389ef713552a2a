#include "moshop/instance_io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "moshop/errors.hpp"

namespace moshop {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Line {
  std::size_t number; // 1-based
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::optional<std::int64_t> to_int(std::string_view token) {
  std::int64_t value = 0;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::int64_t require_int(std::string_view token, std::size_t line) {
  auto v = to_int(token);
  if (!v) throw ParseError("'" + std::string(token) + "' is not an integer", line);
  return *v;
}

bool is_header(const Line& line) {
  return line.tokens.size() == 2 && to_int(line.tokens[0]) && to_int(line.tokens[1]);
}

bool is_skippable(const Line& line) { return line.tokens.empty() || line.tokens.front().starts_with('#'); }

// Finds "n m"; lines before it are skipped when `tolerant`, else only blank and # lines.
std::pair<std::size_t, std::pair<int, int>> read_header(const std::vector<Line>& lines, bool tolerant) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_header(lines[i])) {
      const auto n = require_int(lines[i].tokens[0], lines[i].number);
      const auto m = require_int(lines[i].tokens[1], lines[i].number);
      if (n < 1 || m < 1) throw ParseError("job and machine counts must be positive", lines[i].number);
      return {i + 1, {static_cast<int>(n), static_cast<int>(m)}};
    }
    if (!tolerant && !is_skippable(lines[i])) throw ParseError("expected header 'n m'", lines[i].number);
  }
  throw ParseError("missing header 'n m'", lines.empty() ? 1 : lines.back().number);
}

// Next n non-blank lines after the header, each holding exactly `width` tokens.
std::vector<const Line*> body_lines(const std::vector<Line>& lines, std::size_t from, int n, std::size_t width,
                                    const char* unit) {
  std::vector<const Line*> out;
  for (std::size_t i = from; i < lines.size() && static_cast<int>(out.size()) < n; ++i) {
    if (lines[i].tokens.empty()) continue;
    if (lines[i].tokens.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " " + unit + ", found " +
                           std::to_string(lines[i].tokens.size()),
                       lines[i].number);
    }
    out.push_back(&lines[i]);
  }
  if (static_cast<int>(out.size()) < n) {
    throw ParseError("expected " + std::to_string(n) + " job lines, found " + std::to_string(out.size()),
                     lines.empty() ? 1 : lines.back().number);
  }
  return out;
}

std::string path_of(const std::string& base, const char* key) { return base.empty() ? key : base + "." + key; }

const json& require_key(const json& obj, const std::string& base, const char* key) {
  if (!obj.is_object()) throw SchemaError(base.empty() ? "$" : base, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path_of(base, key), "missing");
  return *it;
}

std::int64_t require_json_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string require_json_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a string");
  return v.get<std::string>();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

} // namespace

Instance parse_orlib_jobshop(std::string_view text, std::string name) {
  const auto lines = tokenize(text);
  const auto [body, dims] = read_header(lines, true);
  const auto [n, m] = dims;
  Instance inst;
  inst.name = std::move(name);
  inst.kind = ShopKind::job_shop;
  inst.machine_count = m;
  int id = 0;
  for (const Line* line : body_lines(lines, body, n, static_cast<std::size_t>(2 * m),
                                     "tokens (machine/duration pairs)")) {
    ++id;
    Job job{id, 0, std::nullopt, {}};
    for (int k = 0; k < m; ++k) {
      const auto machine = require_int(line->tokens[static_cast<std::size_t>(2 * k)], line->number);
      const auto duration = require_int(line->tokens[static_cast<std::size_t>(2 * k + 1)], line->number);
      if (machine < 0 || machine >= m) {
        throw ParseError("machine index " + std::to_string(machine) + " outside [0, " + std::to_string(m) + ")",
                         line->number);
      }
      if (duration < 0) throw ParseError("negative duration", line->number);
      job.operations.push_back({id, k + 1, static_cast<int>(machine), duration});
    }
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

std::string write_orlib_jobshop(const Instance& inst) {
  std::ostringstream os;
  os << inst.job_count() << ' ' << inst.machine_count << '\n';
  for (const Job& job : inst.jobs) {
    if (job.operations.size() != static_cast<std::size_t>(inst.machine_count)) {
      throw ContractError("OR-Library format needs exactly m operations per job");
    }
    for (std::size_t k = 0; k < job.operations.size(); ++k) {
      os << (k ? " " : "") << job.operations[k].machine << ' ' << job.operations[k].duration;
    }
    os << '\n';
  }
  return os.str();
}

Instance parse_flowshop(std::string_view text, std::string name) {
  const auto lines = tokenize(text);
  const auto [body, dims] = read_header(lines, false);
  const auto [n, m] = dims;
  Instance inst;
  inst.name = std::move(name);
  inst.kind = ShopKind::flow_shop;
  inst.machine_count = m;
  int id = 0;
  for (const Line* line : body_lines(lines, body, n, static_cast<std::size_t>(m), "durations")) {
    ++id;
    Job job{id, 0, std::nullopt, {}};
    for (int k = 0; k < m; ++k) {
      const auto duration = require_int(line->tokens[static_cast<std::size_t>(k)], line->number);
      if (duration < 0) throw ParseError("negative duration", line->number);
      job.operations.push_back({id, k + 1, k, duration});
    }
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

std::string write_flowshop(const Instance& inst) {
  if (inst.kind != ShopKind::flow_shop) throw ContractError("flow-shop format needs a flow-shop instance");
  std::ostringstream os;
  os << inst.job_count() << ' ' << inst.machine_count << '\n';
  for (const Job& job : inst.jobs) {
    for (std::size_t k = 0; k < job.operations.size(); ++k) os << (k ? " " : "") << job.operations[k].duration;
    os << '\n';
  }
  return os.str();
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  Instance inst;
  inst.name = require_json_string(require_key(doc, "", "name"), "name");
  try {
    inst.kind = shop_kind_from_string(require_json_string(require_key(doc, "", "kind"), "kind"));
  } catch (const ContractError&) {
    throw SchemaError("kind", "expected \"job_shop\" or \"flow_shop\"");
  }
  const auto machines = require_json_int(require_key(doc, "", "machines"), "machines");
  if (machines < 1) throw SchemaError("machines", "must be positive");
  inst.machine_count = static_cast<int>(machines);

  const json& jobs = require_key(doc, "", "jobs");
  if (!jobs.is_array()) throw SchemaError("jobs", "expected an array");
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const std::string base = "jobs[" + std::to_string(j) + "]";
    const json& jd = jobs[j];
    Job job;
    job.id = static_cast<int>(require_json_int(require_key(jd, base, "id"), base + ".id"));
    if (job.id != static_cast<int>(j + 1)) throw SchemaError(base + ".id", "must equal " + std::to_string(j + 1));
    if (auto it = jd.find("release"); it != jd.end()) {
      job.release = require_json_int(*it, base + ".release");
      if (job.release < 0) throw SchemaError(base + ".release", "must be nonnegative");
    }
    if (auto it = jd.find("due"); it != jd.end() && !it->is_null()) {
      job.due = require_json_int(*it, base + ".due");
      if (*job.due < 0) throw SchemaError(base + ".due", "must be nonnegative");
    }
    const json& ops = require_key(jd, base, "ops");
    if (!ops.is_array() || ops.empty()) throw SchemaError(base + ".ops", "expected a nonempty array");
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const std::string ob = base + ".ops[" + std::to_string(k) + "]";
      const auto machine = require_json_int(require_key(ops[k], ob, "machine"), ob + ".machine");
      const auto duration = require_json_int(require_key(ops[k], ob, "duration"), ob + ".duration");
      if (machine < 0 || machine >= machines) throw SchemaError(ob + ".machine", "out of range");
      if (duration < 0) throw SchemaError(ob + ".duration", "must be nonnegative");
      if (inst.kind == ShopKind::flow_shop && machine != static_cast<std::int64_t>(k)) {
        throw SchemaError(ob + ".machine", "flow-shop routing must be 0..m-1");
      }
      job.operations.push_back({job.id, static_cast<int>(k + 1), static_cast<int>(machine), duration});
    }
    if (inst.kind == ShopKind::flow_shop && ops.size() != static_cast<std::size_t>(machines)) {
      throw SchemaError(base + ".ops", "flow-shop job must visit every machine");
    }
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

Instance parse_extended_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
  return instance_from_json(doc);
}

json instance_to_json(const Instance& inst) {
  json jobs = json::array();
  for (const Job& job : inst.jobs) {
    json ops = json::array();
    for (const Operation& op : job.operations) ops.push_back({{"machine", op.machine}, {"duration", op.duration}});
    json jd = {{"id", job.id}, {"release", job.release}, {"ops", std::move(ops)}};
    if (job.due) jd["due"] = *job.due;
    jobs.push_back(std::move(jd));
  }
  return {{"name", inst.name},
          {"kind", std::string(to_string(inst.kind))},
          {"machines", inst.machine_count},
          {"jobs", std::move(jobs)}};
}

std::string write_extended_json(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

InstanceFormat format_from_path(const fs::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".jss") return InstanceFormat::orlib_jobshop;
  if (ext == ".fsp") return InstanceFormat::flowshop;
  if (ext == ".json") return InstanceFormat::extended_json;
  throw ContractError("unknown instance format '" + ext + "' (expected .jss, .fsp or .json)");
}

Instance parse_instance(std::string_view text, InstanceFormat format, std::string name) {
  switch (format) {
    case InstanceFormat::orlib_jobshop: return parse_orlib_jobshop(text, std::move(name));
    case InstanceFormat::flowshop: return parse_flowshop(text, std::move(name));
    case InstanceFormat::extended_json: return parse_extended_json(text);
  }
  throw ContractError("unknown instance format");
}

std::string write_instance(const Instance& inst, InstanceFormat format) {
  switch (format) {
    case InstanceFormat::orlib_jobshop: return write_orlib_jobshop(inst);
    case InstanceFormat::flowshop: return write_flowshop(inst);
    case InstanceFormat::extended_json: return write_extended_json(inst);
  }
  throw ContractError("unknown instance format");
}

Instance read_instance_file(const fs::path& path) {
  const auto format = format_from_path(path);
  return parse_instance(read_file(path), format, path.stem().string());
}

Instance generate_random_instance(int jobs, int machines, Time lo, Time hi, std::optional<double> due_factor,
                                  std::uint64_t seed) {
  if (jobs < 1 || machines < 1) throw ContractError("instance needs at least one job and one machine");
  if (lo < 1 || lo > hi) throw ContractError("duration range must satisfy 1 <= lo <= hi");
  if (due_factor && !(*due_factor >= 0.0)) throw ContractError("due factor must be nonnegative");
  Rng rng(seed);
  Instance inst;
  inst.name = "rand-" + std::to_string(jobs) + "x" + std::to_string(machines) + "-" + std::to_string(seed);
  inst.kind = ShopKind::job_shop;
  inst.machine_count = machines;
  std::vector<int> routing(static_cast<std::size_t>(machines));
  for (int j = 1; j <= jobs; ++j) {
    std::iota(routing.begin(), routing.end(), 0);
    rng.shuffle(routing);
    Job job{j, 0, std::nullopt, {}};
    Time work = 0;
    for (int k = 0; k < machines; ++k) {
      const Time p = rng.between(lo, hi);
      work += p;
      job.operations.push_back({j, k + 1, routing[static_cast<std::size_t>(k)], p});
    }
    if (due_factor) job.due = static_cast<Time>(std::ceil(*due_factor * static_cast<double>(work)));
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

RunRecord make_run_record(const std::string& instance, const ObjectiveSpec& spec, const SolverConfig& config,
                          const SolveResult& result, double wall_time_seconds) {
  RunRecord r;
  r.instance = instance;
  r.spec = spec;
  r.config = config;
  r.archive = result.archive.sorted_entries();
  r.evaluations = result.evaluations;
  r.wall_time_seconds = wall_time_seconds;
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  r.timestamp = stamp;
  return r;
}

bool same_content(const RunRecord& a, const RunRecord& b) {
  if (a.instance != b.instance || !(a.spec == b.spec) || !(a.config == b.config) ||
      a.evaluations != b.evaluations || a.wall_time_seconds != b.wall_time_seconds || a.timestamp != b.timestamp ||
      a.archive.size() != b.archive.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.archive.size(); ++i) {
    const auto& x = a.archive[i];
    const auto& y = b.archive[i];
    if (!(x.vector == y.vector) || !(x.sequence == y.sequence) || !(x.schedule == y.schedule)) return false;
  }
  return true;
}

json config_to_json(const SolverConfig& c) {
  json doc = {
      {"method", std::string(to_string(c.method))},
      {"budget", c.budget},
      {"seed", c.seed},
      {"points", c.points},
      {"neighborhood", std::string(to_string(c.neighborhood))},
      {"population", c.population},
      {"crossover", std::string(to_string(c.crossover))},
      {"crossover_probability", c.crossover_probability},
      {"mutation", std::string(to_string(c.mutation))},
      {"mutation_probability", c.mutation_probability},
      {"elite_fraction", c.elite_fraction},
      {"weights", c.weights},
      {"initial_temperature", c.initial_temperature},
      {"cooling", c.cooling},
      {"chain_length", c.chain_length},
  };
  if (c.archive_capacity) doc["archive_capacity"] = *c.archive_capacity;
  return doc;
}

SolverConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("config", "expected an object");
  SolverConfig c;
  auto size_field = [&](const char* key, std::size_t& out) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number_unsigned()) throw SchemaError(std::string("config.") + key, "expected a nonnegative integer");
      out = it->get<std::size_t>();
    }
  };
  auto real_field = [&](const char* key, double& out) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number()) throw SchemaError(std::string("config.") + key, "expected a number");
      out = it->get<double>();
    }
  };
  auto name_field = [&](const char* key, auto parse, auto& out) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_string()) throw SchemaError(std::string("config.") + key, "expected a string");
      try {
        out = parse(it->get<std::string>());
      } catch (const ContractError& e) {
        throw SchemaError(std::string("config.") + key, e.what());
      }
    }
  };
  name_field("method", method_from_string, c.method);
  size_field("budget", c.budget);
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw SchemaError("config.seed", "expected a nonnegative integer");
    c.seed = it->get<std::uint64_t>();
  }
  size_field("points", c.points);
  name_field("neighborhood", neighborhood_from_string, c.neighborhood);
  size_field("population", c.population);
  name_field("crossover", crossover_from_string, c.crossover);
  real_field("crossover_probability", c.crossover_probability);
  name_field("mutation", mutation_from_string, c.mutation);
  real_field("mutation_probability", c.mutation_probability);
  real_field("elite_fraction", c.elite_fraction);
  size_field("weights", c.weights);
  real_field("initial_temperature", c.initial_temperature);
  real_field("cooling", c.cooling);
  size_field("chain_length", c.chain_length);
  if (auto it = doc.find("archive_capacity"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw SchemaError("config.archive_capacity", "expected a positive integer");
    c.archive_capacity = it->get<std::size_t>();
  }
  return c;
}

json run_record_to_json(const RunRecord& r) {
  json archive = json::array();
  for (const auto& e : r.archive) {
    archive.push_back({{"vector", e.vector.values},
                       {"genes", e.sequence.genes},
                       {"starts", e.schedule.starts},
                       {"completions", e.schedule.completions}});
  }
  return {{"id", r.id},
          {"instance", r.instance},
          {"objectives", r.spec.names()},
          {"config", config_to_json(r.config)},
          {"archive", std::move(archive)},
          {"evaluations", r.evaluations},
          {"wall_time_seconds", r.wall_time_seconds},
          {"timestamp", r.timestamp}};
}

RunRecord run_record_from_json(const json& doc) {
  RunRecord r;
  try {
    r.id = doc.at("id").get<std::string>();
    r.instance = doc.at("instance").get<std::string>();
    std::vector<Objective> objectives;
    for (const auto& name : doc.at("objectives")) objectives.push_back(objective_from_string(name.get<std::string>()));
    r.spec = ObjectiveSpec(std::move(objectives));
    r.config = config_from_json(doc.at("config"));
    for (const auto& e : doc.at("archive")) {
      ArchiveEntry entry;
      entry.vector.values = e.at("vector").get<std::vector<std::int64_t>>();
      entry.sequence.genes = e.at("genes").get<std::vector<int>>();
      entry.schedule.starts = e.at("starts").get<std::vector<std::vector<Time>>>();
      entry.schedule.completions = e.at("completions").get<std::vector<Time>>();
      if (entry.vector.size() != r.spec.size()) throw IntegrityError("archive vector length does not match objectives");
      r.archive.push_back(std::move(entry));
    }
    r.evaluations = doc.at("evaluations").get<std::size_t>();
    r.wall_time_seconds = doc.at("wall_time_seconds").get<double>();
    r.timestamp = doc.at("timestamp").get<std::string>();
  } catch (const json::exception& e) {
    throw IntegrityError(std::string("corrupt run record: ") + e.what());
  } catch (const SchemaError& e) {
    throw IntegrityError(std::string("corrupt run record: ") + e.what());
  } catch (const SpecError& e) {
    throw IntegrityError(std::string("corrupt run record: ") + e.what());
  }
  for (std::size_t i = 0; i < r.archive.size(); ++i) {
    for (std::size_t j = 0; j < r.archive.size(); ++j) {
      if (i == j) continue;
      const auto& a = r.archive[i].vector;
      const auto& b = r.archive[j].vector;
      if (a == b || dominates(a, b)) throw IntegrityError("run record archive is not pairwise nondominated");
    }
  }
  return r;
}

std::string new_run_id(const fs::path& store) {
  const fs::path runs_dir = store / "runs";
  static std::atomic<unsigned> counter{0};
  const auto now = std::chrono::system_clock::now();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%S", &tm);
  for (;;) {
    char id[64];
    std::snprintf(id, sizeof id, "run-%s%03lld-%04u", stamp, static_cast<long long>(ms), counter++);
    if (!fs::exists(runs_dir / (std::string(id) + ".json"))) return id;
  }
}

void write_run(const RunRecord& record, const fs::path& store) {
  if (record.id.empty() || record.id.find('/') != std::string::npos) {
    throw ContractError("run id '" + record.id + "' cannot be used as a file name");
  }
  write_file(store / "runs" / (record.id + ".json"), run_record_to_json(record).dump(2) + "\n");
}

std::string save_run(RunRecord record, const fs::path& store) {
  // serialized so concurrent savers never pick the same id
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  record.id = new_run_id(store);
  write_run(record, store);
  return record.id;
}

RunRecord read_run_file(const fs::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IntegrityError("corrupt run record " + path.string() + ": " + e.what());
  }
  return run_record_from_json(doc);
}

RunRecord load_run(const fs::path& store, const std::string& id) {
  const fs::path path = store / "runs" / (id + ".json");
  if (id.find('/') != std::string::npos || id.find("..") != std::string::npos || !fs::exists(path)) {
    throw NotFoundError("run '" + id + "' not found");
  }
  RunRecord r = read_run_file(path);
  if (r.id != id) throw IntegrityError("run file " + id + " carries id '" + r.id + "'");
  return r;
}

std::vector<std::string> list_runs(const fs::path& store) {
  std::vector<std::string> ids;
  const fs::path runs = store / "runs";
  if (!fs::exists(runs)) return ids;
  for (const auto& entry : fs::directory_iterator(runs)) {
    if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void save_instance(const fs::path& store, const Instance& inst) {
  if (inst.name.empty() || inst.name.find('/') != std::string::npos || inst.name.starts_with('.')) {
    throw ContractError("instance name '" + inst.name + "' cannot be used as a file name");
  }
  write_file(store / "instances" / (inst.name + ".json"), write_extended_json(inst));
}

std::vector<Instance> load_store_instances(const fs::path& store) {
  std::vector<Instance> out;
  const fs::path dir = store / "instances";
  if (!fs::exists(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (ext == ".json" || ext == ".jss" || ext == ".fsp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.push_back(read_instance_file(f));
  return out;
}

} // namespace moshop
