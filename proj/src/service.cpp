#include "moshop/service.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iostream>
#include <optional>

#include <httplib.h>

#include "moshop/aim.hpp"
#include "moshop/errors.hpp"
#include "moshop/instance_io.hpp"
#include "moshop/solvers.hpp"

namespace moshop {

namespace fs = std::filesystem;
using nlohmann::json;

GanttData gantt_data(const Schedule& sched, const Instance& inst) {
  GanttData g;
  g.machines.resize(static_cast<std::size_t>(inst.machine_count));
  for (const Job& job : inst.jobs) {
    for (const Operation& op : job.operations) {
      const Time s = sched.start(job.id, op.index);
      g.machines[static_cast<std::size_t>(op.machine)].push_back({job.id, op.index, s, s + op.duration});
      g.horizon = std::max(g.horizon, s + op.duration);
    }
  }
  for (auto& bars : g.machines) {
    std::sort(bars.begin(), bars.end(), [](const GanttBar& a, const GanttBar& b) {
      return std::tie(a.start, a.end, a.job, a.op) < std::tie(b.start, b.end, b.job, b.op);
    });
  }
  return g;
}

json gantt_to_json(const GanttData& g) {
  json machines = json::array();
  for (std::size_t m = 0; m < g.machines.size(); ++m) {
    json bars = json::array();
    for (const GanttBar& b : g.machines[m]) {
      bars.push_back({{"job", b.job}, {"op", b.op}, {"start", b.start}, {"end", b.end}});
    }
    machines.push_back({{"machine", m}, {"bars", std::move(bars)}});
  }
  return {{"horizon", g.horizon}, {"machines", std::move(machines)}};
}

std::string_view to_string(RunState s) {
  switch (s) {
  case RunState::queued: return "queued";
  case RunState::running: return "running";
  case RunState::done: return "done";
  case RunState::failed: return "failed";
  }
  return "?";
}

struct Service::Run {
  std::string id;
  std::string instance_name;
  std::optional<Instance> instance; // absent for stored runs whose instance is gone
  ObjectiveSpec spec;
  SolverConfig config;

  std::mutex mutex;
  std::condition_variable finished;
  RunState state = RunState::queued;
  std::string error;
  RunRecord record; // valid once done
  std::atomic<std::size_t> evaluations{0};
};

struct Service::Aim {
  Aim(std::string run_id, std::vector<FrontPoint> front) : run(std::move(run_id)), session(std::move(front)) {}
  std::mutex mutex;
  std::string run;
  AimSession session;
};

namespace {

Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::string solution_id(std::size_t i) { return "s" + std::to_string(i); }

std::optional<std::size_t> parse_solution_id(const std::string& sid) {
  if (sid.size() < 2 || sid[0] != 's') return std::nullopt;
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(sid.data() + 1, sid.data() + sid.size(), v);
  if (ec != std::errc() || p != sid.data() + sid.size()) return std::nullopt;
  return v;
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
}

json aim_state(const std::string& id, const std::string& run, const AimSession& s) {
  return {{"id", id},
          {"run", run},
          {"levels", s.levels()},
          {"as_ids", s.satisfied()},
          {"not_as_ids", s.unsatisfied()}};
}

std::vector<std::string> split_path(std::string_view target) {
  if (auto q = target.find('?'); q != std::string_view::npos) target = target.substr(0, q);
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < target.size()) {
    const std::size_t j = std::min(target.find('/', i), target.size());
    if (j > i) parts.emplace_back(target.substr(i, j - i));
    i = j + 1;
  }
  return parts;
}

} // namespace

Service::Service(fs::path store, std::size_t workers) : store_(std::move(store)) {
  const fs::path dir = store_ / "instances";
  if (fs::exists(dir)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const auto ext = f.extension();
      if (ext != ".json" && ext != ".jss" && ext != ".fsp") continue;
      try {
        Instance inst = read_instance_file(f);
        instances_.insert_or_assign(inst.name, std::move(inst));
      } catch (const Error& e) {
        std::cerr << "skipping instance " << f.string() << ": " << e.what() << "\n";
      }
    }
  }
  for (const auto& id : list_runs(store_)) {
    try {
      auto run = std::make_shared<Run>();
      run->record = load_run(store_, id);
      std::sort(run->record.archive.begin(), run->record.archive.end(),
                [](const ArchiveEntry& a, const ArchiveEntry& b) { return a.vector < b.vector; });
      run->id = id;
      run->instance_name = run->record.instance;
      run->spec = run->record.spec;
      run->config = run->record.config;
      run->state = RunState::done;
      run->evaluations = run->record.evaluations;
      if (auto it = instances_.find(run->instance_name); it != instances_.end()) run->instance = it->second;
      runs_.emplace(id, std::move(run));
    } catch (const Error& e) {
      std::cerr << "skipping run " << id << ": " << e.what() << "\n";
    }
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t i = 0; i < workers; ++i) workers_.emplace_back([this] { work(); });
}

Service::~Service() {
  {
    std::lock_guard lock(queue_mutex_);
    stopping_ = true;
  }
  queue_ready_.notify_all();
  for (auto& t : workers_) t.join();
}

Response Service::handle(std::string_view method, std::string_view target, std::string_view body) {
  const auto p = split_path(target);
  const std::size_t n = p.size();
  auto is = [&](std::string_view m) { return method == m; };
  try {
    if (n >= 1 && p[0] == "instances") {
      if (n == 1 && is("GET")) return list_instances();
      if (n == 1 && is("POST")) return post_instance(body);
      if (n == 2 && is("GET")) return get_instance(p[1]);
      if (n <= 2) return error(405, "method not allowed");
    } else if (n >= 1 && p[0] == "runs") {
      if (n == 1 && is("POST")) return post_run(body);
      if (n == 2 && is("GET")) return get_run(p[1]);
      if (n == 3 && p[2] == "front" && is("GET")) return get_front(p[1]);
      if (n == 5 && p[2] == "solutions" && p[4] == "gantt" && is("GET")) return get_gantt(p[1], p[3]);
      if (n <= 2 || (n == 3 && p[2] == "front") || (n == 5 && p[2] == "solutions" && p[4] == "gantt")) {
        return error(405, "method not allowed");
      }
    } else if (n >= 1 && p[0] == "aim") {
      if (n == 1 && is("POST")) return post_aim(body);
      if (n == 2 && is("GET")) return get_aim(p[1]);
      if (n == 4 && p[2] == "levels" && is("PATCH")) return patch_level(p[1], p[3], body);
      if (n == 4 && p[2] == "pick" && is("POST")) return post_pick(p[1], p[3]);
      if (n == 3 && p[2] == "finalize" && is("POST")) return post_finalize(p[1]);
      if (n <= 2 || (n == 4 && (p[2] == "levels" || p[2] == "pick")) || (n == 3 && p[2] == "finalize")) {
        return error(405, "method not allowed");
      }
    }
    return error(404, "no such resource");
  } catch (const NotFoundError& e) {
    return error(404, e.what());
  } catch (const NotConvergedError& e) {
    return {409, {{"error", e.what()}, {"count", e.count()}}};
  } catch (const ContractError& e) {
    return error(422, e.what());
  } catch (const SchemaError& e) {
    return error(422, e.what());
  } catch (const ParseError& e) {
    return error(422, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

// --- instances ----------------------------------------------------------------

Response Service::list_instances() {
  std::lock_guard lock(instances_mutex_);
  json out = json::array();
  for (const auto& [name, inst] : instances_) {
    out.push_back({{"name", name},
                   {"kind", std::string(to_string(inst.kind))},
                   {"jobs", inst.job_count()},
                   {"machines", inst.machine_count}});
  }
  return {200, out};
}

Response Service::get_instance(const std::string& name) {
  std::lock_guard lock(instances_mutex_);
  auto it = instances_.find(name);
  if (it == instances_.end()) return error(404, "instance '" + name + "' not found");
  return {200, instance_to_json(it->second)};
}

// The body is either an extended-JSON instance or
// {"name": ..., "format": "jss"|"fsp"|"json", "text": ...}.
Response Service::post_instance(std::string_view body) {
  const json doc = parse_body(body);
  Instance inst;
  if (doc.is_object() && doc.contains("format")) {
    if (!doc["format"].is_string()) throw SchemaError("format", "expected a string");
    if (!doc.contains("text") || !doc["text"].is_string()) throw SchemaError("text", "expected a string");
    const std::string format = doc["format"];
    const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    const std::string text = doc["text"];
    if (format == "jss") {
      inst = parse_orlib_jobshop(text, name);
    } else if (format == "fsp") {
      inst = parse_flowshop(text, name);
    } else if (format == "json") {
      inst = parse_extended_json(text);
    } else {
      throw SchemaError("format", "unknown format '" + format + "'");
    }
  } else {
    inst = instance_from_json(doc);
  }
  inst.validate();
  if (inst.name.empty()) throw SchemaError("name", "instance needs a name");

  std::lock_guard lock(instances_mutex_);
  if (auto it = instances_.find(inst.name); it != instances_.end()) {
    if (it->second == inst) return {200, {{"name", inst.name}}};
    return error(409, "instance '" + inst.name + "' already exists with different content");
  }
  {
    std::lock_guard store_lock(store_mutex_);
    save_instance(store_, inst);
  }
  const std::string name = inst.name;
  instances_.emplace(name, std::move(inst));
  return {201, {{"name", name}}};
}

// --- runs ---------------------------------------------------------------------

std::shared_ptr<Service::Run> Service::find_run(const std::string& id) {
  std::lock_guard lock(runs_mutex_);
  auto it = runs_.find(id);
  if (it == runs_.end()) throw NotFoundError("run '" + id + "' not found");
  return it->second;
}

Response Service::post_run(std::string_view body) {
  const json doc = parse_body(body);
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  if (!doc.contains("instance") || !doc["instance"].is_string()) throw SchemaError("instance", "expected a string");
  const std::string name = doc["instance"];

  std::optional<Instance> inst;
  {
    std::lock_guard lock(instances_mutex_);
    if (auto it = instances_.find(name); it != instances_.end()) inst = it->second;
  }
  if (!inst) return error(404, "instance '" + name + "' not found");

  if (!doc.contains("objectives")) throw SchemaError("objectives", "missing");
  const json& objs = doc["objectives"];
  ObjectiveSpec spec;
  if (objs.is_string()) {
    spec = ObjectiveSpec::parse(objs.get<std::string>());
  } else if (objs.is_array()) {
    std::vector<Objective> selected;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (!objs[i].is_string()) throw SchemaError("objectives[" + std::to_string(i) + "]", "expected a string");
      selected.push_back(objective_from_string(objs[i].get<std::string>()));
    }
    spec = ObjectiveSpec(std::move(selected));
  } else {
    throw SchemaError("objectives", "expected an array of names");
  }
  spec.check(*inst);
  const SolverConfig config = config_from_json(doc);
  config.validate();

  auto run = std::make_shared<Run>();
  run->id = new_run_id(store_);
  run->instance_name = name;
  run->instance = std::move(inst);
  run->spec = spec;
  run->config = config;
  {
    std::lock_guard lock(runs_mutex_);
    runs_.emplace(run->id, run);
  }
  {
    std::lock_guard lock(queue_mutex_);
    queue_.push_back(run);
  }
  queue_ready_.notify_one();
  return {202, {{"id", run->id}}};
}

Response Service::get_run(const std::string& id) {
  auto run = find_run(id);
  std::lock_guard lock(run->mutex);
  json out = {{"id", run->id},
              {"instance", run->instance_name},
              {"method", std::string(to_string(run->config.method))},
              {"objectives", run->spec.names()},
              {"budget", run->config.budget},
              {"state", std::string(to_string(run->state))},
              {"evaluations", run->evaluations.load()}};
  if (run->state == RunState::done) out["front_size"] = run->record.archive.size();
  if (run->state == RunState::failed) out["error"] = run->error;
  return {200, out};
}

Response Service::get_front(const std::string& id) {
  auto run = find_run(id);
  std::lock_guard lock(run->mutex);
  if (run->state == RunState::failed) return error(409, "run failed: " + run->error);
  if (run->state != RunState::done) return error(409, "run is " + std::string(to_string(run->state)));
  json out = json::array();
  for (std::size_t i = 0; i < run->record.archive.size(); ++i) {
    out.push_back({{"id", solution_id(i)}, {"vector", run->record.archive[i].vector.values}});
  }
  return {200, out};
}

Response Service::get_gantt(const std::string& id, const std::string& sid) {
  auto run = find_run(id);
  std::lock_guard lock(run->mutex);
  if (run->state != RunState::done) return error(409, "run is " + std::string(to_string(run->state)));
  const auto index = parse_solution_id(sid);
  if (!index || *index >= run->record.archive.size()) return error(404, "solution '" + sid + "' not found");
  if (!run->instance) return error(404, "instance '" + run->instance_name + "' is not in the store");
  json out = gantt_to_json(gantt_data(run->record.archive[*index].schedule, *run->instance));
  out["solution"] = sid;
  return {200, out};
}

bool Service::wait(const std::string& run_id, std::chrono::milliseconds timeout) {
  std::shared_ptr<Run> run;
  try {
    run = find_run(run_id);
  } catch (const NotFoundError&) {
    return false;
  }
  std::unique_lock lock(run->mutex);
  return run->finished.wait_for(lock, timeout, [&] {
    return run->state == RunState::done || run->state == RunState::failed;
  });
}

void Service::work() {
  for (;;) {
    std::shared_ptr<Run> run;
    {
      std::unique_lock lock(queue_mutex_);
      queue_ready_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      run = std::move(queue_.front());
      queue_.pop_front();
    }
    execute(*run);
  }
}

void Service::execute(Run& run) {
  {
    std::lock_guard lock(run.mutex);
    run.state = RunState::running;
  }
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult result =
        solve(*run.instance, run.spec, run.config, [&](std::size_t n) { run.evaluations.store(n); });
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    RunRecord record = make_run_record(run.instance_name, run.spec, run.config, result, wall);
    record.id = run.id;
    {
      std::lock_guard store_lock(store_mutex_);
      write_run(record, store_);
    }
    std::lock_guard lock(run.mutex);
    run.record = std::move(record);
    run.state = RunState::done;
  } catch (const std::exception& e) {
    std::lock_guard lock(run.mutex);
    run.error = e.what();
    run.state = RunState::failed;
  }
  run.finished.notify_all();
}

// --- aspiration sessions ------------------------------------------------------

std::shared_ptr<Service::Aim> Service::find_aim(const std::string& id) {
  std::lock_guard lock(aims_mutex_);
  auto it = aims_.find(id);
  if (it == aims_.end()) throw NotFoundError("session '" + id + "' not found");
  return it->second;
}

Response Service::post_aim(std::string_view body) {
  const json doc = parse_body(body);
  if (!doc.is_object() || !doc.contains("run") || !doc["run"].is_string()) {
    throw SchemaError("run", "expected a run id");
  }
  auto run = find_run(doc["run"].get<std::string>());
  std::vector<FrontPoint> front;
  {
    std::lock_guard lock(run->mutex);
    if (run->state != RunState::done) return error(409, "run is " + std::string(to_string(run->state)));
    for (std::size_t i = 0; i < run->record.archive.size(); ++i) {
      front.push_back({solution_id(i), run->record.archive[i].vector});
    }
  }
  auto aim = std::make_shared<Aim>(run->id, std::move(front));
  std::string id;
  {
    std::lock_guard lock(aims_mutex_);
    id = "aim-" + std::to_string(next_aim_++);
    aims_.emplace(id, aim);
  }
  std::lock_guard lock(aim->mutex);
  return {201, aim_state(id, aim->run, aim->session)};
}

Response Service::get_aim(const std::string& id) {
  auto aim = find_aim(id);
  std::lock_guard lock(aim->mutex);
  return {200, aim_state(id, aim->run, aim->session)};
}

Response Service::patch_level(const std::string& id, const std::string& index, std::string_view body) {
  auto aim = find_aim(id);
  std::size_t i = 0;
  const auto [p, ec] = std::from_chars(index.data(), index.data() + index.size(), i);
  if (ec != std::errc() || p != index.data() + index.size()) {
    return error(422, "objective index '" + index + "' is not a number");
  }
  const json doc = parse_body(body);
  if (!doc.is_object() || !doc.contains("value") || !doc["value"].is_number_integer()) {
    throw SchemaError("value", "expected an integer");
  }
  std::lock_guard lock(aim->mutex);
  aim->session.set_level(i, doc["value"].get<std::int64_t>());
  return {200, aim_state(id, aim->run, aim->session)};
}

Response Service::post_pick(const std::string& id, const std::string& sid) {
  auto aim = find_aim(id);
  std::lock_guard lock(aim->mutex);
  aim->session.pick(sid);
  return {200, aim_state(id, aim->run, aim->session)};
}

Response Service::post_finalize(const std::string& id) {
  auto aim = find_aim(id);
  std::lock_guard lock(aim->mutex);
  const std::string sid = aim->session.finalize();
  json vector;
  for (const auto& p : aim->session.front()) {
    if (p.id == sid) vector = p.vector.values;
  }
  return {200, {{"solution", sid}, {"vector", vector}}};
}

// --- HTTP binding -------------------------------------------------------------

void Service::bind(httplib::Server& server) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Patch(".*", handler);
  server.Put(".*", handler);
  server.Delete(".*", handler);
}

void serve(const fs::path& store, const std::string& host, int port) {
  Service service(store);
  httplib::Server server;
  service.bind(server);
  if (!server.bind_to_port(host, port)) {
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  }
  std::cerr << "listening on " << host << ":" << port << "\n";
  server.listen_after_bind();
}

} // namespace moshop
