#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "moshop/model.hpp"

namespace httplib {
class Server;
}

namespace moshop {

struct GanttBar {
  int job = 0;
  int op = 0; // 1-based routing index
  Time start = 0;
  Time end = 0;
  friend bool operator==(const GanttBar&, const GanttBar&) = default;
};

struct GanttData {
  std::vector<std::vector<GanttBar>> machines; // indexed by machine, bars by start
  Time horizon = 0;
};

GanttData gantt_data(const Schedule& sched, const Instance& inst);
nlohmann::json gantt_to_json(const GanttData& g);

struct Response {
  int status = 200;
  nlohmann::json body;
};

enum class RunState { queued, running, done, failed };
std::string_view to_string(RunState s);

// Transport-independent request handling over a store directory. Instances
// and finished runs found in the store are loaded at construction; new runs
// execute on a worker pool fed by a FIFO queue.
class Service {
public:
  // workers == 0 picks the number of hardware threads.
  explicit Service(std::filesystem::path store, std::size_t workers = 0);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // `target` may carry a query string, which is ignored.
  Response handle(std::string_view method, std::string_view target, std::string_view body);

  // Waits until the run is done or failed. False on timeout or unknown id.
  bool wait(const std::string& run_id, std::chrono::milliseconds timeout);

  // Routes every request on `server` to handle().
  void bind(httplib::Server& server);

private:
  struct Run;
  struct Aim;

  Response list_instances();
  Response get_instance(const std::string& name);
  Response post_instance(std::string_view body);
  Response post_run(std::string_view body);
  Response get_run(const std::string& id);
  Response get_front(const std::string& id);
  Response get_gantt(const std::string& id, const std::string& sid);
  Response post_aim(std::string_view body);
  Response get_aim(const std::string& id);
  Response patch_level(const std::string& id, const std::string& index, std::string_view body);
  Response post_pick(const std::string& id, const std::string& sid);
  Response post_finalize(const std::string& id);

  std::shared_ptr<Run> find_run(const std::string& id);
  std::shared_ptr<Aim> find_aim(const std::string& id);
  void work();
  void execute(Run& run);

  std::filesystem::path store_;
  std::mutex store_mutex_; // single writer for store files

  std::mutex instances_mutex_;
  std::map<std::string, Instance> instances_;

  std::mutex runs_mutex_;
  std::map<std::string, std::shared_ptr<Run>> runs_;
  std::condition_variable runs_changed_;

  std::mutex queue_mutex_;
  std::condition_variable queue_ready_;
  std::deque<std::shared_ptr<Run>> queue_;
  bool stopping_ = false;
  std::vector<std::thread> workers_;

  std::mutex aims_mutex_;
  std::map<std::string, std::shared_ptr<Aim>> aims_;
  std::size_t next_aim_ = 1;
};

// Blocks serving HTTP on host:port until the process is terminated.
// Throws Error when the address cannot be bound.
void serve(const std::filesystem::path& store, const std::string& host, int port);

} // namespace moshop
