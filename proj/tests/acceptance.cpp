// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "moshop/aim.hpp"
#include "moshop/instance_io.hpp"
#include "moshop/pareto.hpp"
#include "moshop/solvers.hpp"

using namespace moshop;
using namespace moshop::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

int failures = 0;

void criterion(const char* name, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  std::printf("%s  %-28s %7.2fs %s\n", v.pass ? "PASS" : "FAIL", name, seconds_since(t0), v.detail.str().c_str());
  std::fflush(stdout);
  failures += v.pass ? 0 : 1;
}

std::set<ObjectiveVector> front_of(const SolveResult& r) { return as_set(r.archive.vectors()); }

SolverConfig config_for(Method m, std::size_t budget, std::uint64_t seed) {
  SolverConfig c;
  c.method = m;
  c.budget = budget;
  c.seed = seed;
  return c;
}

constexpr Method kMetaheuristics[] = {Method::hillclimb, Method::moea, Method::mosa};

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string data(const std::string& rel) { return std::string(MOSHOP_DATA_DIR) + "/" + rel; }

} // namespace

int main() {
  criterion("exact front, tiny", [](Verdict& v) {
    const auto inst = t2();
    const auto spec = ObjectiveSpec::parse("cmax,tmax");
    const std::set<ObjectiveVector> expected{{7, 0}};
    v.require(as_set(brute_force_front(inst, spec, 1000)) == expected, "enumeration");
    const std::pair<Method, std::size_t> runs[] = {
        {Method::priority_portfolio, 10}, {Method::hillclimb, 2000}, {Method::moea, 2000}, {Method::mosa, 2000}};
    for (auto [m, budget] : runs) {
      const auto t0 = Clock::now();
      const auto r = solve(inst, spec, config_for(m, budget, 1));
      const double dt = seconds_since(t0);
      v.detail << " " << to_string(m) << "=" << (front_of(r) == expected ? "exact" : "miss");
      v.require(front_of(r) == expected, std::string(to_string(m)) + " front");
      v.require(dt < 1.0, std::string(to_string(m)) + " over 1 s");
    }
  });

  criterion("exact front, small 3x3", [](Verdict& v) {
    const auto t0 = Clock::now();
    const auto inst = generate_random_instance(3, 3, 1, 9, 1.3, 11);
    const auto spec = ObjectiveSpec::parse("cmax,csum,tmax");
    v.require(sequence_count(inst) == 1680, "sequence count");
    const auto exact = brute_force_front(inst, spec, 1680);
    v.detail << " |front|=" << exact.size();
    for (Method m : kMetaheuristics) {
      int hits = 0;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto found = solve(inst, spec, config_for(m, 2000, seed)).archive.vectors();
        hits += coverage(found, exact) == 1.0 && coverage(exact, found) == 1.0;
      }
      v.detail << " " << to_string(m) << "=" << hits << "/5";
      v.require(hits >= 4, std::string(to_string(m)) + " below 4 of 5");
    }
    v.require(seconds_since(t0) < 30.0, "over 30 s");
  });

  criterion("feasibility fuzz", [](Verdict& v) {
    Rng rng(501);
    std::size_t violations = 0, checked = 0;
    for (int i = 0; i < 50; ++i) {
      const auto inst = random_instance(rng);
      for (int s = 0; s < 1000; ++s) {
        violations += count_violations(decode_semi_active(random_sequence(inst, rng), inst), inst);
        ++checked;
      }
    }
    v.detail << " schedules=" << checked << " violations=" << violations;
    v.require(violations == 0, "violations");
  });

  criterion("activity check", [](Verdict& v) {
    Rng rng(502);
    const PriorityRule rules[] = {PriorityRule::spt, PriorityRule::lpt, PriorityRule::edd,
                                  PriorityRule::fcfs, PriorityRule::mwr, PriorityRule::random};
    std::size_t violations = 0;
    for (int i = 0; i < 100; ++i) {
      const auto inst = random_instance(rng);
      const auto rule = rules[i % 6];
      const auto sched = giffler_thompson_schedule(inst, rule, rng);
      violations += count_violations(sched, inst) + count_active_violations(sched, inst);
    }
    v.detail << " schedules=100 violations=" << violations;
    v.require(violations == 0, "violations");
  });

  criterion("archive oracle", [](Verdict& v) {
    Rng rng(503);
    for (std::size_t k : {2u, 3u, 4u}) {
      std::vector<ObjectiveVector> all;
      for (int i = 0; i < 10000; ++i) {
        ObjectiveVector x;
        for (std::size_t j = 0; j < k; ++j) x.values.push_back(rng.between(0, 999));
        all.push_back(std::move(x));
      }
      const auto oracle = as_set(nondominated_filter(all));
      int equal = 0;
      for (int shuffle = 0; shuffle < 20; ++shuffle) {
        rng.shuffle(all);
        Archive a;
        for (const auto& x : all) a.insert({x, {}, {}});
        equal += as_set(a.vectors()) == oracle && a.size() == oracle.size();
      }
      v.detail << " k=" << k << ":" << equal << "/20";
      v.require(equal == 20, "mismatch at k=" + std::to_string(k));
    }
  });

  criterion("genotype closure", [](Verdict& v) {
    Rng rng(504);
    const CrossoverKind xs[] = {CrossoverKind::uobx, CrossoverKind::obx, CrossoverKind::tpox, CrossoverKind::pmx};
    std::size_t violations = 0;
    for (int t = 0; t < 10000; ++t) {
      const auto inst = random_instance(rng);
      const auto p1 = random_sequence(inst, rng), p2 = random_sequence(inst, rng);
      for (auto x : xs) violations += !is_permutation_of_quota(crossover(p1, p2, x, rng), inst);
      violations += !is_permutation_of_quota(mutate(p1, MutationKind::swap, rng), inst);
      violations += !is_permutation_of_quota(mutate(p1, MutationKind::shift, rng), inst);
    }
    const auto hand = tpox(OperationSequence{{1, 2, 3, 1, 2, 3}}, OperationSequence{{3, 2, 1, 3, 2, 1}}, 2, 4);
    v.detail << " applications=60000 violations=" << violations;
    v.require(violations == 0, "violations");
    v.require(hand.genes == std::vector<int>{3, 2, 3, 1, 2, 1}, "TPOX hand example");
  });

  criterion("metropolis statistics", [](Verdict& v) {
    Rng rng(505);
    const double p = mosa_accept_probability(1.0, 1.0);
    int accepted = 0;
    for (int i = 0; i < 100000; ++i) accepted += rng.unit() < p;
    const double freq = accepted / 100000.0;
    v.detail << " frequency=" << freq << " target=" << std::exp(-1.0);
    v.require(std::abs(freq - std::exp(-1.0)) <= 0.01, "outside tolerance");
  });

  criterion("aim algebra", [](Verdict& v) {
    Rng rng(506);
    std::size_t broken = 0;
    for (int f = 0; f < 1000; ++f) {
      const std::size_t k = 2 + rng.below(3);
      std::vector<ObjectiveVector> vs;
      for (int i = 0; i < 30; ++i) {
        ObjectiveVector x;
        for (std::size_t j = 0; j < k; ++j) x.values.push_back(rng.between(0, 40));
        vs.push_back(std::move(x));
      }
      std::vector<FrontPoint> front;
      for (const auto& x : nondominated_filter(vs)) front.push_back({"s" + std::to_string(front.size()), x});
      auto s = start_session(front);
      broken += s.satisfied().size() != front.size();
      for (std::size_t i = 0; i < k; ++i) {
        std::int64_t worst = front[0].vector[i];
        for (const auto& p : front) worst = std::max(worst, p.vector[i]);
        broken += s.levels()[i] != worst;
      }
      for (int step = 0; step < 10; ++step) {
        const std::size_t i = 1 + rng.below(k);
        const std::set<std::string> before(s.satisfied().begin(), s.satisfied().end());
        const std::int64_t old = s.levels()[i - 1], value = rng.between(-1, 41);
        s.set_level(i, value);
        const std::set<std::string> sat(s.satisfied().begin(), s.satisfied().end());
        const std::set<std::string> uns(s.unsatisfied().begin(), s.unsatisfied().end());
        std::set<std::string> both = sat;
        both.insert(uns.begin(), uns.end());
        broken += both.size() != front.size() || sat.size() + uns.size() != front.size();
        if (value <= old) {
          broken += !std::includes(before.begin(), before.end(), sat.begin(), sat.end());
        } else {
          broken += !std::includes(sat.begin(), sat.end(), before.begin(), before.end());
        }
      }
    }
    auto s = start_session({{"a", {3, 9}}, {"b", {5, 5}}, {"c", {8, 2}}});
    std::vector<std::size_t> counts{s.satisfied().size()};
    s.set_level(1, 5);
    counts.push_back(s.satisfied().size());
    s.set_level(2, 5);
    counts.push_back(s.satisfied().size());
    const bool worked = counts == std::vector<std::size_t>{3, 2, 1} && s.finalize() == "b" &&
                        s.levels() == std::vector<std::int64_t>{5, 5};
    v.detail << " fronts=1000 broken=" << broken << " worked=" << counts[0] << "->" << counts[1] << "->" << counts[2];
    v.require(broken == 0, "property violations");
    v.require(worked, "worked sequence");
  });

  criterion("determinism", [](Verdict& v) {
    const auto inst = generate_random_instance(6, 4, 1, 20, 1.2, 42);
    const auto spec = ObjectiveSpec::parse("cmax,csum,tmax,u");
    for (Method m : {Method::priority_portfolio, Method::hillclimb, Method::moea, Method::mosa}) {
      const auto a = solve(inst, spec, config_for(m, 1500, 9)), b = solve(inst, spec, config_for(m, 1500, 9));
      bool same = a.evaluations == b.evaluations && a.archive.size() == b.archive.size();
      for (std::size_t i = 0; same && i < a.archive.size(); ++i) {
        same = a.archive.entries()[i].vector == b.archive.entries()[i].vector &&
               a.archive.entries()[i].sequence == b.archive.entries()[i].sequence &&
               a.archive.entries()[i].schedule == b.archive.entries()[i].schedule;
      }
      v.require(same, std::string(to_string(m)) + " differs");
    }

    const fs::path dir = fs::temp_directory_path() / ("moshop-accept-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string j3 = data("instances/J3x3.json");
    std::vector<std::string> commands;
    for (const char* m : {"priority", "hillclimb", "moea", "mosa"}) {
      commands.push_back("solve --instance " + j3 + " --method " + m + " --budget 800 --objectives cmax,csum,tmax --seed 3");
    }
    commands.push_back("enumerate --instance " + j3 + " --objectives cmax,tmax");
    commands.push_back("enumerate --instance " + j3 + " --objectives cmax,tmax --limit 10");
    commands.push_back("convert " + j3 + " " + (dir / "out.jss").string() + " --force");
    commands.push_back("convert " + j3 + " " + (dir / "out.json").string() + " --force");
    for (int i = 0; i < 2; ++i) {
      run_cli("solve --instance " + j3 + " --method mosa --budget 300 --objectives cmax,csum --store " + dir.string());
    }
    std::string runs;
    for (const auto& id : list_runs(dir)) runs += " " + (dir / "runs" / (id + ".json")).string();
    commands.push_back("compare" + runs);

    int identical = 0;
    auto written = [&](const std::string& c) {
      if (!c.starts_with("convert")) return std::string();
      return read_text(dir / (c.find("out.jss") != std::string::npos ? "out.jss" : "out.json"));
    };
    for (const auto& c : commands) {
      const auto a = run_cli(c);
      const std::string file_a = written(c);
      const auto b = run_cli(c);
      const bool same = a.code == b.code && a.out == b.out && file_a == written(c);
      identical += same;
      v.require(same, c.substr(0, c.find(' ')) + " output differs");
    }
    v.detail << " solvers=4 cli=" << identical << "/" << commands.size();
    fs::remove_all(dir);
  });

  criterion("round trips", [](Verdict& v) {
    Rng rng(507);
    int instances = 0, records = 0;
    const fs::path store = fs::temp_directory_path() / ("moshop-accept-rt-" + std::to_string(::getpid()));
    fs::remove_all(store);
    for (int i = 0; i < 200; ++i) {
      auto inst = random_instance(rng);
      inst.name = "r" + std::to_string(i);
      instances += parse_extended_json(write_extended_json(inst)) == inst;

      const auto spec = ObjectiveSpec::parse("cmax,csum,tmax,u");
      auto cfg = config_for(static_cast<Method>(rng.below(4)), 40 + rng.below(60), rng.next());
      cfg.population = 10;
      cfg.weights = 3;
      if (cfg.method == Method::priority_portfolio) cfg.budget = 10;
      auto rec = make_run_record(inst.name, spec, cfg, solve(inst, spec, cfg), rng.unit());
      const std::string id = save_run(rec, store);
      records += same_content(rec, load_run(store, id));
    }
    fs::remove_all(store);
    v.detail << " instances=" << instances << "/200 records=" << records << "/200";
    v.require(instances == 200 && records == 200, "mismatch");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
