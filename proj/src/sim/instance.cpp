#include "transgp/sim/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "transgp/common/error.hpp"
#include "transgp/common/rng.hpp"

namespace transgp {

void ScenarioConfig::validate() const {
  if (task.util_level <= 0.0) throw InvalidConfig("util_level must be positive");
  if (task.mach_num < 1) throw InvalidConfig("mach_num must be at least 1");
  if (num_jobs < 1) throw InvalidConfig("num_jobs must be at least 1");
  if (ops_per_job.lo < 1 || ops_per_job.hi < ops_per_job.lo) {
    throw InvalidConfig("ops_per_job range is empty or non-positive");
  }
  if (workload.lo <= 0.0 || workload.hi < workload.lo) {
    throw InvalidConfig("workload range is empty or non-positive");
  }
  if (speed.lo <= 0.0 || speed.hi < speed.lo) {
    throw InvalidConfig("speed range is empty or non-positive");
  }
  if (transport.lo < 0 || transport.hi < transport.lo) {
    throw InvalidConfig("transport range is empty or negative");
  }
  if (due_date_factor <= 0.0) throw InvalidConfig("due_date_factor must be positive");
}

double arrival_rate(const ScenarioConfig& cfg) {
  if (cfg.task.util_level <= 0.0) throw InvalidConfig("util_level must be positive");
  const double mean_ops = 0.5 * (cfg.ops_per_job.lo + cfg.ops_per_job.hi);
  const double mean_workload = 0.5 * (cfg.workload.lo + cfg.workload.hi);
  // E[1/S] for S ~ U[a, b] is ln(b/a) / (b - a).
  const double mean_inv_speed = cfg.speed.hi > cfg.speed.lo
                                    ? std::log(cfg.speed.hi / cfg.speed.lo) /
                                          (cfg.speed.hi - cfg.speed.lo)
                                    : 1.0 / cfg.speed.lo;
  const double mean_pt = mean_workload * mean_inv_speed;
  return cfg.task.util_level * cfg.task.mach_num / (mean_ops * mean_pt);
}

double Instance::median_processing_time(int job, int op) const {
  const auto& eligible =
      jobs[static_cast<std::size_t>(job)].ops[static_cast<std::size_t>(op)].eligible;
  std::vector<double> pts;
  pts.reserve(eligible.size());
  for (int m : eligible) pts.push_back(processing_time(job, op, m));
  std::sort(pts.begin(), pts.end());
  const std::size_t n = pts.size();
  return n % 2 == 1 ? pts[n / 2] : 0.5 * (pts[n / 2 - 1] + pts[n / 2]);
}

std::vector<double> zero_transport(int machines) {
  const auto n = static_cast<std::size_t>(machines + 2);
  return std::vector<double>(n * n, 0.0);
}

void assign_due_dates(Instance& inst, double due_date_factor) {
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    double total = 0.0;
    for (std::size_t o = 0; o < inst.jobs[j].ops.size(); ++o) {
      total += inst.median_processing_time(static_cast<int>(j), static_cast<int>(o));
    }
    inst.jobs[j].due_date = inst.jobs[j].release + due_date_factor * total;
  }
}

// Draw order (fixed, so instances are reproducible from the seed alone):
// machine speeds; upper triangle of the transport matrix, row-major; then per
// job: inter-arrival gap, weight, op count, and per op its workload, eligible
// set size and members.
Instance generate_instance(const ScenarioConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  const int m = cfg.task.mach_num;
  Instance inst;
  inst.machines.resize(static_cast<std::size_t>(m));
  for (auto& machine : inst.machines) machine.speed = rng.uniform(cfg.speed.lo, cfg.speed.hi);

  const int points = m + 2;
  inst.transport.assign(static_cast<std::size_t>(points * points), 0.0);
  for (int a = 0; a < points; ++a) {
    for (int b = a + 1; b < points; ++b) {
      const auto t = static_cast<double>(rng.uniform_int(cfg.transport.lo, cfg.transport.hi));
      inst.transport[static_cast<std::size_t>(a * points + b)] = t;
      inst.transport[static_cast<std::size_t>(b * points + a)] = t;
    }
  }

  const double lambda = arrival_rate(cfg);
  std::vector<int> pool(static_cast<std::size_t>(m));
  double clock = 0.0;
  inst.jobs.resize(static_cast<std::size_t>(cfg.num_jobs));
  for (auto& job : inst.jobs) {
    clock += rng.exponential(lambda);
    job.release = clock;
    const double u = rng.uniform01();
    job.weight = u < 0.2 ? 1.0 : (u < 0.8 ? 2.0 : 4.0);
    const auto nops = rng.uniform_int(cfg.ops_per_job.lo, cfg.ops_per_job.hi);
    job.ops.resize(static_cast<std::size_t>(nops));
    for (auto& op : job.ops) {
      op.workload = rng.uniform(cfg.workload.lo, cfg.workload.hi);
      const auto k = static_cast<std::size_t>(rng.uniform_int(1, m));
      std::iota(pool.begin(), pool.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t pick = i + rng.index(pool.size() - i);
        std::swap(pool[i], pool[pick]);
      }
      op.eligible.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(op.eligible.begin(), op.eligible.end());
    }
  }
  assign_due_dates(inst, cfg.due_date_factor);
  return inst;
}

}  // namespace transgp
