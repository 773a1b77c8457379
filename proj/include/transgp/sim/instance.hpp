#ifndef TRANSGP_SIM_INSTANCE_HPP_
#define TRANSGP_SIM_INSTANCE_HPP_

#include <cstdint>
#include <vector>

#include "transgp/sim/task.hpp"

namespace transgp {

struct IntRange {
  int lo;
  int hi;
  bool operator==(const IntRange&) const = default;
};

struct RealRange {
  double lo;
  double hi;
  bool operator==(const RealRange&) const = default;
};

struct ScenarioConfig {
  TaskSpec task;
  int num_jobs = 124;
  IntRange ops_per_job{2, 10};
  RealRange workload{100.0, 1000.0};
  RealRange speed{10.0, 15.0};
  IntRange transport{7, 100};
  double due_date_factor = 1.5;
  std::uint64_t seed = 0;

  // Throws InvalidConfig.
  void validate() const;

  bool operator==(const ScenarioConfig&) const = default;
};

// Poisson arrival rate that loads the shop to the task's utilisation:
// util * machines / (E[ops per job] * E[workload] * E[1 / speed]).
double arrival_rate(const ScenarioConfig& cfg);

struct Operation {
  double workload = 0.0;
  std::vector<int> eligible;  // ascending machine indices, never empty

  bool operator==(const Operation&) const = default;
};

struct Job {
  double release = 0.0;
  double due_date = 0.0;
  double weight = 1.0;  // carried for completeness; no objective reads it
  std::vector<Operation> ops;

  bool operator==(const Job&) const = default;
};

struct Machine {
  double speed = 1.0;

  bool operator==(const Machine&) const = default;
};

// A fully sampled shop. Transport is (machines + 2)^2, row-major, with the
// entry point at index machines and the exit point at machines + 1.
struct Instance {
  std::vector<Machine> machines;
  std::vector<double> transport;
  std::vector<Job> jobs;

  int num_machines() const { return static_cast<int>(machines.size()); }
  int entry() const { return num_machines(); }
  int exit() const { return num_machines() + 1; }
  double transport_time(int from, int to) const {
    return transport[static_cast<std::size_t>(from) * static_cast<std::size_t>(num_machines() + 2) +
                     static_cast<std::size_t>(to)];
  }
  double processing_time(int job, int op, int machine) const {
    return jobs[static_cast<std::size_t>(job)].ops[static_cast<std::size_t>(op)].workload /
           machines[static_cast<std::size_t>(machine)].speed;
  }
  // Median over the op's eligible machines (mean of the middle pair when even).
  double median_processing_time(int job, int op) const;

  bool operator==(const Instance&) const = default;
};

// Zero transport matrix for hand-built instances.
std::vector<double> zero_transport(int machines);

// d_i = r_i + factor * sum over ops of the median eligible processing time.
void assign_due_dates(Instance& inst, double due_date_factor);

// Deterministic in (cfg, seed); cfg.seed is ignored by this overload.
Instance generate_instance(const ScenarioConfig& cfg, std::uint64_t seed);
inline Instance generate_instance(const ScenarioConfig& cfg) {
  return generate_instance(cfg, cfg.seed);
}

}  // namespace transgp

#endif  // TRANSGP_SIM_INSTANCE_HPP_
