#ifndef TRANSGP_SIM_SIMULATOR_HPP_
#define TRANSGP_SIM_SIMULATOR_HPP_

#include <vector>

#include "transgp/expr/heuristic.hpp"
#include "transgp/sim/instance.hpp"
#include "transgp/sim/policy.hpp"

namespace transgp {

struct QueuedOp {
  int job;
  int op;
  double arrival;  // time the op reached this queue
};

struct MachineState {
  bool busy = false;
  double idle_since = 0.0;
  std::vector<QueuedOp> queue;
  double queued_work = 0.0;  // sum of queued processing times on this machine
};

// Snapshot of the shop that feature extraction reads. Exposed so tests can
// build states by hand.
struct ShopState {
  double now = 0.0;
  std::vector<MachineState> machines;
  // Per op (indexed [job][op]) median eligible processing time, and per
  // job/op the sum of those medians from that op to the job's end.
  std::vector<std::vector<double>> median_pt;
  std::vector<std::vector<double>> work_remaining;

  // Fills the median tables from the instance and idles every machine at t=0.
  static ShopState initial(const Instance& inst);
};

// Features for placing (job, op), ready since `ready_time`, on `machine`.
FeatureVector compute_features(const ShopState& state, const Instance& inst, int job, int op,
                               int machine, double ready_time);

struct ScheduledOp {
  int job;
  int op;
  int machine;
  double start;
  double end;
};

struct JobOutcome {
  double release;
  double due_date;
  double completion;
};

struct SimResult {
  std::vector<JobOutcome> jobs;
  // Operations in the order they started.
  std::vector<ScheduledOp> schedule;
  Objective objective = Objective::kFmean;
  double objective_value = 0.0;
};

// Event-driven, non-delay execution of the instance under `policy`.
// Deterministic: identical inputs give bit-identical results.
SimResult run_simulation(const Instance& inst, const Policy& policy, Objective objective);
SimResult run_simulation(const Instance& inst, const Heuristic& h, Objective objective);

// Fmax = max flowtime, Fmean = mean flowtime, Tmean = mean tardiness.
double objective(const SimResult& result, Objective kind);

}  // namespace transgp

#endif  // TRANSGP_SIM_SIMULATOR_HPP_
