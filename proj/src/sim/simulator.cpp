#include "transgp/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace transgp {

ShopState ShopState::initial(const Instance& inst) {
  ShopState st;
  st.machines.resize(inst.machines.size());
  st.median_pt.resize(inst.jobs.size());
  st.work_remaining.resize(inst.jobs.size());
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    const std::size_t n = inst.jobs[j].ops.size();
    st.median_pt[j].resize(n);
    st.work_remaining[j].assign(n, 0.0);
    for (std::size_t o = 0; o < n; ++o) {
      st.median_pt[j][o] = inst.median_processing_time(static_cast<int>(j), static_cast<int>(o));
    }
    double acc = 0.0;
    for (std::size_t o = n; o-- > 0;) {
      acc += st.median_pt[j][o];
      st.work_remaining[j][o] = acc;
    }
  }
  return st;
}

FeatureVector compute_features(const ShopState& state, const Instance& inst, int job, int op,
                               int machine, double ready_time) {
  const auto j = static_cast<std::size_t>(job);
  const auto o = static_cast<std::size_t>(op);
  const MachineState& ms = state.machines[static_cast<std::size_t>(machine)];
  const Job& jb = inst.jobs[j];
  const double now = state.now;
  const double wkr = state.work_remaining[j][o];

  FeatureVector f;
  f[Token::kNIQ] = static_cast<double>(ms.queue.size());
  f[Token::kWIQ] = ms.queued_work;
  f[Token::kMWT] = ms.busy ? 0.0 : now - ms.idle_since;
  f[Token::kPT] = inst.processing_time(job, op, machine);
  f[Token::kNPT] = o + 1 < jb.ops.size() ? state.median_pt[j][o + 1] : 0.0;
  f[Token::kOWT] = now - ready_time;
  f[Token::kWKR] = wkr;
  f[Token::kNOR] = static_cast<double>(jb.ops.size() - o);
  f[Token::kSLACK] = jb.due_date - now - wkr;
  f[Token::kTIS] = now - jb.release;
  return f;
}

namespace {

// Within one timestamp: completions free machines first, then releases, then
// arrivals fill queues; remaining fields give a total order.
enum class EventKind : int { kCompletion = 0, kRelease = 1, kArrival = 2 };

struct Event {
  double time;
  EventKind kind;
  int job;
  int op;
  int machine;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    return std::tie(a.time, a.kind, a.job, a.op, a.machine) >
           std::tie(b.time, b.kind, b.job, b.op, b.machine);
  }
};

struct RoutingRequest {
  int job;
  int op;
  int from;  // location index the job leaves from
};

class Simulation {
 public:
  Simulation(const Instance& inst, const Policy& policy)
      : inst_(inst), policy_(policy), state_(ShopState::initial(inst)) {}

  SimResult run(Objective kind) {
    result_.objective = kind;
    result_.jobs.reserve(inst_.jobs.size());
    for (std::size_t j = 0; j < inst_.jobs.size(); ++j) {
      const Job& jb = inst_.jobs[j];
      result_.jobs.push_back({jb.release, jb.due_date, std::numeric_limits<double>::quiet_NaN()});
      events_.push({jb.release, EventKind::kRelease, static_cast<int>(j), 0, -1});
    }
    std::vector<RoutingRequest> to_route;
    while (!events_.empty()) {
      const double t = events_.top().time;
      state_.now = t;
      to_route.clear();
      while (!events_.empty() && events_.top().time == t) {
        const Event e = events_.top();
        events_.pop();
        handle(e, to_route);
      }
      std::sort(to_route.begin(), to_route.end(),
                [](const RoutingRequest& a, const RoutingRequest& b) { return a.job < b.job; });
      for (const RoutingRequest& r : to_route) route(r);
      dispatch_idle_machines();
    }
    result_.objective_value = objective(result_, kind);
    return std::move(result_);
  }

 private:
  void handle(const Event& e, std::vector<RoutingRequest>& to_route) {
    switch (e.kind) {
      case EventKind::kCompletion: {
        MachineState& ms = state_.machines[static_cast<std::size_t>(e.machine)];
        ms.busy = false;
        ms.idle_since = e.time;
        const auto nops = static_cast<int>(inst_.jobs[static_cast<std::size_t>(e.job)].ops.size());
        if (e.op + 1 < nops) {
          to_route.push_back({e.job, e.op + 1, e.machine});
        } else {
          result_.jobs[static_cast<std::size_t>(e.job)].completion =
              e.time + inst_.transport_time(e.machine, inst_.exit());
        }
        break;
      }
      case EventKind::kRelease:
        to_route.push_back({e.job, 0, inst_.entry()});
        break;
      case EventKind::kArrival:
        enqueue(e.machine, {e.job, e.op, e.time});
        break;
    }
  }

  void enqueue(int machine, const QueuedOp& q) {
    MachineState& ms = state_.machines[static_cast<std::size_t>(machine)];
    ms.queue.push_back(q);
    ms.queued_work += inst_.processing_time(q.job, q.op, machine);
  }

  DecisionPoint decision(int job, int op, int machine, double ready_time) const {
    DecisionPoint p;
    p.features = compute_features(state_, inst_, job, op, machine, ready_time);
    p.due_date = inst_.jobs[static_cast<std::size_t>(job)].due_date;
    p.ready_time = ready_time;
    p.job = job;
    p.op = op;
    p.machine = machine;
    return p;
  }

  void route(const RoutingRequest& r) {
    const auto& eligible =
        inst_.jobs[static_cast<std::size_t>(r.job)].ops[static_cast<std::size_t>(r.op)].eligible;
    priorities_.clear();
    for (int m : eligible) {
      priorities_.push_back(policy_.routing_priority(decision(r.job, r.op, m, state_.now)));
    }
    // eligible is ascending, so ties resolve to the lowest machine index.
    const int dest = eligible[select_min(priorities_)];
    const double arrival = state_.now + inst_.transport_time(r.from, dest);
    if (arrival == state_.now) {
      enqueue(dest, {r.job, r.op, arrival});
    } else {
      events_.push({arrival, EventKind::kArrival, r.job, r.op, dest});
    }
  }

  void dispatch_idle_machines() {
    for (int m = 0; m < inst_.num_machines(); ++m) {
      MachineState& ms = state_.machines[static_cast<std::size_t>(m)];
      if (ms.busy || ms.queue.empty()) continue;
      std::size_t best = 0;
      double best_value = 0.0;
      for (std::size_t i = 0; i < ms.queue.size(); ++i) {
        const QueuedOp& q = ms.queue[i];
        const double v = policy_.sequencing_priority(decision(q.job, q.op, m, q.arrival));
        if (i == 0 || v < best_value ||
            (v == best_value && std::tie(q.job, q.op) < std::tie(ms.queue[best].job,
                                                                 ms.queue[best].op))) {
          best = i;
          best_value = v;
        }
      }
      const QueuedOp chosen = ms.queue[best];
      ms.queue.erase(ms.queue.begin() + static_cast<std::ptrdiff_t>(best));
      const double pt = inst_.processing_time(chosen.job, chosen.op, m);
      ms.queued_work = ms.queue.empty() ? 0.0 : ms.queued_work - pt;
      ms.busy = true;
      const double end = state_.now + pt;
      result_.schedule.push_back({chosen.job, chosen.op, m, state_.now, end});
      events_.push({end, EventKind::kCompletion, chosen.job, chosen.op, m});
    }
  }

  const Instance& inst_;
  const Policy& policy_;
  ShopState state_;
  std::priority_queue<Event, std::vector<Event>, Later> events_;
  std::vector<double> priorities_;
  SimResult result_;
};

}  // namespace

SimResult run_simulation(const Instance& inst, const Policy& policy, Objective objective) {
  return Simulation(inst, policy).run(objective);
}

SimResult run_simulation(const Instance& inst, const Heuristic& h, Objective objective) {
  const HeuristicPolicy policy(h);
  return run_simulation(inst, policy, objective);
}

double objective(const SimResult& result, Objective kind) {
  if (result.jobs.empty()) return 0.0;
  double max_flow = -std::numeric_limits<double>::infinity();
  double sum_flow = 0.0;
  double sum_tardy = 0.0;
  for (const JobOutcome& j : result.jobs) {
    const double flow = j.completion - j.release;
    max_flow = std::max(max_flow, flow);
    sum_flow += flow;
    sum_tardy += std::max(0.0, j.completion - j.due_date);
  }
  const auto n = static_cast<double>(result.jobs.size());
  switch (kind) {
    case Objective::kFmax:
      return max_flow;
    case Objective::kFmean:
      return sum_flow / n;
    case Objective::kTmean:
      return sum_tardy / n;
  }
  return 0.0;
}

}  // namespace transgp
