#include "transgp/sim/audit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace transgp {

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string op_name(int job, int op) {
  return "O(" + std::to_string(job) + "," + std::to_string(op) + ")";
}

}  // namespace

std::vector<std::string> audit_schedule(const Instance& inst, const SimResult& result) {
  std::vector<std::string> issues;
  // slot[job][op] -> index into schedule, -1 if never run
  std::vector<std::vector<int>> slot(inst.jobs.size());
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) slot[j].assign(inst.jobs[j].ops.size(), -1);

  for (std::size_t i = 0; i < result.schedule.size(); ++i) {
    const ScheduledOp& s = result.schedule[i];
    if (s.job < 0 || static_cast<std::size_t>(s.job) >= inst.jobs.size() || s.op < 0 ||
        static_cast<std::size_t>(s.op) >= inst.jobs[static_cast<std::size_t>(s.job)].ops.size()) {
      issues.push_back("schedule entry " + std::to_string(i) + " names a missing operation");
      continue;
    }
    int& seen = slot[static_cast<std::size_t>(s.job)][static_cast<std::size_t>(s.op)];
    if (seen >= 0) issues.push_back(op_name(s.job, s.op) + " ran more than once");
    seen = static_cast<int>(i);
    const auto& eligible =
        inst.jobs[static_cast<std::size_t>(s.job)].ops[static_cast<std::size_t>(s.op)].eligible;
    if (std::find(eligible.begin(), eligible.end(), s.machine) == eligible.end()) {
      issues.push_back(op_name(s.job, s.op) + " ran on ineligible machine " +
                       std::to_string(s.machine));
      continue;
    }
    if (!close(s.end - s.start, inst.processing_time(s.job, s.op, s.machine))) {
      issues.push_back(op_name(s.job, s.op) + " was preempted or stretched");
    }
  }

  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    const Job& job = inst.jobs[j];
    int prev_machine = inst.entry();
    double ready = job.release;
    bool complete = true;
    for (std::size_t o = 0; o < job.ops.size(); ++o) {
      const int idx = slot[j][o];
      if (idx < 0) {
        issues.push_back(op_name(static_cast<int>(j), static_cast<int>(o)) + " never ran");
        complete = false;
        break;
      }
      const ScheduledOp& s = result.schedule[static_cast<std::size_t>(idx)];
      const double earliest = ready + inst.transport_time(prev_machine, s.machine);
      if (s.start < earliest && !close(s.start, earliest)) {
        issues.push_back(op_name(s.job, s.op) + " started before its predecessor and transport");
      }
      prev_machine = s.machine;
      ready = s.end;
    }
    if (!complete || j >= result.jobs.size()) continue;
    const double expected = ready + inst.transport_time(prev_machine, inst.exit());
    if (!close(result.jobs[j].completion, expected)) {
      issues.push_back("job " + std::to_string(j) + " completion does not match its last op");
    }
    if (result.jobs[j].completion < job.release) {
      issues.push_back("job " + std::to_string(j) + " completed before release");
    }
  }

  std::vector<std::vector<const ScheduledOp*>> by_machine(inst.machines.size());
  for (const ScheduledOp& s : result.schedule) {
    if (s.machine >= 0 && static_cast<std::size_t>(s.machine) < by_machine.size()) {
      by_machine[static_cast<std::size_t>(s.machine)].push_back(&s);
    }
  }
  for (std::size_t m = 0; m < by_machine.size(); ++m) {
    auto& ops = by_machine[m];
    std::sort(ops.begin(), ops.end(),
              [](const ScheduledOp* a, const ScheduledOp* b) { return a->start < b->start; });
    for (std::size_t i = 1; i < ops.size(); ++i) {
      if (ops[i]->start < ops[i - 1]->end && !close(ops[i]->start, ops[i - 1]->end)) {
        issues.push_back("machine " + std::to_string(m) + " overlaps " +
                         op_name(ops[i - 1]->job, ops[i - 1]->op) + " and " +
                         op_name(ops[i]->job, ops[i]->op));
      }
    }
  }
  return issues;
}

}  // namespace transgp
