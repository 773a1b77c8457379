#ifndef TRANSGP_SIM_AUDIT_HPP_
#define TRANSGP_SIM_AUDIT_HPP_

#include <string>
#include <vector>

#include "transgp/sim/instance.hpp"
#include "transgp/sim/simulator.hpp"

namespace transgp {

// Post-hoc check of a finished schedule: every op ran exactly once on an
// eligible machine for exactly its processing time, machines never overlap,
// ops respect precedence plus transport, and job completions include the exit
// transport. Returns one message per violation (empty when clean).
std::vector<std::string> audit_schedule(const Instance& inst, const SimResult& result);

}  // namespace transgp

#endif  // TRANSGP_SIM_AUDIT_HPP_
