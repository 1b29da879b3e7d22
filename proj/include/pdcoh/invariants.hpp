#ifndef PDCOH_INVARIANTS_HPP
#define PDCOH_INVARIANTS_HPP

#include <string>
#include <vector>

#include "pdcoh/cohomology.hpp"
#include "pdcoh/shtuka.hpp"

namespace pdcoh {

struct InvariantCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The cross-module consistency suite run by the `check` command: orbit
// constancy, minimality of I_[w], Omega monotonicity and intersection,
// central-shift invariance, per-factor rescaling stability, top-degree
// summand, rank sums, the E2-total-equals-boundary comparison, and the
// Poincare / dimension bookkeeping.
std::vector<InvariantCheck> run_invariant_suite(const LocalShtukaDatum& datum);

bool all_pass(const std::vector<InvariantCheck>& checks);

}  // namespace pdcoh

#endif
