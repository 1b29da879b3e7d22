#ifndef PDCOH_COMMANDS_HPP
#define PDCOH_COMMANDS_HPP

#include <string>
#include <vector>

#include "pdcoh/invariants.hpp"
#include "pdcoh/report.hpp"

namespace pdcoh {

// Machine-report builders; the CLI and the regression harness share them so
// that golden files and command output cannot drift apart.

Json report_cohomology(const LocalShtukaDatum& datum, CoeffTag coeff, long p, int n);
Json report_boundary(const LocalShtukaDatum& datum);
Json report_schubert(const LocalShtukaDatum& datum, std::uint32_t subset);
Json report_strata(const LocalShtukaDatum& datum, int i);
Json report_kottwitz(int n, const std::vector<Int>& mu);
Json report_ext(int delta_size, std::uint32_t I, std::uint32_t J, long p, GroupPreset preset,
                int n);
Json report_check(const LocalShtukaDatum& datum, const std::vector<long>& primes,
                  const std::vector<int>& exponents);

}  // namespace pdcoh

#endif
