#ifndef PDCOH_SELFTEST_HPP
#define PDCOH_SELFTEST_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdcoh/commands.hpp"
#include "pdcoh/isocrystal.hpp"
#include "pdcoh/steinberg.hpp"
#include "pdcoh/weyl.hpp"

namespace pdcoh::selftest {

// Independent oracles.  These deliberately re-derive results along different
// algorithmic routes than the engine and must stay that way.
namespace oracle {

struct CosetEntry {
    QVec image;
    int length;
};

// Filter the fully enumerated Weyl group for coset-minimal elements.
std::vector<CosetEntry> kostant_by_filtration(const RootDatum& datum, const QVec& mu,
                                              long bound = 2000000);

// Orbit of the simple roots under all simple reflections, intersected with
// the positive cone.
int positive_count_by_orbit(const RootDatum& datum);

// Value-by-value search over the rational grid, pruned by prefix dominance.
std::vector<QVec> acceptable_set_brute(int n, const std::vector<Int>& mu);

// Hand-transcribed golden Ext table (trichotomy plus hypothesis verdicts).
ExtAnswer ext_golden(std::uint32_t I, std::uint32_t J, int delta_size, long p, GroupPreset preset);

// Counts homomorphisms from the mod-p^n-powers quotient of Q_p^* by explicit
// generator analysis.
Int hom_units_by_structure(long p, int n);

}  // namespace oracle

// The regression suite of data used by the consistency criteria.
std::vector<LocalShtukaDatum> standard_suite();
LocalShtukaDatum explicit_j_datum();          // GL_4, lambda = 1/2, j given by hand
LocalShtukaDatum quasi_split_folded_datum();  // GL_4 with the a1<->a3 flip

bool drinfeld_duality_check(int d, std::string* detail = nullptr);

// Named machine reports used for the byte-stability and golden-file checks.
std::vector<std::pair<std::string, std::string>> golden_reports();

struct CriterionResult {
    std::string id;
    std::string label;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite; golden_dir holds the committed machine
// reports for the regression half of the determinism criterion.
std::vector<CriterionResult> run_acceptance(const std::string& golden_dir);

}  // namespace pdcoh::selftest

#endif
