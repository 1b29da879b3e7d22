#ifndef PDCOH_COHOMOLOGY_HPP
#define PDCOH_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdcoh/shtuka.hpp"
#include "pdcoh/steinberg.hpp"

namespace pdcoh {

enum class CoeffTag { ModPn, Zp };

// v_I or i_I over a subset of the relative simple roots; v_Delta and i_Delta
// both denote the trivial representation and are normalized to (i, Delta).
struct RepSymbol {
    enum Kind { IndKind, SteinbergKind } kind = IndKind;
    std::uint32_t I = 0;

    static RepSymbol v(std::uint32_t I, std::uint32_t full);
    static RepSymbol ind(std::uint32_t I);
    static RepSymbol trivial(std::uint32_t full);
    bool is_trivial(std::uint32_t full) const { return kind == IndKind && I == full; }
    bool operator==(const RepSymbol&) const = default;
};

struct GaloisFactor {
    int rank = 1;
    int twist = 0;  // stored as -l, never positive here
    bool operator==(const GaloisFactor&) const = default;
};

struct CohomologySummand {
    int degree = 0;
    RepSymbol rep;
    GaloisFactor galois;
    int orbit_id = 0;
    bool operator==(const CohomologySummand&) const = default;
};

struct GradedRepSum {
    std::vector<CohomologySummand> summands;  // canonically sorted
    bool boundary_empty = false;
    bool operator==(const GradedRepSum&) const = default;
};

// (degree, |I|, lexicographic I, twist, rank) with deterministic tiebreaks.
void canonicalize(GradedRepSum& sum);

struct SpectralEntry {
    RepSymbol rep;
    GaloisFactor galois;
    int orbit_id = 0;
};

struct SpectralPage {
    int page = 1;
    std::map<std::pair<int, int>, std::vector<SpectralEntry>> cells;  // (i, j) -> entries
};

struct Stratum {
    std::uint32_t subset = 0;
    bool nonempty = false;  // Omega_I != {} i.e. Y_I has cells
};

// Grothendieck-group residual: multiplicity per (constituent v_K, Tate twist).
using TwistedConstituents = std::map<std::pair<std::uint32_t, int>, long long>;

struct EulerReport {
    bool pass = false;
    TwistedConstituents residual;
    long p = 0;
    int n = 1;
};

enum class SplittingVerdict { ProvenByTheorem, ConjecturalForThisP };

struct SplittingPair {
    std::string source;  // "filtration", "boundary-i-vs-v", "boundary-trivial-vs-v"
    int orbit_a = -1;    // -1 for the synthetic trivial side
    int orbit_b = -1;
    std::uint32_t I = 0;
    std::uint32_t J = 0;
    ExtAnswer answer;
};

struct SplittingReport {
    SplittingVerdict verdict = SplittingVerdict::ProvenByTheorem;
    long p = 0;
    std::vector<SplittingPair> pairs;
};

bool subset_lex_less(std::uint32_t a, std::uint32_t b);

// { orbits [w] with I_[w] contained in I }.
std::set<int> omega_set(const LocalShtukaDatum& datum, std::uint32_t I);

// Cohomology of the Schubert variety Y_I: one rank-r twist(-l) class in
// degree 2l per orbit of Omega_I; the J-action is not attached at this level.
GradedRepSum schubert_cohomology(const LocalShtukaDatum& datum, std::uint32_t I);

// Cohomology of the complement of the period domain, split into generalized
// Steinberg blocks.
GradedRepSum boundary_cohomology(const LocalShtukaDatum& datum);

// The main decomposition: v_{I_[w]} (x) rho_[w] in degree 2 l_[w] + |Delta \ I_[w]|.
GradedRepSum compactly_supported_cohomology(const LocalShtukaDatum& datum, CoeffTag coeff);

std::pair<SpectralPage, SpectralPage> spectral_pages(const LocalShtukaDatum& datum);

std::vector<Stratum> strata(const LocalShtukaDatum& datum, int i);

// chi(H_c) + chi(boundary) - chi(flag) in the Grothendieck group of
// (constituent, twist) pairs; residual must vanish.
TwistedConstituents euler_residual(const GradedRepSum& hc, const GradedRepSum& boundary,
                                   const GradedRepSum& flag, std::uint32_t full_subset, int n);

EulerReport euler_consistency_check(const LocalShtukaDatum& datum, long p, int n);

// Enumerates every Ext-vanishing hypothesis needed to split the boundary
// filtration for this datum and checks each against the Ext table.
SplittingReport splitting_hypothesis_check(const LocalShtukaDatum& datum, long p);

}  // namespace pdcoh

#endif
