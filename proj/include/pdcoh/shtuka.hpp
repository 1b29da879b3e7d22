#ifndef PDCOH_SHTUKA_HPP
#define PDCOH_SHTUKA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdcoh/isocrystal.hpp"
#include "pdcoh/rational.hpp"
#include "pdcoh/rootdata.hpp"
#include "pdcoh/weyl.hpp"

namespace pdcoh {

// Relative simple roots of the inner form J together with the dual-basis
// coweights omega_alpha used in the semistability pairings.  Characters are
// rational vectors on X_*(T); each omega_alpha is the P-orthogonal-to-center
// representative and is fixed by the datum's Galois automorphism.
struct RelativeRootData {
    std::vector<QVec> delta;   // relative simple roots (characters)
    std::vector<QVec> omega;   // dual-basis coweights (cocharacters)
    std::vector<std::string> labels;

    std::size_t size() const { return delta.size(); }
};

enum class GroupPreset { GLnD, GeneralQuasiSplit };

struct OrbitInvariant {
    int orbit_id = 0;
    std::uint32_t subset_I = 0;  // bitmask over the relative simple roots
    int n = 0;                   // 2 l_[w] + |Delta_J \ I_[w]|
};

struct LocalShtukaDatum {
    RootDatum g;
    DiagramAutomorphism tau;
    int s = 1;
    QVec mu;
    QVec nu;
    RelativeRootData j;
    std::string provenance;   // "preset" or "explicit"
    std::string preset_name;  // e.g. "drinfeld:2", empty for explicit data
    GroupPreset group_preset = GroupPreset::GeneralQuasiSplit;

    // derived combinatorics, filled by build_datum
    KostantSet kset;
    std::vector<GaloisOrbit> orbits;
    std::vector<OrbitInvariant> invariants;
    int dim_f = 0;  // max length over W^mu

    std::size_t delta_j_size() const { return j.size(); }
    std::uint32_t full_subset() const { return (j.size() >= 32) ? 0 : ((1u << j.size()) - 1u); }
};

// J = GL_{n/m}(D_lambda) for a basic isoclinic slope lambda = k/m in lowest
// terms: relative type A_{n/m - 1} with block characters of block size m.
RelativeRootData derive_J_gln(const RootDatum& gl, int n, const Rat& lambda);

// For nu = 0 (so J = G, quasi-split): relative data obtained by folding the
// absolute simple roots along the tau-orbits.
RelativeRootData derive_J_folded(const RootDatum& datum, const DiagramAutomorphism& tau);

// Validates all invariants (dominance, basicness, Galois fixity, the
// dual-basis condition, centrality of the omegas, acceptability) and computes
// the orbit combinatorics.  Throws EmptyPeriodDomain, GaloisIncompatible,
// DualBasisViolation, ... on bad input.
LocalShtukaDatum build_datum(RootDatum g, DiagramAutomorphism tau, int s, QVec mu, QVec nu,
                             RelativeRootData j, const std::string& provenance,
                             const std::string& preset_name = "");

// Presets.
LocalShtukaDatum preset_drinfeld(int d);
LocalShtukaDatum preset_gln_basic(int n, const std::vector<Int>& mu, const Rat& lambda);
LocalShtukaDatum preset_quadric(int n);
LocalShtukaDatum preset_split(const CartanSpec& spec, const QVec& mu);

// "drinfeld:2", "gln_basic:2:1,0:1/2", "quadric:7", "split:B3:1,0,0".
LocalShtukaDatum build_preset(const std::string& text);

// Recompute I_[w] from every member of every orbit; the engine calls this at
// datum build time and throws OrbitInconsistency if members disagree.
std::vector<OrbitInvariant> orbit_invariants(const LocalShtukaDatum& datum);

std::string subset_to_string(std::uint32_t mask, const std::vector<std::string>& labels);

}  // namespace pdcoh

#endif
