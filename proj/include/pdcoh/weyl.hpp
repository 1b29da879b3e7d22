#ifndef PDCOH_WEYL_HPP
#define PDCOH_WEYL_HPP

#include <vector>

#include "pdcoh/rational.hpp"
#include "pdcoh/rootdata.hpp"

namespace pdcoh {

// Default cap for the full enumeration; overridable through the environment
// variable PDCOH_WEYL_BOUND.
inline constexpr long kDefaultWeylBound = 51840;

struct WeylElement {
    IMat matrix;            // action on the cocharacter lattice
    std::vector<int> word;  // canonical (lexicographically least) reduced word
    int length = 0;
};

struct KostantEntry {
    std::vector<int> word;  // canonical reduced word of the minimal representative
    int length = 0;
    QVec image;             // w(mu)
};

struct KostantSet {
    QVec mu;
    std::vector<KostantEntry> entries;  // ordered by (length, word)
};

struct GaloisOrbit {
    std::vector<int> members;  // indices into KostantSet::entries, ascending
    int length = 0;            // common Weyl length
    int size = 0;
};

// Full enumeration; throws Error{GroupTooLarge} past the bound.  A negative
// bound means "use the configured default" (PDCOH_WEYL_BOUND or 51840).
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum, long bound = -1);

long weyl_enumeration_bound();  // kDefaultWeylBound or PDCOH_WEYL_BOUND

// Minimal-length coset representatives for W / Stab(mu), found by breadth
// first search on the orbit W . mu.  Deterministic: simple reflections are
// explored in ascending index order and the canonical word of an entry is the
// lexicographically least reduced word.
KostantSet kostant_representatives(const RootDatum& datum, const QVec& mu);

// Orbit partition of W^mu under w -> tau w tau^{-1} (equivalently, on images,
// w(mu) -> tau(w(mu))).  Orbits are sorted by (length, least member index).
std::vector<GaloisOrbit> galois_orbits(const RootDatum& datum, const KostantSet& kset,
                                       const DiagramAutomorphism& tau);

// Inversion count |{beta > 0 : w(beta) < 0}| for the word acting on Phi+.
int inversion_count(const RootDatum& datum, const std::vector<int>& word);

// w(v) for a cocharacter v, applying the word right-to-left.
QVec apply_word_cochar(const RootDatum& datum, const std::vector<int>& word, const QVec& v);

IMat word_matrix(const RootDatum& datum, const std::vector<int>& word);

}  // namespace pdcoh

#endif
