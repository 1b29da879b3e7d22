#ifndef PDCOH_STEINBERG_HPP
#define PDCOH_STEINBERG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdcoh/rational.hpp"
#include "pdcoh/shtuka.hpp"

namespace pdcoh {

// Grothendieck-group currency: integer multiplicities over the constituents
// v_K, K a subset of the relative simple roots.
struct ConstituentVector {
    std::map<std::uint32_t, long long> mult;

    void add(std::uint32_t subset, long long m);
    bool is_zero() const;
    bool operator==(const ConstituentVector&) const = default;
};

enum class HomValue { Zero, RankOne };

enum class ExtValue { Zero, FreeRankOne, HomUnitsOfF, SelfCase, OutsideTheorem };

struct ExtAnswer {
    ExtValue value = ExtValue::Zero;
    std::optional<int> torsion_bound;   // only for OutsideTheorem
    std::vector<std::string> trail;     // which rule licensed the answer
};

const char* ext_value_name(ExtValue v);

void require_prime(long p);  // throws Error{BadIndex}

// [i_I] = n * sum_{I subset K} [v_K]  (constituents of the induced rep).
ConstituentVector constituents_i(std::uint32_t I, int delta_size, int n);

// Alternating sum over K >= I of constituents_i(K, n) collapses to n [v_I].
bool resolution_euler_check(std::uint32_t I, int delta_size, int n);

HomValue hom(std::uint32_t I, std::uint32_t J);

// The Ext^1 decision table between generalized Steinberg representations
// v_I and v_J, transcribed from the final statements only; every branch
// records the rule that licensed it.
ExtAnswer ext1(std::uint32_t I, std::uint32_t J, int delta_size, long p, GroupPreset preset);

// |Hom(Q_p^*, Z/p^n)| = p^{2n} for odd p; throws EvenPrimeUnsupported for
// p = 2 (the unit group of Q_2 has a different shape).
Int hom_units_count(long p, int n);

// Center data for the Tits indices of relative rank 2 over a nonarchimedean
// local field: (center of G_sc, center of Z_sc) as products of cyclic groups.
// Orders are kept as strings since one row is parameterized by an integer d.
struct TitsCenters {
    std::vector<std::string> center_gsc;
    std::vector<std::string> center_zsc;
};

TitsCenters tits_table_lookup(const std::string& name);
std::vector<std::string> tits_table_names();

}  // namespace pdcoh

#endif
