#include "pdcoh/steinberg.hpp"

#include <bit>

#include "pdcoh/errors.hpp"

namespace pdcoh {

void ConstituentVector::add(std::uint32_t subset, long long m) {
    if (m == 0) return;
    auto it = mult.find(subset);
    if (it == mult.end()) {
        mult[subset] = m;
    } else {
        it->second += m;
        if (it->second == 0) mult.erase(it);
    }
}

bool ConstituentVector::is_zero() const { return mult.empty(); }

const char* ext_value_name(ExtValue v) {
    switch (v) {
        case ExtValue::Zero: return "Zero";
        case ExtValue::FreeRankOne: return "FreeRankOne";
        case ExtValue::HomUnitsOfF: return "HomUnitsOfF";
        case ExtValue::SelfCase: return "SelfCase";
        case ExtValue::OutsideTheorem: return "OutsideTheorem";
    }
    return "?";
}

static void check_subset(std::uint32_t I, int delta_size) {
    if (delta_size < 0 || delta_size >= 32)
        throw Error(ErrorKind::BadSubset, "delta size out of range");
    std::uint32_t full = delta_size == 0 ? 0u : ((1u << delta_size) - 1u);
    if (I & ~full) throw Error(ErrorKind::BadSubset, "subset extends beyond Delta");
}

void require_prime(long p) {
    if (p < 2) throw Error(ErrorKind::BadIndex, "p must be a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorKind::BadIndex, "p must be a prime");
}

ConstituentVector constituents_i(std::uint32_t I, int delta_size, int n) {
    check_subset(I, delta_size);
    if (n < 1) throw Error(ErrorKind::BadIndex, "multiplicity parameter n must be >= 1");
    std::uint32_t full = delta_size == 0 ? 0u : ((1u << delta_size) - 1u);
    std::uint32_t complement = full & ~I;
    ConstituentVector out;
    // iterate over subsets of the complement
    std::uint32_t sub = complement;
    while (true) {
        out.add(I | sub, n);
        if (sub == 0) break;
        sub = (sub - 1) & complement;
    }
    return out;
}

bool resolution_euler_check(std::uint32_t I, int delta_size, int n) {
    check_subset(I, delta_size);
    std::uint32_t full = delta_size == 0 ? 0u : ((1u << delta_size) - 1u);
    std::uint32_t complement = full & ~I;
    ConstituentVector sum;
    std::uint32_t sub = complement;
    while (true) {
        int sign = (std::popcount(sub) % 2 == 0) ? 1 : -1;
        for (const auto& [k, m] : constituents_i(I | sub, delta_size, n).mult)
            sum.add(k, sign * m);
        if (sub == 0) break;
        sub = (sub - 1) & complement;
    }
    ConstituentVector expected;
    expected.add(I, n);
    return sum == expected;
}

HomValue hom(std::uint32_t I, std::uint32_t J) { return I == J ? HomValue::RankOne : HomValue::Zero; }

ExtAnswer ext1(std::uint32_t I, std::uint32_t J, int delta_size, long p, GroupPreset preset) {
    check_subset(I, delta_size);
    check_subset(J, delta_size);
    require_prime(p);
    ExtAnswer ans;
    bool gl = preset == GroupPreset::GLnD;
    const char* group_tag = gl ? "GL-type inner form" : "general quasi-split group";

    if (I == J) {
        ans.value = ExtValue::SelfCase;
        ans.trail = {"self-extensions of a generalized Steinberg representation are delegated to the literature"};
        return ans;
    }
    int szI = std::popcount(I), szJ = std::popcount(J);
    int gap = szI > szJ ? szI - szJ : szJ - szI;
    std::uint32_t sym_diff = I ^ J;

    if (std::popcount(sym_diff) == 1 && (I & J) == I) {
        // J = I + one root (ascending adjacent case)
        if (p >= 5) {
            ans.value = ExtValue::FreeRankOne;
            ans.trail = {"ascending adjacent case: free of rank one (mild hypothesis holds for p >= 5)"};
        } else if (gl) {
            ans.value = ExtValue::FreeRankOne;
            ans.trail = {"ascending adjacent case: free of rank one for GL-type inner forms at every p"};
        } else {
            ans.value = ExtValue::OutsideTheorem;
            ans.torsion_bound = (p == 3) ? 3 : 8;
            ans.trail = {std::string("ascending adjacent case unsettled for a ") + group_tag +
                         " at p = " + std::to_string(p),
                         "the group is " + std::to_string(ans.torsion_bound.value()) + "-torsion"};
        }
        return ans;
    }
    if (std::popcount(sym_diff) == 1 && (I & J) == J) {
        // I = J + one root (descending adjacent case)
        if (gl && p != 2) {
            ans.value = ExtValue::HomUnitsOfF;
            ans.trail = {"descending adjacent case: Hom(F^*, R) for GL-type inner forms away from p = 2"};
        } else if (!gl && p != 2) {
            ans.value = ExtValue::HomUnitsOfF;
            ans.trail = {"descending adjacent case: reduction to rank one identifies the group with Hom(F^*, R) for p != 2"};
        } else {
            ans.value = ExtValue::OutsideTheorem;
            ans.torsion_bound = 8;
            ans.trail = {"descending adjacent case open at p = 2 (the division algebra may be Q_2)",
                         "the group is 8-torsion"};
        }
        return ans;
    }

    // symmetric difference >= 2
    if (p >= 5) {
        ans.value = ExtValue::Zero;
        ans.trail = {"vanishing for symmetric difference >= 2 at p >= 5"};
    } else if (p == 3 && gap >= 2) {
        ans.value = ExtValue::Zero;
        ans.trail = {"vanishing at p = 3 under the stronger assumption | |I| - |J| | >= 2"};
    } else if (p == 2 && gl && gap >= 2) {
        ans.value = ExtValue::Zero;
        ans.trail = {"vanishing at p = 2 for GL-type inner forms under | |I| - |J| | >= 2"};
    } else {
        ans.value = ExtValue::OutsideTheorem;
        ans.torsion_bound = (p == 3) ? 3 : 8;
        ans.trail = {std::string("no vanishing statement covers p = ") + std::to_string(p) +
                         " with size gap " + std::to_string(gap) + " for a " + group_tag,
                     "the group is " + std::to_string(ans.torsion_bound.value()) + "-torsion"};
    }
    return ans;
}

Int hom_units_count(long p, int n) {
    if (p == 2)
        throw Error(ErrorKind::EvenPrimeUnsupported,
                    "the unit group of Q_2 has a different shape; p = 2 is not evaluated");
    require_prime(p);
    if (n < 1) throw Error(ErrorKind::BadIndex, "need an odd prime p and n >= 1");
    // Q_p^* = p^Z x mu_{p-1} x (1 + p Z_p), the last factor pro-p cyclic.
    Int pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    Int count = pn;                    // images of the uniformizer
    count *= gcd(Int(p - 1), pn);      // torsion part, trivial since gcd = 1
    count *= pn;                       // images of a topological generator of 1 + pZ_p
    return count;
}

namespace {

struct TitsRow {
    const char* name;
    std::vector<std::string> gsc;
    std::vector<std::string> zsc;
};

const std::vector<TitsRow>& tits_rows() {
    static const std::vector<TitsRow> rows = {
        {"1A_{3d-1,2}^{(d)}", {"3d"}, {"d", "d", "d"}},
        {"2A_{3,2}^{(1)}/2D_{3,2}^{(1)}", {"4"}, {}},
        {"2A_{4,2}^{(1)}", {"5"}, {}},
        {"2A_{5,2}^{(1)}", {"6"}, {"2"}},
        {"B_{2,2}/C_{2,2}^{(1)}", {"2"}, {}},
        {"B_{3,2}", {"2"}, {"2"}},
        {"C_{4,2}^{(2)}", {"2"}, {"2", "2"}},
        {"C_{5,2}^{(2)}", {"2"}, {"2", "2", "2"}},
        {"1D_{4,2}^{(1)}/1D_{4,2}^{(2)}", {"2", "2"}, {"2", "2"}},
        {"1D_{7,2}^{(2)}", {"4"}, {"2", "2", "4"}},
        {"2D_{5,2}^{(2)}", {"4"}, {"2", "2"}},
        {"2D_{6,2}^{(2)}", {"2", "2"}, {"2", "2", "2", "2"}},
        {"3D_{4,2}^2/6D_{4,2}^2", {"2", "2"}, {}},
        {"1E_{6,2}^{16}", {"3"}, {"3", "3"}},
        {"G_{2,2}^0", {}, {}},
    };
    return rows;
}

}  // namespace

TitsCenters tits_table_lookup(const std::string& name) {
    for (const auto& row : tits_rows())
        if (name == row.name) return {row.gsc, row.zsc};
    throw Error(ErrorKind::UnknownIndex, "unknown Tits index '" + name + "'");
}

std::vector<std::string> tits_table_names() {
    std::vector<std::string> names;
    for (const auto& row : tits_rows()) names.push_back(row.name);
    return names;
}

}  // namespace pdcoh
