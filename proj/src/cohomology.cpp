#include "pdcoh/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "pdcoh/errors.hpp"

namespace pdcoh {

RepSymbol RepSymbol::v(std::uint32_t I, std::uint32_t full) {
    if (I == full) return trivial(full);
    return {SteinbergKind, I};
}

RepSymbol RepSymbol::ind(std::uint32_t I) { return {IndKind, I}; }

RepSymbol RepSymbol::trivial(std::uint32_t full) { return {IndKind, full}; }

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
    // lexicographic on the ascending sequences of set bits
    while (a || b) {
        if (a == b) return false;
        if (!a) return true;   // a is a strict prefix of b
        if (!b) return false;
        int ba = std::countr_zero(a), bb = std::countr_zero(b);
        if (ba != bb) return ba < bb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

static void validate_subset(const LocalShtukaDatum& datum, std::uint32_t I) {
    if (I & ~datum.full_subset())
        throw Error(ErrorKind::BadSubset, "subset extends beyond the relative simple roots");
}

void canonicalize(GradedRepSum& sum) {
    std::sort(sum.summands.begin(), sum.summands.end(),
              [](const CohomologySummand& a, const CohomologySummand& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  int pa = std::popcount(a.rep.I), pb = std::popcount(b.rep.I);
                  if (pa != pb) return pa < pb;
                  if (a.rep.I != b.rep.I) return subset_lex_less(a.rep.I, b.rep.I);
                  if (a.galois.twist != b.galois.twist) return a.galois.twist < b.galois.twist;
                  if (a.galois.rank != b.galois.rank) return a.galois.rank < b.galois.rank;
                  if (a.rep.kind != b.rep.kind) return a.rep.kind < b.rep.kind;
                  return a.orbit_id < b.orbit_id;
              });
}

static void canonical_sort(GradedRepSum& sum) { canonicalize(sum); }

std::set<int> omega_set(const LocalShtukaDatum& datum, std::uint32_t I) {
    validate_subset(datum, I);
    std::set<int> out;
    for (const auto& inv : datum.invariants)
        if ((inv.subset_I & ~I) == 0) out.insert(inv.orbit_id);
    return out;
}

GradedRepSum schubert_cohomology(const LocalShtukaDatum& datum, std::uint32_t I) {
    GradedRepSum sum;
    for (int oid : omega_set(datum, I)) {
        const auto& orbit = datum.orbits[oid];
        CohomologySummand s;
        s.degree = 2 * orbit.length;
        s.rep = RepSymbol::trivial(datum.full_subset());
        s.galois = {orbit.size, -orbit.length};
        s.orbit_id = oid;
        sum.summands.push_back(s);
    }
    canonical_sort(sum);
    return sum;
}

GradedRepSum boundary_cohomology(const LocalShtukaDatum& datum) {
    GradedRepSum sum;
    std::uint32_t full = datum.full_subset();
    int delta_size = static_cast<int>(datum.delta_j_size());
    for (const auto& inv : datum.invariants) {
        const auto& orbit = datum.orbits[inv.orbit_id];
        int complement = delta_size - std::popcount(inv.subset_I);
        if (complement == 0) continue;  // I_[w] = Delta contributes nothing
        if (complement == 1) {
            CohomologySummand s;
            s.degree = 2 * orbit.length;
            s.rep = RepSymbol::ind(inv.subset_I);
            s.galois = {orbit.size, -orbit.length};
            s.orbit_id = inv.orbit_id;
            sum.summands.push_back(s);
        } else {
            CohomologySummand t;
            t.degree = 2 * orbit.length;
            t.rep = RepSymbol::trivial(full);
            t.galois = {orbit.size, -orbit.length};
            t.orbit_id = inv.orbit_id;
            sum.summands.push_back(t);
            CohomologySummand v;
            v.degree = 2 * orbit.length + complement - 1;
            v.rep = RepSymbol::v(inv.subset_I, full);
            v.galois = {orbit.size, -orbit.length};
            v.orbit_id = inv.orbit_id;
            sum.summands.push_back(v);
        }
    }
    sum.boundary_empty = sum.summands.empty();
    canonical_sort(sum);
    return sum;
}

GradedRepSum compactly_supported_cohomology(const LocalShtukaDatum& datum, CoeffTag coeff) {
    (void)coeff;  // Z/p^n and Z_p differ only in labels
    GradedRepSum sum;
    std::uint32_t full = datum.full_subset();
    for (const auto& inv : datum.invariants) {
        const auto& orbit = datum.orbits[inv.orbit_id];
        CohomologySummand s;
        s.degree = inv.n;
        s.rep = RepSymbol::v(inv.subset_I, full);
        s.galois = {orbit.size, -orbit.length};
        s.orbit_id = inv.orbit_id;
        sum.summands.push_back(s);
    }
    canonical_sort(sum);

    // Empirical top-degree description; verified per datum, never assumed.
    int top = 2 * datum.dim_f;
    int count = 0;
    for (const auto& s : sum.summands) {
        internal_check(s.degree <= top, "summand above twice the period-domain dimension");
        if (s.degree == top) {
            ++count;
            internal_check(s.rep.is_trivial(full) && s.galois.rank == 1 &&
                               s.galois.twist == -datum.dim_f,
                           "top-degree summand is not the expected Tate class");
        }
    }
    internal_check(count == 1, "the top degree does not carry exactly one summand");
    return sum;
}

std::pair<SpectralPage, SpectralPage> spectral_pages(const LocalShtukaDatum& datum) {
    int delta_size = static_cast<int>(datum.delta_j_size());
    if (delta_size == 0)
        throw Error(ErrorKind::EmptyBoundary,
                    "the boundary is empty: no spectral sequence for Delta_J = {}");
    std::uint32_t full = datum.full_subset();

    // subsets ordered by (size descending handled per column, lexicographic)
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 0; m <= full; ++m) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), subset_lex_less);

    SpectralPage e1{1, {}};
    for (std::uint32_t I : subsets) {
        int complement = delta_size - std::popcount(I);
        if (complement < 1) continue;
        int col = complement - 1;
        for (int oid : omega_set(datum, I)) {
            const auto& orbit = datum.orbits[oid];
            SpectralEntry entry{RepSymbol::ind(I), {orbit.size, -orbit.length}, oid};
            e1.cells[{col, 2 * orbit.length}].push_back(entry);
        }
    }
    for (auto& [pos, entries] : e1.cells) {
        (void)pos;
        std::sort(entries.begin(), entries.end(), [](const SpectralEntry& a, const SpectralEntry& b) {
            if (a.rep.I != b.rep.I) return subset_lex_less(a.rep.I, b.rep.I);
            return a.orbit_id < b.orbit_id;
        });
    }

    SpectralPage e2{2, {}};
    for (const auto& inv : datum.invariants) {
        const auto& orbit = datum.orbits[inv.orbit_id];
        int complement = delta_size - std::popcount(inv.subset_I);
        if (complement == 0) continue;
        if (complement == 1) {
            e2.cells[{0, 2 * orbit.length}].push_back(
                {RepSymbol::ind(inv.subset_I), {orbit.size, -orbit.length}, inv.orbit_id});
        } else {
            e2.cells[{0, 2 * orbit.length}].push_back(
                {RepSymbol::trivial(full), {orbit.size, -orbit.length}, inv.orbit_id});
            e2.cells[{complement - 1, 2 * orbit.length}].push_back(
                {RepSymbol::v(inv.subset_I, full), {orbit.size, -orbit.length}, inv.orbit_id});
        }
    }
    for (auto& [pos, entries] : e2.cells) {
        (void)pos;
        std::sort(entries.begin(), entries.end(), [](const SpectralEntry& a, const SpectralEntry& b) {
            if (a.rep.I != b.rep.I) return subset_lex_less(a.rep.I, b.rep.I);
            return a.orbit_id < b.orbit_id;
        });
    }
    return {e1, e2};
}

std::vector<Stratum> strata(const LocalShtukaDatum& datum, int i) {
    int delta_size = static_cast<int>(datum.delta_j_size());
    if (i < 1 || i > delta_size)
        throw Error(ErrorKind::BadIndex, "stratum index must satisfy 1 <= i <= |Delta_J|");
    std::uint32_t full = datum.full_subset();
    std::vector<Stratum> out;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (delta_size - std::popcount(m) != i) continue;
        out.push_back({m, !omega_set(datum, m).empty()});
    }
    std::sort(out.begin(), out.end(),
              [](const Stratum& a, const Stratum& b) { return subset_lex_less(a.subset, b.subset); });
    return out;
}

namespace {

void accumulate(TwistedConstituents& acc, const GradedRepSum& sum, std::uint32_t full,
                int delta_size, int n, int global_sign) {
    for (const auto& s : sum.summands) {
        int sign = (s.degree % 2 == 0 ? 1 : -1) * global_sign;
        long long weight = static_cast<long long>(sign) * s.galois.rank;
        if (s.rep.kind == RepSymbol::SteinbergKind) {
            auto key = std::make_pair(s.rep.I, s.galois.twist);
            acc[key] += weight * n;
            if (acc[key] == 0) acc.erase(key);
        } else {
            for (const auto& [k, m] : constituents_i(s.rep.I, delta_size, n).mult) {
                auto key = std::make_pair(k, s.galois.twist);
                acc[key] += weight * m;
                if (acc[key] == 0) acc.erase(key);
            }
        }
    }
    (void)full;
}

}  // namespace

TwistedConstituents euler_residual(const GradedRepSum& hc, const GradedRepSum& boundary,
                                   const GradedRepSum& flag, std::uint32_t full_subset, int n) {
    int delta_size = std::popcount(full_subset);
    TwistedConstituents acc;
    accumulate(acc, hc, full_subset, delta_size, n, +1);
    accumulate(acc, boundary, full_subset, delta_size, n, +1);
    accumulate(acc, flag, full_subset, delta_size, n, -1);
    return acc;
}

EulerReport euler_consistency_check(const LocalShtukaDatum& datum, long p, int n) {
    require_prime(p);
    if (n < 1) throw Error(ErrorKind::BadIndex, "need a prime p and n >= 1");
    GradedRepSum hc = compactly_supported_cohomology(datum, CoeffTag::ModPn);
    GradedRepSum boundary = boundary_cohomology(datum);
    GradedRepSum flag = schubert_cohomology(datum, datum.full_subset());
    EulerReport report;
    report.p = p;
    report.n = n;
    report.residual = euler_residual(hc, boundary, flag, datum.full_subset(), n);
    report.pass = report.residual.empty();
    return report;
}

SplittingReport splitting_hypothesis_check(const LocalShtukaDatum& datum, long p) {
    require_prime(p);
    SplittingReport report;
    report.p = p;
    int delta_size = static_cast<int>(datum.delta_j_size());
    std::uint32_t full = datum.full_subset();

    struct VPiece {
        int orbit_id;
        std::uint32_t I;
        int j;  // 2l + |Delta \ I| - 1
    };
    std::vector<VPiece> v_pieces;           // |Delta \ I| > 1 summands
    std::vector<std::pair<int, int>> t1;    // (orbit, 2l) with |Delta \ I| = 1
    std::vector<std::pair<int, int>> t2;    // (orbit, 2l) with |Delta \ I| > 1
    for (const auto& inv : datum.invariants) {
        const auto& orbit = datum.orbits[inv.orbit_id];
        int complement = delta_size - std::popcount(inv.subset_I);
        if (complement == 0) continue;
        if (complement == 1) {
            t1.push_back({inv.orbit_id, 2 * orbit.length});
        } else {
            t2.push_back({inv.orbit_id, 2 * orbit.length});
            v_pieces.push_back({inv.orbit_id, inv.subset_I, 2 * orbit.length + complement - 1});
        }
    }

    auto require = [&](const std::string& source, int oa, int ob, std::uint32_t I, std::uint32_t J) {
        SplittingPair pair;
        pair.source = source;
        pair.orbit_a = oa;
        pair.orbit_b = ob;
        pair.I = I;
        pair.J = J;
        pair.answer = ext1(I, J, delta_size, p, datum.group_preset);
        report.pairs.push_back(std::move(pair));
    };

    // adjacent graded pieces of the abutment filtration in the same total degree
    for (std::size_t a = 0; a < v_pieces.size(); ++a)
        for (std::size_t b = a + 1; b < v_pieces.size(); ++b) {
            if (v_pieces[a].j != v_pieces[b].j) continue;
            if (datum.orbits[v_pieces[a].orbit_id].length ==
                datum.orbits[v_pieces[b].orbit_id].length)
                continue;  // same cell of the page, nothing to separate
            require("filtration", v_pieces[a].orbit_id, v_pieces[b].orbit_id, v_pieces[a].I,
                    v_pieces[b].I);
        }
    // column 0 against the positive columns at the same total degree
    for (const auto& [oid, j0] : t1)
        for (const auto& vp : v_pieces) {
            if (vp.j != j0) continue;
            std::uint32_t I1 = 0;
            for (const auto& inv : datum.invariants)
                if (inv.orbit_id == oid) I1 = inv.subset_I;
            require("boundary-i-vs-v", oid, vp.orbit_id, I1, vp.I);
            require("boundary-trivial-vs-v", oid, vp.orbit_id, full, vp.I);
        }
    for (const auto& [oid, j0] : t2)
        for (const auto& vp : v_pieces) {
            if (vp.j != j0) continue;
            require("boundary-trivial-vs-v", oid, vp.orbit_id, full, vp.I);
        }

    report.verdict = SplittingVerdict::ProvenByTheorem;
    for (const auto& pair : report.pairs)
        if (pair.answer.value != ExtValue::Zero) report.verdict = SplittingVerdict::ConjecturalForThisP;
    return report;
}

}  // namespace pdcoh
