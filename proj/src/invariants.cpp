#include "pdcoh/invariants.hpp"

#include <bit>
#include <map>
#include <set>

#include "pdcoh/errors.hpp"

namespace pdcoh {

namespace {

using Check = InvariantCheck;

std::uint32_t subset_from_pairings(const LocalShtukaDatum& d, const QVec& image,
                                   const std::vector<QVec>& omegas) {
    std::uint32_t mask = 0;
    QVec diff = qvec_sub(image, d.nu);
    for (std::size_t a = 0; a < omegas.size(); ++a)
        if (d.g.inner_product(diff, omegas[a]) <= 0) mask |= (1u << a);
    return mask;
}

Check check_orbit_lengths(const LocalShtukaDatum& d) {
    for (const auto& orbit : d.orbits)
        for (int m : orbit.members)
            if (d.kset.entries[m].length != orbit.length)
                return {"orbit-length-constancy", false, "lengths differ inside an orbit"};
    return {"orbit-length-constancy", true, ""};
}

Check check_orbit_I(const LocalShtukaDatum& d) {
    for (const auto& orbit : d.orbits) {
        std::uint32_t ref = 0;
        bool first = true;
        for (int m : orbit.members) {
            std::uint32_t mask = subset_from_pairings(d, d.kset.entries[m].image, d.j.omega);
            if (first) {
                ref = mask;
                first = false;
            } else if (mask != ref) {
                return {"orbit-I-constancy", false, "members disagree on I_[w]"};
            }
        }
    }
    return {"orbit-I-constancy", true, ""};
}

Check check_minimality(const LocalShtukaDatum& d) {
    // [w] in Omega_I <=> I_[w] subset I, with Omega recomputed from the
    // strict-positivity definition.
    std::uint32_t full = d.full_subset();
    for (std::uint32_t I = 0;; ++I) {
        std::set<int> direct;
        for (const auto& orbit : d.orbits) {
            bool in = true;
            QVec diff = qvec_sub(d.kset.entries[orbit.members[0]].image, d.nu);
            for (std::size_t a = 0; a < d.j.size(); ++a) {
                if (I & (1u << a)) continue;
                if (d.g.inner_product(diff, d.j.omega[a]) <= 0) {
                    in = false;
                    break;
                }
            }
            if (in) direct.insert(static_cast<int>(&orbit - d.orbits.data()));
        }
        if (direct != omega_set(d, I))
            return {"omega-minimality", false,
                    "Omega_" + subset_to_string(I, d.j.labels) + " disagrees with I_[w] containment"};
        if (I == full) break;
    }
    return {"omega-minimality", true, ""};
}

Check check_omega_monotone(const LocalShtukaDatum& d) {
    std::uint32_t full = d.full_subset();
    for (std::uint32_t I = 0;; ++I) {
        for (std::uint32_t J = 0;; ++J) {
            auto inter = omega_set(d, I & J);
            auto a = omega_set(d, I);
            auto b = omega_set(d, J);
            std::set<int> meet;
            for (int x : a)
                if (b.count(x)) meet.insert(x);
            if (inter != meet)
                return {"omega-intersection", false, "Omega_{I&J} != Omega_I intersect Omega_J"};
            if ((I & ~J) == 0) {
                for (int x : a)
                    if (!b.count(x))
                        return {"omega-monotone", false, "I subset J but Omega_I not in Omega_J"};
            }
            if (J == full) break;
        }
        if (I == full) break;
    }
    return {"omega-monotone-and-intersection", true, ""};
}

Check check_central_shift(const LocalShtukaDatum& d) {
    // tau-fixed central cocharacters
    std::vector<QVec> rows = d.g.simple_roots;
    for (int a = 0; a < d.g.ambient_rank; ++a) {
        QVec row(d.g.ambient_rank, Rat(0));
        bool nonzero = false;
        for (int b = 0; b < d.g.ambient_rank; ++b) {
            row[b] = Rat(d.tau.matrix[a][b]) - (a == b ? Rat(1) : Rat(0));
            if (row[b] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(row);
    }
    auto central = nullspace(rows, d.g.ambient_rank);
    if (central.empty()) return {"central-shift-invariance", true, "no central directions"};
    for (std::size_t trial = 0; trial < central.size() + 1; ++trial) {
        std::vector<QVec> shifted = d.j.omega;
        for (std::size_t a = 0; a < shifted.size(); ++a) {
            // alpha-dependent shifts exercise the general statement
            const QVec& z = central[trial % central.size()];
            Rat c = make_rat(static_cast<long>((a + trial) % 3) - 1, 1 + static_cast<long>(a));
            shifted[a] = qvec_add(shifted[a], qvec_scale(c, z));
        }
        for (const auto& orbit : d.orbits) {
            for (int m : orbit.members) {
                std::uint32_t before = subset_from_pairings(d, d.kset.entries[m].image, d.j.omega);
                std::uint32_t after = subset_from_pairings(d, d.kset.entries[m].image, shifted);
                if (before != after)
                    return {"central-shift-invariance", false,
                            "I_[w] changed under a central shift of the omegas"};
            }
        }
    }
    return {"central-shift-invariance", true, ""};
}

Check check_rescaling(const LocalShtukaDatum& d) {
    // tau must keep each factor in place for factor-wise rescaling.
    bool tau_within_factors = true;
    for (std::size_t i = 0; i < d.g.rank(); ++i)
        if (d.g.factor_of_root[d.tau.root_perm[i]] != d.g.factor_of_root[i])
            tau_within_factors = false;
    Normalization norm;
    for (std::size_t fi = 0; fi < d.g.spec.factors.size(); ++fi)
        norm.factor_scale.push_back(tau_within_factors ? make_rat(static_cast<long>(fi) + 3, 2)
                                                       : make_rat(3, 2));
    try {
        RootDatum g2 = build_root_datum(d.g.spec, norm);
        DiagramAutomorphism tau2 = make_diagram_automorphism(g2, d.tau.root_perm, d.tau.torus_perm);
        LocalShtukaDatum d2 =
            build_datum(std::move(g2), std::move(tau2), d.s, d.mu, d.nu, d.j, d.provenance,
                        d.preset_name);
        GradedRepSum a = compactly_supported_cohomology(d, CoeffTag::ModPn);
        GradedRepSum b = compactly_supported_cohomology(d2, CoeffTag::ModPn);
        if (!(a == b))
            return {"rescaling-stability", false, "output changed under per-factor rescaling"};
        GradedRepSum ba = boundary_cohomology(d), bb = boundary_cohomology(d2);
        if (!(ba == bb))
            return {"rescaling-stability", false, "boundary changed under per-factor rescaling"};
    } catch (const Error& e) {
        return {"rescaling-stability", false, std::string("rescaled rebuild failed: ") + e.what()};
    }
    return {"rescaling-stability", true, ""};
}

Check check_top_degree(const LocalShtukaDatum& d) {
    GradedRepSum hc = compactly_supported_cohomology(d, CoeffTag::ModPn);
    int top = 2 * d.dim_f;
    int count = 0;
    bool good = true;
    int lowest = top;
    for (const auto& s : hc.summands) {
        lowest = std::min(lowest, s.degree);
        if (s.degree > top) good = false;
        if (s.degree == top) {
            ++count;
            if (!(s.rep.is_trivial(d.full_subset()) && s.galois.rank == 1 &&
                  s.galois.twist == -d.dim_f))
                good = false;
        }
    }
    int min_expected = 2 * d.orbits.front().length;
    for (const auto& o : d.orbits) min_expected = std::min(min_expected, 2 * o.length);
    if (lowest < min_expected) good = false;
    if (count != 1) good = false;
    return {"top-degree-summand", good,
            good ? "" : "top degree is not a single trivial rank-1 class with twist -dim F"};
}

Check check_rank_sum(const LocalShtukaDatum& d) {
    GradedRepSum hc = compactly_supported_cohomology(d, CoeffTag::ModPn);
    std::map<int, int> per_orbit;
    long long total = 0;
    for (const auto& s : hc.summands) {
        per_orbit[s.orbit_id] += s.galois.rank;
        total += s.galois.rank;
    }
    for (const auto& [oid, sum] : per_orbit)
        if (sum != d.orbits[oid].size)
            return {"rank-sum", false, "galois ranks do not match the orbit size"};
    if (total != static_cast<long long>(d.kset.entries.size()))
        return {"rank-sum", false, "total galois rank differs from |W^mu|"};
    return {"rank-sum", true, ""};
}

Check check_e2_boundary(const LocalShtukaDatum& d) {
    GradedRepSum boundary = boundary_cohomology(d);
    if (d.delta_j_size() == 0) {
        return {"e2-total-equals-boundary", boundary.summands.empty(),
                boundary.summands.empty() ? "boundary empty" : "nonempty boundary without roots"};
    }
    auto [e1, e2] = spectral_pages(d);
    (void)e1;
    GradedRepSum total;
    for (const auto& [pos, entries] : e2.cells)
        for (const auto& e : entries)
            total.summands.push_back({pos.first + pos.second, e.rep, e.galois, e.orbit_id});
    canonicalize(total);
    GradedRepSum boundary_sorted = boundary;
    canonicalize(boundary_sorted);
    if (!(total.summands == boundary_sorted.summands))
        return {"e2-total-equals-boundary", false, "E2 total and boundary disagree"};
    return {"e2-total-equals-boundary", true, ""};
}

Check check_degree_range(const LocalShtukaDatum& d) {
    for (const auto& inv : d.invariants)
        if (inv.n < 0 || inv.n > 2 * d.dim_f)
            return {"degree-range", false, "n_[w] outside [0, 2 dim F]"};
    return {"degree-range", true, ""};
}

Check check_poincare(const LocalShtukaDatum& d) {
    // |W^mu| * |W_mu| = |W| with the stabilizer enumerated directly, and
    // max l over W^mu = |Phi+| - |Phi+_mu|.
    std::vector<int> stab_gens;
    for (std::size_t i = 0; i < d.g.rank(); ++i)
        if (d.g.pairing(d.g.simple_roots[i], d.mu) == 0) stab_gens.push_back(static_cast<int>(i));
    std::set<IVec> seen;
    std::vector<IMat> pool;
    auto flatten = [](const IMat& m) {
        IVec f;
        for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    };
    IMat id = imat_identity(d.g.ambient_rank);
    pool.push_back(id);
    seen.insert(flatten(id));
    const std::size_t cap = 2000000;
    for (std::size_t head = 0; head < pool.size(); ++head) {
        for (int gen : stab_gens) {
            IMat next = imat_mul(pool[head], d.g.reflection_matrix(gen));
            if (seen.insert(flatten(next)).second) pool.push_back(std::move(next));
        }
        if (pool.size() > cap) return {"poincare", true, "skipped (stabilizer too large)"};
    }
    Int product = Int(static_cast<long>(pool.size())) * Int(static_cast<long>(d.kset.entries.size()));
    if (product != d.g.weyl_order())
        return {"poincare", false, "|W^mu| |W_mu| != |W|"};
    int fixed = 0;
    for (const auto& beta : d.g.positive_roots)
        if (d.g.pairing(beta, d.mu) == 0) ++fixed;
    int expected = static_cast<int>(d.g.positive_roots.size()) - fixed;
    if (d.dim_f != expected)
        return {"poincare", false, "max length over W^mu != |Phi+| - |Phi+_mu|"};
    return {"poincare", true, ""};
}

}  // namespace

std::vector<InvariantCheck> run_invariant_suite(const LocalShtukaDatum& datum) {
    std::vector<InvariantCheck> out;
    out.push_back(check_orbit_lengths(datum));
    out.push_back(check_orbit_I(datum));
    out.push_back(check_minimality(datum));
    out.push_back(check_omega_monotone(datum));
    out.push_back(check_central_shift(datum));
    out.push_back(check_rescaling(datum));
    out.push_back(check_top_degree(datum));
    out.push_back(check_rank_sum(datum));
    out.push_back(check_e2_boundary(datum));
    out.push_back(check_degree_range(datum));
    out.push_back(check_poincare(datum));
    return out;
}

bool all_pass(const std::vector<InvariantCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace pdcoh
