#include "pdcoh/shtuka.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pdcoh/errors.hpp"

namespace pdcoh {

std::string subset_to_string(std::uint32_t mask, const std::vector<std::string>& labels) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!first) out += ",";
        out += labels[i];
        first = false;
    }
    return out + "}";
}

RelativeRootData derive_J_gln(const RootDatum& gl, int n, const Rat& lambda) {
    if (gl.spec.factors.size() != 1 || gl.spec.factors[0].family != Family::GL ||
        gl.spec.factors[0].rank != n)
        throw Error(ErrorKind::InvalidCartanSpec, "derive_J_gln expects a single GL_n factor");
    Int m = lambda.get_den();
    if (n % m != 0)
        throw Error(ErrorKind::DenominatorNotDividing,
                    "the slope denominator must divide n");
    int block = static_cast<int>(m.get_si());
    int r = n / block;
    RelativeRootData j;
    for (int t = 0; t + 1 < r; ++t) {
        // block character, scaled so the dual-basis condition holds
        QVec alpha = qvec_zero(n);
        for (int c = 0; c < block; ++c) {
            alpha[t * block + c] = make_rat(1, block);
            alpha[(t + 1) * block + c] = make_rat(-1, block);
        }
        j.delta.push_back(alpha);
        // indicator of the first t+1 blocks minus its central projection
        QVec omega = qvec_zero(n);
        Rat shift = make_rat((t + 1) * block, n);
        for (int c = 0; c < n; ++c) omega[c] = (c < (t + 1) * block ? Rat(1) : Rat(0)) - shift;
        j.omega.push_back(omega);
        j.labels.push_back("a" + std::to_string(t + 1));
    }
    return j;
}

RelativeRootData derive_J_folded(const RootDatum& datum, const DiagramAutomorphism& tau) {
    // tau-orbits of the absolute simple roots, ordered by least member.
    std::vector<bool> seen(datum.rank(), false);
    RelativeRootData j;
    int label = 1;
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        std::size_t k = i;
        while (!seen[k]) {
            seen[k] = true;
            orbit.push_back(static_cast<int>(k));
            k = tau.root_perm[k];
        }
        QVec alpha = qvec_zero(datum.ambient_rank);
        QVec omega = qvec_zero(datum.ambient_rank);
        for (int idx : orbit) {
            alpha = qvec_add(alpha, datum.simple_roots[idx]);
            omega = qvec_add(omega, datum.fundamental_coweights[idx]);
        }
        alpha = qvec_scale(make_rat(1, static_cast<long>(orbit.size())), alpha);
        j.delta.push_back(alpha);
        j.omega.push_back(omega);
        j.labels.push_back("a" + std::to_string(label++));
    }
    return j;
}

std::vector<OrbitInvariant> orbit_invariants(const LocalShtukaDatum& datum) {
    std::vector<OrbitInvariant> out;
    int delta_size = static_cast<int>(datum.delta_j_size());
    for (std::size_t oid = 0; oid < datum.orbits.size(); ++oid) {
        const auto& orbit = datum.orbits[oid];
        bool first = true;
        std::uint32_t mask = 0;
        for (int member : orbit.members) {
            QVec diff = qvec_sub(datum.kset.entries[member].image, datum.nu);
            std::uint32_t here = 0;
            for (int a = 0; a < delta_size; ++a)
                if (datum.g.inner_product(diff, datum.j.omega[a]) <= 0) here |= (1u << a);
            if (first) {
                mask = here;
                first = false;
            } else if (here != mask) {
                throw Error(ErrorKind::OrbitInconsistency,
                            "members of a Galois orbit disagree on I_[w]");
            }
        }
        OrbitInvariant inv;
        inv.orbit_id = static_cast<int>(oid);
        inv.subset_I = mask;
        int complement = delta_size - __builtin_popcount(mask);
        inv.n = 2 * orbit.length + complement;
        out.push_back(inv);
    }
    return out;
}

LocalShtukaDatum build_datum(RootDatum g, DiagramAutomorphism tau, int s, QVec mu, QVec nu,
                             RelativeRootData j, const std::string& provenance,
                             const std::string& preset_name) {
    LocalShtukaDatum d;
    d.g = std::move(g);
    d.tau = std::move(tau);
    d.s = s;
    d.mu = std::move(mu);
    d.nu = std::move(nu);
    d.j = std::move(j);
    d.provenance = provenance;
    d.preset_name = preset_name;

    const RootDatum& G = d.g;
    if (static_cast<int>(d.mu.size()) != G.ambient_rank ||
        static_cast<int>(d.nu.size()) != G.ambient_rank)
        throw Error(ErrorKind::DimensionMismatch, "mu/nu have the wrong ambient dimension");
    if (s < 1) throw Error(ErrorKind::InvalidMu, "the decency integer s must be positive");
    if (!G.is_integral(d.mu)) throw Error(ErrorKind::InvalidMu, "mu must be integral");
    if (!G.is_dominant(d.mu)) throw Error(ErrorKind::NotDominant, "mu is not dominant");
    if (!is_basic(G, NewtonVector::general(d.nu)))
        throw Error(ErrorKind::NotBasic, "nu is not basic (some root pairing is nonzero)");
    if (d.tau.apply(d.mu) != d.mu)
        throw Error(ErrorKind::GaloisIncompatible, "tau does not fix mu");
    if (d.tau.apply(d.nu) != d.nu)
        throw Error(ErrorKind::GaloisIncompatible, "tau does not fix nu");
    if (d.j.size() >= 32)
        throw Error(ErrorKind::InvalidCartanSpec, "more than 31 relative simple roots");
    if (d.j.omega.size() != d.j.delta.size() || d.j.labels.size() != d.j.delta.size())
        throw Error(ErrorKind::DualBasisViolation, "relative root data fields have unequal sizes");

    // dual basis, tau-fixity, centrality of the omega representatives
    for (std::size_t a = 0; a < d.j.size(); ++a) {
        for (std::size_t b = 0; b < d.j.size(); ++b) {
            Rat v = G.pairing(d.j.delta[a], d.j.omega[b]);
            if (v != (a == b ? Rat(1) : Rat(0)))
                throw Error(ErrorKind::DualBasisViolation,
                            "<alpha_" + std::to_string(a + 1) + ", omega_" + std::to_string(b + 1) +
                                "> != delta");
        }
        if (d.tau.apply(d.j.omega[a]) != d.j.omega[a])
            throw Error(ErrorKind::GaloisIncompatible,
                        "omega_" + std::to_string(a + 1) + " is not fixed by tau");
        for (const auto& z : G.central_basis())
            if (G.inner_product(d.j.omega[a], z) != 0)
                throw Error(ErrorKind::DualBasisViolation,
                            "omega_" + std::to_string(a + 1) +
                                " is not orthogonal to the central cocharacters");
    }

    // Nonemptiness of the period domain.
    if (!is_acceptable(G, NewtonVector::general(d.nu), d.mu, d.tau))
        throw Error(ErrorKind::EmptyPeriodDomain,
                    "the period domain is empty: nu is not below the Galois average of mu in the "
                    "dominance order (Fontaine-Rapoport nonemptiness criterion)");

    d.kset = kostant_representatives(G, d.mu);
    d.orbits = galois_orbits(G, d.kset, d.tau);
    d.dim_f = 0;
    for (const auto& e : d.kset.entries) d.dim_f = std::max(d.dim_f, e.length);
    d.invariants = orbit_invariants(d);

    bool single_gl = d.g.spec.factors.size() == 1 && d.g.spec.factors[0].family == Family::GL;
    d.group_preset = single_gl ? GroupPreset::GLnD : GroupPreset::GeneralQuasiSplit;
    return d;
}

LocalShtukaDatum preset_drinfeld(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidMu, "drinfeld needs d >= 1");
    CartanSpec spec{{{Family::GL, d + 1}}};
    RootDatum g = build_root_datum(spec);
    QVec mu = qvec_zero(d + 1);
    mu[0] = d;
    for (int i = 1; i <= d; ++i) mu[i] = -1;
    QVec nu = qvec_zero(d + 1);
    RelativeRootData j = derive_J_gln(g, d + 1, Rat(0));
    DiagramAutomorphism tau = identity_automorphism(g);
    return build_datum(std::move(g), std::move(tau), 1, std::move(mu), std::move(nu), std::move(j),
                       "preset", "drinfeld:" + std::to_string(d));
}

LocalShtukaDatum preset_gln_basic(int n, const std::vector<Int>& mu, const Rat& lambda) {
    if (n < 1 || static_cast<int>(mu.size()) != n)
        throw Error(ErrorKind::InvalidMu, "gln_basic: mu must have length n");
    CartanSpec spec{{{Family::GL, n}}};
    RootDatum g = build_root_datum(spec);
    QVec muv(n);
    for (int i = 0; i < n; ++i) muv[i] = Rat(mu[i]);
    QVec nuv(n, lambda);
    RelativeRootData j = derive_J_gln(g, n, lambda);
    DiagramAutomorphism tau = identity_automorphism(g);
    std::ostringstream name;
    name << "gln_basic:" << n << ":";
    for (int i = 0; i < n; ++i) name << (i ? "," : "") << mu[i].get_str();
    name << ":" << rat_string(lambda);
    return build_datum(std::move(g), std::move(tau), 1, std::move(muv), std::move(nuv),
                       std::move(j), "preset", name.str());
}

LocalShtukaDatum preset_quadric(int n) {
    if (n < 5) throw Error(ErrorKind::InvalidCartanSpec, "quadric needs n >= 5");
    CartanSpec spec;
    if (n % 2 == 1)
        spec.factors = {{Family::B, (n - 1) / 2}};
    else
        spec.factors = {{Family::D, n / 2}};
    RootDatum g = build_root_datum(spec);
    QVec mu = qvec_zero(g.ambient_rank);
    mu[0] = 1;
    QVec nu = qvec_zero(g.ambient_rank);
    DiagramAutomorphism tau = identity_automorphism(g);
    RelativeRootData j = derive_J_folded(g, tau);
    return build_datum(std::move(g), std::move(tau), 1, std::move(mu), std::move(nu), std::move(j),
                       "preset", "quadric:" + std::to_string(n));
}

LocalShtukaDatum preset_split(const CartanSpec& spec, const QVec& mu) {
    RootDatum g = build_root_datum(spec);
    QVec nu = qvec_zero(g.ambient_rank);
    DiagramAutomorphism tau = identity_automorphism(g);
    RelativeRootData j = derive_J_folded(g, tau);
    std::ostringstream name;
    name << "split:" << spec.to_string() << ":";
    for (std::size_t i = 0; i < mu.size(); ++i) name << (i ? "," : "") << rat_string(mu[i]);
    return build_datum(std::move(g), std::move(tau), 1, mu, std::move(nu), std::move(j), "preset",
                       name.str());
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "malformed integer '" + s + "'");
    }
}

}  // namespace

LocalShtukaDatum build_preset(const std::string& text) {
    auto groups = split_on(text, ':');
    const std::string& name = groups[0];
    auto need = [&](std::size_t k) {
        if (groups.size() != k + 1)
            throw Error(ErrorKind::ParseError,
                        "preset '" + name + "' expects " + std::to_string(k) +
                            " colon-separated argument groups");
    };
    if (name == "drinfeld") {
        need(1);
        return preset_drinfeld(parse_int(groups[1]));
    }
    if (name == "gln_basic") {
        need(3);
        int n = parse_int(groups[1]);
        std::vector<Int> mu;
        for (const auto& t : split_on(groups[2], ',')) {
            Rat q = parse_rat(t);
            if (!is_integer(q))
                throw Error(ErrorKind::ParseError, "gln_basic: mu entries must be integers");
            mu.push_back(q.get_num());
        }
        return preset_gln_basic(n, mu, parse_rat(groups[3]));
    }
    if (name == "quadric") {
        need(1);
        return preset_quadric(parse_int(groups[1]));
    }
    if (name == "split") {
        need(2);
        CartanSpec spec = CartanSpec::parse(groups[1]);
        QVec mu;
        for (const auto& t : split_on(groups[2], ',')) mu.push_back(parse_rat(t));
        return preset_split(spec, mu);
    }
    throw Error(ErrorKind::ParseError, "unknown preset '" + name + "'");
}

}  // namespace pdcoh
