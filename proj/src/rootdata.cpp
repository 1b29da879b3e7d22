#include "pdcoh/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "pdcoh/errors.hpp"

namespace pdcoh {

namespace {

struct FamilyInfo {
    const char* name;
    Family family;
    int fixed_rank;  // 0 = rank is free
};

const FamilyInfo kFamilies[] = {
    {"GL", Family::GL, 0},    {"Torus", Family::Torus, 0}, {"A", Family::A, 0},
    {"B", Family::B, 0},      {"C", Family::C, 0},         {"D", Family::D, 0},
    {"E6", Family::E6, 6},    {"E7", Family::E7, 7},       {"E8", Family::E8, 8},
    {"F4", Family::F4, 4},    {"G2", Family::G2, 2},
};

const char* family_name(Family f) {
    for (const auto& info : kFamilies)
        if (info.family == f) return info.name;
    return "?";
}

bool weight_coordinate_family(Family f) {
    switch (f) {
        case Family::E6:
        case Family::E7:
        case Family::E8:
        case Family::F4:
        case Family::G2:
            return true;
        default:
            return false;
    }
}

int ambient_dim(const CartanFactor& f) {
    switch (f.family) {
        case Family::A: return f.rank + 1;
        case Family::GL:
        case Family::Torus:
        case Family::B:
        case Family::C:
        case Family::D:
            return f.rank;
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::F4: return 4;
        case Family::G2: return 2;
    }
    return 0;
}

int root_count(const CartanFactor& f) {
    switch (f.family) {
        case Family::A: return f.rank;
        case Family::GL: return f.rank - 1;
        case Family::Torus: return 0;
        default: return f.rank;
    }
}

IMat exceptional_cartan(Family f) {
    auto simply_laced = [](int n, std::vector<std::pair<int, int>> edges) {
        IMat c(n, IVec(n, Int(0)));
        for (int i = 0; i < n; ++i) c[i][i] = 2;
        for (auto [a, b] : edges) c[a][b] = c[b][a] = -1;
        return c;
    };
    switch (f) {
        case Family::E6:
            return simply_laced(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
        case Family::E7:
            return simply_laced(7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}});
        case Family::E8:
            return simply_laced(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}});
        case Family::F4: {
            IMat c = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            return c;
        }
        case Family::G2: {
            IMat c = {{2, -1}, {-3, 2}};
            return c;
        }
        default:
            throw Error(ErrorKind::InvalidCartanSpec, "not an exceptional family");
    }
}

QVec unit(int n, int i, const Rat& value = Rat(1)) {
    QVec v = qvec_zero(n);
    v[i] = value;
    return v;
}

// Local simple roots / coroots of one factor, in the factor's own coordinates.
void local_simple_roots(const CartanFactor& f, std::vector<QVec>& roots,
                        std::vector<QVec>& coroots) {
    int n = f.rank;
    int dim = ambient_dim(f);
    roots.clear();
    coroots.clear();
    auto e = [&](int i) { return unit(dim, i); };
    switch (f.family) {
        case Family::Torus:
            return;
        case Family::GL:
        case Family::A: {
            int count = root_count(f);
            for (int i = 0; i < count; ++i) {
                QVec r = qvec_zero(dim);
                r[i] = 1;
                r[i + 1] = -1;
                roots.push_back(r);
                coroots.push_back(r);
            }
            return;
        }
        case Family::B: {
            for (int i = 0; i + 1 < n; ++i) {
                QVec r = qvec_zero(dim);
                r[i] = 1;
                r[i + 1] = -1;
                roots.push_back(r);
                coroots.push_back(r);
            }
            roots.push_back(e(n - 1));
            coroots.push_back(unit(dim, n - 1, Rat(2)));
            return;
        }
        case Family::C: {
            for (int i = 0; i + 1 < n; ++i) {
                QVec r = qvec_zero(dim);
                r[i] = 1;
                r[i + 1] = -1;
                roots.push_back(r);
                coroots.push_back(r);
            }
            roots.push_back(unit(dim, n - 1, Rat(2)));
            coroots.push_back(e(n - 1));
            return;
        }
        case Family::D: {
            for (int i = 0; i + 1 < n; ++i) {
                QVec r = qvec_zero(dim);
                r[i] = 1;
                r[i + 1] = -1;
                roots.push_back(r);
                coroots.push_back(r);
            }
            QVec r = qvec_zero(dim);
            r[n - 2] = 1;
            r[n - 1] = 1;
            roots.push_back(r);
            coroots.push_back(r);
            return;
        }
        default: {
            // Coweight coordinates: alpha_i = e_i, alpha_j^vee = column j of
            // the Cartan matrix, fundamental coweights = standard basis.
            IMat c = exceptional_cartan(f.family);
            for (int i = 0; i < n; ++i) {
                roots.push_back(e(i));
                QVec cv(dim);
                for (int a = 0; a < dim; ++a) cv[a] = Rat(c[a][i]);
                coroots.push_back(cv);
            }
            return;
        }
    }
}

}  // namespace

CartanSpec CartanSpec::parse(const std::string& text) {
    CartanSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find_first_of("xX", pos);
        // 'x' may occur inside no family name, so a bare split is safe.
        std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (token.empty())
            throw Error(ErrorKind::InvalidCartanSpec, "empty factor in '" + text + "'");
        std::string fam, digits;
        for (char ch : token) {
            if (std::isdigit(static_cast<unsigned char>(ch)))
                digits += ch;
            else if (digits.empty())
                fam += ch;
            else
                throw Error(ErrorKind::InvalidCartanSpec, "malformed factor '" + token + "'");
        }
        const FamilyInfo* match = nullptr;
        for (const auto& info : kFamilies) {
            if (info.fixed_rank) {
                if (fam + digits == info.name) {
                    match = &info;
                    break;
                }
            } else if (fam == info.name && !digits.empty()) {
                match = &info;
                break;
            }
        }
        if (!match)
            throw Error(ErrorKind::InvalidCartanSpec, "unknown factor '" + token + "'");
        int rank = match->fixed_rank ? match->fixed_rank : std::stoi(digits);
        spec.factors.push_back({match->family, rank});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    spec.validate();
    return spec;
}

std::string CartanSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        const auto& f = factors[i];
        out += family_name(f.family);
        if (!weight_coordinate_family(f.family)) out += std::to_string(f.rank);
    }
    return out;
}

void CartanSpec::validate() const {
    if (factors.empty())
        throw Error(ErrorKind::InvalidCartanSpec, "a Cartan spec needs at least one factor");
    for (const auto& f : factors) {
        bool ok = true;
        switch (f.family) {
            case Family::A: ok = f.rank >= 1; break;
            case Family::B: ok = f.rank >= 2; break;
            case Family::C: ok = f.rank >= 2; break;
            case Family::D: ok = f.rank >= 3; break;
            case Family::GL: ok = f.rank >= 1; break;
            case Family::Torus: ok = f.rank >= 1; break;
            case Family::E6: ok = f.rank == 6; break;
            case Family::E7: ok = f.rank == 7; break;
            case Family::E8: ok = f.rank == 8; break;
            case Family::F4: ok = f.rank == 4; break;
            case Family::G2: ok = f.rank == 2; break;
        }
        if (!ok)
            throw Error(ErrorKind::InvalidCartanSpec,
                        std::string("inadmissible rank for family ") + family_name(f.family) +
                            ": " + std::to_string(f.rank));
    }
}

Rat RootDatum::pairing(const QVec& character, const QVec& cocharacter) const {
    if (static_cast<int>(character.size()) != ambient_rank ||
        static_cast<int>(cocharacter.size()) != ambient_rank)
        throw Error(ErrorKind::DimensionMismatch, "pairing: wrong ambient dimension");
    return qvec_dot(character, cocharacter);
}

Rat RootDatum::inner_product(const QVec& a, const QVec& b) const {
    if (static_cast<int>(a.size()) != ambient_rank ||
        static_cast<int>(b.size()) != ambient_rank)
        throw Error(ErrorKind::DimensionMismatch, "inner product: wrong ambient dimension");
    return qvec_dot(a, qmat_apply(inner, b));
}

QVec RootDatum::reflect_cochar(int i, const QVec& v) const {
    Rat k = pairing(simple_roots[i], v);
    return qvec_sub(v, qvec_scale(k, simple_coroots[i]));
}

QVec RootDatum::reflect_char(int i, const QVec& v) const {
    Rat k = pairing(v, simple_coroots[i]);
    return qvec_sub(v, qvec_scale(k, simple_roots[i]));
}

IMat RootDatum::reflection_matrix(int i) const {
    int n = ambient_rank;
    IMat m = imat_identity(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Rat delta = simple_coroots[i][a] * simple_roots[i][b];
            internal_check(is_integer(delta), "non-integral reflection matrix");
            m[a][b] -= delta.get_num();
        }
    return m;
}

bool RootDatum::is_dominant(const QVec& cocharacter) const {
    for (const auto& alpha : simple_roots)
        if (pairing(alpha, cocharacter) < 0) return false;
    return true;
}

bool RootDatum::is_integral(const QVec& cocharacter) const {
    for (const auto& x : cocharacter)
        if (!is_integer(x)) return false;
    return true;
}

std::vector<QVec> RootDatum::central_basis() const {
    return nullspace(simple_roots, ambient_rank);
}

QVec RootDatum::central_projection(const QVec& v) const {
    auto basis = central_basis();
    if (basis.empty()) return qvec_zero(ambient_rank);
    std::size_t k = basis.size();
    QMat gram(k, qvec_zero(k));
    QVec rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) gram[a][b] = inner_product(basis[a], basis[b]);
        rhs[a] = inner_product(basis[a], v);
    }
    std::vector<QVec> cols(k);
    for (std::size_t b = 0; b < k; ++b) {
        cols[b] = qvec_zero(k);
        for (std::size_t a = 0; a < k; ++a) cols[b][a] = gram[a][b];
    }
    bool ok = true;
    QVec c = solve_in_span(cols, rhs, ok);
    internal_check(ok, "central projection: Gram system inconsistent");
    QVec proj = qvec_zero(ambient_rank);
    for (std::size_t a = 0; a < k; ++a) proj = qvec_add(proj, qvec_scale(c[a], basis[a]));
    return proj;
}

Int RootDatum::weyl_order() const {
    Int order = 1;
    auto factorial = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    auto pow2 = [](int n) {
        Int p = 1;
        for (int i = 0; i < n; ++i) p *= 2;
        return p;
    };
    for (const auto& f : spec.factors) {
        switch (f.family) {
            case Family::A: order *= factorial(f.rank + 1); break;
            case Family::GL: order *= factorial(f.rank); break;
            case Family::B:
            case Family::C: order *= pow2(f.rank) * factorial(f.rank); break;
            case Family::D: order *= pow2(f.rank - 1) * factorial(f.rank); break;
            case Family::G2: order *= 12; break;
            case Family::F4: order *= 1152; break;
            case Family::E6: order *= 51840; break;
            case Family::E7: order *= 2903040; break;
            case Family::E8: order *= Int("696729600"); break;
            case Family::Torus: break;
        }
    }
    return order;
}

RootDatum build_root_datum(const CartanSpec& spec, const Normalization& normalization) {
    spec.validate();
    if (!normalization.factor_scale.empty() &&
        normalization.factor_scale.size() != spec.factors.size())
        throw Error(ErrorKind::InvalidCartanSpec,
                    "normalization has wrong number of factor scales");
    for (const auto& s : normalization.factor_scale)
        if (s <= 0)
            throw Error(ErrorKind::InvalidCartanSpec, "normalization scales must be positive");

    RootDatum d;
    d.spec = spec;
    d.ambient_rank = 0;
    for (const auto& f : spec.factors) d.ambient_rank += ambient_dim(f);
    int n = d.ambient_rank;
    d.inner = QMat(n, qvec_zero(n));

    int offset = 0;
    for (std::size_t fi = 0; fi < spec.factors.size(); ++fi) {
        const auto& f = spec.factors[fi];
        int dim = ambient_dim(f);
        d.factor_blocks.push_back({offset, offset + dim});
        if (f.family == Family::Torus)
            for (int c = 0; c < dim; ++c) d.torus_coords.push_back(offset + c);

        std::vector<QVec> roots, coroots;
        local_simple_roots(f, roots, coroots);
        auto embed = [&](const QVec& local) {
            QVec v = qvec_zero(n);
            for (int c = 0; c < dim; ++c) v[offset + c] = local[c];
            return v;
        };
        for (std::size_t i = 0; i < roots.size(); ++i) {
            d.simple_roots.push_back(embed(roots[i]));
            d.simple_coroots.push_back(embed(coroots[i]));
            d.factor_of_root.push_back(static_cast<int>(fi));
        }

        // Positive roots of this factor: closure of the simple roots under
        // the simple reflections, discarding non-positive images.
        std::size_t m = roots.size();
        std::set<IVec> seen;
        std::vector<std::pair<QVec, IVec>> pool;
        for (std::size_t i = 0; i < m; ++i) {
            IVec coef(m, Int(0));
            coef[i] = 1;
            seen.insert(coef);
            pool.push_back({roots[i], coef});
        }
        for (std::size_t head = 0; head < pool.size(); ++head) {
            auto [beta, coef] = pool[head];
            for (std::size_t j = 0; j < m; ++j) {
                Rat k = qvec_dot(beta, coroots[j]);
                internal_check(is_integer(k), "non-integral Cartan pairing");
                if (k == 0) continue;
                QVec gamma = qvec_sub(beta, qvec_scale(k, roots[j]));
                IVec gcoef = coef;
                gcoef[j] -= k.get_num();
                bool positive = false, negative = false;
                for (const auto& c : gcoef) {
                    if (c > 0) positive = true;
                    if (c < 0) negative = true;
                }
                if (!positive || negative) continue;
                if (seen.insert(gcoef).second) pool.push_back({gamma, gcoef});
            }
        }
        std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
            Int ha = 0, hb = 0;
            for (const auto& c : a.second) ha += c;
            for (const auto& c : b.second) hb += c;
            if (ha != hb) return ha < hb;
            return a.second < b.second;
        });
        for (const auto& [beta, coef] : pool) {
            (void)coef;
            d.positive_roots.push_back(embed(beta));
        }

        // Inner product block: identity for the Euclidean realizations, the
        // root-sum form for the coweight-coordinate ones, rescaled so the
        // shortest simple coroot has squared length 2.
        QMat block(dim, qvec_zero(dim));
        if (weight_coordinate_family(f.family)) {
            for (const auto& [beta, coef] : pool) {
                (void)coef;
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) block[a][b] += beta[a] * beta[b];
            }
        } else {
            for (int a = 0; a < dim; ++a) block[a][a] = 1;
        }
        if (!coroots.empty()) {
            Rat min_norm;
            bool first = true;
            for (const auto& cv : coroots) {
                Rat nrm = qvec_dot(cv, qmat_apply(block, cv));
                if (first || nrm < min_norm) {
                    min_norm = nrm;
                    first = false;
                }
            }
            internal_check(min_norm > 0, "degenerate factor form");
            Rat scale = make_rat(2, 1) / min_norm;
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) block[a][b] *= scale;
        }
        Rat user_scale =
            normalization.factor_scale.empty() ? Rat(1) : normalization.factor_scale[fi];
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) d.inner[offset + a][offset + b] = block[a][b] * user_scale;

        offset += dim;
    }

    // Global simple-root coefficients of every positive root.
    {
        std::size_t total = d.simple_roots.size();
        for (const auto& beta : d.positive_roots) {
            bool ok = true;
            QVec c = solve_in_span(d.simple_roots, beta, ok);
            internal_check(ok, "positive root outside simple-root span");
            IVec coef(total);
            for (std::size_t i = 0; i < total; ++i) {
                internal_check(is_integer(c[i]), "non-integral root coefficient");
                coef[i] = c[i].get_num();
            }
            d.positive_root_coeffs.push_back(coef);
        }
    }

    // Fundamental coweights: dual basis to the simple roots inside the span
    // of the coroots, solved per factor through the Cartan matrix.
    d.cartan = IMat(d.rank(), IVec(d.rank(), Int(0)));
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (std::size_t j = 0; j < d.rank(); ++j) {
            Rat v = d.pairing(d.simple_roots[i], d.simple_coroots[j]);
            internal_check(is_integer(v), "non-integral Cartan entry");
            d.cartan[i][j] = v.get_num();
        }
    d.fundamental_coweights.assign(d.rank(), QVec());
    for (std::size_t fi = 0; fi < spec.factors.size(); ++fi) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d.rank(); ++i)
            if (d.factor_of_root[i] == static_cast<int>(fi)) idx.push_back(i);
        std::size_t m = idx.size();
        if (m == 0) continue;
        std::vector<QVec> cols(m, qvec_zero(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) cols[b][a] = Rat(d.cartan[idx[a]][idx[b]]);
        for (std::size_t j = 0; j < m; ++j) {
            QVec rhs = qvec_zero(m);
            rhs[j] = 1;
            bool ok = true;
            QVec x = solve_in_span(cols, rhs, ok);
            internal_check(ok, "Cartan matrix not invertible on a factor");
            QVec omega = qvec_zero(n);
            for (std::size_t k = 0; k < m; ++k)
                omega = qvec_add(omega, qvec_scale(x[k], d.simple_coroots[idx[k]]));
            d.fundamental_coweights[idx[j]] = omega;
        }
    }
    return d;
}

bool DiagramAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < root_perm.size(); ++i)
        if (root_perm[i] != static_cast<int>(i)) return false;
    for (std::size_t i = 0; i < torus_perm.size(); ++i)
        if (torus_perm[i] != static_cast<int>(i)) return false;
    return true;
}

QVec DiagramAutomorphism::apply(const QVec& cochar) const { return imat_apply(matrix, cochar); }

DiagramAutomorphism identity_automorphism(const RootDatum& datum) {
    DiagramAutomorphism tau;
    tau.root_perm.resize(datum.rank());
    std::iota(tau.root_perm.begin(), tau.root_perm.end(), 0);
    tau.torus_perm.resize(datum.torus_coords.size());
    std::iota(tau.torus_perm.begin(), tau.torus_perm.end(), 0);
    tau.order = 1;
    tau.matrix = imat_identity(datum.ambient_rank);
    return tau;
}

namespace {

bool is_permutation(const std::vector<int>& p) {
    std::vector<bool> hit(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

int perm_order(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> done(n, false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        while (!done[j]) {
            done[j] = true;
            j = p[j];
            ++len;
        }
        ord = std::lcm<long long>(ord, len);
    }
    return static_cast<int>(ord);
}

}  // namespace

DiagramAutomorphism make_diagram_automorphism(const RootDatum& datum,
                                              const std::vector<int>& root_perm,
                                              const std::vector<int>& torus_perm_in) {
    std::vector<int> torus_perm = torus_perm_in;
    if (torus_perm.empty()) {
        torus_perm.resize(datum.torus_coords.size());
        std::iota(torus_perm.begin(), torus_perm.end(), 0);
    }
    if (root_perm.size() != datum.rank() || !is_permutation(root_perm))
        throw Error(ErrorKind::GaloisIncompatible, "root permutation is not a permutation of the simple roots");
    if (torus_perm.size() != datum.torus_coords.size() || !is_permutation(torus_perm))
        throw Error(ErrorKind::GaloisIncompatible, "torus permutation is not a permutation of the torus coordinates");
    for (std::size_t i = 0; i < datum.rank(); ++i)
        for (std::size_t j = 0; j < datum.rank(); ++j)
            if (datum.cartan[root_perm[i]][root_perm[j]] != datum.cartan[i][j])
                throw Error(ErrorKind::GaloisIncompatible,
                            "permutation does not preserve the Cartan matrix");

    int n = datum.ambient_rank;
    IMat m(n, IVec(n, Int(0)));

    // Root ranges per factor.
    std::vector<std::pair<int, int>> root_range(datum.spec.factors.size(), {0, 0});
    {
        int cursor = 0;
        for (std::size_t fi = 0; fi < datum.spec.factors.size(); ++fi) {
            int count = 0;
            for (std::size_t i = 0; i < datum.rank(); ++i)
                if (datum.factor_of_root[i] == static_cast<int>(fi)) ++count;
            root_range[fi] = {cursor, cursor + count};
            cursor += count;
        }
    }

    for (std::size_t fi = 0; fi < datum.spec.factors.size(); ++fi) {
        const auto& f = datum.spec.factors[fi];
        auto [rb, re] = root_range[fi];
        auto [cb, ce] = datum.factor_blocks[fi];
        int dim = ce - cb;
        if (f.family == Family::Torus) continue;
        if (rb == re) {
            // GL1: no roots, block is pinned in place.
            for (int c = 0; c < dim; ++c) m[cb + c][cb + c] = 1;
            continue;
        }
        int gi = datum.factor_of_root[root_perm[rb]];
        const auto& g = datum.spec.factors[gi];
        auto [sb, se] = root_range[gi];
        auto [tb, te] = datum.factor_blocks[gi];
        (void)te;
        if (g.family != f.family || g.rank != f.rank)
            throw Error(ErrorKind::GaloisIncompatible,
                        "permutation maps a factor onto a factor of different type");
        std::vector<int> match(re - rb);
        for (int i = rb; i < re; ++i) {
            int image = root_perm[i];
            if (image < sb || image >= se)
                throw Error(ErrorKind::GaloisIncompatible,
                            "permutation splits a factor across several factors");
            match[i - rb] = image - sb;
        }
        int mm = re - rb;
        bool ident = true, flip = true;
        for (int i = 0; i < mm; ++i) {
            if (match[i] != i) ident = false;
            if (match[i] != mm - 1 - i) flip = false;
        }
        bool d_swap = false;
        if (f.family == Family::D) {
            d_swap = true;
            for (int i = 0; i + 2 < mm; ++i)
                if (match[i] != i) d_swap = false;
            if (!(match[mm - 2] == mm - 1 && match[mm - 1] == mm - 2)) d_swap = false;
        }
        auto transport = [&](int sign_last) {
            for (int c = 0; c < dim; ++c) m[tb + c][cb + c] = 1;
            if (sign_last) m[tb + dim - 1][cb + dim - 1] = -1;
        };
        switch (f.family) {
            case Family::GL:
            case Family::A:
                if (ident)
                    transport(0);
                else if (flip)
                    // t -> reversed inverse torus coordinates
                    for (int c = 0; c < dim; ++c) m[tb + (dim - 1 - c)][cb + c] = -1;
                else
                    throw Error(ErrorKind::GaloisIncompatible,
                                "unsupported matching for an A-type factor");
                break;
            case Family::B:
            case Family::C:
                if (!ident)
                    throw Error(ErrorKind::GaloisIncompatible,
                                "B/C factors admit no nontrivial diagram automorphism");
                transport(0);
                break;
            case Family::D:
                if (ident)
                    transport(0);
                else if (d_swap)
                    transport(1);
                else
                    throw Error(ErrorKind::GaloisIncompatible,
                                "this D-type matching is not realizable on the orthogonal lattice");
                break;
            default:
                // coweight coordinates: basis vectors follow the matching
                for (int c = 0; c < dim; ++c) m[tb + match[c]][cb + c] = 1;
                break;
        }
    }

    for (std::size_t k = 0; k < torus_perm.size(); ++k)
        m[datum.torus_coords[torus_perm[k]]][datum.torus_coords[k]] = 1;

    DiagramAutomorphism tau;
    tau.root_perm = root_perm;
    tau.torus_perm = torus_perm;
    tau.matrix = m;
    tau.order = std::lcm(perm_order(root_perm), std::lcm(perm_order(torus_perm), 2));

    // The true order divides twice the lcm of the cycle lengths (the A-type
    // flip squares to the identity together with its sign).  Pin it down.
    {
        IMat p = tau.matrix;
        int ord = 1;
        IMat id = imat_identity(n);
        while (!imat_equal(p, id)) {
            p = imat_mul(p, tau.matrix);
            ++ord;
            if (ord > 4 * tau.order)
                throw Error(ErrorKind::GaloisIncompatible, "automorphism matrix has unexpected order");
        }
        tau.order = ord;
    }

    // Coroots transform along the permutation; characters contragrediently.
    for (std::size_t j = 0; j < datum.rank(); ++j) {
        QVec img = tau.apply(datum.simple_coroots[j]);
        if (img != datum.simple_coroots[root_perm[j]])
            throw Error(ErrorKind::GaloisIncompatible, "coroots do not follow the permutation");
    }
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        // <alpha_{p(i)}, M v> == <alpha_i, v> for all v
        for (int b = 0; b < n; ++b) {
            Rat lhs(0);
            for (int a = 0; a < n; ++a) lhs += datum.simple_roots[root_perm[i]][a] * Rat(m[a][b]);
            if (lhs != datum.simple_roots[i][b])
                throw Error(ErrorKind::GaloisIncompatible, "characters do not follow the permutation");
        }
    }
    // Isometry of the invariant form.
    for (int a = 0; a < n; ++a) {
        QVec ea = qvec_zero(n);
        ea[a] = 1;
        QVec ma = tau.apply(ea);
        for (int b = a; b < n; ++b) {
            QVec eb = qvec_zero(n);
            eb[b] = 1;
            if (datum.inner_product(ma, tau.apply(eb)) != datum.inner_product(ea, eb))
                throw Error(ErrorKind::GaloisIncompatible,
                            "automorphism does not preserve the invariant inner product");
        }
    }
    return tau;
}

}  // namespace pdcoh
