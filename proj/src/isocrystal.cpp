#include "pdcoh/isocrystal.hpp"

#include <algorithm>

#include "pdcoh/errors.hpp"

namespace pdcoh {

NewtonVector NewtonVector::gln(QVec slopes) {
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
        if (slopes[i] < slopes[i + 1])
            throw Error(ErrorKind::InvalidMu, "GLn Newton vector must be nonincreasing");
    return {NewtonFrame::GLn, std::move(slopes)};
}

NewtonVector NewtonVector::general(QVec cocharacter) {
    return {NewtonFrame::GeneralDominant, std::move(cocharacter)};
}

bool dominance_leq(const NewtonVector& x, const NewtonVector& y) {
    if (x.frame != NewtonFrame::GLn || y.frame != NewtonFrame::GLn)
        throw Error(ErrorKind::FrameMismatch, "dominance_leq expects the GLn frame");
    if (x.values.size() != y.values.size())
        throw Error(ErrorKind::FrameMismatch, "dominance_leq: length mismatch");
    Rat px(0), py(0);
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        px += x.values[i];
        py += y.values[i];
        if (px > py) return false;
    }
    return px == py;
}

QVec galois_average(const RootDatum& datum, const QVec& mu, const DiagramAutomorphism& tau) {
    if (static_cast<int>(mu.size()) != datum.ambient_rank)
        throw Error(ErrorKind::DimensionMismatch, "galois_average: wrong dimension");
    QVec sum = qvec_zero(mu.size());
    QVec v = mu;
    for (int k = 0; k < tau.order; ++k) {
        sum = qvec_add(sum, v);
        v = tau.apply(v);
    }
    internal_check(v == mu, "tau^order is not the identity on mu");
    return qvec_scale(make_rat(1, tau.order), sum);
}

bool is_basic_gln(const NewtonVector& nu) {
    if (nu.frame != NewtonFrame::GLn)
        throw Error(ErrorKind::FrameMismatch, "is_basic_gln expects the GLn frame");
    for (std::size_t i = 1; i < nu.values.size(); ++i)
        if (nu.values[i] != nu.values[0]) return false;
    return true;
}

bool is_basic(const RootDatum& datum, const NewtonVector& nu) {
    if (nu.frame == NewtonFrame::GLn) return is_basic_gln(nu);
    for (const auto& alpha : datum.simple_roots)
        if (datum.pairing(alpha, nu.values) != 0) return false;
    return true;
}

namespace {

// Recursive block enumeration: blocks of equal slope x with multiplicity m
// satisfy m x in Z, values strictly decreasing across blocks, prefix sums
// dominated by those of mu.
void enumerate_blocks(int n, const std::vector<Rat>& mu_prefix, const Rat& total,
                      int placed, const Rat& prefix_sum, const Rat& slope_bound,
                      bool has_bound, QVec& acc, std::vector<QVec>& out) {
    if (placed == n) {
        if (prefix_sum == total) out.push_back(acc);
        return;
    }
    int remaining = n - placed;
    for (int m = 1; m <= remaining; ++m) {
        // slope x = k/m; bounded above by the previous slope (strictly) and
        // by what dominance allows at the block end.
        Rat upper = (mu_prefix[placed + m] - prefix_sum) / m;
        if (has_bound && slope_bound < upper) upper = slope_bound;
        // lower bound: the rest of the vector is <= x, so m x + (remaining-m) x
        // >= total - prefix  =>  x >= (total - prefix) / remaining.
        Rat lower = (total - prefix_sum) / remaining;
        Int k_hi = (Int(m) * upper.get_num()) / upper.get_den();
        while (Rat(k_hi) / m > upper) --k_hi;
        if (has_bound) {
            // strict decrease across blocks
            while (Rat(k_hi) / m >= slope_bound) --k_hi;
        }
        Int k_lo = (Int(m) * lower.get_num()) / lower.get_den();
        while (Rat(k_lo) / m < lower) ++k_lo;
        for (Int k = k_hi; k >= k_lo; --k) {
            Rat x = make_rat(k, Int(m));
            // prefix dominance must hold at every block end; interior indices
            // follow because the prefix sums of mu are concave.
            Rat new_sum = prefix_sum + x * m;
            bool ok = true;
            Rat running = prefix_sum;
            for (int t = 1; t <= m; ++t) {
                running += x;
                if (running > mu_prefix[placed + t]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (int t = 0; t < m; ++t) acc.push_back(x);
            enumerate_blocks(n, mu_prefix, total, placed + m, new_sum, x, true, acc, out);
            for (int t = 0; t < m; ++t) acc.pop_back();
        }
    }
}

}  // namespace

std::vector<KottwitzPointGLn> acceptable_set_gln(int n, const std::vector<Int>& mu) {
    if (n <= 0 || static_cast<int>(mu.size()) != n)
        throw Error(ErrorKind::InvalidMu, "mu must have length n");
    for (int i = 0; i + 1 < n; ++i)
        if (mu[i] < mu[i + 1])
            throw Error(ErrorKind::InvalidMu, "mu must be nonincreasing");

    std::vector<Rat> mu_prefix(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) mu_prefix[i + 1] = mu_prefix[i] + Rat(mu[i]);
    Rat total = mu_prefix[n];

    std::vector<QVec> found;
    QVec acc;
    enumerate_blocks(n, mu_prefix, total, 0, Rat(0), Rat(0), false, acc, found);

    std::sort(found.begin(), found.end(), [](const QVec& a, const QVec& b) { return b < a; });
    std::vector<KottwitzPointGLn> out;
    for (auto& v : found) {
        Rat kappa(0);
        for (const auto& x : v) kappa += x;
        internal_check(is_integer(kappa), "kappa is not integral");
        KottwitzPointGLn pt;
        pt.kappa = kappa.get_num();
        pt.newton = NewtonVector::gln(std::move(v));
        out.push_back(std::move(pt));
    }
    return out;
}

bool is_acceptable(const RootDatum& datum, const NewtonVector& nu, const QVec& mu,
                   const DiagramAutomorphism& tau) {
    if (nu.frame != NewtonFrame::GeneralDominant)
        throw Error(ErrorKind::FrameMismatch, "is_acceptable expects a cocharacter frame");
    if (!is_basic(datum, nu))
        throw Error(ErrorKind::NotBasic, "nu is not basic");
    if (tau.apply(nu.values) != nu.values)
        throw Error(ErrorKind::MuNotGaloisStable, "tau does not fix nu");
    QVec diamond = galois_average(datum, mu, tau);
    QVec diff = qvec_sub(diamond, nu.values);
    if (datum.simple_coroots.empty()) return qvec_is_zero(diff);
    bool ok = true;
    QVec c = solve_in_span(datum.simple_coroots, diff, ok);
    if (!ok) return false;  // nonzero central component
    for (const auto& x : c)
        if (x < 0) return false;
    return true;
}

}  // namespace pdcoh
