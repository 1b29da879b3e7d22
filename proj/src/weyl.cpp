#include "pdcoh/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "pdcoh/errors.hpp"

namespace pdcoh {

long weyl_enumeration_bound() {
    if (const char* env = std::getenv("PDCOH_WEYL_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultWeylBound;
}

QVec apply_word_cochar(const RootDatum& datum, const std::vector<int>& word, const QVec& v) {
    QVec r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = datum.reflect_cochar(*it, r);
    return r;
}

static QVec apply_word_char(const RootDatum& datum, const std::vector<int>& word, const QVec& v) {
    QVec r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = datum.reflect_char(*it, r);
    return r;
}

IMat word_matrix(const RootDatum& datum, const std::vector<int>& word) {
    IMat m = imat_identity(datum.ambient_rank);
    for (int i : word) m = imat_mul(m, datum.reflection_matrix(i));
    return m;
}

int inversion_count(const RootDatum& datum, const std::vector<int>& word) {
    std::set<QVec> positive(datum.positive_roots.begin(), datum.positive_roots.end());
    int count = 0;
    for (const auto& beta : datum.positive_roots) {
        QVec img = apply_word_char(datum, word, beta);
        QVec neg = qvec_scale(Rat(-1), img);
        if (positive.count(neg)) ++count;
    }
    return count;
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& datum, long bound) {
    if (bound < 0) bound = weyl_enumeration_bound();
    Int order = datum.weyl_order();
    if (order > bound)
        throw Error(ErrorKind::GroupTooLarge,
                    "Weyl group of order " + order.get_str() + " exceeds the bound " +
                        std::to_string(bound));

    auto flatten = [](const IMat& m) {
        IVec f;
        for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
        return f;
    };

    std::vector<IMat> generators;
    for (std::size_t i = 0; i < datum.rank(); ++i) generators.push_back(datum.reflection_matrix(i));

    std::vector<WeylElement> out;
    std::map<IVec, int> seen;
    IMat id = imat_identity(datum.ambient_rank);
    out.push_back({id, {}, 0});
    seen[flatten(id)] = 0;
    for (std::size_t head = 0; head < out.size(); ++head) {
        IMat m = out[head].matrix;
        std::vector<int> word = out[head].word;
        int len = out[head].length;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            IMat next = imat_mul(m, generators[i]);
            IVec key = flatten(next);
            if (seen.count(key)) continue;
            seen[key] = static_cast<int>(out.size());
            std::vector<int> w = word;
            w.push_back(static_cast<int>(i));
            out.push_back({std::move(next), std::move(w), len + 1});
        }
    }
    internal_check(Int(static_cast<long>(out.size())) == order,
                   "Weyl enumeration count does not match the product formula");
    return out;
}

KostantSet kostant_representatives(const RootDatum& datum, const QVec& mu) {
    if (static_cast<int>(mu.size()) != datum.ambient_rank)
        throw Error(ErrorKind::DimensionMismatch, "mu has the wrong ambient dimension");
    if (!datum.is_dominant(mu))
        throw Error(ErrorKind::NotDominant, "mu is not dominant");

    // BFS on the orbit W.mu: depth = length of the minimal coset representative.
    std::map<QVec, int> index_of;
    std::vector<QVec> images;
    std::vector<int> depth;
    images.push_back(mu);
    depth.push_back(0);
    index_of[mu] = 0;
    for (std::size_t head = 0; head < images.size(); ++head) {
        QVec v = images[head];
        for (std::size_t i = 0; i < datum.rank(); ++i) {
            QVec w = datum.reflect_cochar(static_cast<int>(i), v);
            if (index_of.count(w)) continue;
            index_of[w] = static_cast<int>(images.size());
            images.push_back(w);
            depth.push_back(depth[head] + 1);
        }
    }

    // Canonical word: repeatedly take the least simple reflection that moves
    // the image one level down; this realizes the lexicographically least
    // reduced word of the minimal representative.
    KostantSet kset;
    kset.mu = mu;
    for (std::size_t s = 0; s < images.size(); ++s) {
        std::vector<int> word;
        QVec v = images[s];
        int d = depth[s];
        while (d > 0) {
            bool moved = false;
            for (std::size_t i = 0; i < datum.rank(); ++i) {
                QVec w = datum.reflect_cochar(static_cast<int>(i), v);
                auto it = index_of.find(w);
                internal_check(it != index_of.end(), "orbit BFS is not closed");
                if (depth[it->second] == d - 1) {
                    word.push_back(static_cast<int>(i));
                    v = w;
                    d -= 1;
                    moved = true;
                    break;
                }
            }
            internal_check(moved, "no descent found on a positive-depth orbit element");
        }
        internal_check(v == mu, "descent chain did not reach mu");
        KostantEntry entry;
        entry.word = std::move(word);
        entry.length = depth[s];
        entry.image = images[s];
        internal_check(apply_word_cochar(datum, entry.word, mu) == entry.image,
                       "canonical word does not reproduce the orbit image");
        kset.entries.push_back(std::move(entry));
    }
    std::sort(kset.entries.begin(), kset.entries.end(), [](const auto& a, const auto& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    return kset;
}

std::vector<GaloisOrbit> galois_orbits(const RootDatum& datum, const KostantSet& kset,
                                       const DiagramAutomorphism& tau) {
    if (tau.apply(kset.mu) != kset.mu)
        throw Error(ErrorKind::MuNotGaloisStable, "tau does not fix mu");
    (void)datum;
    std::map<QVec, int> index_of;
    for (std::size_t i = 0; i < kset.entries.size(); ++i) index_of[kset.entries[i].image] = static_cast<int>(i);

    std::vector<bool> visited(kset.entries.size(), false);
    std::vector<GaloisOrbit> orbits;
    for (std::size_t i = 0; i < kset.entries.size(); ++i) {
        if (visited[i]) continue;
        GaloisOrbit orbit;
        int j = static_cast<int>(i);
        do {
            visited[j] = true;
            orbit.members.push_back(j);
            QVec img = tau.apply(kset.entries[j].image);
            auto it = index_of.find(img);
            internal_check(it != index_of.end(), "tau does not preserve the Kostant set");
            j = it->second;
        } while (!visited[j]);
        std::sort(orbit.members.begin(), orbit.members.end());
        orbit.length = kset.entries[orbit.members[0]].length;
        for (int m : orbit.members)
            internal_check(kset.entries[m].length == orbit.length,
                           "Galois action does not preserve length");
        orbit.size = static_cast<int>(orbit.members.size());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const GaloisOrbit& a, const GaloisOrbit& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.members[0] < b.members[0];
    });
    int total = 0;
    for (const auto& o : orbits) total += o.size;
    internal_check(total == static_cast<int>(kset.entries.size()),
                   "orbit sizes do not partition the Kostant set");
    return orbits;
}

}  // namespace pdcoh
