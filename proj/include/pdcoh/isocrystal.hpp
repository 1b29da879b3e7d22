#ifndef PDCOH_ISOCRYSTAL_HPP
#define PDCOH_ISOCRYSTAL_HPP

#include <vector>

#include "pdcoh/rational.hpp"
#include "pdcoh/rootdata.hpp"

namespace pdcoh {

enum class NewtonFrame { GLn, GeneralDominant };

struct NewtonVector {
    NewtonFrame frame = NewtonFrame::GLn;
    QVec values;  // nonincreasing slopes (GLn) or a dominant rational cocharacter

    static NewtonVector gln(QVec slopes);
    static NewtonVector general(QVec cocharacter);
};

struct KottwitzPointGLn {
    NewtonVector newton;
    Int kappa;  // sum of the slopes, integral by the integrality condition
};

// Dominance order on the GLn frame: all partial sums of y dominate those of
// x, with equality at the full sum.
bool dominance_leq(const NewtonVector& x, const NewtonVector& y);

// mu^diamond = (1/order) sum_k tau^k(mu).
QVec galois_average(const RootDatum& datum, const QVec& mu, const DiagramAutomorphism& tau);

bool is_basic(const RootDatum& datum, const NewtonVector& nu);
bool is_basic_gln(const NewtonVector& nu);

// All sigma-conjugacy classes [b] with nu_b <= mu, listed by their Newton
// vectors: integral (n_i x_i in Z per isotypic block) nonincreasing rational
// vectors below mu in the dominance order.  Sorted lexicographically
// descending, which refines the dominance order.
std::vector<KottwitzPointGLn> acceptable_set_gln(int n, const std::vector<Int>& mu);

// nu <= mu^diamond in the dominance order on the dominant chamber:
// mu^diamond - nu is a nonnegative rational combination of simple coroots
// (which forces equal central components).
bool is_acceptable(const RootDatum& datum, const NewtonVector& nu, const QVec& mu,
                   const DiagramAutomorphism& tau);

}  // namespace pdcoh

#endif
