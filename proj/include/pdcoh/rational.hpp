#ifndef PDCOH_RATIONAL_HPP
#define PDCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pdcoh {

using Int = mpz_class;
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

// mpq_class arithmetic assumes canonical form; raw (num, den) construction
// does not canonicalize, so all construction goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

bool is_integer(const Rat& q);

// "3", "-1/2"; throws Error{ParseError} on malformed input or zero denominator.
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& q);

QVec qvec_zero(std::size_t n);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& a);
Rat qvec_dot(const QVec& a, const QVec& b);
bool qvec_is_zero(const QVec& a);

QMat qmat_identity(std::size_t n);
QVec qmat_apply(const QMat& m, const QVec& v);
QMat qmat_mul(const QMat& a, const QMat& b);
QMat qmat_transpose(const QMat& m);

IMat imat_identity(std::size_t n);
IMat imat_mul(const IMat& a, const IMat& b);
QVec imat_apply(const IMat& m, const QVec& v);
bool imat_equal(const IMat& a, const IMat& b);

// Solves sum_j x_j columns[j] = rhs for independent columns.
// Sets ok = false when the system is inconsistent.
QVec solve_in_span(const std::vector<QVec>& columns, const QVec& rhs, bool& ok);

// Basis of { x : rows[i] . x = 0 for all i } inside Q^n.
std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t n);

}  // namespace pdcoh

#endif
