#ifndef PDCOH_ROOTDATA_HPP
#define PDCOH_ROOTDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdcoh/rational.hpp"

namespace pdcoh {

// Exact based root data.
//
// Characters and cocharacters both live in Q^N for an explicit ambient N per
// factor, and the canonical pairing is the coordinate dot product:
//   - GL_n and A_n use the standard permutation realization (A_n sits in
//     Q^{n+1}),
//   - B_n / C_n / D_n use the standard Euclidean realizations,
//   - E6 / E7 / E8 / F4 / G2 are realized in coweight coordinates (the basis
//     of X_* is the set of fundamental coweights), which keeps every simple
//     root and coroot integral,
//   - Torus_n contributes n coordinates and no roots.
// Products are block-diagonal concatenations with globally numbered simple
// roots.

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, GL, Torus };

struct CartanFactor {
    Family family;
    int rank;
};

struct CartanSpec {
    std::vector<CartanFactor> factors;

    // "GL4", "B10", "A2xA1", "GL3xTorus1".
    static CartanSpec parse(const std::string& text);
    std::string to_string() const;
    void validate() const;  // throws Error{InvalidCartanSpec}
};

// Per-irreducible-factor positive rescaling of the invariant inner product.
// The default normalizes each factor so that short coroots have squared
// length 2 (Torus blocks carry the identity form).
struct Normalization {
    std::vector<Rat> factor_scale;  // empty means all ones
};

struct RootDatum;

// A pinned automorphism of the based root datum, acting on the cocharacter
// lattice by the integer matrix `matrix`.  `root_perm` permutes the global
// simple-root indices, `torus_perm` permutes the ambient coordinates owned by
// Torus factors (indexed by position in RootDatum::torus_coords).
struct DiagramAutomorphism {
    std::vector<int> root_perm;
    std::vector<int> torus_perm;
    int order = 1;
    IMat matrix;

    bool is_identity() const;
    QVec apply(const QVec& cochar) const;
};

struct RootDatum {
    CartanSpec spec;
    int ambient_rank = 0;
    std::vector<QVec> simple_roots;            // characters, integral
    std::vector<QVec> simple_coroots;          // cocharacters, integral
    std::vector<QVec> positive_roots;          // characters
    std::vector<IVec> positive_root_coeffs;    // simple-root coefficients
    IMat cartan;                               // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<QVec> fundamental_coweights;   // dual basis inside coroot span
    QMat inner;                                // invariant inner product on X_*
    std::vector<int> factor_of_root;           // simple root index -> factor index
    std::vector<std::pair<int, int>> factor_blocks;  // [begin, end) ambient coords
    std::vector<int> torus_coords;             // ambient coords of Torus factors

    std::size_t rank() const { return simple_roots.size(); }

    Rat pairing(const QVec& character, const QVec& cocharacter) const;
    Rat inner_product(const QVec& a, const QVec& b) const;

    // s_i on cocharacters / characters.
    QVec reflect_cochar(int i, const QVec& v) const;
    QVec reflect_char(int i, const QVec& v) const;
    IMat reflection_matrix(int i) const;

    bool is_dominant(const QVec& cocharacter) const;
    bool is_integral(const QVec& cocharacter) const;

    // P-orthogonal complement of the coroot span == { z : <alpha, z> = 0 }.
    std::vector<QVec> central_basis() const;
    QVec central_projection(const QVec& cocharacter) const;

    Int weyl_order() const;  // product formula per factor
};

RootDatum build_root_datum(const CartanSpec& spec,
                           const Normalization& normalization = {});

// Validates the permutation data and assembles the lattice matrix; throws
// Error{GaloisIncompatible} when the permutation does not preserve the Cartan
// matrix or is not realizable on the chosen lattices.
DiagramAutomorphism make_diagram_automorphism(const RootDatum& datum,
                                              const std::vector<int>& root_perm,
                                              const std::vector<int>& torus_perm = {});

DiagramAutomorphism identity_automorphism(const RootDatum& datum);

}  // namespace pdcoh

#endif
