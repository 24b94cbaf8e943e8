#ifndef SRCOT_COTANGENT_HPP
#define SRCOT_COTANGENT_HPP

#include <array>
#include <vector>

#include "srcot/cochain.hpp"
#include "srcot/complex.hpp"
#include "srcot/linalg.hpp"

namespace srcot {

/// A multidegree at support level: a in X, b nonempty, disjoint from a.
struct DegreeKey {
    Face a;
    Face b;
    bool operator==(const DegreeKey&) const = default;
};

inline bool key_less(const DegreeKey& x, const DegreeKey& y) {
    if (x.a != y.a) return face_less(x.a, y.a);
    return face_less(x.b, y.b);
}

struct PieceDims {
    int hom = 0;
    int t1 = 0;
    int t2 = 0;
    bool operator==(const PieceDims&) const = default;
    bool all_zero() const { return hom == 0 && t1 == 0 && t2 == 0; }
};

/// The kernel complex ker(K(N) ->> K(~N)) of one degree, with its bases kept
/// in terms of the elements of N.
struct KernelData {
    std::vector<Face> n_elems;                 // N canonical
    std::vector<char> in_tilde;                // parallel to n_elems
    std::vector<int> deg0;                     // indices into n_elems (N \ ~N)
    std::vector<std::pair<int, int>> deg1;     // index pairs, first < second
    std::vector<std::array<int, 3>> deg2;
    QMatrix d0;                                // deg1 x deg0
    QMatrix d1;                                // deg2 x deg1
};

KernelData kernel_data(const SimplicialComplex& x, Face a, Face b);

struct CotangentPiece {
    DegreeKey key;
    PieceDims dims;
    KernelData kernel;
    /// Cocycle bases. hom_basis and t1_basis are values on n_elems (zero on
    /// ~N); t2_basis lives on the deg1 pairs.
    std::vector<std::vector<Rational>> hom_basis;
    std::vector<std::vector<Rational>> t1_basis;
    std::vector<std::vector<Rational>> t2_basis;
};

/// All (a, b) with a in X and b a nonempty subset of the vertices of
/// link(a, X); outside these every T^i piece vanishes.
std::vector<DegreeKey> relevant_degrees(const SimplicialComplex& x,
                                        const Caps& caps = default_caps());

CotangentPiece piece_via_n(const SimplicialComplex& x, const DegreeKey& key);
PieceDims piece_via_order(const SimplicialComplex& x, const DegreeKey& key);
PieceDims piece_via_u(const SimplicialComplex& x, const DegreeKey& key);

/// Dims at (a, b) on X equal dims at (emptyset, b) on link(a, X).
bool link_reduction_check(const SimplicialComplex& x, const DegreeKey& key);

struct T0Description {
    /// Per vertex v: the minimal faces a with closed-star(a) inside
    /// closed-star(v); they generate the ideal coefficient of d/dx_v.
    std::vector<std::vector<Face>> generators;
    bool module_generated_by_delta = false;
};

T0Description t0(const SimplicialComplex& x);

/// Nonzero pieces over all relevant degrees, via the N route, in canonical
/// key order. jobs > 1 runs the per-key work pool with OpenMP; jobs == 1 is
/// the serial reference.
std::vector<CotangentPiece> full_report(const SimplicialComplex& x, int jobs = 1,
                                        const Caps& caps = default_caps());

/// Total dimension of the coarse degree-d part of T^i (i = 1 or 2).
long coarse_slice(const SimplicialComplex& x, int i, int d,
                  const Caps& caps = default_caps());
long coarse_slice(const std::vector<CotangentPiece>& report, int i, int d);

/// Number of exponent vectors with the given support and total degree.
long multiplicity_count(Face support, int degree);

bool is_closed_surface(const SimplicialComplex& x);

struct ManifoldPiece {
    DegreeKey key;
    ExponentVector a_mult;   // the degree-0 multiplicity vector
    int configuration = 0;   // 1..4 for T1 pieces, 0 for T2 pieces
    int dim = 0;
};

struct ManifoldClassification {
    std::vector<ManifoldPiece> t1_pieces;
    std::vector<ManifoldPiece> t2_pieces;
};

/// Degree-0 classification for a closed-surface triangulation. Throws if the
/// input is not a closed surface or if a nonzero piece matches none of the
/// known configurations.
ManifoldClassification manifold_degree0_classification(const SimplicialComplex& x);

} // namespace srcot

#endif
