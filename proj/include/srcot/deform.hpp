#ifndef SRCOT_DEFORM_HPP
#define SRCOT_DEFORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "srcot/complex.hpp"
#include "srcot/cotangent.hpp"
#include "srcot/linalg.hpp"

namespace srcot {

/// A first-order deformation class in multidegree a - b: a cocycle
/// lambda on N_{a-b} (canonical order) vanishing on ~N.
struct T1Class {
    ExponentVector a;
    Face b;
    std::vector<Face> n_elems;
    std::vector<Rational> lambda;
};

/// An obstruction class: an antisymmetric cocycle on the N^(2) pairs of its
/// multidegree, plus its coordinates in the fixed cohomology basis of the
/// target piece (the t2_basis of piece_via_n at that key).
struct T2Class {
    ExponentVector a;
    Face b;
    std::vector<Face> n_elems;
    std::vector<std::pair<int, int>> pairs;  // index pairs into n_elems
    std::vector<Rational> values;            // on pairs
    std::vector<Rational> coords;
    bool zero_by_disjointness = false;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

/// Builds the class carried by one t1_basis element of a computed piece,
/// with the given exponent multiplicities on the key's a-support.
T1Class make_t1_class(const CotangentPiece& piece, const ExponentVector& a,
                      int basis_index);

/// Coordinates of a Hom cocycle (values on N) in the piece's t1 basis,
/// discarding the trivial constant component when #b = 1.
std::vector<Rational> t1_coordinates(const CotangentPiece& piece,
                                     const std::vector<Rational>& lambda);

/// Coordinates of a degree-1 cocycle (values on the kernel pairs) in the
/// piece's t2 basis, modulo coboundaries.
std::vector<Rational> t2_coordinates(const CotangentPiece& piece,
                                     const std::vector<Rational>& values);

/// Cup product. `descending` flips the greedy scan direction used for the
/// auxiliary maximal sets d, e; the resulting class must not depend on it.
T2Class cup(const SimplicialComplex& x, const T1Class& phi, const T1Class& psi,
            bool descending = false);

/// All exponent vectors with support exactly `s` and the given total degree.
std::vector<ExponentVector> exponent_vectors(Face s, int degree);

struct T1Coordinate {
    DegreeKey key;
    ExponentVector a;
    int basis_index = 0;
    std::string name;
};

struct QuadraticForm {
    DegreeKey key;
    ExponentVector a;
    int basis_index = 0;
    /// Symmetric matrix C over the t-coordinates; the form is t^T C t, so
    /// the coefficient of t_j t_k (j != k) is 2 C[j][k] = cup(phi_j, phi_k).
    QMatrix coeffs;
};

struct QuadraticObstruction {
    std::vector<T1Coordinate> coordinates;
    std::vector<QuadraticForm> forms;
};

/// Second-order equations of the base space: one quadratic form per
/// obstruction coordinate in the chosen coarse-degree slices.
QuadraticObstruction quadratic_base_equations(const SimplicialComplex& x,
                                              int t1_degree, int t2_degree,
                                              const Caps& caps = default_caps());

/// Restriction of a coarse-degree-0 class to the chart at vertex v,
/// realized on link(v, X) by pulling back along g -> g u ({v} \ b).
T1Class localize(const SimplicialComplex& x, const T1Class& phi, int v);
T2Class localize(const SimplicialComplex& x, const T2Class& tau, int v);

struct InjectivityResult {
    int kernel_dim = 0;
    bool injective() const { return kernel_dim == 0; }
};

/// Kernel dimension of the assembled localization map on the coarse
/// degree-0 part of T^i (i = 1 or 2), expected 0.
InjectivityResult injectivity_check(const SimplicialComplex& x, int i,
                                    const Caps& caps = default_caps());

} // namespace srcot

#endif
