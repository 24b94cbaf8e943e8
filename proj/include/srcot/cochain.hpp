#ifndef SRCOT_COCHAIN_HPP
#define SRCOT_COCHAIN_HPP

#include <functional>
#include <vector>

#include "srcot/complex.hpp"
#include "srcot/linalg.hpp"

namespace srcot {

/// A truncated cochain complex over Q. bases[k] holds the degree-k basis as
/// index tuples into some element list; d[k] maps degree k to degree k+1.
/// d(k+1) o d(k) = 0 is asserted at build time.
struct CochainComplexQ {
    std::vector<std::vector<std::vector<int>>> bases;
    std::vector<QMatrix> d;
    /// Built relative to a nonempty subobject (cohomology is then relative;
    /// the reduced flag is a no-op by the standard reduced = unreduced fact).
    bool relative = false;

    int dim(int k) const {
        return k >= 0 && k < (int)bases.size() ? (int)bases[k].size() : 0;
    }
    int top_degree() const { return (int)bases.size() - 1; }
};

struct CohomologyDims {
    std::vector<int> h;
    bool reduced = false;

    int operator[](int k) const { return k >= 0 && k < (int)h.size() ? h[k] : 0; }
};

/// Builds the complex whose degree-k basis is the (k+1)-element subsets S of
/// {0,...,n-1} with keep(S) true, excluding those with in_sub(S) true, with
/// the simplicial coboundary. `keep` must be hereditary (closed under taking
/// subsets), as must `in_sub`.
CochainComplexQ build_subset_complex(
    int num_elements, int k_max,
    const std::function<bool(const std::vector<int>&)>& keep,
    const std::function<bool(const std::vector<int>&)>& in_sub);

/// K^bullet(Y) for a U-subset Y: degree-k basis = (k+1)-subsets of Y whose
/// union is a face of the parent complex.
CochainComplexQ k_complex(const USubset& y, int k_max);

/// ker(K(N) ->> K(~N)).
CochainComplexQ kernel_complex(const USubset& n, const USubset& nt, int k_max);

/// Cochain complex of the order complex of Y, relative to the flags lying
/// entirely inside `rel` (pass an empty vector for the absolute complex).
CochainComplexQ order_cochain_complex(const OrderComplex& y,
                                      const std::vector<Face>& rel, int k_max);

/// Ordered-simplex cochain complex of X over Q, optionally relative to a
/// subcomplex A (basis = faces of X not in A).
CochainComplexQ simplicial_cochain_complex(const SimplicialComplex& x,
                                           const SimplicialComplex* rel, int k_max);

/// Cohomology dimensions h^k for k = 0..top_degree-1. With `reduced` set,
/// subtracts the augmentation from h^0 when the complex is absolute and its
/// degree-0 part is nonzero.
CohomologyDims cohomology(const CochainComplexQ& c, bool reduced);

} // namespace srcot

#endif
