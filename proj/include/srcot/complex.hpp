#ifndef SRCOT_COMPLEX_HPP
#define SRCOT_COMPLEX_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "srcot/face.hpp"

namespace srcot {

/// Raised when an operation would enumerate past the configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default enumeration caps (ambient vertex count n+1).
struct Caps {
    int complex_ambient = 20;  // general complex operations
    int nonface_ambient = 14;  // anything enumerating Delta_n \ X
};

/// Returns the caps, honoring the SRCOT_CAP environment override.
Caps default_caps();

/// A finite simplicial complex on an ambient vertex set {0,...,ambient-1}.
/// The complex with no faces at all ("void") is distinct from {emptyset}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(int ambient,
                                          std::vector<std::string> names = {});
    /// Downward closure of the given facets. Ghost vertices (named but in no
    /// facet) are recorded but are not faces.
    static SimplicialComplex from_facet_faces(int ambient,
                                              const std::vector<Face>& facets,
                                              std::vector<std::string> names = {});
    /// Label-level ingestion. If `names` is empty the vertex set is inferred
    /// from the facets and sorted lexicographically.
    static SimplicialComplex from_facets(
        std::vector<std::string> names,
        const std::vector<std::vector<std::string>>& facet_labels);

    int ambient_size() const { return ambient_; }
    bool is_void() const { return faces_.empty(); }
    std::size_t num_faces() const { return faces_.size(); }
    bool contains(Face f) const { return faces_.count(f.bits()) != 0; }

    /// Faces in canonical order.
    const std::vector<Face>& faces() const { return sorted_faces_; }
    const std::vector<Face>& facets() const { return facets_; }
    /// Vertex set [X] (indices v with {v} a face).
    Face vertex_set() const;
    /// Number of faces of each cardinality 0..dim+1.
    std::vector<int> f_vector() const;

    const std::vector<std::string>& vertex_names() const { return names_; }
    std::string name_of(int v) const;
    std::optional<int> index_of(const std::string& name) const;

    bool operator==(const SimplicialComplex& o) const {
        return ambient_ == o.ambient_ && sorted_faces_ == o.sorted_faces_;
    }

private:
    int ambient_ = 0;
    std::vector<std::string> names_;
    std::unordered_set<std::uint64_t> faces_;
    std::vector<Face> sorted_faces_;
    std::vector<Face> facets_;

    void finalize();
};

/// A subset Y of the faces of a complex, closed under unions that remain
/// faces (property U). May contain the empty face as an element.
class USubset {
public:
    USubset() = default;
    USubset(const SimplicialComplex& parent, std::vector<Face> elements);

    const SimplicialComplex& parent() const { return *parent_; }
    /// Elements in canonical order.
    const std::vector<Face>& elements() const { return elements_; }
    bool contains(Face f) const { return set_.count(f.bits()) != 0; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }

    bool has_property_u() const;

private:
    const SimplicialComplex* parent_ = nullptr;
    std::vector<Face> elements_;
    std::unordered_set<std::uint64_t> set_;
};

SimplicialComplex link(Face f, const SimplicialComplex& X);
USubset star_open(Face f, const SimplicialComplex& X);
SimplicialComplex star_closed(Face f, const SimplicialComplex& X);
/// Join of two complexes on disjoint ambient vertex sets.
SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y);
/// Cone: join with a fresh vertex appended after the ambient set.
SimplicialComplex cone(const SimplicialComplex& X);
/// The boundary of the full simplex on g (all proper subsets of g).
SimplicialComplex simplex_boundary(Face g, int ambient = -1);

/// The sets N_{a-b} and ~N_{a-b}; both satisfy property U.
std::pair<USubset, USubset> n_sets(const SimplicialComplex& X, Face a, Face b);

/// The sets U_b and ~U_b of X; requires b nonempty.
std::pair<USubset, USubset> u_sets(const SimplicialComplex& X, Face b);

struct MSets {
    std::vector<Face> m;                       // canonical order
    std::vector<std::pair<Face, Face>> m2;     // ordered pairs, both orders
    bool pair_in_m2(Face p, Face q) const;
};
MSets m_sets(const SimplicialComplex& X, Face a, Face b,
             const Caps& caps = default_caps());

/// Phi(p) = (p u a) \ b.
inline Face phi_map(Face p, Face a, Face b) { return p.unite(a).minus(b); }

/// The order complex of a subset Y: vertices are the elements of Y, faces
/// are flags under strict inclusion. Kept lightweight; faces are chains of
/// element indices, materialized on demand.
class OrderComplex {
public:
    OrderComplex() = default;
    explicit OrderComplex(std::vector<Face> elements);

    const std::vector<Face>& elements() const { return elements_; }
    std::size_t num_elements() const { return elements_.size(); }
    bool comparable(int i, int j) const;  // strict inclusion either way

    /// All chains of k+1 elements (k-faces), as increasing index tuples.
    std::vector<std::vector<int>> flags_of_dim(int k) const;

    /// Materialize as a SimplicialComplex (one vertex per element).
    SimplicialComplex as_complex() const;

private:
    std::vector<Face> elements_;  // canonical order; inclusion implies <=
};

OrderComplex order_complex(const USubset& Y);
OrderComplex order_complex(const std::vector<Face>& Y);

/// All subsets of the ambient set that are not faces of X, canonical order.
std::vector<Face> non_faces(const SimplicialComplex& X,
                            const Caps& caps = default_caps());

/// Minimal non-faces (the minimal generators of the Stanley-Reisner ideal).
std::vector<Face> minimal_non_faces(const SimplicialComplex& X,
                                    const Caps& caps = default_caps());

} // namespace srcot

#endif
