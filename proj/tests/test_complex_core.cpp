#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "srcot/complex.hpp"
#include "srcot/gen.hpp"

using namespace srcot;

namespace {

Face by_names(const SimplicialComplex& x, std::initializer_list<const char*> names) {
    Face f;
    for (const char* n : names) {
        auto idx = x.index_of(n);
        REQUIRE(idx.has_value());
        f = f.with(*idx);
    }
    return f;
}

} // namespace

TEST_CASE("octahedron structure") {
    SimplicialComplex oct = make_generator("octahedron");
    CHECK(oct.f_vector() == std::vector<int>{1, 6, 12, 8});
    CHECK(oct.num_faces() == 27);
    CHECK(oct.vertex_set().size() == 6);
    CHECK(oct.contains(by_names(oct, {"x", "y", "z"})));
    CHECK(!oct.contains(by_names(oct, {"x", "x2"})));

    SimplicialComplex d = make_generator("octahedron-diagonals");
    CHECK(d.num_faces() == 30);
    CHECK(d.contains(by_names(d, {"x", "x2"})));
    CHECK(!d.contains(by_names(d, {"x", "x2", "y"})));
}

TEST_CASE("link, stars, join, cone") {
    SimplicialComplex oct = make_generator("octahedron");
    Face x = by_names(oct, {"x"});
    SimplicialComplex lk = link(x, oct);
    // the link of a vertex of the octahedron is a 4-cycle
    CHECK(lk.f_vector() == std::vector<int>{1, 4, 4});
    CHECK(!lk.vertex_set().contains(*oct.index_of("x2")));

    CHECK(star_closed(x, oct).num_faces() == 18);
    USubset st = star_open(x, oct);
    CHECK(st.size() == 9);  // faces containing x
    CHECK(st.has_property_u());

    SimplicialComplex two = make_generator("sphere0");
    SimplicialComplex c = cone(two);
    CHECK(c.f_vector() == std::vector<int>{1, 3, 2});
    // a path on vertices {2,3,4}, disjoint from the sphere0 vertices {0,1}
    SimplicialComplex path = SimplicialComplex::from_facet_faces(
        5, {Face::of({2, 3}), Face::of({3, 4})}, {"0", "1", "p", "q", "r"});
    SimplicialComplex j = join(two, path);
    CHECK(j.vertex_set().size() == 5);
    CHECK(j.contains(Face::of({0, 2, 3})));
}

TEST_CASE("simplex boundary") {
    SimplicialComplex bd = simplex_boundary(Face::full(4), 4);
    CHECK(bd.f_vector() == std::vector<int>{1, 4, 6, 4});
    CHECK(bd == make_generator("simplex-boundary:3"));
}

TEST_CASE("N sets of the octahedron with diagonals") {
    SimplicialComplex d = make_generator("octahedron-diagonals");
    Face b = by_names(d, {"y", "y2"});
    auto [n, nt] = n_sets(d, Face{}, b);
    REQUIRE(n.size() == 10);
    int verts = 0, edges = 0;
    for (Face f : n.elements()) {
        if (f.size() == 1) ++verts;
        if (f.size() == 2) ++edges;
    }
    CHECK(verts == 4);
    CHECK(edges == 6);
    REQUIRE(nt.size() == 2);
    CHECK(nt.contains(by_names(d, {"x", "x2"})));
    CHECK(nt.contains(by_names(d, {"z", "z2"})));
    CHECK(n.has_property_u());
    CHECK(nt.has_property_u());
}

TEST_CASE("U sets live on the link") {
    SimplicialComplex oct = make_generator("octahedron");
    SimplicialComplex lk = link(by_names(oct, {"x"}), oct);
    auto [u, ut] = u_sets(lk, by_names(oct, {"y", "y2"}));
    CHECK(u.has_property_u());
    CHECK(ut.has_property_u());
    for (Face f : ut.elements()) CHECK(u.contains(f));
}

TEST_CASE("M sets") {
    SimplicialComplex s0 = make_generator("sphere0");
    MSets ms = m_sets(s0, Face{}, Face::of({0, 1}));
    REQUIRE(ms.m.size() == 1);
    CHECK(ms.m[0] == Face::of({0, 1}));

    SimplicialComplex e5 = make_generator("ngon:5");
    MSets m5 = m_sets(e5, Face::of({1}), Face::of({0, 2}));
    for (Face p : m5.m) {
        CHECK(!e5.contains(p));
        CHECK(e5.contains(phi_map(p, Face::of({1}), Face::of({0, 2}))));
    }
    for (auto [p, q] : m5.m2)
        CHECK(e5.contains(phi_map(p.unite(q), Face::of({1}), Face::of({0, 2}))));
}

TEST_CASE("non-faces and minimal non-faces") {
    SimplicialComplex e4 = make_generator("ngon:4");
    CHECK(non_faces(e4).size() == 7);
    auto mnf = minimal_non_faces(e4);
    REQUIRE(mnf.size() == 2);
    CHECK(std::find(mnf.begin(), mnf.end(), Face::of({0, 2})) != mnf.end());
    CHECK(std::find(mnf.begin(), mnf.end(), Face::of({1, 3})) != mnf.end());
}

TEST_CASE("order complex") {
    SimplicialComplex e4 = make_generator("ngon:4");
    auto [n, nt] = n_sets(e4, Face{}, Face::of({0, 2}));
    OrderComplex oc = order_complex(n);
    CHECK(oc.num_elements() == n.size());
    for (const auto& flag : oc.flags_of_dim(1))
        CHECK(oc.comparable(flag[0], flag[1]));
    SimplicialComplex mat = oc.as_complex();
    CHECK(mat.vertex_set().size() == (int)oc.num_elements());
}

TEST_CASE("caps raise resource errors") {
    Caps tight;
    tight.complex_ambient = 4;
    tight.nonface_ambient = 4;
    SimplicialComplex e6 = make_generator("ngon:6");
    CHECK_THROWS_AS(non_faces(e6, tight), ResourceError);
    CHECK_THROWS_AS(m_sets(e6, Face{}, Face::of({0, 3}), tight), ResourceError);
}

TEST_CASE("label ingestion and naming") {
    SimplicialComplex x = SimplicialComplex::from_facets(
        {}, {{"b", "a"}, {"c"}});
    // names inferred and sorted lexicographically
    CHECK(x.name_of(0) == "a");
    CHECK(x.index_of("c") == 2);
    CHECK(!x.index_of("zz").has_value());
    CHECK(x.contains(Face::of({0, 1})));
    CHECK(!x.contains(Face::of({0, 2})));
}
