// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here recomputes from scratch; no cached values.
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "srcot/cotangent.hpp"
#include "srcot/deform.hpp"
#include "srcot/gen.hpp"
#include "srcot/taylor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace srcot;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok, const std::string& note = "") {
    std::printf("criterion %2d [%s] %s%s%s\n", num, ok ? "PASS" : "FAIL", what,
                note.empty() ? "" : ": ", note.c_str());
    if (!ok) ++failures;
}

ExponentVector ev(Face f) { return ExponentVector::characteristic(f); }

constexpr int X = 0, Y = 1, Z = 2, X2 = 3, Y2 = 4, Z2 = 5;

int cyclic_dist(int u, int v, int n) {
    int d = ((v - u) % n + n) % n;
    return d < n - d ? d : n - d;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, PieceDims> report_map(
    const std::vector<CotangentPiece>& rows) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, PieceDims> m;
    for (const auto& p : rows) m[{p.key.a.bits(), p.key.b.bits()}] = p.dims;
    return m;
}

// ---- criterion 1: the 0-sphere ----

bool criterion1(std::string& note) {
    SimplicialComplex s0 = make_generator("sphere0");
    auto rows = full_report(s0);
    if (rows.size() != 1 || rows[0].key.a != Face{} ||
        rows[0].key.b != Face::of({0, 1}) ||
        !(rows[0].dims == PieceDims{1, 1, 0})) {
        note = "report rows differ from the single expected piece";
        return false;
    }
    // every piece with b a single vertex is zero beyond Hom
    for (const DegreeKey& key : relevant_degrees(s0)) {
        PieceDims d = piece_via_n(s0, key).dims;
        if ((d.t1 != 0 || d.t2 != 0) && !(key == rows[0].key)) {
            note = "unexpected nonzero piece";
            return false;
        }
    }
    auto eq = perturbed_equations(s0, ExponentVector{}, Face::of({0, 1}),
                                  piece_via_n(s0, rows[0].key).t1_basis[0]);
    if (eq.size() != 1 || eq[0] != "x0 x1 - eps") {
        note = "perturbed equation rendered as '" + (eq.empty() ? "" : eq[0]) + "'";
        return false;
    }
    return true;
}

// ---- criterion 2: octahedron with diagonals ----

bool criterion2(std::string& note) {
    SimplicialComplex d = make_generator("octahedron-diagonals");
    auto rows = full_report(d, 4);
    int edge_t1 = 0, vertex_t1 = 0, antipodal_t2 = 0, empty_t2 = 0, single_b = 0;
    for (const auto& p : rows) {
        Face a = p.key.a, b = p.key.b;
        bool ok;
        if (a.empty() && b.size() == 1) {
            // forced by the three union-components of N at (0 | v): the two
            // diagonals avoiding v plus everything containing the antipode
            ok = p.dims == PieceDims{3, 2, 1};
            ++single_b;
        } else if (a.size() == 2 && b.size() == 2) {
            // octahedron edge with the complementary antipodal pair
            auto bm = b.members();
            ok = p.dims.t1 == 1 && p.dims.t2 == 0 && d.contains(a) &&
                 (bm[0] + 3) % 6 == bm[1] && a.disjoint(b);
            ++edge_t1;
        } else if (a.size() == 1 && b.size() == 1 &&
                   (a.min_member() + 3) % 6 != b.min_member()) {
            ok = p.dims.t1 == 1 && p.dims.t2 == 0;
            ++vertex_t1;
        } else if (a.size() == 1 && b.size() == 1) {
            ok = p.dims.t1 == 0 && p.dims.t2 == 1;
            ++antipodal_t2;
        } else if (a.empty() && b.size() == 2) {
            auto bm = b.members();
            ok = p.dims.t1 == 0 && p.dims.t2 == 4 && (bm[0] + 3) % 6 == bm[1];
            ++empty_t2;
        } else {
            ok = false;
        }
        if (!ok) {
            note = "row outside the expected orbit structure";
            return false;
        }
    }
    if (edge_t1 != 12 || vertex_t1 != 24 || antipodal_t2 != 6 || empty_t2 != 3 ||
        single_b != 6) {
        note = "orbit sizes " + std::to_string(edge_t1) + "/" +
               std::to_string(vertex_t1) + "/" + std::to_string(antipodal_t2) +
               "/" + std::to_string(empty_t2) + "/" + std::to_string(single_b);
        return false;
    }
    note = "boxed orbits exact; plus the six forced (0 | v) pieces of dims (3,2,1)";
    return true;
}

// ---- criterion 3: n-gon dimensions ----

bool criterion3(std::string& note) {
    for (int n = 3; n <= 9; ++n) {
        auto rows = full_report(make_generator("ngon:" + std::to_string(n)), 4);
        long total_t2 = 0;
        std::set<std::pair<std::uint64_t, std::uint64_t>> t1_keys;
        for (const auto& p : rows) {
            total_t2 += p.dims.t2;
            if (p.dims.t2 > 0) {
                auto bm = p.key.b.members();
                if (!p.key.a.empty() || bm.size() != 2 ||
                    cyclic_dist(bm[0], bm[1], n) < 3 || p.dims.t2 != 1) {
                    note = "unexpected obstruction piece, n=" + std::to_string(n);
                    return false;
                }
            }
            if (p.dims.t1 > 0)
                t1_keys.insert({p.key.a.bits(), p.key.b.bits()});
        }
        long expect = n <= 5 ? 0 : (long)n * (n - 5) / 2;
        if (total_t2 != expect) {
            note = "total T2 wrong for n=" + std::to_string(n);
            return false;
        }
        // first-order pieces: one per vertex, plus the boxed low-n extras
        std::set<std::pair<std::uint64_t, std::uint64_t>> expect_t1;
        for (int v = 0; v < n; ++v)
            expect_t1.insert({Face::singleton(v).bits(),
                              Face::of({(v + n - 1) % n, (v + 1) % n}).bits()});
        if (n == 3) {
            for (int v = 0; v < 3; ++v)
                expect_t1.insert({0, Face::of({v, (v + 1) % 3}).bits()});
            expect_t1.insert({0, Face::of({0, 1, 2}).bits()});
        }
        if (n == 4) {
            expect_t1.insert({0, Face::of({0, 2}).bits()});
            expect_t1.insert({0, Face::of({1, 3}).bits()});
        }
        if (t1_keys != expect_t1) {
            note = "T1 key set wrong for n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// ---- criterion 4: coarse grading of the n-gon pieces ----

bool criterion4(std::string& note) {
    for (int n = 3; n <= 9; ++n) {
        auto rows = full_report(make_generator("ngon:" + std::to_string(n)), 4);
        for (const auto& p : rows) {
            int d = (int)p.key.a.size() - (int)p.key.b.size();
            if (p.dims.t2 > 0 && !(p.key.a.empty() && p.key.b.size() == 2)) {
                note = "T2 escapes coarse degree -2, n=" + std::to_string(n);
                return false;
            }
            if (p.dims.t1 > 0 && d < -1) {
                // only the documented boxed exceptions of the small n-gons
                bool boxed3 = n == 3 && p.key.a.empty() &&
                              (p.key.b.size() == 2 || p.key.b.size() == 3);
                bool boxed4 = n == 4 && p.key.a.empty() && p.key.b.size() == 2;
                if (!(boxed3 || boxed4)) {
                    note = "T1 below coarse degree -1, n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    note = "degree >= -1 for n >= 5; boxed low-degree pieces of the triangle "
           "and square accepted as documented exceptions";
    return true;
}

// ---- criterion 5: cup products and base equations ----

T1Class en_vertex_class(int v, int n) {
    Face a = Face::singleton(v);
    Face b = Face::of({(v + n - 1) % n, (v + 1) % n});
    return {ev(a), b, {a}, {1}};
}

bool criterion5(std::string& note) {
    SimplicialComplex e7 = make_generator("ngon:7");
    int v = 3;
    T2Class c = cup(e7, en_vertex_class(v, 7), en_vertex_class(v + 1, 7));
    auto value_at = [&](Face f, Face g) -> Rational {
        for (std::size_t k = 0; k < c.pairs.size(); ++k) {
            Face pf = c.n_elems[c.pairs[k].first];
            Face pg = c.n_elems[c.pairs[k].second];
            if (pf == f && pg == g) return c.values[k];
            if (pf == g && pg == f) return -c.values[k];
        }
        return Rational(77);  // sentinel: pair missing
    };
    if (c.zero_by_disjointness || c.b != Face::of({v - 1, v + 2}) ||
        value_at(Face::singleton(v - 2), Face{}) != 0 ||
        value_at(Face::singleton(v), Face{}) != 1 || c.is_zero()) {
        note = "worked heptagon cup values differ";
        return false;
    }

    QuadraticObstruction q7 = quadratic_base_equations(e7, -1, -2);
    if (q7.coordinates.size() != 7 || q7.forms.size() != 7) {
        note = "heptagon slice sizes differ";
        return false;
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& form : q7.forms) {
        int nonzero = 0;
        std::pair<int, int> where{-1, -1};
        for (int j = 0; j < 7; ++j)
            for (int k = j; k < 7; ++k) {
                Rational co = form.coeffs.at(j, k);
                if (j != k) co += form.coeffs.at(k, j);
                if (co != 0) {
                    ++nonzero;
                    where = {j, k};
                }
            }
        int d7 = (where.second - where.first + 7) % 7;
        if (nonzero != 1 || (d7 != 1 && d7 != 6)) {
            note = "heptagon equation is not a single adjacent product";
            return false;
        }
        // key the cyclic edge {s, s+1} by its start s
        seen.insert({d7 == 1 ? where.first : where.second, 0});
    }
    if (seen.size() != 7) {
        note = "heptagon equations do not cover all adjacent pairs";
        return false;
    }

    QuadraticObstruction q6 = quadratic_base_equations(make_generator("ngon:6"), -1, -2);
    if (q6.coordinates.size() != 6 || q6.forms.size() != 3) {
        note = "hexagon slice sizes differ";
        return false;
    }
    for (const auto& form : q6.forms) {
        std::vector<std::pair<std::pair<int, int>, Rational>> terms;
        for (int j = 0; j < 6; ++j)
            for (int k = j; k < 6; ++k) {
                Rational co = form.coeffs.at(j, k);
                if (j != k) co += form.coeffs.at(k, j);
                if (co != 0) terms.push_back({{j, k}, co});
            }
        bool ok = terms.size() == 2 && terms[0].second + terms[1].second == 0;
        if (ok) {
            // each term must be a cyclic edge {s, s+1}; the two must be opposite
            auto start = [&ok](std::pair<int, int> e) {
                int d = (e.second - e.first + 6) % 6;
                if (d != 1 && d != 5) ok = false;
                return d == 1 ? e.first : e.second;
            };
            int s1 = start(terms[0].first), s2 = start(terms[1].first);
            ok = ok && (s2 - s1 + 6) % 6 == 3;
        }
        if (!ok) {
            note = "hexagon equation differs from the opposite-product system";
            return false;
        }
    }
    return true;
}

// ---- criteria 6, 7, 8, 11 share one sweep over the example corpus ----

struct SweepResult {
    long keys = 0;
    int complexes = 0;
    bool routes_ok = true;
    bool quasi_ok = true;
    bool link_ok = true;
    bool t0_ok = true;
    std::string note;
};

bool quasi_equal(const USubset& y) {
    auto hk = cohomology(k_complex(y, 2), false);
    auto ho = cohomology(order_cochain_complex(order_complex(y), {}, 2), false);
    return hk[0] == ho[0] && hk[1] == ho[1];
}

bool derivation_preserves_ideal(const SimplicialComplex& x, Face a, int v,
                                const std::vector<Face>& mnf) {
    for (Face p : mnf) {
        if (!p.contains(v)) continue;
        if (x.contains(p.without(v).unite(a))) return false;
    }
    return true;
}

void sweep_one(const SimplicialComplex& x, SweepResult& r) {
    auto keys = relevant_degrees(x);
    std::vector<Face> mnf = minimal_non_faces(x);
    for (const DegreeKey& key : keys) {
        PieceDims base = piece_via_n(x, key).dims;
        auto msol = m_solution(x, ev(key.a), ev(key.b));
        PieceDims m{(int)msol.hom.size(), msol.t1, msol.t2};
        if (!(base == piece_via_order(x, key) && base == piece_via_u(x, key) &&
              base == m)) {
            r.routes_ok = false;
            r.note = "route mismatch";
        }
        auto [n, nt] = n_sets(x, key.a, key.b);
        if (!quasi_equal(n) || !quasi_equal(nt)) r.quasi_ok = false;
        SimplicialComplex lk = link(key.a, x);
        if (!lk.is_void()) {
            auto [u, ut] = u_sets(lk, key.b);
            if (!quasi_equal(u) || !quasi_equal(ut)) r.quasi_ok = false;
        }
        if (!link_reduction_check(x, key)) r.link_ok = false;
    }
    r.keys += (long)keys.size();
    ++r.complexes;

    if (x.ambient_size() <= 6) {
        T0Description td = t0(x);
        Face verts = x.vertex_set();
        for (int v : verts.members())
            for (std::uint64_t bits = 0; bits < (1ull << x.ambient_size());
                 ++bits) {
                Face a(bits);
                if (!verts.contains(a)) continue;
                bool star = true;
                for (Face f : x.facets())
                    if (f.contains(a) && !f.contains(v)) star = false;
                if (star != derivation_preserves_ideal(x, a, v, mnf))
                    r.t0_ok = false;
                if (x.contains(a)) {
                    bool covered = false;
                    for (Face g : td.generators[v])
                        if (a.contains(g)) covered = true;
                    if (star != covered) r.t0_ok = false;
                }
            }
    }
}

SweepResult run_sweep() {
    std::vector<std::string> descriptors = {
        "sphere0",    "ngon:3",     "ngon:4",
        "ngon:5",     "ngon:6",     "ngon:7",
        "ngon:8",     "simplex-boundary:3", "octahedron",
        "octahedron-diagonals"};
    for (int seed = 1; seed <= 100; ++seed)
        descriptors.push_back("random:" + std::to_string(seed) + "," +
                              std::to_string(4 + seed % 4));
    std::vector<SweepResult> partial(descriptors.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < (long)descriptors.size(); ++i)
        sweep_one(make_generator(descriptors[i]), partial[i]);
    SweepResult total;
    for (const auto& r : partial) {
        total.keys += r.keys;
        total.complexes += r.complexes;
        total.routes_ok = total.routes_ok && r.routes_ok;
        total.quasi_ok = total.quasi_ok && r.quasi_ok;
        total.link_ok = total.link_ok && r.link_ok;
        total.t0_ok = total.t0_ok && r.t0_ok;
    }
    return total;
}

// ---- criterion 9: localization injectivity ----

bool criterion9(std::string& note) {
    std::vector<std::string> descriptors = {"octahedron-diagonals", "octahedron"};
    for (int n = 3; n <= 8; ++n)
        descriptors.push_back("ngon:" + std::to_string(n));
    for (const auto& g : descriptors) {
        SimplicialComplex x = make_generator(g);
        for (int i : {1, 2}) {
            InjectivityResult r = injectivity_check(x, i);
            if (!r.injective()) {
                note = g + " has localization kernel dim " +
                       std::to_string(r.kernel_dim) + " at i=" + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 10: surface degree-0 classification ----

bool criterion10(std::string& note) {
    try {
        for (const char* g : {"octahedron", "simplex-boundary:3"}) {
            ManifoldClassification mc =
                manifold_degree0_classification(make_generator(g));
            if (!mc.t2_pieces.empty()) {
                note = "unexpected degree-0 obstruction piece";
                return false;
            }
            for (const auto& p : mc.t1_pieces)
                if (p.dim != 1 || p.configuration < 1 || p.configuration > 4) {
                    note = "piece outside the four configurations";
                    return false;
                }
        }
    } catch (const std::exception& e) {
        note = e.what();
        return false;
    }
    return true;
}

// ---- criterion 11 extra: the generation property on the named examples ----

bool criterion11_named(std::string& note) {
    for (int n = 3; n <= 9; ++n)
        if (!t0(make_generator("ngon:" + std::to_string(n)))
                 .module_generated_by_delta) {
            note = "n-gon generation property fails, n=" + std::to_string(n);
            return false;
        }
    if (!t0(make_generator("octahedron-diagonals")).module_generated_by_delta) {
        note = "generation property fails on the diagonal octahedron";
        return false;
    }
    return true;
}

} // namespace

int main() {
    auto guard = [&](int num, const char* what, auto&& fn) {
        std::string note;
        bool ok = false;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(num, what, ok, note);
    };

    guard(1, "0-sphere piece and perturbed equation", criterion1);
    guard(2, "diagonal octahedron dims by orbit", criterion2);
    guard(3, "n-gon T1/T2 dimensions", criterion3);
    guard(4, "n-gon coarse degree window", criterion4);
    guard(5, "cup product values and base equations", criterion5);

    SweepResult sweep;
    std::string sweep_err;
    try {
        sweep = run_sweep();
    } catch (const std::exception& e) {
        sweep_err = e.what();
        sweep.routes_ok = sweep.quasi_ok = sweep.link_ok = sweep.t0_ok = false;
    }
    std::string stats = std::to_string(sweep.complexes) + " complexes, " +
                        std::to_string(sweep.keys) + " keys" +
                        (sweep_err.empty() ? "" : "; " + sweep_err);
    report(6, "four-route agreement", sweep.routes_ok, stats + (sweep.note.empty() ? "" : "; " + sweep.note));
    report(7, "chain-model agreement in degrees 0,1", sweep.quasi_ok, stats);
    report(8, "link reduction of every key", sweep.link_ok, stats);

    guard(9, "localization injectivity in degree 0", criterion9);
    guard(10, "surface degree-0 classification", criterion10);

    std::string note11;
    bool named_ok = false;
    try {
        named_ok = criterion11_named(note11);
    } catch (const std::exception& e) {
        note11 = e.what();
    }
    report(11, "derivation module criteria", named_ok && sweep.t0_ok,
           note11.empty() ? stats : note11);

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
