#include "srcot/cotangent.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace srcot {

KernelData kernel_data(const SimplicialComplex& x, Face a, Face b) {
    auto [n, nt] = n_sets(x, a, b);
    auto cx = kernel_complex(n, nt, 1);
    KernelData kd;
    kd.n_elems = n.elements();
    kd.in_tilde.assign(kd.n_elems.size(), 0);
    for (std::size_t i = 0; i < kd.n_elems.size(); ++i)
        if (nt.contains(kd.n_elems[i])) kd.in_tilde[i] = 1;
    for (const auto& s : cx.bases[0]) kd.deg0.push_back(s[0]);
    for (const auto& s : cx.bases[1]) kd.deg1.emplace_back(s[0], s[1]);
    for (const auto& s : cx.bases[2]) kd.deg2.push_back({s[0], s[1], s[2]});
    kd.d0 = std::move(cx.d[0]);
    kd.d1 = std::move(cx.d[1]);
    return kd;
}

namespace {

bool has_trivial_line(const KernelData& kd, Face b) {
    return b.size() == 1 && !kd.n_elems.empty();
}

PieceDims dims_from_kernel(const KernelData& kd, Face b) {
    PieceDims d;
    int r0 = rank(kd.d0);
    int r1 = rank(kd.d1);
    d.hom = (int)kd.deg0.size() - r0;
    d.t2 = (int)kd.deg1.size() - r1 - r0;
    d.t1 = d.hom - (has_trivial_line(kd, b) ? 1 : 0);
    assert(d.t1 >= 0 && d.t2 >= 0);
    return d;
}

std::vector<Rational> expand_to_n(const std::vector<Rational>& v,
                                  const KernelData& kd) {
    std::vector<Rational> out(kd.n_elems.size(), 0);
    for (std::size_t i = 0; i < kd.deg0.size(); ++i) out[kd.deg0[i]] = v[i];
    return out;
}

} // namespace

CotangentPiece piece_via_n(const SimplicialComplex& x, const DegreeKey& key) {
    if (key.b.empty() || key.a.intersects(key.b))
        throw std::invalid_argument("piece_via_n: bad degree key");
    CotangentPiece p;
    p.key = key;
    p.kernel = kernel_data(x, key.a, key.b);
    const KernelData& kd = p.kernel;

    auto z0 = nullspace(kd.d0);
    auto z1 = nullspace(kd.d1);
    int r0 = rank(kd.d0);
    p.dims.hom = (int)z0.size();
    p.dims.t2 = (int)z1.size() - r0;
    bool trivial = has_trivial_line(kd, key.b);
    p.dims.t1 = p.dims.hom - (trivial ? 1 : 0);
    assert(p.dims.t1 >= 0 && p.dims.t2 >= 0);
    assert(p.dims == dims_from_kernel(kd, key.b));

    for (const auto& v : z0) p.hom_basis.push_back(expand_to_n(v, kd));

    if (trivial) {
        std::vector<Rational> ones(kd.deg0.size(), 1);
        for (const auto& chosen :
             extend_basis(QMatrix::from_columns({ones}), z0))
            p.t1_basis.push_back(expand_to_n(z0[chosen], kd));
    } else {
        p.t1_basis = p.hom_basis;
    }
    assert((int)p.t1_basis.size() == p.dims.t1);

    for (int chosen : extend_basis(kd.d0, z1)) p.t2_basis.push_back(z1[chosen]);
    assert((int)p.t2_basis.size() == p.dims.t2);
    return p;
}

PieceDims piece_via_order(const SimplicialComplex& x, const DegreeKey& key) {
    if (key.b.empty() || key.a.intersects(key.b))
        throw std::invalid_argument("piece_via_order: bad degree key");
    auto [n, nt] = n_sets(x, key.a, key.b);
    OrderComplex oc = order_complex(n);
    auto cx = order_cochain_complex(oc, nt.elements(), 1);
    auto plain = cohomology(cx, false);
    auto conv = cohomology(cx, key.b.size() == 1);
    PieceDims d;
    d.hom = plain[0];
    d.t1 = conv[0];
    d.t2 = conv[1];
    return d;
}

PieceDims piece_via_u(const SimplicialComplex& x, const DegreeKey& key) {
    if (key.b.empty() || key.a.intersects(key.b))
        throw std::invalid_argument("piece_via_u: bad degree key");
    SimplicialComplex lk = link(key.a, x);
    if (lk.is_void()) return {};
    auto [u, ut] = u_sets(lk, key.b);
    OrderComplex oc = order_complex(u);
    auto cx = order_cochain_complex(oc, ut.elements(), 1);
    auto plain = cohomology(cx, false);
    auto conv = cohomology(cx, key.b.size() == 1);
    PieceDims d;
    d.hom = plain[0];
    d.t1 = conv[0];
    d.t2 = conv[1];
    return d;
}

bool link_reduction_check(const SimplicialComplex& x, const DegreeKey& key) {
    PieceDims direct = dims_from_kernel(kernel_data(x, key.a, key.b), key.b);
    SimplicialComplex lk = link(key.a, x);
    PieceDims reduced = dims_from_kernel(kernel_data(lk, Face{}, key.b), key.b);
    return direct == reduced;
}

std::vector<DegreeKey> relevant_degrees(const SimplicialComplex& x,
                                        const Caps& caps) {
    if (x.ambient_size() > caps.complex_ambient)
        throw ResourceError("relevant_degrees: ambient vertex count over cap");
    std::vector<DegreeKey> keys;
    for (Face a : x.faces()) {
        Face vs = link(a, x).vertex_set();
        std::vector<Face> bs;
        for (std::uint64_t sub = vs.bits(); sub; sub = (sub - 1) & vs.bits())
            bs.push_back(Face(sub));
        std::sort(bs.begin(), bs.end(), FaceLess{});
        for (Face b : bs) keys.push_back({a, b});
    }
    return keys;
}

std::vector<CotangentPiece> full_report(const SimplicialComplex& x, int jobs,
                                        const Caps& caps) {
    auto keys = relevant_degrees(x, caps);
    std::vector<CotangentPiece> pieces(keys.size());
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (long i = 0; i < (long)keys.size(); ++i)
            pieces[i] = piece_via_n(x, keys[i]);
    } else
#endif
    {
        (void)jobs;
        for (std::size_t i = 0; i < keys.size(); ++i)
            pieces[i] = piece_via_n(x, keys[i]);
    }
    std::vector<CotangentPiece> out;
    for (auto& p : pieces)
        if (p.dims.t1 != 0 || p.dims.t2 != 0) out.push_back(std::move(p));
    return out;
}

long multiplicity_count(Face support, int degree) {
    int k = support.size();
    if (k == 0) return degree == 0 ? 1 : 0;
    if (degree < k) return 0;
    long n = degree - 1, r = k - 1, out = 1;
    for (long j = 1; j <= r; ++j) out = out * (n - r + j) / j;
    return out;
}

long coarse_slice(const std::vector<CotangentPiece>& report, int i, int d) {
    if (i != 1 && i != 2) throw std::invalid_argument("coarse_slice: i must be 1 or 2");
    long total = 0;
    for (const auto& p : report) {
        int dim = i == 1 ? p.dims.t1 : p.dims.t2;
        if (dim == 0) continue;
        total += dim * multiplicity_count(p.key.a, p.key.b.size() + d);
    }
    return total;
}

long coarse_slice(const SimplicialComplex& x, int i, int d, const Caps& caps) {
    return coarse_slice(full_report(x, 1, caps), i, d);
}

T0Description t0(const SimplicialComplex& x) {
    T0Description out;
    out.generators.resize(x.ambient_size());
    Face verts = x.vertex_set();
    bool every_gen_contains_vertex = true;
    for (int v : verts.members()) {
        std::vector<Face> qual;
        for (Face a : x.faces()) {
            bool ok = true;
            for (Face f : x.facets())
                if (f.contains(a) && !f.contains(v)) {
                    ok = false;
                    break;
                }
            if (ok) qual.push_back(a);
        }
        std::vector<Face> minimal;
        for (Face a : qual) {
            bool is_min = true;
            for (Face c : qual)
                if (c != a && a.contains(c)) {
                    is_min = false;
                    break;
                }
            if (is_min) minimal.push_back(a);
        }
        for (Face a : minimal)
            if (!a.contains(v)) every_gen_contains_vertex = false;
        out.generators[v] = std::move(minimal);
    }
    out.module_generated_by_delta = every_gen_contains_vertex;
#ifndef NDEBUG
    // Equivalent criterion: every non-maximal face lies properly inside at
    // least two faces.
    bool branching = true;
    for (Face a : x.faces()) {
        int over = 0;
        for (Face g : x.faces())
            if (g != a && g.contains(a)) ++over;
        bool is_facet =
            std::find_if(x.facets().begin(), x.facets().end(),
                         [&](Face f) { return f == a; }) != x.facets().end();
        if (!is_facet && over < 2) branching = false;
    }
    assert(branching == every_gen_contains_vertex);
#endif
    return out;
}

bool is_closed_surface(const SimplicialComplex& x) {
    if (x.is_void()) return false;
    Face verts = x.vertex_set();
    if (verts.empty()) return false;
    for (Face f : x.facets())
        if (f.size() != 3) return false;
    for (int v : verts.members()) {
        SimplicialComplex lk = link(Face::singleton(v), x);
        Face lv = lk.vertex_set();
        int n = lv.size();
        if (n < 3) return false;
        std::unordered_map<int, std::vector<int>> adj;
        int edges = 0;
        for (Face f : lk.faces()) {
            if (f.size() > 2) return false;
            if (f.size() == 2) {
                auto m = f.members();
                adj[m[0]].push_back(m[1]);
                adj[m[1]].push_back(m[0]);
                ++edges;
            }
        }
        if (edges != n) return false;
        for (int w : lv.members())
            if ((int)adj[w].size() != 2) return false;
        // connected: the link is one cycle, not several
        std::queue<int> bfs;
        std::unordered_map<int, bool> seen;
        bfs.push(lv.min_member());
        seen[lv.min_member()] = true;
        int reached = 0;
        while (!bfs.empty()) {
            int w = bfs.front();
            bfs.pop();
            ++reached;
            for (int u : adj[w])
                if (!seen[u]) {
                    seen[u] = true;
                    bfs.push(u);
                }
        }
        if (reached != n) return false;
    }
    return true;
}

namespace {

ExponentVector power_on(Face a, int total) {
    ExponentVector e;
    int v = a.min_member();
    e.set(v, total);
    return e;
}

} // namespace

ManifoldClassification manifold_degree0_classification(const SimplicialComplex& x) {
    if (!is_closed_surface(x))
        throw std::invalid_argument("degree-0 classification needs a closed surface");
    ManifoldClassification out;
    for (Face a : x.faces()) {
        if (a.empty()) continue;
        Face vs = link(a, x).vertex_set();
        std::vector<Face> bs;
        for (std::uint64_t sub = vs.bits(); sub; sub = (sub - 1) & vs.bits())
            if (Face(sub).size() >= a.size()) bs.push_back(Face(sub));
        std::sort(bs.begin(), bs.end(), FaceLess{});
        for (Face b : bs) {
            PieceDims dims = dims_from_kernel(kernel_data(x, a, b), b);
            if (dims.t1 == 0 && dims.t2 == 0) continue;
            if (dims.t1 > 0) {
                ManifoldPiece mp{{a, b}, {}, 0, dims.t1};
                if (a.size() == 2 && b.size() == 2 && b == vs) {
                    mp.configuration = 1;
                    mp.a_mult = ExponentVector::characteristic(a);
                } else if (a.size() == 1 && b.size() == 2 && vs.size() == 4 &&
                           !x.contains(a.unite(b))) {
                    // valency-4 vertex, b an antipodal pair of its link cycle
                    mp.configuration = 2;
                    mp.a_mult = power_on(a, 2);
                } else if (a.size() == 1 && b.size() == 3 && vs.size() == 3 &&
                           b == vs) {
                    mp.configuration = 3;
                    mp.a_mult = power_on(a, 3);
                } else if (a.size() == 1 && b.size() == 2 && vs.size() == 3) {
                    mp.configuration = 4;
                    mp.a_mult = power_on(a, 2);
                } else {
                    throw std::runtime_error(
                        "degree-0 piece outside the known first-order configurations");
                }
                out.t1_pieces.push_back(std::move(mp));
            }
            if (dims.t2 > 0) {
                bool valency6 = a.size() == 1 && vs.size() >= 6 && b.size() == 2;
                if (valency6) {
                    // b must be two link vertices whose only common neighbor is a
                    auto bm = b.members();
                    Face common;
                    for (int w : x.vertex_set().members())
                        if (x.contains(Face::of({w, bm[0]})) &&
                            x.contains(Face::of({w, bm[1]})))
                            common = common.with(w);
                    valency6 = common == a;
                }
                if (!valency6)
                    throw std::runtime_error(
                        "degree-0 piece outside the known obstruction configuration");
                out.t2_pieces.push_back({{a, b}, power_on(a, 2), 0, dims.t2});
            }
        }
    }
    return out;
}

} // namespace srcot
