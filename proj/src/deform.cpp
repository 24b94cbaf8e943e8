#include "srcot/deform.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace srcot {

namespace {

std::unordered_map<std::uint64_t, Rational> value_map(
    const std::vector<Face>& elems, const std::vector<Rational>& vals) {
    std::unordered_map<std::uint64_t, Rational> m;
    for (std::size_t i = 0; i < elems.size(); ++i) m[elems[i].bits()] = vals[i];
    return m;
}

Rational eval_on_x(const SimplicialComplex& x,
                   const std::unordered_map<std::uint64_t, Rational>& vals,
                   Face h) {
    if (!x.contains(h)) return 0;
    auto it = vals.find(h.bits());
    if (it == vals.end())
        throw std::logic_error("cup: face of X missing from the N set");
    return it->second;
}

Face greedy_maximal(const SimplicialComplex& x, Face f, Face b, bool descending) {
    Face d;
    auto mem = b.members();
    if (descending) std::reverse(mem.begin(), mem.end());
    for (int v : mem) {
        Face trial = d.with(v);
        if (!x.contains(f.unite(b.minus(trial)))) d = trial;
    }
    return d;
}

} // namespace

T1Class make_t1_class(const CotangentPiece& piece, const ExponentVector& a,
                      int basis_index) {
    if (a.support() != piece.key.a)
        throw std::invalid_argument("make_t1_class: exponent support mismatch");
    if (basis_index < 0 || basis_index >= (int)piece.t1_basis.size())
        throw std::invalid_argument("make_t1_class: basis index out of range");
    return {a, piece.key.b, piece.kernel.n_elems, piece.t1_basis[basis_index]};
}

std::vector<Rational> t1_coordinates(const CotangentPiece& piece,
                                     const std::vector<Rational>& lambda) {
    int n = (int)piece.kernel.n_elems.size();
    if ((int)lambda.size() != n)
        throw std::invalid_argument("t1_coordinates: size mismatch");
    std::vector<std::vector<Rational>> cols = piece.t1_basis;
    bool trivial = piece.key.b.size() == 1 && n > 0;
    if (trivial) {
        std::vector<Rational> ones(n, 1);
        cols.push_back(std::move(ones));
    }
    QMatrix a = QMatrix::from_columns(cols);
    if (a.rows() == 0) a = QMatrix(n, 0);
    auto sol = solve(a, lambda);
    if (!sol)
        throw std::logic_error("t1_coordinates: not a Hom cocycle of this piece");
    sol->resize(piece.dims.t1);
    return *sol;
}

std::vector<Rational> t2_coordinates(const CotangentPiece& piece,
                                     const std::vector<Rational>& values) {
    const KernelData& kd = piece.kernel;
    if ((int)values.size() != (int)kd.deg1.size())
        throw std::invalid_argument("t2_coordinates: size mismatch");
#ifndef NDEBUG
    for (const auto& r : kd.d1.apply(values)) assert(r == 0);
#endif
    QMatrix a = QMatrix::from_columns(piece.t2_basis);
    if (a.rows() == 0) a = QMatrix((int)kd.deg1.size(), 0);
    a = a.hcat(kd.d0);
    auto sol = solve(a, values);
    if (!sol)
        throw std::logic_error("t2_coordinates: not a cocycle of this piece");
    sol->resize(piece.dims.t2);
    return *sol;
}

T2Class cup(const SimplicialComplex& x, const T1Class& phi, const T1Class& psi,
            bool descending) {
    Face b1 = phi.b, b2 = psi.b;
    if (b1.intersects(b2)) {
        T2Class z;
        z.zero_by_disjointness = true;
        return z;
    }
    Face a1 = phi.a.support(), a2 = psi.a.support();
    Face b = b1.minus(a2).unite(b2.minus(a1));
    ExponentVector amult = phi.a.plus(psi.a).plus(b).minus(b1).minus(b2);
    assert(amult.support() ==
           a1.minus(b2).unite(a2.minus(b1))
               .unite(phi.a.at_least_two().unite(psi.a.at_least_two())));

    T2Class out;
    out.a = amult;
    out.b = b;
    if (b.empty()) return out;

    CotangentPiece target = piece_via_n(x, {amult.support(), b});
    const KernelData& kd = target.kernel;
    out.n_elems = kd.n_elems;
    out.pairs = kd.deg1;

    auto phi_vals = value_map(phi.n_elems, phi.lambda);
    auto psi_vals = value_map(psi.n_elems, psi.lambda);
    out.values.resize(kd.deg1.size());
    for (std::size_t k = 0; k < kd.deg1.size(); ++k) {
        Face f = kd.n_elems[kd.deg1[k].first];
        Face g = kd.n_elems[kd.deg1[k].second];
        Face d = greedy_maximal(x, f, b, descending);
        Face e = greedy_maximal(x, g, b, descending);
        Rational dphi = eval_on_x(x, phi_vals, f.minus(b1).unite(b2.minus(d))) -
                        eval_on_x(x, phi_vals, g.minus(b1).unite(b2.minus(e)));
        Rational dpsi = eval_on_x(x, psi_vals, f.minus(b2).unite(b1.minus(d))) -
                        eval_on_x(x, psi_vals, g.minus(b2).unite(b1.minus(e)));
        out.values[k] =
            dphi * eval_on_x(x, psi_vals, phi_map(f.unite(g), a2, b2)) +
            dpsi * eval_on_x(x, phi_vals, phi_map(f.unite(g), a1, b1));
    }
    out.coords = t2_coordinates(target, out.values);
    return out;
}

std::vector<ExponentVector> exponent_vectors(Face s, int degree) {
    std::vector<ExponentVector> out;
    std::vector<int> mem = s.members();
    if (mem.empty()) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    ExponentVector cur;
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx + 1 == mem.size()) {
            if (left >= 1) {
                ExponentVector e = cur;
                e.set(mem[idx], left);
                out.push_back(std::move(e));
            }
            return;
        }
        for (int take = 1; take <= left - (int)(mem.size() - idx - 1); ++take) {
            cur.set(mem[idx], take);
            self(self, idx + 1, left - take);
        }
        cur.set(mem[idx], 0);
    };
    rec(rec, 0, degree);
    return out;
}

QuadraticObstruction quadratic_base_equations(const SimplicialComplex& x,
                                              int t1_degree, int t2_degree,
                                              const Caps& caps) {
    auto report = full_report(x, 1, caps);
    QuadraticObstruction out;
    std::vector<const CotangentPiece*> sources;
    for (const auto& p : report) {
        if (p.dims.t1 == 0) continue;
        for (const auto& av :
             exponent_vectors(p.key.a, (int)p.key.b.size() + t1_degree))
            for (int idx = 0; idx < p.dims.t1; ++idx) {
                T1Coordinate c{p.key, av, idx,
                               "t" + std::to_string(out.coordinates.size())};
                out.coordinates.push_back(std::move(c));
                sources.push_back(&p);
            }
    }
    int nt = (int)out.coordinates.size();
    for (const auto& p : report) {
        if (p.dims.t2 == 0) continue;
        for (const auto& av :
             exponent_vectors(p.key.a, (int)p.key.b.size() + t2_degree))
            for (int idx = 0; idx < p.dims.t2; ++idx)
                out.forms.push_back({p.key, av, idx, QMatrix(nt, nt)});
    }
    for (int j = 0; j < nt; ++j) {
        T1Class phi = make_t1_class(*sources[j], out.coordinates[j].a,
                                    out.coordinates[j].basis_index);
        for (int k = j; k < nt; ++k) {
            T1Class psi = make_t1_class(*sources[k], out.coordinates[k].a,
                                        out.coordinates[k].basis_index);
            T2Class c = cup(x, phi, psi);
            if (c.zero_by_disjointness || c.coords.empty()) continue;
            for (auto& form : out.forms) {
                if (form.key.a != c.a.support() || form.key.b != c.b) continue;
                if (!(form.a == c.a)) continue;
                Rational coeff = c.coords[form.basis_index];
                if (coeff == 0) continue;
                form.coeffs.at(j, k) += coeff / 2;
                if (j != k) form.coeffs.at(k, j) += coeff / 2;
            }
        }
    }
    return out;
}

namespace {

Face chart_map(Face g, int v, Face b) {
    return g.unite(Face::singleton(v).minus(b));
}

} // namespace

T1Class localize(const SimplicialComplex& x, const T1Class& phi, int v) {
    if (!x.contains(Face::singleton(v)))
        throw std::invalid_argument("localize: not a vertex of the complex");
    if (phi.a.degree() != phi.b.size())
        throw std::invalid_argument("localize: class not in coarse degree 0");
    T1Class out;
    out.a = phi.a;
    out.a.set(v, 0);
    out.b = phi.b.without(v);
    if (out.b.empty()) return out;
    SimplicialComplex lk = link(Face::singleton(v), x);
    auto [n, nt] = n_sets(lk, out.a.support(), out.b);
    auto vals = value_map(phi.n_elems, phi.lambda);
    out.n_elems = n.elements();
    for (Face g : out.n_elems) {
        auto it = vals.find(chart_map(g, v, phi.b).bits());
        if (it == vals.end())
            throw std::logic_error("localize: chart map left the N set");
        out.lambda.push_back(it->second);
    }
    return out;
}

T2Class localize(const SimplicialComplex& x, const T2Class& tau, int v) {
    if (!x.contains(Face::singleton(v)))
        throw std::invalid_argument("localize: not a vertex of the complex");
    if (tau.a.degree() != tau.b.size())
        throw std::invalid_argument("localize: class not in coarse degree 0");
    T2Class out;
    out.a = tau.a;
    out.a.set(v, 0);
    out.b = tau.b.without(v);
    if (out.b.empty()) return out;
    SimplicialComplex lk = link(Face::singleton(v), x);
    CotangentPiece target = piece_via_n(lk, {out.a.support(), out.b});
    out.n_elems = target.kernel.n_elems;
    out.pairs = target.kernel.deg1;

    std::map<std::pair<std::uint64_t, std::uint64_t>, Rational> pv;
    for (std::size_t k = 0; k < tau.pairs.size(); ++k)
        pv[{tau.n_elems[tau.pairs[k].first].bits(),
            tau.n_elems[tau.pairs[k].second].bits()}] = tau.values[k];
    for (const auto& pr : out.pairs) {
        Face p = chart_map(out.n_elems[pr.first], v, tau.b);
        Face q = chart_map(out.n_elems[pr.second], v, tau.b);
        auto it = pv.find({p.bits(), q.bits()});
        if (it != pv.end()) {
            out.values.push_back(it->second);
            continue;
        }
        it = pv.find({q.bits(), p.bits()});
        if (it == pv.end())
            throw std::logic_error("localize: chart map left the pair set");
        out.values.push_back(-it->second);
    }
    out.coords = t2_coordinates(target, out.values);
    return out;
}

InjectivityResult injectivity_check(const SimplicialComplex& x, int i,
                                    const Caps& caps) {
    if (i != 1 && i != 2)
        throw std::invalid_argument("injectivity_check: i must be 1 or 2");
    InjectivityResult res;
    Face verts = x.vertex_set();
    for (const DegreeKey& key : relevant_degrees(x, caps)) {
        if (key.a.empty() || key.b.size() < key.a.size())
            continue;  // no exponent vector of coarse degree 0 exists
        CotangentPiece piece = piece_via_n(x, key);
        int dim = i == 1 ? piece.dims.t1 : piece.dims.t2;
        if (dim == 0) continue;

        // One class per basis element; coordinates are independent of the
        // multiplicity vector, so one composition represents them all.
        ExponentVector amult = exponent_vectors(key.a, key.b.size()).front();
        QMatrix stacked(0, dim);
        for (int v : verts.members()) {
            if (key.b.without(v).empty()) continue;
            QMatrix block(0, 0);
            for (int idx = 0; idx < dim; ++idx) {
                std::vector<Rational> coords;
                if (i == 1) {
                    T1Class loc = localize(x, make_t1_class(piece, amult, idx), v);
                    SimplicialComplex lk = link(Face::singleton(v), x);
                    CotangentPiece target =
                        piece_via_n(lk, {loc.a.support(), loc.b});
                    coords = t1_coordinates(target, loc.lambda);
                } else {
                    T2Class src;
                    src.a = amult;
                    src.b = key.b;
                    src.n_elems = piece.kernel.n_elems;
                    src.pairs = piece.kernel.deg1;
                    src.values = piece.t2_basis[idx];
                    coords = localize(x, src, v).coords;
                }
                block = block.hcat(QMatrix::from_columns(
                    {coords.empty() ? std::vector<Rational>{} : coords}));
            }
            if (block.rows() > 0) stacked = stacked.vcat(block);
        }
        res.kernel_dim += dim - rank(stacked);
    }
    return res;
}

} // namespace srcot
