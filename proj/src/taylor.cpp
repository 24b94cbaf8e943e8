#include "srcot/taylor.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace srcot {

TaylorData taylor(const SimplicialComplex& x, const Caps& caps) {
    TaylorData td;
    td.generators = non_faces(x, caps);
    // Structural identities, checked on a deterministic prefix of the
    // generator list so the cost stays bounded on large ambients.
    int limit = std::min<int>((int)td.generators.size(), 16);
    for (int i = 0; i < limit; ++i)
        for (int j = i + 1; j < limit; ++j) {
            Face p = td.generators[i], q = td.generators[j];
            ExponentVector lhs = ExponentVector::characteristic(q.minus(p)).plus(p);
            ExponentVector rhs = ExponentVector::characteristic(p.minus(q)).plus(q);
            if (!(lhs == rhs) || lhs.support() != p.unite(q))
                throw std::logic_error("taylor: relation identity failed");
            for (int k = j + 1; k < limit; ++k) {
                Face r = td.generators[k];
                // coefficient of e_p in the expanded syzygy, both halves
                ExponentVector c1 = ExponentVector::characteristic(r.minus(p.unite(q)))
                                        .plus(q.minus(p));
                ExponentVector c2 = ExponentVector::characteristic(q.minus(p.unite(r)))
                                        .plus(r.minus(p));
                ExponentVector c3 = ExponentVector::characteristic(r.minus(p.unite(q)))
                                        .plus(p.minus(q));
                ExponentVector c4 = ExponentVector::characteristic(p.minus(q.unite(r)))
                                        .plus(r.minus(q));
                ExponentVector c5 = ExponentVector::characteristic(q.minus(p.unite(r)))
                                        .plus(p.minus(r));
                ExponentVector c6 = ExponentVector::characteristic(p.minus(q.unite(r)))
                                        .plus(q.minus(r));
                if (!(c1 == c2) || !(c3 == c4) || !(c5 == c6))
                    throw std::logic_error("taylor: syzygy identity failed");
            }
        }
    return td;
}

MLevelSolution m_solution(const SimplicialComplex& x, const ExponentVector& a,
                          const ExponentVector& b, const Caps& caps) {
    MLevelSolution out;
    if (!b.is_squarefree()) return out;
    Face sa = a.support(), sb = b.support();
    if (sa.intersects(sb))
        throw std::invalid_argument("m_solution: supports of a and b overlap");
    if (sb.empty()) return out;
    MSets ms = m_sets(x, sa, sb, caps);
    out.m = ms.m;
    int n = (int)ms.m.size();

    // Hom system. Variables with b not inside m are forced to zero up front,
    // so only the indices in hv remain.
    {
        std::vector<int> hv, col(n, -1);
        for (int i = 0; i < n; ++i)
            if (ms.m[i].contains(sb)) {
                col[i] = (int)hv.size();
                hv.push_back(i);
            }
        int nh = (int)hv.size();
        std::vector<std::vector<Rational>> rows;
        std::vector<bool> killed(nh, false);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!ms.pair_in_m2(ms.m[i], ms.m[j])) continue;
                if (col[i] >= 0 && col[j] >= 0) {
                    std::vector<Rational> r(nh, 0);
                    r[col[i]] = 1;
                    r[col[j]] = -1;
                    rows.push_back(std::move(r));
                } else if (col[i] >= 0 || col[j] >= 0) {
                    // equal to a variable that is already zero
                    int c = col[i] >= 0 ? col[i] : col[j];
                    if (!killed[c]) {
                        killed[c] = true;
                        std::vector<Rational> r(nh, 0);
                        r[c] = 1;
                        rows.push_back(std::move(r));
                    }
                }
            }
        QMatrix sys((int)rows.size(), nh);
        for (int r = 0; r < (int)rows.size(); ++r)
            for (int c = 0; c < nh; ++c) sys.at(r, c) = rows[r][c];
        for (const auto& v : nullspace(sys)) {
            std::vector<Rational> full(n, 0);
            for (int c = 0; c < nh; ++c) full[hv[c]] = v[c];
            out.hom.push_back(std::move(full));
        }
    }

    bool has_constant = false;
    for (Face p : ms.m)
        if (p.contains(sb)) has_constant = true;
    out.t1 = (int)out.hom.size() -
             (sb.size() == 1 && has_constant ? 1 : 0);
    assert(out.t1 >= 0);

    // Pair system. Variables are the unordered pairs in M^(2); the ones hit by
    // a Koszul relation or with b not covered are zero and dropped up front,
    // which keeps the cocycle system small.
    std::vector<std::pair<int, int>> pairs;  // the surviving pairs
    std::unordered_map<long, int> pair_index;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!ms.pair_in_m2(ms.m[i], ms.m[j])) continue;
            Face p = ms.m[i], q = ms.m[j];
            Face koszul = p.intersect(q).unite(phi_map(p.unite(q), sa, sb));
            if (x.contains(koszul)) {
                // a Koszul pair never covers b, so coboundaries vanish on it
                assert(!p.contains(sb) && !q.contains(sb));
                continue;
            }
            if (!p.unite(q).contains(sb)) continue;
            pair_index[(long)i * n + j] = (int)pairs.size();
            pairs.emplace_back(i, j);
        }
    int np = (int)pairs.size();

    // Coboundaries mu(p,q) = mu'(p) - mu'(q), mu' supported on {m : b in m};
    // they vanish on all dropped pairs, so restricting them is faithful.
    std::vector<std::vector<Rational>> cob;
    for (int t = 0; t < n; ++t) {
        if (!ms.m[t].contains(sb)) continue;
        std::vector<Rational> r(np, 0);
        for (int v = 0; v < np; ++v) {
            if (pairs[v].first == t) r[v] += 1;
            if (pairs[v].second == t) r[v] -= 1;
        }
        cob.push_back(std::move(r));
    }

    // Cocycle conditions from triples, streamed through a rank accumulator.
    RankAccumulator acc(np);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Face u = ms.m[i].unite(ms.m[j]).unite(ms.m[k]);
                if (!x.contains(phi_map(u, sa, sb))) continue;
                RankAccumulator::SparseRow r;
                auto put = [&](int lo, int hi, int sign) {
                    auto it = pair_index.find((long)lo * n + hi);
                    if (it != pair_index.end()) r.emplace_back(it->second, sign);
                };
                put(i, j, 1);
                put(i, k, -1);
                put(j, k, 1);
                if (r.empty()) continue;
                std::sort(r.begin(), r.end());
#ifndef NDEBUG
                for (const auto& cb : cob) {  // coboundaries stay cocycles
                    Rational dot = 0;
                    for (const auto& [v, c] : r) dot += c * cb[v];
                    assert(dot == 0);
                }
#endif
                acc.add_sparse(std::move(r));
            }

    RankAccumulator bacc(np);
    for (const auto& cb : cob) bacc.add(cb);
    out.t2 = (np - acc.rank()) - bacc.rank();
    assert(out.t2 >= 0);
    return out;
}

int hom_via_m(const SimplicialComplex& x, const ExponentVector& a,
              const ExponentVector& b, const Caps& caps) {
    return (int)m_solution(x, a, b, caps).hom.size();
}

int t1_via_m(const SimplicialComplex& x, const ExponentVector& a,
             const ExponentVector& b, const Caps& caps) {
    return m_solution(x, a, b, caps).t1;
}

int t2_via_m(const SimplicialComplex& x, const ExponentVector& a,
             const ExponentVector& b, const Caps& caps) {
    return m_solution(x, a, b, caps).t2;
}

std::string render_monomial(const SimplicialComplex& x, const ExponentVector& e) {
    std::ostringstream os;
    bool first = true;
    for (int v : e.support().members()) {
        if (!first) os << ' ';
        first = false;
        os << x.name_of(v);
        if (e[v] > 1) os << '^' << e[v];
    }
    return os.str();
}

std::vector<std::string> perturbed_equations(const SimplicialComplex& x,
                                             const ExponentVector& a, Face b,
                                             const std::vector<Rational>& lambda,
                                             const Caps& caps) {
    Face sa = a.support();
    if (sa.intersects(b) || b.empty())
        throw std::invalid_argument("perturbed_equations: bad degree");
    auto [n, nt] = n_sets(x, sa, b);
    if (lambda.size() != n.elements().size())
        throw std::invalid_argument("perturbed_equations: cocycle size mismatch");
    std::unordered_map<std::uint64_t, Rational> val;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        Face f = n.elements()[i];
        if (nt.contains(f) && lambda[i] != 0)
            throw std::invalid_argument("perturbed_equations: nonzero on ~N");
        val[f.bits()] = lambda[i];
    }
    for (Face f : n.elements())
        for (Face g : n.elements())
            if (x.contains(f.unite(g)) && val[f.bits()] != val[g.bits()])
                throw std::invalid_argument("perturbed_equations: not a cocycle");

    std::vector<std::string> out;
    for (Face p : minimal_non_faces(x, caps)) {
        if (!p.contains(b)) continue;
        Face f = phi_map(p, sa, b);
        auto it = val.find(f.bits());
        if (it == val.end() || it->second == 0) continue;
        Rational mu = it->second;
        ExponentVector tail = ExponentVector::characteristic(p).plus(a).minus(b);
        std::ostringstream os;
        os << render_monomial(x, ExponentVector::characteristic(p));
        os << (mu < 0 ? " + " : " - ");
        Rational mag = mu < 0 ? Rational(-mu) : mu;
        if (mag != 1) os << mag << ' ';
        os << "eps";
        std::string tail_str = render_monomial(x, tail);
        if (!tail_str.empty()) os << ' ' << tail_str;
        out.push_back(os.str());
    }
    return out;
}

} // namespace srcot
