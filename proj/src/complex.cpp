#include "srcot/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>

namespace srcot {

Caps default_caps() {
    Caps c;
    if (const char* env = std::getenv("SRCOT_CAP")) {
        int v = std::atoi(env);
        if (v > 0) {
            c.complex_ambient = v;
            c.nonface_ambient = v;
        }
    }
    return c;
}

void SimplicialComplex::finalize() {
    sorted_faces_.clear();
    sorted_faces_.reserve(faces_.size());
    for (auto b : faces_) sorted_faces_.push_back(Face(b));
    std::sort(sorted_faces_.begin(), sorted_faces_.end(), FaceLess{});
    facets_.clear();
    for (Face f : sorted_faces_) {
        bool maximal = true;
        Face comp = Face::full(ambient_).minus(f);
        for (int v : comp.members())
            if (contains(f.with(v))) { maximal = false; break; }
        if (maximal) facets_.push_back(f);
    }
}

SimplicialComplex SimplicialComplex::void_complex(int ambient,
                                                 std::vector<std::string> names) {
    if (ambient < 0 || ambient > Face::max_vertices)
        throw std::invalid_argument("ambient size out of range");
    SimplicialComplex X;
    X.ambient_ = ambient;
    X.names_ = std::move(names);
    for (int v = (int)X.names_.size(); v < ambient; ++v)
        X.names_.push_back(std::to_string(v));
    return X;
}

SimplicialComplex SimplicialComplex::from_facet_faces(
    int ambient, const std::vector<Face>& facets, std::vector<std::string> names) {
    SimplicialComplex X = void_complex(ambient, std::move(names));
    // Downward closure by subset enumeration of each facet.
    for (Face f : facets) {
        if (!Face::full(ambient).contains(f))
            throw std::invalid_argument("facet outside ambient vertex set");
        std::uint64_t m = f.bits();
        std::uint64_t sub = m;
        for (;;) {
            X.faces_.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    X.finalize();
    return X;
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> names,
    const std::vector<std::vector<std::string>>& facet_labels) {
    if (names.empty()) {
        std::set<std::string> seen;
        for (const auto& fl : facet_labels)
            for (const auto& s : fl) seen.insert(s);
        names.assign(seen.begin(), seen.end());  // lexicographic
    }
    std::map<std::string, int> index;
    for (int i = 0; i < (int)names.size(); ++i) {
        if (!index.emplace(names[i], i).second)
            throw std::invalid_argument("duplicate vertex name: " + names[i]);
    }
    if ((int)names.size() > Face::max_vertices)
        throw std::invalid_argument("too many vertices");
    std::vector<Face> facets;
    for (const auto& fl : facet_labels) {
        Face f;
        for (const auto& s : fl) {
            auto it = index.find(s);
            if (it == index.end())
                throw std::invalid_argument("unknown vertex in facet: " + s);
            if (f.contains(it->second))
                throw std::invalid_argument("duplicate vertex within facet: " + s);
            f = f.with(it->second);
        }
        facets.push_back(f);
    }
    int ambient = (int)names.size();
    return from_facet_faces(ambient, facets, std::move(names));
}

Face SimplicialComplex::vertex_set() const {
    Face vs;
    for (int v = 0; v < ambient_; ++v)
        if (contains(Face::singleton(v))) vs = vs.with(v);
    return vs;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> fv;
    for (Face f : sorted_faces_) {
        if ((int)fv.size() <= f.size()) fv.resize(f.size() + 1, 0);
        fv[f.size()]++;
    }
    return fv;
}

std::string SimplicialComplex::name_of(int v) const {
    if (v < 0 || v >= ambient_) throw std::invalid_argument("vertex out of range");
    return v < (int)names_.size() ? names_[v] : std::to_string(v);
}

std::optional<int> SimplicialComplex::index_of(const std::string& name) const {
    for (int v = 0; v < (int)names_.size(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

USubset::USubset(const SimplicialComplex& parent, std::vector<Face> elements)
    : parent_(&parent), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), FaceLess{});
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (Face f : elements_) {
        if (!parent.contains(f))
            throw std::invalid_argument("USubset element is not a face of the parent");
        set_.insert(f.bits());
    }
}

bool USubset::has_property_u() const {
    for (Face f : elements_)
        for (Face g : elements_) {
            Face u = f.unite(g);
            if (parent_->contains(u) && !contains(u)) return false;
        }
    return true;
}

SimplicialComplex link(Face f, const SimplicialComplex& X) {
    if (!X.contains(f))
        return SimplicialComplex::void_complex(X.ambient_size(), X.vertex_names());
    std::vector<Face> lk;
    for (Face g : X.faces())
        if (g.disjoint(f) && X.contains(g.unite(f))) lk.push_back(g);
    return SimplicialComplex::from_facet_faces(X.ambient_size(), lk, X.vertex_names());
}

USubset star_open(Face f, const SimplicialComplex& X) {
    std::vector<Face> st;
    for (Face g : X.faces())
        if (g.contains(f)) st.push_back(g);
    return USubset(X, std::move(st));
}

SimplicialComplex star_closed(Face f, const SimplicialComplex& X) {
    std::vector<Face> st;
    for (Face g : X.faces())
        if (X.contains(g.unite(f))) st.push_back(g);
    auto result =
        SimplicialComplex::from_facet_faces(X.ambient_size(), st, X.vertex_names());
#ifndef NDEBUG
    // closed star = fbar * link(f, X)
    if (X.contains(f)) {
        std::vector<Face> joined;
        SimplicialComplex lk = link(f, X);
        for (Face g : lk.faces()) joined.push_back(g.unite(f));
        auto alt = SimplicialComplex::from_facet_faces(X.ambient_size(), joined,
                                                       X.vertex_names());
        assert(result == alt);
        (void)alt;
    }
#endif
    return result;
}

SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y) {
    if (X.vertex_set().intersects(Y.vertex_set()))
        throw std::invalid_argument("join: overlapping vertex sets");
    int ambient = std::max(X.ambient_size(), Y.ambient_size());
    std::vector<std::string> names;
    for (int v = 0; v < ambient; ++v)
        names.push_back(v < X.ambient_size() && X.vertex_set().contains(v)
                            ? X.name_of(v)
                            : (v < Y.ambient_size() ? Y.name_of(v)
                                                    : std::to_string(v)));
    std::vector<Face> faces;
    for (Face f : X.faces())
        for (Face g : Y.faces()) faces.push_back(f.unite(g));
    return SimplicialComplex::from_facet_faces(ambient, faces, std::move(names));
}

SimplicialComplex cone(const SimplicialComplex& X) {
    int apex = X.ambient_size();
    if (apex >= Face::max_vertices)
        throw std::invalid_argument("cone: ambient set full");
    std::vector<std::string> names = X.vertex_names();
    names.resize(X.ambient_size(), "");
    names.push_back("apex");
    std::vector<Face> faces;
    for (Face f : X.faces()) {
        faces.push_back(f);
        faces.push_back(f.with(apex));
    }
    if (X.is_void()) faces.push_back(Face::singleton(apex));
    return SimplicialComplex::from_facet_faces(apex + 1, faces, std::move(names));
}

SimplicialComplex simplex_boundary(Face g, int ambient) {
    if (ambient < 0) ambient = g.empty() ? 0 : g.members().back() + 1;
    std::vector<Face> facets;
    for (int v : g.members()) facets.push_back(g.without(v));
    return SimplicialComplex::from_facet_faces(ambient, facets);
}

std::pair<USubset, USubset> n_sets(const SimplicialComplex& X, Face a, Face b) {
    if (a.intersects(b)) throw std::invalid_argument("n_sets: a and b intersect");
    std::vector<Face> n, nt;
    for (Face f : X.faces()) {
        if (!f.contains(a) || f.intersects(b)) continue;
        if (X.contains(f.unite(b))) continue;
        n.push_back(f);
        // ~N: some proper subset b' of b with f u b' not a face
        bool in_tilde = false;
        std::uint64_t m = b.bits();
        for (std::uint64_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
            if (!X.contains(f.unite(Face(sub)))) { in_tilde = true; break; }
            if (sub == 0) break;
        }
        if (b.empty()) in_tilde = false;
        if (in_tilde) nt.push_back(f);
    }
    USubset N(X, std::move(n)), Nt(X, std::move(nt));
    assert(N.has_property_u() && Nt.has_property_u());
    return {std::move(N), std::move(Nt)};
}

std::pair<USubset, USubset> u_sets(const SimplicialComplex& X, Face b) {
    if (b.empty()) throw std::invalid_argument("u_sets: b must be nonempty");
    std::vector<Face> u, ut;
    for (Face f : X.faces()) {
        if (!X.contains(f.unite(b))) u.push_back(f);
        for (int v : b.members())
            if (!X.contains(f.unite(b).without(v))) {
                ut.push_back(f);
                break;
            }
    }
    USubset U(X, std::move(u)), Ut(X, std::move(ut));

#ifndef NDEBUG
    // Complement identities when the boundary of b is a subcomplex of X.
    bool boundary_in = true;
    for (int v : b.members())
        if (!X.contains(b.without(v))) { boundary_in = false; break; }
    if (boundary_in && !X.is_void()) {
        {
            std::vector<Face> comp;
            for (Face f : X.faces())
                if (!U.contains(f)) comp.push_back(f);
            std::vector<Face> expect;
            if (X.contains(b))
                for (Face f : X.faces())
                    if (X.contains(f.unite(b))) expect.push_back(f);
            std::sort(comp.begin(), comp.end(), FaceLess{});
            std::sort(expect.begin(), expect.end(), FaceLess{});
            assert(comp == expect);
        }
        {
            // X \ ~U_b = (boundary(b) * L_b) [u closed star of b if b is a face],
            // with L_b the intersection of the links of the proper subsets of b.
            std::vector<Face> expect;
            for (Face f : X.faces()) {
                // f in boundary(b) * L_b: f = f1 u f2 with f1 a proper subset
                // of b and f2 in every link(b', X), b' proper subset of b.
                Face f1 = f.intersect(b), f2 = f.minus(b);
                bool ok = (f1 != b);
                std::uint64_t m = b.bits();
                if (ok)
                    for (std::uint64_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
                        Face bp(sub);
                        if (!(f2.disjoint(bp) && X.contains(f2.unite(bp)))) {
                            ok = false;
                            break;
                        }
                        if (sub == 0) break;
                    }
                bool in_star = X.contains(b) && X.contains(f.unite(b));
                if (ok || in_star) expect.push_back(f);
            }
            std::vector<Face> comp;
            for (Face f : X.faces())
                if (!Ut.contains(f)) comp.push_back(f);
            std::sort(comp.begin(), comp.end(), FaceLess{});
            std::sort(expect.begin(), expect.end(), FaceLess{});
            assert(comp == expect);
        }
    }
#endif
    return {std::move(U), std::move(Ut)};
}

std::vector<Face> non_faces(const SimplicialComplex& X, const Caps& caps) {
    if (X.ambient_size() > caps.nonface_ambient)
        throw ResourceError("non-face enumeration over ambient size " +
                            std::to_string(X.ambient_size()) +
                            " exceeds cap " + std::to_string(caps.nonface_ambient));
    std::vector<Face> out;
    std::uint64_t total = std::uint64_t{1} << X.ambient_size();
    for (std::uint64_t bits = 0; bits < total; ++bits)
        if (!X.contains(Face(bits))) out.push_back(Face(bits));
    std::sort(out.begin(), out.end(), FaceLess{});
    return out;
}

std::vector<Face> minimal_non_faces(const SimplicialComplex& X, const Caps& caps) {
    std::vector<Face> out;
    for (Face p : non_faces(X, caps)) {
        bool minimal = true;
        for (int v : p.members())
            if (!X.contains(p.without(v))) { minimal = false; break; }
        if (minimal) out.push_back(p);
    }
    return out;
}

MSets m_sets(const SimplicialComplex& X, Face a, Face b, const Caps& caps) {
    if (a.intersects(b)) throw std::invalid_argument("m_sets: a and b intersect");
    MSets ms;
    for (Face p : non_faces(X, caps))
        if (X.contains(phi_map(p, a, b))) ms.m.push_back(p);
    for (Face p : ms.m)
        for (Face q : ms.m)
            if (X.contains(phi_map(p.unite(q), a, b))) ms.m2.emplace_back(p, q);
    return ms;
}

bool MSets::pair_in_m2(Face p, Face q) const {
    for (const auto& [x, y] : m2)
        if (x == p && y == q) return true;
    return false;
}

OrderComplex::OrderComplex(std::vector<Face> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), FaceLess{});
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool OrderComplex::comparable(int i, int j) const {
    Face f = elements_[i], g = elements_[j];
    return f != g && (f.contains(g) || g.contains(f));
}

std::vector<std::vector<int>> OrderComplex::flags_of_dim(int k) const {
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    // Chains are increasing in the canonical order (inclusion refines it).
    auto recurse = [&](auto&& self, int start) -> void {
        if ((int)chain.size() == k + 1) {
            out.push_back(chain);
            return;
        }
        for (int i = start; i < (int)elements_.size(); ++i) {
            if (!chain.empty() && !elements_[i].contains(elements_[chain.back()]))
                continue;
            if (!chain.empty() && elements_[i] == elements_[chain.back()]) continue;
            chain.push_back(i);
            self(self, i + 1);
            chain.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

SimplicialComplex OrderComplex::as_complex() const {
    if ((int)elements_.size() > Face::max_vertices)
        throw ResourceError("order complex too large to materialize");
    std::vector<Face> faces;
    // Every chain is a face; maximal chains suffice but enumerating all is fine
    // at this scale.
    for (int k = 0;; ++k) {
        auto flags = flags_of_dim(k);
        if (flags.empty()) break;
        for (const auto& c : flags) faces.push_back(Face::from_members(c));
    }
    auto X = SimplicialComplex::void_complex((int)elements_.size());
    if (faces.empty()) return X;
    return SimplicialComplex::from_facet_faces((int)elements_.size(), faces);
}

OrderComplex order_complex(const USubset& Y) { return OrderComplex(Y.elements()); }
OrderComplex order_complex(const std::vector<Face>& Y) { return OrderComplex(Y); }

} // namespace srcot
