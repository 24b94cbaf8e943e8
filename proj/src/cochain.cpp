#include "srcot/cochain.hpp"

#include <cassert>
#include <map>

namespace srcot {

CochainComplexQ build_subset_complex(
    int num_elements, int k_max,
    const std::function<bool(const std::vector<int>&)>& keep,
    const std::function<bool(const std::vector<int>&)>& in_sub) {
    if (k_max < 0) throw std::invalid_argument("k_max < 0");
    CochainComplexQ cx;
    cx.bases.resize(k_max + 2);
    // Enumerate kept subsets of each size with hereditary pruning.
    std::vector<int> current;
    auto recurse = [&](auto&& self, int start) -> void {
        if (!current.empty()) {
            if (!keep(current)) return;
            int k = (int)current.size() - 1;
            if (!in_sub(current)) cx.bases[k].push_back(current);
            if (k == k_max + 1) return;
        }
        for (int i = start; i < num_elements; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);

    bool any_sub = false;
    std::vector<std::map<std::vector<int>, int>> index(k_max + 2);
    for (int k = 0; k <= k_max + 1; ++k)
        for (int i = 0; i < (int)cx.bases[k].size(); ++i)
            index[k][cx.bases[k][i]] = i;

    cx.d.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        QMatrix m((int)cx.bases[k + 1].size(), (int)cx.bases[k].size());
        for (int row = 0; row < (int)cx.bases[k + 1].size(); ++row) {
            const auto& t = cx.bases[k + 1][row];
            std::vector<int> s;
            s.reserve(t.size() - 1);
            for (int v = 0; v < (int)t.size(); ++v) {
                s.clear();
                for (int j = 0; j < (int)t.size(); ++j)
                    if (j != v) s.push_back(t[j]);
                auto it = index[k].find(s);
                if (it == index[k].end()) {
                    any_sub = true;  // facet lies in the subobject
                    continue;
                }
                m.at(row, it->second) += (v % 2 == 0) ? 1 : -1;
            }
        }
        cx.d[k] = std::move(m);
    }
    cx.relative = any_sub;
    for (int k = 0; k + 1 <= k_max; ++k)
        assert(cx.d[k + 1].multiply(cx.d[k]).is_zero());
    return cx;
}

CochainComplexQ k_complex(const USubset& y, int k_max) {
    if (!y.has_property_u())
        throw std::invalid_argument("k_complex: input lacks property U");
    const SimplicialComplex& x = y.parent();
    const auto& elems = y.elements();
    auto keep = [&](const std::vector<int>& s) {
        Face u;
        for (int i : s) u = u.unite(elems[i]);
        return x.contains(u);
    };
    auto in_sub = [](const std::vector<int>&) { return false; };
    return build_subset_complex((int)elems.size(), k_max, keep, in_sub);
}

CochainComplexQ kernel_complex(const USubset& n, const USubset& nt, int k_max) {
    for (Face f : nt.elements())
        if (!n.contains(f))
            throw std::invalid_argument("kernel_complex: ~N not contained in N");
    const SimplicialComplex& x = n.parent();
    const auto& elems = n.elements();
    auto keep = [&](const std::vector<int>& s) {
        Face u;
        for (int i : s) u = u.unite(elems[i]);
        return x.contains(u);
    };
    auto in_sub = [&](const std::vector<int>& s) {
        for (int i : s)
            if (!nt.contains(elems[i])) return false;
        return true;
    };
    auto cx = build_subset_complex((int)elems.size(), k_max, keep, in_sub);
    cx.relative = !nt.empty();
    return cx;
}

CochainComplexQ order_cochain_complex(const OrderComplex& y,
                                      const std::vector<Face>& rel, int k_max) {
    const auto& elems = y.elements();
    std::unordered_set<std::uint64_t> rel_set;
    for (Face f : rel) rel_set.insert(f.bits());
    auto keep = [&](const std::vector<int>& s) {
        for (int j = 0; j + 1 < (int)s.size(); ++j)
            if (!elems[s[j + 1]].contains(elems[s[j]]) || elems[s[j + 1]] == elems[s[j]])
                return false;
        return true;
    };
    auto in_sub = [&](const std::vector<int>& s) {
        for (int i : s)
            if (!rel_set.count(elems[i].bits())) return false;
        return true;
    };
    auto cx = build_subset_complex((int)elems.size(), k_max, keep, in_sub);
    cx.relative = !rel.empty();
    return cx;
}

CochainComplexQ simplicial_cochain_complex(const SimplicialComplex& x,
                                           const SimplicialComplex* rel, int k_max) {
    if (rel)
        for (Face f : rel->faces())
            if (!x.contains(f))
                throw std::invalid_argument("relative subcomplex not contained in X");
    auto keep = [&](const std::vector<int>& s) {
        return x.contains(Face::from_members(s));
    };
    auto in_sub = [&](const std::vector<int>& s) {
        return rel && rel->contains(Face::from_members(s));
    };
    auto cx = build_subset_complex(x.ambient_size(), k_max, keep, in_sub);
    // A = {emptyset} contributes no cochain basis elements; only a subcomplex
    // with actual vertices makes the pair relative.
    cx.relative = rel && !rel->vertex_set().empty();
    return cx;
}

CohomologyDims cohomology(const CochainComplexQ& c, bool reduced) {
    CohomologyDims out;
    out.reduced = reduced && !c.relative;
    int top = (int)c.d.size();  // d[k] defined for k < top
    std::vector<int> ranks(top);
    for (int k = 0; k < top; ++k) ranks[k] = rank(c.d[k]);
    for (int k = 0; k < top; ++k) {
        int h = c.dim(k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
        assert(h >= 0);
        out.h.push_back(h);
    }
    if (out.reduced && c.dim(0) > 0) {
        // The augmentation: constants are cocycles.
#ifndef NDEBUG
        std::vector<Rational> ones(c.dim(0), 1);
        assert(c.d.empty() || [&] {
            for (const auto& v : c.d[0].apply(ones))
                if (v != 0) return false;
            return true;
        }());
#endif
        assert(out.h[0] >= 1);
        out.h[0] -= 1;
    }
    return out;
}

} // namespace srcot
