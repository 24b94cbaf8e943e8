#ifndef SRCOT_FACE_HPP
#define SRCOT_FACE_HPP

#include <cstdint>
#include <bit>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace srcot {

/// A face: a finite set of vertex indices drawn from [0, 64).
/// Stored as a bitmask; all set algebra is O(1).
class Face {
public:
    static constexpr int max_vertices = 64;

    Face() = default;
    explicit constexpr Face(std::uint64_t bits) : bits_(bits) {}

    static Face of(std::initializer_list<int> vs) {
        Face f;
        for (int v : vs) f = f.with(v);
        return f;
    }
    static Face from_members(const std::vector<int>& vs) {
        Face f;
        for (int v : vs) f = f.with(v);
        return f;
    }
    static Face singleton(int v) { return Face{}.with(v); }
    /// The full face {0, ..., n}.
    static Face full(int n_plus_1) {
        if (n_plus_1 < 0 || n_plus_1 > max_vertices)
            throw std::invalid_argument("Face::full: size out of range");
        return n_plus_1 == 64 ? Face(~std::uint64_t{0})
                              : Face((std::uint64_t{1} << n_plus_1) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool contains(Face g) const { return (g.bits_ & ~bits_) == 0; }
    constexpr bool intersects(Face g) const { return (bits_ & g.bits_) != 0; }
    constexpr bool disjoint(Face g) const { return !intersects(g); }

    constexpr Face unite(Face g) const { return Face(bits_ | g.bits_); }
    constexpr Face intersect(Face g) const { return Face(bits_ & g.bits_); }
    constexpr Face minus(Face g) const { return Face(bits_ & ~g.bits_); }
    Face with(int v) const {
        if (v < 0 || v >= max_vertices)
            throw std::invalid_argument("Face: vertex index out of range");
        return Face(bits_ | (std::uint64_t{1} << v));
    }
    Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b;) {
            int v = std::countr_zero(b);
            out.push_back(v);
            b &= b - 1;
        }
        return out;
    }
    int min_member() const { return std::countr_zero(bits_); }

    constexpr bool operator==(const Face&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member lists. Used everywhere a deterministic face order is needed.
inline bool face_less(Face f, Face g) {
    if (f.size() != g.size()) return f.size() < g.size();
    std::uint64_t a = f.bits(), b = g.bits();
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

struct FaceLess {
    bool operator()(Face f, Face g) const { return face_less(f, g); }
};

struct FaceHash {
    std::size_t operator()(Face f) const {
        return std::hash<std::uint64_t>{}(f.bits());
    }
};

/// Exponent vector of a monomial: vertex index -> nonnegative multiplicity.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> mult) : mult_(std::move(mult)) {
        for (int m : mult_)
            if (m < 0) throw std::invalid_argument("ExponentVector: negative entry");
    }
    /// Characteristic vector of a face.
    static ExponentVector characteristic(Face f) {
        ExponentVector e;
        for (int v : f.members()) e.set(v, 1);
        return e;
    }

    int operator[](int v) const {
        return v >= 0 && v < (int)mult_.size() ? mult_[v] : 0;
    }
    void set(int v, int m) {
        if (v < 0 || m < 0) throw std::invalid_argument("ExponentVector::set");
        if (v >= (int)mult_.size()) mult_.resize(v + 1, 0);
        mult_[v] = m;
    }
    Face support() const {
        Face f;
        for (int v = 0; v < (int)mult_.size(); ++v)
            if (mult_[v] > 0) f = f.with(v);
        return f;
    }
    int degree() const {
        int d = 0;
        for (int m : mult_) d += m;
        return d;
    }
    bool operator==(const ExponentVector& o) const {
        int n = std::max(mult_.size(), o.mult_.size());
        for (int v = 0; v < n; ++v)
            if ((*this)[v] != o[v]) return false;
        return true;
    }
    ExponentVector plus(const ExponentVector& o) const {
        ExponentVector r = *this;
        for (int v = 0; v < (int)o.mult_.size(); ++v)
            if (o.mult_[v]) r.set(v, r[v] + o.mult_[v]);
        return r;
    }
    ExponentVector plus(Face f) const { return plus(characteristic(f)); }
    /// Entrywise difference; throws if any entry would become negative.
    ExponentVector minus(Face f) const {
        ExponentVector r = *this;
        for (int v : f.members()) {
            if (r[v] < 1)
                throw std::invalid_argument("ExponentVector::minus: negative entry");
            r.set(v, r[v] - 1);
        }
        return r;
    }
    bool is_squarefree() const {
        for (int m : mult_)
            if (m > 1) return false;
        return true;
    }
    /// Vertices carrying multiplicity >= 2.
    Face at_least_two() const {
        Face f;
        for (int v = 0; v < (int)mult_.size(); ++v)
            if (mult_[v] >= 2) f = f.with(v);
        return f;
    }

private:
    std::vector<int> mult_;
};

/// A multidegree c = a - b with disjoint supports.
struct Multidegree {
    ExponentVector a;
    Face b;

    Multidegree(ExponentVector a_, Face b_) : a(std::move(a_)), b(b_) {
        if (a.support().intersects(b))
            throw std::invalid_argument("Multidegree: supports of a and b overlap");
    }
    /// Coarse degree deg(a) - #b.
    int coarse_degree() const { return a.degree() - b.size(); }
};

} // namespace srcot

#endif
