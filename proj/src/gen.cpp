#include "srcot/gen.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace srcot {

namespace {

std::vector<std::string> numeric_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("generator: bad " + what + " '" + s + "'");
    }
}

SimplicialComplex make_octahedron(bool diagonals) {
    // antipodal vertex pairs: (x, x2), (y, y2), (z, z2)
    std::vector<std::string> names = {"x", "y", "z", "x2", "y2", "z2"};
    std::vector<Face> facets;
    for (int i : {0, 3})
        for (int j : {1, 4})
            for (int k : {2, 5}) facets.push_back(Face::of({i, j, k}));
    if (diagonals)
        for (int v : {0, 1, 2}) facets.push_back(Face::of({v, v + 3}));
    return SimplicialComplex::from_facet_faces(6, facets, names);
}

SimplicialComplex make_random(const std::string& args) {
    int seed = -1, verts = -1;
    double density = 0.5;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= args.size()) {
        std::size_t comma = args.find(',', start);
        if (comma == std::string::npos) comma = args.size();
        parts.push_back(args.substr(start, comma - start));
        start = comma + 1;
    }
    int positional = 0;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        std::size_t eq = part.find('=');
        std::string key = eq == std::string::npos ? "" : part.substr(0, eq);
        std::string val = eq == std::string::npos ? part : part.substr(eq + 1);
        if (key.empty()) key = positional == 0 ? "seed" : positional == 1 ? "verts" : "density";
        ++positional;
        if (key == "seed")
            seed = parse_int(val, "seed");
        else if (key == "verts")
            verts = parse_int(val, "verts");
        else if (key == "density")
            density = std::stod(val);
        else
            throw std::invalid_argument("generator: unknown random parameter '" + key + "'");
    }
    if (seed < 0 || verts < 1 || verts > Face::max_vertices)
        throw std::invalid_argument("generator: random needs seed>=0 and 1<=verts<=64");
    if (density <= 0 || density > 1)
        throw std::invalid_argument("generator: density must be in (0,1]");
    std::mt19937 rng((unsigned)seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, verts - 1);
    std::uniform_int_distribution<int> size_dist(1, std::min(3, verts));
    int target = std::max(1, (int)(density * 2 * verts));
    std::vector<Face> facets;
    for (int t = 0; t < target; ++t) {
        if (coin(rng) > density && !facets.empty()) continue;
        int s = size_dist(rng);
        Face f;
        while (f.size() < s) f = f.with(pick(rng));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facet_faces(verts, facets, numeric_names(verts));
}

} // namespace

SimplicialComplex make_generator(const std::string& descriptor) {
    std::size_t colon = descriptor.find(':');
    std::string kind = descriptor.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : descriptor.substr(colon + 1);

    if (kind == "sphere0") {
        return SimplicialComplex::from_facet_faces(
            2, {Face::of({0}), Face::of({1})}, numeric_names(2));
    }
    if (kind == "simplex") {
        int n = parse_int(args, "dimension");
        if (n < 0 || n + 1 > Face::max_vertices)
            throw std::invalid_argument("generator: simplex dimension out of range");
        return SimplicialComplex::from_facet_faces(n + 1, {Face::full(n + 1)},
                                                   numeric_names(n + 1));
    }
    if (kind == "simplex-boundary") {
        int n = parse_int(args, "dimension");
        if (n < 1 || n + 1 > Face::max_vertices)
            throw std::invalid_argument("generator: simplex dimension out of range");
        return simplex_boundary(Face::full(n + 1), n + 1);
    }
    if (kind == "ngon") {
        int n = parse_int(args, "vertex count");
        if (n < 3 || n > Face::max_vertices)
            throw std::invalid_argument("generator: ngon needs 3 <= n <= 64");
        std::vector<Face> edges;
        for (int v = 0; v < n; ++v) edges.push_back(Face::of({v, (v + 1) % n}));
        return SimplicialComplex::from_facet_faces(n, edges, numeric_names(n));
    }
    if (kind == "octahedron") return make_octahedron(false);
    if (kind == "octahedron-diagonals") return make_octahedron(true);
    if (kind == "random") return make_random(args);
    throw std::invalid_argument("generator: unknown kind '" + kind + "'");
}

} // namespace srcot
