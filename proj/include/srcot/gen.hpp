#ifndef SRCOT_GEN_HPP
#define SRCOT_GEN_HPP

#include <string>

#include "srcot/complex.hpp"

namespace srcot {

/// Builtin example complexes, selected by a textual descriptor:
///   simplex:n            full simplex on n+1 vertices
///   simplex-boundary:n   boundary of the n-simplex
///   ngon:n               cyclic graph on n vertices (n >= 3)
///   sphere0              two disjoint points
///   octahedron           boundary of the octahedron
///   octahedron-diagonals octahedron plus its three diagonal edges
///   random:seed,verts[,density]   seeded random complex; key=value
///                                 form (seed=7,verts=6) also accepted
SimplicialComplex make_generator(const std::string& descriptor);

} // namespace srcot

#endif
