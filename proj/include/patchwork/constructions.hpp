#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patchwork/lattice.hpp"

namespace patchwork {

enum class Family { Knudsen, Viro, ItenbergViro };

Family parse_family(const std::string& name);
const char* family_name(Family f);

/**
 * Build a complex on a polytope from simplices given by coordinates.  Points
 * are indexed in lexicographic order of their coordinates.
 */
PrimitiveComplex complex_from_coordinates(const LatticePolytope& polytope,
                                          const std::vector<std::vector<LatticePoint>>& simplices);

/// Size d when K triangulates the standard simplex conv(0, d e_1, ..., d e_n).
std::optional<Coord> standard_simplex_size(const PrimitiveComplex& k);

/// P^n_1 as a single simplex.
PrimitiveComplex unit_simplex(int n);

/// The unique primitive triangulation of [0, d].
PrimitiveComplex segment(Coord d);

/// Triangulation of P^n_d cut out by the hyperplanes x_i + ... + x_j = k.
PrimitiveComplex knudsen(int n, Coord d);

/**
 * Viro sum of a triangulation K of P^{n+1}_d and a triangulation L of
 * P^n_{d+1}.  The upper part x_{n+1} >= 1 is K shifted by e_{n+1}; the slab
 * 0 <= x_{n+1} <= 1 is filled with joins of faces of K and L, whose order
 * depends on eta.
 */
PrimitiveComplex viro_sum(const PrimitiveComplex& k, const PrimitiveComplex& l, bool eta);

/// IV^n_d: IV^{n+1}_{d+1} = IV^{n+1}_d + (-1)^d IV^n_{d+1}.
PrimitiveComplex itenberg_viro(int n, Coord d);

/// V^n_d: the same recursion with every sign positive.
PrimitiveComplex viro_family(int n, Coord d);

PrimitiveComplex generate(Family family, int n, Coord d);

/**
 * Restriction of a triangulation of P^n_d to the face spanned by d e_i for
 * i in the index set (e_0 = 0), re-expressed as a triangulation of
 * P^{|I|-1}_d through the coordinates x_{i_1}, ..., x_{i_k}.
 */
PrimitiveComplex restrict_to_face(const PrimitiveComplex& k, std::vector<int> index_set);

/// Maximal simplices as sorted lists of coordinates, for comparing complexes.
std::vector<std::vector<LatticePoint>> coordinate_simplices(const PrimitiveComplex& k);

}  // namespace patchwork
