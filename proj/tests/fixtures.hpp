#pragma once

#include "patchwork/constructions.hpp"
#include "patchwork/lattice.hpp"

namespace fixtures {

using namespace patchwork;

inline LatticePoint pt(std::initializer_list<Coord> c) { return LatticePoint{std::vector<Coord>(c)}; }

/// A=(0,0), B=(1,0), C=(0,1), D=(1,-1) with triangles ABC and ABD.
inline PrimitiveComplex e1() {
    std::vector<Facet> facets{{{1, 0}, 0}, {{-1, 0}, -1}, {{1, 1}, 0}, {{-1, -1}, -1}};
    std::vector<LatticePoint> pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, -1})};
    auto poly = LatticePolytope::from_facets(2, facets, pts);
    return build_complex(pts, {Simplex{{0, 1, 2}}, Simplex{{0, 1, 3}}}, poly);
}

inline constexpr std::uint32_t A = 0, B = 1, C = 2, D = 3;

inline PrimitiveComplex t1() { return unit_simplex(2); }

}  // namespace fixtures
