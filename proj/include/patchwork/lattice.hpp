#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace patchwork {

using Coord = std::int64_t;

struct LatticePoint {
    std::vector<Coord> coords;

    std::size_t dim() const { return coords.size(); }
    Coord operator[](std::size_t i) const { return coords[i]; }
    auto operator<=>(const LatticePoint&) const = default;
};

/// Half-space {x : <normal, x> >= offset}.
struct Facet {
    std::vector<Coord> normal;
    Coord offset = 0;

    /// <normal, x> - offset; zero on the facet, positive inside.
    Coord slack(const LatticePoint& x) const;
    bool operator==(const Facet&) const = default;
};

/**
 * Non-singular lattice polytope given by its facet inequalities.  Vertices
 * are kept alongside because the volume and interior-point routines need
 * them and hull computation is not provided.
 */
struct LatticePolytope {
    int dim = 0;
    std::vector<LatticePoint> vertices;
    std::vector<Facet> facets;

    /// conv(0, d e_1, ..., d e_n).  Facets are x_i >= 0 in order, then -sum x_i >= -d.
    static LatticePolytope standard_simplex(int n, Coord d);

    /**
     * Polytope from facets, taking as vertices those candidate points that are
     * tight on a full-rank set of facets.  Throws SingularPolytope or
     * InvalidInput when the data is not a non-singular lattice polytope.
     */
    static LatticePolytope from_facets(int dim, std::vector<Facet> facets, const std::vector<LatticePoint>& candidates);

    void validate() const;
    bool contains(const LatticePoint& x) const;
    bool strictly_contains(const LatticePoint& x) const;
    /// Bit f set when facet f is tight at x.  At most 64 facets.
    std::uint64_t tight_facets(const LatticePoint& x) const;
    /// n! vol(P), from the Brion-Lawrence vertex formula.
    std::int64_t normalized_volume() const;
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
std::int64_t integer_determinant(const std::vector<std::vector<Coord>>& m);

/// Determinant of the edge vectors v_i - v_0 of an n-simplex in Z^n.
std::int64_t simplex_determinant(const std::vector<LatticePoint>& vertices);

struct Simplex {
    std::vector<std::uint32_t> verts;

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    bool contains_vertex(std::uint32_t v) const;
    bool is_face_of(const Simplex& other) const;
    auto operator<=>(const Simplex&) const = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

struct SimplexId {
    int dim = 0;
    std::uint32_t index = 0;
    auto operator<=>(const SimplexId&) const = default;
};

/// Closed subcomplex, as sorted simplex indices per dimension.
struct Subcomplex {
    std::vector<std::vector<std::uint32_t>> by_dim;

    bool contains(SimplexId id) const;
    std::size_t size() const;
};

struct Cube {
    SimplexId lower;
    SimplexId upper;

    int dim() const { return upper.dim - lower.dim; }
    auto operator<=>(const Cube&) const = default;
};

struct BoundaryEnlargements {
    std::vector<std::vector<std::uint8_t>> b0;
    std::vector<std::vector<std::uint8_t>> b1;
    /// Interior vertex of a simplex of B1K not in B0K, -1 elsewhere.
    std::vector<std::vector<std::int32_t>> ap;
};

class PrimitiveComplex;

PrimitiveComplex build_complex(std::vector<LatticePoint> points, std::vector<Simplex> maximal_simplices,
                               LatticePolytope polytope);

/**
 * Primitive triangulation of a non-singular lattice polytope with its face
 * lattice.  Simplices of each dimension are stored in lexicographic order of
 * their sorted vertex indices.  Immutable once built.
 */
class PrimitiveComplex {
public:
    int dim() const { return n_; }
    const LatticePolytope& polytope() const { return polytope_; }
    const std::vector<LatticePoint>& points() const { return points_; }
    const LatticePoint& point(std::uint32_t v) const { return points_[v]; }

    std::size_t count(int p) const { return faces_[static_cast<std::size_t>(p)].size(); }
    const Simplex& simplex(int p, std::uint32_t i) const { return faces_[static_cast<std::size_t>(p)][i]; }
    const Simplex& simplex(SimplexId id) const { return simplex(id.dim, id.index); }
    const std::vector<Simplex>& simplices(int p) const { return faces_[static_cast<std::size_t>(p)]; }
    const std::vector<Simplex>& maximal_simplices() const { return faces_.back(); }

    std::optional<std::uint32_t> find(const Simplex& s) const;
    /// Like find, but throws UnknownSimplex.
    SimplexId id_of(const Simplex& s) const;

    /// Indices of the (p+1)-simplices containing simplex (p, i).
    const std::vector<std::uint32_t>& cofaces(int p, std::uint32_t i) const { return cofaces_[static_cast<std::size_t>(p)][i]; }
    /// Indices of the (p-1)-faces of simplex (p, i), one per removed vertex in vertex order.
    const std::vector<std::uint32_t>& facets(int p, std::uint32_t i) const { return facets_[static_cast<std::size_t>(p)][i]; }
    /// All faces (every dimension, including the simplex itself).
    std::vector<SimplexId> all_faces(SimplexId id) const;

    bool on_boundary(int p, std::uint32_t i) const { return boundary_[static_cast<std::size_t>(p)][i]; }
    bool on_boundary(SimplexId id) const { return on_boundary(id.dim, id.index); }
    bool interior_vertex(std::uint32_t v) const { return !boundary_[0][v]; }
    const std::vector<std::uint32_t>& interior_vertices() const { return interior_vertices_; }

    bool in_b0(SimplexId id) const { return enlarged_.b0[static_cast<std::size_t>(id.dim)][id.index]; }
    bool in_b1(SimplexId id) const { return enlarged_.b1[static_cast<std::size_t>(id.dim)][id.index]; }
    std::optional<std::uint32_t> apex(SimplexId id) const;
    const BoundaryEnlargements& enlargements() const { return enlarged_; }

    const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const { return neighbours_[v]; }

private:
    friend PrimitiveComplex build_complex(std::vector<LatticePoint>, std::vector<Simplex>, LatticePolytope);

    int n_ = 0;
    LatticePolytope polytope_;
    std::vector<LatticePoint> points_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> index_;
    std::vector<std::vector<std::vector<std::uint32_t>>> cofaces_;
    std::vector<std::vector<std::vector<std::uint32_t>>> facets_;
    std::vector<std::vector<std::uint8_t>> boundary_;
    std::vector<std::uint32_t> interior_vertices_;
    BoundaryEnlargements enlarged_;
    std::vector<std::vector<std::uint32_t>> neighbours_;
};

struct StarLink {
    Subcomplex star;
    Subcomplex link;
};

StarLink star_link(const PrimitiveComplex& k, const Simplex& sigma);

/// B0K, B1K and the apex map, computed from the definitions.
BoundaryEnlargements enlarged_boundaries(const PrimitiveComplex& k);

std::vector<Cube> cubical_cells(const PrimitiveComplex& k, int dim);

std::vector<std::size_t> f_vector(const PrimitiveComplex& k);

std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& p);

/// All lattice points of P in lexicographic order.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

/// Minimum 1-skeleton distance between a vertex of sigma and a vertex of tau.
int simplex_distance(const PrimitiveComplex& k, const Simplex& sigma, const Simplex& tau);

/// Breadth-first distances from a set of source vertices, capped at max_depth (-1 beyond).
std::vector<int> vertex_distances(const PrimitiveComplex& k, const std::vector<std::uint32_t>& sources, int max_depth = -1);

}  // namespace patchwork
