#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "patchwork/calculus.hpp"
#include "patchwork/f2.hpp"
#include "patchwork/lattice.hpp"

namespace patchwork {

/// Refuse real complexes with more cells than this.
inline constexpr std::size_t kMaxRealCells = std::size_t{1} << 24;

/// Echelon basis of Sed(Q) for the smallest face Q of P containing relint(sigma).
struct SedBasis {
    std::uint64_t facets = 0;             ///< facets of P tight on sigma
    std::vector<std::uint64_t> vectors;   ///< reduced row echelon form, as bit masks
    std::vector<int> pivots;

    std::size_t dim() const { return vectors.size(); }
    /// Canonical representative: zero at every pivot.
    std::uint64_t reduce(std::uint64_t v) const;
};

SedBasis sedentarity(const PrimitiveComplex& k, SimplexId sigma);

/// A quadrant lift of a cube: arg is the canonical representative modulo Sed of the upper simplex.
struct RealCell {
    Cube cube;
    std::uint64_t arg = 0;

    int dim() const { return cube.dim(); }
    F2Vector argument(int n) const { return F2Vector::from_mask(arg, static_cast<std::size_t>(n)); }
};

struct Components {
    std::size_t count = 0;
    std::vector<std::vector<std::uint32_t>> id;  ///< component of each cell, per dimension
    std::vector<std::uint64_t> divisors;         ///< facets of P met by each component
    std::vector<std::size_t> cells;              ///< number of cells of each component
};

/**
 * Regular CW complex made of quadrant lifts of the cubes of K.  Cells are
 * grouped by dimension; each cell lists its codimension-one faces (with
 * multiplicity) as indices into the previous dimension.
 */
class RealComplex {
public:
    int ambient_dim() const { return n_; }
    /// Largest possible cell dimension: n for the model of the toric variety, n-1 for a hypersurface.
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t count(int k) const { return k < 0 || k > top_dim() ? 0 : cells_[static_cast<std::size_t>(k)].size(); }
    std::size_t size() const;
    const RealCell& cell(int k, std::uint32_t i) const { return cells_[static_cast<std::size_t>(k)][i]; }
    const std::vector<std::uint32_t>& faces(int k, std::uint32_t i) const { return faces_[static_cast<std::size_t>(k)][i]; }
    bool is_subcomplex_of_rk() const { return subcomplex_; }
    /// Index of the same cell in the ambient model (subcomplexes only).
    std::uint32_t parent(int k, std::uint32_t i) const { return parent_[static_cast<std::size_t>(k)][i]; }
    std::optional<std::uint32_t> find(const RealCell& c) const;

private:
    friend RealComplex build_RK(const PrimitiveComplex& k);
    friend RealComplex build_TX(const PrimitiveComplex& k, const RealComplex& rk, const SignDistribution& eps);
    friend RealComplex component_subcomplex(const RealComplex& x, const Components& comps, std::uint32_t component);

    int n_ = 0;
    bool subcomplex_ = false;
    std::vector<std::vector<RealCell>> cells_;
    std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
    std::vector<std::vector<std::uint32_t>> parent_;
};

RealComplex build_RK(const PrimitiveComplex& k);
RealComplex build_TX(const PrimitiveComplex& k, const SignDistribution& eps);
/// Same as above, reusing a model already built for k.
RealComplex build_TX(const PrimitiveComplex& k, const RealComplex& rk, const SignDistribution& eps);

/// Membership of a cell of the model in the T-hypersurface.
bool in_hypersurface(const PrimitiveComplex& k, const SignDistribution& eps, const RealCell& c);


Components components(const PrimitiveComplex& k, const RealComplex& x);

/// The cells of one component, as a subcomplex of the same model.
RealComplex component_subcomplex(const RealComplex& x, const Components& comps, std::uint32_t component);

/// F2 Betti numbers b_0..b_top of the whole complex.
std::vector<std::size_t> betti(const RealComplex& x);
/// F2 Betti numbers of one connected component.
std::vector<std::size_t> component_betti(const RealComplex& x, const Components& comps, std::uint32_t component);

/// Rank mod 2 of a sparse matrix given by columns of row indices (repeated indices cancel).
std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows);

/// Whether H_1 of the hypersurface maps onto H_1 of the model.  n = 3 only.
bool h1_inclusion_surjective(const PrimitiveComplex& k, const RealComplex& rk, const RealComplex& x);
bool h1_inclusion_surjective(const PrimitiveComplex& k, const SignDistribution& eps);

/// Every (n-2)-cell has exactly two (n-1)-cofaces.
bool manifold_check(const RealComplex& x);
/// Each maximal simplex has exactly one lift missed by the hypersurface, with argument D eps.
bool avoided_lift_check(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, const RealComplex& x);

/// Haas conditions with cond2 evaluated by h1_inclusion_surjective when n = 3 and requested.
HaasReport haas_check_full(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, bool compute_cond2);

}  // namespace patchwork
