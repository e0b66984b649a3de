#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patchwork/f2.hpp"
#include "patchwork/lattice.hpp"

namespace patchwork {

/// One bit per vertex of K.
struct SignDistribution {
    std::vector<std::uint8_t> bits;

    bool operator[](std::uint32_t v) const { return bits[v] & 1u; }
    std::size_t size() const { return bits.size(); }
    bool operator==(const SignDistribution&) const = default;
};

/// Data attached to an interior (n-1)-simplex ("wall") shared by two maximal simplices.
struct WallFrame {
    std::uint32_t wall = 0;        ///< index among the (n-1)-simplices
    std::uint32_t plus = 0;        ///< lexicographically smaller adjacent maximal simplex
    std::uint32_t minus = 0;
    std::uint32_t apex_plus = 0;   ///< vertex of plus opposite the wall
    std::uint32_t apex_minus = 0;
    F2Vector normal;               ///< generator of the normal line N(wall)
    std::vector<std::uint8_t> rho; ///< |rho(alpha)| for each wall vertex, in vertex order
    std::vector<std::uint32_t> interior_set;  ///< vertices alpha with alpha and wall - alpha off the boundary

    bool rho_at(const Simplex& wall_simplex, std::uint32_t vertex) const;
};

struct SimplexFrame {
    int n = 0;
    /// e_sigma(alpha) for each maximal simplex, in vertex order.
    std::vector<std::vector<F2Vector>> e;
    std::vector<WallFrame> walls;
    /// Position in `walls` of each (n-1)-simplex, -1 for boundary walls.
    std::vector<std::int32_t> wall_of;

    const WallFrame* wall(std::uint32_t index) const;
    const F2Vector& e_at(const PrimitiveComplex& k, std::uint32_t maximal, std::uint32_t vertex) const;
};

/// (b - a) mod 2.
F2Vector difference_mod2(const LatticePoint& a, const LatticePoint& b);

/**
 * Mod-2 dual vectors of a unimodular simplex: entry i pairs to one with
 * v_i - v_j for every j != i and to zero with v_k - v_j for k != i, j.
 */
std::vector<F2Vector> dual_vectors(const std::vector<LatticePoint>& vertices);

WedgeVector omega(const PrimitiveComplex& k, const Simplex& sigma);

SimplexFrame frames(const PrimitiveComplex& k);

F2Vector first_derivative(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t maximal);

/// |D^2 eps| on an interior wall.
bool second_derivative(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t wall);

/// Rows: interior walls; columns: vertices.  Its kernel is the affine functions mod 2.
F2Matrix second_derivative_operator(const PrimitiveComplex& k, const SimplexFrame& f);

struct Uniformity {
    bool uniform = true;
    std::vector<std::uint32_t> failing;  ///< walls where |rho| is not constant on I(wall)
};

Uniformity rho_uniformity(const PrimitiveComplex& k, const SimplexFrame& f);

struct RhoChain {
    std::vector<std::uint8_t> values;  ///< per (n-1)-simplex; zero on B0K
    bool is_cycle = false;             ///< boundary of the chain vanishes off B0K
};

/// Throws NotRhoUniform on non-uniform complexes.
RhoChain rho_chain(const PrimitiveComplex& k, const SimplexFrame& f);

/// |D^2 eps + rho(beta)| on an interior wall containing beta.
bool twist(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t wall, std::uint32_t beta);

/// Generator of the top exterior power of N(sigma), the annihilator of the tangent space of sigma.
WedgeVector normal_generator(const PrimitiveComplex& k, const Simplex& sigma);

/// Wedge sum over walls containing sigma of e_wall(beta) ^ (D^2 eps + rho(beta)).
WedgeVector contained_wedge_sum(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t beta,
                                std::uint32_t sigma);

/// Intersection number (beta; sigma) of an interior vertex and an interior (n-2)-simplex.
bool intersection_number(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t beta,
                         std::uint32_t sigma);

struct M0Matrix {
    F2Matrix matrix;
    std::vector<std::uint32_t> rows;  ///< interior vertices
    std::vector<std::uint32_t> cols;  ///< interior (n-2)-simplices
};

M0Matrix matrix_M0(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps);

struct KappaResult {
    std::size_t value = 0;
    bool exact = true;
};

/// Largest set of non-uniform walls at pairwise distance >= 2.
KappaResult kappa(const PrimitiveComplex& k, const SimplexFrame& f);
/// Maximum independent set size of a graph given by adjacency bit masks (at most 64 vertices).
std::size_t max_independent_set(const std::vector<std::uint64_t>& adjacency);

enum class Prediction { Yes, No, NeedsCond2 };
const char* prediction_name(Prediction p);

struct HaasReport {
    bool cond1_rho_uniform = false;
    std::vector<std::uint32_t> cond1_failing;
    std::optional<bool> cond2_ell;
    bool cond3_d2_eq_rho = false;
    std::vector<std::uint32_t> cond3_violations;  ///< walls outside B1K
    bool cond4_b1_pairing = false;
    std::vector<std::uint32_t> cond4_violations;  ///< (n-2)-simplices of B1K \ B0K
    Prediction predicted_maximal = Prediction::No;
};

/**
 * Conditions of the Haas maximality check.  cond3 needs the rho chain
 * and is reported false on non-uniform complexes.  cond2 is evaluated only
 * when n = 3 and a callback is supplied.
 */
HaasReport haas_check(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps,
                      const std::function<bool()>& cond2 = {});

struct LinearSystem {
    F2Matrix matrix;
    F2Vector rhs;
    std::vector<std::uint32_t> rows;  ///< (n-1)-simplex of each equation
};

/// D^2 eps = rho on every (n-1)-simplex outside B0K.  Requires rho-uniformity.
LinearSystem simple_harnack_system(const PrimitiveComplex& k, const SimplexFrame& f);
std::optional<SignDistribution> solve_simple_harnack(const PrimitiveComplex& k, const SimplexFrame& f);

/// n = 2 only: the Laplacian on interior-vertex cochains.
F2Matrix laplacian(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps);
std::size_t laplacian_nullity(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps);

/// Interior vertices beta with |D^2 eps| = |rho(beta)| on every wall through beta.
std::vector<std::uint32_t> sphere_indicators(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps);

/// c + sum l_i x_i + sum x_i x_j over the listed pairs, mod 2.  Indices are 0-based.
struct Quadratic {
    int constant = 0;
    std::vector<int> linear;
    std::vector<std::pair<int, int>> products;

    /// sum x_i + sum_{i<j} x_i x_j; for n = 2 this is x + y + xy.
    static Quadratic standard(int n);
    bool evaluate(const LatticePoint& x) const;
};

enum class DistributionKind { Harnack, Quadratic, Constant, Random };

struct NamedDistribution {
    DistributionKind kind = DistributionKind::Harnack;
    Quadratic quadratic;
    int constant = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

SignDistribution named_distribution(const NamedDistribution& recipe, const PrimitiveComplex& k);
/// sum_{i<j} x_i x_j mod 2.
SignDistribution harnack_distribution(const PrimitiveComplex& k);
SignDistribution random_distribution(const PrimitiveComplex& k, std::uint64_t seed, std::uint64_t trial = 0);
SignDistribution distribution_from_mask(std::uint64_t mask, std::size_t vertices);

}  // namespace patchwork
