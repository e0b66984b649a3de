#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "patchwork/calculus.hpp"
#include "patchwork/constructions.hpp"
#include "patchwork/error.hpp"
#include "patchwork/real.hpp"

using namespace patchwork;
using fixtures::pt;

namespace {

SignDistribution quadratic(const PrimitiveComplex& k) {
    return named_distribution({DistributionKind::Quadratic, Quadratic::standard(k.dim()), 0, 0, 0}, k);
}

long euler(const std::vector<std::size_t>& v) {
    long e = 0;
    for (std::size_t i = 0; i < v.size(); ++i) e += (i % 2 ? -1L : 1L) * static_cast<long>(v[i]);
    return e;
}

std::vector<std::size_t> cell_counts(const RealComplex& x) {
    std::vector<std::size_t> c;
    for (int r = 0; r <= x.top_dim(); ++r) c.push_back(x.count(r));
    return c;
}

// The boundary of a boundary vanishes mod 2.
void check_chain_complex(const RealComplex& x) {
    for (int r = 2; r <= x.top_dim(); ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            std::vector<std::uint32_t> parity(x.count(r - 2), 0);
            for (auto f : x.faces(r, i)) {
                for (auto g : x.faces(r - 1, f)) parity[g] ^= 1u;
            }
            CHECK(std::all_of(parity.begin(), parity.end(), [](std::uint32_t p) { return p == 0; }));
        }
    }
}

// Surjectivity recomputed from a dense kernel of the hypersurface's first boundary map.
bool h1_oracle(const RealComplex& rk, const RealComplex& x) {
    F2Matrix d1(x.count(0), x.count(1));
    for (std::uint32_t i = 0; i < x.count(1); ++i) {
        for (auto f : x.faces(1, i)) d1.row(f).flip(i);
    }
    std::vector<std::vector<std::uint32_t>> b2;
    for (std::uint32_t i = 0; i < rk.count(2); ++i) b2.push_back(rk.faces(2, i));
    const auto base = sparse_rank(b2, rk.count(1));
    auto both = b2;
    for (const auto& z : nullspace(d1)) {
        std::vector<std::uint32_t> col;
        for (std::uint32_t i = 0; i < x.count(1); ++i) {
            if (z.get(i)) col.push_back(x.parent(1, i));
        }
        both.push_back(col);
    }
    return sparse_rank(both, rk.count(1)) - base == betti(rk)[1];
}

}  // namespace

TEST_CASE("sedentarity") {
    const auto k = knudsen(2, 3);
    for (std::uint32_t i = 0; i < k.count(0); ++i) {
        const auto s = sedentarity(k, SimplexId{0, i});
        const auto& p = k.point(i);
        if (p == pt({1, 1})) CHECK(s.dim() == 0);
        if (p == pt({0, 0})) CHECK(s.dim() == 2);
        if (p == pt({0, 1})) {
            CHECK(s.dim() == 1);
            CHECK(s.vectors[0] == 0b01);
        }
        if (p == pt({1, 2})) {
            CHECK(s.dim() == 1);
            CHECK(s.vectors[0] == 0b11);
        }
    }
    for (std::uint32_t m = 0; m < k.count(2); ++m) CHECK(sedentarity(k, SimplexId{2, m}).dim() == 0);
    CHECK_THROWS_AS(sedentarity(k, SimplexId{3, 0}), Error);
}

TEST_CASE("real model of projective spaces") {
    const auto p1 = build_RK(unit_simplex(1));
    // cubical subdivision of the circle: four vertices, four edges
    CHECK(cell_counts(p1) == std::vector<std::size_t>{4, 4});
    CHECK(betti(p1) == std::vector<std::size_t>{1, 1});
    CHECK(betti(build_RK(unit_simplex(2))) == std::vector<std::size_t>{1, 1, 1});
    CHECK(betti(build_RK(unit_simplex(3))) == std::vector<std::size_t>{1, 1, 1, 1});
    for (const auto& k : {segment(3), knudsen(2, 3), itenberg_viro(2, 4), knudsen(3, 2), itenberg_viro(3, 3)}) {
        const auto rk = build_RK(k);
        check_chain_complex(rk);
        CHECK(manifold_check(rk));
        const auto b = betti(rk);
        CHECK(euler(b) == euler(cell_counts(rk)));
        std::vector<std::size_t> expected(static_cast<std::size_t>(k.dim()) + 1, 1);
        CHECK(b == expected);
        for (int r = 0; r <= rk.top_dim(); ++r) {
            for (std::uint32_t i = 0; i < rk.count(r); ++i) {
                const auto& c = rk.cell(r, i);
                CHECK(sedentarity(k, c.cube.upper).reduce(c.arg) == c.arg);
                CHECK(rk.faces(r, i).size() == 2 * static_cast<std::size_t>(r));
            }
        }
    }
    CHECK_THROWS_AS(build_RK(knudsen(6, 4)), Error);
    try {
        build_RK(knudsen(6, 4));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CellCapExceeded);
        CHECK(e.is_resource_cap());
    }
}

TEST_CASE("membership does not depend on the argument representative") {
    const auto k = knudsen(2, 3);
    const auto rk = build_RK(k);
    for (int trial = 0; trial < 20; ++trial) {
        const auto eps = random_distribution(k, 99, static_cast<std::uint64_t>(trial));
        for (int r = 0; r <= rk.top_dim(); ++r) {
            for (std::uint32_t i = 0; i < rk.count(r); ++i) {
                auto c = rk.cell(r, i);
                const bool base = in_hypersurface(k, eps, c);
                for (auto v : sedentarity(k, c.cube.upper).vectors) {
                    c.arg ^= v;
                    CHECK(in_hypersurface(k, eps, c) == base);
                }
            }
        }
    }
}

TEST_CASE("T-hypersurfaces in low degree") {
    const auto unit = unit_simplex(1);
    const auto x1 = build_TX(unit, distribution_from_mask(0, 2));
    CHECK(x1.count(0) == 1);
    CHECK(betti(x1) == std::vector<std::size_t>{1});
    const auto seg = segment(3);
    CHECK(betti(build_TX(seg, distribution_from_mask(0, 4)))[0] == 3);
    const auto t = unit_simplex(2);
    for (std::uint64_t m = 0; m < 8; ++m) {
        const auto x = build_TX(t, distribution_from_mask(m, 3));
        CHECK(betti(x) == std::vector<std::size_t>{1, 1});
        check_chain_complex(x);
    }
    const auto k = knudsen(2, 3);
    const auto x = build_TX(k, quadratic(k));
    CHECK(betti(x) == std::vector<std::size_t>{2, 2});
    const auto c = components(k, x);
    CHECK(c.count == 2);
    for (std::uint32_t i = 0; i < c.count; ++i) CHECK(euler(component_betti(x, c, i)) == 0);
    CHECK_THROWS_AS(build_TX(k, distribution_from_mask(0, 3)), Error);
}

TEST_CASE("empty hypersurface has no components") {
    const auto k = unit_simplex(1);
    const auto rk = build_RK(k);
    const auto x = build_TX(k, rk, distribution_from_mask(0, 2));
    CHECK(components(k, x).count == 1);
    RealComplex empty;
    CHECK(components(k, empty).count == 0);
    CHECK(betti(empty).empty());
}

TEST_CASE("maximal curves and surfaces") {
    for (Coord d = 3; d <= 5; ++d) {
        for (const auto& k : {knudsen(2, d), itenberg_viro(2, d)}) {
            const auto x = build_TX(k, quadratic(k));
            CHECK(components(k, x).count == static_cast<std::size_t>(1 + (d - 1) * (d - 2) / 2));
        }
    }
    for (Coord d = 4; d <= 5; ++d) {
        const auto k = itenberg_viro(3, d);
        const auto eps = harnack_distribution(k);
        const auto rk = build_RK(k);
        const auto x = build_TX(k, rk, eps);
        const auto c = components(k, x);
        const std::size_t spheres = static_cast<std::size_t>((d - 1) * (d - 2) * (d - 3) / 6);
        CHECK(c.count == 1 + spheres);
        std::size_t detached = 0, full = 0;
        for (std::uint32_t i = 0; i < c.count; ++i) {
            if (c.divisors[i] == 0 && component_betti(x, c, i) == std::vector<std::size_t>{1, 0, 1}) ++detached;
            if (c.divisors[i] == 0b1111) ++full;
        }
        CHECK(detached == spheres);
        CHECK(full == 1);
        CHECK(manifold_check(x));
        CHECK(avoided_lift_check(k, frames(k), eps, x));
        CHECK(h1_inclusion_surjective(k, rk, x));
        for (std::uint32_t i = 0; i < c.count; ++i) {
            const auto piece = component_subcomplex(x, c, i);
            CHECK(betti(piece) == component_betti(x, c, i));
            CHECK(h1_inclusion_surjective(k, rk, piece) == (c.divisors[i] != 0));
            CHECK(h1_oracle(rk, piece) == (c.divisors[i] != 0));
        }
        const auto r = haas_check_full(k, frames(k), eps, true);
        CHECK(r.cond2_ell == std::optional<bool>(true));
        CHECK(r.predicted_maximal == Prediction::Yes);
    }
}

TEST_CASE("component bounds and structural checks on random signs") {
    for (const auto& k : {knudsen(2, 2), knudsen(2, 3), knudsen(2, 4), knudsen(2, 5), itenberg_viro(2, 4), knudsen(3, 3),
                          itenberg_viro(3, 3)}) {
        const auto f = frames(k);
        const auto rk = build_RK(k);
        const auto interior = k.interior_vertices().size();
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            const auto eps = random_distribution(k, 2024, trial);
            const auto x = build_TX(k, rk, eps);
            const auto c = components(k, x);
            const auto b = betti(x);
            CHECK(c.count == b[0]);
            CHECK(c.count <= 1 + interior);
            CHECK(c.count >= 1 + sphere_indicators(k, f, eps).size());
            CHECK(manifold_check(x));
            CHECK(avoided_lift_check(k, f, eps, x));
            if (k.dim() == 2) CHECK(c.count == 1 + laplacian_nullity(k, f, eps));
            if (trial < 5) check_chain_complex(x);
        }
    }
}

TEST_CASE("H1 inclusion agrees with a dense-kernel oracle") {
    CHECK_THROWS_AS(h1_inclusion_surjective(knudsen(2, 3), harnack_distribution(knudsen(2, 3))), Error);
    for (const auto& k : {knudsen(3, 2), knudsen(3, 3), itenberg_viro(3, 3)}) {
        const auto rk = build_RK(k);
        const auto f = frames(k);
        for (std::uint64_t trial = 0; trial < 30; ++trial) {
            const auto eps = random_distribution(k, 5, trial);
            const auto x = build_TX(k, rk, eps);
            const bool fast = h1_inclusion_surjective(k, rk, x);
            CHECK(fast == h1_oracle(rk, x));
            if (betti(x)[1] == 0) CHECK_FALSE(fast);
            const auto r = haas_check(k, f, eps);
            const bool base = r.cond1_rho_uniform && r.cond3_d2_eq_rho && r.cond4_b1_pairing;
            if (base && components(k, x).count < 1 + k.interior_vertices().size()) CHECK_FALSE(fast);
        }
    }
    // every sign distribution on the quadric triangulation, including the ellipsoids
    const auto k = knudsen(3, 2);
    const auto rk = build_RK(k);
    for (std::uint64_t m = 0; m < (1u << k.count(0)); ++m) {
        const auto x = build_TX(k, rk, distribution_from_mask(m, k.count(0)));
        const bool fast = h1_inclusion_surjective(k, rk, x);
        CHECK(fast == h1_oracle(rk, x));
        if (betti(x)[1] == 0) CHECK_FALSE(fast);
    }
}
