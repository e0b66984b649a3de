#include <bit>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "patchwork/calculus.hpp"
#include "patchwork/constructions.hpp"
#include "patchwork/error.hpp"

using namespace patchwork;
using fixtures::pt;

namespace {

std::vector<std::pair<std::string, PrimitiveComplex>> sample_complexes() {
    std::vector<std::pair<std::string, PrimitiveComplex>> out;
    out.emplace_back("E1", fixtures::e1());
    out.emplace_back("T1", fixtures::t1());
    out.emplace_back("segment(4)", segment(4));
    for (Coord d = 2; d <= 4; ++d) out.emplace_back("knudsen(2," + std::to_string(d) + ")", knudsen(2, d));
    for (Coord d = 2; d <= 5; ++d) out.emplace_back("IV2_" + std::to_string(d), itenberg_viro(2, d));
    out.emplace_back("V2_4", viro_family(2, 4));
    for (Coord d = 2; d <= 5; ++d) out.emplace_back("knudsen(3," + std::to_string(d) + ")", knudsen(3, d));
    for (Coord d = 2; d <= 4; ++d) out.emplace_back("IV3_" + std::to_string(d), itenberg_viro(3, d));
    out.emplace_back("knudsen(4,2)", knudsen(4, 2));
    return out;
}

SignDistribution random_eps(std::size_t n, std::mt19937_64& rng) {
    SignDistribution eps;
    for (std::size_t i = 0; i < n; ++i) eps.bits.push_back(static_cast<std::uint8_t>(rng() & 1u));
    return eps;
}

bool pairing(const F2Vector& a, const F2Vector& b) { return a.dot(b); }

F2Vector vec(std::initializer_list<int> bits) { return F2Vector::from_bits(std::vector<int>(bits)); }

// Direct formula for the twist bit from the frame data.
bool twist_oracle(const PrimitiveComplex& k, const WallFrame& w, const SignDistribution& eps, std::uint32_t beta) {
    const auto& s = k.simplex(k.dim() - 1, w.wall);
    int acc = eps[w.apex_plus] + eps[w.apex_minus] + w.rho_at(s, beta);
    for (auto a : s.verts) acc += eps[a] * w.rho_at(s, a);
    return acc & 1;
}

}  // namespace

TEST_CASE("dual vectors of the unit triangle") {
    const auto e = dual_vectors({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    CHECK(e[0] == vec({1, 1}));
    CHECK(e[1] == vec({1, 0}));
    CHECK(e[2] == vec({0, 1}));
    const auto k = fixtures::t1();
    const auto f = frames(k);
    REQUIRE(k.point(0) == pt({0, 0}));
    CHECK(f.e_at(k, 0, 0) == vec({1, 1}));
    CHECK(f.walls.empty());
}

TEST_CASE("E1 wall frame") {
    using namespace fixtures;
    const auto k = e1();
    const auto f = frames(k);
    REQUIRE(f.walls.size() == 1);
    const auto& w = f.walls[0];
    const auto& ab = k.simplex(1, w.wall);
    CHECK(ab == Simplex{{A, B}});
    CHECK(w.rho_at(ab, A));
    CHECK(w.rho_at(ab, B));
    CHECK(w.normal == vec({0, 1}));
    CHECK(w.interior_set.empty());
    CHECK_THROWS_AS(w.rho_at(ab, C), Error);
}

TEST_CASE("E1 variant with D' = (0,-1) has vanishing rho") {
    const auto plus = dual_vectors({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    const auto minus = dual_vectors({pt({0, 0}), pt({1, 0}), pt({0, -1})});
    CHECK((plus[0] ^ minus[0]).is_zero());
    CHECK((plus[1] ^ minus[1]).is_zero());
}

TEST_CASE("E1 second derivative and twists for xy") {
    using namespace fixtures;
    const auto k = e1();
    const auto f = frames(k);
    const auto xy = named_distribution({DistributionKind::Quadratic, Quadratic{0, {}, {{0, 1}}}, 0, 0, 0}, k);
    CHECK(xy.bits == std::vector<std::uint8_t>{0, 0, 0, 1});
    const auto ab = *k.find(Simplex{{A, B}});
    CHECK(second_derivative(k, f, xy, ab));
    CHECK_FALSE(twist(k, f, xy, ab, A));
    CHECK(twist(k, f, distribution_from_mask(0, 4), ab, A));
    for (std::uint64_t m = 0; m < 16; ++m) {
        const auto eps = distribution_from_mask(m, 4);
        CHECK(second_derivative(k, f, eps, ab) == !twist_oracle(k, f.walls[0], eps, A));
        CHECK(twist(k, f, eps, ab, B) == twist_oracle(k, f.walls[0], eps, B));
    }
    const auto ac = *k.find(Simplex{{A, C}});
    CHECK_THROWS_AS(second_derivative(k, f, xy, ac), Error);
}

TEST_CASE("first derivative examples") {
    const auto k = fixtures::t1();
    const auto f = frames(k);
    CHECK(first_derivative(k, f, distribution_from_mask(0, 3), 0).is_zero());
    CHECK(first_derivative(k, f, distribution_from_mask(7, 3), 0).is_zero());
    REQUIRE(k.point(2) == pt({1, 0}));
    CHECK(first_derivative(k, f, distribution_from_mask(0b100, 3), 0) == vec({1, 0}));
}

TEST_CASE("omega examples and closedness") {
    const auto edge = WedgeVector::from_vector(vec({1, 0}));
    CHECK(pluecker({difference_mod2(pt({0, 0}), pt({1, 2}))}, 2) == edge);
    const auto t = fixtures::t1();
    CHECK(omega(t, Simplex{{0, 1, 2}}).coefficient(0b11));
    CHECK(omega(t, Simplex{{0}}).coefficient(0));
    CHECK_THROWS_AS(omega(t, Simplex{{0, 5}}), Error);
    const auto iv = itenberg_viro(2, 4);
    for (int p = 1; p < iv.dim(); ++p) {
        for (std::uint32_t i = 0; i < iv.count(p + 1); ++i) {
            WedgeVector acc(iv.dim(), p);
            for (auto fi : iv.facets(p + 1, i)) acc ^= omega(iv, iv.simplex(p, fi));
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("frame invariants on all families") {
    std::mt19937_64 rng(7);
    for (const auto& [name, k] : sample_complexes()) {
        CAPTURE(name);
        const auto f = frames(k);
        const int n = k.dim();
        for (std::uint32_t m = 0; m < k.count(n); ++m) {
            const auto& s = k.simplex(n, m);
            F2Vector sum(static_cast<std::size_t>(n));
            for (std::size_t a = 0; a < s.verts.size(); ++a) {
                sum ^= f.e[m][a];
                for (std::size_t b = 0; b < s.verts.size(); ++b) {
                    if (b == a) continue;
                    const auto& alpha = k.point(s.verts[a]);
                    CHECK(pairing(difference_mod2(alpha, k.point(s.verts[b])), f.e[m][b]));
                    for (std::size_t c = 0; c < s.verts.size(); ++c) {
                        if (c == a || c == b) continue;
                        CHECK_FALSE(pairing(difference_mod2(alpha, k.point(s.verts[c])), f.e[m][b]));
                    }
                }
            }
            CHECK(sum.is_zero());
        }
        for (const auto& w : f.walls) {
            const auto& s = k.simplex(n - 1, w.wall);
            auto cong = difference_mod2(k.point(w.apex_minus), k.point(w.apex_plus));
            int parity = 0;
            for (std::size_t i = 0; i < s.verts.size(); ++i) {
                if (!w.rho[i]) continue;
                ++parity;
                cong ^= difference_mod2(LatticePoint{std::vector<Coord>(static_cast<std::size_t>(n), 0)}, k.point(s.verts[i]));
            }
            CHECK(cong.is_zero());
            CHECK(parity % 2 == 0);
            CHECK(f.e_at(k, w.minus, w.apex_minus) == w.normal);
            for (auto a : s.verts) CHECK_FALSE(pairing(difference_mod2(k.point(s.verts[0]), k.point(a)), w.normal));
        }
        for (int trial = 0; trial < 200; ++trial) {
            const auto eps = random_eps(k.count(0), rng);
            for (std::uint32_t m = 0; m < k.count(n); ++m) {
                const auto de = first_derivative(k, f, eps, m);
                const auto& s = k.simplex(n, m);
                for (auto a : s.verts) {
                    for (auto b : s.verts) {
                        CHECK((eps[b] ^ eps[a] ^ pairing(difference_mod2(k.point(a), k.point(b)), de)) == false);
                    }
                }
            }
            for (const auto& w : f.walls) {
                const bool taylor = eps[w.apex_plus] ^ eps[w.apex_minus] ^
                                    pairing(difference_mod2(k.point(w.apex_minus), k.point(w.apex_plus)),
                                            first_derivative(k, f, eps, w.plus));
                CHECK(taylor == second_derivative(k, f, eps, w.wall));
                auto diff = first_derivative(k, f, eps, w.plus) ^ first_derivative(k, f, eps, w.minus);
                if (second_derivative(k, f, eps, w.wall)) diff ^= w.normal;
                CHECK(diff.is_zero());
            }
        }
    }
}

TEST_CASE("global second derivative kernel is the affine functions") {
    for (const auto& [name, k] : sample_complexes()) {
        CAPTURE(name);
        const auto f = frames(k);
        const auto d2 = second_derivative_operator(k, f);
        CHECK(k.count(0) - rank(d2) == static_cast<std::size_t>(k.dim()) + 1);
        for (int i = 0; i <= k.dim(); ++i) {
            SignDistribution affine;
            F2Vector x(k.count(0));
            for (std::uint32_t v = 0; v < k.count(0); ++v) {
                const bool bit = i == k.dim() ? true : (k.point(v)[static_cast<std::size_t>(i)] & 1);
                affine.bits.push_back(bit);
                x.set(v, bit);
            }
            CHECK((d2 * x).is_zero());
            for (const auto& w : f.walls) CHECK_FALSE(second_derivative(k, f, affine, w.wall));
        }
    }
}

TEST_CASE("uniformity, rho chain and simple integrability") {
    for (const auto& [name, k] : sample_complexes()) {
        CAPTURE(name);
        const auto f = frames(k);
        const auto u = rho_uniformity(k, f);
        if (k.dim() <= 2) CHECK(u.uniform);
        if (!u.uniform) {
            CHECK_THROWS_AS(rho_chain(k, f), Error);
            CHECK_FALSE(solve_simple_harnack(k, f).has_value());
            continue;
        }
        const auto chain = rho_chain(k, f);
        CHECK(chain.is_cycle);
        for (std::uint32_t i = 0; i < k.count(k.dim() - 1); ++i) {
            if (k.in_b0(SimplexId{k.dim() - 1, i})) CHECK(chain.values[i] == 0);
        }
    }
    for (Coord d = 1; d <= 5; ++d) {
        CAPTURE(d);
        const auto k = itenberg_viro(3, d);
        const auto f = frames(k);
        CHECK(rho_uniformity(k, f).uniform);
    }
}

TEST_CASE("Harnack distribution solves the simple Harnack system on IV") {
    for (int n = 2; n <= 3; ++n) {
        for (Coord d = 1; d <= 5; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            const auto k = itenberg_viro(n, d);
            const auto f = frames(k);
            const auto sys = simple_harnack_system(k, f);
            const auto h = harnack_distribution(k);
            F2Vector x(k.count(0));
            for (std::uint32_t v = 0; v < k.count(0); ++v) x.set(v, h[v]);
            CHECK(sys.matrix * x == sys.rhs);
            const auto sol = solve_simple_harnack(k, f);
            REQUIRE(sol.has_value());
            CHECK(sphere_indicators(k, f, *sol) == k.interior_vertices());
            CHECK(nullspace(sys.matrix).size() >= static_cast<std::size_t>(n) + 1);
        }
    }
    for (Coord d = 2; d <= 5; ++d) {
        const auto k = knudsen(2, d);
        const auto f = frames(k);
        const auto sol = solve_simple_harnack(k, f);
        REQUIRE(sol.has_value());
        const auto xy = named_distribution({DistributionKind::Quadratic, Quadratic{0, {}, {{0, 1}}}, 0, 0, 0}, k);
        const auto sys = simple_harnack_system(k, f);
        F2Vector x(k.count(0));
        for (std::uint32_t v = 0; v < k.count(0); ++v) x.set(v, xy[v]);
        CHECK(sys.matrix * x == sys.rhs);
        // adding an affine function keeps it a solution
        for (std::uint32_t v = 0; v < k.count(0); ++v) x.set(v, xy[v] ^ (k.point(v)[0] & 1) ^ 1);
        CHECK(sys.matrix * x == sys.rhs);
    }
}

TEST_CASE("intersection numbers: strange formula, line membership, case oracles") {
    std::mt19937_64 rng(11);
    for (const auto& [name, k] : sample_complexes()) {
        const int n = k.dim();
        if (n < 2) continue;
        CAPTURE(name);
        const auto f = frames(k);
        for (auto beta : k.interior_vertices()) {
            // strange formula
            for (std::uint32_t j = 0; j < k.count(n - 2); ++j) {
                const auto& s = k.simplex(n - 2, j);
                if (!s.contains_vertex(beta) || k.on_boundary(n - 2, j)) continue;
                WedgeVector lhs(n, 2), rhs(n, 2);
                for (auto wi : k.cofaces(n - 2, j)) {
                    const auto& w = *f.wall(wi);
                    const auto& ws = k.simplex(n - 1, wi);
                    std::uint32_t lk = 0;
                    for (auto v : ws.verts) {
                        if (!s.contains_vertex(v)) lk = v;
                    }
                    const auto e = WedgeVector::from_vector(f.e_at(k, w.plus, beta));
                    const auto nn = WedgeVector::from_vector(w.normal);
                    if (w.rho_at(ws, beta)) lhs ^= wedge(e, nn);
                    if (w.rho_at(ws, lk)) rhs ^= wedge(e, nn);
                }
                CHECK(lhs == rhs);
                const auto chi = distribution_from_mask(0, k.count(0));
                auto chi_beta = chi;
                chi_beta.bits[beta] = 1;
                CHECK_FALSE(intersection_number(k, f, chi_beta, beta, j));
            }
        }
        for (int trial = 0; trial < 20; ++trial) {
            const auto eps = random_eps(k.count(0), rng);
            const auto m0 = matrix_M0(k, f, eps);
            for (std::size_t r = 0; r < m0.rows.size(); ++r) {
                const auto beta = m0.rows[r];
                for (std::size_t c = 0; c < m0.cols.size(); ++c) {
                    const auto sigma = m0.cols[c];
                    const auto& s = k.simplex(n - 2, sigma);
                    const bool value = intersection_number(k, f, eps, beta, sigma);
                    CHECK(m0.matrix.get(r, c) == value);
                    if (s.contains_vertex(beta)) {
                        const auto sum = contained_wedge_sum(k, f, eps, beta, sigma);
                        CHECK((sum.is_zero() || sum == normal_generator(k, s)));
                        continue;
                    }
                    Simplex joined = s;
                    joined.verts.push_back(beta);
                    std::sort(joined.verts.begin(), joined.verts.end());
                    if (const auto w = k.find(joined)) {
                        CHECK(value == twist_oracle(k, *f.wall(*w), eps, beta));
                    } else {
                        CHECK_FALSE(value);
                    }
                }
            }
            if (n == 2) {
                CHECK(m0.rows == m0.cols);
                CHECK(m0.matrix == m0.matrix.transpose());
            }
        }
    }
}

TEST_CASE("intersection number preconditions") {
    const auto k = knudsen(2, 4);
    const auto f = frames(k);
    const auto eps = harnack_distribution(k);
    const auto boundary = *k.find(Simplex{{0}});
    CHECK_THROWS_AS(intersection_number(k, f, eps, boundary, k.interior_vertices()[0]), Error);
    CHECK_THROWS_AS(intersection_number(k, f, eps, k.interior_vertices()[0], boundary), Error);
    CHECK_THROWS_AS(intersection_number(segment(3), frames(segment(3)), eps, 1, 0), Error);
}

TEST_CASE("M0 examples") {
    const auto k = knudsen(2, 3);
    const auto f = frames(k);
    const auto q = named_distribution({DistributionKind::Quadratic, Quadratic::standard(2), 0, 0, 0}, k);
    CHECK(matrix_M0(k, f, q).matrix.is_zero());
    CHECK(laplacian_nullity(k, f, q) == k.interior_vertices().size());
    const auto small = knudsen(2, 2);
    CHECK(laplacian(small, frames(small), harnack_distribution(small)).rows() == 0);
    CHECK(laplacian_nullity(small, frames(small), harnack_distribution(small)) == 0);
    const auto k3 = knudsen(3, 3);
    CHECK_THROWS_AS(laplacian(k3, frames(k3), harnack_distribution(k3)), Error);
}

TEST_CASE("Haas check on quadratic distributions in dimension 2") {
    for (Coord d = 2; d <= 5; ++d) {
        for (const auto& k : {knudsen(2, d), itenberg_viro(2, d)}) {
            const auto f = frames(k);
            for (const auto& q : {Quadratic::standard(2), Quadratic{1, {0, 1}, {{0, 1}}}, Quadratic{0, {}, {{0, 1}}}}) {
                const auto eps = named_distribution({DistributionKind::Quadratic, q, 0, 0, 0}, k);
                const auto r = haas_check(k, f, eps);
                CHECK(r.cond1_rho_uniform);
                CHECK(r.cond3_d2_eq_rho);
                CHECK(r.cond4_b1_pairing);
                CHECK(r.predicted_maximal == Prediction::Yes);
            }
        }
    }
}

TEST_CASE("Haas prediction is equivalent to vanishing M0") {
    std::mt19937_64 rng(3);
    for (const auto& k : {knudsen(2, 4), itenberg_viro(2, 5), knudsen(3, 4), itenberg_viro(3, 3)}) {
        const auto f = frames(k);
        for (int trial = 0; trial < 200; ++trial) {
            auto eps = random_eps(k.count(0), rng);
            if (trial % 4 == 0) eps = *solve_simple_harnack(k, f);
            const auto r = haas_check(k, f, eps);
            const bool base = r.cond1_rho_uniform && r.cond3_d2_eq_rho && r.cond4_b1_pairing;
            CHECK(base == matrix_M0(k, f, eps).matrix.is_zero());
            if (k.dim() == 3) CHECK(r.predicted_maximal == (base ? Prediction::NeedsCond2 : Prediction::No));
            if (k.dim() == 3) {
                CHECK(haas_check(k, f, eps, [] { return true; }).predicted_maximal == (base ? Prediction::Yes : Prediction::No));
                CHECK(haas_check(k, f, eps, [] { return false; }).predicted_maximal == Prediction::No);
            }
        }
    }
}

TEST_CASE("non-uniform Knudsen triangulation") {
    const auto k = knudsen(3, 5);
    const auto f = frames(k);
    const auto u = rho_uniformity(k, f);
    CHECK_FALSE(u.uniform);
    REQUIRE(!u.failing.empty());
    for (Coord d = 2; d <= 4; ++d) CHECK(rho_uniformity(knudsen(3, d), frames(knudsen(3, d))).uniform);
    const auto r = haas_check(k, f, harnack_distribution(k));
    CHECK_FALSE(r.cond1_rho_uniform);
    CHECK(r.predicted_maximal == Prediction::No);

    // exhaustive independent-set oracle for kappa
    const auto m = u.failing.size();
    REQUIRE(m <= 24);
    std::vector<std::uint32_t> conflict(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && simplex_distance(k, k.simplex(2, u.failing[i]), k.simplex(2, u.failing[j])) <= 1) conflict[i] |= 1u << j;
        }
    }
    std::size_t best = 0;
    for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if ((subset >> i & 1u) && (conflict[i] & subset)) ok = false;
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(subset)));
    }
    const auto kp = kappa(k, f);
    CHECK(kp.exact);
    CHECK(kp.value == best);
    CHECK(kp.value >= 1);
}

TEST_CASE("kappa trivial cases and independent sets") {
    const auto k = knudsen(3, 4);
    CHECK(kappa(k, frames(k)).value == 0);
    CHECK(max_independent_set({}) == 0);
    CHECK(max_independent_set({0}) == 1);
    // 5-cycle
    std::vector<std::uint64_t> c5(5);
    for (int i = 0; i < 5; ++i) c5[static_cast<std::size_t>(i)] = (1u << ((i + 1) % 5)) | (1u << ((i + 4) % 5));
    CHECK(max_independent_set(c5) == 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng() % 12;
        std::vector<std::uint64_t> adj(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (rng() % 3 == 0) {
                    adj[i] |= std::uint64_t{1} << j;
                    adj[j] |= std::uint64_t{1} << i;
                }
            }
        }
        std::size_t best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i) {
                if ((s >> i & 1u) && (adj[i] & s)) ok = false;
            }
            if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
        }
        CHECK(max_independent_set(adj) == best);
    }
}

TEST_CASE("named distributions") {
    const auto k2 = knudsen(2, 2);
    const auto h2 = harnack_distribution(k2);
    for (std::uint32_t v = 0; v < k2.count(0); ++v) {
        if (k2.point(v) == pt({1, 1})) CHECK(h2[v]);
    }
    const auto k3 = knudsen(3, 2);
    const auto h3 = harnack_distribution(k3);
    for (std::uint32_t v = 0; v < k3.count(0); ++v) {
        if (k3.point(v) == pt({1, 1, 0})) CHECK(h3[v]);
    }
    CHECK(Quadratic{0, {}, {{0, 1}, {0, 2}, {1, 2}}}.evaluate(pt({1, 1, 1})));
    CHECK(named_distribution({DistributionKind::Constant, {}, 1, 0, 0}, k2).bits == std::vector<std::uint8_t>(6, 1));
    CHECK(random_distribution(k3, 42, 3) == random_distribution(k3, 42, 3));
    CHECK_FALSE(random_distribution(knudsen(3, 4), 42, 3) == random_distribution(knudsen(3, 4), 42, 4));
    CHECK(distribution_from_mask(0b101, 3).bits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK_THROWS_AS(Quadratic({0, {}, {{0, 5}}}).evaluate(pt({1, 1})), Error);
}
