#include "patchwork/calculus.hpp"

#include <algorithm>
#include <bit>

#include "patchwork/error.hpp"
#include "patchwork/rng.hpp"

namespace patchwork {

namespace {

std::size_t position_in(const Simplex& s, std::uint32_t v) {
    const auto it = std::lower_bound(s.verts.begin(), s.verts.end(), v);
    if (it == s.verts.end() || *it != v) throw Error(ErrorKind::NotAVertexOf, "vertex " + std::to_string(v) + " not in simplex");
    return static_cast<std::size_t>(it - s.verts.begin());
}

std::uint32_t opposite_vertex(const Simplex& big, const Simplex& face) {
    for (auto v : big.verts) {
        if (!face.contains_vertex(v)) return v;
    }
    throw Error(ErrorKind::InvalidInput, "face is not a proper face");
}

const WallFrame& interior_wall(const SimplexFrame& f, std::uint32_t wall) {
    const auto* w = f.wall(wall);
    if (!w) throw Error(ErrorKind::BoundarySimplex, "wall " + std::to_string(wall) + " lies on the boundary");
    return *w;
}

bool d2_bit(const PrimitiveComplex& k, const WallFrame& w, const SignDistribution& eps) {
    const auto& s = k.simplex(k.dim() - 1, w.wall);
    bool acc = eps[w.apex_plus] ^ eps[w.apex_minus];
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (w.rho[i] && eps[s.verts[i]]) acc = !acc;
    }
    return acc;
}

void require_interior_vertex(const PrimitiveComplex& k, std::uint32_t beta) {
    if (beta >= k.count(0)) throw Error(ErrorKind::IndexOutOfRange, "vertex index");
    if (!k.interior_vertex(beta)) throw Error(ErrorKind::BoundarySimplex, "vertex " + std::to_string(beta) + " is on the boundary");
}

}  // namespace

bool WallFrame::rho_at(const Simplex& wall_simplex, std::uint32_t vertex) const { return rho[position_in(wall_simplex, vertex)]; }

const WallFrame* SimplexFrame::wall(std::uint32_t index) const {
    if (index >= wall_of.size() || wall_of[index] < 0) return nullptr;
    return &walls[static_cast<std::size_t>(wall_of[index])];
}

const F2Vector& SimplexFrame::e_at(const PrimitiveComplex& k, std::uint32_t maximal, std::uint32_t vertex) const {
    return e[maximal][position_in(k.simplex(k.dim(), maximal), vertex)];
}

F2Vector difference_mod2(const LatticePoint& a, const LatticePoint& b) {
    F2Vector v(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if ((b[i] - a[i]) & 1) v.set(i);
    }
    return v;
}

std::vector<F2Vector> dual_vectors(const std::vector<LatticePoint>& vertices) {
    const std::size_t n = vertices.size() - 1;
    std::vector<F2Vector> edges;
    for (std::size_t i = 1; i <= n; ++i) edges.push_back(difference_mod2(vertices[0], vertices[i]));
    const auto m = F2Matrix::from_rows(edges, n);
    std::vector<F2Vector> e(n + 1, F2Vector(n));
    for (std::size_t i = 1; i <= n; ++i) {
        F2Vector unit(n);
        unit.set(i - 1);
        auto sol = solve(m, unit);
        if (!sol || !sol->nullspace.empty()) throw Error(ErrorKind::NonPrimitiveSimplex, "edge matrix is singular mod 2");
        e[i] = sol->particular;
        e[0] ^= e[i];
    }
    return e;
}

WedgeVector omega(const PrimitiveComplex& k, const Simplex& sigma) {
    k.id_of(sigma);
    const int n = k.dim();
    if (sigma.dim() == 0) {
        WedgeVector one(n, 0);
        one.set_coefficient(0);
        return one;
    }
    std::vector<F2Vector> edges;
    for (std::size_t i = 1; i < sigma.verts.size(); ++i) {
        edges.push_back(difference_mod2(k.point(sigma.verts[0]), k.point(sigma.verts[i])));
    }
    return pluecker(edges, n);
}

SimplexFrame frames(const PrimitiveComplex& k) {
    const int n = k.dim();
    SimplexFrame f;
    f.n = n;
    for (const auto& s : k.maximal_simplices()) {
        std::vector<LatticePoint> pts;
        for (auto v : s.verts) pts.push_back(k.point(v));
        f.e.push_back(dual_vectors(pts));
    }
    f.wall_of.assign(k.count(n - 1), -1);
    for (std::uint32_t i = 0; i < k.count(n - 1); ++i) {
        const auto& cof = k.cofaces(n - 1, i);
        if (cof.size() != 2) continue;
        const auto& s = k.simplex(n - 1, i);
        WallFrame w;
        w.wall = i;
        w.plus = std::min(cof[0], cof[1]);
        w.minus = std::max(cof[0], cof[1]);
        w.apex_plus = opposite_vertex(k.simplex(n, w.plus), s);
        w.apex_minus = opposite_vertex(k.simplex(n, w.minus), s);
        w.normal = f.e_at(k, w.plus, w.apex_plus);
        for (auto alpha : s.verts) {
            const auto r = f.e_at(k, w.plus, alpha) ^ f.e_at(k, w.minus, alpha);
            if (r.is_zero()) {
                w.rho.push_back(0);
            } else if (r == w.normal) {
                w.rho.push_back(1);
            } else {
                throw Error(ErrorKind::NotInLine, "rho does not lie on the normal line of wall " + std::to_string(i));
            }
        }
        for (std::size_t j = 0; j < s.verts.size(); ++j) {
            const auto alpha = s.verts[j];
            if (!k.interior_vertex(alpha) || n < 2) continue;
            const auto opposite = k.facets(n - 1, i)[j];
            if (!k.on_boundary(n - 2, opposite)) w.interior_set.push_back(alpha);
        }
        f.wall_of[i] = static_cast<std::int32_t>(f.walls.size());
        f.walls.push_back(std::move(w));
    }
    return f;
}

F2Vector first_derivative(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t maximal) {
    if (maximal >= k.count(k.dim())) throw Error(ErrorKind::UnknownSimplex, "maximal simplex index");
    const auto& s = k.simplex(k.dim(), maximal);
    F2Vector d(static_cast<std::size_t>(k.dim()));
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (eps[s.verts[i]]) d ^= f.e[maximal][i];
    }
    return d;
}

bool second_derivative(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t wall) {
    return d2_bit(k, interior_wall(f, wall), eps);
}

F2Matrix second_derivative_operator(const PrimitiveComplex& k, const SimplexFrame& f) {
    F2Matrix m(f.walls.size(), k.count(0));
    for (std::size_t r = 0; r < f.walls.size(); ++r) {
        const auto& w = f.walls[r];
        const auto& s = k.simplex(k.dim() - 1, w.wall);
        m.row(r).flip(w.apex_plus);
        m.row(r).flip(w.apex_minus);
        for (std::size_t i = 0; i < s.verts.size(); ++i) {
            if (w.rho[i]) m.row(r).flip(s.verts[i]);
        }
    }
    return m;
}

Uniformity rho_uniformity(const PrimitiveComplex& k, const SimplexFrame& f) {
    Uniformity u;
    for (const auto& w : f.walls) {
        const auto& s = k.simplex(k.dim() - 1, w.wall);
        bool seen0 = false, seen1 = false;
        for (auto alpha : w.interior_set) {
            if (w.rho_at(s, alpha)) {
                seen1 = true;
            } else {
                seen0 = true;
            }
        }
        if (seen0 && seen1) u.failing.push_back(w.wall);
    }
    u.uniform = u.failing.empty();
    return u;
}

RhoChain rho_chain(const PrimitiveComplex& k, const SimplexFrame& f) {
    if (!rho_uniformity(k, f).uniform) throw Error(ErrorKind::NotRhoUniform, "rho is not constant on some I(wall)");
    const int n = k.dim();
    RhoChain chain;
    chain.values.assign(k.count(n - 1), 0);
    for (const auto& w : f.walls) {
        const SimplexId id{n - 1, w.wall};
        if (k.in_b0(id)) continue;
        const auto& s = k.simplex(id);
        if (!k.in_b1(id)) {
            if (w.interior_set.empty()) throw Error(ErrorKind::InvalidInput, "wall outside B1K with empty I");
            chain.values[w.wall] = w.rho_at(s, w.interior_set.front());
        } else {
            chain.values[w.wall] = w.rho_at(s, *k.apex(id));
        }
    }
    chain.is_cycle = true;
    if (n >= 2) {
        for (std::uint32_t j = 0; j < k.count(n - 2); ++j) {
            if (k.in_b0(SimplexId{n - 2, j})) continue;
            F2Vector acc(static_cast<std::size_t>(n));
            for (auto w : k.cofaces(n - 2, j)) {
                if (chain.values[w]) acc ^= f.wall(w)->normal;
            }
            if (!acc.is_zero()) chain.is_cycle = false;
        }
    }
    return chain;
}

bool twist(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t wall, std::uint32_t beta) {
    const auto& w = interior_wall(f, wall);
    const auto& s = k.simplex(k.dim() - 1, wall);
    return d2_bit(k, w, eps) ^ static_cast<bool>(w.rho_at(s, beta));
}

WedgeVector normal_generator(const PrimitiveComplex& k, const Simplex& sigma) {
    const auto n = static_cast<std::size_t>(k.dim());
    std::vector<F2Vector> edges;
    for (std::size_t i = 1; i < sigma.verts.size(); ++i) {
        edges.push_back(difference_mod2(k.point(sigma.verts[0]), k.point(sigma.verts[i])));
    }
    return line_generator(nullspace(F2Matrix::from_rows(edges, n)), k.dim());
}

WedgeVector contained_wedge_sum(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t beta,
                                std::uint32_t sigma) {
    const int n = k.dim();
    WedgeVector acc(n, 2);
    for (auto wi : k.cofaces(n - 2, sigma)) {
        const auto& w = interior_wall(f, wi);
        if (!(d2_bit(k, w, eps) ^ static_cast<bool>(w.rho_at(k.simplex(n - 1, wi), beta)))) continue;
        acc ^= wedge(WedgeVector::from_vector(f.e_at(k, w.plus, beta)), WedgeVector::from_vector(w.normal));
    }
    return acc;
}

bool intersection_number(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, std::uint32_t beta,
                         std::uint32_t sigma) {
    const int n = k.dim();
    if (n < 2) throw Error(ErrorKind::WrongDimension, "intersection numbers need n >= 2");
    require_interior_vertex(k, beta);
    if (sigma >= k.count(n - 2)) throw Error(ErrorKind::UnknownSimplex, "(n-2)-simplex index");
    if (k.on_boundary(n - 2, sigma)) throw Error(ErrorKind::BoundarySimplex, "(n-2)-simplex lies on the boundary");
    const auto& s = k.simplex(n - 2, sigma);
    if (s.contains_vertex(beta)) {
        const auto sum = contained_wedge_sum(k, f, eps, beta, sigma);
        if (sum.is_zero()) return false;
        if (sum == normal_generator(k, s)) return true;
        throw Error(ErrorKind::NotInLine, "wedge sum is neither zero nor the normal generator");
    }
    Simplex joined = s;
    joined.verts.insert(std::lower_bound(joined.verts.begin(), joined.verts.end(), beta), beta);
    if (const auto w = k.find(joined)) return twist(k, f, eps, *w, beta);
    return false;
}

M0Matrix matrix_M0(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps) {
    const int n = k.dim();
    if (n < 2) throw Error(ErrorKind::WrongDimension, "M0 needs n >= 2");
    M0Matrix out;
    out.rows = k.interior_vertices();
    for (std::uint32_t j = 0; j < k.count(n - 2); ++j) {
        if (!k.on_boundary(n - 2, j)) out.cols.push_back(j);
    }
    std::vector<std::int32_t> row_of(k.count(0), -1);
    for (std::size_t r = 0; r < out.rows.size(); ++r) row_of[out.rows[r]] = static_cast<std::int32_t>(r);
    out.matrix = F2Matrix(out.rows.size(), out.cols.size());
    for (std::size_t c = 0; c < out.cols.size(); ++c) {
        const auto sigma = out.cols[c];
        const auto& s = k.simplex(n - 2, sigma);
        // only vertices of the closed star of sigma can pair nontrivially
        std::vector<std::uint32_t> candidates(s.verts.begin(), s.verts.end());
        for (auto wi : k.cofaces(n - 2, sigma)) candidates.push_back(opposite_vertex(k.simplex(n - 1, wi), s));
        for (auto beta : candidates) {
            if (row_of[beta] < 0) continue;
            if (intersection_number(k, f, eps, beta, sigma)) out.matrix.set(static_cast<std::size_t>(row_of[beta]), c);
        }
    }
    return out;
}

std::size_t max_independent_set(const std::vector<std::uint64_t>& adjacency) {
    const std::size_t m = adjacency.size();
    if (m > 64) throw Error(ErrorKind::InvalidInput, "at most 64 vertices");
    std::size_t best = 0;
    std::function<void(std::uint64_t, std::size_t)> rec = [&](std::uint64_t cand, std::size_t size) {
        if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
        if (cand == 0) {
            best = size;
            return;
        }
        const auto v = static_cast<std::size_t>(std::countr_zero(cand));
        const std::uint64_t bit = std::uint64_t{1} << v;
        rec(cand & ~adjacency[v] & ~bit, size + 1);
        rec(cand & ~bit, size);
    };
    rec(m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1), 0);
    return best;
}

KappaResult kappa(const PrimitiveComplex& k, const SimplexFrame& f) {
    const auto failing = rho_uniformity(k, f).failing;
    const std::size_t m = failing.size();
    if (m == 0) return {0, true};
    const int n = k.dim();
    // conflict graph: distance at most one
    std::vector<std::vector<std::uint8_t>> conflict(m, std::vector<std::uint8_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto dist = vertex_distances(k, k.simplex(n - 1, failing[i]).verts, 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (auto v : k.simplex(n - 1, failing[j]).verts) {
                if (dist[v] >= 0 && dist[v] <= 1) conflict[i][j] = 1;
            }
        }
    }
    if (m <= 40) {
        std::vector<std::uint64_t> adj(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (conflict[i][j]) adj[i] |= std::uint64_t{1} << j;
            }
        }
        return {max_independent_set(adj), true};
    }
    // greedy minimum-degree lower bound
    std::vector<char> alive(m, 1);
    std::size_t chosen = 0;
    while (true) {
        std::size_t pick = m, best_deg = m + 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (!alive[i]) continue;
            std::size_t deg = 0;
            for (std::size_t j = 0; j < m; ++j) deg += alive[j] && conflict[i][j];
            if (deg < best_deg) {
                best_deg = deg;
                pick = i;
            }
        }
        if (pick == m) break;
        ++chosen;
        alive[pick] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (conflict[pick][j]) alive[j] = 0;
        }
    }
    return {chosen, false};
}

const char* prediction_name(Prediction p) {
    switch (p) {
        case Prediction::Yes: return "yes";
        case Prediction::No: return "no";
        case Prediction::NeedsCond2: return "needs-cond2";
    }
    return "?";
}

HaasReport haas_check(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, const std::function<bool()>& cond2) {
    const int n = k.dim();
    HaasReport r;
    auto u = rho_uniformity(k, f);
    r.cond1_rho_uniform = u.uniform;
    r.cond1_failing = std::move(u.failing);

    if (r.cond1_rho_uniform) {
        const auto chain = rho_chain(k, f);
        for (const auto& w : f.walls) {
            if (k.in_b1(SimplexId{n - 1, w.wall})) continue;
            if (d2_bit(k, w, eps) != static_cast<bool>(chain.values[w.wall])) r.cond3_violations.push_back(w.wall);
        }
        r.cond3_d2_eq_rho = r.cond3_violations.empty();
    }

    if (n >= 2) {
        for (std::uint32_t j = 0; j < k.count(n - 2); ++j) {
            const SimplexId id{n - 2, j};
            if (!k.in_b1(id) || k.in_b0(id)) continue;
            if (intersection_number(k, f, eps, *k.apex(id), j)) r.cond4_violations.push_back(j);
        }
    }
    r.cond4_b1_pairing = r.cond4_violations.empty();

    if (n == 3 && cond2) r.cond2_ell = cond2();

    const bool base = r.cond1_rho_uniform && r.cond3_d2_eq_rho && r.cond4_b1_pairing;
    if (!base || (r.cond2_ell && !*r.cond2_ell)) {
        r.predicted_maximal = Prediction::No;
    } else if (n <= 2 || (r.cond2_ell && *r.cond2_ell)) {
        r.predicted_maximal = Prediction::Yes;
    } else {
        r.predicted_maximal = Prediction::NeedsCond2;
    }
    return r;
}

LinearSystem simple_harnack_system(const PrimitiveComplex& k, const SimplexFrame& f) {
    const int n = k.dim();
    const auto chain = rho_chain(k, f);
    LinearSystem sys;
    std::vector<F2Vector> rows;
    std::vector<int> rhs;
    const auto d2 = second_derivative_operator(k, f);
    for (std::size_t r = 0; r < f.walls.size(); ++r) {
        const auto wi = f.walls[r].wall;
        if (k.in_b0(SimplexId{n - 1, wi})) continue;
        rows.push_back(d2.row(r));
        rhs.push_back(chain.values[wi]);
        sys.rows.push_back(wi);
    }
    sys.matrix = F2Matrix::from_rows(rows, k.count(0));
    sys.rhs = F2Vector::from_bits(rhs);
    return sys;
}

std::optional<SignDistribution> solve_simple_harnack(const PrimitiveComplex& k, const SimplexFrame& f) {
    if (!rho_uniformity(k, f).uniform) return std::nullopt;
    const auto sys = simple_harnack_system(k, f);
    auto sol = solve(sys.matrix, sys.rhs);
    if (!sol) return std::nullopt;
    SignDistribution eps;
    for (std::size_t v = 0; v < k.count(0); ++v) eps.bits.push_back(sol->particular.get(v));
    return eps;
}

F2Matrix laplacian(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps) {
    if (k.dim() != 2) throw Error(ErrorKind::WrongDimension, "the Laplacian is defined for n = 2");
    return matrix_M0(k, f, eps).matrix;
}

std::size_t laplacian_nullity(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps) {
    const auto m = laplacian(k, f, eps);
    return m.cols() - rank(m);
}

std::vector<std::uint32_t> sphere_indicators(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps) {
    std::vector<char> failed(k.count(0), 0);
    for (const auto& w : f.walls) {
        const bool d2 = d2_bit(k, w, eps);
        const auto& s = k.simplex(k.dim() - 1, w.wall);
        for (std::size_t i = 0; i < s.verts.size(); ++i) {
            if (d2 != static_cast<bool>(w.rho[i])) failed[s.verts[i]] = 1;
        }
    }
    std::vector<std::uint32_t> out;
    for (auto v : k.interior_vertices()) {
        if (!failed[v]) out.push_back(v);
    }
    return out;
}

Quadratic Quadratic::standard(int n) {
    Quadratic q;
    q.linear.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) q.products.emplace_back(i, j);
    }
    return q;
}

bool Quadratic::evaluate(const LatticePoint& x) const {
    Coord acc = constant;
    for (std::size_t i = 0; i < linear.size() && i < x.dim(); ++i) acc += linear[i] * x[i];
    for (auto [i, j] : products) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= x.dim() || static_cast<std::size_t>(j) >= x.dim()) {
            throw Error(ErrorKind::IndexOutOfRange, "quadratic monomial index");
        }
        acc += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    }
    return acc & 1;
}

SignDistribution named_distribution(const NamedDistribution& recipe, const PrimitiveComplex& k) {
    SignDistribution eps;
    eps.bits.resize(k.count(0));
    const auto harnack = Quadratic{0, {}, Quadratic::standard(k.dim()).products};
    for (std::uint32_t v = 0; v < k.count(0); ++v) {
        switch (recipe.kind) {
            case DistributionKind::Harnack: eps.bits[v] = harnack.evaluate(k.point(v)); break;
            case DistributionKind::Quadratic: eps.bits[v] = recipe.quadratic.evaluate(k.point(v)); break;
            case DistributionKind::Constant: eps.bits[v] = recipe.constant & 1; break;
            case DistributionKind::Random: eps.bits[v] = stream_bit(recipe.seed, recipe.trial, v); break;
        }
    }
    return eps;
}

SignDistribution harnack_distribution(const PrimitiveComplex& k) {
    return named_distribution(NamedDistribution{DistributionKind::Harnack, {}, 0, 0, 0}, k);
}

SignDistribution random_distribution(const PrimitiveComplex& k, std::uint64_t seed, std::uint64_t trial) {
    return named_distribution(NamedDistribution{DistributionKind::Random, {}, 0, seed, trial}, k);
}

SignDistribution distribution_from_mask(std::uint64_t mask, std::size_t vertices) {
    SignDistribution eps;
    for (std::size_t v = 0; v < vertices; ++v) eps.bits.push_back((mask >> v) & 1u);
    return eps;
}

}  // namespace patchwork
