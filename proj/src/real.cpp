#include "patchwork/real.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

std::uint64_t point_parity(const LatticePoint& p) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] & 1) m |= std::uint64_t{1} << i;
    }
    return m;
}

std::uint64_t simplex_facets(const PrimitiveComplex& k, const Simplex& s) {
    std::uint64_t mask = ~std::uint64_t{0};
    for (auto v : s.verts) mask &= k.polytope().tight_facets(k.point(v));
    return mask;
}

SedBasis sed_from_facets(const LatticePolytope& p, std::uint64_t facets) {
    SedBasis b;
    b.facets = facets;
    std::vector<F2Vector> rows;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        if (!(facets >> f & 1u)) continue;
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < p.facets[f].normal.size(); ++i) {
            if (p.facets[f].normal[i] & 1) m |= std::uint64_t{1} << i;
        }
        // reduce against the current basis, keeping it in reduced echelon form
        for (std::size_t j = 0; j < b.vectors.size(); ++j) {
            if (m >> b.pivots[j] & 1u) m ^= b.vectors[j];
        }
        if (m == 0) continue;
        const int pivot = std::countr_zero(m);
        for (auto& v : b.vectors) {
            if (v >> pivot & 1u) v ^= m;
        }
        b.vectors.push_back(m);
        b.pivots.push_back(pivot);
    }
    if (b.vectors.size() != static_cast<std::size_t>(std::popcount(facets))) {
        throw Error(ErrorKind::SedDimensionMismatch, "facet normals of a face are dependent mod 2");
    }
    return b;
}

struct SedInfo {
    SedBasis basis;
    std::vector<int> free;

    std::uint32_t compress(std::uint64_t v) const {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (v >> free[i] & 1u) out |= 1u << i;
        }
        return out;
    }
    std::uint64_t expand(std::uint32_t t) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (t >> i & 1u) out |= std::uint64_t{1} << free[i];
        }
        return out;
    }
};

std::uint32_t remove_bit(std::uint32_t m, int w) { return (m & ((1u << w) - 1u)) | ((m >> (w + 1)) << w); }

struct ReduceResult {
    std::size_t rank = 0;
    std::vector<std::int64_t> low;  ///< lowest (largest) row index of each reduced column, -1 if zero
    std::vector<std::vector<std::uint32_t>> v;  ///< reduction matrix columns, when tracked
};

void normalize(std::vector<std::uint32_t>& col) {
    std::sort(col.begin(), col.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < col.size();) {
        std::size_t j = i;
        while (j < col.size() && col[j] == col[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(col[i]);
        i = j;
    }
    col.swap(out);
}

void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a.swap(out);
}

// Left-to-right column reduction over F2.  Columns listed in `skip` are
// known to reduce to zero and are left out.
ReduceResult reduce(std::vector<std::vector<std::uint32_t>> cols, std::size_t rows, const std::vector<std::uint8_t>* skip,
                    bool track) {
    ReduceResult r;
    r.low.assign(cols.size(), -1);
    if (track) {
        r.v.resize(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) r.v[j] = {static_cast<std::uint32_t>(j)};
    }
    std::vector<std::int64_t> owner(rows, -1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (skip && (*skip)[j]) {
            cols[j].clear();
            continue;
        }
        auto& c = cols[j];
        normalize(c);
        while (!c.empty()) {
            const auto l = c.back();
            const auto o = owner[l];
            if (o < 0) break;
            xor_into(c, cols[static_cast<std::size_t>(o)]);
            if (track) xor_into(r.v[j], r.v[static_cast<std::size_t>(o)]);
        }
        if (!c.empty()) {
            owner[c.back()] = static_cast<std::int64_t>(j);
            r.low[j] = c.back();
            ++r.rank;
        }
    }
    return r;
}

// Betti numbers of the subcomplex given by per-dimension local indices.
std::vector<std::size_t> betti_of(const RealComplex& x, const std::vector<std::vector<std::int64_t>>& local,
                                  const std::vector<std::size_t>& sizes) {
    const int top = x.top_dim();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::uint8_t> cleared;
    for (int k = top; k >= 1; --k) {
        std::vector<std::vector<std::uint32_t>> cols(sizes[static_cast<std::size_t>(k)]);
        for (std::uint32_t i = 0; i < x.count(k); ++i) {
            const auto li = local[static_cast<std::size_t>(k)][i];
            if (li < 0) continue;
            auto& col = cols[static_cast<std::size_t>(li)];
            for (auto f : x.faces(k, i)) col.push_back(static_cast<std::uint32_t>(local[static_cast<std::size_t>(k) - 1][f]));
        }
        const auto r = reduce(std::move(cols), sizes[static_cast<std::size_t>(k) - 1], cleared.empty() ? nullptr : &cleared, false);
        rank[static_cast<std::size_t>(k)] = r.rank;
        // a face that is the pivot of a reduced boundary is itself a boundary's low, so its column vanishes
        cleared.assign(sizes[static_cast<std::size_t>(k) - 1], 0);
        for (auto l : r.low) {
            if (l >= 0) cleared[static_cast<std::size_t>(l)] = 1;
        }
    }
    std::vector<std::size_t> b(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        b[uk] = sizes[uk] - rank[uk] - rank[uk + 1];
    }
    return b;
}

}  // namespace

std::uint64_t SedBasis::reduce(std::uint64_t v) const {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (v >> pivots[j] & 1u) v ^= vectors[j];
    }
    return v;
}

SedBasis sedentarity(const PrimitiveComplex& k, SimplexId sigma) {
    if (sigma.dim < 0 || sigma.dim > k.dim() || sigma.index >= k.count(sigma.dim)) {
        throw Error(ErrorKind::UnknownSimplex, "simplex id out of range");
    }
    return sed_from_facets(k.polytope(), simplex_facets(k, k.simplex(sigma)));
}

std::size_t RealComplex::size() const {
    std::size_t s = 0;
    for (const auto& c : cells_) s += c.size();
    return s;
}

std::optional<std::uint32_t> RealComplex::find(const RealCell& c) const {
    const int k = c.dim();
    if (k < 0 || k > top_dim()) return std::nullopt;
    const auto& list = cells_[static_cast<std::size_t>(k)];
    for (std::uint32_t i = 0; i < list.size(); ++i) {
        if (list[i].cube == c.cube && list[i].arg == c.arg) return i;
    }
    return std::nullopt;
}

RealComplex build_RK(const PrimitiveComplex& k) {
    const int n = k.dim();
    if (n > 16) throw Error(ErrorKind::UnsupportedDimension, "real model supports n <= 16");
    std::map<std::uint64_t, SedInfo> cache;
    std::vector<std::vector<const SedInfo*>> sed(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        for (std::uint32_t i = 0; i < k.count(p); ++i) {
            const auto mask = simplex_facets(k, k.simplex(p, i));
            auto it = cache.find(mask);
            if (it == cache.end()) {
                SedInfo info{sed_from_facets(k.polytope(), mask), {}};
                for (int b = 0; b < n; ++b) {
                    if (std::find(info.basis.pivots.begin(), info.basis.pivots.end(), b) == info.basis.pivots.end()) info.free.push_back(b);
                }
                it = cache.emplace(mask, std::move(info)).first;
            }
            sed[static_cast<std::size_t>(p)].push_back(&it->second);
        }
    }

    // cubes: one per (upper simplex, nonempty subset of its vertex positions)
    std::vector<std::vector<std::size_t>> cube_base(static_cast<std::size_t>(n) + 1);
    std::size_t cubes = 0, total = 0;
    for (int q = 0; q <= n; ++q) {
        for (std::uint32_t j = 0; j < k.count(q); ++j) {
            cube_base[static_cast<std::size_t>(q)].push_back(cubes);
            const std::size_t sub = (std::size_t{1} << (q + 1)) - 1;
            cubes += sub;
            total += sub << sed[static_cast<std::size_t>(q)][j]->free.size();
            if (total > kMaxRealCells) throw Error(ErrorKind::CellCapExceeded, "real model exceeds the cell cap");
        }
    }
    std::vector<std::uint32_t> cell_base(cubes);

    RealComplex rk;
    rk.n_ = n;
    rk.cells_.resize(static_cast<std::size_t>(n) + 1);
    rk.faces_.resize(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) {
        for (std::uint32_t j = 0; j < k.count(q); ++j) {
            const auto& s = k.simplex(q, j);
            const auto& info = *sed[static_cast<std::size_t>(q)][j];
            for (std::uint32_t m = 1; m < (1u << (q + 1)); ++m) {
                Simplex lower;
                for (int w = 0; w <= q; ++w) {
                    if (m >> w & 1u) lower.verts.push_back(s.verts[static_cast<std::size_t>(w)]);
                }
                const Cube cube{SimplexId{lower.dim(), *k.find(lower)}, SimplexId{q, j}};
                auto& list = rk.cells_[static_cast<std::size_t>(cube.dim())];
                cell_base[cube_base[static_cast<std::size_t>(q)][j] + m - 1] = static_cast<std::uint32_t>(list.size());
                for (std::uint32_t t = 0; t < (1u << info.free.size()); ++t) list.push_back(RealCell{cube, info.expand(t)});
            }
        }
    }

    auto cell_index = [&](int q, std::uint32_t j, std::uint32_t m, std::uint64_t arg) {
        const auto& info = *sed[static_cast<std::size_t>(q)][j];
        return cell_base[cube_base[static_cast<std::size_t>(q)][j] + m - 1] + info.compress(info.basis.reduce(arg));
    };

    for (int r = 0; r <= n; ++r) rk.faces_[static_cast<std::size_t>(r)].resize(rk.cells_[static_cast<std::size_t>(r)].size());
    for (int q = 0; q <= n; ++q) {
        for (std::uint32_t j = 0; j < k.count(q); ++j) {
            const auto& facets = k.facets(q, j);
            for (std::uint32_t m = 1; m < (1u << (q + 1)); ++m) {
                const int r = q + 1 - std::popcount(m);
                if (r == 0) continue;
                const auto base = cell_base[cube_base[static_cast<std::size_t>(q)][j] + m - 1];
                const auto count = std::uint32_t{1} << sed[static_cast<std::size_t>(q)][j]->free.size();
                for (std::uint32_t t = 0; t < count; ++t) {
                    const auto arg = rk.cells_[static_cast<std::size_t>(r)][base + t].arg;
                    auto& out = rk.faces_[static_cast<std::size_t>(r)][base + t];
                    for (int w = 0; w <= q; ++w) {
                        if (m >> w & 1u) continue;
                        out.push_back(cell_index(q, j, m | (1u << w), arg));
                        out.push_back(cell_index(q - 1, facets[static_cast<std::size_t>(w)], remove_bit(m, w), arg));
                    }
                }
            }
        }
    }
    return rk;
}

bool in_hypersurface(const PrimitiveComplex& k, const SignDistribution& eps, const RealCell& c) {
    if (c.cube.lower.dim < 1) return false;
    const auto& s = k.simplex(c.cube.lower);
    for (std::size_t a = 0; a < s.verts.size(); ++a) {
        const auto pa = point_parity(k.point(s.verts[a]));
        for (std::size_t b = a + 1; b < s.verts.size(); ++b) {
            const auto edge = pa ^ point_parity(k.point(s.verts[b]));
            const bool bit = eps[s.verts[a]] ^ eps[s.verts[b]] ^ (std::popcount(edge & c.arg) & 1);
            if (bit) return true;
        }
    }
    return false;
}

RealComplex build_TX(const PrimitiveComplex& k, const RealComplex& rk, const SignDistribution& eps) {
    if (eps.size() != k.count(0)) throw Error(ErrorKind::SizeMismatch, "sign distribution length differs from the vertex count");
    const int n = k.dim();
    RealComplex x;
    x.n_ = n;
    x.subcomplex_ = true;
    x.cells_.resize(static_cast<std::size_t>(n));
    x.faces_.resize(static_cast<std::size_t>(n));
    x.parent_.resize(static_cast<std::size_t>(n));
    std::vector<std::vector<std::int64_t>> local(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        local[ur].assign(rk.count(r), -1);
        for (std::uint32_t i = 0; i < rk.count(r); ++i) {
            const auto& c = rk.cell(r, i);
            if (!in_hypersurface(k, eps, c)) continue;
            local[ur][i] = static_cast<std::int64_t>(x.cells_[ur].size());
            x.cells_[ur].push_back(c);
            x.parent_[ur].push_back(i);
            std::vector<std::uint32_t> faces;
            if (r > 0) {
                for (auto f : rk.faces(r, i)) {
                    const auto lf = local[ur - 1][f];
                    if (lf < 0) throw Error(ErrorKind::InvalidInput, "hypersurface is not closed under faces");
                    faces.push_back(static_cast<std::uint32_t>(lf));
                }
            }
            x.faces_[ur].push_back(std::move(faces));
        }
    }
    return x;
}

RealComplex build_TX(const PrimitiveComplex& k, const SignDistribution& eps) { return build_TX(k, build_RK(k), eps); }

Components components(const PrimitiveComplex& k, const RealComplex& x) {
    const int top = x.top_dim();
    std::vector<std::size_t> offset(static_cast<std::size_t>(top) + 2, 0);
    for (int r = 0; r <= top; ++r) offset[static_cast<std::size_t>(r) + 1] = offset[static_cast<std::size_t>(r)] + x.count(r);
    UnionFind uf(offset.back());
    for (int r = 1; r <= top; ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            for (auto f : x.faces(r, i)) uf.unite(offset[static_cast<std::size_t>(r)] + i, offset[static_cast<std::size_t>(r) - 1] + f);
        }
    }
    std::vector<std::vector<std::uint64_t>> facet_mask(static_cast<std::size_t>(k.dim()) + 1);
    for (int p = 0; p <= k.dim(); ++p) {
        for (const auto& s : k.simplices(p)) facet_mask[static_cast<std::size_t>(p)].push_back(simplex_facets(k, s));
    }
    Components c;
    std::vector<std::int64_t> label(offset.back(), -1);
    c.id.resize(static_cast<std::size_t>(top) + 1);
    for (int r = 0; r <= top; ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            const auto root = uf.find(offset[static_cast<std::size_t>(r)] + i);
            if (label[root] < 0) {
                label[root] = static_cast<std::int64_t>(c.count++);
                c.divisors.push_back(0);
                c.cells.push_back(0);
            }
            const auto id = static_cast<std::uint32_t>(label[root]);
            c.id[static_cast<std::size_t>(r)].push_back(id);
            const auto& up = x.cell(r, i).cube.upper;
            c.divisors[id] |= facet_mask[static_cast<std::size_t>(up.dim)][up.index];
            ++c.cells[id];
        }
    }
    return c;
}

RealComplex component_subcomplex(const RealComplex& x, const Components& comps, std::uint32_t component) {
    if (!x.is_subcomplex_of_rk()) throw Error(ErrorKind::InvalidInput, "components are extracted from subcomplexes of the model");
    if (component >= comps.count) throw Error(ErrorKind::IndexOutOfRange, "component index");
    RealComplex out;
    out.n_ = x.n_;
    out.subcomplex_ = true;
    const auto dims = x.cells_.size();
    out.cells_.resize(dims);
    out.faces_.resize(dims);
    out.parent_.resize(dims);
    std::vector<std::vector<std::int64_t>> local(dims);
    for (std::size_t r = 0; r < dims; ++r) {
        local[r].assign(x.cells_[r].size(), -1);
        for (std::uint32_t i = 0; i < x.cells_[r].size(); ++i) {
            if (comps.id[r][i] != component) continue;
            local[r][i] = static_cast<std::int64_t>(out.cells_[r].size());
            out.cells_[r].push_back(x.cells_[r][i]);
            out.parent_[r].push_back(x.parent_[r][i]);
            std::vector<std::uint32_t> faces;
            for (auto f : x.faces_[r][i]) faces.push_back(static_cast<std::uint32_t>(local[r - 1][f]));
            out.faces_[r].push_back(std::move(faces));
        }
    }
    return out;
}

std::vector<std::size_t> betti(const RealComplex& x) {
    std::vector<std::vector<std::int64_t>> local(static_cast<std::size_t>(x.top_dim()) + 1);
    std::vector<std::size_t> sizes;
    for (int r = 0; r <= x.top_dim(); ++r) {
        auto& l = local[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < x.count(r); ++i) l.push_back(static_cast<std::int64_t>(i));
        sizes.push_back(x.count(r));
    }
    return betti_of(x, local, sizes);
}

std::vector<std::size_t> component_betti(const RealComplex& x, const Components& comps, std::uint32_t component) {
    if (component >= comps.count) throw Error(ErrorKind::IndexOutOfRange, "component index");
    std::vector<std::vector<std::int64_t>> local(static_cast<std::size_t>(x.top_dim()) + 1);
    std::vector<std::size_t> sizes;
    for (int r = 0; r <= x.top_dim(); ++r) {
        auto& l = local[static_cast<std::size_t>(r)];
        std::size_t next = 0;
        for (std::size_t i = 0; i < x.count(r); ++i) {
            l.push_back(comps.id[static_cast<std::size_t>(r)][i] == component ? static_cast<std::int64_t>(next++) : -1);
        }
        sizes.push_back(next);
    }
    return betti_of(x, local, sizes);
}

std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows) {
    for (const auto& c : columns) {
        for (auto r : c) {
            if (r >= rows) throw Error(ErrorKind::IndexOutOfRange, "row index");
        }
    }
    return reduce(std::move(columns), rows, nullptr, false).rank;
}

bool h1_inclusion_surjective(const PrimitiveComplex& k, const RealComplex& rk, const RealComplex& x) {
    if (k.dim() != 3) throw Error(ErrorKind::UnsupportedDimension, "the H1 inclusion test is implemented for n = 3");
    if (!x.is_subcomplex_of_rk()) throw Error(ErrorKind::InvalidInput, "second complex must be a subcomplex of the model");

    // coboundary matrices of the model in degrees 0 and 1
    std::vector<std::vector<std::uint32_t>> d0(rk.count(0)), d1(rk.count(1));
    for (std::uint32_t i = 0; i < rk.count(1); ++i) {
        for (auto f : rk.faces(1, i)) d0[f].push_back(i);
    }
    for (std::uint32_t i = 0; i < rk.count(2); ++i) {
        for (auto f : rk.faces(2, i)) d1[f].push_back(i);
    }
    const auto r0 = reduce(std::move(d0), rk.count(1), nullptr, false);
    std::vector<std::uint8_t> coboundary_low(rk.count(1), 0);
    for (auto l : r0.low) {
        if (l >= 0) coboundary_low[static_cast<std::size_t>(l)] = 1;
    }
    const auto r1 = reduce(std::move(d1), rk.count(2), &coboundary_low, true);

    // cocycles representing a basis of H^1, packed one bit per class on each 1-cell
    std::vector<std::uint64_t> phi(rk.count(1), 0);
    std::size_t classes = 0;
    for (std::size_t j = 0; j < rk.count(1); ++j) {
        if (coboundary_low[j] || r1.low[j] >= 0) continue;
        if (classes == 64) throw Error(ErrorKind::InvalidInput, "first Betti number of the model exceeds 64");
        for (auto e : r1.v[j]) phi[e] |= std::uint64_t{1} << classes;
        ++classes;
    }
    if (classes == 0) return true;

    // pair each fundamental cycle of the hypersurface's 1-skeleton with the cocycles
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> adj(x.count(0));
    std::vector<std::uint64_t> basis;
    auto insert = [&](std::uint64_t v) {
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    };
    for (std::uint32_t i = 0; i < x.count(1); ++i) {
        auto ends = x.faces(1, i);
        normalize(ends);
        const auto value = phi[x.parent(1, i)];
        if (ends.empty()) {
            insert(value);
        } else if (ends.size() == 2) {
            adj[ends[0]].emplace_back(ends[1], value);
            adj[ends[1]].emplace_back(ends[0], value);
        }
    }
    std::vector<std::uint64_t> potential(x.count(0), 0);
    std::vector<std::uint8_t> seen(x.count(0), 0);
    for (std::uint32_t root = 0; root < x.count(0); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::queue<std::uint32_t> q;
        q.push(root);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto [w, value] : adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    potential[w] = potential[u] ^ value;
                    q.push(w);
                }
            }
        }
    }
    for (std::uint32_t u = 0; u < x.count(0); ++u) {
        for (auto [w, value] : adj[u]) {
            // tree edges give zero, every other edge closes a cycle
            if (u < w) insert(potential[u] ^ potential[w] ^ value);
        }
    }
    return basis.size() == classes;
}

bool h1_inclusion_surjective(const PrimitiveComplex& k, const SignDistribution& eps) {
    if (k.dim() != 3) throw Error(ErrorKind::UnsupportedDimension, "the H1 inclusion test is implemented for n = 3");
    const auto rk = build_RK(k);
    return h1_inclusion_surjective(k, rk, build_TX(k, rk, eps));
}

bool manifold_check(const RealComplex& x) {
    const int top = x.top_dim();
    if (top < 1) return true;
    std::vector<std::uint32_t> cofaces(x.count(top - 1), 0);
    for (std::uint32_t i = 0; i < x.count(top); ++i) {
        for (auto f : x.faces(top, i)) ++cofaces[f];
    }
    return std::all_of(cofaces.begin(), cofaces.end(), [](std::uint32_t c) { return c == 2; });
}

bool avoided_lift_check(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, const RealComplex& x) {
    const int n = k.dim();
    const std::size_t lifts = std::size_t{1} << n;
    std::vector<std::uint8_t> touched(k.count(n) * lifts, 0);
    for (int r = 0; r <= x.top_dim(); ++r) {
        for (std::uint32_t i = 0; i < x.count(r); ++i) {
            const auto& c = x.cell(r, i);
            if (c.cube.upper.dim == n) touched[c.cube.upper.index * lifts + c.arg] = 1;
        }
    }
    for (std::uint32_t m = 0; m < k.count(n); ++m) {
        std::size_t missed = 0, which = 0;
        for (std::size_t v = 0; v < lifts; ++v) {
            if (!touched[m * lifts + v]) {
                ++missed;
                which = v;
            }
        }
        if (missed != 1 || which != first_derivative(k, f, eps, m).mask()) return false;
    }
    return true;
}

HaasReport haas_check_full(const PrimitiveComplex& k, const SimplexFrame& f, const SignDistribution& eps, bool compute_cond2) {
    if (compute_cond2 && k.dim() == 3) {
        return haas_check(k, f, eps, [&] { return h1_inclusion_surjective(k, eps); });
    }
    return haas_check(k, f, eps);
}

}  // namespace patchwork
