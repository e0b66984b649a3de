#include "patchwork/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "patchwork/error.hpp"

namespace patchwork {

Family parse_family(const std::string& name) {
    if (name == "knudsen") return Family::Knudsen;
    if (name == "viro") return Family::Viro;
    if (name == "itenberg-viro") return Family::ItenbergViro;
    throw Error(ErrorKind::InvalidInput, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Knudsen: return "knudsen";
        case Family::Viro: return "viro";
        case Family::ItenbergViro: return "itenberg-viro";
    }
    return "?";
}

PrimitiveComplex complex_from_coordinates(const LatticePolytope& polytope,
                                          const std::vector<std::vector<LatticePoint>>& simplices) {
    std::set<LatticePoint> all;
    for (const auto& s : simplices) all.insert(s.begin(), s.end());
    std::vector<LatticePoint> points(all.begin(), all.end());
    std::map<LatticePoint, std::uint32_t> index;
    for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    std::vector<Simplex> maximal;
    maximal.reserve(simplices.size());
    for (const auto& s : simplices) {
        Simplex m;
        for (const auto& x : s) m.verts.push_back(index.at(x));
        std::sort(m.verts.begin(), m.verts.end());
        maximal.push_back(std::move(m));
    }
    return build_complex(std::move(points), std::move(maximal), polytope);
}

std::optional<Coord> standard_simplex_size(const PrimitiveComplex& k) {
    Coord d = 0;
    for (const auto& v : k.polytope().vertices) d = std::max(d, std::accumulate(v.coords.begin(), v.coords.end(), Coord{0}));
    if (d < 1) return std::nullopt;
    const auto ref = LatticePolytope::standard_simplex(k.dim(), d);
    if (ref.facets != k.polytope().facets) return std::nullopt;
    return d;
}

PrimitiveComplex unit_simplex(int n) {
    const auto p = LatticePolytope::standard_simplex(n, 1);
    return complex_from_coordinates(p, {p.vertices});
}

PrimitiveComplex segment(Coord d) {
    std::vector<std::vector<LatticePoint>> simplices;
    for (Coord i = 0; i < d; ++i) simplices.push_back({LatticePoint{{i}}, LatticePoint{{i + 1}}});
    return complex_from_coordinates(LatticePolytope::standard_simplex(1, d), simplices);
}

PrimitiveComplex knudsen(int n, Coord d) {
    if (n < 1 || d < 1) throw Error(ErrorKind::InvalidInput, "knudsen needs n >= 1 and d >= 1");
    // In partial-sum coordinates y_j = x_1 + ... + x_j the hyperplanes become
    // y_j - y_i = k, and P^n_d becomes 0 <= y_1 <= ... <= y_n <= d.  The
    // chambers are the Freudenthal simplices a, a + e_{pi(1)}, ... inside it.
    const auto nd = static_cast<std::size_t>(n);
    auto in_region = [&](const std::vector<Coord>& y) {
        if (y[0] < 0 || y[nd - 1] > d) return false;
        for (std::size_t j = 1; j < nd; ++j) {
            if (y[j] < y[j - 1]) return false;
        }
        return true;
    };
    auto to_x = [&](const std::vector<Coord>& y) {
        LatticePoint x{std::vector<Coord>(nd)};
        for (std::size_t j = 0; j < nd; ++j) x.coords[j] = y[j] - (j ? y[j - 1] : 0);
        return x;
    };
    std::vector<std::vector<LatticePoint>> simplices;
    std::vector<Coord> a(nd, 0);
    std::vector<std::size_t> perm(nd);
    while (true) {
        if (in_region(a)) {
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            do {
                std::vector<Coord> y = a;
                std::vector<LatticePoint> s{to_x(y)};
                bool ok = true;
                for (auto j : perm) {
                    ++y[j];
                    if (!in_region(y)) {
                        ok = false;
                        break;
                    }
                    s.push_back(to_x(y));
                }
                if (ok) simplices.push_back(std::move(s));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::size_t i = nd;
        while (i > 0 && a[i - 1] == d) {
            a[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++a[i - 1];
    }
    return complex_from_coordinates(LatticePolytope::standard_simplex(n, d), simplices);
}

namespace {

// Is x in the face of P^m_size spanned by size * e_j, j in face (e_0 = 0)?
bool in_face(const LatticePoint& x, const std::vector<int>& face, Coord size) {
    std::vector<char> allowed(x.dim() + 1, 0);
    for (int j : face) allowed[static_cast<std::size_t>(j)] = 1;
    Coord sum = 0;
    for (std::size_t l = 1; l <= x.dim(); ++l) {
        if (!allowed[l] && x[l - 1] != 0) return false;
        sum += x[l - 1];
    }
    return allowed[0] || sum == size;
}

// Simplices of K of dimension |face| - 1 lying in the face, as coordinates.
std::vector<std::vector<LatticePoint>> face_simplices(const PrimitiveComplex& k, const std::vector<int>& face, Coord size) {
    std::vector<std::vector<LatticePoint>> out;
    const int p = static_cast<int>(face.size()) - 1;
    for (const auto& s : k.simplices(p)) {
        std::vector<LatticePoint> pts;
        bool ok = true;
        for (auto v : s.verts) {
            if (!in_face(k.point(v), face, size)) {
                ok = false;
                break;
            }
            pts.push_back(k.point(v));
        }
        if (ok) out.push_back(std::move(pts));
    }
    return out;
}

std::vector<int> index_range(int lo, int hi) {
    std::vector<int> r;
    for (int i = lo; i <= hi; ++i) r.push_back(i);
    return r;
}

}  // namespace

PrimitiveComplex viro_sum(const PrimitiveComplex& k, const PrimitiveComplex& l, bool eta) {
    const int n = l.dim();
    if (k.dim() != n + 1) throw Error(ErrorKind::DimensionMismatch, "K must have dimension one more than L");
    const auto dk = standard_simplex_size(k);
    const auto dl = standard_simplex_size(l);
    if (!dk || !dl) throw Error(ErrorKind::InvalidInput, "viro_sum needs triangulations of standard simplices");
    if (*dl != *dk + 1) throw Error(ErrorKind::SizeMismatch, "L must be one size larger than K");
    const Coord d = *dk;
    const auto top = static_cast<std::size_t>(n);  // index of x_{n+1}

    auto lift = [&](LatticePoint x) {
        x.coords[top] += 1;
        return x;
    };
    auto embed = [&](const LatticePoint& y) {
        LatticePoint x{y.coords};
        x.coords.push_back(0);
        return x;
    };

    std::vector<std::vector<LatticePoint>> simplices;
    for (const auto& s : k.maximal_simplices()) {
        std::vector<LatticePoint> pts;
        for (auto v : s.verts) pts.push_back(lift(k.point(v)));
        simplices.push_back(std::move(pts));
    }
    for (int i = 0; i <= n; ++i) {
        // faces of the bottom facet of K and of L, indexed by e_0 = 0, e_1, ..., e_n
        const auto k_face = eta ? index_range(i, n) : index_range(0, i);
        const auto l_face = eta ? index_range(0, i) : index_range(i, n);
        const auto ks = face_simplices(k, k_face, d);
        const auto ls = face_simplices(l, l_face, d + 1);
        for (const auto& a : ks) {
            for (const auto& b : ls) {
                std::vector<LatticePoint> pts;
                for (const auto& x : a) pts.push_back(lift(x));
                for (const auto& y : b) pts.push_back(embed(y));
                simplices.push_back(std::move(pts));
            }
        }
    }
    return complex_from_coordinates(LatticePolytope::standard_simplex(n + 1, d + 1), simplices);
}

namespace {

PrimitiveComplex recursive_family(int n, Coord d, bool alternate, std::map<std::pair<int, Coord>, PrimitiveComplex>& memo) {
    if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
    PrimitiveComplex out = [&] {
        if (n == 1) return segment(d);
        if (d == 1) return unit_simplex(n);
        const bool eta = alternate && ((d - 1) % 2 == 1);
        return viro_sum(recursive_family(n, d - 1, alternate, memo), recursive_family(n - 1, d, alternate, memo), eta);
    }();
    memo.emplace(std::make_pair(n, d), out);
    return out;
}

}  // namespace

PrimitiveComplex itenberg_viro(int n, Coord d) {
    if (n < 1 || d < 1) throw Error(ErrorKind::InvalidInput, "itenberg_viro needs n >= 1 and d >= 1");
    std::map<std::pair<int, Coord>, PrimitiveComplex> memo;
    return recursive_family(n, d, true, memo);
}

PrimitiveComplex viro_family(int n, Coord d) {
    if (n < 1 || d < 1) throw Error(ErrorKind::InvalidInput, "viro_family needs n >= 1 and d >= 1");
    std::map<std::pair<int, Coord>, PrimitiveComplex> memo;
    return recursive_family(n, d, false, memo);
}

PrimitiveComplex generate(Family family, int n, Coord d) {
    switch (family) {
        case Family::Knudsen: return knudsen(n, d);
        case Family::Viro: return viro_family(n, d);
        case Family::ItenbergViro: return itenberg_viro(n, d);
    }
    throw Error(ErrorKind::InvalidInput, "unknown family");
}

PrimitiveComplex restrict_to_face(const PrimitiveComplex& k, std::vector<int> index_set) {
    const auto d = standard_simplex_size(k);
    if (!d) throw Error(ErrorKind::InvalidInput, "restriction needs a triangulation of a standard simplex");
    std::sort(index_set.begin(), index_set.end());
    if (index_set.size() < 2 || std::adjacent_find(index_set.begin(), index_set.end()) != index_set.end() ||
        index_set.front() < 0 || index_set.back() > k.dim()) {
        throw Error(ErrorKind::InvalidIndexSet, "index set must hold at least two distinct indices in [0, n]");
    }
    const int m = static_cast<int>(index_set.size()) - 1;
    auto chart = [&](const LatticePoint& x) {
        LatticePoint y{std::vector<Coord>(static_cast<std::size_t>(m))};
        for (int j = 1; j <= m; ++j) y.coords[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(index_set[static_cast<std::size_t>(j)] - 1)];
        return y;
    };
    std::vector<std::vector<LatticePoint>> simplices;
    for (const auto& s : face_simplices(k, index_set, *d)) {
        std::vector<LatticePoint> pts;
        for (const auto& x : s) pts.push_back(chart(x));
        simplices.push_back(std::move(pts));
    }
    return complex_from_coordinates(LatticePolytope::standard_simplex(m, *d), simplices);
}

std::vector<std::vector<LatticePoint>> coordinate_simplices(const PrimitiveComplex& k) {
    std::vector<std::vector<LatticePoint>> out;
    for (const auto& s : k.maximal_simplices()) {
        std::vector<LatticePoint> pts;
        for (auto v : s.verts) pts.push_back(k.point(v));
        std::sort(pts.begin(), pts.end());
        out.push_back(std::move(pts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace patchwork
