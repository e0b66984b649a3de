#include "patchwork/lattice.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "patchwork/error.hpp"

namespace patchwork {

namespace {

using Wide = __int128;

std::string format_point(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.coords[i]);
    }
    return s + ")";
}

std::string format_simplex(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.verts[i]);
    }
    return out + "}";
}

Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Rank over Q, by fraction-free elimination.
int integer_rank(std::vector<std::vector<Wide>> a) {
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const Wide f = a[i][c];
            if (f == 0) continue;
            const Wide g = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
            // keep entries small
            Wide h = 0;
            for (std::size_t j = c; j < cols; ++j) {
                Wide x = a[i][j] < 0 ? -a[i][j] : a[i][j];
                while (x != 0) {
                    Wide t = h % x;
                    h = x;
                    x = t;
                }
            }
            if (h > 1) {
                for (std::size_t j = c; j < cols; ++j) a[i][j] /= h;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<Coord>> tight_normals(const LatticePolytope& p, std::uint64_t mask) {
    std::vector<std::vector<Coord>> rows;
    for (std::uint64_t m = mask; m; m &= m - 1) rows.push_back(p.facets[static_cast<std::size_t>(std::countr_zero(m))].normal);
    return rows;
}

// Inverse of a unimodular integer matrix, via cofactors.
std::vector<std::vector<Coord>> unimodular_inverse(const std::vector<std::vector<Coord>>& a) {
    const std::size_t n = a.size();
    const Coord det = integer_determinant(a);
    std::vector<std::vector<Coord>> inv(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Coord>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Coord> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != j) row.push_back(a[r][c]);
                }
                minor.push_back(std::move(row));
            }
            const Coord cof = ((i + j) % 2 ? -1 : 1) * integer_determinant(minor);
            inv[j][i] = cof / det;
        }
    }
    return inv;
}

}  // namespace

// ------------------------------------------------------------ polytopes

Coord Facet::slack(const LatticePoint& x) const { return dot(normal, x.coords) - offset; }

std::int64_t integer_determinant(const std::vector<std::vector<Coord>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    Wide sign = 1;
    Wide prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

std::int64_t simplex_determinant(const std::vector<LatticePoint>& vertices) {
    const std::size_t n = vertices.size() - 1;
    std::vector<std::vector<Coord>> m(n, std::vector<Coord>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices[i + 1].dim() != n) throw Error(ErrorKind::DimensionMismatch, "simplex is not full-dimensional");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = vertices[i + 1][j] - vertices[0][j];
    }
    return integer_determinant(m);
}

LatticePolytope LatticePolytope::standard_simplex(int n, Coord d) {
    if (n < 1 || d < 1) throw Error(ErrorKind::InvalidInput, "standard simplex needs n >= 1 and d >= 1");
    LatticePolytope p;
    p.dim = n;
    p.vertices.push_back(LatticePoint{std::vector<Coord>(static_cast<std::size_t>(n), 0)});
    for (int i = 0; i < n; ++i) {
        LatticePoint v{std::vector<Coord>(static_cast<std::size_t>(n), 0)};
        v.coords[static_cast<std::size_t>(i)] = d;
        p.vertices.push_back(v);
        Facet f{std::vector<Coord>(static_cast<std::size_t>(n), 0), 0};
        f.normal[static_cast<std::size_t>(i)] = 1;
        p.facets.push_back(f);
    }
    p.facets.push_back(Facet{std::vector<Coord>(static_cast<std::size_t>(n), -1), -d});
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
}

LatticePolytope LatticePolytope::from_facets(int dim, std::vector<Facet> facets, const std::vector<LatticePoint>& candidates) {
    LatticePolytope p;
    p.dim = dim;
    p.facets = std::move(facets);
    if (dim < 1) throw Error(ErrorKind::InvalidInput, "polytope dimension must be positive");
    if (p.facets.empty() || p.facets.size() > 64) throw Error(ErrorKind::InvalidInput, "need between 1 and 64 facets");
    for (const auto& f : p.facets) {
        if (static_cast<int>(f.normal.size()) != dim) throw Error(ErrorKind::DimensionMismatch, "facet normal length");
    }
    std::set<LatticePoint> seen;
    for (const auto& x : candidates) {
        if (static_cast<int>(x.dim()) != dim || !p.contains(x) || seen.count(x)) continue;
        const auto mask = p.tight_facets(x);
        if (std::popcount(mask) < dim) continue;
        std::vector<std::vector<Wide>> rows;
        for (const auto& r : tight_normals(p, mask)) rows.emplace_back(r.begin(), r.end());
        if (integer_rank(rows) == dim) {
            p.vertices.push_back(x);
            seen.insert(x);
        }
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    p.validate();
    return p;
}

void LatticePolytope::validate() const {
    if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "polytope has no vertices");
    for (const auto& f : facets) {
        Coord g = 0;
        for (auto c : f.normal) g = std::gcd(g, c);
        if (g != 1) throw Error(ErrorKind::InvalidInput, "facet normal is not primitive");
    }
    for (const auto& v : vertices) {
        if (!contains(v)) throw Error(ErrorKind::InvalidInput, "vertex " + format_point(v) + " violates a facet");
        const auto mask = tight_facets(v);
        if (std::popcount(mask) != dim) {
            throw Error(ErrorKind::SingularPolytope, "vertex " + format_point(v) + " is not simple");
        }
        const auto det = integer_determinant(tight_normals(*this, mask));
        if (det != 1 && det != -1) {
            throw Error(ErrorKind::SingularPolytope, "vertex " + format_point(v) + " has non-unimodular cone");
        }
    }
}

bool LatticePolytope::contains(const LatticePoint& x) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.slack(x) >= 0; });
}

bool LatticePolytope::strictly_contains(const LatticePoint& x) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.slack(x) > 0; });
}

std::uint64_t LatticePolytope::tight_facets(const LatticePoint& x) const {
    std::uint64_t mask = 0;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        if (facets[f].slack(x) == 0) mask |= std::uint64_t{1} << f;
    }
    return mask;
}

std::int64_t LatticePolytope::normalized_volume() const {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    // Edge directions at each vertex are the columns of the inverse of the
    // tight normal matrix (non-singularity makes them primitive).
    std::vector<LatticePoint> apexes;
    std::vector<std::vector<std::vector<Coord>>> directions;
    Coord biggest = 1;
    for (const auto& v : vertices) {
        auto inv = unimodular_inverse(tight_normals(*this, tight_facets(v)));
        std::vector<std::vector<Coord>> dirs(static_cast<std::size_t>(dim), std::vector<Coord>(static_cast<std::size_t>(dim)));
        for (int j = 0; j < dim; ++j) {
            for (int i = 0; i < dim; ++i) {
                dirs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                biggest = std::max(biggest, std::abs(inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
        }
        directions.push_back(std::move(dirs));
    }
    // c = (1, b, b^2, ...) with b > 2 max|w| pairs to nonzero with every nonzero direction.
    const Coord base = 2 * biggest + 1;
    std::vector<cpp_int> c(static_cast<std::size_t>(dim));
    cpp_int power = 1;
    for (int i = 0; i < dim; ++i) {
        c[static_cast<std::size_t>(i)] = power;
        power *= base;
    }
    auto pair = [&](const std::vector<Coord>& w) {
        cpp_int s = 0;
        for (int i = 0; i < dim; ++i) s += c[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        return s;
    };
    cpp_rational total = 0;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        cpp_int num = pow(pair(vertices[k].coords), static_cast<unsigned>(dim));
        cpp_int den = 1;
        for (const auto& w : directions[k]) den *= -pair(w);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        total += cpp_rational(num, den);
    }
    if (denominator(total) != 1) throw Error(ErrorKind::SingularPolytope, "normalized volume is not an integer");
    return static_cast<std::int64_t>(numerator(total));
}

// ------------------------------------------------------------- simplices

bool Simplex::contains_vertex(std::uint32_t v) const { return std::binary_search(verts.begin(), verts.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.verts.begin(), other.verts.end(), verts.begin(), verts.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = s.verts.size();
    for (auto v : s.verts) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool Subcomplex::contains(SimplexId id) const {
    if (id.dim < 0 || static_cast<std::size_t>(id.dim) >= by_dim.size()) return false;
    const auto& v = by_dim[static_cast<std::size_t>(id.dim)];
    return std::binary_search(v.begin(), v.end(), id.index);
}

std::size_t Subcomplex::size() const {
    std::size_t s = 0;
    for (const auto& v : by_dim) s += v.size();
    return s;
}

// ---------------------------------------------------------------- complex

std::optional<std::uint32_t> PrimitiveComplex::find(const Simplex& s) const {
    const int p = s.dim();
    if (p < 0 || p > n_) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(p)];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

SimplexId PrimitiveComplex::id_of(const Simplex& s) const {
    auto i = find(s);
    if (!i) throw Error(ErrorKind::UnknownSimplex, "simplex " + format_simplex(s) + " is not in the complex");
    return SimplexId{s.dim(), *i};
}

std::vector<SimplexId> PrimitiveComplex::all_faces(SimplexId id) const {
    const auto& verts = simplex(id).verts;
    const std::uint32_t k = static_cast<std::uint32_t>(verts.size());
    std::vector<SimplexId> out;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Simplex f;
        for (std::uint32_t j = 0; j < k; ++j) {
            if (mask >> j & 1u) f.verts.push_back(verts[j]);
        }
        out.push_back(SimplexId{f.dim(), *find(f)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::uint32_t> PrimitiveComplex::apex(SimplexId id) const {
    const auto a = enlarged_.ap[static_cast<std::size_t>(id.dim)][id.index];
    if (a < 0) return std::nullopt;
    return static_cast<std::uint32_t>(a);
}

PrimitiveComplex build_complex(std::vector<LatticePoint> points, std::vector<Simplex> maximal_simplices,
                               LatticePolytope polytope) {
    const int n = polytope.dim;
    if (n < 1) throw Error(ErrorKind::InvalidInput, "complex dimension must be positive");
    for (const auto& x : points) {
        if (static_cast<int>(x.dim()) != n) throw Error(ErrorKind::DimensionMismatch, "point " + format_point(x) + " has wrong length");
        if (!polytope.contains(x)) throw Error(ErrorKind::VolumeMismatch, "point " + format_point(x) + " lies outside the polytope");
    }
    std::vector<char> used(points.size(), 0);
    for (auto& s : maximal_simplices) {
        std::sort(s.verts.begin(), s.verts.end());
        if (s.dim() != n || std::adjacent_find(s.verts.begin(), s.verts.end()) != s.verts.end()) {
            throw Error(ErrorKind::InvalidInput, "maximal simplex " + format_simplex(s) + " does not have n+1 distinct vertices");
        }
        for (auto v : s.verts) {
            if (v >= points.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(v));
            used[v] = 1;
        }
        std::vector<LatticePoint> vs;
        for (auto v : s.verts) vs.push_back(points[v]);
        const auto det = simplex_determinant(vs);
        if (det != 1 && det != -1) {
            throw Error(ErrorKind::NonPrimitiveSimplex, "simplex " + format_simplex(s) + " has determinant " + std::to_string(det));
        }
    }
    polytope.validate();
    for (std::size_t v = 0; v < points.size(); ++v) {
        if (!used[v]) throw Error(ErrorKind::InvalidInput, "point " + format_point(points[v]) + " is not a vertex of any simplex");
    }

    PrimitiveComplex k;
    k.n_ = n;
    k.polytope_ = std::move(polytope);
    k.points_ = std::move(points);
    const auto nd = static_cast<std::size_t>(n);

    std::vector<std::set<Simplex>> faces(nd + 1);
    for (const auto& s : maximal_simplices) {
        if (!faces[nd].insert(s).second) throw Error(ErrorKind::VolumeMismatch, "duplicate maximal simplex " + format_simplex(s));
        for (std::uint32_t mask = 1; mask + 1 < (1u << (n + 1)); ++mask) {
            Simplex f;
            for (std::uint32_t j = 0; j <= nd; ++j) {
                if (mask >> j & 1u) f.verts.push_back(s.verts[j]);
            }
            faces[static_cast<std::size_t>(f.dim())].insert(std::move(f));
        }
    }
    k.faces_.resize(nd + 1);
    k.index_.resize(nd + 1);
    for (std::size_t p = 0; p <= nd; ++p) {
        k.faces_[p].assign(faces[p].begin(), faces[p].end());
        for (std::uint32_t i = 0; i < k.faces_[p].size(); ++i) k.index_[p].emplace(k.faces_[p][i], i);
    }

    k.facets_.resize(nd + 1);
    k.cofaces_.resize(nd + 1);
    for (std::size_t p = 0; p <= nd; ++p) {
        k.facets_[p].resize(k.faces_[p].size());
        k.cofaces_[p].resize(k.faces_[p].size());
    }
    for (std::size_t p = 1; p <= nd; ++p) {
        for (std::uint32_t i = 0; i < k.faces_[p].size(); ++i) {
            const auto& s = k.faces_[p][i];
            for (std::size_t j = 0; j < s.verts.size(); ++j) {
                Simplex f;
                for (std::size_t t = 0; t < s.verts.size(); ++t) {
                    if (t != j) f.verts.push_back(s.verts[t]);
                }
                const auto fi = k.index_[p - 1].at(f);
                k.facets_[p][i].push_back(fi);
                k.cofaces_[p - 1][fi].push_back(i);
            }
        }
    }

    // boundary: closure of the walls with exactly one coface
    k.boundary_.resize(nd + 1);
    for (std::size_t p = 0; p <= nd; ++p) k.boundary_[p].assign(k.faces_[p].size(), 0);
    for (std::uint32_t i = 0; i < k.faces_[nd - 1].size(); ++i) {
        const auto c = k.cofaces_[nd - 1][i].size();
        if (c == 0 || c > 2) {
            throw Error(ErrorKind::DanglingFace, "wall " + format_simplex(k.faces_[nd - 1][i]) + " has " + std::to_string(c) + " cofaces");
        }
        if (c == 1) {
            std::uint64_t common = ~std::uint64_t{0};
            for (auto v : k.faces_[nd - 1][i].verts) common &= k.polytope_.tight_facets(k.points_[v]);
            if (common == 0) {
                throw Error(ErrorKind::VolumeMismatch, "boundary wall " + format_simplex(k.faces_[nd - 1][i]) + " is not contained in a facet");
            }
            k.boundary_[nd - 1][i] = 1;
        }
    }
    for (std::size_t p = nd - 1; p >= 1; --p) {
        for (std::uint32_t i = 0; i < k.faces_[p].size(); ++i) {
            if (!k.boundary_[p][i]) continue;
            for (auto f : k.facets_[p][i]) k.boundary_[p - 1][f] = 1;
        }
    }
    for (std::uint32_t v = 0; v < k.faces_[0].size(); ++v) {
        if (!k.boundary_[0][v]) k.interior_vertices_.push_back(v);
    }

    const auto volume = k.polytope_.normalized_volume();
    if (static_cast<std::int64_t>(k.faces_[nd].size()) != volume) {
        throw Error(ErrorKind::VolumeMismatch, std::to_string(k.faces_[nd].size()) + " maximal simplices for normalized volume " +
                                                  std::to_string(volume));
    }

    k.neighbours_.resize(k.faces_[0].size());
    for (const auto& e : k.faces_[1]) {
        k.neighbours_[e.verts[0]].push_back(e.verts[1]);
        k.neighbours_[e.verts[1]].push_back(e.verts[0]);
    }
    for (auto& nb : k.neighbours_) std::sort(nb.begin(), nb.end());

    k.enlarged_ = enlarged_boundaries(k);
    return k;
}

BoundaryEnlargements enlarged_boundaries(const PrimitiveComplex& k) {
    const auto nd = static_cast<std::size_t>(k.dim());
    BoundaryEnlargements out;
    out.b0.resize(nd + 1);
    out.b1.resize(nd + 1);
    out.ap.resize(nd + 1);
    for (std::size_t p = 0; p <= nd; ++p) {
        const auto cnt = k.count(static_cast<int>(p));
        out.b0[p].assign(cnt, 0);
        out.b1[p].assign(cnt, 0);
        out.ap[p].assign(cnt, -1);
        for (std::uint32_t i = 0; i < cnt; ++i) {
            const auto& s = k.simplex(static_cast<int>(p), i);
            bool all_boundary = true;
            bool generator = true;
            for (std::size_t j = 0; j < s.verts.size(); ++j) {
                const bool vb = k.on_boundary(0, s.verts[j]);
                all_boundary = all_boundary && vb;
                if (vb || p == 0) continue;
                // lk(v; sigma) is sigma minus v
                const auto opposite = k.facets(static_cast<int>(p), i)[j];
                if (!k.on_boundary(static_cast<int>(p) - 1, opposite)) generator = false;
            }
            out.b0[p][i] = all_boundary;
            if (generator) out.b1[p][i] = 1;
        }
    }
    for (std::size_t p = nd; p >= 1; --p) {
        for (std::uint32_t i = 0; i < k.count(static_cast<int>(p)); ++i) {
            if (!out.b1[p][i]) continue;
            for (auto f : k.facets(static_cast<int>(p), i)) out.b1[p - 1][f] = 1;
        }
    }
    for (std::size_t p = 0; p <= nd; ++p) {
        for (std::uint32_t i = 0; i < k.count(static_cast<int>(p)); ++i) {
            if (!out.b1[p][i] || out.b0[p][i]) continue;
            for (auto v : k.simplex(static_cast<int>(p), i).verts) {
                if (k.interior_vertex(v)) {
                    out.ap[p][i] = static_cast<std::int32_t>(v);
                    break;
                }
            }
        }
    }
    return out;
}

StarLink star_link(const PrimitiveComplex& k, const Simplex& sigma) {
    const auto id = k.id_of(sigma);
    (void)id;
    const auto nd = static_cast<std::size_t>(k.dim());
    std::vector<std::set<std::uint32_t>> star(nd + 1), link(nd + 1);
    for (std::uint32_t m = 0; m < k.count(k.dim()); ++m) {
        if (!sigma.is_face_of(k.simplex(k.dim(), m))) continue;
        for (const auto& f : k.all_faces(SimplexId{k.dim(), m})) {
            star[static_cast<std::size_t>(f.dim)].insert(f.index);
            const auto& fv = k.simplex(f).verts;
            const bool disjoint = std::none_of(fv.begin(), fv.end(), [&](std::uint32_t v) { return sigma.contains_vertex(v); });
            if (disjoint) link[static_cast<std::size_t>(f.dim)].insert(f.index);
        }
    }
    StarLink out;
    for (std::size_t p = 0; p <= nd; ++p) {
        out.star.by_dim.emplace_back(star[p].begin(), star[p].end());
        out.link.by_dim.emplace_back(link[p].begin(), link[p].end());
    }
    return out;
}

std::vector<Cube> cubical_cells(const PrimitiveComplex& k, int dim) {
    std::vector<Cube> out;
    if (dim < 0 || dim > k.dim()) return out;
    for (int q = dim; q <= k.dim(); ++q) {
        for (std::uint32_t j = 0; j < k.count(q); ++j) {
            for (const auto& f : k.all_faces(SimplexId{q, j})) {
                if (f.dim == q - dim) out.push_back(Cube{f, SimplexId{q, j}});
            }
        }
    }
    return out;
}

std::vector<std::size_t> f_vector(const PrimitiveComplex& k) {
    std::vector<std::size_t> f;
    for (int p = 0; p <= k.dim(); ++p) f.push_back(k.count(p));
    return f;
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
    const auto nd = static_cast<std::size_t>(p.dim);
    std::vector<Coord> lo(nd), hi(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        lo[i] = hi[i] = p.vertices.front()[i];
        for (const auto& v : p.vertices) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    std::vector<LatticePoint> out;
    LatticePoint x{lo};
    while (true) {
        if (p.contains(x)) out.push_back(x);
        std::size_t i = nd;
        while (i > 0) {
            --i;
            if (x.coords[i] < hi[i]) {
                ++x.coords[i];
                for (std::size_t j = i + 1; j < nd; ++j) x.coords[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<LatticePoint> interior_lattice_points(const LatticePolytope& p) {
    std::vector<LatticePoint> out;
    for (auto& x : lattice_points(p)) {
        if (p.strictly_contains(x)) out.push_back(std::move(x));
    }
    return out;
}

std::vector<int> vertex_distances(const PrimitiveComplex& k, const std::vector<std::uint32_t>& sources, int max_depth) {
    std::vector<int> dist(k.count(0), -1);
    std::deque<std::uint32_t> queue;
    for (auto s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && dist[u] >= max_depth) continue;
        for (auto w : k.neighbours(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int simplex_distance(const PrimitiveComplex& k, const Simplex& sigma, const Simplex& tau) {
    k.id_of(sigma);
    k.id_of(tau);
    const auto dist = vertex_distances(k, sigma.verts);
    int best = -1;
    for (auto v : tau.verts) {
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    }
    return best;
}

}  // namespace patchwork
