#include "patchwork/f2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "patchwork/error.hpp"

namespace patchwork {

// ---------------------------------------------------------------- F2Vector

F2Vector::F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] & 1) v.set(i);
    }
    return v;
}

F2Vector F2Vector::from_mask(std::uint64_t mask, std::size_t size) {
    if (size > 64) throw Error(ErrorKind::DimensionMismatch, "mask vectors hold at most 64 bits");
    F2Vector v(size);
    if (size > 0) v.words_[0] = size == 64 ? mask : (mask & ((std::uint64_t{1} << size) - 1));
    return v;
}

void F2Vector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

F2Vector& F2Vector::operator^=(const F2Vector& other) {
    if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "xor of vectors of different length");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool F2Vector::dot(const F2Vector& other) const {
    if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different length");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool F2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t F2Vector::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
}

std::uint64_t F2Vector::mask() const {
    if (size_ > 64) throw Error(ErrorKind::DimensionMismatch, "vector longer than 64 bits has no mask");
    return words_.empty() ? 0 : words_[0];
}

std::vector<int> F2Vector::to_bits() const {
    std::vector<int> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
    return out;
}

std::string F2Vector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

// ---------------------------------------------------------------- F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows, std::size_t cols) {
    F2Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    }
    m.rows_ = rows;
    return m;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows_[r].get(c)) t.set(c, r);
        }
    }
    return t;
}

F2Vector F2Matrix::operator*(const F2Vector& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    F2Vector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].dot(x)) y.set(r);
    }
    return y;
}

bool F2Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const F2Vector& r) { return r.is_zero(); });
}

namespace {

// Reduced row echelon form in place.  `rhs` (optional) is transformed along
// with the rows.  Returns the pivot column of each of the first rank rows.
std::vector<std::size_t> reduce_rows(std::vector<F2Vector>& rows, std::size_t cols, std::vector<std::uint8_t>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                if (rhs) (*rhs)[i] ^= (*rhs)[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<F2Vector> kernel_from_rref(const std::vector<F2Vector>& rows, const std::vector<std::size_t>& pivots,
                                       std::size_t cols) {
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<F2Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        F2Vector x(cols);
        x.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (rows[i].get(f)) x.set(pivots[i]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return reduce_rows(rows, m.cols(), nullptr).size();
}

std::vector<F2Vector> nullspace(const F2Matrix& m) {
    std::vector<F2Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    auto pivots = reduce_rows(rows, m.cols(), nullptr);
    return kernel_from_rref(rows, pivots, m.cols());
}

std::optional<Solution> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
    std::vector<F2Vector> rows;
    std::vector<std::uint8_t> rhs(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
        rhs[r] = b.get(r);
    }
    auto pivots = reduce_rows(rows, m.cols(), &rhs);
    for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
        if (rhs[r]) return std::nullopt;
    }
    Solution s{F2Vector(m.cols()), kernel_from_rref(rows, pivots, m.cols())};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (rhs[i]) s.particular.set(pivots[i]);
    }
    return s;
}

// ------------------------------------------------------------- WedgeVector

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

WedgeVector::WedgeVector(int ambient, int degree) : n_(ambient), k_(degree) {
    if (ambient < 0 || ambient > kMaxAmbient) throw Error(ErrorKind::DimensionMismatch, "ambient dimension outside [0,16]");
    if (degree < 0 || degree > ambient) throw Error(ErrorKind::DegreeOverflow, "degree exceeds ambient dimension");
    coeffs_ = F2Vector(binomial(ambient, degree));
}

WedgeVector WedgeVector::from_vector(const F2Vector& v) {
    WedgeVector w(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) w.coeffs_.set(i);
    }
    return w;
}

std::size_t WedgeVector::index_of(std::uint32_t subset_mask) const {
    // colex rank: sum over the i-th smallest element s of C(s, i)
    std::size_t idx = 0;
    int i = 1;
    for (std::uint32_t m = subset_mask; m; m &= m - 1, ++i) {
        idx += binomial(std::countr_zero(m), i);
    }
    return idx;
}

std::uint32_t WedgeVector::subset(std::size_t i) const {
    // invert the colex rank greedily from the largest element down
    std::uint32_t mask = 0;
    std::size_t rest = i;
    int s = n_ - 1;
    for (int j = k_; j >= 1; --j) {
        while (binomial(s, j) > rest) --s;
        rest -= binomial(s, j);
        mask |= std::uint32_t{1} << s;
        --s;
    }
    return mask;
}

bool WedgeVector::coefficient(std::uint32_t subset_mask) const {
    if (std::popcount(subset_mask) != k_ || subset_mask >> n_) return false;
    return coeffs_.get(index_of(subset_mask));
}

void WedgeVector::set_coefficient(std::uint32_t subset_mask, bool value) {
    if (std::popcount(subset_mask) != k_ || subset_mask >> n_) {
        throw Error(ErrorKind::IndexOutOfRange, "subset does not match wedge degree");
    }
    coeffs_.set(index_of(subset_mask), value);
}

WedgeVector& WedgeVector::operator^=(const WedgeVector& other) {
    if (other.n_ != n_ || other.k_ != k_) throw Error(ErrorKind::DimensionMismatch, "sum of wedges of different shape");
    coeffs_ ^= other.coeffs_;
    return *this;
}

WedgeVector wedge(const WedgeVector& u, const WedgeVector& v) {
    if (u.ambient() != v.ambient()) throw Error(ErrorKind::DimensionMismatch, "wedge of different ambient spaces");
    if (u.degree() + v.degree() > u.ambient()) throw Error(ErrorKind::DegreeOverflow, "wedge degree exceeds ambient");
    WedgeVector out(u.ambient(), u.degree() + v.degree());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!u.coefficients().get(i)) continue;
        const auto s = u.subset(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v.coefficients().get(j)) continue;
            const auto t = v.subset(j);
            if (s & t) continue;
            out.set_coefficient(s | t, !out.coefficient(s | t));
        }
    }
    return out;
}

namespace {

bool minor_nonsingular(const std::vector<F2Vector>& rows, std::uint32_t columns) {
    const int k = static_cast<int>(rows.size());
    std::vector<std::uint32_t> m(k, 0);
    for (int r = 0; r < k; ++r) {
        int j = 0;
        for (std::uint32_t c = columns; c; c &= c - 1, ++j) {
            if (rows[r].get(static_cast<std::size_t>(std::countr_zero(c)))) m[r] |= 1u << j;
        }
    }
    for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && !((m[p] >> c) & 1u)) ++p;
        if (p == k) return false;
        std::swap(m[p], m[c]);
        for (int r = c + 1; r < k; ++r) {
            if ((m[r] >> c) & 1u) m[r] ^= m[c];
        }
    }
    return true;
}

}  // namespace

WedgeVector pluecker(const std::vector<F2Vector>& vectors, int ambient) {
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient");
    }
    const int k = static_cast<int>(vectors.size());
    WedgeVector out(ambient, k);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto s = out.subset(i);
        if (minor_nonsingular(vectors, s)) out.set_coefficient(s);
    }
    return out;
}

WedgeVector line_generator(const std::vector<F2Vector>& basis, int ambient) {
    auto m = F2Matrix::from_rows(basis, static_cast<std::size_t>(ambient));
    if (rank(m) != basis.size()) throw Error(ErrorKind::DependentBasis, "basis vectors are linearly dependent");
    return pluecker(basis, ambient);
}

// --------------------------------------------------------------- UnionFind

UnionFind::UnionFind(std::size_t size) : parent_(size), rank_(size, 0), count_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    if (x >= parent_.size()) throw Error(ErrorKind::IndexOutOfRange, "union-find index");
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        const std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --count_;
    return true;
}

}  // namespace patchwork
