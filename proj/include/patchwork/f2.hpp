#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/// Fixed-length vector over F2, packed into 64-bit words.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t size);

    static F2Vector from_bits(const std::vector<int>& bits);
    /// Low `size` bits of `mask`, bit i is coordinate i.
    static F2Vector from_mask(std::uint64_t mask, std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    F2Vector& operator^=(const F2Vector& other);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }
    bool operator==(const F2Vector& other) const = default;

    /// Standard pairing sum_i a_i b_i mod 2.
    bool dot(const F2Vector& other) const;
    bool is_zero() const;
    std::size_t count() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t lowest() const;
    /// Coordinates packed into an integer; requires size() <= 64.
    std::uint64_t mask() const;
    std::vector<int> to_bits() const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    static F2Matrix from_rows(const std::vector<F2Vector>& rows, std::size_t cols);
    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    const F2Vector& row(std::size_t r) const { return rows_[r]; }
    F2Vector& row(std::size_t r) { return rows_[r]; }

    F2Matrix transpose() const;
    F2Vector operator*(const F2Vector& x) const;
    bool operator==(const F2Matrix& other) const = default;
    bool is_zero() const;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

struct Solution {
    F2Vector particular;
    std::vector<F2Vector> nullspace;
};

std::size_t rank(const F2Matrix& m);
/// Basis of {x : Mx = 0}.
std::vector<F2Vector> nullspace(const F2Matrix& m);
/// Solves Mx = b.  Empty when b is outside the column space.
std::optional<Solution> solve(const F2Matrix& m, const F2Vector& b);

/**
 * Element of the k-th exterior power of F2^n.  Coefficients are indexed by
 * k-subsets of {0,...,n-1} in colexicographic order, which coincides with
 * the numeric order of the subset bit masks.
 */
class WedgeVector {
public:
    static constexpr int kMaxAmbient = 16;

    WedgeVector() = default;
    WedgeVector(int ambient, int degree);
    static WedgeVector from_vector(const F2Vector& v);

    int ambient() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return coeffs_.size(); }

    bool coefficient(std::uint32_t subset_mask) const;
    void set_coefficient(std::uint32_t subset_mask, bool value = true);
    /// Subset mask of the i-th coefficient.
    std::uint32_t subset(std::size_t i) const;
    const F2Vector& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.is_zero(); }
    WedgeVector& operator^=(const WedgeVector& other);
    bool operator==(const WedgeVector& other) const = default;

private:
    std::size_t index_of(std::uint32_t subset_mask) const;

    int n_ = 0;
    int k_ = 0;
    F2Vector coeffs_;
};

std::uint64_t binomial(int n, int k);
WedgeVector wedge(const WedgeVector& u, const WedgeVector& v);
/// Plücker coordinates of the rows: coefficient on S is the mod-2 minor on columns S.
WedgeVector pluecker(const std::vector<F2Vector>& vectors, int ambient);
/// Generator of the top exterior power of span(basis).
WedgeVector line_generator(const std::vector<F2Vector>& basis, int ambient);

class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::size_t find(std::size_t x);
    /// Returns true when the two classes were distinct.
    bool unite(std::size_t a, std::size_t b);
    std::size_t count() const { return count_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t count_;
};

}  // namespace patchwork
