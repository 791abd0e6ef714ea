#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace modlie {

/// Bit-packed vector over the two-element field.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t length);

    static GF2Vector unit(std::size_t length, std::size_t index);
    static GF2Vector from_support(std::size_t length, std::span<const std::size_t> support);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] std::size_t word_count() const noexcept { return words_.size(); }
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i, bool value = true) noexcept;
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void clear() noexcept;

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::size_t popcount() const noexcept;
    /// Index of the lowest set bit at or after `from`, or size() when there is none.
    [[nodiscard]] std::size_t next_set(std::size_t from = 0) const noexcept;
    [[nodiscard]] std::vector<std::size_t> support() const;
    /// Inner product sum(a_i b_i) over GF(2).
    [[nodiscard]] bool dot(const GF2Vector& other) const;

    GF2Vector& operator^=(const GF2Vector& other);
    /// Addition; over GF(2) this is the same as subtraction.
    GF2Vector& operator+=(const GF2Vector& other) { return *this ^= other; }
    friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a ^= b; }

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    friend auto operator<=>(const GF2Vector& a, const GF2Vector& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), stored as packed rows.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);
    GF2Matrix(std::size_t cols, std::vector<GF2Vector> rows);

    static GF2Matrix identity(std::size_t n);
    /// No rows, width cols.
    static GF2Matrix empty(std::size_t cols) { return GF2Matrix(cols, std::vector<GF2Vector>{}); }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const GF2Vector& row(std::size_t r) const { return rows_[r]; }
    [[nodiscard]] const std::vector<GF2Vector>& row_data() const noexcept { return rows_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
    void append_row(GF2Vector row);

    [[nodiscard]] GF2Matrix transpose() const;
    /// M * x, with x of length cols().
    [[nodiscard]] GF2Vector apply(const GF2Vector& x) const;
    [[nodiscard]] GF2Matrix multiply(const GF2Matrix& rhs) const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<GF2Vector> rows_;
};

/// Number of pivots in a row-echelon form of m.
[[nodiscard]] std::size_t rank(const GF2Matrix& m);

/// Kernel basis of m (vectors x with m x = 0), returned as rows. One vector per free column.
[[nodiscard]] GF2Matrix nullspace(const GF2Matrix& m);

/// One x with m x = b, or nullopt when b is outside the column space.
/// Throws std::invalid_argument when b.size() != m.rows().
[[nodiscard]] std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b);

/// Incrementally grown echelon basis of a subspace of GF(2)^n.
///
/// Each stored vector has a distinct lowest set bit (its pivot), so reducing a
/// vector walks its set bits upward and touches every pivot at most once.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

    /// Reduces v against the basis in place; the result is zero iff v was in the span.
    void reduce(GF2Vector& v) const;
    /// Inserts v when it is independent. Returns true when the rank grew.
    bool insert(GF2Vector v);
    [[nodiscard]] bool contains(GF2Vector v) const;
    [[nodiscard]] const std::vector<GF2Vector>& vectors() const noexcept { return basis_; }

private:
    std::size_t length_;
    std::vector<GF2Vector> basis_;
    std::vector<std::int32_t> pivot_row_;
};

}  // namespace modlie
