#include "modlie/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace modlie {

namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Reduced row-echelon form of `rows` (all of width `cols`), computed in place.
// Returns the pivot column of each of the first rank rows.
std::vector<std::size_t> reduce_to_rref(std::vector<GF2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

GF2Vector::GF2Vector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

GF2Vector GF2Vector::unit(std::size_t length, std::size_t index) {
    GF2Vector v(length);
    v.set(index);
    return v;
}

GF2Vector GF2Vector::from_support(std::size_t length, std::span<const std::size_t> support) {
    GF2Vector v(length);
    for (auto i : support) v.flip(i);
    return v;
}

void GF2Vector::set(std::size_t i, bool value) noexcept {
    const auto mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void GF2Vector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

bool GF2Vector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::size_t GF2Vector::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t GF2Vector::next_set(std::size_t from) const noexcept {
    if (from >= length_) return length_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w != 0) return std::min(length_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        if (++wi == words_.size()) return length_;
        w = words_[wi];
    }
}

std::vector<std::size_t> GF2Vector::support() const {
    std::vector<std::size_t> out;
    for (auto i = next_set(0); i < length_; i = next_set(i + 1)) out.push_back(i);
    return out;
}

bool GF2Vector::dot(const GF2Vector& other) const {
    if (other.length_ != length_) throw std::invalid_argument("GF2Vector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return (std::popcount(acc) & 1) != 0;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
    if (other.length_ != length_) {
        throw std::invalid_argument("GF2Vector: length mismatch (" + std::to_string(length_) + " vs " +
                                    std::to_string(other.length_) + ")");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, GF2Vector(cols)) {}

GF2Matrix::GF2Matrix(std::size_t cols, std::vector<GF2Vector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("GF2Matrix: row width mismatch");
    }
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void GF2Matrix::append_row(GF2Vector row) {
    if (row.size() != cols_) throw std::invalid_argument("GF2Matrix::append_row: width mismatch");
    rows_.push_back(std::move(row));
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (auto c = rows_[r].next_set(0); c < cols_; c = rows_[r].next_set(c + 1)) t.set(c, r);
    }
    return t;
}

GF2Vector GF2Matrix::apply(const GF2Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("GF2Matrix::apply: dimension mismatch");
    GF2Vector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].dot(x)) y.set(r);
    }
    return y;
}

GF2Matrix GF2Matrix::multiply(const GF2Matrix& rhs) const {
    if (rhs.rows() != cols_) throw std::invalid_argument("GF2Matrix::multiply: dimension mismatch");
    GF2Matrix out(rows_.size(), rhs.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (auto k = rows_[r].next_set(0); k < cols_; k = rows_[r].next_set(k + 1)) out.rows_[r] ^= rhs.rows_[k];
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.is_zero(); });
}

std::size_t rank(const GF2Matrix& m) {
    // Forward elimination only; orientation with fewer rows keeps the working set small.
    auto rows = m.rows() <= m.cols() ? m.row_data() : m.transpose().row_data();
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        std::size_t found = r;
        while (found < rows.size() && !rows[found].get(c)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[r], rows[found]);
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k].get(c)) rows[k] ^= rows[r];
        }
        ++r;
    }
    return r;
}

GF2Matrix nullspace(const GF2Matrix& m) {
    auto rows = m.row_data();
    const auto cols = m.cols();
    const auto pivots = reduce_to_rref(rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    auto basis = GF2Matrix::empty(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        GF2Vector v(cols);
        v.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (rows[i].get(free)) v.set(pivots[i]);
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                    ", matrix has " + std::to_string(m.rows()) + " rows");
    }
    const auto cols = m.cols();
    std::vector<GF2Vector> aug;
    aug.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        GF2Vector row(cols + 1);
        const auto& src = m.row(r);
        for (auto c = src.next_set(0); c < cols; c = src.next_set(c + 1)) row.set(c);
        row.set(cols, b.get(r));
        aug.push_back(std::move(row));
    }
    const auto pivots = reduce_to_rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    GF2Vector x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (aug[i].get(cols)) x.set(pivots[i]);
    }
    return x;
}

EchelonBasis::EchelonBasis(std::size_t length) : length_(length), pivot_row_(length, -1) {}

void EchelonBasis::reduce(GF2Vector& v) const {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: length mismatch");
    for (auto p = v.next_set(0); p < length_; p = v.next_set(p + 1)) {
        if (const auto r = pivot_row_[p]; r >= 0) v ^= basis_[static_cast<std::size_t>(r)];
    }
}

bool EchelonBasis::insert(GF2Vector v) {
    reduce(v);
    const auto p = v.next_set(0);
    if (p == length_) return false;
    pivot_row_[p] = static_cast<std::int32_t>(basis_.size());
    basis_.push_back(std::move(v));
    return true;
}

bool EchelonBasis::contains(GF2Vector v) const {
    reduce(v);
    return v.is_zero();
}

}  // namespace modlie
