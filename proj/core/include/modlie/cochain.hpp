#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "modlie/gf2.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"

namespace modlie {

/// Sorted argument indices of an alternating cochain; slots beyond the degree are 0.
using CochainKey = std::array<std::uint16_t, 3>;

[[nodiscard]] CochainKey make_key(std::initializer_list<std::size_t> indices);

/// Alternating n-linear map L x ... x L -> L (n <= 3), stored sparsely on sorted
/// argument sets. Keys are sets, so a repeated argument always evaluates to zero.
class Cochain {
public:
    Cochain(std::size_t degree, std::size_t dim);

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::map<CochainKey, GF2Vector>& values() const noexcept { return values_; }
    [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }
    [[nodiscard]] std::size_t support_size() const noexcept { return values_.size(); }

    /// Adds value at the given arguments (any order). Repeated arguments are ignored.
    void add(std::span<const std::size_t> args, const GF2Vector& value);
    void add(std::initializer_list<std::size_t> args, const GF2Vector& value);
    /// Toggles the coefficient of b_value at a sorted key.
    void toggle(const CochainKey& key, std::size_t value);

    /// Value on basis arguments (any order).
    [[nodiscard]] GF2Vector at(std::span<const std::size_t> args) const;
    [[nodiscard]] GF2Vector at(std::initializer_list<std::size_t> args) const;
    /// Multilinear evaluation on arbitrary vectors (degree 2 only).
    [[nodiscard]] GF2Vector evaluate(const GF2Vector& x, const GF2Vector& y) const;

    Cochain& operator+=(const Cochain& other);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    std::size_t degree_;
    std::size_t dim_;
    std::map<CochainKey, GF2Vector> values_;
};

/// One element of the standard basis of C^n: the dual of an argument set tensored with b_value.
struct BasisCochain {
    CochainKey key{};
    std::uint16_t value = 0;

    friend auto operator<=>(const BasisCochain&, const BasisCochain&) = default;
};

/// weight(b_value) - sum of the argument weights.
[[nodiscard]] Weight basis_cochain_weight(const LieAlgebra& algebra, std::size_t degree, const BasisCochain& c);

/// Weight of a nonzero weight-homogeneous cochain; nullopt when zero or mixed.
[[nodiscard]] std::optional<Weight> homogeneous_weight(const LieAlgebra& algebra, const Cochain& c);

/// Expands coordinates over a list of basis cochains into a cochain.
[[nodiscard]] Cochain from_coordinates(const LieAlgebra& algebra, std::size_t degree,
                                       const std::vector<BasisCochain>& basis, const GF2Vector& coords);

/// Coordinates of c over the given basis, or nullopt if c is not in its span.
[[nodiscard]] std::optional<GF2Vector> to_coordinates(const Cochain& c, const std::vector<BasisCochain>& basis);

}  // namespace modlie
