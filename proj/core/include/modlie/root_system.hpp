#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modlie {

/// Integer vector in the epsilon-coordinate lattice Z^l. Torus characters are
/// never reduced modulo 2: 4*eps_4 and 0 are different weights.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::size_t l) : coords(l, 0) {}
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    /// eps_i, 1-based as in the usual notation.
    static Weight epsilon(std::size_t l, std::size_t i, int coefficient = 1);

    [[nodiscard]] std::size_t rank() const noexcept { return coords.size(); }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] int dot(const Weight& other) const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a);
    friend Weight operator*(int k, Weight a);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Renders e.g. "2e4" or "e1-e3" (e = epsilon).
std::string to_string(const Weight& w);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

/// Root system of type D_l: all +-eps_i +- eps_j (i < j), lexicographically ordered.
class RootSystem {
public:
    /// Throws std::invalid_argument for l < 3.
    explicit RootSystem(std::size_t l);

    [[nodiscard]] std::size_t rank() const noexcept { return l_; }
    [[nodiscard]] const std::vector<Weight>& roots() const noexcept { return roots_; }
    /// alpha_1..alpha_l stored 0-based: alpha_i = eps_i - eps_{i+1} for i < l,
    /// alpha_l = eps_{l-1} + eps_l, so alpha_l hangs off alpha_{l-2}.
    [[nodiscard]] const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
    [[nodiscard]] const Weight& simple_root(std::size_t i) const { return simple_.at(i - 1); }

    [[nodiscard]] bool is_root(const Weight& w) const;
    /// Position of w in roots(), or nullopt.
    [[nodiscard]] std::optional<std::size_t> index_of(const Weight& w) const;

    /// s_i(x) = x - <x, alpha_i> alpha_i, with i 1-based.
    [[nodiscard]] Weight reflect(const Weight& x, std::size_t i) const;

    /// Coefficients c with w = sum c_i alpha_i, or nullopt when w is outside the root lattice.
    [[nodiscard]] std::optional<std::vector<int>> express_in_simple_roots(const Weight& w) const;

private:
    std::size_t l_;
    std::vector<Weight> roots_;
    std::vector<Weight> simple_;
};

/// Cartan number <a, b> = 2(a,b)/(b,b). For roots of D_l this is the dot product.
[[nodiscard]] int cartan_number(const Weight& a, const Weight& b);

/// Closure of {w} under the simple reflections (breadth first).
[[nodiscard]] std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& system);

/// Renders simple-root coefficients as e.g. "a4+a5+2a3".
std::string simple_root_string(const std::vector<int>& coefficients);

}  // namespace modlie
