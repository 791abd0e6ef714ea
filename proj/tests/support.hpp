#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlie/gf2.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"
#include "modlie/symplectic.hpp"

namespace modlie::testing {

inline GF2Vector bits(const std::string& s) {
    GF2Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(i);
    }
    return v;
}

inline GF2Matrix matrix(std::initializer_list<std::string> rows) {
    std::vector<GF2Vector> r;
    for (const auto& s : rows) r.push_back(bits(s));
    const auto cols = r.empty() ? 0 : r.front().size();
    return GF2Matrix(cols, std::move(r));
}

inline GF2Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    GF2Vector v(n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng)) v.set(i);
    }
    return v;
}

inline GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    auto m = GF2Matrix::empty(cols);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(random_vector(cols, rng));
    return m;
}

/// Basis index of H_i in a Chevalley algebra (1-based i).
inline std::size_t cartan(std::size_t i) { return i - 1; }

/// Basis index of E_alpha.
inline std::size_t root_vector(const LieAlgebra& algebra, const Weight& alpha) {
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        const auto& lab = algebra.label(i);
        if (lab.kind == BasisLabel::Kind::RootVector && lab.root == alpha) return i;
    }
    throw std::out_of_range("no root vector " + to_string(alpha));
}

/// Sum of H_i over the listed 1-based indices.
inline GF2Vector cartan_sum(std::size_t dim, std::initializer_list<std::size_t> indices) {
    GF2Vector v(dim);
    for (auto i : indices) v.set(i - 1);
    return v;
}

inline Weight eps(std::size_t l, std::size_t i, int k = 1) { return Weight::epsilon(l, i, k); }

}  // namespace modlie::testing
