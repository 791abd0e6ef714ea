#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlie/gf2.hpp"
#include "modlie/root_system.hpp"

namespace modlie {

/// Tag attached to a basis vector so that reports can name it.
struct BasisLabel {
    enum class Kind { Cartan, RootVector, Monomial };

    Kind kind = Kind::Cartan;
    std::size_t cartan_index = 0;  // 1-based, for H_i
    Weight root;                   // for E_alpha
    std::pair<int, int> monomial;  // signed 1-based indices for e_a e_b
    bool coset = false;            // image in a central quotient

    static BasisLabel cartan(std::size_t i) { return {Kind::Cartan, i, {}, {}, false}; }
    static BasisLabel root_vector(Weight alpha) { return {Kind::RootVector, 0, std::move(alpha), {}, false}; }
    static BasisLabel wedge(int a, int b) { return {Kind::Monomial, 0, {}, {a, b}, false}; }
};

std::string to_string(const BasisLabel& label);

/// Finite-dimensional Lie algebra over GF(2) given by structure constants on a basis,
/// with a torus weight attached to every basis vector.
class LieAlgebra {
public:
    using BracketEntries = std::map<std::pair<std::size_t, std::size_t>, GF2Vector>;

    LieAlgebra() = default;
    /// `brackets` holds [b_i, b_j] for i < j; missing pairs bracket to zero.
    LieAlgebra(std::string name, std::vector<BasisLabel> labels, std::vector<Weight> weights,
               const BracketEntries& brackets);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
    /// Rank of the weight lattice (l).
    [[nodiscard]] std::size_t weight_rank() const noexcept { return weight_rank_; }
    [[nodiscard]] const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] const std::vector<BasisLabel>& labels() const noexcept { return labels_; }
    [[nodiscard]] const Weight& weight(std::size_t i) const { return weights_.at(i); }
    [[nodiscard]] const std::vector<Weight>& weights() const noexcept { return weights_; }

    [[nodiscard]] const GF2Vector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    [[nodiscard]] std::span<const std::uint16_t> bracket_support(std::size_t i, std::size_t j) const {
        return support_[i * dim() + j];
    }
    [[nodiscard]] GF2Vector bracket(const GF2Vector& x, const GF2Vector& y) const;
    /// Basis vectors c with [c, b_k] != 0.
    [[nodiscard]] std::span<const std::uint16_t> partners(std::size_t k) const { return partners_[k]; }
    /// Pairs i < j with b_m in the support of [b_i, b_j].
    [[nodiscard]] std::span<const std::pair<std::uint16_t, std::uint16_t>> producers(std::size_t m) const {
        return producers_[m];
    }

    /// Structure constants for i < j in basis order.
    [[nodiscard]] BracketEntries bracket_entries() const;
    /// Copy with [b_i, b_j] replaced by value (mutation testing).
    [[nodiscard]] LieAlgebra with_bracket(std::size_t i, std::size_t j, const GF2Vector& value) const;

    [[nodiscard]] GF2Vector unit(std::size_t i) const { return GF2Vector::unit(dim(), i); }
    [[nodiscard]] std::string describe(const GF2Vector& v) const;

private:
    std::string name_;
    std::size_t weight_rank_ = 0;
    std::vector<BasisLabel> labels_;
    std::vector<Weight> weights_;
    std::vector<GF2Vector> table_;
    std::vector<std::vector<std::uint16_t>> support_;
    std::vector<std::vector<std::uint16_t>> partners_;
    std::vector<std::vector<std::pair<std::uint16_t, std::uint16_t>>> producers_;
};

/// Subspace of GF(2)^ambient with independent basis rows.
struct Subspace {
    std::size_t ambient = 0;
    GF2Matrix basis;

    [[nodiscard]] std::size_t dim() const noexcept { return basis.rows(); }
    [[nodiscard]] bool contains(const GF2Vector& v) const;
    /// Same span as the other subspace.
    [[nodiscard]] bool same_span(const Subspace& other) const;
};

/// Lie algebra of type D_l over GF(2) from a Chevalley basis H_1..H_l, E_alpha.
///
/// Every simply-laced structure constant N_{alpha,beta} is +-1, so over GF(2) no sign
/// convention is needed and the table below is the reduction of any Chevalley order.
/// H_alpha for non-simple alpha is reduced from simple-root coordinates, so some
/// [E_alpha, E_-alpha] vanish (coefficients 2 disappear).
[[nodiscard]] LieAlgebra build_chevalley_D(std::size_t l);

/// {z : [z, b] = 0 for every basis vector b}.
[[nodiscard]] Subspace center(const LieAlgebra& algebra);

/// Central quotient together with the projection from the original coordinates.
///
/// Each central generator is reduced so that its highest index is a pivot no other
/// generator touches; the pivots are dropped and the remaining basis vectors serve as
/// coset representatives.
class CentralQuotient {
public:
    /// Throws std::invalid_argument when z is not central.
    CentralQuotient(const LieAlgebra& algebra, const Subspace& z);

    [[nodiscard]] const LieAlgebra& algebra() const noexcept { return quotient_; }
    [[nodiscard]] const std::vector<std::size_t>& kept() const noexcept { return kept_; }
    [[nodiscard]] GF2Vector project(const GF2Vector& v) const;

private:
    std::vector<GF2Vector> generators_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> kept_;
    std::size_t ambient_ = 0;
    LieAlgebra quotient_;
};

[[nodiscard]] LieAlgebra quotient_by_center(const LieAlgebra& algebra, const Subspace& z);

struct JacobiReport {
    bool passed = true;
    std::optional<std::array<std::size_t, 3>> failing_triple;
    GF2Vector value;
};

/// Exhaustive check of [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on basis triples.
[[nodiscard]] JacobiReport check_jacobi(const LieAlgebra& algebra);

/// Every bracket entry of weights (mu, nu) lies in weight mu + nu.
[[nodiscard]] bool check_weight_additivity(const LieAlgebra& algebra);

[[nodiscard]] std::map<Weight, Subspace> weight_decomposition(const LieAlgebra& algebra);

/// JSON document {name, dim, labels, weights, brackets: [[i, j, [support]]]}.
[[nodiscard]] nlohmann::json to_json(const LieAlgebra& algebra);

}  // namespace modlie
