#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlie/cochain.hpp"
#include "modlie/gf2.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"

namespace modlie {

/// Standard basis of C^n_mu (n in {1,2,3}), ordered by argument set then value index.
[[nodiscard]] std::vector<BasisCochain> cochain_basis(const LieAlgebra& algebra, std::size_t degree, const Weight& mu);

/// Chevalley-Eilenberg differential with adjoint coefficients. In characteristic 2
/// every sign is +1:
///   (d phi)(x_0..x_n) = sum_i [x_i, phi(..^x_i..)] + sum_{i<j} phi([x_i,x_j], ..^x_i..^x_j..)
/// Degree 1 or 2 only.
[[nodiscard]] Cochain differential(const LieAlgebra& algebra, const Cochain& phi);

/// Weight-mu part of the complex C^1 -> C^2 -> C^3.
///
/// C^3 is indexed by the support of d(C^2_mu) only; coordinates outside it are never
/// hit by a coboundary, which is all that rank and membership questions need.
class WeightBlock {
public:
    WeightBlock(const LieAlgebra& algebra, Weight mu);
    WeightBlock(const LieAlgebra& algebra, Weight mu, std::vector<BasisCochain> c2);

    [[nodiscard]] const Weight& weight() const noexcept { return mu_; }
    [[nodiscard]] const std::vector<BasisCochain>& c1() const noexcept { return c1_; }
    [[nodiscard]] const std::vector<BasisCochain>& c2() const noexcept { return c2_; }
    [[nodiscard]] const std::vector<BasisCochain>& c3_support() const noexcept { return c3_; }

    /// Matrix of d^1 : C^1_mu -> C^2_mu (rows indexed by c2()).
    [[nodiscard]] GF2Matrix d1() const { return d1_images_.transpose(); }
    /// Matrix of d^2 : C^2_mu -> C^3_mu (rows indexed by c3_support()).
    [[nodiscard]] GF2Matrix d2() const { return d2_images_.transpose(); }
    /// Rows are d^1 of each C^1 basis element, in C^2 coordinates.
    [[nodiscard]] const GF2Matrix& d1_images() const noexcept { return d1_images_; }
    [[nodiscard]] const GF2Matrix& d2_images() const noexcept { return d2_images_; }

    [[nodiscard]] std::size_t dim_c2() const noexcept { return c2_.size(); }
    [[nodiscard]] std::size_t rank_d1() const noexcept { return rank_d1_; }
    [[nodiscard]] std::size_t rank_d2() const noexcept { return rank_d2_; }
    [[nodiscard]] std::size_t dim_z2() const noexcept { return c2_.size() - rank_d2_; }
    [[nodiscard]] std::size_t dim_b2() const noexcept { return rank_d1_; }
    [[nodiscard]] std::size_t dim_h2() const noexcept { return dim_z2() - dim_b2(); }

private:
    void build(const LieAlgebra& algebra);

    Weight mu_;
    std::vector<BasisCochain> c1_, c2_, c3_;
    GF2Matrix d1_images_, d2_images_;
    std::size_t rank_d1_ = 0;
    std::size_t rank_d2_ = 0;
};

/// dim ker(d^2 on C^2_mu) - rank(d^1 into C^2_mu). Degree 2 only.
[[nodiscard]] std::size_t cohomology_dim(const LieAlgebra& algebra, std::size_t degree, const Weight& mu);

struct SurveyEntry {
    Weight weight;
    std::size_t dim_c2 = 0;
    std::size_t dim_z2 = 0;
    std::size_t dim_b2 = 0;
    std::size_t dim_h2 = 0;
};

struct H2Survey {
    std::size_t weights_scanned = 0;
    /// Weights with nonzero H^2, in increasing weight order.
    std::vector<SurveyEntry> nonzero;

    [[nodiscard]] std::size_t total() const;
    [[nodiscard]] std::map<Weight, std::size_t> dimensions() const;
};

/// Scans every weight realised by a C^2 basis cochain. Blocks are independent and are
/// split across `jobs` worker threads; the result does not depend on `jobs`.
[[nodiscard]] H2Survey h2_weight_survey(const LieAlgebra& algebra, std::size_t jobs = 1);

/// JSON list {weight, simple_roots, dim_c2, dim_z2, dim_b2, dim_h2} plus totals.
[[nodiscard]] nlohmann::json to_json(const H2Survey& survey, const RootSystem& system);

struct CoboundaryResult {
    bool is_coboundary = false;
    std::optional<Cochain> preimage;
};

/// Whether a weight-homogeneous cocycle of degree 2 or 3 lies in the image of d.
/// Throws std::invalid_argument for non-cocycles (degree 2) or mixed weights.
[[nodiscard]] CoboundaryResult is_coboundary(const LieAlgebra& algebra, const Cochain& phi);

/// Cocycles whose classes form a basis of H^2_mu, each in normal form modulo B^2_mu.
///
/// The normal form prefers coordinates valued in nonzero-weight basis vectors as
/// elimination pivots, so a class containing a cocycle valued in the weight-zero part
/// is represented by one.
[[nodiscard]] std::vector<Cochain> cohomology_basis(const LieAlgebra& algebra, const Weight& mu);

/// First element of cohomology_basis. Throws std::domain_error when H^2_mu = 0.
[[nodiscard]] Cochain representative(const LieAlgebra& algebra, const Weight& mu);

}  // namespace modlie
