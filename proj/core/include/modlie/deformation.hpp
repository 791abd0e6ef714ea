#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlie/cochain.hpp"
#include "modlie/gf2.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"
#include "modlie/symplectic.hpp"

namespace modlie {

/// c0 + c1 t + c2 t^2 over GF(2) with t^3 = 0.
struct TruncatedScalar {
    bool c0 = false;
    bool c1 = false;
    bool c2 = false;

    static constexpr TruncatedScalar t() { return {false, true, false}; }

    friend constexpr TruncatedScalar operator+(TruncatedScalar a, TruncatedScalar b) {
        return {a.c0 != b.c0, a.c1 != b.c1, a.c2 != b.c2};
    }
    friend constexpr TruncatedScalar operator*(TruncatedScalar a, TruncatedScalar b) {
        return {a.c0 && b.c0, (a.c0 && b.c1) != (a.c1 && b.c0),
                ((a.c0 && b.c2) != (a.c1 && b.c1)) != (a.c2 && b.c0)};
    }
    friend constexpr bool operator==(TruncatedScalar, TruncatedScalar) = default;
};

/// Vector over GF(2)[t]/(t^3): coefficient vectors of 1, t, t^2.
using TruncatedVector = std::array<GF2Vector, 3>;

/// The bracket f_t(x, y) = [x, y] + t psi(x, y) over GF(2)[t]/(t^3).
class DeformedAlgebra {
public:
    DeformedAlgebra(LieAlgebra base, const Cochain& psi);

    [[nodiscard]] const LieAlgebra& base() const noexcept { return base_; }
    [[nodiscard]] const Cochain& psi() const noexcept { return psi_; }
    [[nodiscard]] std::size_t dim() const noexcept { return base_.dim(); }

    [[nodiscard]] TruncatedVector bracket(std::size_t i, std::size_t j) const;
    [[nodiscard]] TruncatedVector bracket(const TruncatedVector& x, const TruncatedVector& y) const;
    [[nodiscard]] TruncatedVector embed(const GF2Vector& v) const;

private:
    [[nodiscard]] const GF2Vector& psi_at(std::size_t i, std::size_t j) const { return psi_table_[i * dim() + j]; }

    LieAlgebra base_;
    Cochain psi_;
    std::vector<GF2Vector> psi_table_;
};

/// Builds f_t. Validity is established separately by verify_deformation.
[[nodiscard]] DeformedAlgebra deform_bracket(const LieAlgebra& algebra, const Cochain& psi);

struct DeformationReport {
    bool alternating = true;
    bool passed = true;
    /// Jacobi expression of f_t split by powers of t, as 3-cochains.
    Cochain order0;
    Cochain order1;  // equals d psi
    Cochain order2;  // equals psi cup psi
    std::optional<std::array<std::size_t, 3>> failing_triple;
    std::size_t failing_order = 0;
};

[[nodiscard]] DeformationReport verify_deformation(const DeformedAlgebra& deformed);

/// (psi cup psi)(x,y,z) = psi(psi(x,y),z) + psi(psi(y,z),x) + psi(psi(z,x),y).
[[nodiscard]] Cochain cup_square(const LieAlgebra& algebra, const Cochain& psi);

enum class Verdict { Zero, Coboundary, Nontrivial };
std::string to_string(Verdict v);

struct ObstructionReport {
    Weight weight;  // of the class
    Cochain representative{2, 0};
    Verdict verdict = Verdict::Zero;
    std::optional<Weight> obstruction_weight;
    std::optional<std::array<std::size_t, 3>> witness_triple;
    GF2Vector witness_value;
    std::optional<Cochain> preimage;  // set for Coboundary
    /// Extra checks recorded by the scans.
    bool central_valued = false;
    bool vanishes_on_center = false;
    bool deformation_verified = false;
};

/// Zero if psi cup psi = 0, else Coboundary / Nontrivial. Throws for non-cocycles.
[[nodiscard]] ObstructionReport obstruction_verdict(const LieAlgebra& algebra, const Cochain& psi);

/// sum over unordered root pairs {g, d} with g + d = mu of E*_-g ^ E*_-d (x) z on the
/// Chevalley algebra of type D_l, l even. z is tried in the order
/// H_{l-1} + H_{l-3} + ... + H_1, then the remaining nonzero central elements; the first
/// choice giving a cocycle outside B^2_mu is returned. Throws std::domain_error when
/// there are no pairs or no choice works.
[[nodiscard]] Cochain build_even_cocycle(const LieAlgebra& algebra, const Weight& mu);

/// Every value of psi on basis pairs lies in the centre.
[[nodiscard]] bool central_valued(const LieAlgebra& algebra, const Cochain& psi);
/// psi(c, x) = 0 for every central c and basis vector x.
[[nodiscard]] bool vanishes_on_center(const LieAlgebra& algebra, const Cochain& psi);

/// One report per weight +-2 eps_i, representatives Phi(e_{+-i}). Odd l >= 5.
[[nodiscard]] std::vector<ObstructionReport> rigidity_scan(const QuotientModel& model);

/// Rigidity scan on any algebra using representative() for every nonzero H^2 weight.
[[nodiscard]] std::vector<ObstructionReport> rigidity_scan_generic(const LieAlgebra& algebra, std::size_t jobs = 1);

/// One report per nonzero H^2 weight of the Chevalley algebra D_l, l even >= 4. Each
/// representative is built by build_even_cocycle; the report also records the structural
/// checks and whether f_t passes verify_deformation.
[[nodiscard]] std::vector<ObstructionReport> integrability_scan(const LieAlgebra& algebra, std::size_t jobs = 1);

/// {l, parity, weight, verdict, witness triple indices, witness value support, ...}
[[nodiscard]] nlohmann::json to_json(const ObstructionReport& report, const LieAlgebra& algebra,
                                     const RootSystem& system);

}  // namespace modlie
