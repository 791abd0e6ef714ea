#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/cochain.hpp"
#include "modlie/gf2.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"

namespace modlie {

/// 2l-dimensional space with symplectic basis e_1..e_l, e_-l..e_-1.
///
/// Position p < l holds e_{p+1}; position p >= l holds e_{-(2l-p)}. The form pairs a
/// position with its mirror 2l-1-p and nothing else. In characteristic 2 the form is
/// symmetric and alternating at once.
class SymplecticSpace {
public:
    explicit SymplecticSpace(std::size_t l);

    [[nodiscard]] std::size_t rank() const noexcept { return l_; }
    [[nodiscard]] std::size_t dim() const noexcept { return 2 * l_; }
    /// Signed 1-based index (+i for e_i, -i for e_-i).
    [[nodiscard]] int signed_index(std::size_t position) const;
    [[nodiscard]] std::size_t position(int signed_index) const;
    [[nodiscard]] std::size_t dual(std::size_t position) const { return dim() - 1 - position; }
    [[nodiscard]] Weight weight(std::size_t position) const;

    [[nodiscard]] GF2Vector basis_vector(int signed_index) const;
    [[nodiscard]] bool form(const GF2Vector& u, const GF2Vector& v) const;
    [[nodiscard]] GF2Matrix gram() const;

private:
    std::size_t l_;
};

/// The exterior square of V with monomials e_a e_b (a < b in position order).
/// Elements are GF2Vectors over monomial indices.
class ExteriorSquare {
public:
    explicit ExteriorSquare(std::size_t l);

    [[nodiscard]] const SymplecticSpace& space() const noexcept { return space_; }
    [[nodiscard]] std::size_t dim() const noexcept { return pairs_.size(); }
    [[nodiscard]] std::size_t index(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::pair<std::size_t, std::size_t> pair(std::size_t index) const { return pairs_.at(index); }
    /// e_a e_b for signed indices; zero when a == b.
    [[nodiscard]] GF2Vector monomial(int a, int b) const;
    [[nodiscard]] Weight weight(std::size_t index) const;

    /// u v for u, v in V.
    [[nodiscard]] GF2Vector wedge(const GF2Vector& u, const GF2Vector& v) const;
    /// sum_i e_i e_-i.
    [[nodiscard]] GF2Vector form_element() const;

    /// {v1v2, v3v4} = (v1,v3)v2v4 + (v1,v4)v2v3 + (v2,v3)v1v4 + (v2,v4)v1v3, extended bilinearly.
    [[nodiscard]] GF2Vector poisson_bracket(const GF2Vector& x, const GF2Vector& y) const;
    /// {v1v2, v} = (v1,v)v2 + (v2,v)v1 in V, extended linearly in the first argument.
    [[nodiscard]] GF2Vector contract(const GF2Vector& x, const GF2Vector& v) const;
    /// (w1, w2) summed over monomials of x: the form applied to each factor pair.
    [[nodiscard]] bool pairing(const GF2Vector& x) const;

    /// Induced action g(v1 v2) = (g v1)(g v2) of a linear map on V.
    [[nodiscard]] GF2Vector apply(const GF2Matrix& g, const GF2Vector& x) const;

private:
    SymplecticSpace space_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::size_t> index_;  // a * 2l + b -> monomial index
};

/// Lie algebra on Lambda^2 V / <e_1e_-1 + ... + e_le_-l> with the Poisson bracket, for odd l.
///
/// Basis: every monomial except e_l e_-l, which is rewritten as e_1e_-1 + ... + e_{l-1}e_{-(l-1)}.
class QuotientModel {
public:
    /// Throws std::invalid_argument for even l or l < 3.
    explicit QuotientModel(std::size_t l);

    [[nodiscard]] std::size_t rank() const noexcept { return wedge_.space().rank(); }
    [[nodiscard]] const LieAlgebra& algebra() const noexcept { return algebra_; }
    [[nodiscard]] const ExteriorSquare& exterior() const noexcept { return wedge_; }
    [[nodiscard]] const SymplecticSpace& space() const noexcept { return wedge_.space(); }

    /// Monomial index in Lambda^2 V of basis vector i.
    [[nodiscard]] std::size_t monomial_of(std::size_t basis_index) const { return monomials_.at(basis_index); }
    /// Basis index of the monomial e_a e_b (signed indices); throws for e_l e_-l.
    [[nodiscard]] std::size_t basis_index(int a, int b) const;
    /// Lambda^2 V element -> quotient coordinates.
    [[nodiscard]] GF2Vector reduce(const GF2Vector& x) const;
    /// Quotient coordinates -> representative with no e_l e_-l term.
    [[nodiscard]] GF2Vector lift(const GF2Vector& y) const;

private:
    ExteriorSquare wedge_;
    std::size_t eliminated_;
    std::vector<std::size_t> monomials_;
    std::vector<std::size_t> basis_of_monomial_;
    LieAlgebra algebra_;
};

/// phi(w1w2, w3w4) for a vector v in V, the eight-term formula
///   (v,w1)(v,w3)w2w4 + (v,w2)(v,w3)w1w4 + (v,w1)(v,w4)w2w3 + (v,w2)(v,w4)w1w3
///   + (v,w1)(w3,w4)vw2 + (v,w2)(w3,w4)vw1 + (v,w3)(w1,w2)vw4 + (v,w4)(w1,w2)vw3,
/// extended bilinearly to Lambda^2 V. Values are not reduced.
[[nodiscard]] GF2Vector phi_value(const ExteriorSquare& ext, const GF2Vector& v, const GF2Vector& x,
                                  const GF2Vector& y);

/// Same map through Poisson brackets: {x,v}{y,v} + v{v, (y)x + (x)y}.
[[nodiscard]] GF2Vector phi_value_poisson(const ExteriorSquare& ext, const GF2Vector& v, const GF2Vector& x,
                                          const GF2Vector& y);

/// The 2-cochain Phi(v) on the quotient model, values reduced modulo the ideal.
/// The formula is quadratic in v, so it is evaluated directly for any v, never by linearity.
[[nodiscard]] Cochain phi(const GF2Vector& v, const QuotientModel& model);
[[nodiscard]] Cochain phi(int signed_index, const QuotientModel& model);

/// t_v(x) = x + (x,v) v as a matrix acting on column vectors. Throws for v = 0.
[[nodiscard]] GF2Matrix transvection(const SymplecticSpace& space, const GF2Vector& v);

struct IsomorphismResult {
    std::optional<GF2Matrix> map;  // target coordinates x source coordinates
    std::string diagnostic;
};

/// Searches for a weight-preserving Lie algebra isomorphism source -> target.
///
/// One-dimensional weight spaces are forced to map basis vector to basis vector (the
/// only invertible scalar in GF(2) is 1). With those fixed, theta([x,y]) = [theta x,
/// theta y] is linear in the entries of the larger blocks; solutions are tried until an
/// invertible one passes the exhaustive homomorphism check.
[[nodiscard]] IsomorphismResult find_graded_isomorphism(const LieAlgebra& source, const LieAlgebra& target);

/// Exhaustive check that theta is a bijective bracket-preserving map.
[[nodiscard]] bool verify_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const GF2Matrix& theta);

}  // namespace modlie
