#include "modlie/symplectic.hpp"

#include <map>
#include <stdexcept>

namespace modlie {

SymplecticSpace::SymplecticSpace(std::size_t l) : l_(l) {
    if (l == 0) throw std::invalid_argument("SymplecticSpace: l must be positive");
}

int SymplecticSpace::signed_index(std::size_t position) const {
    if (position >= dim()) throw std::out_of_range("SymplecticSpace: position out of range");
    return position < l_ ? static_cast<int>(position + 1) : -static_cast<int>(dim() - position);
}

std::size_t SymplecticSpace::position(int signed_index) const {
    const auto magnitude = static_cast<std::size_t>(signed_index < 0 ? -signed_index : signed_index);
    if (magnitude == 0 || magnitude > l_) throw std::out_of_range("SymplecticSpace: index out of range");
    return signed_index > 0 ? magnitude - 1 : dim() - magnitude;
}

Weight SymplecticSpace::weight(std::size_t position) const {
    const int s = signed_index(position);
    return Weight::epsilon(l_, static_cast<std::size_t>(s < 0 ? -s : s), s < 0 ? -1 : 1);
}

GF2Vector SymplecticSpace::basis_vector(int signed_index) const { return GF2Vector::unit(dim(), position(signed_index)); }

bool SymplecticSpace::form(const GF2Vector& u, const GF2Vector& v) const {
    bool s = false;
    for (auto p = u.next_set(0); p < dim(); p = u.next_set(p + 1)) s ^= v.get(dual(p));
    return s;
}

GF2Matrix SymplecticSpace::gram() const {
    GF2Matrix g(dim(), dim());
    for (std::size_t p = 0; p < dim(); ++p) g.set(p, dual(p));
    return g;
}

ExteriorSquare::ExteriorSquare(std::size_t l) : space_(l) {
    const auto n = space_.dim();
    index_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            index_[a * n + b] = index_[b * n + a] = pairs_.size();
            pairs_.emplace_back(a, b);
        }
    }
}

std::size_t ExteriorSquare::index(std::size_t a, std::size_t b) const {
    if (a == b || a >= space_.dim() || b >= space_.dim()) throw std::out_of_range("ExteriorSquare::index");
    return index_[a * space_.dim() + b];
}

GF2Vector ExteriorSquare::monomial(int a, int b) const {
    if (a == b) return GF2Vector(dim());
    return GF2Vector::unit(dim(), index(space_.position(a), space_.position(b)));
}

Weight ExteriorSquare::weight(std::size_t index) const {
    const auto [a, b] = pairs_.at(index);
    return space_.weight(a) + space_.weight(b);
}

GF2Vector ExteriorSquare::wedge(const GF2Vector& u, const GF2Vector& v) const {
    const auto n = space_.dim();
    GF2Vector out(dim());
    for (auto p = u.next_set(0); p < n; p = u.next_set(p + 1)) {
        for (auto q = v.next_set(0); q < n; q = v.next_set(q + 1)) {
            if (p != q) out.flip(index(p, q));
        }
    }
    return out;
}

GF2Vector ExteriorSquare::form_element() const {
    GF2Vector out(dim());
    for (std::size_t p = 0; p < space_.rank(); ++p) out.flip(index(p, space_.dual(p)));
    return out;
}

GF2Vector ExteriorSquare::poisson_bracket(const GF2Vector& x, const GF2Vector& y) const {
    const auto n = space_.dim();
    GF2Vector out(dim());
    auto add = [&](std::size_t p, std::size_t q) {
        if (p != q) out.flip(index(p, q));
    };
    for (auto i = x.next_set(0); i < dim(); i = x.next_set(i + 1)) {
        const auto [v1, v2] = pairs_[i];
        for (auto j = y.next_set(0); j < dim(); j = y.next_set(j + 1)) {
            const auto [v3, v4] = pairs_[j];
            if (v1 + v3 == n - 1) add(v2, v4);
            if (v1 + v4 == n - 1) add(v2, v3);
            if (v2 + v3 == n - 1) add(v1, v4);
            if (v2 + v4 == n - 1) add(v1, v3);
        }
    }
    return out;
}

GF2Vector ExteriorSquare::contract(const GF2Vector& x, const GF2Vector& v) const {
    GF2Vector out(space_.dim());
    for (auto i = x.next_set(0); i < dim(); i = x.next_set(i + 1)) {
        const auto [a, b] = pairs_[i];
        if (v.get(space_.dual(a))) out.flip(b);
        if (v.get(space_.dual(b))) out.flip(a);
    }
    return out;
}

bool ExteriorSquare::pairing(const GF2Vector& x) const {
    bool s = false;
    for (auto i = x.next_set(0); i < dim(); i = x.next_set(i + 1)) {
        const auto [a, b] = pairs_[i];
        s ^= (b == space_.dual(a));
    }
    return s;
}

GF2Vector ExteriorSquare::apply(const GF2Matrix& g, const GF2Vector& x) const {
    const auto columns = g.transpose();
    GF2Vector out(dim());
    for (auto i = x.next_set(0); i < dim(); i = x.next_set(i + 1)) {
        const auto [a, b] = pairs_[i];
        out ^= wedge(columns.row(a), columns.row(b));
    }
    return out;
}

QuotientModel::QuotientModel(std::size_t l) : wedge_(l), eliminated_(0) {
    if (l < 3 || l % 2 == 0) {
        throw std::invalid_argument("QuotientModel: the exterior-square model needs odd l >= 3, got " + std::to_string(l));
    }
    const auto& space = wedge_.space();
    eliminated_ = wedge_.index(space.position(static_cast<int>(l)), space.position(-static_cast<int>(l)));

    basis_of_monomial_.assign(wedge_.dim(), wedge_.dim());
    std::vector<BasisLabel> labels;
    std::vector<Weight> weights;
    for (std::size_t m = 0; m < wedge_.dim(); ++m) {
        if (m == eliminated_) continue;
        basis_of_monomial_[m] = monomials_.size();
        monomials_.push_back(m);
        const auto [a, b] = wedge_.pair(m);
        labels.push_back(BasisLabel::wedge(space.signed_index(a), space.signed_index(b)));
        weights.push_back(wedge_.weight(m));
    }

    const auto n = monomials_.size();
    LieAlgebra::BracketEntries brackets;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto v = reduce(wedge_.poisson_bracket(GF2Vector::unit(wedge_.dim(), monomials_[i]),
                                                   GF2Vector::unit(wedge_.dim(), monomials_[j])));
            if (!v.is_zero()) brackets.emplace(std::pair{i, j}, std::move(v));
        }
    }
    algebra_ = LieAlgebra("L2V/I(" + std::to_string(l) + ")", std::move(labels), std::move(weights), brackets);
}

std::size_t QuotientModel::basis_index(int a, int b) const {
    const auto& space = wedge_.space();
    const auto m = wedge_.index(space.position(a), space.position(b));
    if (m == eliminated_) throw std::invalid_argument("QuotientModel: e_l e_-l is not a basis vector");
    return basis_of_monomial_[m];
}

GF2Vector QuotientModel::reduce(const GF2Vector& x) const {
    auto w = x;
    if (w.get(eliminated_)) w ^= wedge_.form_element();
    GF2Vector out(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) out.set(i, w.get(monomials_[i]));
    return out;
}

GF2Vector QuotientModel::lift(const GF2Vector& y) const {
    GF2Vector out(wedge_.dim());
    for (auto i = y.next_set(0); i < y.size(); i = y.next_set(i + 1)) out.set(monomials_[i]);
    return out;
}

GF2Vector phi_value(const ExteriorSquare& ext, const GF2Vector& v, const GF2Vector& x, const GF2Vector& y) {
    const auto& space = ext.space();
    const auto n = space.dim();
    GF2Vector out(ext.dim());
    auto mono = [&](std::size_t p, std::size_t q) {
        if (p != q) out.flip(ext.index(p, q));
    };
    auto v_times = [&](std::size_t q) {
        for (auto p = v.next_set(0); p < n; p = v.next_set(p + 1)) mono(p, q);
    };
    auto vf = [&](std::size_t p) { return v.get(space.dual(p)); };  // (v, e_p)

    for (auto i = x.next_set(0); i < ext.dim(); i = x.next_set(i + 1)) {
        const auto [w1, w2] = ext.pair(i);
        const bool f1 = vf(w1), f2 = vf(w2);
        const bool p12 = (w2 == space.dual(w1));
        for (auto j = y.next_set(0); j < ext.dim(); j = y.next_set(j + 1)) {
            const auto [w3, w4] = ext.pair(j);
            const bool f3 = vf(w3), f4 = vf(w4);
            const bool p34 = (w4 == space.dual(w3));
            if (f1 && f3) mono(w2, w4);
            if (f2 && f3) mono(w1, w4);
            if (f1 && f4) mono(w2, w3);
            if (f2 && f4) mono(w1, w3);
            if (f1 && p34) v_times(w2);
            if (f2 && p34) v_times(w1);
            if (f3 && p12) v_times(w4);
            if (f4 && p12) v_times(w3);
        }
    }
    return out;
}

GF2Vector phi_value_poisson(const ExteriorSquare& ext, const GF2Vector& v, const GF2Vector& x, const GF2Vector& y) {
    auto out = ext.wedge(ext.contract(x, v), ext.contract(y, v));
    GF2Vector inner(ext.dim());
    if (ext.pairing(y)) inner ^= x;
    if (ext.pairing(x)) inner ^= y;
    out ^= ext.wedge(v, ext.contract(inner, v));
    return out;
}

Cochain phi(const GF2Vector& v, const QuotientModel& model) {
    const auto& ext = model.exterior();
    if (v.size() != model.space().dim()) throw std::invalid_argument("phi: vector has the wrong length");
    const auto n = model.algebra().dim();
    Cochain c(2, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = GF2Vector::unit(ext.dim(), model.monomial_of(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto y = GF2Vector::unit(ext.dim(), model.monomial_of(j));
            c.add({i, j}, model.reduce(phi_value(ext, v, x, y)));
        }
    }
    return c;
}

Cochain phi(int signed_index, const QuotientModel& model) {
    return phi(model.space().basis_vector(signed_index), model);
}

GF2Matrix transvection(const SymplecticSpace& space, const GF2Vector& v) {
    if (v.size() != space.dim()) throw std::invalid_argument("transvection: vector has the wrong length");
    if (v.is_zero()) throw std::invalid_argument("transvection: v must be nonzero");
    auto m = GF2Matrix::identity(space.dim());
    for (auto r = v.next_set(0); r < space.dim(); r = v.next_set(r + 1)) {
        for (auto q = v.next_set(0); q < space.dim(); q = v.next_set(q + 1)) {
            // column c = dual(q) picks up v_r (e_c, v) = v_r v_q
            const auto c = space.dual(q);
            m.set(r, c, !m.get(r, c));
        }
    }
    return m;
}

bool verify_isomorphism(const LieAlgebra& source, const LieAlgebra& target, const GF2Matrix& theta) {
    const auto n = source.dim();
    if (target.dim() != n || theta.rows() != n || theta.cols() != n) return false;
    if (rank(theta) != n) return false;
    const auto columns = theta.transpose();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            GF2Vector lhs(n);
            for (auto m : source.bracket_support(i, j)) lhs ^= columns.row(m);
            if (lhs != target.bracket(columns.row(i), columns.row(j))) return false;
        }
    }
    return true;
}

IsomorphismResult find_graded_isomorphism(const LieAlgebra& source, const LieAlgebra& target) {
    const auto n = source.dim();
    if (target.dim() != n) {
        return {std::nullopt, "dimension mismatch: " + std::to_string(n) + " vs " + std::to_string(target.dim())};
    }
    if (source.weight_rank() != target.weight_rank()) return {std::nullopt, "weight lattices differ"};

    std::map<Weight, std::vector<std::size_t>> src_blocks, tgt_blocks;
    for (std::size_t i = 0; i < n; ++i) {
        src_blocks[source.weight(i)].push_back(i);
        tgt_blocks[target.weight(i)].push_back(i);
    }
    for (const auto& [w, members] : src_blocks) {
        auto it = tgt_blocks.find(w);
        if (it == tgt_blocks.end() || it->second.size() != members.size()) {
            return {std::nullopt, "weight multiplicity mismatch at " + to_string(w)};
        }
    }
    if (src_blocks.size() != tgt_blocks.size()) return {std::nullopt, "weight multiplicity mismatch"};

    // theta(b_i) either fixed (1-dimensional block) or sum_r u_{i,r} t_r over its block.
    struct Image {
        std::optional<std::size_t> fixed;
        std::vector<std::size_t> targets;
        std::size_t first_unknown = 0;
    };
    std::vector<Image> image(n);
    std::size_t unknowns = 0;
    for (const auto& [w, members] : src_blocks) {
        const auto& tmembers = tgt_blocks.at(w);
        if (members.size() == 1) {
            image[members[0]].fixed = tmembers[0];
            continue;
        }
        for (auto s : members) {
            image[s].targets = tmembers;
            image[s].first_unknown = unknowns;
            unknowns += tmembers.size();
        }
    }

    // Affine expression per target coordinate: unknown columns plus a constant column.
    const auto width = unknowns + 1;
    using Affine = std::vector<GF2Vector>;
    auto theta_of = [&](std::size_t s) {
        Affine e(n, GF2Vector(width));
        if (image[s].fixed) {
            e[*image[s].fixed].flip(unknowns);
        } else {
            for (std::size_t r = 0; r < image[s].targets.size(); ++r) {
                e[image[s].targets[r]].flip(image[s].first_unknown + r);
            }
        }
        return e;
    };

    auto system = GF2Matrix::empty(unknowns);
    std::vector<bool> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool fi = image[i].fixed.has_value(), fj = image[j].fixed.has_value();
            if (!fi && !fj) continue;  // quadratic; left to the final verification
            Affine eq(n, GF2Vector(width));
            for (auto m : source.bracket_support(i, j)) {
                const auto t = theta_of(m);
                for (std::size_t q = 0; q < n; ++q) eq[q] ^= t[q];
            }
            if (fi && fj) {
                for (auto q : target.bracket_support(*image[i].fixed, *image[j].fixed)) eq[q].flip(unknowns);
            } else {
                const auto& var = fi ? image[j] : image[i];
                const auto fixed = fi ? *image[i].fixed : *image[j].fixed;
                for (std::size_t r = 0; r < var.targets.size(); ++r) {
                    for (auto q : target.bracket_support(var.targets[r], fixed)) eq[q].flip(var.first_unknown + r);
                }
            }
            for (auto& row : eq) {
                if (row.is_zero()) continue;
                GF2Vector lhs(unknowns);
                for (auto c = row.next_set(0); c < unknowns; c = row.next_set(c + 1)) lhs.set(c);
                if (lhs.is_zero()) return {std::nullopt, "inconsistent fixed brackets at pair (" + std::to_string(i) +
                                                             ", " + std::to_string(j) + ")"};
                system.append_row(std::move(lhs));
                rhs.push_back(row.get(unknowns));
            }
        }
    }
    GF2Vector b(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k) b.set(k, rhs[k]);
    const auto particular = solve(system, b);
    if (!particular) return {std::nullopt, "linear constraints on the multi-dimensional blocks are inconsistent"};

    const auto kernel = nullspace(system);
    constexpr std::size_t kMaxFreeBits = 16;
    if (kernel.rows() > kMaxFreeBits) {
        return {std::nullopt, "solution space too large to search (" + std::to_string(kernel.rows()) + " free bits)"};
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << kernel.rows()); ++mask) {
        auto u = *particular;
        for (std::size_t k = 0; k < kernel.rows(); ++k) {
            if ((mask >> k) & 1U) u ^= kernel.row(k);
        }
        GF2Matrix theta(n, n);
        for (std::size_t s = 0; s < n; ++s) {
            if (image[s].fixed) {
                theta.set(*image[s].fixed, s);
            } else {
                for (std::size_t r = 0; r < image[s].targets.size(); ++r) {
                    if (u.get(image[s].first_unknown + r)) theta.set(image[s].targets[r], s);
                }
            }
        }
        if (verify_isomorphism(source, target, theta)) return {std::move(theta), "verified on all basis pairs"};
    }
    return {std::nullopt, "no candidate map passed verification"};
}

}  // namespace modlie
