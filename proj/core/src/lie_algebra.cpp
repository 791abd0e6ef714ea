#include "modlie/lie_algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace modlie {

namespace {

std::string signed_index(int a) { return a < 0 ? "-" + std::to_string(-a) : std::to_string(a); }

}  // namespace

std::string to_string(const BasisLabel& label) {
    std::string s;
    switch (label.kind) {
        case BasisLabel::Kind::Cartan:
            s = "H" + std::to_string(label.cartan_index);
            break;
        case BasisLabel::Kind::RootVector:
            s = "E[" + to_string(label.root) + "]";
            break;
        case BasisLabel::Kind::Monomial:
            s = "e" + signed_index(label.monomial.first) + "e" + signed_index(label.monomial.second);
            break;
    }
    return label.coset ? "[" + s + "]" : s;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<BasisLabel> labels, std::vector<Weight> weights,
                       const BracketEntries& brackets)
    : name_(std::move(name)), labels_(std::move(labels)), weights_(std::move(weights)) {
    const auto n = labels_.size();
    if (weights_.size() != n) throw std::invalid_argument("LieAlgebra: one weight per basis vector required");
    if (n > std::numeric_limits<std::uint16_t>::max()) throw std::invalid_argument("LieAlgebra: dimension too large");
    weight_rank_ = n == 0 ? 0 : weights_.front().rank();

    table_.assign(n * n, GF2Vector(n));
    support_.assign(n * n, {});
    partners_.assign(n, {});
    producers_.assign(n, {});
    for (const auto& [ij, value] : brackets) {
        const auto [i, j] = ij;
        if (i >= j || j >= n) throw std::invalid_argument("LieAlgebra: bracket keys must satisfy i < j < dim");
        if (value.size() != n) throw std::invalid_argument("LieAlgebra: bracket value has wrong length");
        table_[i * n + j] = value;
        table_[j * n + i] = value;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = table_[i * n + j];
            auto& sup = support_[i * n + j];
            for (auto m = v.next_set(0); m < n; m = v.next_set(m + 1)) sup.push_back(static_cast<std::uint16_t>(m));
            if (i < j) {
                for (auto m : sup) producers_[m].emplace_back(i, j);
            }
        }
    }
    // partners(k) = {c : [c, b_k] != 0}
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!support_[c * n + k].empty()) partners_[k].push_back(static_cast<std::uint16_t>(c));
        }
    }
}

GF2Vector LieAlgebra::bracket(const GF2Vector& x, const GF2Vector& y) const {
    const auto n = dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
    GF2Vector out(n);
    for (auto i = x.next_set(0); i < n; i = x.next_set(i + 1)) {
        for (auto j = y.next_set(0); j < n; j = y.next_set(j + 1)) {
            if (i != j) out ^= bracket(i, j);
        }
    }
    return out;
}

LieAlgebra::BracketEntries LieAlgebra::bracket_entries() const {
    BracketEntries out;
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = i + 1; j < dim(); ++j) {
            if (!bracket_support(i, j).empty()) out.emplace(std::pair{i, j}, bracket(i, j));
        }
    }
    return out;
}

LieAlgebra LieAlgebra::with_bracket(std::size_t i, std::size_t j, const GF2Vector& value) const {
    auto entries = bracket_entries();
    if (i > j) std::swap(i, j);
    if (value.is_zero()) {
        entries.erase({i, j});
    } else {
        entries[{i, j}] = value;
    }
    return {name_ + " (modified)", labels_, weights_, entries};
}

std::string LieAlgebra::describe(const GF2Vector& v) const {
    std::string out;
    for (auto i = v.next_set(0); i < v.size(); i = v.next_set(i + 1)) {
        if (!out.empty()) out += " + ";
        out += to_string(labels_[i]);
    }
    return out.empty() ? "0" : out;
}

bool Subspace::contains(const GF2Vector& v) const {
    EchelonBasis e(ambient);
    for (const auto& r : basis.row_data()) e.insert(r);
    return e.contains(v);
}

bool Subspace::same_span(const Subspace& other) const {
    if (other.ambient != ambient || other.dim() != dim()) return false;
    return std::all_of(other.basis.row_data().begin(), other.basis.row_data().end(),
                       [this](const auto& r) { return contains(r); });
}

LieAlgebra build_chevalley_D(std::size_t l) {
    const RootSystem system(l);
    const auto& roots = system.roots();
    const std::size_t n = l + roots.size();

    std::vector<BasisLabel> labels;
    std::vector<Weight> weights;
    for (std::size_t i = 1; i <= l; ++i) {
        labels.push_back(BasisLabel::cartan(i));
        weights.emplace_back(l);
    }
    for (const auto& a : roots) {
        labels.push_back(BasisLabel::root_vector(a));
        weights.push_back(a);
    }
    auto root_index = [&](const Weight& a) { return l + *system.index_of(a); };

    LieAlgebra::BracketEntries brackets;
    // [H_i, E_a] = <a, alpha_i> E_a
    for (std::size_t i = 1; i <= l; ++i) {
        for (const auto& a : roots) {
            if (cartan_number(a, system.simple_root(i)) % 2 != 0) {
                const auto k = root_index(a);
                brackets.emplace(std::pair{i - 1, k}, GF2Vector::unit(n, k));
            }
        }
    }
    for (std::size_t p = 0; p < roots.size(); ++p) {
        for (std::size_t q = p + 1; q < roots.size(); ++q) {
            const auto sum = roots[p] + roots[q];
            GF2Vector value(n);
            if (sum.is_zero()) {
                const auto coeffs = *system.express_in_simple_roots(roots[p]);
                for (std::size_t i = 0; i < l; ++i) {
                    if (coeffs[i] % 2 != 0) value.set(i);
                }
            } else if (system.is_root(sum)) {
                value.set(root_index(sum));
            }
            if (!value.is_zero()) brackets.emplace(std::pair{l + p, l + q}, std::move(value));
        }
    }
    return {"D" + std::to_string(l), std::move(labels), std::move(weights), brackets};
}

Subspace center(const LieAlgebra& algebra) {
    const auto n = algebra.dim();
    // Row (j, m), column i: coefficient of b_m in [b_i, b_j].
    GF2Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (auto m : algebra.bracket_support(i, j)) stacked.set(j * n + m, i);
        }
    }
    return {n, nullspace(stacked)};
}

CentralQuotient::CentralQuotient(const LieAlgebra& algebra, const Subspace& z) : ambient_(algebra.dim()) {
    const auto n = algebra.dim();
    if (z.ambient != n) throw std::invalid_argument("quotient_by_center: ambient dimension mismatch");
    for (const auto& g : z.basis.row_data()) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!algebra.bracket(g, algebra.unit(b)).is_zero()) {
                throw std::invalid_argument("quotient_by_center: " + algebra.describe(g) + " is not central");
            }
        }
    }

    // Reduced echelon form keyed on the highest index of each generator.
    generators_ = z.basis.row_data();
    std::vector<bool> used(generators_.size(), false);
    std::vector<GF2Vector> reduced;
    for (std::size_t c = n; c-- > 0;) {
        auto it = std::find_if(generators_.begin(), generators_.end(), [&](const auto& g) {
            const auto idx = static_cast<std::size_t>(&g - generators_.data());
            return !used[idx] && g.get(c);
        });
        if (it == generators_.end()) continue;
        const auto idx = static_cast<std::size_t>(it - generators_.begin());
        used[idx] = true;
        const auto pivot = *it;
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            if (k != idx && generators_[k].get(c)) generators_[k] ^= pivot;
        }
        for (auto& r : reduced) {
            if (r.get(c)) r ^= pivot;
        }
        reduced.push_back(pivot);
        pivots_.push_back(c);
    }
    generators_ = std::move(reduced);

    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(pivots_.begin(), pivots_.end(), i) == pivots_.end()) kept_.push_back(i);
    }

    std::vector<BasisLabel> labels;
    std::vector<Weight> weights;
    for (auto i : kept_) {
        auto label = algebra.label(i);
        label.coset = true;
        labels.push_back(std::move(label));
        weights.push_back(algebra.weight(i));
    }
    LieAlgebra::BracketEntries brackets;
    for (std::size_t a = 0; a < kept_.size(); ++a) {
        for (std::size_t b = a + 1; b < kept_.size(); ++b) {
            auto v = project(algebra.bracket(kept_[a], kept_[b]));
            if (!v.is_zero()) brackets.emplace(std::pair{a, b}, std::move(v));
        }
    }
    quotient_ = LieAlgebra(algebra.name() + "/Z", std::move(labels), std::move(weights), brackets);
}

GF2Vector CentralQuotient::project(const GF2Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("CentralQuotient::project: dimension mismatch");
    auto w = v;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (w.get(pivots_[g])) w ^= generators_[g];
    }
    GF2Vector out(kept_.size());
    for (std::size_t k = 0; k < kept_.size(); ++k) out.set(k, w.get(kept_[k]));
    return out;
}

LieAlgebra quotient_by_center(const LieAlgebra& algebra, const Subspace& z) {
    return CentralQuotient(algebra, z).algebra();
}

JacobiReport check_jacobi(const LieAlgebra& algebra) {
    const auto n = algebra.dim();
    GF2Vector acc(n);
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z) {
        for (auto m : algebra.bracket_support(x, y)) {
            if (m != z) acc ^= algebra.bracket(m, z);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                acc.clear();
                nested(i, j, k);
                nested(j, k, i);
                nested(k, i, j);
                if (!acc.is_zero()) return {false, std::array{i, j, k}, acc};
            }
        }
    }
    return {true, std::nullopt, GF2Vector(n)};
}

bool check_weight_additivity(const LieAlgebra& algebra) {
    const auto n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto target = algebra.weight(i) + algebra.weight(j);
            for (auto m : algebra.bracket_support(i, j)) {
                if (algebra.weight(m) != target) return false;
            }
        }
    }
    return true;
}

std::map<Weight, Subspace> weight_decomposition(const LieAlgebra& algebra) {
    const auto n = algebra.dim();
    std::map<Weight, Subspace> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = out.try_emplace(algebra.weight(i), Subspace{n, GF2Matrix::empty(n)});
        it->second.basis.append_row(algebra.unit(i));
    }
    return out;
}

nlohmann::json to_json(const LieAlgebra& algebra) {
    nlohmann::json labels = nlohmann::json::array();
    nlohmann::json weights = nlohmann::json::array();
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        labels.push_back(to_string(algebra.label(i)));
        weights.push_back(algebra.weight(i).coords);
    }
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [ij, value] : algebra.bracket_entries()) {
        brackets.push_back({ij.first, ij.second, value.support()});
    }
    return {{"name", algebra.name()},
            {"dim", algebra.dim()},
            {"labels", std::move(labels)},
            {"weights", std::move(weights)},
            {"brackets", std::move(brackets)}};
}

}  // namespace modlie
