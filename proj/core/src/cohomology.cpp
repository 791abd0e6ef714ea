#include "modlie/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace modlie {

namespace {

using Code = std::uint64_t;

constexpr Code encode(const CochainKey& key, std::size_t value) {
    return (Code{key[0]} << 48) | (Code{key[1]} << 32) | (Code{key[2]} << 16) | Code{value};
}

constexpr BasisCochain decode(Code code) {
    return {{static_cast<std::uint16_t>(code >> 48), static_cast<std::uint16_t>(code >> 32),
             static_cast<std::uint16_t>(code >> 16)},
            static_cast<std::uint16_t>(code)};
}

CochainKey key2(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), 0};
}

CochainKey key3(std::size_t a, std::size_t b, std::size_t c) {
    CochainKey k{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
    std::sort(k.begin(), k.end());
    return k;
}

// Appends d(basis cochain) as codes, possibly with repeats (repeats cancel in pairs).
void basis_differential(const LieAlgebra& L, std::size_t degree, const BasisCochain& c, std::vector<Code>& out) {
    const std::size_t k = c.value;
    if (degree == 1) {
        const std::size_t a = c.key[0];
        // [x, xi(a)] with x != a
        for (std::size_t x : L.partners(k)) {
            if (x == a) continue;
            for (auto m : L.bracket_support(x, k)) out.push_back(encode(key2(a, x), m));
        }
        // xi([x, y]) where b_a occurs in [x, y]
        for (auto [x, y] : L.producers(a)) out.push_back(encode(key2(x, y), k));
        return;
    }
    if (degree == 2) {
        const std::size_t a = c.key[0];
        const std::size_t b = c.key[1];
        for (std::size_t x : L.partners(k)) {
            if (x == a || x == b) continue;
            for (auto m : L.bracket_support(x, k)) out.push_back(encode(key3(a, b, x), m));
        }
        for (auto [x, y] : L.producers(a)) {
            if (x != b && y != b) out.push_back(encode(key3(x, y, b), k));
        }
        for (auto [x, y] : L.producers(b)) {
            if (x != a && y != a) out.push_back(encode(key3(x, y, a), k));
        }
        return;
    }
    throw std::invalid_argument("differential: degree must be 1 or 2");
}

// Sorts and keeps codes of odd multiplicity.
void cancel_pairs(std::vector<Code>& codes) {
    std::sort(codes.begin(), codes.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < codes.size();) {
        std::size_t j = i;
        while (j < codes.size() && codes[j] == codes[i]) ++j;
        if ((j - i) % 2 == 1) codes[w++] = codes[i];
        i = j;
    }
    codes.resize(w);
}

using WeightIndex = std::unordered_map<Weight, std::vector<std::size_t>, WeightHash>;

WeightIndex index_by_weight(const LieAlgebra& L) {
    WeightIndex index;
    for (std::size_t i = 0; i < L.dim(); ++i) index[L.weight(i)].push_back(i);
    return index;
}

}  // namespace

std::vector<BasisCochain> cochain_basis(const LieAlgebra& algebra, std::size_t degree, const Weight& mu) {
    const auto index = index_by_weight(algebra);
    const auto n = algebra.dim();
    std::vector<BasisCochain> out;
    auto emit = [&](const CochainKey& key, const Weight& arg_weight) {
        auto it = index.find(mu + arg_weight);
        if (it == index.end()) return;
        for (auto v : it->second) out.push_back({key, static_cast<std::uint16_t>(v)});
    };
    switch (degree) {
        case 1:
            for (std::size_t a = 0; a < n; ++a) emit({static_cast<std::uint16_t>(a), 0, 0}, algebra.weight(a));
            break;
        case 2:
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) emit(key2(a, b), algebra.weight(a) + algebra.weight(b));
            }
            break;
        case 3:
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    const auto ab = algebra.weight(a) + algebra.weight(b);
                    for (std::size_t c = b + 1; c < n; ++c) emit(key3(a, b, c), ab + algebra.weight(c));
                }
            }
            break;
        default:
            throw std::invalid_argument("cochain_basis: degree must be 1, 2 or 3");
    }
    return out;
}

Cochain differential(const LieAlgebra& algebra, const Cochain& phi) {
    const auto degree = phi.degree();
    if (degree != 1 && degree != 2) throw std::invalid_argument("differential: degree must be 1 or 2");
    if (phi.dim() != algebra.dim()) throw std::invalid_argument("differential: dimension mismatch");
    std::vector<Code> codes;
    for (const auto& [key, value] : phi.values()) {
        for (auto k = value.next_set(0); k < value.size(); k = value.next_set(k + 1)) {
            basis_differential(algebra, degree, {key, static_cast<std::uint16_t>(k)}, codes);
        }
    }
    cancel_pairs(codes);
    Cochain out(degree + 1, algebra.dim());
    for (auto code : codes) {
        const auto b = decode(code);
        out.toggle(b.key, b.value);
    }
    return out;
}

WeightBlock::WeightBlock(const LieAlgebra& algebra, Weight mu) : mu_(std::move(mu)) {
    c2_ = cochain_basis(algebra, 2, mu_);
    build(algebra);
}

WeightBlock::WeightBlock(const LieAlgebra& algebra, Weight mu, std::vector<BasisCochain> c2)
    : mu_(std::move(mu)), c2_(std::move(c2)) {
    build(algebra);
}

void WeightBlock::build(const LieAlgebra& algebra) {
    c1_ = cochain_basis(algebra, 1, mu_);

    std::unordered_map<Code, std::size_t> c2_index;
    c2_index.reserve(c2_.size() * 2);
    for (std::size_t i = 0; i < c2_.size(); ++i) c2_index.emplace(encode(c2_[i].key, c2_[i].value), i);

    std::vector<Code> codes;
    d1_images_ = GF2Matrix::empty(c2_.size());
    for (const auto& c : c1_) {
        codes.clear();
        basis_differential(algebra, 1, c, codes);
        cancel_pairs(codes);
        GF2Vector image(c2_.size());
        for (auto code : codes) {
            auto it = c2_index.find(code);
            if (it == c2_index.end()) throw std::logic_error("WeightBlock: differential left the weight space");
            image.set(it->second);
        }
        d1_images_.append_row(std::move(image));
    }

    std::vector<std::vector<Code>> images(c2_.size());
    std::vector<Code> all;
    for (std::size_t i = 0; i < c2_.size(); ++i) {
        basis_differential(algebra, 2, c2_[i], images[i]);
        cancel_pairs(images[i]);
        all.insert(all.end(), images[i].begin(), images[i].end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    c3_.reserve(all.size());
    for (auto code : all) c3_.push_back(decode(code));

    d2_images_ = GF2Matrix::empty(all.size());
    for (const auto& img : images) {
        GF2Vector row(all.size());
        for (auto code : img) {
            row.set(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), code) - all.begin()));
        }
        d2_images_.append_row(std::move(row));
    }

    EchelonBasis e1(c2_.size());
    for (const auto& r : d1_images_.row_data()) e1.insert(r);
    rank_d1_ = e1.rank();
    EchelonBasis e2(all.size());
    for (const auto& r : d2_images_.row_data()) e2.insert(r);
    rank_d2_ = e2.rank();
}

std::size_t cohomology_dim(const LieAlgebra& algebra, std::size_t degree, const Weight& mu) {
    if (degree != 2) throw std::invalid_argument("cohomology_dim: only degree 2 is supported");
    return WeightBlock(algebra, mu).dim_h2();
}

std::size_t H2Survey::total() const {
    return std::accumulate(nonzero.begin(), nonzero.end(), std::size_t{0},
                           [](std::size_t s, const SurveyEntry& e) { return s + e.dim_h2; });
}

std::map<Weight, std::size_t> H2Survey::dimensions() const {
    std::map<Weight, std::size_t> out;
    for (const auto& e : nonzero) out.emplace(e.weight, e.dim_h2);
    return out;
}

H2Survey h2_weight_survey(const LieAlgebra& algebra, std::size_t jobs) {
    const auto n = algebra.dim();
    const auto index = index_by_weight(algebra);

    std::unordered_map<Weight, std::vector<BasisCochain>, WeightHash> buckets;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto args = algebra.weight(a) + algebra.weight(b);
            for (const auto& [w, members] : index) {
                auto& bucket = buckets[w - args];
                for (auto v : members) bucket.push_back({key2(a, b), static_cast<std::uint16_t>(v)});
            }
        }
    }
    std::vector<Weight> weights;
    weights.reserve(buckets.size());
    for (const auto& [w, unused] : buckets) weights.push_back(w);
    std::sort(weights.begin(), weights.end());

    std::vector<SurveyEntry> entries(weights.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < weights.size(); i = next++) {
            auto c2 = buckets.at(weights[i]);
            std::sort(c2.begin(), c2.end());
            const WeightBlock block(algebra, weights[i], std::move(c2));
            entries[i] = {weights[i], block.dim_c2(), block.dim_z2(), block.dim_b2(), block.dim_h2()};
        }
    };
    jobs = std::max<std::size_t>(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    H2Survey survey;
    survey.weights_scanned = weights.size();
    for (auto& e : entries) {
        if (e.dim_h2 != 0) survey.nonzero.push_back(std::move(e));
    }
    return survey;
}

nlohmann::json to_json(const H2Survey& survey, const RootSystem& system) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : survey.nonzero) {
        const auto simple = system.express_in_simple_roots(e.weight);
        list.push_back({{"weight", e.weight.coords},
                        {"weight_str", to_string(e.weight)},
                        {"simple_roots", simple ? nlohmann::json(*simple) : nlohmann::json(nullptr)},
                        {"simple_roots_str", simple ? simple_root_string(*simple) : "-"},
                        {"dim_c2", e.dim_c2},
                        {"dim_z2", e.dim_z2},
                        {"dim_b2", e.dim_b2},
                        {"dim_h2", e.dim_h2}});
    }
    return {{"weights_scanned", survey.weights_scanned}, {"total_h2", survey.total()}, {"entries", std::move(list)}};
}

CoboundaryResult is_coboundary(const LieAlgebra& algebra, const Cochain& phi) {
    if (phi.degree() != 2 && phi.degree() != 3) throw std::invalid_argument("is_coboundary: degree must be 2 or 3");
    if (phi.is_zero()) return {true, Cochain(phi.degree() - 1, algebra.dim())};
    const auto mu = homogeneous_weight(algebra, phi);
    if (!mu) throw std::invalid_argument("is_coboundary: cochain is not weight-homogeneous");

    if (phi.degree() == 2) {
        if (!differential(algebra, phi).is_zero()) throw std::invalid_argument("is_coboundary: not a cocycle");
        const WeightBlock block(algebra, *mu);
        const auto coords = to_coordinates(phi, block.c2());
        if (!coords) throw std::logic_error("is_coboundary: cochain outside its weight block");
        auto x = solve(block.d1(), *coords);
        if (!x) return {false, std::nullopt};
        return {true, from_coordinates(algebra, 1, block.c1(), *x)};
    }
    // Degree 3: d on C^3 is not modelled, so the cocycle precondition is the caller's.
    const WeightBlock block(algebra, *mu);
    const auto coords = to_coordinates(phi, block.c3_support());
    if (!coords) return {false, std::nullopt};
    auto x = solve(block.d2(), *coords);
    if (!x) return {false, std::nullopt};
    return {true, from_coordinates(algebra, 2, block.c2(), *x)};
}

std::vector<Cochain> cohomology_basis(const LieAlgebra& algebra, const Weight& mu) {
    const WeightBlock block(algebra, mu);
    const auto& c2 = block.c2();
    const auto n = c2.size();

    // Pivot preference: coordinates valued in nonzero-weight vectors get low positions.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(),
                          [&](std::size_t i) { return !algebra.weight(c2[i].value).is_zero(); });
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    auto permute = [&](const GF2Vector& v) {
        GF2Vector out(n);
        for (auto i = v.next_set(0); i < n; i = v.next_set(i + 1)) out.set(position[i]);
        return out;
    };
    auto unpermute = [&](const GF2Vector& v) {
        GF2Vector out(n);
        for (auto p = v.next_set(0); p < n; p = v.next_set(p + 1)) out.set(order[p]);
        return out;
    };

    EchelonBasis echelon(n);
    for (const auto& r : block.d1_images().row_data()) echelon.insert(permute(r));

    const auto cocycles = nullspace(block.d2());
    std::vector<Cochain> out;
    for (const auto& z : cocycles.row_data()) {
        auto v = permute(z);
        echelon.reduce(v);
        if (v.is_zero()) continue;
        echelon.insert(v);
        out.push_back(from_coordinates(algebra, 2, c2, unpermute(v)));
    }
    return out;
}

Cochain representative(const LieAlgebra& algebra, const Weight& mu) {
    auto basis = cohomology_basis(algebra, mu);
    if (basis.empty()) throw std::domain_error("representative: H^2 vanishes at weight " + to_string(mu));
    return std::move(basis.front());
}

}  // namespace modlie
