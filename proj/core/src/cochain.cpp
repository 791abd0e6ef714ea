#include "modlie/cochain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace modlie {

namespace {

// Sorted key, or nullopt when an argument repeats.
std::optional<CochainKey> sorted_key(std::span<const std::size_t> args, std::size_t degree) {
    if (args.size() != degree) throw std::invalid_argument("Cochain: wrong number of arguments");
    CochainKey key{};
    for (std::size_t i = 0; i < degree; ++i) key[i] = static_cast<std::uint16_t>(args[i]);
    std::sort(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(degree));
    for (std::size_t i = 1; i < degree; ++i) {
        if (key[i] == key[i - 1]) return std::nullopt;
    }
    return key;
}

}  // namespace

CochainKey make_key(std::initializer_list<std::size_t> indices) {
    auto key = sorted_key(std::span(indices.begin(), indices.size()), indices.size());
    if (!key) throw std::invalid_argument("make_key: repeated index");
    return *key;
}

Cochain::Cochain(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {
    if (degree < 1 || degree > 3) throw std::invalid_argument("Cochain: degree must be 1, 2 or 3");
}

void Cochain::add(std::span<const std::size_t> args, const GF2Vector& value) {
    auto key = sorted_key(args, degree_);
    if (!key || value.is_zero()) return;
    auto [it, inserted] = values_.try_emplace(*key, value);
    if (!inserted) {
        it->second ^= value;
        if (it->second.is_zero()) values_.erase(it);
    }
}

void Cochain::add(std::initializer_list<std::size_t> args, const GF2Vector& value) {
    add(std::span(args.begin(), args.size()), value);
}

void Cochain::toggle(const CochainKey& key, std::size_t value) {
    auto [it, inserted] = values_.try_emplace(key, GF2Vector(dim_));
    it->second.flip(value);
    if (it->second.is_zero()) values_.erase(it);
}

GF2Vector Cochain::at(std::span<const std::size_t> args) const {
    auto key = sorted_key(args, degree_);
    if (!key) return GF2Vector(dim_);
    auto it = values_.find(*key);
    return it == values_.end() ? GF2Vector(dim_) : it->second;
}

GF2Vector Cochain::at(std::initializer_list<std::size_t> args) const {
    return at(std::span(args.begin(), args.size()));
}

GF2Vector Cochain::evaluate(const GF2Vector& x, const GF2Vector& y) const {
    if (degree_ != 2) throw std::invalid_argument("Cochain::evaluate: degree 2 only");
    GF2Vector out(dim_);
    for (const auto& [key, value] : values_) {
        // phi(x, y) picks up x_a y_b + x_b y_a on the key {a, b}.
        if ((x.get(key[0]) && y.get(key[1])) != (x.get(key[1]) && y.get(key[0]))) out ^= value;
    }
    return out;
}

Cochain& Cochain::operator+=(const Cochain& other) {
    if (other.degree_ != degree_ || other.dim_ != dim_) throw std::invalid_argument("Cochain: shape mismatch");
    for (const auto& [key, value] : other.values_) {
        auto [it, inserted] = values_.try_emplace(key, value);
        if (!inserted) {
            it->second ^= value;
            if (it->second.is_zero()) values_.erase(it);
        }
    }
    return *this;
}

Weight basis_cochain_weight(const LieAlgebra& algebra, std::size_t degree, const BasisCochain& c) {
    auto w = algebra.weight(c.value);
    for (std::size_t i = 0; i < degree; ++i) w -= algebra.weight(c.key[i]);
    return w;
}

std::optional<Weight> homogeneous_weight(const LieAlgebra& algebra, const Cochain& c) {
    std::optional<Weight> w;
    for (const auto& [key, value] : c.values()) {
        for (auto k = value.next_set(0); k < value.size(); k = value.next_set(k + 1)) {
            auto wk = basis_cochain_weight(algebra, c.degree(), {key, static_cast<std::uint16_t>(k)});
            if (!w) {
                w = std::move(wk);
            } else if (*w != wk) {
                return std::nullopt;
            }
        }
    }
    return w;
}

Cochain from_coordinates(const LieAlgebra& algebra, std::size_t degree, const std::vector<BasisCochain>& basis,
                         const GF2Vector& coords) {
    if (coords.size() != basis.size()) throw std::invalid_argument("from_coordinates: length mismatch");
    Cochain c(degree, algebra.dim());
    for (auto i = coords.next_set(0); i < coords.size(); i = coords.next_set(i + 1)) {
        c.toggle(basis[i].key, basis[i].value);
    }
    return c;
}

std::optional<GF2Vector> to_coordinates(const Cochain& c, const std::vector<BasisCochain>& basis) {
    std::map<BasisCochain, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    GF2Vector coords(basis.size());
    for (const auto& [key, value] : c.values()) {
        for (auto k = value.next_set(0); k < value.size(); k = value.next_set(k + 1)) {
            auto it = index.find({key, static_cast<std::uint16_t>(k)});
            if (it == index.end()) return std::nullopt;
            coords.set(it->second);
        }
    }
    return coords;
}

}  // namespace modlie
