#include "modlie/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace modlie {

Weight Weight::epsilon(std::size_t l, std::size_t i, int coefficient) {
    if (i == 0 || i > l) throw std::out_of_range("Weight::epsilon: index out of range");
    Weight w(l);
    w.coords[i - 1] = coefficient;
    return w;
}

bool Weight::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

int Weight::dot(const Weight& other) const {
    if (other.rank() != rank()) throw std::invalid_argument("Weight::dot: rank mismatch");
    int s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * other.coords[i];
    return s;
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
    return *this;
}

Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
}

Weight operator*(int k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
}

std::string to_string(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        const int c = w.coords[i];
        if (c == 0) continue;
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : w.coords) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(c) + 0x9e3779b9U);
        h *= 0x100000001b3ULL;
    }
    return h;
}

RootSystem::RootSystem(std::size_t l) : l_(l) {
    if (l < 3) throw std::invalid_argument("RootSystem: type D_l requires l >= 3, got " + std::to_string(l));
    for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t j = i + 1; j <= l; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    roots_.push_back(Weight::epsilon(l, i, si) + Weight::epsilon(l, j, sj));
                }
            }
        }
    }
    std::sort(roots_.begin(), roots_.end());

    for (std::size_t i = 1; i < l; ++i) simple_.push_back(Weight::epsilon(l, i) - Weight::epsilon(l, i + 1));
    simple_.push_back(Weight::epsilon(l, l - 1) + Weight::epsilon(l, l));
}

bool RootSystem::is_root(const Weight& w) const { return index_of(w).has_value(); }

std::optional<std::size_t> RootSystem::index_of(const Weight& w) const {
    if (w.rank() != l_) return std::nullopt;
    auto it = std::lower_bound(roots_.begin(), roots_.end(), w);
    if (it == roots_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - roots_.begin());
}

Weight RootSystem::reflect(const Weight& x, std::size_t i) const {
    const auto& a = simple_root(i);
    return x - cartan_number(x, a) * a;
}

std::optional<std::vector<int>> RootSystem::express_in_simple_roots(const Weight& w) const {
    if (w.rank() != l_) return std::nullopt;
    const auto& x = w.coords;
    const std::size_t l = l_;
    std::vector<int> c(l, 0);
    // eps_1 coordinate is c_1; eps_k is c_k - c_{k-1} for k <= l-2.
    c[0] = x[0];
    for (std::size_t k = 1; k + 2 < l; ++k) c[k] = x[k] + c[k - 1];
    // The fork: c_{l-1} + c_l = x_{l-1} + c_{l-2} and c_l - c_{l-1} = x_l.
    const int sum = x[l - 2] + c[l - 3];
    if ((sum + x[l - 1]) % 2 != 0) return std::nullopt;
    c[l - 1] = (sum + x[l - 1]) / 2;
    c[l - 2] = (sum - x[l - 1]) / 2;
    return c;
}

int cartan_number(const Weight& a, const Weight& b) {
    const int bb = b.dot(b);
    if (bb == 0) throw std::invalid_argument("cartan_number: second argument has zero length");
    const int num = 2 * a.dot(b);
    if (num % bb != 0) throw std::invalid_argument("cartan_number: pairing is not integral");
    return num / bb;
}

std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& system) {
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 1; i <= system.rank(); ++i) {
            auto y = system.reflect(x, i);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return seen;
}

std::string simple_root_string(const std::vector<int>& coefficients) {
    // Highest index first, matching the way the weight lists are usually written.
    std::string out;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        const int c = coefficients[k];
        if (c == 0) continue;
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
        out += "a" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace modlie
