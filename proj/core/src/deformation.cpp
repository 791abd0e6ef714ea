#include "modlie/deformation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modlie/cohomology.hpp"

namespace modlie {

namespace {

Weight zero_weight(const LieAlgebra& algebra) { return Weight(algebra.weight_rank()); }

}  // namespace

DeformedAlgebra::DeformedAlgebra(LieAlgebra base, const Cochain& psi) : base_(std::move(base)), psi_(psi) {
    if (psi.degree() != 2 || psi.dim() != base_.dim()) throw std::invalid_argument("DeformedAlgebra: psi must be a 2-cochain on the base");
    const auto n = base_.dim();
    psi_table_.assign(n * n, GF2Vector(n));
    for (const auto& [key, value] : psi.values()) {
        psi_table_[key[0] * n + key[1]] = value;
        psi_table_[key[1] * n + key[0]] = value;
    }
}

TruncatedVector DeformedAlgebra::embed(const GF2Vector& v) const {
    return {v, GF2Vector(dim()), GF2Vector(dim())};
}

TruncatedVector DeformedAlgebra::bracket(std::size_t i, std::size_t j) const {
    return {base_.bracket(i, j), psi_at(i, j), GF2Vector(dim())};
}

TruncatedVector DeformedAlgebra::bracket(const TruncatedVector& x, const TruncatedVector& y) const {
    const auto n = dim();
    TruncatedVector out{GF2Vector(n), GF2Vector(n), GF2Vector(n)};
    for (std::size_t p = 0; p < 3; ++p) {
        for (std::size_t q = 0; p + q < 3; ++q) {
            if (x[p].is_zero() || y[q].is_zero()) continue;
            for (auto a = x[p].next_set(0); a < n; a = x[p].next_set(a + 1)) {
                for (auto b = y[q].next_set(0); b < n; b = y[q].next_set(b + 1)) {
                    if (a == b) continue;
                    out[p + q] ^= base_.bracket(a, b);
                    if (p + q + 1 < 3) out[p + q + 1] ^= psi_at(a, b);
                }
            }
        }
    }
    return out;
}

DeformedAlgebra deform_bracket(const LieAlgebra& algebra, const Cochain& psi) { return {algebra, psi}; }

DeformationReport verify_deformation(const DeformedAlgebra& deformed) {
    const auto n = deformed.dim();
    DeformationReport report{true, true, Cochain(3, n), Cochain(3, n), Cochain(3, n), std::nullopt, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const auto self = deformed.bracket(i, i);
        if (!self[0].is_zero() || !self[1].is_zero() || !self[2].is_zero()) report.alternating = false;
    }
    std::array<Cochain*, 3> orders{&report.order0, &report.order1, &report.order2};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ij = deformed.bracket(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                auto total = deformed.bracket(ij, deformed.embed(deformed.base().unit(k)));
                const auto jk = deformed.bracket(deformed.bracket(j, k), deformed.embed(deformed.base().unit(i)));
                const auto ki = deformed.bracket(deformed.bracket(k, i), deformed.embed(deformed.base().unit(j)));
                for (std::size_t o = 0; o < 3; ++o) {
                    total[o] ^= jk[o];
                    total[o] ^= ki[o];
                    if (total[o].is_zero()) continue;
                    orders[o]->add({i, j, k}, total[o]);
                    if (!report.failing_triple) {
                        report.failing_triple = std::array{i, j, k};
                        report.failing_order = o;
                    }
                }
            }
        }
    }
    report.passed = report.alternating && !report.failing_triple;
    return report;
}

Cochain cup_square(const LieAlgebra& algebra, const Cochain& psi) {
    if (psi.degree() != 2) throw std::invalid_argument("cup_square: psi must have degree 2");
    const auto n = algebra.dim();
    std::vector<std::vector<std::pair<std::size_t, const GF2Vector*>>> adjacent(n);
    for (const auto& [key, value] : psi.values()) {
        adjacent[key[0]].emplace_back(key[1], &value);
        adjacent[key[1]].emplace_back(key[0], &value);
    }
    Cochain out(3, n);
    // Each term psi(psi(P), T \ P) for a pair P inside a triple T.
    for (const auto& [key, value] : psi.values()) {
        const std::size_t x = key[0], y = key[1];
        for (auto m = value.next_set(0); m < n; m = value.next_set(m + 1)) {
            for (const auto& [z, w] : adjacent[m]) {
                if (z != x && z != y) out.add({x, y, z}, *w);
            }
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero:
            return "ZERO";
        case Verdict::Coboundary:
            return "COBOUNDARY";
        case Verdict::Nontrivial:
            return "NONTRIVIAL";
    }
    return "?";
}

ObstructionReport obstruction_verdict(const LieAlgebra& algebra, const Cochain& psi) {
    if (!differential(algebra, psi).is_zero()) throw std::invalid_argument("obstruction_verdict: psi is not a cocycle");
    ObstructionReport report;
    report.weight = homogeneous_weight(algebra, psi).value_or(zero_weight(algebra));
    report.representative = psi;
    report.witness_value = GF2Vector(algebra.dim());

    const auto cup = cup_square(algebra, psi);
    if (cup.is_zero()) {
        report.verdict = Verdict::Zero;
        return report;
    }
    report.obstruction_weight = homogeneous_weight(algebra, cup);
    const auto& [key, value] = *cup.values().begin();
    report.witness_triple = std::array<std::size_t, 3>{key[0], key[1], key[2]};
    report.witness_value = value;

    auto cob = is_coboundary(algebra, cup);
    if (cob.is_coboundary) {
        report.verdict = Verdict::Coboundary;
        report.preimage = std::move(cob.preimage);
    } else {
        report.verdict = Verdict::Nontrivial;
    }
    return report;
}

Cochain build_even_cocycle(const LieAlgebra& algebra, const Weight& mu) {
    const auto l = algebra.weight_rank();
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("build_even_cocycle: needs D_l with even l >= 4");
    const RootSystem system(l);

    std::map<Weight, std::size_t> root_vector;
    for (std::size_t i = 0; i < algebra.dim(); ++i) {
        if (algebra.label(i).kind == BasisLabel::Kind::RootVector) root_vector.emplace(algebra.weight(i), i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& g : system.roots()) {
        const auto d = mu - g;
        if (!system.is_root(d) || !(g < d)) continue;
        auto gi = root_vector.find(-g);
        auto di = root_vector.find(-d);
        if (gi == root_vector.end() || di == root_vector.end()) {
            throw std::invalid_argument("build_even_cocycle: algebra is not a Chevalley algebra of type D");
        }
        pairs.emplace_back(gi->second, di->second);
    }
    if (pairs.empty()) throw std::domain_error("build_even_cocycle: no root pairs sum to " + to_string(mu));

    const auto n = algebra.dim();
    GF2Vector quoted(n);
    for (std::size_t i = 1; i < l; i += 2) quoted.set(i - 1);  // H_{l-1} + H_{l-3} + ... + H_1

    const auto z = center(algebra);
    std::vector<GF2Vector> candidates;
    if (z.contains(quoted)) candidates.push_back(quoted);
    for (std::size_t mask = 1; mask < (std::size_t{1} << z.dim()); ++mask) {
        GF2Vector c(n);
        for (std::size_t k = 0; k < z.dim(); ++k) {
            if ((mask >> k) & 1U) c ^= z.basis.row(k);
        }
        if (c != quoted) candidates.push_back(std::move(c));
    }

    for (const auto& value : candidates) {
        Cochain psi(2, n);
        for (auto [a, b] : pairs) psi.add({a, b}, value);
        if (psi.is_zero() || !differential(algebra, psi).is_zero()) continue;
        if (!is_coboundary(algebra, psi).is_coboundary) return psi;
    }
    throw std::domain_error("build_even_cocycle: no central value gives a nontrivial cocycle at " + to_string(mu));
}

bool central_valued(const LieAlgebra& algebra, const Cochain& psi) {
    const auto z = center(algebra);
    EchelonBasis span(algebra.dim());
    for (const auto& r : z.basis.row_data()) span.insert(r);
    return std::all_of(psi.values().begin(), psi.values().end(),
                       [&](const auto& kv) { return span.contains(kv.second); });
}

bool vanishes_on_center(const LieAlgebra& algebra, const Cochain& psi) {
    const auto z = center(algebra);
    for (const auto& c : z.basis.row_data()) {
        for (std::size_t x = 0; x < algebra.dim(); ++x) {
            if (!psi.evaluate(c, algebra.unit(x)).is_zero()) return false;
        }
    }
    return true;
}

std::vector<ObstructionReport> rigidity_scan(const QuotientModel& model) {
    const auto l = model.rank();
    if (l < 5 || l % 2 == 0) throw std::invalid_argument("rigidity_scan: needs odd l >= 5");
    std::vector<ObstructionReport> reports;
    for (int i = 1; i <= static_cast<int>(l); ++i) {
        for (int sign : {1, -1}) reports.push_back(obstruction_verdict(model.algebra(), phi(sign * i, model)));
    }
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
    return reports;
}

std::vector<ObstructionReport> rigidity_scan_generic(const LieAlgebra& algebra, std::size_t jobs) {
    const auto l = algebra.weight_rank();
    if (l < 5 || l % 2 == 0) throw std::invalid_argument("rigidity_scan: needs odd l >= 5");
    std::vector<ObstructionReport> reports;
    for (const auto& entry : h2_weight_survey(algebra, jobs).nonzero) {
        for (const auto& psi : cohomology_basis(algebra, entry.weight)) reports.push_back(obstruction_verdict(algebra, psi));
    }
    return reports;
}

std::vector<ObstructionReport> integrability_scan(const LieAlgebra& algebra, std::size_t jobs) {
    const auto l = algebra.weight_rank();
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("integrability_scan: needs even l >= 4");
    std::vector<ObstructionReport> reports;
    for (const auto& entry : h2_weight_survey(algebra, jobs).nonzero) {
        std::vector<Cochain> classes;
        if (entry.dim_h2 == 1) {
            try {
                classes.push_back(build_even_cocycle(algebra, entry.weight));
            } catch (const std::domain_error&) {
                classes = cohomology_basis(algebra, entry.weight);
            }
        } else {
            classes = cohomology_basis(algebra, entry.weight);
        }
        for (const auto& psi : classes) {
            auto report = obstruction_verdict(algebra, psi);
            report.central_valued = central_valued(algebra, psi);
            report.vanishes_on_center = vanishes_on_center(algebra, psi);
            report.deformation_verified = verify_deformation(deform_bracket(algebra, psi)).passed;
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

nlohmann::json to_json(const ObstructionReport& report, const LieAlgebra& algebra, const RootSystem& system) {
    const auto l = algebra.weight_rank();
    const auto simple = system.express_in_simple_roots(report.weight);
    nlohmann::json j{{"l", l},
                     {"parity", l % 2 == 0 ? "even" : "odd"},
                     {"weight", report.weight.coords},
                     {"weight_str", to_string(report.weight)},
                     {"simple_roots_str", simple ? simple_root_string(*simple) : "-"},
                     {"verdict", to_string(report.verdict)},
                     {"representative_terms", report.representative.support_size()}};
    if (report.obstruction_weight) j["obstruction_weight"] = report.obstruction_weight->coords;
    if (report.witness_triple) {
        const auto& t = *report.witness_triple;
        j["witness_triple"] = t;
        j["witness_triple_labels"] = {to_string(algebra.label(t[0])), to_string(algebra.label(t[1])),
                                      to_string(algebra.label(t[2]))};
        j["witness_value_support"] = report.witness_value.support();
        j["witness_value"] = algebra.describe(report.witness_value);
    }
    if (l % 2 == 0) {
        j["central_valued"] = report.central_valued;
        j["vanishes_on_center"] = report.vanishes_on_center;
        j["deformation_verified"] = report.deformation_verified;
    }
    return j;
}

}  // namespace modlie
