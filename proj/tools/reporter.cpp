#include "reporter.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "modlie/cohomology.hpp"
#include "modlie/deformation.hpp"
#include "modlie/lie_algebra.hpp"
#include "modlie/root_system.hpp"
#include "modlie/symplectic.hpp"

namespace modlie::cli {

namespace {

using nlohmann::json;

std::size_t rank_of(const RunConfig& c) { return static_cast<std::size_t>(c.l); }

bool write_json(const RunConfig& config, const json& doc, std::ostream& err) {
    if (config.out_path.empty()) return true;
    std::ofstream f(config.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << config.out_path << " for writing\n";
        return false;
    }
    f << doc.dump(2) << '\n';
    return static_cast<bool>(f);
}

std::string weight_line(const Weight& w, const RootSystem& sys) {
    const auto simple = sys.express_in_simple_roots(w);
    return to_string(w) + "  (" + (simple ? simple_root_string(*simple) : "not in root lattice") + ")";
}

/// The algebra whose H^2 the commands study: the centreless quotient for odd l and
/// D_l itself for even l, or the exterior-square model.
struct Subject {
    std::optional<QuotientModel> model;
    LieAlgebra algebra;
};

Subject make_subject(const RunConfig& config) {
    const auto l = rank_of(config);
    if (effective_model(config) == Model::Exterior) {
        QuotientModel m(l);
        auto alg = m.algebra();
        return {std::move(m), std::move(alg)};
    }
    auto d = build_chevalley_D(l);
    if (l % 2 == 1) return {std::nullopt, quotient_by_center(d, center(d))};
    return {std::nullopt, std::move(d)};
}

/// Centre generators as quoted: H_l + H_{l-1}, and for even l also H_{l-1} + H_{l-3} + ... + H_1.
Subspace expected_center(std::size_t l, std::size_t dim) {
    auto gens = GF2Matrix::empty(dim);
    GF2Vector a(dim);
    a.set(l - 1);
    a.set(l - 2);
    gens.append_row(a);
    if (l % 2 == 0) {
        GF2Vector b(dim);
        for (std::size_t i = 1; i < l; i += 2) b.set(i - 1);
        gens.append_row(b);
    }
    return {dim, gens};
}

/// Expected nonzero H^2 weights: {+-2 eps_i} for l >= 5; for l = 4 the orbits of
/// a1+a3, a1+a4, a3+a4. Empty for l = 3 (no expectation).
std::set<Weight> expected_h2_weights(const RootSystem& sys) {
    const auto l = sys.rank();
    std::set<Weight> out;
    if (l == 4) {
        const auto& a = sys.simple_roots();
        for (const auto& seed : {a[0] + a[2], a[0] + a[3], a[2] + a[3]}) {
            auto orbit = weyl_orbit(seed, sys);
            out.insert(orbit.begin(), orbit.end());
        }
    } else if (l >= 5) {
        for (std::size_t i = 1; i <= l; ++i) {
            out.insert(Weight::epsilon(l, i, 2));
            out.insert(Weight::epsilon(l, i, -2));
        }
    }
    return out;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::Verify: return "verify";
        case Command::Cohomology: return "cohomology";
        case Command::Rigidity: return "rigidity";
        case Command::Integrability: return "integrability";
    }
    return "?";
}

std::string to_string(Model m) { return m == Model::Chevalley ? "chevalley" : "exterior"; }

Model effective_model(const RunConfig& config) {
    if (config.model) return *config.model;
    return config.command == Command::Rigidity ? Model::Exterior : Model::Chevalley;
}

std::optional<std::string> usage_error(const RunConfig& config) {
    if (config.l < 3) return "l must be at least 3 (got " + std::to_string(config.l) + ")";
    if (config.jobs == 0) return "--jobs must be positive";
    const bool odd = config.l % 2 == 1;
    if (config.command == Command::Rigidity && (!odd || config.l < 5)) {
        return "rigidity needs odd l >= 5 (got " + std::to_string(config.l) + ")";
    }
    if (config.command == Command::Integrability && odd) {
        return "integrability needs even l >= 4 (got " + std::to_string(config.l) + ")";
    }
    if (effective_model(config) == Model::Exterior && !odd) {
        return "the exterior model exists only for odd l";
    }
    return std::nullopt;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto l = rank_of(config);
    const RootSystem sys(l);
    bool ok = true;
    auto check = [&](bool cond, const std::string& what) {
        out << (cond ? "  ok    " : "  FAIL  ") << what << '\n';
        ok = ok && cond;
    };
    json doc{{"command", "verify"}, {"l", l}, {"model", to_string(effective_model(config))}};

    if (effective_model(config) == Model::Exterior) {
        const QuotientModel m(l);
        const auto& alg = m.algebra();
        out << alg.name() << ": dim " << alg.dim() << '\n';
        const auto jac = check_jacobi(alg);
        check(jac.passed, "Jacobi identity on all basis triples");
        check(check_weight_additivity(alg), "bracket is weight-additive");
        check(alg.dim() == l * (2 * l - 1) - 1, "dim = l(2l-1) - 1");
        const auto z = center(alg);
        check(z.basis.rows() == 0, "centre is zero");
        out << "centre: dim " << z.basis.rows() << '\n';
        doc["dim"] = alg.dim();
        doc["jacobi"] = jac.passed;
        doc["center_dim"] = z.basis.rows();
    } else {
        const auto alg = build_chevalley_D(l);
        out << alg.name() << ": dim " << alg.dim() << '\n';
        const auto jac = check_jacobi(alg);
        check(jac.passed, "Jacobi identity on all basis triples");
        if (!jac.passed && jac.failing_triple) {
            const auto& t = *jac.failing_triple;
            err << "  failing triple " << to_string(alg.label(t[0])) << ", " << to_string(alg.label(t[1])) << ", "
                << to_string(alg.label(t[2])) << " -> " << alg.describe(jac.value) << '\n';
        }
        check(check_weight_additivity(alg), "bracket is weight-additive");
        check(alg.dim() == l * (2 * l - 1), "dim = l(2l-1)");

        const auto z = center(alg);
        out << "centre: dim " << z.basis.rows() << ", generators";
        json gens = json::array();
        for (const auto& g : z.basis.row_data()) {
            out << "  " << alg.describe(g);
            gens.push_back(alg.describe(g));
        }
        out << '\n';
        const auto expected = expected_center(l, alg.dim());
        check(z.same_span(expected), std::string("centre = <") + alg.describe(expected.basis.row(0)) +
                                         (l % 2 == 0 ? ", " + alg.describe(expected.basis.row(1)) : "") + ">");

        const auto q = quotient_by_center(alg, z);
        out << "quotient by centre: dim " << q.dim() << '\n';
        const auto qjac = check_jacobi(q);
        check(qjac.passed, "Jacobi identity on the quotient");
        check(center(q).basis.rows() == 0, "quotient is centreless");

        const auto blocks = weight_decomposition(alg);
        const auto zero = Weight(std::vector<int>(l, 0));
        bool roots_ok = blocks.size() == sys.roots().size() + 1;
        for (const auto& r : sys.roots()) {
            const auto it = blocks.find(r);
            roots_ok = roots_ok && it != blocks.end() && it->second.basis.rows() == 1;
        }
        check(blocks.count(zero) && blocks.at(zero).basis.rows() == l, "weight-0 subspace is the Cartan span");
        check(roots_ok, "each root weight space is 1-dimensional");

        doc["dim"] = alg.dim();
        doc["jacobi"] = jac.passed;
        doc["center_dim"] = z.basis.rows();
        doc["center_generators"] = gens;
        doc["quotient_dim"] = q.dim();
        doc["quotient_jacobi"] = qjac.passed;
    }
    doc["passed"] = ok;
    if (!write_json(config, doc, err)) return kUsage;
    out << (ok ? "all structural checks passed\n" : "structural check FAILED\n");
    return ok ? kOk : kDiscrepancy;
}

int cmd_cohomology(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto l = rank_of(config);
    const RootSystem sys(l);
    const auto subject = make_subject(config);
    const auto& alg = subject.algebra;
    const auto survey = h2_weight_survey(alg, config.jobs);

    out << alg.name() << ": dim " << alg.dim() << ", " << survey.weights_scanned << " weights scanned\n";
    out << "dim H^2 = " << survey.total() << " over " << survey.nonzero.size() << " weights\n";
    for (const auto& e : survey.nonzero) {
        out << "  " << weight_line(e.weight, sys) << "  dim " << e.dim_h2;
        if (config.verbosity > 0) out << "  [C2 " << e.dim_c2 << ", Z2 " << e.dim_z2 << ", B2 " << e.dim_b2 << "]";
        out << '\n';
    }

    auto doc = to_json(survey, sys);
    doc["command"] = "cohomology";
    doc["l"] = l;
    doc["model"] = to_string(effective_model(config));
    doc["algebra"] = alg.name();

    const auto expected = expected_h2_weights(sys);
    bool ok = true;
    if (!expected.empty()) {
        std::set<Weight> found;
        bool all_one = true;
        for (const auto& e : survey.nonzero) {
            found.insert(e.weight);
            all_one = all_one && e.dim_h2 == 1;
        }
        ok = found == expected && all_one;
        out << (ok ? "matches" : "DOES NOT match") << " the expected weight set (" << expected.size()
            << " weights, each of dimension 1)\n";
        doc["expected_total"] = expected.size();
    }
    doc["matches_expected"] = ok;
    if (!write_json(config, doc, err)) return kUsage;
    return ok ? kOk : kDiscrepancy;
}

int cmd_rigidity(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto l = rank_of(config);
    const RootSystem sys(l);
    const auto subject = make_subject(config);
    const auto reports = subject.model ? rigidity_scan(*subject.model)
                                       : rigidity_scan_generic(subject.algebra, config.jobs);

    out << subject.algebra.name() << ": " << reports.size() << " classes\n";
    json list = json::array();
    bool ok = reports.size() == 2 * l;
    for (const auto& r : reports) {
        ok = ok && r.verdict == Verdict::Nontrivial;
        out << "  " << weight_line(r.weight, sys) << "  " << to_string(r.verdict);
        if (r.obstruction_weight) out << "  obstruction weight " << to_string(*r.obstruction_weight);
        out << '\n';
        if (config.verbosity > 0 && r.witness_triple) {
            const auto& t = *r.witness_triple;
            out << "      witness (" << to_string(subject.algebra.label(t[0])) << ", "
                << to_string(subject.algebra.label(t[1])) << ", " << to_string(subject.algebra.label(t[2]))
                << ") -> " << subject.algebra.describe(r.witness_value) << '\n';
        }
        list.push_back(to_json(r, subject.algebra, sys));
    }
    out << (ok ? "rigid: every class has a nontrivial cup-square obstruction\n"
               : "DISCREPANCY: some class is not obstructed\n");

    json doc{{"command", "rigidity"},
             {"l", l},
             {"model", to_string(effective_model(config))},
             {"algebra", subject.algebra.name()},
             {"reports", list},
             {"rigid", ok}};
    if (!write_json(config, doc, err)) return kUsage;
    return ok ? kOk : kDiscrepancy;
}

int cmd_integrability(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto l = rank_of(config);
    const RootSystem sys(l);
    const auto alg = build_chevalley_D(l);
    const auto reports = integrability_scan(alg, config.jobs);

    out << alg.name() << ": " << reports.size() << " classes\n";
    json list = json::array();
    bool ok = !reports.empty();
    for (const auto& r : reports) {
        const bool good = r.verdict == Verdict::Zero && r.deformation_verified && r.central_valued &&
                          r.vanishes_on_center;
        ok = ok && good;
        out << "  " << weight_line(r.weight, sys) << "  " << to_string(r.verdict)
            << (r.deformation_verified ? "  f_t verified" : "  f_t FAILED") << '\n';
        if (config.verbosity > 0) {
            out << "      central-valued " << (r.central_valued ? "yes" : "no") << ", vanishes on centre "
                << (r.vanishes_on_center ? "yes" : "no") << ", " << r.representative.support_size() << " terms\n";
        }
        list.push_back(to_json(r, alg, sys));
    }
    out << (ok ? "integrable: every class has zero cup square and f_t is a Lie bracket\n"
               : "DISCREPANCY: some class failed\n");

    json doc{{"command", "integrability"},
             {"l", l},
             {"model", "chevalley"},
             {"algebra", alg.name()},
             {"reports", list},
             {"integrable", ok}};
    if (!write_json(config, doc, err)) return kUsage;
    return ok ? kOk : kDiscrepancy;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (auto e = usage_error(config)) {
        err << "usage error: " << *e << '\n';
        return kUsage;
    }
    if (config.l > kDefaultMaxRank) {
        if (!config.allow_large) {
            err << "usage error: l > " << kDefaultMaxRank << " needs --allow-large\n";
            return kUsage;
        }
        err << "warning: l = " << config.l << " is above the default cap of " << kDefaultMaxRank
            << "; this may take a long time\n";
    }
    try {
        switch (config.command) {
            case Command::Verify: return cmd_verify(config, out, err);
            case Command::Cohomology: return cmd_cohomology(config, out, err);
            case Command::Rigidity: return cmd_rigidity(config, out, err);
            case Command::Integrability: return cmd_integrability(config, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDiscrepancy;
    }
    return kUsage;
}

}  // namespace modlie::cli
