#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "modlie/cohomology.hpp"
#include "modlie/lie_algebra.hpp"
#include "support.hpp"

using namespace modlie;
using namespace modlie::testing;

namespace {

/// Position of e_{+-i} in the natural 2l-dimensional module (e_1..e_l, e_-l..e_-1).
std::size_t pos(std::size_t l, int signed_index) {
    return signed_index > 0 ? static_cast<std::size_t>(signed_index) - 1
                            : 2 * l - static_cast<std::size_t>(-signed_index);
}

/// Natural representation of so(2l) reduced mod 2; every sign disappears.
GF2Matrix natural_rep(const LieAlgebra& alg, std::size_t l, std::size_t basis_index) {
    GF2Matrix m(2 * l, 2 * l);
    auto unit = [&](int a, int b) { m.set(pos(l, a), pos(l, b), !m.get(pos(l, a), pos(l, b))); };
    const auto& lab = alg.label(basis_index);
    if (lab.kind == BasisLabel::Kind::Cartan) {
        const int i = static_cast<int>(lab.cartan_index);
        const int li = static_cast<int>(l);
        const int a = i < li ? i : li - 1;
        const int b = i < li ? i + 1 : li;
        for (int k : {a, b}) {
            unit(k, k);
            unit(-k, -k);
        }
        return m;
    }
    // Root +-eps_i +- eps_j: E = e_{s_i i, -s_j j} + e_{s_j j, -s_i i} with signs mod 2.
    std::vector<int> idx;
    for (std::size_t k = 0; k < l; ++k) {
        if (lab.root.coords[k] != 0) idx.push_back(lab.root.coords[k] * static_cast<int>(k + 1));
    }
    REQUIRE(idx.size() == 2);
    unit(idx[0], -idx[1]);
    unit(idx[1], -idx[0]);
    return m;
}

GF2Matrix rep_of(const LieAlgebra& alg, std::size_t l, const GF2Vector& v) {
    GF2Matrix out(2 * l, 2 * l);
    for (auto i : v.support()) {
        const auto m = natural_rep(alg, l, i);
        for (std::size_t r = 0; r < 2 * l; ++r) {
            for (std::size_t c = 0; c < 2 * l; ++c) {
                if (m.get(r, c)) out.set(r, c, !out.get(r, c));
            }
        }
    }
    return out;
}

GF2Matrix commutator(const GF2Matrix& a, const GF2Matrix& b) {
    auto ab = a.multiply(b);
    const auto ba = b.multiply(a);
    for (std::size_t r = 0; r < ab.rows(); ++r) {
        for (std::size_t c = 0; c < ab.cols(); ++c) {
            if (ba.get(r, c)) ab.set(r, c, !ab.get(r, c));
        }
    }
    return ab;
}

/// Same algebra with basis vectors reordered: new index k holds old index perm[k].
LieAlgebra permute_basis(const LieAlgebra& alg, const std::vector<std::size_t>& perm) {
    const auto n = alg.dim();
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[perm[k]] = k;
    std::vector<BasisLabel> labels;
    std::vector<Weight> weights;
    for (auto p : perm) {
        labels.push_back(alg.label(p));
        weights.push_back(alg.weight(p));
    }
    LieAlgebra::BracketEntries entries;
    for (const auto& [key, value] : alg.bracket_entries()) {
        GF2Vector v(n);
        for (auto m : value.support()) v.set(inverse[m]);
        auto a = inverse[key.first];
        auto b = inverse[key.second];
        if (a > b) std::swap(a, b);
        entries[{a, b}] = v;
    }
    return LieAlgebra(alg.name() + "'", labels, weights, entries);
}

}  // namespace

TEST_SUITE("chevalley") {

TEST_CASE("dimensions and rejection") {
    CHECK_THROWS_AS((void)build_chevalley_D(2), std::invalid_argument);
    for (std::size_t l = 3; l <= 8; ++l) CHECK(build_chevalley_D(l).dim() == l * (2 * l - 1));
    CHECK(build_chevalley_D(4).dim() == 28);
}

TEST_CASE("structure constants against the natural representation mod 2") {
    for (std::size_t l = 3; l <= 6; ++l) {
        const auto alg = build_chevalley_D(l);
        std::vector<GF2Matrix> rho;
        for (std::size_t i = 0; i < alg.dim(); ++i) rho.push_back(natural_rep(alg, l, i));
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            for (std::size_t j = i + 1; j < alg.dim(); ++j) {
                const bool ok = rep_of(alg, l, alg.bracket(i, j)) == commutator(rho[i], rho[j]);
                if (!ok) FAIL_CHECK("l=" << l << " [" << to_string(alg.label(i)) << ", " << to_string(alg.label(j)) << "]");
            }
        }
    }
}

TEST_CASE("hand-computed brackets") {
    const auto d4 = build_chevalley_D(4);
    const RootSystem sys(4);
    // a_4 + a_3 = 2 eps_3 is not a root.
    CHECK(d4.bracket(root_vector(d4, sys.simple_root(4)), root_vector(d4, sys.simple_root(3))).is_zero());
    // eps_1 + eps_2 = a1 + 2a2 + a3 + a4.
    const auto h = d4.bracket(root_vector(d4, eps(4, 1) + eps(4, 2)), root_vector(d4, -(eps(4, 1) + eps(4, 2))));
    CHECK(h == cartan_sum(28, {1, 3, 4}));
    // [E_a1, E_a2] = E_{a1+a2}.
    const auto e = d4.bracket(root_vector(d4, sys.simple_root(1)), root_vector(d4, sys.simple_root(2)));
    CHECK(e == d4.unit(root_vector(d4, eps(4, 1) - eps(4, 3))));
    // [H_2, E_a1] = <a1, a2> E_a1 = E_a1 mod 2; [H_3, E_a1] = 0.
    const auto ea1 = root_vector(d4, sys.simple_root(1));
    CHECK(d4.bracket(cartan(2), ea1) == d4.unit(ea1));
    CHECK(d4.bracket(cartan(3), ea1).is_zero());
    CHECK(d4.bracket(cartan(1), cartan(2)).is_zero());
}

TEST_CASE("Jacobi and weight additivity") {
    for (std::size_t l = 3; l <= 8; ++l) {
        const auto alg = build_chevalley_D(l);
        CHECK(check_jacobi(alg).passed);
        CHECK(check_weight_additivity(alg));
        const auto q = quotient_by_center(alg, center(alg));
        CHECK(check_jacobi(q).passed);
        CHECK(check_weight_additivity(q));
    }
}

TEST_CASE("a corrupted structure constant breaks Jacobi") {
    const auto d4 = build_chevalley_D(4);
    const RootSystem sys(4);
    auto i = root_vector(d4, sys.simple_root(1));
    auto j = root_vector(d4, sys.simple_root(2));
    if (i > j) std::swap(i, j);
    const auto bad = d4.with_bracket(i, j, d4.bracket(i, j) + d4.bracket(i, j));
    const auto report = check_jacobi(bad);
    CHECK(!report.passed);
    REQUIRE(report.failing_triple.has_value());
    CHECK(!report.value.is_zero());
}

TEST_CASE("centre") {
    const auto d5 = build_chevalley_D(5);
    Subspace expect5{45, GF2Matrix::empty(45)};
    expect5.basis.append_row(cartan_sum(45, {5, 4}));
    CHECK(center(d5).same_span(expect5));

    Subspace expect4{28, GF2Matrix::empty(28)};
    expect4.basis.append_row(cartan_sum(28, {4, 3}));
    expect4.basis.append_row(cartan_sum(28, {3, 1}));
    CHECK(center(build_chevalley_D(4)).same_span(expect4));

    Subspace expect6{66, GF2Matrix::empty(66)};
    expect6.basis.append_row(cartan_sum(66, {6, 5}));
    expect6.basis.append_row(cartan_sum(66, {5, 3, 1}));
    CHECK(center(build_chevalley_D(6)).same_span(expect6));

    for (std::size_t l = 4; l <= 8; ++l) {
        const auto alg = build_chevalley_D(l);
        const auto z = center(alg);
        Subspace expect{alg.dim(), GF2Matrix::empty(alg.dim())};
        expect.basis.append_row(cartan_sum(alg.dim(), {l, l - 1}));
        if (l % 2 == 0) {
            GF2Vector g(alg.dim());
            for (std::size_t i = 1; i < l; i += 2) g.set(i - 1);
            expect.basis.append_row(g);
        }
        CHECK(z.dim() == (l % 2 == 0 ? 2u : 1u));
        CHECK(z.same_span(expect));
        for (const auto& g : z.basis.row_data()) {
            for (std::size_t b = 0; b < alg.dim(); ++b) CHECK(alg.bracket(g, alg.unit(b)).is_zero());
        }
    }
}

TEST_CASE("central quotient") {
    const auto d5 = build_chevalley_D(5);
    const auto z = center(d5);
    const CentralQuotient q(d5, z);
    CHECK(q.algebra().dim() == 44);
    CHECK(q.project(d5.unit(cartan(5))) == q.project(d5.unit(cartan(4))));
    CHECK(q.project(cartan_sum(45, {4, 5})).is_zero());
    CHECK(center(q.algebra()).dim() == 0);

    const auto same = quotient_by_center(d5, Subspace{45, GF2Matrix::empty(45)});
    CHECK(same.dim() == d5.dim());
    CHECK(same.bracket_entries() == d5.bracket_entries());

    Subspace not_central{45, GF2Matrix::empty(45)};
    not_central.basis.append_row(d5.unit(cartan(1)));
    CHECK_THROWS_AS(CentralQuotient(d5, not_central), std::invalid_argument);

    // Projection is a homomorphism.
    for (std::size_t i = 0; i < d5.dim(); ++i) {
        for (std::size_t j = i + 1; j < d5.dim(); ++j) {
            CHECK(q.project(d5.bracket(i, j)) ==
                  q.algebra().bracket(q.project(d5.unit(i)), q.project(d5.unit(j))));
        }
    }
}

TEST_CASE("quotient results do not depend on the dropped representative") {
    // Reordering H_4 and H_5 makes the quotient drop H_4 instead of H_5.
    const auto d5 = build_chevalley_D(5);
    std::vector<std::size_t> perm(d5.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[3], perm[4]);
    const auto swapped = permute_basis(d5, perm);
    const auto q1 = quotient_by_center(d5, center(d5));
    const auto q2 = quotient_by_center(swapped, center(swapped));
    CHECK(q1.dim() == q2.dim());
    CHECK(check_jacobi(q2).passed);
    const auto s1 = h2_weight_survey(q1);
    const auto s2 = h2_weight_survey(q2);
    CHECK(s1.dimensions() == s2.dimensions());
    CHECK(s1.weights_scanned == s2.weights_scanned);

    // D_4: drop a different pair of Cartan generators.
    const auto d4 = build_chevalley_D(4);
    std::vector<std::size_t> p4(d4.dim());
    std::iota(p4.begin(), p4.end(), 0);
    std::swap(p4[0], p4[3]);
    const auto s4 = permute_basis(d4, p4);
    CHECK(h2_weight_survey(quotient_by_center(d4, center(d4))).dimensions() ==
          h2_weight_survey(quotient_by_center(s4, center(s4))).dimensions());
}

TEST_CASE("weight decomposition") {
    const auto d4 = build_chevalley_D(4);
    CHECK(weight_decomposition(d4).at(Weight(4)).dim() == 4);

    const auto d5 = build_chevalley_D(5);
    const auto blocks = weight_decomposition(d5);
    CHECK(blocks.size() == 41);
    std::size_t roots = 0;
    for (const auto& [w, s] : blocks) {
        if (w.is_zero()) continue;
        ++roots;
        CHECK(s.dim() == 1);
    }
    CHECK(roots == 40);

    const auto q5 = quotient_by_center(d5, center(d5));
    CHECK(weight_decomposition(q5).at(Weight(5)).dim() == 4);
}

TEST_CASE("bracket on vectors is bilinear and alternating") {
    const auto d4 = build_chevalley_D(4);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        const auto x = random_vector(28, rng);
        const auto y = random_vector(28, rng);
        const auto z = random_vector(28, rng);
        CHECK(d4.bracket(x, x).is_zero());
        CHECK(d4.bracket(x + y, z) == d4.bracket(x, z) + d4.bracket(y, z));
        CHECK(d4.bracket(x, y) == d4.bracket(y, x));
    }
}

TEST_CASE("labels") {
    const auto d4 = build_chevalley_D(4);
    CHECK(to_string(d4.label(0)) == "H1");
    CHECK(to_string(d4.label(root_vector(d4, eps(4, 1) - eps(4, 2)))) == "E[e1-e2]");
    CHECK(d4.describe(cartan_sum(28, {1, 3})) == "H1 + H3");
    CHECK(d4.describe(GF2Vector(28)) == "0");
}

}
