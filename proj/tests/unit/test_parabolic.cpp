#include "oracles.hpp"
#include "unbend/errors.hpp"
#include "unbend/parabolic.hpp"

#include <doctest.h>

using namespace unbend;

namespace {
Root R(std::vector<int> c) { return Root(std::move(c)); }
}  // namespace

TEST_CASE("marking validation") {
    const LieType a2 = make_lie_type('A', 2);
    CHECK_THROWS_AS(ParabolicMarking(a2, {}), InvalidMarking);
    CHECK_THROWS_AS(ParabolicMarking(a2, {3}), IndexOutOfRange);
    CHECK_THROWS_AS(ParabolicMarking(a2, {0}), IndexOutOfRange);
    const ParabolicMarking m(a2, {2, 1, 2});
    CHECK(m.marked() == std::vector<int>{1, 2});
    CHECK(m.levi_support().empty());
    CHECK(ParabolicMarking(make_lie_type('B', 4), {2}).levi_support() == std::vector<int>{1, 3, 4});
}

TEST_CASE("n_coeff") {
    const RootSystem a2(make_lie_type('A', 2));
    CHECK(n_coeff(a2, ParabolicMarking(a2.type(), {1}), R({1, 1})) == 1);
    CHECK(n_coeff(a2, ParabolicMarking(a2.type(), {1, 2}), a2.highest()) == 2);
    CHECK_THROWS_AS(n_coeff(a2, ParabolicMarking(a2.type(), {1}), R({2, 1})), NotARoot);
    for (const LieType& t : all_lie_types(8)) {
        const RootSystem rs(t);
        for (int i = 1; i <= t.rank(); ++i)
            CHECK(n_coeff(rs, ParabolicMarking(t, {i}), rs.highest()) == rs.highest().coefficient(i));
    }
}

TEST_CASE("partition examples") {
    const RootSystem a2(make_lie_type('A', 2));
    const auto borel = partition(a2, ParabolicMarking(a2.type(), {1, 2}));
    CHECK(borel.zero.empty());
    CHECK(borel.positive.size() == 3);
    const auto p1 = partition(a2, ParabolicMarking(a2.type(), {1}));
    CHECK(p1.positive.size() == 2);
    REQUIRE(p1.zero.size() == 2);
    CHECK(p1.zero[0] == R({0, -1}));
    CHECK(p1.zero[1] == R({0, 1}));

    const RootSystem b4(make_lie_type('B', 4));
    CHECK(partition(b4, ParabolicMarking(b4.type(), {2})).positive.size() ==
          static_cast<std::size_t>(oracle::og_dimension(2, 4)));
    for (int k = 1; k <= 4; ++k)
        CHECK(homogeneous_dimension(b4, ParabolicMarking(b4.type(), {k})) == oracle::og_dimension(k, 4));
    for (int n = 1; n <= 6; ++n) {
        const RootSystem an(make_lie_type('A', n));
        for (int k = 1; k <= n; ++k)
            CHECK(homogeneous_dimension(an, ParabolicMarking(an.type(), {k})) == oracle::gr_dimension(k, n));
    }
}

TEST_CASE("partition invariants") {
    for (const LieType& t : all_lie_types(5)) {
        const RootSystem rs(t);
        const int l = t.rank();
        for (unsigned mask = 1; mask < (1U << l); ++mask) {
            std::vector<int> marked;
            for (int i = 0; i < l; ++i)
                if (mask & (1U << i)) marked.push_back(i + 1);
            const ParabolicMarking m(t, marked);
            const auto part = partition(rs, m);
            INFO(t.name(), " ", m.to_string());
            CHECK(part.positive.size() + part.zero.size() / 2 == rs.positive_roots().size());
            std::set<std::vector<int>> neg;
            for (const Root& r : part.negative) neg.insert(r.coeffs());
            for (const Root& r : part.positive) CHECK(neg.contains((-r).coeffs()));
            CHECK(neg.size() == part.positive.size());
            // Phi^0 is closed under negation and under addition inside Phi.
            std::set<std::vector<int>> zero;
            for (const Root& r : part.zero) zero.insert(r.coeffs());
            for (const Root& a : part.zero) {
                CHECK(zero.contains((-a).coeffs()));
                for (const Root& b : part.zero) {
                    std::vector<int> s = a.coeffs();
                    for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
                    if (rs.contains(s)) CHECK(zero.contains(s));
                }
            }
            // theta is always in Phi^+ of the marking.
            CHECK(std::find(part.positive.begin(), part.positive.end(), rs.highest()) != part.positive.end());
        }
    }
}

TEST_CASE("tangent splitting examples") {
    const RootSystem a1(make_lie_type('A', 1));
    CHECK(tangent_splitting(a1, ParabolicMarking(a1.type(), {1}), a1.highest()).degrees() == std::vector<int>{2});
    const RootSystem a2(make_lie_type('A', 2));
    // Phi^+ = {alpha_1, alpha_1 + alpha_2}; pairings with theta^vee are 1 and 2.
    CHECK(tangent_splitting(a2, ParabolicMarking(a2.type(), {1}), a2.highest()).degrees() ==
          std::vector<int>{2, 1});
    CHECK_THROWS_AS(tangent_splitting(a2, ParabolicMarking(a2.type(), {1}), R({0, 1})), CurveContracted);
    CHECK_THROWS_AS(tangent_splitting(a2, ParabolicMarking(a2.type(), {1}), R({2, 1})), NotARoot);
    CHECK_THROWS_AS(tangent_splitting(a2, ParabolicMarking(a2.type(), {1}), R({-1, 0})), NotARoot);

    const RootSystem e7(make_lie_type('E', 7));
    const ParabolicMarking full(e7.type(), {1, 2, 3, 4, 5, 6, 7});
    CHECK(tangent_splitting(e7, full, e7.highest()).size() == e7.positive_roots().size());
}

TEST_CASE("classify_splitting") {
    auto c = classify_splitting(SplittingType({1, 0, 2, 1}));
    CHECK(c.kind == SplittingClass::Unbendable);
    CHECK(c.p == 2);
    CHECK(c.q == 1);
    CHECK(classify_splitting(SplittingType({2, 2, 1})).kind == SplittingClass::NonnegativeNotUnbendable);
    CHECK(classify_splitting(SplittingType({2, -1})).kind == SplittingClass::NotNonnegative);
    CHECK(classify_splitting(SplittingType({3, 1})).kind == SplittingClass::NonnegativeNotUnbendable);
    CHECK(classify_splitting(SplittingType({1, 1})).kind == SplittingClass::NonnegativeNotUnbendable);
    CHECK(classify_splitting(SplittingType({2})) == Classification{SplittingClass::Unbendable, 0, 0});
}

TEST_CASE("SplittingType bookkeeping") {
    const SplittingType s({0, 1, 2, 1, 0, 0});
    CHECK(s.degrees() == std::vector<int>{2, 1, 1, 0, 0, 0});
    CHECK(s.to_string() == "O(2) + O(1)^2 + O^3");
    CHECK(s.runs() == std::vector<std::pair<int, std::size_t>>{{2, 1}, {1, 2}, {0, 3}});
    CHECK(s.total_degree() == 4);
    CHECK(s.merged(SplittingType({1, -1})).degrees() == std::vector<int>{2, 1, 1, 1, 0, 0, 0, -1});
}

TEST_CASE("unbendable sweep") {
    const auto a1 = unbendable_sweep(RootSystem(make_lie_type('A', 1)));
    REQUIRE(a1.entries.size() == 1);
    CHECK(a1.entries[0].classification == Classification{SplittingClass::Unbendable, 0, 0});
    const auto g2 = unbendable_sweep(RootSystem(make_lie_type('G', 2)));
    CHECK(g2.entries.size() == 3);
    CHECK(g2.violations() == 0);
    CHECK(g2.entries[0].marked == std::vector<int>{1});
    CHECK(g2.entries[2].marked == std::vector<int>{1, 2});
    for (const LieType& t : all_lie_types(6)) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const auto sweep = unbendable_sweep(rs);
        CHECK(sweep.entries.size() == (1U << t.rank()) - 1);
        CHECK(sweep.violations() == 0);
        for (const auto& e : sweep.entries) {
            CHECK(e.splitting.count(2) == 1);
            CHECK(e.splitting.total_degree() == 2 + e.classification.p);
            CHECK(e.dimension == homogeneous_dimension(rs, ParabolicMarking(t, e.marked)));
        }
    }
}

TEST_CASE("minimal curve contrast") {
    for (int l = 1; l <= 5; ++l) {
        const RootSystem rs(make_lie_type('A', l));
        for (int i = 1; i <= l; ++i) {
            const auto mc = minimal_curve_contrast(rs, i);
            CHECK(mc.theta_coefficient == 1);
            CHECK_FALSE(mc.flagged);
        }
    }
    const RootSystem b2(make_lie_type('B', 2));
    const auto short_node = minimal_curve_contrast(b2, 2);
    CHECK(short_node.theta_coefficient == 2);
    CHECK(short_node.flagged);
    CHECK_FALSE(short_node.long_root);
    CHECK_FALSE(minimal_curve_contrast(b2, 1).flagged);

    const RootSystem b4(make_lie_type('B', 4));
    const auto mc = minimal_curve_contrast(b4, 2);
    CHECK(mc.flagged);
    CHECK(mc.long_root);
    // beta = e1 + e3 = a1 + a2 + 2a3 + 2a4 pairs to -1 with a2 = e2 - e3.
    CHECK(mc.classification.kind == SplittingClass::NotNonnegative);
    CHECK(mc.splitting.min() == -1);

    const RootSystem c4(make_lie_type('C', 4));
    CHECK(minimal_curve_contrast(c4, 1).flagged);  // short root, coefficient 2
    CHECK_FALSE(minimal_curve_contrast(c4, 4).flagged);  // long root, coefficient 1
    CHECK_THROWS_AS(minimal_curve_contrast(c4, 5), IndexOutOfRange);
}
