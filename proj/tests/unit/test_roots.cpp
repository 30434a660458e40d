#include "oracles.hpp"
#include "unbend/errors.hpp"
#include "unbend/roots.hpp"
#include "unbend/weights.hpp"

#include <doctest.h>

using namespace unbend;

namespace {
Root R(std::vector<int> c) { return Root(std::move(c)); }
}  // namespace

TEST_CASE("Root rejects zero and mixed-sign vectors") {
    CHECK_THROWS_AS(R({0, 0}), NotARoot);
    CHECK_THROWS_AS(R({1, -1}), NotARoot);
    CHECK(R({0, -2}).height() == -2);
    CHECK_THROWS_AS(Root::simple(3, 4), IndexOutOfRange);
}

TEST_CASE("small root systems") {
    const RootSystem a2(make_lie_type('A', 2));
    REQUIRE(a2.positive_roots().size() == 3);
    CHECK(a2.positive_roots()[0] == R({0, 1}));
    CHECK(a2.positive_roots()[1] == R({1, 0}));
    CHECK(a2.positive_roots()[2] == R({1, 1}));
    const RootSystem a1(make_lie_type('A', 1));
    REQUIRE(a1.positive_roots().size() == 1);
    CHECK(a1.highest() == R({1}));
    const RootSystem g2(make_lie_type('G', 2));
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.highest() == R({3, 2}));
}

TEST_CASE("root generation agrees with reflection closure and classical counts") {
    for (const LieType& t : all_lie_types(9)) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const auto oracle_roots = oracle::reflection_closure(rs.cartan());
        std::set<std::vector<int>> generated;
        for (const Root& r : rs.all_roots()) generated.insert(r.coeffs());
        CHECK(generated == oracle_roots);
        CHECK(rs.all_roots().size() == 2 * rs.positive_roots().size());
        // canonical order
        CHECK(std::is_sorted(rs.positive_roots().begin(), rs.positive_roots().end()));
    }
}

TEST_CASE("closure under simple reflections") {
    for (const LieType& t : all_lie_types(8)) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        for (const Root& b : rs.all_roots())
            for (int i = 1; i <= rs.rank(); ++i) {
                std::vector<int> c = b.coeffs();
                c[static_cast<std::size_t>(i - 1)] -= rs.simple_pairing(std::span<const int>(b.coeffs()), i);
                CHECK(rs.contains(c));
            }
    }
}

TEST_CASE("highest root is the coefficientwise maximum") {
    for (const LieType& t : all_lie_types(9)) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        // brute-force maximum
        std::vector<int> top(static_cast<std::size_t>(rs.rank()), 0);
        for (const Root& r : rs.positive_roots())
            for (std::size_t k = 0; k < top.size(); ++k) top[k] = std::max(top[k], r[k]);
        CHECK(highest_root(rs).coeffs() == top);
        for (int c : top) CHECK(c >= 1);
    }
    for (int l = 1; l <= 7; ++l)
        CHECK(RootSystem(make_lie_type('A', l)).highest().coeffs() == std::vector<int>(static_cast<std::size_t>(l), 1));
}

TEST_CASE("coroot pairing") {
    const RootSystem b3(make_lie_type('B', 3));
    const Root& theta = b3.highest();
    CHECK(coroot_pairing(b3, theta, theta) == 2);
    // integral on roots
    for (const Root& b : b3.all_roots())
        for (const Root& a : b3.all_roots()) {
            const Rational p = coroot_pairing(b3, b, a);
            CHECK(is_integer(p));
        }
    CHECK_THROWS_AS(b3.pairing(R({1, 0, 0}), R({1, 1, 3})), NotARoot);
    const RationalVector half{Rational(1, 2), 0, 0};
    CHECK_THROWS_AS(coroot_pairing(b3, half, R({2, 0, 0})), NotARoot);
    // pairing against a negative root flips sign
    CHECK(b3.pairing(R({0, 1, 0}), -theta) == -b3.pairing(R({0, 1, 0}), theta));
}

TEST_CASE("theta minus alpha_i0 pairs to 1 outside type A") {
    for (const LieType& t : all_lie_types(8)) {
        if (t.family() == Family::A) continue;
        CAPTURE(t.name());
        const RootSystem rs(t);
        const auto nodes = special_nodes(rs);
        REQUIRE(nodes.size() == 1);
        std::vector<int> c = rs.highest().coeffs();
        c[static_cast<std::size_t>(nodes.front() - 1)] -= 1;
        const Root below(c);
        REQUIRE(rs.contains(below));
        CHECK(rs.pairing(below, rs.highest()) == 1);
    }
}

TEST_CASE("G2 lambda_V pairs to 1 with theta") {
    const LieType g2 = make_lie_type('G', 2);
    const RootSystem rs(g2);
    const Weight lambda = fundamental_weight(g2, 2) - fundamental_weight(g2, 1);
    CHECK(coroot_pairing(rs, lambda.root_coords(), rs.highest()) == 1);
}

TEST_CASE("special nodes") {
    CHECK(special_nodes(RootSystem(make_lie_type('B', 4))) == std::vector<int>{2});
    CHECK(special_nodes(RootSystem(make_lie_type('F', 4))) == std::vector<int>{4});
    const RootSystem a3(make_lie_type('A', 3));
    CHECK(special_nodes(a3) == std::vector<int>{1, 3});
    CHECK(a3.pairing(Root::simple(3, 1), a3.highest()) == 1);
    CHECK(a3.pairing(Root::simple(3, 3), a3.highest()) == 1);
    const RootSystem a1(make_lie_type('A', 1));
    CHECK(special_nodes(a1) == std::vector<int>{1});
    CHECK(a1.pairing(Root::simple(1, 1), a1.highest()) == 2);
}

TEST_CASE("special nodes survive a round trip through the Bourbaki labeling") {
    // Recompute in Bourbaki coordinates: permute theta through the bridge and
    // pair against the permuted simple roots using the Bourbaki Cartan matrix.
    for (auto [f, r] : {std::pair{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
        const LieType t = make_lie_type(f, r);
        CAPTURE(t.name());
        const RootSystem rs(t);
        const auto bourbaki = oracle::bourbaki_cartan(f, r);
        std::vector<int> theta_b(static_cast<std::size_t>(r));
        for (int i = 1; i <= r; ++i)
            theta_b[static_cast<std::size_t>(labeling_bridge(t, i) - 1)] = rs.highest().coefficient(i);
        std::vector<int> nodes_back;
        for (int j = 1; j <= r; ++j) {
            int p = 0;  // (theta, alpha_j^vee) in Bourbaki labels
            for (int k = 1; k <= r; ++k)
                p += theta_b[static_cast<std::size_t>(k - 1)] *
                     bourbaki[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
            if (p != 0) nodes_back.push_back(inverse_labeling_bridge(t, j));
        }
        std::sort(nodes_back.begin(), nodes_back.end());
        CHECK(nodes_back == special_nodes(rs));
    }
}

TEST_CASE("key inequality holds for positive roots other than theta") {
    for (const LieType& t : all_lie_types(9)) {
        CAPTURE(t.name());
        const RootSystem rs(t);
        const Root& theta = rs.highest();
        CHECK(rs.pairing(theta, theta) == 2);
        for (const Root& b : rs.positive_roots()) {
            if (b == theta) continue;
            const int p = rs.pairing(b, theta);
            CHECK(p >= 0);
            CHECK(p <= 1);
        }
    }
}
