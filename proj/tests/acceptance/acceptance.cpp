// One line per acceptance criterion; exit status is nonzero if any fails.

#include "unbend/horospherical.hpp"
#include "unbend/parabolic.hpp"
#include "unbend/roots.hpp"
#include "unbend/weights.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace unbend;

namespace {

constexpr int kMaxRank = 8;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int classical_positive_count(const LieType& t) {
    const int l = t.rank();
    switch (t.family()) {
        case Family::A: return l * (l + 1) / 2;
        case Family::B:
        case Family::C: return l * l;
        case Family::D: return l * (l - 1);
        case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

std::vector<int> expected_special(const LieType& t) {
    switch (t.family()) {
        case Family::A: return t.rank() == 1 ? std::vector<int>{1} : std::vector<int>{1, t.rank()};
        case Family::B:
        case Family::D: return {2};
        case Family::C: return {1};
        case Family::E: return {t.rank() == 8 ? 1 : 6};
        case Family::F: return {4};
        case Family::G: return {2};
    }
    return {};
}

Outcome key_inequality() {
    Outcome o;
    int checked = 0;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        const RootSystem rs(t);
        const Root& theta = rs.highest();
        if (rs.pairing(theta, theta) != 2) o.fail(t.name() + ": (theta, theta^vee) != 2");
        for (const Root& beta : rs.positive_roots()) {
            if (beta == theta) continue;
            const int p = rs.pairing(beta, theta);
            ++checked;
            if (p != 0 && p != 1) o.fail(t.name() + ": (" + beta.to_string() + ", theta^vee) = " + std::to_string(p));
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " positive roots checked";
    return o;
}

Outcome special_node_table() {
    Outcome o;
    int types = 0;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        ++types;
        const auto got = special_nodes(RootSystem(t));
        if (got != expected_special(t)) o.fail(t.name() + " special nodes differ");
    }
    if (o.pass) o.detail = std::to_string(types) + " types";
    return o;
}

Outcome sweep() {
    Outcome o;
    std::size_t markings = 0;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        const SweepReport r = unbendable_sweep(RootSystem(t));
        markings += r.entries.size();
        if (r.entries.size() != (std::size_t{1} << t.rank()) - 1) o.fail(t.name() + ": missing markings");
        if (r.violations() != 0) o.fail(t.name() + ": " + std::to_string(r.violations()) + " violations");
    }
    if (o.pass) o.detail = std::to_string(markings) + " markings, 0 violations";
    return o;
}

Outcome horospherical_pairings() {
    Outcome o;
    const std::vector<std::pair<HoroFamily, int>> expected{{HoroFamily::BPair, 1},
                                                           {HoroFamily::B3Mixed, 0},
                                                           {HoroFamily::CPair, 0},
                                                           {HoroFamily::F4Case, 1},
                                                           {HoroFamily::G2Case, 1}};
    std::vector<std::set<std::string>> seen(expected.size());
    int instances = 0;
    for (const auto& d : catalog_instances(6)) {
        const Rational p = lambda_pairing_theta(RootSystem(d.g_type), d);
        ++instances;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (expected[i].first == d.family) {
                seen[i].insert(to_string(p));
                if (p != expected[i].second) o.fail(d.label() + " pairs to " + to_string(p));
            }
    }
    std::string list = "[";
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i].size() != 1) o.fail(to_string(expected[i].first) + " has no single value");
        list += (i ? ", " : "") + (seen[i].empty() ? std::string("?") : *seen[i].begin());
    }
    list += "]";
    if (o.pass) o.detail = list + " over " + std::to_string(instances) + " instances";
    return o;
}

Outcome bundle_splitting() {
    Outcome o;
    int instances = 0;
    for (const auto& d : catalog_instances(6)) {
        const HorosphericalVerification v = verify(d);
        ++instances;
        if (!v.bundle_in_range()) o.fail(d.label() + ": bundle degree outside {0,1}");
        if (v.total.count(2) != 1) o.fail(d.label() + ": total splitting has " + std::to_string(v.total.count(2)) + " O(2)");
        if (!v.total_class.unbendable()) o.fail(d.label() + ": total splitting not unbendable");
    }
    if (o.pass) o.detail = std::to_string(instances) + " instances";
    return o;
}

Outcome fundamental_positivity() {
    Outcome o;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        const RootSystem rs(t);
        const RationalMatrix inv = inverse_transposed_cartan(t);
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j)
                if (inv(i, j) <= 0) o.fail(t.name() + ": nonpositive entry in (A^t)^{-1}");
        for (int j = 1; j <= t.rank(); ++j)
            if (rs.pairing(fundamental_weight(t, j).root_coords(), rs.highest()) <= 0)
                o.fail(t.name() + ": (varpi_" + std::to_string(j) + ", theta^vee) <= 0");
    }
    if (o.pass) o.detail = "all types rank <= 8";
    return o;
}

Outcome representation_oracle() {
    Outcome o;
    auto expect_dim = [&](const RootSystem& rs, const std::vector<int>& support, const Weight& lambda,
                          std::int64_t dim, const std::string& what) {
        const auto ws = module_weights(rs, support, lambda);
        if (ws.total() != dim || weyl_dimension(rs, support, lambda) != dim) o.fail(what + " has wrong dimension");
        return ws;
    };
    const LieType b3 = make_lie_type('B', 3);
    const RootSystem rb(b3);
    for (int node = 1; node <= 3; ++node)
        for (int m = 0; m <= 5; ++m) {
            std::vector<int> labels{2, 1, 3};
            labels[static_cast<std::size_t>(node - 1)] = m;
            expect_dim(rb, {node}, weight_from_labels(b3, labels), m + 1, "rank-1 string");
        }
    const LieType a2 = make_lie_type('A', 2);
    const RootSystem ra(a2);
    const auto adj = expect_dim(ra, {1, 2}, weight_from_labels(a2, std::vector<int>{1, 1}), 8, "A2 adjoint");
    if (adj.multiplicity(Weight::zero(2)) != 2) o.fail("A2 adjoint zero weight multiplicity != 2");
    const auto spin = expect_dim(rb, {1, 2, 3}, fundamental_weight(b3, 3), 8, "B3 spin");
    if (spin.distinct() != 8) o.fail("B3 spin weights are not multiplicity free");

    std::mt19937 gen(20240607);
    const std::vector<LieType> types{make_lie_type('A', 3), make_lie_type('B', 3), make_lie_type('C', 3),
                                     make_lie_type('D', 4), make_lie_type('G', 2), make_lie_type('B', 2),
                                     make_lie_type('A', 4), make_lie_type('F', 4)};
    int sampled = 0;
    while (sampled < 120) {
        const LieType t = types[gen() % types.size()];
        const RootSystem rs(t);
        std::vector<int> support;
        for (int i = 1; i <= t.rank(); ++i)
            if (gen() % 4 != 0) support.push_back(i);
        if (support.empty()) continue;
        std::vector<int> labels(static_cast<std::size_t>(t.rank()));
        for (auto& x : labels) x = static_cast<int>(gen() % 3);
        // Dominant for the Levi: only support labels are constrained.
        const Weight lambda = weight_from_labels(t, labels);
        Rational height = 0;
        for (int i : support) height += lambda[static_cast<std::size_t>(i - 1)];
        if (height > 12) continue;
        ++sampled;
        const auto ws = module_weights(rs, support, lambda);
        if (ws.total() != weyl_dimension(rs, support, lambda)) o.fail(t.name() + ": Freudenthal != Weyl");
        for (const auto& [mu, m] : ws.entries())
            for (int i : support)
                if (ws.multiplicity(weyl_reflect(rs, mu, i)) != m) o.fail(t.name() + ": not W_L-invariant");
    }
    if (o.pass) o.detail = "fixed suite + " + std::to_string(sampled) + " random dominant weights";
    return o;
}

Outcome structural_oracles() {
    Outcome o;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        const RootSystem rs(t);
        if (static_cast<int>(rs.positive_roots().size()) != classical_positive_count(t))
            o.fail(t.name() + ": root count differs from closed form");
        for (const Root& beta : rs.all_roots())
            for (int i = 1; i <= t.rank(); ++i) {
                std::vector<int> r = beta.coeffs();
                r[static_cast<std::size_t>(i - 1)] -= rs.simple_pairing(beta.coeffs(), i);
                if (!rs.contains(r)) o.fail(t.name() + ": not closed under s_" + std::to_string(i));
            }
        const RationalMatrix at = to_rational(cartan_matrix(t).entries()).transposed();
        if (at * inverse_transposed_cartan(t) != RationalMatrix::identity(at.rows()))
            o.fail(t.name() + ": A^t (A^t)^{-1} != I");
    }
    if (o.pass) o.detail = "all types rank <= 8";
    return o;
}

Outcome minimal_contrast() {
    Outcome o;
    std::vector<std::string> flagged;
    for (const LieType& t : all_lie_types(kMaxRank)) {
        if (t.family() != Family::B && t.family() != Family::C) continue;
        const RootSystem rs(t);
        for (int node = 1; node <= t.rank(); ++node) {
            const MinimalContrast mc = minimal_curve_contrast(rs, node);
            const bool expect = mc.theta_coefficient > 1;
            if (mc.flagged != expect) o.fail(t.name() + " node " + std::to_string(node) + ": flag mismatch");
            if (mc.flagged) flagged.push_back(t.name() + "/" + std::to_string(node));
        }
    }
    const MinimalContrast b4 = minimal_curve_contrast(RootSystem(make_lie_type('B', 4)), 2);
    if (!b4.flagged || !b4.long_root || b4.theta_coefficient != 2) o.fail("B4 node 2 not flagged as long, coefficient 2");
    if (flagged.empty()) o.fail("no flagged (type, node)");
    if (o.pass) o.detail = std::to_string(flagged.size()) + " flagged pairs, e.g. B4 node 2 (long, coefficient 2)";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"key inequality (beta, theta^vee) in {0,1}", key_inequality},
        {"special-node table", special_node_table},
        {"unbendability sweep", sweep},
        {"horospherical pairings [1, 0, 0, 1, 1]", horospherical_pairings},
        {"bundle splitting in {0,1}, one O(2)", bundle_splitting},
        {"fundamental-weight positivity", fundamental_positivity},
        {"representation oracle", representation_oracle},
        {"structural oracles", structural_oracles},
        {"minimal-contrast flag", minimal_contrast},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
