#include "unbend/parabolic.hpp"

#include "unbend/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace unbend {

ParabolicMarking::ParabolicMarking(const LieType& type, std::vector<int> marked)
    : type_(type), marked_(std::move(marked)) {
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
    if (marked_.empty()) throw InvalidMarking("parabolic marking must be nonempty");
    for (int i : marked_)
        if (i < 1 || i > type.rank())
            throw IndexOutOfRange("marked node " + std::to_string(i) + " out of range for " +
                                  type.name());
}

bool ParabolicMarking::is_marked(int node) const {
    return std::binary_search(marked_.begin(), marked_.end(), node);
}

std::vector<int> ParabolicMarking::levi_support() const {
    std::vector<int> out;
    for (int i = 1; i <= type_.rank(); ++i)
        if (!is_marked(i)) out.push_back(i);
    return out;
}

std::string ParabolicMarking::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < marked_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(marked_[i]);
    }
    return s + "}";
}

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long long SplittingType::total_degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::size_t SplittingType::count(int degree) const {
    return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), degree));
}

std::vector<std::pair<int, std::size_t>> SplittingType::runs() const {
    std::vector<std::pair<int, std::size_t>> out;
    for (int d : degrees_) {
        if (!out.empty() && out.back().first == d)
            ++out.back().second;
        else
            out.emplace_back(d, 1);
    }
    return out;
}

std::string SplittingType::to_string() const {
    if (degrees_.empty()) return "0";
    std::string s;
    for (auto [d, mult] : runs()) {
        if (!s.empty()) s += " + ";
        s += d == 0 ? "O" : "O(" + std::to_string(d) + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

SplittingType SplittingType::merged(const SplittingType& other) const {
    std::vector<int> all = degrees_;
    all.insert(all.end(), other.degrees_.begin(), other.degrees_.end());
    return SplittingType(std::move(all));
}

int n_coeff(const RootSystem& rs, const ParabolicMarking& m, const Root& beta) {
    if (!rs.contains(beta)) throw NotARoot(beta.to_string() + " is not a root of " + rs.type().name());
    int s = 0;
    for (int i : m.marked()) s += beta.coefficient(i);
    return s;
}

RootPartition partition(const RootSystem& rs, const ParabolicMarking& m) {
    RootPartition out;
    for (const Root& r : rs.positive_roots()) {
        if (n_coeff(rs, m, r) > 0) {
            out.positive.push_back(r);
            out.negative.push_back(-r);
        } else {
            out.zero.push_back(r);
            out.zero.push_back(-r);
        }
    }
    std::sort(out.negative.begin(), out.negative.end());
    std::sort(out.zero.begin(), out.zero.end());
    return out;
}

int homogeneous_dimension(const RootSystem& rs, const ParabolicMarking& m) {
    int dim = 0;
    for (const Root& r : rs.positive_roots())
        if (n_coeff(rs, m, r) > 0) ++dim;
    return dim;
}

SplittingType tangent_splitting(const RootSystem& rs, const ParabolicMarking& m, const Root& alpha) {
    if (!rs.contains(alpha) || !alpha.positive())
        throw NotARoot(alpha.to_string() + " is not a positive root of " + rs.type().name());
    if (n_coeff(rs, m, alpha) == 0)
        throw CurveContracted("C_" + alpha.to_string() + " is a point in G/P for marking " +
                              m.to_string());
    std::vector<int> degrees;
    for (const Root& beta : rs.positive_roots())
        if (n_coeff(rs, m, beta) > 0) degrees.push_back(rs.pairing(beta, alpha));
    return SplittingType(std::move(degrees));
}

std::string to_string(SplittingClass kind) {
    switch (kind) {
        case SplittingClass::Unbendable: return "unbendable";
        case SplittingClass::NonnegativeNotUnbendable: return "nonnegative-not-unbendable";
        case SplittingClass::NotNonnegative: return "not-nonnegative";
    }
    return "?";
}

Classification classify_splitting(const SplittingType& s) {
    Classification c;
    if (!s.empty() && s.min() < 0) {
        c.kind = SplittingClass::NotNonnegative;
        return c;
    }
    const bool in_range = s.empty() || s.max() <= 2;
    if (in_range && s.count(2) == 1) {
        c.kind = SplittingClass::Unbendable;
        c.p = static_cast<int>(s.count(1));
        c.q = static_cast<int>(s.count(0));
    } else {
        c.kind = SplittingClass::NonnegativeNotUnbendable;
    }
    return c;
}

std::size_t SweepReport::violations() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SweepEntry& e) {
        return !e.classification.unbendable();
    }));
}

SweepReport unbendable_sweep(const RootSystem& rs) {
    const int l = rs.rank();
    const Root& theta = rs.highest();
    SweepReport report{rs.type(), {}};
    for (unsigned mask = 1; mask < (1U << l); ++mask) {
        std::vector<int> marked;
        for (int i = 0; i < l; ++i)
            if (mask & (1U << i)) marked.push_back(i + 1);
        ParabolicMarking m(rs.type(), marked);
        SweepEntry e;
        e.marked = std::move(marked);
        e.splitting = tangent_splitting(rs, m, theta);
        e.classification = classify_splitting(e.splitting);
        e.dimension = static_cast<int>(e.splitting.size());
        report.entries.push_back(std::move(e));
    }
    std::sort(report.entries.begin(), report.entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
        if (a.marked.size() != b.marked.size()) return a.marked.size() < b.marked.size();
        return a.marked < b.marked;
    });
    return report;
}

MinimalContrast minimal_curve_contrast(const RootSystem& rs, int node) {
    if (node < 1 || node > rs.rank())
        throw IndexOutOfRange("node " + std::to_string(node) + " out of range for " + rs.type().name());
    const Root alpha = Root::simple(rs.rank(), node);
    const ParabolicMarking m(rs.type(), {node});
    MinimalContrast out;
    out.node = node;
    out.splitting = tangent_splitting(rs, m, alpha);
    out.classification = classify_splitting(out.splitting);
    out.theta_coefficient = rs.highest().coefficient(node);
    const auto i = static_cast<std::size_t>(node - 1);
    Rational longest = 0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(rs.rank()); ++k)
        longest = std::max(longest, rs.gram()(k, k));
    out.long_root = rs.gram()(i, i) == longest;
    out.flagged = out.theta_coefficient > 1;
    return out;
}

}  // namespace unbend
