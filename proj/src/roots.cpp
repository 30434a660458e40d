#include "unbend/roots.hpp"

#include "unbend/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unbend {

Root::Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    const bool any_pos = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c > 0; });
    const bool any_neg = std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c < 0; });
    if (!any_pos && !any_neg) throw NotARoot("zero vector is not a root");
    if (any_pos && any_neg) throw NotARoot("mixed-sign vector " + to_string() + " is not a root");
}

Root Root::simple(int rank, int node) {
    if (node < 1 || node > rank)
        throw IndexOutOfRange("simple root index " + std::to_string(node) + " out of range");
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(node - 1)] = 1;
    return Root(std::move(c));
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

Root Root::operator-() const {
    std::vector<int> c = coeffs_;
    for (int& x : c) x = -x;
    return Root(std::move(c));
}

RationalVector Root::as_rational() const { return RationalVector(coeffs_.begin(), coeffs_.end()); }

std::string Root::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s + ")";
}

std::strong_ordering Root::operator<=>(const Root& other) const {
    if (auto c = height() <=> other.height(); c != 0) return c;
    return coeffs_ <=> other.coeffs_;
}

namespace {

std::vector<Root> close_root_strings(const CartanMatrix& a) {
    const int l = a.rank();
    const auto n = static_cast<std::size_t>(l);
    std::set<std::vector<int>> seen;
    std::vector<Root> out;
    std::deque<std::vector<int>> queue;
    for (int i = 1; i <= l; ++i) {
        auto c = Root::simple(l, i).coeffs();
        seen.insert(c);
        queue.push_back(std::move(c));
    }
    // Processing is in nondecreasing height, so every root below beta in an
    // alpha_i-string is already known when beta is expanded.
    while (!queue.empty()) {
        std::vector<int> beta = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            int pairing = 0;
            for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a(k, i);
            int down = 0;
            std::vector<int> probe = beta;
            while (true) {
                probe[i] -= 1;
                if (!seen.contains(probe)) break;
                ++down;
            }
            if (down - pairing > 0) {
                std::vector<int> up = beta;
                up[i] += 1;
                if (seen.insert(up).second) queue.push_back(std::move(up));
            }
        }
        out.emplace_back(std::move(beta));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RootSystem::RootSystem(LieType type)
    : type_(type), cartan_(cartan_matrix(type)), gram_(gram_matrix(type)) {
    positive_ = close_root_strings(cartan_);
    const auto n = static_cast<std::size_t>(rank());
    for (std::size_t r = 0; r < positive_.size(); ++r) {
        positive_index_.emplace(positive_[r].coeffs(), r);
        const RationalVector beta = positive_[r].as_rational();
        const Rational norm = inner(beta, beta);
        std::vector<int> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            Rational v = 0;
            for (std::size_t j = 0; j < n; ++j) v += gram_(k, j) * beta[j];
            v = 2 * v / norm;
            if (!is_integer(v)) throw std::logic_error("non-integral simple-root/coroot pairing");
            row[k] = static_cast<int>(numerator_i64(v));
        }
        coroot_rows_.push_back(std::move(row));
    }
    const Root& top = positive_.back();
    for (const Root& r : positive_)
        for (std::size_t k = 0; k < n; ++k)
            if (r[k] > top[k]) throw std::logic_error("highest root is not unique");
}

std::vector<Root> RootSystem::all_roots() const {
    std::vector<Root> out(positive_.begin(), positive_.end());
    for (const Root& r : positive_) out.push_back(-r);
    return out;
}

bool RootSystem::contains(std::span<const int> coeffs) const {
    std::vector<int> c(coeffs.begin(), coeffs.end());
    if (c.size() != static_cast<std::size_t>(rank())) return false;
    if (positive_index_.contains(c)) return true;
    for (int& x : c) x = -x;
    return positive_index_.contains(c);
}

bool RootSystem::contains(const Root& r) const { return contains(std::span<const int>(r.coeffs())); }

std::size_t RootSystem::index_of_positive(const Root& r) const {
    auto it = positive_index_.find(r.coeffs());
    if (it == positive_index_.end())
        throw NotARoot(r.to_string() + " is not a positive root of " + type_.name());
    return it->second;
}

Rational RootSystem::inner(std::span<const Rational> x, std::span<const Rational> y) const {
    const auto n = static_cast<std::size_t>(rank());
    if (x.size() != n || y.size() != n) throw std::invalid_argument("vector length does not match rank");
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
}

const std::vector<int>& RootSystem::coroot_row(const Root& alpha) const {
    if (!contains(alpha)) throw NotARoot(alpha.to_string() + " is not a root of " + type_.name());
    return coroot_rows_[index_of_positive(alpha.positive() ? alpha : -alpha)];
}

Rational RootSystem::pairing(std::span<const Rational> beta, const Root& alpha) const {
    if (beta.size() != static_cast<std::size_t>(rank()))
        throw std::invalid_argument("vector length does not match rank");
    const auto& row = coroot_row(alpha);
    Rational s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += beta[k] * row[k];
    return alpha.positive() ? s : -s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
    if (!contains(beta)) throw NotARoot(beta.to_string() + " is not a root of " + type_.name());
    const auto& row = coroot_row(alpha);
    int s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += beta[k] * row[k];
    return alpha.positive() ? s : -s;
}

Rational RootSystem::simple_pairing(std::span<const Rational> beta, int node) const {
    if (node < 1 || node > rank()) throw IndexOutOfRange("node " + std::to_string(node) + " out of range");
    const auto i = static_cast<std::size_t>(node - 1);
    Rational s = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) s += beta[k] * cartan_(k, i);
    return s;
}

int RootSystem::simple_pairing(std::span<const int> beta, int node) const {
    if (node < 1 || node > rank()) throw IndexOutOfRange("node " + std::to_string(node) + " out of range");
    const auto i = static_cast<std::size_t>(node - 1);
    int s = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) s += beta[k] * cartan_(k, i);
    return s;
}

RootSystem generate_root_system(const LieType& type) { return RootSystem(type); }

Rational coroot_pairing(const RootSystem& rs, std::span<const Rational> beta, const Root& alpha) {
    return rs.pairing(beta, alpha);
}

Rational coroot_pairing(const RootSystem& rs, const Root& beta, const Root& alpha) {
    return Rational(rs.pairing(beta, alpha));
}

const Root& highest_root(const RootSystem& rs) { return rs.highest(); }

std::vector<int> special_nodes(const RootSystem& rs) {
    std::vector<int> out;
    const Root& theta = rs.highest();
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.pairing(Root::simple(rs.rank(), i), theta) != 0) out.push_back(i);
    return out;
}

}  // namespace unbend
