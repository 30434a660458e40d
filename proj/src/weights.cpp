#include "unbend/weights.hpp"

#include "unbend/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace unbend {

Weight Weight::operator+(const Weight& o) const {
    RationalVector c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    RationalVector c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-() const {
    RationalVector c = coords_;
    for (auto& x : c) x = -x;
    return Weight(std::move(c));
}

Weight Weight::operator*(const Rational& s) const {
    RationalVector c = coords_;
    for (auto& x : c) x *= s;
    return Weight(std::move(c));
}

Weight Weight::plus_root(const Root& r, std::int64_t times) const {
    RationalVector c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += Rational(times * r[i]);
    return Weight(std::move(c));
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += unbend::to_string(coords_[i]);
    }
    return s + ")";
}

RationalMatrix inverse_transposed_cartan(const LieType& type) {
    return inverse(to_rational(cartan_matrix(type).entries()).transposed());
}

Weight fundamental_weight(const LieType& type, int j) {
    if (j < 1 || j > type.rank())
        throw IndexOutOfRange("fundamental weight index " + std::to_string(j) + " out of range for " +
                              type.name());
    return Weight(inverse_transposed_cartan(type).column(static_cast<std::size_t>(j - 1)));
}

Weight weight_from_labels(const LieType& type, std::span<const int> labels) {
    if (labels.size() != static_cast<std::size_t>(type.rank()))
        throw std::invalid_argument("expected " + std::to_string(type.rank()) + " Dynkin labels");
    const RationalMatrix inv = inverse_transposed_cartan(type);
    RationalVector c(labels.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) c[i] += inv(i, j) * labels[j];
    return Weight(std::move(c));
}

RationalVector dynkin_labels(const RootSystem& rs, const Weight& w) {
    RationalVector out;
    for (int i = 1; i <= rs.rank(); ++i) out.push_back(rs.simple_pairing(w.root_coords(), i));
    return out;
}

bool is_lattice_weight(const RootSystem& rs, const Weight& w) {
    if (w.rank() != static_cast<std::size_t>(rs.rank())) return false;
    const auto labels = dynkin_labels(rs, w);
    return std::all_of(labels.begin(), labels.end(), [](const Rational& r) { return is_integer(r); });
}

namespace {

void check_nodes(const RootSystem& rs, std::span<const int> nodes) {
    for (int i : nodes)
        if (i < 1 || i > rs.rank())
            throw IndexOutOfRange("node " + std::to_string(i) + " out of range for " + rs.type().name());
}

void require_lattice(const RootSystem& rs, const Weight& w) {
    if (!is_lattice_weight(rs, w))
        throw NotLatticeWeight(w.to_string() + " is not in the weight lattice of " + rs.type().name());
}

Weight half_sum(const RootSystem& rs, const std::vector<Root>& roots) {
    Weight rho = Weight::zero(rs.rank());
    for (const Root& r : roots) rho = rho.plus_root(r);
    return rho * Rational(1, 2);
}

bool nonnegative_integral(const Weight& w) {
    return std::all_of(w.root_coords().begin(), w.root_coords().end(),
                       [](const Rational& r) { return is_integer(r) && r >= 0; });
}

Rational height(const Weight& w) {
    Rational h = 0;
    for (const auto& c : w.root_coords()) h += c;
    return h;
}

}  // namespace

Weight weyl_reflect(const RootSystem& rs, const Weight& w, int node) {
    const Rational k = rs.simple_pairing(w.root_coords(), node);
    RationalVector c = w.root_coords();
    c[static_cast<std::size_t>(node - 1)] -= k;
    return Weight(std::move(c));
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w, std::span<const int> support) {
    check_nodes(rs, support);
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (int i : support) {
            Weight next = weyl_reflect(rs, cur, i);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

Weight dominant_representative(const RootSystem& rs, const Weight& w, std::span<const int> support) {
    check_nodes(rs, support);
    Weight cur = w;
    // Each reflection at a negative label raises the height strictly, and the
    // orbit is finite.
    for (bool moved = true; moved;) {
        moved = false;
        for (int i : support) {
            if (rs.simple_pairing(cur.root_coords(), i) < 0) {
                cur = weyl_reflect(rs, cur, i);
                moved = true;
            }
        }
    }
    return cur;
}

std::vector<Root> levi_positive_roots(const RootSystem& rs, std::span<const int> support) {
    check_nodes(rs, support);
    std::vector<Root> out;
    for (const Root& r : rs.positive_roots()) {
        bool inside = true;
        for (int i = 1; i <= rs.rank() && inside; ++i)
            if (r.coefficient(i) != 0 && std::find(support.begin(), support.end(), i) == support.end())
                inside = false;
        if (inside) out.push_back(r);
    }
    return out;
}

void WeightedMultiset::add(const Weight& w, std::int64_t multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    entries_[w] += multiplicity;
}

std::int64_t WeightedMultiset::multiplicity(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightedMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries_) t += m;
    return t;
}

WeightedMultiset module_weights(const RootSystem& rs, std::span<const int> support, const Weight& lambda) {
    check_nodes(rs, support);
    require_lattice(rs, lambda);
    WeightedMultiset out;
    if (support.empty()) {
        out.add(lambda, 1);
        return out;
    }

    const Weight top = dominant_representative(rs, lambda, support);
    // Weights of the module are exactly the nu with dominant(nu) <= top.
    // Every weight other than top is reached from a weight one simple root
    // higher, so a downward search from top finds them all.
    std::map<Weight, Weight> dominant_of{{top, top}};
    std::deque<Weight> queue{top};
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for (int i : support) {
            Weight next = cur.plus_root(Root::simple(rs.rank(), i), -1);
            if (dominant_of.contains(next)) continue;
            Weight dom = dominant_representative(rs, next, support);
            if (!nonnegative_integral(top - dom)) continue;
            dominant_of.emplace(next, std::move(dom));
            queue.push_back(std::move(next));
        }
    }

    std::vector<Weight> dominants;
    for (const auto& [w, dom] : dominant_of)
        if (w == dom) dominants.push_back(w);
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        const Rational ha = height(top - a);
        const Rational hb = height(top - b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    const std::vector<Root> levi_roots = levi_positive_roots(rs, support);
    const Weight rho = half_sum(rs, levi_roots);
    const Weight top_rho = top + rho;
    const Rational top_norm = rs.inner(top_rho.root_coords(), top_rho.root_coords());

    std::map<Weight, std::int64_t> mult{{top, 1}};
    for (const Weight& mu : dominants) {
        if (mu == top) continue;
        Rational sum = 0;
        for (const Root& beta : levi_roots) {
            const RationalVector b = beta.as_rational();
            for (std::int64_t k = 1;; ++k) {
                const Weight nu = mu.plus_root(beta, k);
                auto it = dominant_of.find(nu);
                if (it == dominant_of.end()) break;
                sum += Rational(mult.at(it->second)) * rs.inner(nu.root_coords(), b);
            }
        }
        const Weight mu_rho = mu + rho;
        const Rational denom = top_norm - rs.inner(mu_rho.root_coords(), mu_rho.root_coords());
        const Rational m = 2 * sum / denom;
        if (!is_integer(m) || m <= 0)
            throw std::logic_error("Freudenthal recursion produced non-integral multiplicity at " +
                                   mu.to_string());
        mult.emplace(mu, numerator_i64(m));
    }

    for (const auto& [w, dom] : dominant_of) out.add(w, mult.at(dom));
    return out;
}

std::int64_t weyl_dimension(const RootSystem& rs, std::span<const int> support, const Weight& lambda) {
    check_nodes(rs, support);
    require_lattice(rs, lambda);
    const std::vector<Root> levi_roots = levi_positive_roots(rs, support);
    const Weight top = dominant_representative(rs, lambda, support);
    const Weight rho = half_sum(rs, levi_roots);
    const Weight shifted = top + rho;
    Rational dim = 1;
    for (const Root& beta : levi_roots) {
        const RationalVector b = beta.as_rational();
        dim *= rs.inner(shifted.root_coords(), b) / rs.inner(rho.root_coords(), b);
    }
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not an integer");
    return numerator_i64(dim);
}

}  // namespace unbend
