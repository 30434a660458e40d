#include "unbend/lie_type.hpp"

#include "unbend/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

namespace unbend {
namespace {

struct Diagram {
    RationalVector lengths;                 // (alpha_i, alpha_i), long roots = 2
    std::vector<std::pair<int, int>> edges; // 0-based, unordered
};

Diagram chain(int rank) {
    Diagram d;
    d.lengths.assign(static_cast<std::size_t>(rank), Rational(2));
    for (int i = 0; i + 1 < rank; ++i) d.edges.emplace_back(i, i + 1);
    return d;
}

Diagram diagram(const LieType& t) {
    const int l = t.rank();
    switch (t.family()) {
        case Family::A:
            return chain(l);
        case Family::B: {
            Diagram d = chain(l);
            d.lengths.back() = Rational(1);
            return d;
        }
        case Family::C: {
            Diagram d = chain(l);
            for (int i = 0; i + 1 < l; ++i) d.lengths[static_cast<std::size_t>(i)] = Rational(1);
            return d;
        }
        case Family::D: {
            Diagram d = chain(l - 1);
            d.lengths.push_back(Rational(2));
            d.edges.emplace_back(l - 3, l - 1);
            return d;
        }
        case Family::E: {
            Diagram d = chain(l - 1);
            d.lengths.push_back(Rational(2));
            d.edges.emplace_back(l - 4, l - 1);
            return d;
        }
        case Family::F: {
            Diagram d = chain(4);
            d.lengths[0] = Rational(1);
            d.lengths[1] = Rational(1);
            return d;
        }
        case Family::G: {
            Diagram d = chain(2);
            d.lengths[0] = Rational(2, 3);
            return d;
        }
    }
    return {};
}

RationalMatrix diagram_gram(const Diagram& d) {
    const std::size_t n = d.lengths.size();
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = d.lengths[i];
    for (auto [a, b] : d.edges) {
        const auto i = static_cast<std::size_t>(a);
        const auto j = static_cast<std::size_t>(b);
        const Rational v = -std::max(d.lengths[i], d.lengths[j]) / 2;
        g(i, j) = v;
        g(j, i) = v;
    }
    return g;
}

// OV -> Bourbaki, 1-based; only the types whose labelings differ.
constexpr std::array<int, 6> kE6Bridge{1, 3, 4, 5, 6, 2};
constexpr std::array<int, 7> kE7Bridge{7, 6, 5, 4, 3, 1, 2};
constexpr std::array<int, 8> kE8Bridge{8, 7, 6, 5, 4, 3, 1, 2};
constexpr std::array<int, 4> kF4Bridge{4, 3, 2, 1};

void check_index(const LieType& t, int i) {
    if (i < 1 || i > t.rank())
        throw IndexOutOfRange("index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(t.rank()) + " for " + t.name());
}

}  // namespace

std::string LieType::name() const {
    return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

LieType make_lie_type(Family family, int rank) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 4; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
        default: throw InvalidRank("unknown Lie family");
    }
    if (!ok)
        throw InvalidRank(std::string("no simple Lie type ") + static_cast<char>(family) +
                          std::to_string(rank));
    return LieType(family, rank);
}

LieType make_lie_type(char family, int rank) {
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
        throw InvalidRank(std::string("unknown Lie family '") + family + "'");
    return make_lie_type(static_cast<Family>(f), rank);
}

LieType parse_lie_type(std::string_view text) {
    if (text.size() < 2) throw InvalidRank("cannot parse Lie type '" + std::string(text) + "'");
    int rank = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc{} || ptr != last)
        throw InvalidRank("cannot parse Lie type '" + std::string(text) + "'");
    return make_lie_type(text.front(), rank);
}

std::vector<LieType> all_lie_types(int max_rank) {
    std::vector<LieType> out;
    for (char f : std::string_view("ABCDEFG")) {
        for (int r = 1; r <= max_rank; ++r) {
            try {
                out.push_back(make_lie_type(f, r));
            } catch (const InvalidRank&) {
            }
        }
    }
    return out;
}

RationalMatrix gram_matrix(const LieType& type) { return diagram_gram(diagram(type)); }

CartanMatrix cartan_matrix(const LieType& type) {
    const RationalMatrix g = gram_matrix(type);
    const std::size_t n = g.rows();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = 2 * g(i, j) / g(j, j);
            a(i, j) = static_cast<int>(numerator_i64(v));
        }
    return CartanMatrix(type, std::move(a));
}

Symmetrizer symmetrizer(const LieType& type) {
    const Diagram d = diagram(type);
    Symmetrizer s;
    for (const Rational& len : d.lengths) s.d.push_back(len / 2);
    return s;
}

int labeling_bridge(const LieType& type, int ov_index) {
    check_index(type, ov_index);
    const auto k = static_cast<std::size_t>(ov_index - 1);
    switch (type.family()) {
        case Family::E:
            if (type.rank() == 6) return kE6Bridge[k];
            if (type.rank() == 7) return kE7Bridge[k];
            return kE8Bridge[k];
        case Family::F:
            return kF4Bridge[k];
        default:
            return ov_index;
    }
}

int inverse_labeling_bridge(const LieType& type, int bourbaki_index) {
    check_index(type, bourbaki_index);
    for (int i = 1; i <= type.rank(); ++i)
        if (labeling_bridge(type, i) == bourbaki_index) return i;
    throw IndexOutOfRange("labeling bridge is not a bijection");  // unreachable
}

}  // namespace unbend
