#include "unbend/horospherical.hpp"

#include "unbend/errors.hpp"

#include <algorithm>
#include <cctype>

namespace unbend {

std::string to_string(HoroFamily f) {
    switch (f) {
        case HoroFamily::BPair: return "b_pair";
        case HoroFamily::B3Mixed: return "b3_mixed";
        case HoroFamily::CPair: return "c_pair";
        case HoroFamily::F4Case: return "f4_case";
        case HoroFamily::G2Case: return "g2_case";
    }
    return "?";
}

HoroFamily parse_horo_family(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "b" || s == "b_pair") return HoroFamily::BPair;
    if (s == "b3" || s == "b3_mixed") return HoroFamily::B3Mixed;
    if (s == "c" || s == "c_pair") return HoroFamily::CPair;
    if (s == "f4" || s == "f4_case") return HoroFamily::F4Case;
    if (s == "g2" || s == "g2_case") return HoroFamily::G2Case;
    throw OutOfRange("unknown horospherical family '" + std::string(text) + "'");
}

std::vector<FamilyDescriptor> catalog() {
    return {
        {HoroFamily::BPair, "(B_n, varpi_{n-1}, varpi_n)", "n >= 3", "n-1", "varpi_{n-1} - varpi_n",
         true, false, 3},
        {HoroFamily::B3Mixed, "(B_3, varpi_1, varpi_3)", "fixed", "1", "varpi_1 - varpi_3", false,
         false, 3},
        {HoroFamily::CPair, "(C_n, varpi_k, varpi_{k-1})", "n >= 2, 2 <= k <= n", "k-1",
         "varpi_k - varpi_{k-1}", true, true, 2},
        {HoroFamily::F4Case, "(F_4, varpi_3, varpi_2)", "fixed", "3", "varpi_3 - varpi_2", false, false,
         4},
        {HoroFamily::G2Case, "(G_2, varpi_2, varpi_1)", "fixed", "2", "varpi_2 - varpi_1", false, false,
         2},
    };
}

std::string HorosphericalDatum::label() const {
    return "(" + g_type.name() + ", w" + std::to_string(omega_i) + ", w" + std::to_string(omega_j) + ")";
}

namespace {

int fixed_rank(HoroFamily f, std::optional<int> n, int rank) {
    if (n && *n != rank)
        throw OutOfRange(to_string(f) + " is defined only in rank " + std::to_string(rank));
    return rank;
}

}  // namespace

HorosphericalDatum instantiate(HoroFamily family, std::optional<int> n, std::optional<int> k) {
    if (k && family != HoroFamily::CPair) throw OutOfRange(to_string(family) + " takes no k parameter");
    int rank = 0;
    int wi = 0;
    int wj = 0;
    int p = 0;
    char letter = 'A';
    switch (family) {
        case HoroFamily::BPair:
            if (!n || *n < 3) throw OutOfRange("b_pair requires n >= 3");
            rank = *n;
            letter = 'B';
            wi = rank - 1;
            wj = rank;
            p = rank - 1;
            break;
        case HoroFamily::B3Mixed:
            rank = fixed_rank(family, n, 3);
            letter = 'B';
            wi = 1;
            wj = 3;
            p = 1;
            break;
        case HoroFamily::CPair:
            if (!n || *n < 2) throw OutOfRange("c_pair requires n >= 2");
            if (!k || *k < 2 || *k > *n) throw OutOfRange("c_pair requires 2 <= k <= n");
            rank = *n;
            letter = 'C';
            wi = *k;
            wj = *k - 1;
            p = *k - 1;
            break;
        case HoroFamily::F4Case:
            rank = fixed_rank(family, n, 4);
            letter = 'F';
            wi = 3;
            wj = 2;
            p = 3;
            break;
        case HoroFamily::G2Case:
            rank = fixed_rank(family, n, 2);
            letter = 'G';
            wi = 2;
            wj = 1;
            p = 2;
            break;
    }
    const LieType t = make_lie_type(letter, rank);
    return HorosphericalDatum{family,
                              rank,
                              family == HoroFamily::CPair ? k : std::nullopt,
                              t,
                              wi,
                              wj,
                              p,
                              fundamental_weight(t, wi) - fundamental_weight(t, wj)};
}

std::vector<HorosphericalDatum> catalog_instances(int max_n, int min_n) {
    std::vector<HorosphericalDatum> out;
    for (int n = std::max(3, min_n); n <= max_n; ++n) out.push_back(instantiate(HoroFamily::BPair, n));
    out.push_back(instantiate(HoroFamily::B3Mixed));
    for (int n = std::max(2, min_n); n <= max_n; ++n)
        for (int k = 2; k <= n; ++k) out.push_back(instantiate(HoroFamily::CPair, n, k));
    out.push_back(instantiate(HoroFamily::F4Case));
    out.push_back(instantiate(HoroFamily::G2Case));
    return out;
}

namespace {

std::vector<int> support_of(const HorosphericalDatum& d) {
    std::vector<int> s;
    for (int i = 1; i <= d.g_type.rank(); ++i)
        if (i != d.p_node) s.push_back(i);
    return s;
}

void require_matching(const RootSystem& rs, const HorosphericalDatum& d) {
    if (rs.type() != d.g_type)
        throw std::invalid_argument("root system " + rs.type().name() + " does not match datum " + d.label());
}

}  // namespace

Rational lambda_pairing_theta(const RootSystem& rs, const HorosphericalDatum& d) {
    require_matching(rs, d);
    return rs.pairing(d.lambda_v.root_coords(), rs.highest());
}

SplittingType bundle_degrees(const RootSystem& rs, const HorosphericalDatum& d) {
    require_matching(rs, d);
    const WeightedMultiset weights = module_weights(rs, support_of(d), d.lambda_v);
    std::vector<int> degrees;
    for (const auto& [mu, mult] : weights.entries()) {
        const Rational a = rs.pairing(mu.root_coords(), rs.highest());
        if (!is_integer(a)) throw std::logic_error("non-integral degree for weight " + mu.to_string());
        degrees.insert(degrees.end(), static_cast<std::size_t>(mult), static_cast<int>(numerator_i64(a)));
    }
    return SplittingType(std::move(degrees));
}

SplittingType total_splitting(const RootSystem& rs, const HorosphericalDatum& d) {
    require_matching(rs, d);
    const ParabolicMarking m(d.g_type, {d.p_node});
    return tangent_splitting(rs, m, rs.highest()).merged(bundle_degrees(rs, d));
}

HorosphericalVerification verify(const HorosphericalDatum& d) {
    const RootSystem rs(d.g_type);
    const std::vector<int> support = support_of(d);
    const ParabolicMarking m(d.g_type, {d.p_node});
    HorosphericalVerification v{d, {}, {}, {}, {}, {}, {}, {}, {}};
    v.lambda_pairing = lambda_pairing_theta(rs, d);
    v.dominant_pairing = rs.pairing(dominant_representative(rs, d.lambda_v, support).root_coords(), rs.highest());
    v.dim_v = weyl_dimension(rs, support, d.lambda_v);
    v.dim_g_over_p = homogeneous_dimension(rs, m);
    v.tangent = tangent_splitting(rs, m, rs.highest());
    v.bundle = bundle_degrees(rs, d);
    v.total = v.tangent.merged(v.bundle);
    v.total_class = classify_splitting(v.total);
    return v;
}

}  // namespace unbend
