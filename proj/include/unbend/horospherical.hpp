#pragma once

// The five non-homogeneous smooth horospherical varieties of Picard number
// one, (G, varpi_i, varpi_j), and the degree bookkeeping on C_theta for the
// open orbit G x_P V.

#include "unbend/parabolic.hpp"
#include "unbend/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unbend {

enum class HoroFamily { BPair, B3Mixed, CPair, F4Case, G2Case };

std::string to_string(HoroFamily f);
/// Accepts "B", "B3", "C", "F4", "G2" and the enum spellings
/// ("b_pair", "b3_mixed", "c_pair", "f4_case", "g2_case"). Throws OutOfRange.
HoroFamily parse_horo_family(std::string_view text);

struct FamilyDescriptor {
    HoroFamily family;
    std::string notation;     // (B_n, varpi_{n-1}, varpi_n)
    std::string constraints;  // n >= 3
    std::string p_node;       // n-1
    std::string lambda_v;     // varpi_{n-1} - varpi_n
    bool has_n = false;
    bool has_k = false;
    int min_n = 0;
};

/// The five families in classification order.
std::vector<FamilyDescriptor> catalog();

struct HorosphericalDatum {
    HoroFamily family;
    int n = 0;
    std::optional<int> k;
    LieType g_type;
    int omega_i = 0;
    int omega_j = 0;
    int p_node = 0;
    Weight lambda_v;  // varpi_{omega_i} - varpi_{omega_j}

    std::string label() const;
};

/// Throws OutOfRange. For the fixed families n may be omitted or must equal
/// the fixed rank; k is only meaningful for CPair.
HorosphericalDatum instantiate(HoroFamily family, std::optional<int> n = std::nullopt,
                               std::optional<int> k = std::nullopt);

/// Every instance with B/C rank in [min_n, max_n] (all 2 <= k <= n for C),
/// plus the three fixed cases, in catalog order.
std::vector<HorosphericalDatum> catalog_instances(int max_n, int min_n = 2);

/// (lambda_V, theta^vee).
Rational lambda_pairing_theta(const RootSystem& rs, const HorosphericalDatum& d);

/// Degrees (mu, theta^vee) over the weights mu of V with multiplicity.
SplittingType bundle_degrees(const RootSystem& rs, const HorosphericalDatum& d);

/// T(G/P)|_{C_theta} together with the bundle degrees.
SplittingType total_splitting(const RootSystem& rs, const HorosphericalDatum& d);

struct HorosphericalVerification {
    HorosphericalDatum datum;
    Rational lambda_pairing;          // (lambda_V, theta^vee)
    Rational dominant_pairing;        // (lambda_V^+, theta^vee), W_L-dominant representative
    std::int64_t dim_v = 0;           // Weyl dimension of V
    int dim_g_over_p = 0;
    SplittingType tangent;
    SplittingType bundle;
    SplittingType total;
    Classification total_class;

    bool pairing_in_range() const { return lambda_pairing == 0 || lambda_pairing == 1; }
    bool bundle_in_range() const { return bundle.empty() || (bundle.max() <= 1 && bundle.min() >= 0); }
    bool passes() const {
        return pairing_in_range() && bundle_in_range() && total_class.unbendable() &&
               bundle.size() == static_cast<std::size_t>(dim_v);
    }
};

HorosphericalVerification verify(const HorosphericalDatum& d);

}  // namespace unbend
