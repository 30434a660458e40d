#pragma once

// Weight-lattice arithmetic and weight multisets of simple Levi modules.
//
// Weights are carried in simple-root coordinates of the ambient algebra, so a
// Levi module keeps its central character and pairs correctly with theta^vee.

#include "unbend/lie_type.hpp"
#include "unbend/roots.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace unbend {

class Weight {
  public:
    Weight() = default;
    explicit Weight(RationalVector root_coords) : coords_(std::move(root_coords)) {}
    static Weight zero(int rank) { return Weight(RationalVector(static_cast<std::size_t>(rank))); }
    static Weight from_root(const Root& r) { return Weight(r.as_rational()); }

    const RationalVector& root_coords() const { return coords_; }
    std::size_t rank() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const Rational& s) const;
    Weight plus_root(const Root& r, std::int64_t times = 1) const;

    std::string to_string() const;

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const { return coords_ < o.coords_; }

  private:
    RationalVector coords_;
};

/// (A^t)^{-1}; its j-th column is the root-coordinate vector of varpi_j.
RationalMatrix inverse_transposed_cartan(const LieType& type);

/// varpi_j in simple-root coordinates. Throws IndexOutOfRange.
Weight fundamental_weight(const LieType& type, int j);

/// sum_j labels[j] varpi_{j+1}.
Weight weight_from_labels(const LieType& type, std::span<const int> labels);

/// (w, alpha_i^vee) for every i.
RationalVector dynkin_labels(const RootSystem& rs, const Weight& w);

/// True when every (w, alpha_i^vee) is an integer.
bool is_lattice_weight(const RootSystem& rs, const Weight& w);

/// w - (w, alpha_i^vee) alpha_i. Throws IndexOutOfRange.
Weight weyl_reflect(const RootSystem& rs, const Weight& w, int node);

/// Orbit of w under the reflections s_i, i in support; sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w, std::span<const int> support);

/// The unique element of the W_L-orbit with (w, alpha_i^vee) >= 0 on support.
Weight dominant_representative(const RootSystem& rs, const Weight& w, std::span<const int> support);

/// Positive roots whose coefficients vanish outside `support`.
std::vector<Root> levi_positive_roots(const RootSystem& rs, std::span<const int> support);

class WeightedMultiset {
  public:
    void add(const Weight& w, std::int64_t multiplicity);
    const std::map<Weight, std::int64_t>& entries() const { return entries_; }
    std::int64_t multiplicity(const Weight& w) const;
    std::int64_t total() const;
    std::size_t distinct() const { return entries_.size(); }

  private:
    std::map<Weight, std::int64_t> entries_;
};

/// Full weight multiset of the simple module of the Levi on `support` with
/// extreme weight lambda. Multiplicities of W_L-dominant weights come from
/// Freudenthal's recursion and are spread over W_L-orbits. An empty support
/// gives the one-dimensional module. Throws NotLatticeWeight.
WeightedMultiset module_weights(const RootSystem& rs, std::span<const int> support, const Weight& lambda);

/// Weyl's dimension formula for the same module. Throws NotLatticeWeight.
std::int64_t weyl_dimension(const RootSystem& rs, std::span<const int> support, const Weight& lambda);

}  // namespace unbend
