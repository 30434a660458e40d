#pragma once

#include "unbend/lie_type.hpp"
#include "unbend/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace unbend {

/// Integer coefficient vector over the simple roots: alpha = sum n_i alpha_i.
/// Nonzero and sign-coherent; membership in a particular root system is
/// checked by RootSystem.
class Root {
  public:
    explicit Root(std::vector<int> coeffs);

    static Root simple(int rank, int node);

    const std::vector<int>& coeffs() const { return coeffs_; }
    std::size_t rank() const { return coeffs_.size(); }
    int operator[](std::size_t i) const { return coeffs_[i]; }
    /// Coefficient of alpha_node, 1-based.
    int coefficient(int node) const { return coeffs_.at(static_cast<std::size_t>(node - 1)); }
    int height() const;
    bool positive() const { return height() > 0; }

    Root operator-() const;
    RationalVector as_rational() const;
    std::string to_string() const;

    bool operator==(const Root&) const = default;
    /// Canonical order: height ascending, then lexicographic on coefficients.
    std::strong_ordering operator<=>(const Root& other) const;

  private:
    std::vector<int> coeffs_;
};

class RootSystem {
  public:
    explicit RootSystem(LieType type);

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank(); }
    const CartanMatrix& cartan() const { return cartan_; }
    const RationalMatrix& gram() const { return gram_; }

    /// Positive roots in canonical order.
    std::span<const Root> positive_roots() const { return positive_; }
    /// Positive then negative roots.
    std::vector<Root> all_roots() const;
    const Root& highest() const { return positive_.back(); }

    bool contains(const Root& r) const;
    bool contains(std::span<const int> coeffs) const;
    /// Position of a positive root in positive_roots(); throws NotARoot.
    std::size_t index_of_positive(const Root& r) const;

    /// (x, y) for vectors in simple-root coordinates.
    Rational inner(std::span<const Rational> x, std::span<const Rational> y) const;

    /// (beta, alpha^vee) for an arbitrary vector beta; throws NotARoot.
    Rational pairing(std::span<const Rational> beta, const Root& alpha) const;
    /// (beta, alpha^vee) for a root beta; integral.
    int pairing(const Root& beta, const Root& alpha) const;
    /// (beta, alpha_i^vee) straight from the Cartan matrix, node 1-based.
    Rational simple_pairing(std::span<const Rational> beta, int node) const;
    int simple_pairing(std::span<const int> beta, int node) const;

  private:
    const std::vector<int>& coroot_row(const Root& alpha) const;

    LieType type_;
    CartanMatrix cartan_;
    RationalMatrix gram_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, std::size_t> positive_index_;
    // coroot_rows_[r][k] = (alpha_k, beta_r^vee) for the r-th positive root.
    std::vector<std::vector<int>> coroot_rows_;
};

/// Breadth-first root-string closure from the simple roots.
RootSystem generate_root_system(const LieType& type);

/// 2 (beta, alpha) / (alpha, alpha). Throws NotARoot when alpha is not a root.
Rational coroot_pairing(const RootSystem& rs, std::span<const Rational> beta, const Root& alpha);
Rational coroot_pairing(const RootSystem& rs, const Root& beta, const Root& alpha);

const Root& highest_root(const RootSystem& rs);

/// Nodes i with (alpha_i, theta) != 0, ascending.
std::vector<int> special_nodes(const RootSystem& rs);

}  // namespace unbend
