#pragma once

// Parabolic markings, the induced grading of the roots, and splitting types of
// T(G/P) restricted to the curves C_alpha.

#include "unbend/roots.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unbend {

/// Nonempty set of marked simple roots Delta_1 (1-based, ascending). P is
/// the parabolic whose Levi has simple roots Delta \ Delta_1.
class ParabolicMarking {
  public:
    ParabolicMarking(const LieType& type, std::vector<int> marked);

    const LieType& type() const { return type_; }
    const std::vector<int>& marked() const { return marked_; }
    bool is_marked(int node) const;
    /// Delta \ Delta_1, ascending.
    std::vector<int> levi_support() const;
    std::string to_string() const;

  private:
    LieType type_;
    std::vector<int> marked_;
};

/// Degrees of a split bundle on P^1, stored non-increasing.
class SplittingType {
  public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    bool empty() const { return degrees_.empty(); }
    int max() const { return degrees_.front(); }
    int min() const { return degrees_.back(); }
    long long total_degree() const;
    std::size_t count(int degree) const;
    /// (degree, multiplicity) pairs in descending degree.
    std::vector<std::pair<int, std::size_t>> runs() const;
    /// "O(2) + O(1)^3 + O^2" style summary.
    std::string to_string() const;

    /// Multiset union.
    SplittingType merged(const SplittingType& other) const;

    bool operator==(const SplittingType&) const = default;

  private:
    std::vector<int> degrees_;
};

/// Sum of beta's coefficients over the marked nodes. Throws NotARoot.
int n_coeff(const RootSystem& rs, const ParabolicMarking& m, const Root& beta);

struct RootPartition {
    std::vector<Root> negative;
    std::vector<Root> zero;
    std::vector<Root> positive;
};

/// Splits Phi by the sign of n_coeff. Each part is in canonical order.
RootPartition partition(const RootSystem& rs, const ParabolicMarking& m);

/// dim G/P = |Phi^+_{Delta_1}|.
int homogeneous_dimension(const RootSystem& rs, const ParabolicMarking& m);

/// Multiset {(beta, alpha^vee) : beta in Phi^+_{Delta_1}}. alpha must be a
/// positive root with n_coeff(alpha) > 0; throws NotARoot or CurveContracted.
SplittingType tangent_splitting(const RootSystem& rs, const ParabolicMarking& m, const Root& alpha);

enum class SplittingClass { Unbendable, NonnegativeNotUnbendable, NotNonnegative };

struct Classification {
    SplittingClass kind = SplittingClass::NotNonnegative;
    int p = 0;  // number of O(1) factors, Unbendable only
    int q = 0;  // number of O factors, Unbendable only

    bool unbendable() const { return kind == SplittingClass::Unbendable; }
    bool operator==(const Classification&) const = default;
};

std::string to_string(SplittingClass kind);

/// Unbendable iff the degrees lie in {0,1,2} with exactly one 2.
Classification classify_splitting(const SplittingType& s);

struct SweepEntry {
    std::vector<int> marked;
    SplittingType splitting;
    Classification classification;
    int dimension = 0;
};

struct SweepReport {
    LieType type;
    std::vector<SweepEntry> entries;  // sorted by (|marked|, marked)

    std::size_t violations() const;
};

/// Certifies C_theta for every nonempty marking of `rs.type()`.
SweepReport unbendable_sweep(const RootSystem& rs);

struct MinimalContrast {
    int node = 0;
    SplittingType splitting;          // T(G/P)|_{C_{alpha_node}}, Delta_1 = {node}
    Classification classification;
    int theta_coefficient = 0;        // coefficient of alpha_node in theta
    bool long_root = false;
    bool flagged = false;             // theta_coefficient > 1
};

/// Throws IndexOutOfRange.
MinimalContrast minimal_curve_contrast(const RootSystem& rs, int node);

}  // namespace unbend
