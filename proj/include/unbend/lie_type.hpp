#pragma once

// Simple Lie types, Cartan matrices and the invariant form.
//
// Simple roots are indexed 1..rank following the Onishchik-Vinberg tables:
//   A_l, B_l, C_l, D_l, G_2   same as Bourbaki (B_l: alpha_l short,
//                             C_l: alpha_l long, G_2: alpha_1 short)
//   E_l                       chain alpha_1 - ... - alpha_{l-1}, with alpha_l
//                             attached to alpha_{l-3}
//   F_4                       alpha_1 - alpha_2 => alpha_3 - alpha_4 with
//                             alpha_1, alpha_2 short
// labeling_bridge() maps these indices to Bourbaki's.
//
// Public functions take 1-based node indices; matrix and vector accessors are
// 0-based.

#include "unbend/linalg.hpp"
#include "unbend/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace unbend {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class LieType {
  public:
    Family family() const { return family_; }
    int rank() const { return rank_; }
    bool simply_laced() const {
        return family_ == Family::A || family_ == Family::D || family_ == Family::E;
    }
    std::string name() const;

    auto operator<=>(const LieType&) const = default;

  private:
    LieType(Family f, int r) : family_(f), rank_(r) {}
    friend LieType make_lie_type(Family family, int rank);

    Family family_;
    int rank_;
};

/// Validates the rank table: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
/// Throws InvalidRank otherwise.
LieType make_lie_type(Family family, int rank);
LieType make_lie_type(char family, int rank);

/// Parses names such as "B4" or "e8".
LieType parse_lie_type(std::string_view text);

/// Every valid type of rank <= max_rank, ordered by family letter then rank.
std::vector<LieType> all_lie_types(int max_rank);

/// A(i, j) = (alpha_i, alpha_j^vee) (0-based storage).
class CartanMatrix {
  public:
    CartanMatrix(LieType type, IntMatrix entries) : type_(type), entries_(std::move(entries)) {}

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank(); }
    int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const IntMatrix& entries() const { return entries_; }

  private:
    LieType type_;
    IntMatrix entries_;
};

CartanMatrix cartan_matrix(const LieType& type);

/// d_i = (alpha_i, alpha_i) / 2 with long roots of squared length 2, so
/// d_i is 1 for long roots and 1/2 or 1/3 for short ones. The Gram matrix of
/// the simple roots is (alpha_i, alpha_j) = A(i, j) * d_j.
struct Symmetrizer {
    RationalVector d;
};

Symmetrizer symmetrizer(const LieType& type);

/// Gram matrix (alpha_i, alpha_j) of the simple roots.
RationalMatrix gram_matrix(const LieType& type);

/// Index of the Onishchik-Vinberg node `ov_index` in Bourbaki's labeling.
/// Throws IndexOutOfRange.
int labeling_bridge(const LieType& type, int ov_index);

/// Inverse of labeling_bridge.
int inverse_labeling_bridge(const LieType& type, int bourbaki_index);

}  // namespace unbend
