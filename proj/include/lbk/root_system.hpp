#pragma once

// Finite crystallographic root systems given by Cartan data, and the finite
// Weyl group enumerated breadth-first.
//
// Convention: the simple reflection r_i acts on the base by
//   r_i(alpha_j) = alpha_j - a_ij * alpha_i,
// and the pairing on the apartment is (alpha_i, alpha_j) = d_i * a_ij. With
// this convention the pairing is W-invariant exactly when D*A is symmetric,
// so the symmetrizer is chosen with d_i * a_ij = d_j * a_ji (min d_i = 1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbk/lambda.hpp"

namespace lbk {

/// Coefficients over the simple roots.
using RootVector = std::vector<int>;
/// Row-major n x n integer matrix.
using IntMatrix = std::vector<int>;

class WeylGroup;

/// An element of the finite Weyl group. Identified by its action matrix on
/// base coordinates; carries the lexicographically least reduced word.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const WeylGroup* group, std::uint32_t id) : group_(group), id_(id) {}

  const WeylGroup& group() const { return *group_; }
  std::uint32_t id() const { return id_; }
  bool valid() const { return group_ != nullptr; }

  /// Column j holds the image of alpha_j.
  const IntMatrix& matrix() const;
  /// Generator indices (0-based) of the least reduced word; the element is
  /// r_{w[0]} r_{w[1]} ... r_{w[k-1]}.
  const std::vector<int>& word() const;
  int length() const;
  bool is_identity() const { return id_ == 0; }

  WeylElement inverse() const;
  RootVector apply(const RootVector& root) const;

  /// Throws MalformedInput when the elements come from different groups.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.group_ == b.group_ && a.id_ == b.id_;
  }
  /// Orders by (length, word): the canonical tie-break order.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    return a.id_ <=> b.id_;
  }

 private:
  const WeylGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

/// "s1 s2 s1" (1-based); "e" for the identity.
std::string word_string(const WeylElement& w);

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Throws MalformedInput when the group has more than `cap` elements.
  WeylGroup(std::size_t rank, const std::vector<int>& cartan, std::size_t cap);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return matrices_.size(); }

  WeylElement identity() const { return {this, 0}; }
  /// 0-based generator index; throws MalformedInput when out of range.
  WeylElement generator(std::size_t i) const;
  WeylElement longest() const { return {this, longest_}; }
  WeylElement element(std::size_t id) const;
  /// Elements in BFS order: by length, then by least reduced word.
  std::vector<WeylElement> elements() const;
  /// r_{word[0]} ... r_{word[k-1]}, 0-based indices.
  WeylElement from_word(const std::vector<int>& word) const;
  std::optional<WeylElement> find(const IntMatrix& m) const;

  const IntMatrix& matrix(std::uint32_t id) const { return matrices_[id]; }
  const std::vector<int>& word(std::uint32_t id) const { return words_[id]; }
  int length(std::uint32_t id) const { return static_cast<int>(words_[id].size()); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverses_[a]; }
  std::uint32_t times_generator(std::uint32_t a, std::size_t i) const { return right_gen_[a][i]; }

 private:
  IntMatrix product(const IntMatrix& a, const IntMatrix& b) const;

  std::size_t rank_;
  std::vector<IntMatrix> matrices_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::uint32_t>> right_gen_;
  std::vector<std::uint32_t> inverses_;
  std::map<IntMatrix, std::uint32_t> index_;
  std::uint32_t longest_ = 0;
};

/// Index of a root of Phi as (positive representative, sign).
struct SignedRoot {
  std::size_t index = 0;
  bool negative = false;
};

class RootSystem {
 public:
  /// "A1".."A7", "B2".."B6", "C2".."C6", "G2".
  static std::shared_ptr<const RootSystem> of_type(std::string_view type,
                                                   std::size_t cap = WeylGroup::kDefaultCap);
  /// Row-major Cartan matrix. Throws MalformedInput when it is not a
  /// symmetrizable matrix of finite type.
  static std::shared_ptr<const RootSystem> from_cartan(std::vector<std::vector<int>> cartan,
                                                       std::size_t cap = WeylGroup::kDefaultCap);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  std::optional<SignedRoot> find_root(const RootVector& root) const;
  const WeylGroup& weyl() const { return *weyl_; }

  /// Simple reflection r_i applied to a root (0-based i).
  RootVector reflect(std::size_t i, const RootVector& root) const;
  RootVector simple_root(std::size_t i) const;

  /// (alpha_i, v) = sum_j pairing(i, j) * lambda_j.
  const Rational& pairing(std::size_t i, std::size_t j) const { return pairing_[i * rank_ + j]; }
  /// Row of the linear form v -> (root, v) in base coordinates.
  std::vector<Rational> form(const RootVector& root) const;
  /// u_j with (alpha_i, u_j) = delta_ij: the extreme rays of the
  /// fundamental sector, in base coordinates.
  const std::vector<std::vector<Rational>>& fundamental_rays() const { return rays_; }

 private:
  RootSystem(std::string name, std::size_t rank, std::vector<int> cartan, std::size_t cap);

  std::string name_;
  std::size_t rank_;
  std::vector<int> cartan_;
  std::vector<Rational> symmetrizer_;
  std::vector<RootVector> positive_;
  std::map<RootVector, std::size_t> root_index_;
  std::vector<Rational> pairing_;
  std::vector<std::vector<Rational>> rays_;
  std::unique_ptr<WeylGroup> weyl_;
};

std::string root_string(const RootVector& root);

}  // namespace lbk
