#pragma once

// Elements of the ordered value group: lexicographically ordered tuples of
// rationals. All arithmetic is exact.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lbk {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// A value in lex Q^k. The most significant component comes first.
class Lambda {
 public:
  Lambda() = default;
  explicit Lambda(std::size_t rank) : parts_(rank) {}
  explicit Lambda(std::vector<Rational> parts) : parts_(std::move(parts)) {}
  Lambda(std::initializer_list<Rational> parts) : parts_(parts) {}

  /// (1, 0, ..., 0): the positive step used when a witness is only
  /// bounded on one side.
  static Lambda unit(std::size_t rank);
  /// A rank-k value whose leading component is q.
  static Lambda scalar(std::size_t rank, const Rational& q);

  std::size_t rank() const { return parts_.size(); }
  const std::vector<Rational>& parts() const { return parts_; }
  const Rational& operator[](std::size_t i) const { return parts_[i]; }

  bool is_zero() const;
  /// -1, 0 or +1.
  int sign() const;

  Lambda& operator+=(const Lambda& other);
  Lambda& operator-=(const Lambda& other);
  Lambda& operator*=(const Rational& q);
  Lambda& operator/=(const Rational& q);

  friend Lambda operator+(Lambda a, const Lambda& b) { return a += b; }
  friend Lambda operator-(Lambda a, const Lambda& b) { return a -= b; }
  friend Lambda operator*(Lambda a, const Rational& q) { return a *= q; }
  friend Lambda operator*(const Rational& q, Lambda a) { return a *= q; }
  friend Lambda operator/(Lambda a, const Rational& q) { return a /= q; }
  Lambda operator-() const;

  /// Throws MalformedInput when the ranks differ.
  friend std::strong_ordering operator<=>(const Lambda& a, const Lambda& b);
  friend bool operator==(const Lambda& a, const Lambda& b);

 private:
  void require_same_rank(const Lambda& other) const;

  std::vector<Rational> parts_;
};

std::strong_ordering compare(const Lambda& a, const Lambda& b);
Lambda abs(const Lambda& a);
const Lambda& min(const Lambda& a, const Lambda& b);
const Lambda& max(const Lambda& a, const Lambda& b);

/// Components joined by '|', e.g. "1/2|-3". Rank 1 prints as a bare
/// rational.
std::string to_string(const Lambda& a);
/// Inverse of to_string. Missing trailing components are zero; more
/// components than `rank` is an error.
Lambda parse_lambda(std::string_view text, std::size_t rank);

std::ostream& operator<<(std::ostream& os, const Lambda& a);

}  // namespace lbk
