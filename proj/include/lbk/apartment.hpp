#pragma once

// The model apartment Sigma = Lambda^n with coordinates over the simple
// roots: pairing, metric, the affine Weyl group, half-apartments, convex
// regions, sectors and sector germs.
//
// Every region is a finite intersection of half-apartments
// {v : (alpha, v) >= c} or {v : (alpha, v) <= c} with alpha a positive root.
// Translations are all of Lambda^n.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lbk/lambda.hpp"
#include "lbk/linear_system.hpp"
#include "lbk/root_system.hpp"

namespace lbk {

/// sum_i coords[i] * alpha_i.
struct Point {
  std::vector<Lambda> coords;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Point& a, const Rational& q);

/// "(a|b,c|d)".
std::string to_string(const Point& p);
/// Accepts "(x, y)" with lex literals; whitespace is ignored.
Point parse_point(std::string_view text, std::size_t dimension, std::size_t lambda_rank);

/// v -> linear(v) + translation.
struct AffineIsometry {
  WeylElement linear;
  Point translation;
};

enum class Sense { Ge, Le };

/// {v : (alpha_root, v) sense bound}; `root` indexes the positive roots.
struct HalfApartment {
  std::size_t root = 0;
  Sense sense = Sense::Ge;
  Lambda bound;

  friend bool operator==(const HalfApartment&, const HalfApartment&) = default;
};

HalfApartment opposite(const HalfApartment& h);

/// Intersection of its half-apartments; no constraints is all of Sigma.
struct ConvexRegion {
  std::vector<HalfApartment> constraints;
};

/// base + direction(S_hat - o), S_hat = {v : (alpha_i, v) >= 0 for all i}.
struct Sector {
  Point base;
  WeylElement direction;

  friend bool operator==(const Sector& a, const Sector& b) {
    return a.base == b.base && a.direction == b.direction;
  }
};

/// A sector up to agreement near its base point.
struct SectorGerm {
  Sector sector;

  const Point& base() const { return sector.base; }
  const WeylElement& direction() const { return sector.direction; }
  friend bool operator==(const SectorGerm&, const SectorGerm&) = default;
};

enum class RegionShape { Empty, HalfApartment, Wall, SectorPanel, Other };
std::string to_string(RegionShape shape);

struct ShapeInfo {
  RegionShape shape = RegionShape::Other;
  /// Set for HalfApartment (the defining half-apartment) and Wall (one of
  /// its two sides).
  std::optional<HalfApartment> half;
  /// Set for SectorPanel.
  std::optional<Sector> sector;
  std::size_t panel_type = 0;
};

class Apartment {
 public:
  Apartment(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank);

  const RootSystem& roots() const { return *roots_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return roots_; }
  const WeylGroup& weyl() const { return roots_->weyl(); }
  std::size_t dimension() const { return roots_->rank(); }
  std::size_t lambda_rank() const { return lambda_rank_; }

  Point origin() const;
  /// Throws MalformedInput on a shape mismatch.
  void check(const Point& p) const;

  Lambda pairing(const RootVector& root, const Point& v) const;
  Lambda pairing(std::size_t positive_root, const Point& v) const;
  Lambda metric(const Point& a, const Point& b) const;
  /// v^{w(alpha_i)} = (alpha_i, w^-1 v) / 2.
  Lambda coordinate(const Point& v, std::size_t i, const WeylElement& w) const;
  /// Inverse of v -> (v^1, ..., v^n).
  Point from_coordinates(const std::vector<Lambda>& values) const;

  Point apply(const WeylElement& w, const Point& v) const;
  Point apply(const AffineIsometry& g, const Point& v) const;
  AffineIsometry identity() const;
  AffineIsometry translation(const Point& t) const;
  AffineIsometry linear(const WeylElement& w) const;
  /// g after h.
  AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h) const;
  AffineIsometry inverse(const AffineIsometry& g) const;
  /// Reflection in the wall {v : (alpha, v) = c}.
  AffineIsometry reflection(std::size_t positive_root, const Lambda& c) const;

  /// Canonicalizes a signed root to its positive representative.
  HalfApartment half_apartment(const RootVector& root, Sense sense, const Lambda& bound) const;
  LinearConstraint constraint(const HalfApartment& h) const;
  /// Variables 0..n-1 are the point coordinates; `extra` more are appended
  /// with zero coefficients.
  ConstraintSystem system(const ConvexRegion& r, std::size_t extra = 0) const;

  bool contains(const HalfApartment& h, const Point& p) const;
  bool contains(const ConvexRegion& r, const Point& p) const;
  bool is_empty(const ConvexRegion& r) const;
  std::optional<Point> witness(const ConvexRegion& r) const;
  std::optional<Point> sample(const ConvexRegion& r, std::mt19937_64& rng) const;
  /// inner is a subset of outer.
  bool contains(const ConvexRegion& outer, const ConvexRegion& inner) const;
  bool equal(const ConvexRegion& a, const ConvexRegion& b) const;
  ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b) const;
  /// Range of (alpha, .) over the region; nullopt when it is empty.
  std::optional<FormRange> range(const ConvexRegion& r, std::size_t positive_root) const;
  std::optional<FormRange> range(const ConvexRegion& r, const RootVector& root) const;
  /// True when the region has nonempty interior.
  bool full_dimensional(const ConvexRegion& r) const;

  HalfApartment transport(const HalfApartment& h, const AffineIsometry& g) const;
  /// g(r).
  ConvexRegion transport(const ConvexRegion& r, const AffineIsometry& g) const;
  ConvexRegion wall(std::size_t positive_root, const Lambda& c) const;
  ConvexRegion wall_of(const HalfApartment& h) const;

  ShapeInfo classify(const ConvexRegion& r) const;

  /// Base coordinates of direction(u_j), the j-th extreme ray.
  std::vector<Rational> ray(const WeylElement& direction, std::size_t j) const;
  ConvexRegion region(const Sector& s) const;
  /// The type-i sector panel {v in S : (w alpha_i, v - base) = 0}.
  ConvexRegion panel_region(const Sector& s, std::size_t i) const;
  /// The wall spanned by the type-i panel.
  ConvexRegion panel_wall(const Sector& s, std::size_t i) const;
  bool in_sector(const Sector& s, const Point& p) const;
  /// Every translate of the cone (or of its type-`skip` panel cone when
  /// given) eventually lies in r: the recession cone of r contains it.
  bool recedes(const ConvexRegion& r, const WeylElement& direction,
               std::optional<std::size_t> skip = std::nullopt) const;

  /// Smallest region of half-apartment constraints containing the points
  /// and sectors.
  ConvexRegion convex_hull(std::span<const Point> points, std::span<const Sector> sectors) const;
  /// base in r and base + eps * direction(u_j) in r for all j, for some
  /// eps > 0 in Lambda (eps solved for by elimination).
  bool contains_germ(const ConvexRegion& r, const SectorGerm& g) const;
  bool parallel(const Sector& s, const Sector& t) const;
  /// A subsector base + sum t_j direction(u_j), t_j >= 0, lying in r; each
  /// t_j is then lowered as far as the region allows.
  std::optional<Sector> subsector_in(const Sector& s, const ConvexRegion& r) const;
  /// delta(g1, g2) = w1^-1 w2; throws MalformedInput for different bases.
  WeylElement germ_distance(const SectorGerm& g1, const SectorGerm& g2) const;
  /// Type j_1 ... j_k (0-based) of a minimal gallery from g1 to g2.
  std::vector<int> gallery(const SectorGerm& g1, const SectorGerm& g2) const;
  /// Least direction w with y in base + w(S_hat).
  WeylElement sector_through(const Point& base, const Point& y) const;

  Point random_point(std::mt19937_64& rng, int bound = 12) const;
  AffineIsometry random_isometry(std::mt19937_64& rng, int bound = 12) const;

 private:
  std::vector<Rational> signed_form(const HalfApartment& h) const;
  Lambda evaluate(const std::vector<Rational>& form, const Point& p) const;

  std::shared_ptr<const RootSystem> roots_;
  std::size_t lambda_rank_;
  std::vector<std::vector<Rational>> forms_;  // per positive root
};

}  // namespace lbk
