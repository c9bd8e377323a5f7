#pragma once

// Finite atlas presentations of candidate buildings. Each chart is a copy of
// the model apartment standing for one apartment image; an ordered pair of
// charts may carry a transition: a closed convex region of the first chart
// together with the affine isometry identifying it with its image in the
// second chart.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbk/apartment.hpp"

namespace lbk {

struct Transition {
  ConvexRegion region;  // in source-chart coordinates
  AffineIsometry map;   // source chart -> target chart
};

struct BuildingPoint {
  std::size_t chart = 0;
  Point point;
};

struct BuildingSector {
  std::size_t chart = 0;
  Sector sector;
};

struct BuildingGerm {
  std::size_t chart = 0;
  SectorGerm germ;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool valid() const { return violations.empty(); }
};

std::string to_string(const ValidationReport& report);

class Atlas {
 public:
  /// Charts are named "1", "2", ... by default.
  Atlas(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank, std::size_t charts);
  /// Throws MalformedInput on empty or repeated names.
  Atlas(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank, std::vector<std::string> names);

  const Apartment& apartment() const { return sigma_; }
  std::size_t size() const { return names_.size(); }

  const std::string& name(std::size_t chart) const { return names_.at(chart); }
  void set_name(std::size_t chart, std::string name);
  /// Matches a chart name, falling back to a 1-based index.
  std::optional<std::size_t> find_chart(std::string_view name) const;

  /// Sets the (i, j) transition only.
  void set_transition(std::size_t i, std::size_t j, Transition t);
  /// Sets (i, j) and its inverse (j, i).
  void glue(std::size_t i, std::size_t j, const ConvexRegion& region, const AffineIsometry& map);
  /// Derives every missing reverse transition from its forward one.
  void complete();
  const Transition* transition(std::size_t i, std::size_t j) const;

  /// R_ij in chart i coordinates: all of Sigma for i == j, an empty region
  /// when the charts are not glued.
  ConvexRegion intersection_region(std::size_t i, std::size_t j) const;
  ShapeInfo classify(std::size_t i, std::size_t j) const;

  ValidationReport validate() const;

  /// The same point in chart j, when it lies there.
  std::optional<Point> transport(const BuildingPoint& p, std::size_t j) const;
  std::optional<Sector> transport(const BuildingSector& s, std::size_t j) const;
  std::optional<SectorGerm> transport(const BuildingGerm& g, std::size_t j) const;

  std::optional<std::size_t> common_chart(const BuildingPoint& p, const BuildingPoint& q) const;
  /// All charts containing both points, in index order.
  std::vector<std::size_t> common_charts(const BuildingPoint& p, const BuildingPoint& q) const;
  bool same_point(const BuildingPoint& p, const BuildingPoint& q) const;
  /// Throws AxiomFailure without a common chart and TheoremViolation when
  /// common charts disagree.
  Lambda global_distance(const BuildingPoint& p, const BuildingPoint& q) const;

  /// Origins plus one witness point of every nonempty transition region,
  /// deduplicated per chart.
  std::vector<BuildingPoint> designated_points() const;

 private:
  void check_chart(std::size_t chart) const;

  Apartment sigma_;
  std::vector<std::string> names_;
  std::vector<std::optional<Transition>> transitions_;  // row-major
};

/// The affine maps agree on every point of the region.
bool agree_on(const Apartment& sigma, const AffineIsometry& g, const AffineIsometry& h,
              const ConvexRegion& region);

/// Chambers at infinity: parallel classes of sectors, merged through
/// transitions whose region contains a subsector.
class InfinityComplex {
 public:
  explicit InfinityComplex(const Atlas& atlas);

  std::size_t chamber_count() const { return chamber_count_; }
  /// Dense chamber index of the sector direction w in chart c.
  std::size_t chamber(std::size_t chart, const WeylElement& w) const;
  /// Chamber set of a chart, sorted.
  std::vector<std::size_t> apartment(std::size_t chart) const;
  /// Distinct chamber sets over all charts.
  std::vector<std::vector<std::size_t>> apartments() const;
  /// Dense index of the type-i panel of chamber (c, w).
  std::size_t panel(std::size_t chart, const WeylElement& w, std::size_t i) const;
  bool adjacent(std::size_t a, std::size_t b, std::size_t type) const;
  /// Weyl distance between chambers read in a chart containing both.
  std::optional<WeylElement> distance(std::size_t a, std::size_t b) const;

  struct Report {
    std::size_t chambers = 0;
    std::size_t apartments = 0;
    bool full_apartments = true;   // each chart sees |W| chambers
    bool thin = true;              // each panel lies in 2 chambers of each apartment
    bool injective = true;         // distinct charts give distinct sets
    bool connected = true;         // any two chambers share an apartment
    std::vector<std::string> problems;
  };
  Report report() const;

 private:
  const Atlas& atlas_;
  std::size_t order_;
  std::vector<std::size_t> chamber_of_;  // chart * |W| + w -> dense id
  std::size_t chamber_count_ = 0;
  std::vector<std::size_t> panel_of_;    // (chart * |W| + w) * n + i -> dense id
  std::size_t panel_count_ = 0;
};

std::string to_string(const InfinityComplex::Report& report);

}  // namespace lbk
