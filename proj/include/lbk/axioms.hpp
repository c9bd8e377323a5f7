#pragma once

// Deciders for the building axioms on finite atlases, the retraction onto an
// apartment from a sector germ, and the search procedures around it.
//
// Chart searches are exhaustive. Statements quantified over all points of
// Lambda^n are checked on seeded samples; a step budget bounds the searches
// that branch (cover checks, co-apartment searches) and exhausting it gives
// an inconclusive verdict, never pass or fail.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lbk/atlas.hpp"

namespace lbk {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct AxiomReport {
  explicit AxiomReport(std::string id = {}) : axiom(std::move(id)) {}

  std::string axiom;
  Verdict verdict = Verdict::Pass;
  /// One `AXIOM <id> <config> verdict=<v> ...` line per configuration.
  std::vector<std::string> lines;
  std::vector<std::string> counterexamples;
  std::size_t configurations = 0;

  void record(const std::string& config, Verdict v, const std::string& detail = {});
};

struct CheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Steps per check for A5 pairs and SE panel bases.
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  /// Retraction targets for A5.
  std::size_t targets = 3;
  /// Random panel bases per face for SE, besides the deterministic one.
  std::size_t panel_samples = 2;
};

class Budget {
 public:
  explicit Budget(std::size_t limit = std::numeric_limits<std::size_t>::max()) : limit_(limit) {}
  /// False once the limit is reached.
  bool spend(std::size_t steps = 1);
  bool exhausted() const { return exhausted_; }
  std::size_t used() const { return used_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
  bool exhausted_ = false;
};

/// "12:(0|1)".
std::string to_string(const Atlas& atlas, const BuildingPoint& p);

AxiomReport check_A1(const Atlas& atlas);
AxiomReport check_A2(const Atlas& atlas);
AxiomReport check_A3(const Atlas& atlas, const CheckOptions& options = {});
AxiomReport check_A4(const Atlas& atlas);
AxiomReport check_A5(const Atlas& atlas, const CheckOptions& options = {});
AxiomReport check_A6(const Atlas& atlas);
AxiomReport check_EC(const Atlas& atlas);
AxiomReport check_SE(const Atlas& atlas, const CheckOptions& options = {});

/// Runs the named checks ("A1".."A6", "EC", "SE") in that order.
std::vector<AxiomReport> check_axioms(const Atlas& atlas, const std::set<std::string>& only,
                                      const CheckOptions& options = {});

/// Configuration lines followed by a machine-readable summary block.
std::string format_reports(const std::vector<AxiomReport>& reports);
/// 1 on any failure, else 3 on any inconclusive verdict, else 0.
int exit_code(const std::vector<AxiomReport>& reports);

/// rho(y) = g(w(f^-1(y))): per chart B holding the germ, the transition
/// B -> A is the unique isometry fixing the germ.
class Retraction {
 public:
  /// Throws MalformedInput when the germ is not in chart `target`.
  Retraction(const Atlas& atlas, BuildingGerm germ, std::size_t target);

  std::size_t target() const { return target_; }
  const BuildingGerm& germ() const { return germ_; }
  /// Charts holding the germ, with their maps into the target chart.
  const std::vector<std::pair<std::size_t, AffineIsometry>>& charts() const { return maps_; }

  /// Coordinates in the target chart. Throws TheoremViolation when no chart
  /// holds both y and the germ or when two such charts disagree.
  Point operator()(const BuildingPoint& y) const;
  /// Some chart holds y, z and the germ.
  bool co_chart(const BuildingPoint& y, const BuildingPoint& z) const;
  /// Only the identity of W fixes a germ.
  bool stabilizer_trivial() const;
  /// The per-chart maps agree wherever two charts overlap.
  bool consistent() const;

 private:
  const Atlas& atlas_;
  BuildingGerm germ_;
  std::size_t target_;
  std::vector<std::pair<std::size_t, AffineIsometry>> maps_;
};

struct Coapartment {
  std::optional<std::size_t> chart;
  /// l(d(S, T)) between the chambers at infinity; -1 when undetermined.
  int initial_length = -1;
  /// l(delta(S'_y, T_y)) for S' the sector at y parallel to S; -1 when no
  /// chart holds both germs.
  int final_length = -1;
  /// 1: found among charts through both base points, 2: wider search.
  int stage = 0;
  bool budget_exhausted = false;
};

/// A chart containing the germs of both sectors at their bases.
Coapartment germ_coapartment(const Atlas& atlas, const InfinityComplex& infinity, const BuildingSector& s,
                             const BuildingSector& t, Budget& budget);

struct OppositeGerm {
  Sector sector;          // T, based at y, in chart B
  std::size_t co_chart;   // holds the germ S_x and all of T
  WeylElement delta;      // delta(S'_y, T_y) in the co-chart
  /// The sector at x parallel to T contains y.
  bool parallel_contains_y = false;
};

/// T at y in chart B with delta(S'_y, T_y) of maximal length among those
/// admitting a co-chart; ties go to the least direction.
std::optional<OppositeGerm> opposite_germ(const Atlas& atlas, const BuildingGerm& s, std::size_t chart_b,
                                          const Point& y);

struct CoverPiece {
  ConvexRegion region;   // in chart B coordinates
  std::size_t chart;     // holds the region and the germ
};

struct FiniteCover {
  std::vector<CoverPiece> pieces;
  bool complete = false;
  bool budget_exhausted = false;
  std::optional<Point> uncovered;
};

/// Chart B as a union of pieces S_i intersected with B, S_i sectors at the
/// germ base in charts holding the germ; redundant pieces are dropped.
FiniteCover finite_cover(const Atlas& atlas, const BuildingGerm& s, std::size_t chart_b, Budget& budget);

/// Whether the union of the regions is all of Sigma; fills `uncovered`.
bool covers(const Apartment& sigma, const std::vector<ConvexRegion>& regions, Budget& budget,
            std::optional<Point>* uncovered = nullptr);

struct EquivalenceReport {
  std::vector<AxiomReport> reports;
  /// A1 through A4 passed, so the equivalences apply.
  bool applicable = false;
  std::vector<std::string> alarms;
};

EquivalenceReport equivalence_suite(const Atlas& atlas, const CheckOptions& options = {});
std::string to_string(const EquivalenceReport& report);

}  // namespace lbk
