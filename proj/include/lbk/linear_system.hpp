#pragma once

// Finite systems of linear constraints with rational coefficients and
// Lambda-valued right-hand sides, decided exactly by Fourier–Motzkin
// elimination. Elimination is exact because the value group is an ordered,
// divisible Q-vector space (in particular dense).

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lbk/lambda.hpp"

namespace lbk {

enum class Relation { Ge, Gt, Eq };

/// sum_i coefficients[i] * x_i  (relation)  bound
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::Ge;
  Lambda bound;

  Lambda evaluate(std::span<const Lambda> point) const;
  bool holds(std::span<const Lambda> point) const;
  bool is_constant() const;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

std::string to_string(const LinearConstraint& c);

class ConstraintSystem {
 public:
  ConstraintSystem(std::size_t variable_count, std::size_t lambda_rank)
      : variable_count_(variable_count), lambda_rank_(lambda_rank) {}

  std::size_t variable_count() const { return variable_count_; }
  std::size_t lambda_rank() const { return lambda_rank_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }

  /// Throws MalformedInput when the shape disagrees with the system.
  void add(LinearConstraint c);
  void add(std::vector<Rational> coefficients, Relation relation, Lambda bound);
  void append(const ConstraintSystem& other);

  bool holds(std::span<const Lambda> point) const;
  /// True iff some constant constraint is false (e.g. 0 >= 1).
  bool has_contradiction() const;

 private:
  std::size_t variable_count_;
  std::size_t lambda_rank_;
  std::vector<LinearConstraint> constraints_;
};

struct Feasibility {
  bool satisfiable = false;
  /// Present iff satisfiable; satisfies every constraint.
  std::vector<Lambda> witness;

  explicit operator bool() const { return satisfiable; }
};

/// Projection onto the other variables. The eliminated variable keeps its
/// index with coefficient zero everywhere. Trivially true constant
/// constraints are dropped and a false one is kept as `0 >= 1`.
ConstraintSystem eliminate(const ConstraintSystem& sys, std::size_t var);

/// Exact decision with a deterministic witness: back-substitution through
/// the elimination order choosing the midpoint of a bounded interval,
/// bound +/- 1 when half-bounded and 0 when free.
Feasibility feasible(const ConstraintSystem& sys);

/// A random solution (seeded), or nullopt when infeasible. Closed interval
/// endpoints are hit with positive probability so lower-dimensional faces
/// get sampled too.
std::optional<std::vector<Lambda>> sample_solution(const ConstraintSystem& sys,
                                                   std::mt19937_64& rng);

/// Range of a linear form over the solution set of a (feasible) system.
struct FormRange {
  std::optional<Lambda> lower;  // nullopt: unbounded below
  bool lower_attained = false;
  std::optional<Lambda> upper;  // nullopt: unbounded above
  bool upper_attained = false;
};

/// Nullopt when the system is infeasible.
std::optional<FormRange> range_of(const ConstraintSystem& sys, std::span<const Rational> form);

/// Random lex tuple with numerators and denominators bounded by `bound`.
Lambda random_lambda(std::mt19937_64& rng, std::size_t rank, int bound = 12);
Rational random_rational(std::mt19937_64& rng, int bound = 12);

}  // namespace lbk
