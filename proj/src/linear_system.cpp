#include "lbk/linear_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lbk/errors.hpp"

namespace lbk {

namespace {

bool constant_holds(Relation rel, const Lambda& bound) {
  switch (rel) {
    case Relation::Ge: return bound.sign() <= 0;
    case Relation::Gt: return bound.sign() < 0;
    case Relation::Eq: return bound.is_zero();
  }
  return false;
}

LinearConstraint contradiction(std::size_t n, std::size_t rank) {
  return {std::vector<Rational>(n), Relation::Ge, Lambda::unit(rank)};
}

// Scales so the first nonzero coefficient has absolute value one (equalities:
// is exactly one).
void normalize(LinearConstraint& c) {
  auto it = std::find_if(c.coefficients.begin(), c.coefficients.end(),
                         [](const Rational& q) { return sgn(q) != 0; });
  if (it == c.coefficients.end()) return;
  Rational scale = *it;
  if (c.relation != Relation::Eq) scale = ::abs(scale);
  if (scale == 1) return;
  for (auto& q : c.coefficients) q /= scale;
  c.bound /= scale;
}

// Canonical cleanup: normalization, constant folding, duplicate removal.
std::vector<LinearConstraint> tidy(std::vector<LinearConstraint> in, std::size_t n,
                                   std::size_t rank) {
  std::vector<LinearConstraint> out;
  std::map<std::vector<Rational>, std::size_t> inequality_slot;
  for (auto& c : in) {
    if (c.is_constant()) {
      if (!constant_holds(c.relation, c.bound)) return {contradiction(n, rank)};
      continue;
    }
    normalize(c);
    if (c.relation == Relation::Eq) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
      continue;
    }
    auto [it, fresh] = inequality_slot.try_emplace(c.coefficients, out.size());
    if (fresh) {
      out.push_back(std::move(c));
      continue;
    }
    auto& kept = out[it->second];
    auto order = c.bound <=> kept.bound;
    if (order > 0 || (order == 0 && c.relation == Relation::Gt)) kept = std::move(c);
  }
  return out;
}

struct Interval {
  std::optional<Lambda> lower;
  bool lower_strict = false;
  std::optional<Lambda> upper;
  bool upper_strict = false;
};

void tighten_lower(Interval& iv, const Lambda& v, bool strict) {
  if (!iv.lower || v > *iv.lower) {
    iv.lower = v;
    iv.lower_strict = strict;
  } else if (v == *iv.lower) {
    iv.lower_strict = iv.lower_strict || strict;
  }
}

void tighten_upper(Interval& iv, const Lambda& v, bool strict) {
  if (!iv.upper || v < *iv.upper) {
    iv.upper = v;
    iv.upper_strict = strict;
  } else if (v == *iv.upper) {
    iv.upper_strict = iv.upper_strict || strict;
  }
}

// Bounds on x_var implied by `sys` once x_0..x_{var-1} are fixed. Variables
// above `var` must have been eliminated.
Interval bounds_for(const ConstraintSystem& sys, std::size_t var, std::span<const Lambda> prefix) {
  Interval iv;
  for (const auto& c : sys.constraints()) {
    const Rational& a = c.coefficients[var];
    Lambda rhs = c.bound;
    for (std::size_t j = 0; j < var; ++j) {
      if (sgn(c.coefficients[j]) != 0) rhs -= prefix[j] * c.coefficients[j];
    }
    if (sgn(a) == 0) {
      if (!constant_holds(c.relation, rhs)) {
        throw std::logic_error("Fourier-Motzkin back-substitution hit a false constraint");
      }
      continue;
    }
    Lambda value = rhs / a;
    bool strict = c.relation == Relation::Gt;
    if (c.relation == Relation::Eq) {
      tighten_lower(iv, value, false);
      tighten_upper(iv, value, false);
    } else if (sgn(a) > 0) {
      tighten_lower(iv, value, strict);
    } else {
      tighten_upper(iv, value, strict);
    }
  }
  return iv;
}

bool interval_empty(const Interval& iv) {
  if (!iv.lower || !iv.upper) return false;
  auto order = *iv.lower <=> *iv.upper;
  if (order > 0) return true;
  return order == 0 && (iv.lower_strict || iv.upper_strict);
}

Lambda pick_deterministic(const Interval& iv, std::size_t rank) {
  if (iv.lower && iv.upper) {
    if (*iv.lower == *iv.upper) return *iv.lower;
    return (*iv.lower + *iv.upper) / 2;
  }
  if (iv.lower) return *iv.lower + Lambda::unit(rank);
  if (iv.upper) return *iv.upper - Lambda::unit(rank);
  return Lambda(rank);
}

Lambda random_positive(std::mt19937_64& rng, std::size_t rank) {
  Lambda step = abs(random_lambda(rng, rank));
  return step.is_zero() ? Lambda::unit(rank) : step;
}

Lambda pick_random(const Interval& iv, std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 7);
  if (iv.lower && iv.upper) {
    if (*iv.lower == *iv.upper) return *iv.lower;
    int c = coin(rng);
    if (c == 0 && !iv.lower_strict) return *iv.lower;
    if (c == 1 && !iv.upper_strict) return *iv.upper;
    std::uniform_int_distribution<int> den(2, 12);
    int b = den(rng);
    std::uniform_int_distribution<int> num(1, b - 1);
    Rational r(num(rng), b);
    r.canonicalize();
    return *iv.lower + (*iv.upper - *iv.lower) * r;
  }
  if (iv.lower) {
    if (coin(rng) == 0 && !iv.lower_strict) return *iv.lower;
    return *iv.lower + random_positive(rng, rank);
  }
  if (iv.upper) {
    if (coin(rng) == 0 && !iv.upper_strict) return *iv.upper;
    return *iv.upper - random_positive(rng, rank);
  }
  return random_lambda(rng, rank);
}

// E[v] is the system with variables v+1..n-1 eliminated; E[n-1] is the input.
// Returns nullopt when the fully eliminated system is contradictory.
std::optional<std::vector<ConstraintSystem>> elimination_chain(const ConstraintSystem& sys) {
  const std::size_t n = sys.variable_count();
  std::vector<ConstraintSystem> chain;
  chain.reserve(n + 1);
  ConstraintSystem current(n, sys.lambda_rank());
  for (auto c : sys.constraints()) current.add(std::move(c));
  for (std::size_t k = n; k-- > 0;) {
    chain.push_back(current);
    current = eliminate(current, k);
    if (current.has_contradiction()) return std::nullopt;
  }
  if (current.has_contradiction()) return std::nullopt;
  std::reverse(chain.begin(), chain.end());
  return chain;
}

template <typename Pick>
std::optional<std::vector<Lambda>> back_substitute(const ConstraintSystem& sys, Pick&& pick) {
  auto chain = elimination_chain(sys);
  if (!chain) return std::nullopt;
  const std::size_t n = sys.variable_count();
  std::vector<Lambda> point(n, Lambda(sys.lambda_rank()));
  for (std::size_t v = 0; v < n; ++v) {
    Interval iv = bounds_for((*chain)[v], v, point);
    if (interval_empty(iv)) {
      throw std::logic_error("Fourier-Motzkin produced an empty interval during back-substitution");
    }
    point[v] = pick(iv);
  }
  if (!sys.holds(point)) {
    throw std::logic_error("Fourier-Motzkin witness failed re-substitution");
  }
  return point;
}

}  // namespace

Lambda LinearConstraint::evaluate(std::span<const Lambda> point) const {
  Lambda acc(bound.rank());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (sgn(coefficients[i]) != 0) acc += point[i] * coefficients[i];
  }
  return acc;
}

bool LinearConstraint::holds(std::span<const Lambda> point) const {
  auto order = evaluate(point) <=> bound;
  switch (relation) {
    case Relation::Ge: return order >= 0;
    case Relation::Gt: return order > 0;
    case Relation::Eq: return order == 0;
  }
  return false;
}

bool LinearConstraint::is_constant() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

std::string to_string(const LinearConstraint& c) {
  std::string out;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
    if (sgn(c.coefficients[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c.coefficients[i]) + "*x" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  switch (c.relation) {
    case Relation::Ge: out += " >= "; break;
    case Relation::Gt: out += " > "; break;
    case Relation::Eq: out += " = "; break;
  }
  return out + to_string(c.bound);
}

void ConstraintSystem::add(LinearConstraint c) {
  if (c.coefficients.size() != variable_count_) {
    throw MalformedInput("constraint has " + std::to_string(c.coefficients.size()) +
                         " coefficients, system has " + std::to_string(variable_count_) +
                         " variables");
  }
  if (c.bound.rank() != lambda_rank_) throw MalformedInput("constraint bound has wrong lambda rank");
  constraints_.push_back(std::move(c));
}

void ConstraintSystem::add(std::vector<Rational> coefficients, Relation relation, Lambda bound) {
  add(LinearConstraint{std::move(coefficients), relation, std::move(bound)});
}

void ConstraintSystem::append(const ConstraintSystem& other) {
  for (const auto& c : other.constraints()) add(c);
}

bool ConstraintSystem::holds(std::span<const Lambda> point) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const LinearConstraint& c) { return c.holds(point); });
}

bool ConstraintSystem::has_contradiction() const {
  return std::any_of(constraints_.begin(), constraints_.end(), [](const LinearConstraint& c) {
    return c.is_constant() && !constant_holds(c.relation, c.bound);
  });
}

ConstraintSystem eliminate(const ConstraintSystem& sys, std::size_t var) {
  const std::size_t n = sys.variable_count();
  const std::size_t rank = sys.lambda_rank();
  if (var >= n) throw MalformedInput("elimination index out of range");

  std::vector<LinearConstraint> produced;
  const auto& all = sys.constraints();

  // An equality involving the variable is used for substitution.
  auto pivot = std::find_if(all.begin(), all.end(), [&](const LinearConstraint& c) {
    return c.relation == Relation::Eq && sgn(c.coefficients[var]) != 0;
  });
  if (pivot != all.end()) {
    const LinearConstraint& e = *pivot;
    for (auto it = all.begin(); it != all.end(); ++it) {
      if (it == pivot) continue;
      LinearConstraint g = *it;
      if (sgn(g.coefficients[var]) != 0) {
        Rational factor = g.coefficients[var] / e.coefficients[var];
        for (std::size_t j = 0; j < n; ++j) g.coefficients[j] -= factor * e.coefficients[j];
        g.coefficients[var] = 0;
        g.bound -= e.bound * factor;
      }
      produced.push_back(std::move(g));
    }
  } else {
    std::vector<const LinearConstraint*> lower, upper;
    for (const auto& c : all) {
      int s = sgn(c.coefficients[var]);
      if (s > 0) {
        lower.push_back(&c);
      } else if (s < 0) {
        upper.push_back(&c);
      } else {
        produced.push_back(c);
      }
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        // lo/|a_lo| + up/|a_up| cancels the variable.
        Rational wl = 1 / lo->coefficients[var];
        Rational wu = -1 / up->coefficients[var];
        LinearConstraint combined;
        combined.coefficients.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
          combined.coefficients[j] = lo->coefficients[j] * wl + up->coefficients[j] * wu;
        }
        combined.coefficients[var] = 0;
        combined.bound = lo->bound * wl + up->bound * wu;
        combined.relation = (lo->relation == Relation::Gt || up->relation == Relation::Gt)
                                ? Relation::Gt
                                : Relation::Ge;
        produced.push_back(std::move(combined));
      }
    }
  }

  ConstraintSystem out(n, rank);
  for (auto& c : tidy(std::move(produced), n, rank)) out.add(std::move(c));
  return out;
}

Feasibility feasible(const ConstraintSystem& sys) {
  const std::size_t rank = sys.lambda_rank();
  auto point = back_substitute(sys, [&](const Interval& iv) { return pick_deterministic(iv, rank); });
  if (!point) return {};
  return {true, std::move(*point)};
}

std::optional<std::vector<Lambda>> sample_solution(const ConstraintSystem& sys,
                                                   std::mt19937_64& rng) {
  const std::size_t rank = sys.lambda_rank();
  return back_substitute(sys, [&](const Interval& iv) { return pick_random(iv, rank, rng); });
}

std::optional<FormRange> range_of(const ConstraintSystem& sys, std::span<const Rational> form) {
  const std::size_t n = sys.variable_count();
  const std::size_t rank = sys.lambda_rank();
  if (form.size() != n) throw MalformedInput("form length does not match system");
  // Extra variable y = form . x, then project onto y.
  ConstraintSystem lifted(n + 1, rank);
  for (const auto& c : sys.constraints()) {
    auto coeffs = c.coefficients;
    coeffs.push_back(0);
    lifted.add(std::move(coeffs), c.relation, c.bound);
  }
  std::vector<Rational> link(form.begin(), form.end());
  link.push_back(-1);
  lifted.add(std::move(link), Relation::Eq, Lambda(rank));
  for (std::size_t k = n; k-- > 0;) {
    lifted = eliminate(lifted, k);
    if (lifted.has_contradiction()) return std::nullopt;
  }
  std::vector<Lambda> none;
  Interval iv = bounds_for(lifted, n, none);
  if (interval_empty(iv)) return std::nullopt;
  FormRange out;
  out.lower = iv.lower;
  out.lower_attained = iv.lower && !iv.lower_strict;
  out.upper = iv.upper;
  out.upper_attained = iv.upper && !iv.upper_strict;
  return out;
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Lambda random_lambda(std::mt19937_64& rng, std::size_t rank, int bound) {
  std::vector<Rational> parts;
  parts.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) parts.push_back(random_rational(rng, bound));
  return Lambda(std::move(parts));
}

}  // namespace lbk
