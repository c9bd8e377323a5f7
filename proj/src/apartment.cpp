#include "lbk/apartment.hpp"

#include <algorithm>
#include <cctype>

#include "lbk/errors.hpp"

namespace lbk {

// ---------------------------------------------------------------------- Point

Point operator+(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw MalformedInput("point dimension mismatch");
  Point out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Point operator-(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw MalformedInput("point dimension mismatch");
  Point out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

Point operator*(const Point& a, const Rational& q) {
  Point out = a;
  for (auto& c : out.coords) c *= q;
  return out;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.coords[i]);
  }
  return out + ")";
}

Point parse_point(std::string_view text, std::size_t dimension, std::size_t lambda_rank) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw MalformedInput("point literal must look like (a|b,c|d): '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  Point p;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    p.coords.push_back(parse_lambda(s.substr(start, comma == std::string::npos ? comma : comma - start),
                                    lambda_rank));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (p.size() != dimension) {
    throw MalformedInput("point literal '" + std::string(text) + "' has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(dimension));
  }
  return p;
}

HalfApartment opposite(const HalfApartment& h) {
  return {h.root, h.sense == Sense::Ge ? Sense::Le : Sense::Ge, h.bound};
}

std::string to_string(RegionShape shape) {
  switch (shape) {
    case RegionShape::Empty: return "empty";
    case RegionShape::HalfApartment: return "half-apartment";
    case RegionShape::Wall: return "wall";
    case RegionShape::SectorPanel: return "sector-panel";
    case RegionShape::Other: return "other";
  }
  return "other";
}

// ------------------------------------------------------------------ Apartment

Apartment::Apartment(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank)
    : roots_(std::move(roots)), lambda_rank_(lambda_rank) {
  if (!roots_) throw MalformedInput("apartment needs a root system");
  if (lambda_rank_ == 0) throw MalformedInput("lambda rank must be positive");
  for (const auto& r : roots_->positive_roots()) forms_.push_back(roots_->form(r));
}

Point Apartment::origin() const { return Point{std::vector<Lambda>(dimension(), Lambda(lambda_rank_))}; }

void Apartment::check(const Point& p) const {
  if (p.size() != dimension()) {
    throw MalformedInput("point has " + std::to_string(p.size()) + " coordinates, expected " +
                         std::to_string(dimension()));
  }
  for (const auto& c : p.coords) {
    if (c.rank() != lambda_rank_) throw MalformedInput("point coordinate has wrong lambda rank");
  }
}

Lambda Apartment::evaluate(const std::vector<Rational>& form, const Point& p) const {
  Lambda acc(lambda_rank_);
  for (std::size_t j = 0; j < form.size(); ++j) {
    if (sgn(form[j]) != 0) acc += p.coords[j] * form[j];
  }
  return acc;
}

Lambda Apartment::pairing(const RootVector& root, const Point& v) const {
  check(v);
  return evaluate(roots_->form(root), v);
}

Lambda Apartment::pairing(std::size_t positive_root, const Point& v) const {
  return evaluate(forms_.at(positive_root), v);
}

Lambda Apartment::metric(const Point& a, const Point& b) const {
  Point diff = a - b;
  Lambda total(lambda_rank_);
  for (const auto& f : forms_) total += abs(evaluate(f, diff));
  return total;
}

Lambda Apartment::coordinate(const Point& v, std::size_t i, const WeylElement& w) const {
  if (i >= dimension()) throw MalformedInput("coordinate index out of range");
  return pairing(roots_->simple_root(i), apply(w.inverse(), v)) / 2;
}

Point Apartment::from_coordinates(const std::vector<Lambda>& values) const {
  if (values.size() != dimension()) throw MalformedInput("wrong number of coordinates");
  // (alpha_i, v) = 2 v^i, so v = sum_j 2 v^j u_j.
  Point p = origin();
  const auto& rays = roots_->fundamental_rays();
  for (std::size_t j = 0; j < dimension(); ++j) {
    for (std::size_t k = 0; k < dimension(); ++k) p.coords[k] += values[j] * (2 * rays[j][k]);
  }
  return p;
}

Point Apartment::apply(const WeylElement& w, const Point& v) const {
  check(v);
  const auto& m = w.matrix();
  const std::size_t n = dimension();
  Point out = origin();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      int c = m[k * n + j];
      if (c != 0) out.coords[k] += v.coords[j] * Rational(c);
    }
  }
  return out;
}

Point Apartment::apply(const AffineIsometry& g, const Point& v) const {
  return apply(g.linear, v) + g.translation;
}

AffineIsometry Apartment::identity() const { return {weyl().identity(), origin()}; }

AffineIsometry Apartment::translation(const Point& t) const {
  check(t);
  return {weyl().identity(), t};
}

AffineIsometry Apartment::linear(const WeylElement& w) const { return {w, origin()}; }

AffineIsometry Apartment::compose(const AffineIsometry& g, const AffineIsometry& h) const {
  return {g.linear * h.linear, apply(g.linear, h.translation) + g.translation};
}

AffineIsometry Apartment::inverse(const AffineIsometry& g) const {
  WeylElement inv = g.linear.inverse();
  Point t = apply(inv, g.translation);
  return {inv, origin() - t};
}

AffineIsometry Apartment::reflection(std::size_t positive_root, const Lambda& c) const {
  const RootVector& alpha = roots_->positive_roots().at(positive_root);
  const std::size_t n = dimension();
  Rational norm = 0;
  const auto& f = forms_[positive_root];
  for (std::size_t j = 0; j < n; ++j) norm += f[j] * alpha[j];
  // s(alpha_j) = alpha_j - 2 (alpha, alpha_j) / (alpha, alpha) * alpha.
  IntMatrix m(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational pair_j = 0;
    for (std::size_t i = 0; i < n; ++i) pair_j += alpha[i] * roots_->pairing(i, j);
    Rational coeff = 2 * pair_j / norm;
    if (coeff.get_den() != 1) throw std::logic_error("non-integral reflection coefficient");
    int ci = static_cast<int>(coeff.get_num().get_si());
    for (std::size_t k = 0; k < n; ++k) m[k * n + j] = (k == j ? 1 : 0) - ci * alpha[k];
  }
  auto w = weyl().find(m);
  if (!w) throw std::logic_error("reflection not found in the Weyl group");
  Point t = origin();
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k] != 0) t.coords[k] = c * (Rational(2 * alpha[k]) / norm);
  }
  return {*w, t};
}

HalfApartment Apartment::half_apartment(const RootVector& root, Sense sense, const Lambda& bound) const {
  auto found = roots_->find_root(root);
  if (!found) throw MalformedInput(root_string(root) + " is not a root");
  if (bound.rank() != lambda_rank_) throw MalformedInput("half-apartment bound has wrong lambda rank");
  if (!found->negative) return {found->index, sense, bound};
  return {found->index, sense == Sense::Ge ? Sense::Le : Sense::Ge, -bound};
}

std::vector<Rational> Apartment::signed_form(const HalfApartment& h) const {
  auto f = forms_.at(h.root);
  if (h.sense == Sense::Le) {
    for (auto& q : f) q = -q;
  }
  return f;
}

LinearConstraint Apartment::constraint(const HalfApartment& h) const {
  return {signed_form(h), Relation::Ge, h.sense == Sense::Ge ? h.bound : -h.bound};
}

ConstraintSystem Apartment::system(const ConvexRegion& r, std::size_t extra) const {
  ConstraintSystem sys(dimension() + extra, lambda_rank_);
  for (const auto& h : r.constraints) {
    auto c = constraint(h);
    c.coefficients.resize(dimension() + extra);
    sys.add(std::move(c));
  }
  return sys;
}

bool Apartment::contains(const HalfApartment& h, const Point& p) const {
  auto order = pairing(h.root, p) <=> h.bound;
  return h.sense == Sense::Ge ? order >= 0 : order <= 0;
}

bool Apartment::contains(const ConvexRegion& r, const Point& p) const {
  check(p);
  return std::all_of(r.constraints.begin(), r.constraints.end(),
                     [&](const HalfApartment& h) { return contains(h, p); });
}

bool Apartment::is_empty(const ConvexRegion& r) const { return !feasible(system(r)).satisfiable; }

std::optional<Point> Apartment::witness(const ConvexRegion& r) const {
  auto f = feasible(system(r));
  if (!f) return std::nullopt;
  return Point{std::move(f.witness)};
}

std::optional<Point> Apartment::sample(const ConvexRegion& r, std::mt19937_64& rng) const {
  auto s = sample_solution(system(r), rng);
  if (!s) return std::nullopt;
  return Point{std::move(*s)};
}

bool Apartment::contains(const ConvexRegion& outer, const ConvexRegion& inner) const {
  ConstraintSystem base = system(inner);
  if (!feasible(base)) return true;
  for (const auto& h : outer.constraints) {
    // inner and not h: -f > -b.
    ConstraintSystem probe = base;
    auto c = constraint(h);
    for (auto& q : c.coefficients) q = -q;
    probe.add(std::move(c.coefficients), Relation::Gt, -c.bound);
    if (feasible(probe)) return false;
  }
  return true;
}

bool Apartment::equal(const ConvexRegion& a, const ConvexRegion& b) const {
  return contains(a, b) && contains(b, a);
}

ConvexRegion Apartment::intersect(const ConvexRegion& a, const ConvexRegion& b) const {
  ConvexRegion out = a;
  out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
  return out;
}

std::optional<FormRange> Apartment::range(const ConvexRegion& r, std::size_t positive_root) const {
  return range_of(system(r), forms_.at(positive_root));
}

std::optional<FormRange> Apartment::range(const ConvexRegion& r, const RootVector& root) const {
  return range_of(system(r), roots_->form(root));
}

bool Apartment::full_dimensional(const ConvexRegion& r) const {
  ConstraintSystem sys(dimension(), lambda_rank_);
  for (const auto& h : r.constraints) {
    auto c = constraint(h);
    sys.add(std::move(c.coefficients), Relation::Gt, c.bound);
  }
  return feasible(sys).satisfiable;
}

HalfApartment Apartment::transport(const HalfApartment& h, const AffineIsometry& g) const {
  // g({(a, v) >= c}) = {(w a, u) >= c + (w a, t)} by W-invariance.
  RootVector image = g.linear.apply(roots_->positive_roots()[h.root]);
  Lambda shifted = h.bound + pairing(image, g.translation);
  return half_apartment(image, h.sense, shifted);
}

ConvexRegion Apartment::transport(const ConvexRegion& r, const AffineIsometry& g) const {
  ConvexRegion out;
  out.constraints.reserve(r.constraints.size());
  for (const auto& h : r.constraints) out.constraints.push_back(transport(h, g));
  return out;
}

ConvexRegion Apartment::wall(std::size_t positive_root, const Lambda& c) const {
  return {{{positive_root, Sense::Ge, c}, {positive_root, Sense::Le, c}}};
}

ConvexRegion Apartment::wall_of(const HalfApartment& h) const { return wall(h.root, h.bound); }

ShapeInfo Apartment::classify(const ConvexRegion& r) const {
  ShapeInfo info;
  if (is_empty(r)) {
    info.shape = RegionShape::Empty;
    return info;
  }
  for (const auto& h : r.constraints) {
    if (equal(ConvexRegion{{h}}, r)) {
      info.shape = RegionShape::HalfApartment;
      info.half = h;
      return info;
    }
  }
  for (const auto& h : r.constraints) {
    if (equal(wall_of(h), r)) {
      info.shape = RegionShape::Wall;
      info.half = h;
      return info;
    }
  }
  if (!full_dimensional(r)) {
    for (const auto& w : weyl().elements()) {
      std::vector<Lambda> lows;
      bool bounded = true;
      for (std::size_t k = 0; k < dimension() && bounded; ++k) {
        auto rg = range(r, w.apply(roots_->simple_root(k)));
        if (!rg || !rg->lower_attained) {
          bounded = false;
        } else {
          lows.push_back(*rg->lower);
        }
      }
      if (!bounded) continue;
      // Apex x with (w alpha_k, x) = lows[k]: w^-1 x = sum_k lows[k] u_k.
      Point local = origin();
      const auto& rays = roots_->fundamental_rays();
      for (std::size_t k = 0; k < dimension(); ++k) {
        for (std::size_t m = 0; m < dimension(); ++m) local.coords[m] += lows[k] * rays[k][m];
      }
      Sector s{apply(w, local), w};
      for (std::size_t i = 0; i < dimension(); ++i) {
        if (equal(panel_region(s, i), r)) {
          info.shape = RegionShape::SectorPanel;
          info.sector = s;
          info.panel_type = i;
          return info;
        }
      }
    }
  }
  return info;
}

std::vector<Rational> Apartment::ray(const WeylElement& direction, std::size_t j) const {
  const auto& u = roots_->fundamental_rays().at(j);
  const auto& m = direction.matrix();
  const std::size_t n = dimension();
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[k * n + i] != 0) out[k] += m[k * n + i] * u[i];
    }
  }
  return out;
}

ConvexRegion Apartment::region(const Sector& s) const {
  ConvexRegion out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    RootVector root = s.direction.apply(roots_->simple_root(i));
    out.constraints.push_back(half_apartment(root, Sense::Ge, pairing(root, s.base)));
  }
  return out;
}

ConvexRegion Apartment::panel_region(const Sector& s, std::size_t i) const {
  ConvexRegion out = region(s);
  RootVector root = s.direction.apply(roots_->simple_root(i));
  out.constraints.push_back(half_apartment(root, Sense::Le, pairing(root, s.base)));
  return out;
}

ConvexRegion Apartment::panel_wall(const Sector& s, std::size_t i) const {
  RootVector root = s.direction.apply(roots_->simple_root(i));
  HalfApartment h = half_apartment(root, Sense::Ge, pairing(root, s.base));
  return wall_of(h);
}

bool Apartment::in_sector(const Sector& s, const Point& p) const { return contains(region(s), p); }

bool Apartment::recedes(const ConvexRegion& r, const WeylElement& direction,
                        std::optional<std::size_t> skip) const {
  std::vector<std::vector<Rational>> rays;
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (skip && *skip == j) continue;
    rays.push_back(ray(direction, j));
  }
  for (const auto& h : r.constraints) {
    auto f = signed_form(h);
    for (const auto& u : rays) {
      Rational v = 0;
      for (std::size_t k = 0; k < u.size(); ++k) v += f[k] * u[k];
      if (sgn(v) < 0) return false;
    }
  }
  return true;
}

ConvexRegion Apartment::convex_hull(std::span<const Point> points, std::span<const Sector> sectors) const {
  if (points.empty() && sectors.empty()) throw MalformedInput("convex hull of an empty set");
  ConvexRegion out;
  std::vector<std::vector<std::vector<Rational>>> sector_rays;
  for (const auto& s : sectors) {
    std::vector<std::vector<Rational>> rays;
    for (std::size_t j = 0; j < dimension(); ++j) rays.push_back(ray(s.direction, j));
    sector_rays.push_back(std::move(rays));
  }
  for (std::size_t a = 0; a < forms_.size(); ++a) {
    const auto& f = forms_[a];
    std::optional<Lambda> lo, hi;
    bool lo_infinite = false, hi_infinite = false;
    for (const auto& p : points) {
      Lambda v = evaluate(f, p);
      lo = lo ? min(*lo, v) : v;
      hi = hi ? max(*hi, v) : v;
    }
    for (std::size_t s = 0; s < sectors.size(); ++s) {
      bool any_pos = false, any_neg = false;
      for (const auto& u : sector_rays[s]) {
        Rational v = 0;
        for (std::size_t k = 0; k < u.size(); ++k) v += f[k] * u[k];
        any_pos = any_pos || sgn(v) > 0;
        any_neg = any_neg || sgn(v) < 0;
      }
      Lambda v = evaluate(f, sectors[s].base);
      if (any_neg) {
        lo_infinite = true;
      } else {
        lo = lo ? min(*lo, v) : v;
      }
      if (any_pos) {
        hi_infinite = true;
      } else {
        hi = hi ? max(*hi, v) : v;
      }
    }
    if (!lo_infinite && lo) out.constraints.push_back({a, Sense::Ge, *lo});
    if (!hi_infinite && hi) out.constraints.push_back({a, Sense::Le, *hi});
  }
  return out;
}

bool Apartment::contains_germ(const ConvexRegion& r, const SectorGerm& g) const {
  const Point& x = g.base();
  if (!contains(r, x)) return false;
  // Single unknown eps: eps > 0 and f.(x + eps u_j) >= b for every j.
  ConstraintSystem sys(1, lambda_rank_);
  sys.add({Rational(1)}, Relation::Gt, Lambda(lambda_rank_));
  std::vector<std::vector<Rational>> rays;
  for (std::size_t j = 0; j < dimension(); ++j) rays.push_back(ray(g.direction(), j));
  for (const auto& h : r.constraints) {
    auto c = constraint(h);
    Lambda slack = c.bound - evaluate(c.coefficients, x);
    for (const auto& u : rays) {
      Rational coeff = 0;
      for (std::size_t k = 0; k < u.size(); ++k) coeff += c.coefficients[k] * u[k];
      sys.add({coeff}, Relation::Ge, slack);
    }
  }
  return feasible(sys).satisfiable;
}

bool Apartment::parallel(const Sector& s, const Sector& t) const { return s.direction == t.direction; }

std::optional<Sector> Apartment::subsector_in(const Sector& s, const ConvexRegion& r) const {
  if (!recedes(r, s.direction)) return std::nullopt;
  const std::size_t n = dimension();
  std::vector<std::vector<Rational>> rays;
  for (std::size_t j = 0; j < n; ++j) rays.push_back(ray(s.direction, j));

  // Unknowns t_1..t_n >= 0 with f.(x + sum t_j u_j) >= b.
  ConstraintSystem sys(n, lambda_rank_);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    sys.add(std::move(e), Relation::Ge, Lambda(lambda_rank_));
  }
  for (const auto& h : r.constraints) {
    auto c = constraint(h);
    std::vector<Rational> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) coeffs[j] += c.coefficients[k] * rays[j][k];
    }
    sys.add(std::move(coeffs), Relation::Ge, c.bound - evaluate(c.coefficients, s.base));
  }
  auto f = feasible(sys);
  if (!f) return std::nullopt;
  std::vector<Lambda> t = std::move(f.witness);
  // All coefficients are >= 0 here, so each t_j can drop to its largest
  // lower bound without breaking any constraint.
  for (std::size_t j = 0; j < n; ++j) {
    Lambda best(lambda_rank_);
    for (const auto& c : sys.constraints()) {
      if (sgn(c.coefficients[j]) <= 0) continue;
      Lambda rest = c.bound;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j && sgn(c.coefficients[k]) != 0) rest -= t[k] * c.coefficients[k];
      }
      best = max(best, rest / c.coefficients[j]);
    }
    t[j] = best;
  }
  Point base = s.base;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(rays[j][k]) != 0) base.coords[k] += t[j] * rays[j][k];
    }
  }
  return Sector{std::move(base), s.direction};
}

WeylElement Apartment::germ_distance(const SectorGerm& g1, const SectorGerm& g2) const {
  if (!(g1.base() == g2.base())) throw MalformedInput("germ distance needs germs at a common base");
  return g1.direction().inverse() * g2.direction();
}

std::vector<int> Apartment::gallery(const SectorGerm& g1, const SectorGerm& g2) const {
  return germ_distance(g1, g2).word();
}

WeylElement Apartment::sector_through(const Point& base, const Point& y) const {
  for (const auto& w : weyl().elements()) {
    if (in_sector(Sector{base, w}, y)) return w;
  }
  throw std::logic_error("sectors at a point do not cover the apartment");
}

Point Apartment::random_point(std::mt19937_64& rng, int bound) const {
  Point p;
  for (std::size_t i = 0; i < dimension(); ++i) p.coords.push_back(random_lambda(rng, lambda_rank_, bound));
  return p;
}

AffineIsometry Apartment::random_isometry(std::mt19937_64& rng, int bound) const {
  std::uniform_int_distribution<std::size_t> pick(0, weyl().size() - 1);
  return {weyl().element(pick(rng)), random_point(rng, bound)};
}

}  // namespace lbk
