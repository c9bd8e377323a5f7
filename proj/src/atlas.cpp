#include "lbk/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lbk/errors.hpp"

namespace lbk {

namespace {

ConvexRegion empty_region(const Apartment& sigma) {
  Lambda zero(sigma.lambda_rank());
  return {{{0, Sense::Ge, Lambda::unit(sigma.lambda_rank())}, {0, Sense::Le, zero}}};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Renumbers union-find roots densely in order of first appearance.
std::vector<std::size_t> densify(UnionFind& uf, std::size_t n, std::size_t& count) {
  std::vector<std::size_t> out(n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = ids.try_emplace(uf.find(x), ids.size());
    out[x] = it->second;
  }
  count = ids.size();
  return out;
}

}  // namespace

std::string to_string(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& v : report.violations) out << "VIOLATION " << v << '\n';
  for (const auto& n : report.notes) out << "NOTE " << n << '\n';
  out << "VALID " << (report.valid() ? "yes" : "no") << '\n';
  return out.str();
}

bool agree_on(const Apartment& sigma, const AffineIsometry& g, const AffineIsometry& h,
              const ConvexRegion& region) {
  const std::size_t n = sigma.dimension();
  const auto& mg = g.linear.matrix();
  const auto& mh = h.linear.matrix();
  ConstraintSystem base = sigma.system(region);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> diff(n);
    bool linear_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      diff[j] = mg[k * n + j] - mh[k * n + j];
      linear_zero = linear_zero && diff[j] == 0;
    }
    Lambda gap = h.translation.coords[k] - g.translation.coords[k];
    if (linear_zero) {
      if (!gap.is_zero() && feasible(base)) return false;
      continue;
    }
    // g - h differs from zero at coordinate k: sum diff_j v_j != gap.
    ConstraintSystem above = base;
    above.add(diff, Relation::Gt, gap);
    if (feasible(above)) return false;
    for (auto& q : diff) q = -q;
    ConstraintSystem below = base;
    below.add(diff, Relation::Gt, -gap);
    if (feasible(below)) return false;
  }
  return true;
}

Atlas::Atlas(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank, std::size_t charts)
    : sigma_(std::move(roots), lambda_rank), transitions_(charts * charts) {
  if (charts == 0) throw MalformedInput("an atlas needs at least one chart");
  for (std::size_t c = 0; c < charts; ++c) names_.push_back(std::to_string(c + 1));
}

Atlas::Atlas(std::shared_ptr<const RootSystem> roots, std::size_t lambda_rank, std::vector<std::string> names)
    : Atlas(std::move(roots), lambda_rank, names.size()) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty() || !seen.insert(name).second) throw MalformedInput("chart names must be distinct and nonempty");
  }
  names_ = std::move(names);
}

void Atlas::check_chart(std::size_t chart) const {
  if (chart >= size()) throw MalformedInput("chart index " + std::to_string(chart + 1) + " out of range");
}

void Atlas::set_name(std::size_t chart, std::string name) {
  check_chart(chart);
  if (name.empty()) throw MalformedInput("empty chart name");
  for (std::size_t c = 0; c < size(); ++c) {
    if (c != chart && names_[c] == name) throw MalformedInput("duplicate chart name " + name);
  }
  names_[chart] = std::move(name);
}

std::optional<std::size_t> Atlas::find_chart(std::string_view name) const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (names_[c] == name) return c;
  }
  std::size_t index = 0;
  if (name.empty()) return std::nullopt;
  for (char ch : name) {
    if (ch < '0' || ch > '9') return std::nullopt;
    index = index * 10 + static_cast<std::size_t>(ch - '0');
    if (index > size()) return std::nullopt;
  }
  if (index == 0) return std::nullopt;
  return index - 1;
}

void Atlas::set_transition(std::size_t i, std::size_t j, Transition t) {
  check_chart(i);
  check_chart(j);
  if (i == j) throw MalformedInput("a chart cannot be glued to itself");
  for (const auto& h : t.region.constraints) {
    if (h.root >= sigma_.roots().positive_roots().size() || h.bound.rank() != sigma_.lambda_rank()) {
      throw MalformedInput("transition constraint does not fit the apartment");
    }
  }
  sigma_.check(t.map.translation);
  if (!t.map.linear.valid() || &t.map.linear.group() != &sigma_.weyl()) {
    throw MalformedInput("transition map is not in the Weyl group of the atlas");
  }
  transitions_[i * size() + j] = std::move(t);
}

void Atlas::glue(std::size_t i, std::size_t j, const ConvexRegion& region, const AffineIsometry& map) {
  set_transition(i, j, {region, map});
  set_transition(j, i, {sigma_.transport(region, map), sigma_.inverse(map)});
}

void Atlas::complete() {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const auto& forward = transitions_[i * size() + j];
      if (forward && !transitions_[j * size() + i]) {
        transitions_[j * size() + i] =
            Transition{sigma_.transport(forward->region, forward->map), sigma_.inverse(forward->map)};
      }
    }
  }
}

const Transition* Atlas::transition(std::size_t i, std::size_t j) const {
  check_chart(i);
  check_chart(j);
  const auto& t = transitions_[i * size() + j];
  return t ? &*t : nullptr;
}

ConvexRegion Atlas::intersection_region(std::size_t i, std::size_t j) const {
  if (i == j) {
    check_chart(i);
    return {};
  }
  const Transition* t = transition(i, j);
  return t ? t->region : empty_region(sigma_);
}

ShapeInfo Atlas::classify(std::size_t i, std::size_t j) const {
  return sigma_.classify(intersection_region(i, j));
}

ValidationReport Atlas::validate() const {
  ValidationReport report;
  auto pair = [&](std::size_t i, std::size_t j) { return "(" + name(i) + "," + name(j) + ")"; };
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Transition* t = i == j ? nullptr : transition(i, j);
      if (!t) continue;
      if (sigma_.is_empty(t->region)) report.violations.push_back("empty transition region " + pair(i, j));
      const Transition* back = transition(j, i);
      if (!back) {
        report.violations.push_back("missing reverse transition for " + pair(i, j));
        continue;
      }
      if (!sigma_.equal(back->region, sigma_.transport(t->region, t->map))) {
        report.violations.push_back("symmetry: region of " + pair(j, i) + " is not the image of " + pair(i, j));
      }
      if (!agree_on(sigma_, sigma_.compose(back->map, t->map), sigma_.identity(), t->region)) {
        report.violations.push_back("symmetry: map of " + pair(j, i) + " does not invert " + pair(i, j));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Transition* ij = i == j ? nullptr : transition(i, j);
      if (!ij) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const Transition* jk = (k == i || k == j) ? nullptr : transition(j, k);
        if (!jk) continue;
        // Points of chart i that reach chart k through chart j.
        ConvexRegion through =
            sigma_.intersect(ij->region, sigma_.transport(jk->region, sigma_.inverse(ij->map)));
        if (sigma_.is_empty(through)) continue;
        std::string triple = "(" + name(i) + "," + name(j) + "," + name(k) + ")";
        const Transition* ik = transition(i, k);
        if (!ik) {
          report.violations.push_back("cocycle " + triple + ": charts " + pair(i, k) +
                                      " share points but are not glued");
          continue;
        }
        if (!sigma_.contains(ik->region, through)) {
          report.violations.push_back("cocycle " + triple + ": shared points fall outside the region of " +
                                      pair(i, k));
        }
        if (!agree_on(sigma_, sigma_.compose(jk->map, ij->map), ik->map, through)) {
          report.violations.push_back("cocycle " + triple + ": composed map disagrees with " + pair(i, k));
        }
      }
    }
  }
  report.notes.push_back("A1 holds by representation: each chart stands for its whole W-orbit of charts");
  report.notes.push_back("A2 holds by representation: transition regions are finite intersections of closed half-apartments");
  return report;
}

std::optional<Point> Atlas::transport(const BuildingPoint& p, std::size_t j) const {
  check_chart(p.chart);
  check_chart(j);
  sigma_.check(p.point);
  if (p.chart == j) return p.point;
  const Transition* t = transition(p.chart, j);
  if (!t || !sigma_.contains(t->region, p.point)) return std::nullopt;
  return sigma_.apply(t->map, p.point);
}

std::optional<Sector> Atlas::transport(const BuildingSector& s, std::size_t j) const {
  check_chart(s.chart);
  check_chart(j);
  if (s.chart == j) return s.sector;
  const Transition* t = transition(s.chart, j);
  if (!t || !sigma_.contains(t->region, sigma_.region(s.sector))) return std::nullopt;
  return Sector{sigma_.apply(t->map, s.sector.base), t->map.linear * s.sector.direction};
}

std::optional<SectorGerm> Atlas::transport(const BuildingGerm& g, std::size_t j) const {
  check_chart(g.chart);
  check_chart(j);
  if (g.chart == j) return g.germ;
  const Transition* t = transition(g.chart, j);
  if (!t || !sigma_.contains_germ(t->region, g.germ)) return std::nullopt;
  return SectorGerm{{sigma_.apply(t->map, g.germ.base()), t->map.linear * g.germ.direction()}};
}

std::vector<std::size_t> Atlas::common_charts(const BuildingPoint& p, const BuildingPoint& q) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < size(); ++c) {
    if (transport(p, c) && transport(q, c)) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> Atlas::common_chart(const BuildingPoint& p, const BuildingPoint& q) const {
  for (std::size_t c = 0; c < size(); ++c) {
    if (transport(p, c) && transport(q, c)) return c;
  }
  return std::nullopt;
}

bool Atlas::same_point(const BuildingPoint& p, const BuildingPoint& q) const {
  auto moved = transport(p, q.chart);
  return moved && *moved == q.point;
}

Lambda Atlas::global_distance(const BuildingPoint& p, const BuildingPoint& q) const {
  auto charts = common_charts(p, q);
  if (charts.empty()) {
    throw AxiomFailure("no chart contains both " + name(p.chart) + ":" + to_string(p.point) + " and " +
                       name(q.chart) + ":" + to_string(q.point));
  }
  std::optional<Lambda> d;
  for (std::size_t c : charts) {
    Lambda here = sigma_.metric(*transport(p, c), *transport(q, c));
    if (d && *d != here) {
      throw TheoremViolation("distance differs between charts " + name(charts.front()) + " and " + name(c));
    }
    d = here;
  }
  return *d;
}

std::vector<BuildingPoint> Atlas::designated_points() const {
  std::vector<BuildingPoint> out;
  for (std::size_t c = 0; c < size(); ++c) {
    std::vector<Point> seen{sigma_.origin()};
    for (std::size_t j = 0; j < size(); ++j) {
      const Transition* t = c == j ? nullptr : transition(c, j);
      if (!t) continue;
      auto w = sigma_.witness(t->region);
      if (w && std::find(seen.begin(), seen.end(), *w) == seen.end()) seen.push_back(*w);
    }
    for (auto& p : seen) out.push_back({c, std::move(p)});
  }
  return out;
}

// ------------------------------------------------------------ InfinityComplex

InfinityComplex::InfinityComplex(const Atlas& atlas) : atlas_(atlas), order_(atlas.apartment().weyl().size()) {
  const Apartment& sigma = atlas.apartment();
  const WeylGroup& W = sigma.weyl();
  const std::size_t m = atlas.size();
  const std::size_t n = sigma.dimension();
  UnionFind chambers(m * order_);
  UnionFind panels(m * order_ * n);
  auto panel_node = [&](std::size_t c, std::uint32_t w, std::size_t i) {
    std::uint32_t other = W.times_generator(w, i);
    return (c * order_ + std::min(w, other)) * n + i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Transition* t = i == j ? nullptr : atlas.transition(i, j);
      if (!t || sigma.is_empty(t->region)) continue;
      for (const auto& w : W.elements()) {
        std::uint32_t image = (t->map.linear * w).id();
        if (sigma.recedes(t->region, w)) chambers.unite(i * order_ + w.id(), j * order_ + image);
        for (std::size_t k = 0; k < n; ++k) {
          if (sigma.recedes(t->region, w, k)) panels.unite(panel_node(i, w.id(), k), panel_node(j, image, k));
        }
      }
    }
  }
  chamber_of_ = densify(chambers, m * order_, chamber_count_);
  std::vector<std::size_t> canonical(m * order_ * n);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::uint32_t w = 0; w < order_; ++w) {
      for (std::size_t i = 0; i < n; ++i) canonical[(c * order_ + w) * n + i] = panel_node(c, w, i);
    }
  }
  std::size_t count = 0;
  auto dense = densify(panels, m * order_ * n, count);
  panel_of_.resize(canonical.size());
  for (std::size_t x = 0; x < canonical.size(); ++x) panel_of_[x] = dense[canonical[x]];
  panel_count_ = count;
}

std::size_t InfinityComplex::chamber(std::size_t chart, const WeylElement& w) const {
  return chamber_of_.at(chart * order_ + w.id());
}

std::size_t InfinityComplex::panel(std::size_t chart, const WeylElement& w, std::size_t i) const {
  return panel_of_.at((chart * order_ + w.id()) * atlas_.apartment().dimension() + i);
}

std::vector<std::size_t> InfinityComplex::apartment(std::size_t chart) const {
  std::set<std::size_t> out;
  for (std::size_t w = 0; w < order_; ++w) out.insert(chamber_of_.at(chart * order_ + w));
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::size_t>> InfinityComplex::apartments() const {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < atlas_.size(); ++c) out.insert(apartment(c));
  return {out.begin(), out.end()};
}

bool InfinityComplex::adjacent(std::size_t a, std::size_t b, std::size_t type) const {
  if (a == b) return false;
  const WeylGroup& W = atlas_.apartment().weyl();
  for (std::size_t c = 0; c < atlas_.size(); ++c) {
    for (const auto& w : W.elements()) {
      if (chamber(c, w) != a) continue;
      std::size_t p = panel(c, w, type);
      for (std::size_t d = 0; d < atlas_.size(); ++d) {
        for (const auto& v : W.elements()) {
          if (chamber(d, v) == b && panel(d, v, type) == p) return true;
        }
      }
    }
  }
  return false;
}

std::optional<WeylElement> InfinityComplex::distance(std::size_t a, std::size_t b) const {
  const WeylGroup& W = atlas_.apartment().weyl();
  for (std::size_t c = 0; c < atlas_.size(); ++c) {
    std::optional<WeylElement> wa, wb;
    for (const auto& w : W.elements()) {
      if (!wa && chamber(c, w) == a) wa = w;
      if (!wb && chamber(c, w) == b) wb = w;
    }
    if (wa && wb) return wa->inverse() * *wb;
  }
  return std::nullopt;
}

InfinityComplex::Report InfinityComplex::report() const {
  Report r;
  const WeylGroup& W = atlas_.apartment().weyl();
  const std::size_t n = atlas_.apartment().dimension();
  r.chambers = chamber_count_;
  auto sets = apartments();
  r.apartments = sets.size();
  std::vector<std::vector<std::size_t>> per_chart;
  for (std::size_t c = 0; c < atlas_.size(); ++c) {
    per_chart.push_back(apartment(c));
    if (per_chart.back().size() != order_) {
      r.full_apartments = false;
      r.problems.push_back("chart " + atlas_.name(c) + " sees " + std::to_string(per_chart.back().size()) +
                           " chambers, expected " + std::to_string(order_));
    }
    // Panel class -> chambers of this chart containing it.
    std::map<std::size_t, std::set<std::size_t>> around;
    for (const auto& w : W.elements()) {
      for (std::size_t i = 0; i < n; ++i) around[panel(c, w, i)].insert(chamber(c, w));
    }
    for (const auto& [p, cs] : around) {
      if (cs.size() != 2) {
        r.thin = false;
        r.problems.push_back("chart " + atlas_.name(c) + ": panel " + std::to_string(p) + " lies in " +
                             std::to_string(cs.size()) + " chambers");
      }
    }
  }
  if (sets.size() != atlas_.size()) {
    r.injective = false;
    for (std::size_t a = 0; a < atlas_.size(); ++a) {
      for (std::size_t b = a + 1; b < atlas_.size(); ++b) {
        if (per_chart[a] == per_chart[b]) {
          r.problems.push_back("charts " + atlas_.name(a) + " and " + atlas_.name(b) +
                               " have the same apartment at infinity");
        }
      }
    }
  }
  for (std::size_t a = 0; a < chamber_count_; ++a) {
    for (std::size_t b = a + 1; b < chamber_count_; ++b) {
      bool shared = std::any_of(per_chart.begin(), per_chart.end(), [&](const auto& s) {
        return std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b);
      });
      if (!shared) {
        r.connected = false;
        r.problems.push_back("chambers " + std::to_string(a) + " and " + std::to_string(b) +
                             " share no apartment");
      }
    }
  }
  return r;
}

std::string to_string(const InfinityComplex::Report& report) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "chambers=" << report.chambers << '\n'
      << "apartments=" << report.apartments << '\n'
      << "full_apartments=" << yes(report.full_apartments) << '\n'
      << "thin=" << yes(report.thin) << '\n'
      << "one_to_one=" << yes(report.injective) << '\n'
      << "co_apartmental=" << yes(report.connected) << '\n';
  for (const auto& p : report.problems) out << "problem " << p << '\n';
  return out.str();
}

}  // namespace lbk
