#include "lbk/axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "lbk/errors.hpp"

namespace lbk {

namespace {

std::string tuple(const Atlas& atlas, std::initializer_list<std::size_t> charts) {
  std::string out = "(";
  for (std::size_t c : charts) {
    if (out.size() > 1) out += ',';
    out += atlas.name(c);
  }
  return out + ")";
}

std::string sector_label(const Atlas& atlas, std::size_t chart, const Sector& s) {
  std::string word = word_string(s.direction);
  std::replace(word.begin(), word.end(), ' ', '.');
  return atlas.name(chart) + ":" + to_string(s.base) + "/" + word;
}

BuildingPoint random_building_point(const Atlas& atlas, std::mt19937_64& rng) {
  std::size_t chart = std::uniform_int_distribution<std::size_t>(0, atlas.size() - 1)(rng);
  return {chart, atlas.apartment().random_point(rng)};
}

std::mt19937_64 seeded(const CheckOptions& options, std::uint64_t salt) {
  std::seed_seq seq{options.seed, salt};
  return std::mt19937_64(seq);
}

ConvexRegion flip(const HalfApartment& h) { return ConvexRegion{{opposite(h)}}; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

void AxiomReport::record(const std::string& config, Verdict v, const std::string& detail) {
  ++configurations;
  std::string line = "AXIOM " + axiom + " " + config + " verdict=" + to_string(v);
  if (!detail.empty()) line += " " + detail;
  lines.push_back(line);
  if (v == Verdict::Fail) {
    verdict = Verdict::Fail;
    counterexamples.push_back(config + (detail.empty() ? "" : " " + detail));
  } else if (v == Verdict::Inconclusive && verdict == Verdict::Pass) {
    verdict = Verdict::Inconclusive;
  }
}

bool Budget::spend(std::size_t steps) {
  if (exhausted_ || limit_ - used_ < steps) {
    exhausted_ = true;
    return false;
  }
  used_ += steps;
  return true;
}

std::string to_string(const Atlas& atlas, const BuildingPoint& p) {
  return atlas.name(p.chart) + ":" + to_string(p.point);
}

// ------------------------------------------------------------------ A1 .. A4

AxiomReport check_A1(const Atlas& atlas) {
  AxiomReport r{"A1"};
  r.record("charts=" + std::to_string(atlas.size()), Verdict::Pass, "note=charts-are-W-orbits");
  return r;
}

AxiomReport check_A2(const Atlas& atlas) {
  AxiomReport r{"A2"};
  auto v = atlas.validate();
  for (const auto& problem : v.violations) {
    std::string detail = problem;
    std::replace(detail.begin(), detail.end(), ' ', '_');
    r.record("atlas", Verdict::Fail, "violation=" + detail);
  }
  if (v.valid()) r.record("transitions=closed-convex", Verdict::Pass, "note=validated");
  return r;
}

AxiomReport check_A3(const Atlas& atlas, const CheckOptions& options) {
  AxiomReport r{"A3"};
  auto points = atlas.designated_points();
  auto rng = seeded(options, 3);
  std::vector<std::pair<BuildingPoint, BuildingPoint>> pairs;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].chart != points[b].chart) pairs.emplace_back(points[a], points[b]);
    }
  }
  for (std::size_t s = 0; s < options.samples; ++s) {
    auto y = random_building_point(atlas, rng);
    auto z = random_building_point(atlas, rng);
    pairs.emplace_back(std::move(y), std::move(z));
  }
  std::size_t passed = 0;
  for (const auto& [y, z] : pairs) {
    auto c = atlas.common_chart(y, z);
    if (c) {
      ++passed;
      continue;
    }
    r.record("points=(" + to_string(atlas, y) + "," + to_string(atlas, z) + ")", Verdict::Fail,
             "reason=no-common-chart");
  }
  if (passed == pairs.size()) {
    r.record("pairs=" + std::to_string(pairs.size()), Verdict::Pass);
  }
  return r;
}

AxiomReport check_A4(const Atlas& atlas) {
  AxiomReport r{"A4"};
  const Apartment& sigma = atlas.apartment();
  const auto elements = sigma.weyl().elements();
  struct Entry {
    std::size_t chart;
    WeylElement direction;
    std::vector<bool> holds;  // charts containing a subsector
  };
  std::vector<Entry> sectors;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    for (const auto& w : elements) {
      Entry e{c, w, std::vector<bool>(atlas.size())};
      Sector s{sigma.origin(), w};
      for (std::size_t d = 0; d < atlas.size(); ++d) {
        e.holds[d] = d == c || sigma.subsector_in(s, atlas.intersection_region(c, d)).has_value();
      }
      sectors.push_back(std::move(e));
    }
  }
  // A subsector exists for any base once the direction recedes in the
  // overlap, so one base per direction decides every sector.
  for (std::size_t a = 0; a < sectors.size(); ++a) {
    for (std::size_t b = a + 1; b < sectors.size(); ++b) {
      const auto& s = sectors[a];
      const auto& t = sectors[b];
      std::string config = "sectors=(" + sector_label(atlas, s.chart, {sigma.origin(), s.direction}) + "," +
                           sector_label(atlas, t.chart, {sigma.origin(), t.direction}) + ")";
      std::optional<std::size_t> witness;
      for (std::size_t d = 0; d < atlas.size() && !witness; ++d) {
        if (s.holds[d] && t.holds[d]) witness = d;
      }
      if (witness) {
        r.record(config, Verdict::Pass, "witness=" + atlas.name(*witness));
      } else {
        r.record(config, Verdict::Fail, "reason=no-chart-holds-both-subsectors");
      }
    }
  }
  if (sectors.size() < 2) r.record("sectors=" + std::to_string(sectors.size()), Verdict::Pass);
  return r;
}

// ------------------------------------------------------------------ A5

Retraction::Retraction(const Atlas& atlas, BuildingGerm germ, std::size_t target)
    : atlas_(atlas), target_(target) {
  auto local = atlas.transport(germ, target);
  if (!local) throw MalformedInput("the germ does not lie in chart " + atlas.name(target));
  germ_ = {target, *local};
  const Apartment& sigma = atlas.apartment();
  for (std::size_t b = 0; b < atlas.size(); ++b) {
    if (b == target) {
      maps_.emplace_back(b, sigma.identity());
      continue;
    }
    const Transition* t = atlas.transition(target, b);
    if (t && sigma.contains_germ(t->region, germ_.germ)) maps_.emplace_back(b, atlas.transition(b, target)->map);
  }
}

Point Retraction::operator()(const BuildingPoint& y) const {
  const Apartment& sigma = atlas_.apartment();
  std::optional<Point> value;
  std::size_t first = 0;
  for (const auto& [b, map] : maps_) {
    auto q = atlas_.transport(y, b);
    if (!q) continue;
    Point image = sigma.apply(map, *q);
    if (value && *value != image) {
      throw TheoremViolation("retraction differs between charts " + atlas_.name(first) + " and " +
                             atlas_.name(b) + " at " + to_string(atlas_, y));
    }
    if (!value) first = b;
    value = std::move(image);
  }
  if (!value) throw TheoremViolation("no chart holds both " + to_string(atlas_, y) + " and the germ");
  return *value;
}

bool Retraction::co_chart(const BuildingPoint& y, const BuildingPoint& z) const {
  return std::any_of(maps_.begin(), maps_.end(), [&](const auto& entry) {
    return atlas_.transport(y, entry.first) && atlas_.transport(z, entry.first);
  });
}

bool Retraction::stabilizer_trivial() const {
  const WeylElement& dir = germ_.germ.direction();
  for (const auto& w : atlas_.apartment().weyl().elements()) {
    if (!w.is_identity() && w * dir == dir) return false;
  }
  return true;
}

bool Retraction::consistent() const {
  const Apartment& sigma = atlas_.apartment();
  for (const auto& [b1, m1] : maps_) {
    for (const auto& [b2, m2] : maps_) {
      const Transition* t = b1 == b2 ? nullptr : atlas_.transition(b1, b2);
      if (t && !agree_on(sigma, m1, sigma.compose(m2, t->map), t->region)) return false;
    }
  }
  return true;
}

AxiomReport check_A5(const Atlas& atlas, const CheckOptions& options) {
  AxiomReport r{"A5"};
  const Apartment& sigma = atlas.apartment();
  auto rng = seeded(options, 5);
  std::vector<BuildingGerm> candidates;
  for (const auto& p : atlas.designated_points()) {
    for (const auto& w : sigma.weyl().elements()) candidates.push_back({p.chart, {{p.point, w}}});
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(std::min(candidates.size(), options.targets));
  Budget budget(options.budget);
  for (const auto& germ : candidates) {
    std::string config = "target=" + sector_label(atlas, germ.chart, germ.germ.sector);
    Retraction rho(atlas, germ, germ.chart);
    if (!rho.stabilizer_trivial() || !rho.consistent()) {
      r.record(config, Verdict::Fail, "reason=germ-fixing-maps-not-unique");
      continue;
    }
    std::string failure;
    std::size_t isometric = 0;
    for (std::size_t s = 0; s < options.samples && failure.empty(); ++s) {
      if (!budget.spend()) break;
      auto y = random_building_point(atlas, rng);
      auto z = random_building_point(atlas, rng);
      if (s % 4 == 0) y.chart = germ.chart;
      std::string pair = "pair=(" + to_string(atlas, y) + "," + to_string(atlas, z) + ")";
      try {
        Point ry = rho(y), rz = rho(z);
        if (y.chart == germ.chart && ry != y.point) {
          failure = pair + " reason=not-identity-on-target";
          break;
        }
        Lambda before = atlas.global_distance(y, z);
        Lambda after = sigma.metric(ry, rz);
        if (after > before) {
          failure = pair + " reason=expands d=" + to_string(before) + " d_rho=" + to_string(after);
        } else if (rho.co_chart(y, z)) {
          ++isometric;
          if (after != before) failure = pair + " reason=not-isometric-on-co-chart";
        }
      } catch (const TheoremViolation&) {
        failure = pair + " reason=no-co-chart";
      } catch (const AxiomFailure&) {
        failure = pair + " reason=no-common-chart";
      }
    }
    if (failure.empty() && budget.exhausted()) {
      r.record(config, Verdict::Inconclusive, "reason=budget-exhausted");
    } else if (failure.empty()) {
      r.record(config, Verdict::Pass,
               "pairs=" + std::to_string(options.samples) + " isometric=" + std::to_string(isometric));
    } else {
      r.record(config, Verdict::Fail, failure);
    }
  }
  return r;
}

// ------------------------------------------------------------------ A6, EC

AxiomReport check_A6(const Atlas& atlas) {
  AxiomReport r{"A6"};
  const Apartment& sigma = atlas.apartment();
  const std::size_t m = atlas.size();
  auto half = [&](std::size_t a, std::size_t b) { return atlas.classify(a, b).shape == RegionShape::HalfApartment; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!half(i, j)) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!half(i, k) || !half(j, k)) continue;
        const Transition* ij = atlas.transition(i, j);
        ConvexRegion triple = sigma.intersect(
            sigma.intersect(ij->region, atlas.intersection_region(i, k)),
            sigma.transport(atlas.intersection_region(j, k), sigma.inverse(ij->map)));
        std::string config = "triple=" + tuple(atlas, {i, j, k});
        if (auto w = sigma.witness(triple)) {
          r.record(config, Verdict::Pass, "witness=" + to_string(atlas, BuildingPoint{i, *w}));
        } else {
          r.record(config, Verdict::Fail, "reason=empty-triple-intersection");
        }
      }
    }
  }
  if (r.configurations == 0) r.record("triples=0", Verdict::Pass, "note=vacuous");
  return r;
}

AxiomReport check_EC(const Atlas& atlas) {
  AxiomReport r{"EC"};
  const Apartment& sigma = atlas.apartment();
  const std::size_t m = atlas.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto hi = atlas.classify(i, j);
      if (hi.shape != RegionShape::HalfApartment) continue;
      auto hj = atlas.classify(j, i);
      // Closed complements of the shared half-apartment in both charts.
      ConvexRegion ci = flip(*hi.half);
      ConvexRegion cj = hj.half ? flip(*hj.half) : ConvexRegion{};
      std::optional<std::size_t> witness;
      for (std::size_t k = 0; k < m && !witness && hj.half; ++k) {
        if (k == i || k == j) continue;
        if (sigma.equal(atlas.intersection_region(i, k), ci) && sigma.equal(atlas.intersection_region(j, k), cj)) {
          witness = k;
        }
      }
      std::string config = "pair=" + tuple(atlas, {i, j});
      if (witness) {
        r.record(config, Verdict::Pass, "witness=" + atlas.name(*witness));
      } else {
        r.record(config, Verdict::Fail, "reason=no-apartment-on-complement");
      }
    }
  }
  if (r.configurations == 0) r.record("pairs=0", Verdict::Pass, "note=vacuous");
  return r;
}

// ------------------------------------------------------------------ SE

AxiomReport check_SE(const Atlas& atlas, const CheckOptions& options) {
  AxiomReport r{"SE"};
  const Apartment& sigma = atlas.apartment();
  const std::size_t m = atlas.size();
  const std::size_t n = sigma.dimension();
  auto rng = seeded(options, 7);
  Budget budget(options.budget);
  // Half-apartment overlaps of each chart, indexed by the other chart.
  std::vector<std::vector<std::optional<HalfApartment>>> halves(m, std::vector<std::optional<HalfApartment>>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a == j) continue;
      auto info = atlas.classify(a, j);
      if (info.shape == RegionShape::HalfApartment) halves[a][j] = info.half;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      const Transition* t = a == c ? nullptr : atlas.transition(c, a);
      if (!t) continue;
      const ConvexRegion& overlap = t->region;
      for (const auto& w : sigma.weyl().elements()) {
        for (std::size_t i = 0; i < n; ++i) {
          // S = x + w(S_hat) meets the overlap exactly in its type-i panel
          // iff x lies where (w a_i, .) attains its maximum over the overlap
          // and the panel cone recedes in it.
          if (!sigma.recedes(overlap, w, i)) continue;
          RootVector beta = w.apply(sigma.roots().simple_root(i));
          auto range = sigma.range(overlap, beta);
          if (!range || !range->upper || !range->upper_attained) continue;
          ConvexRegion face = sigma.intersect(
              overlap, ConvexRegion{{sigma.half_apartment(beta, Sense::Ge, *range->upper),
                                     sigma.half_apartment(beta, Sense::Le, *range->upper)}});
          std::vector<Point> bases;
          if (auto x = sigma.witness(face)) bases.push_back(*x);
          for (std::size_t s = 0; s < options.panel_samples; ++s) {
            if (auto x = sigma.sample(face, rng); x && std::find(bases.begin(), bases.end(), *x) == bases.end()) {
              bases.push_back(*x);
            }
          }
          for (const auto& x : bases) {
            if (!budget.spend()) {
              r.record("chart=" + atlas.name(a) + " remaining", Verdict::Inconclusive, "reason=budget-exhausted");
              return r;
            }
            Sector s{x, w};
            ConvexRegion wall = sigma.transport(sigma.panel_wall(s, i), t->map);
            ConvexRegion cone = sigma.region(s);
            std::optional<std::size_t> side_a, side_b;
            std::optional<HalfApartment> first;
            for (std::size_t j = 0; j < m; ++j) {
              if (!halves[a][j]) continue;
              const HalfApartment& h = *halves[a][j];
              if (!sigma.equal(sigma.wall_of(h), wall)) continue;
              if (j != c && !sigma.contains(atlas.intersection_region(c, j), cone)) continue;
              if (!first) {
                first = h;
                side_a = j;
              } else if (!side_b && sigma.equal(flip(*first), ConvexRegion{{h}})) {
                side_b = j;
              }
            }
            std::string config = "chart=" + atlas.name(a) + " sector=" + sector_label(atlas, c, s) +
                                 " panel=" + std::to_string(i + 1);
            if (side_a && side_b) {
              r.record(config, Verdict::Pass, "witness=" + tuple(atlas, {*side_a, *side_b}));
            } else {
              r.record(config, Verdict::Fail,
                       side_a ? "reason=one-side-missing found=" + atlas.name(*side_a) : "reason=both-sides-missing");
            }
          }
        }
      }
    }
  }
  if (r.configurations == 0) r.record("panels=0", Verdict::Pass, "note=vacuous");
  return r;
}

std::vector<AxiomReport> check_axioms(const Atlas& atlas, const std::set<std::string>& only,
                                      const CheckOptions& options) {
  auto want = [&](const char* id) { return only.empty() || only.count(id); };
  std::vector<AxiomReport> out;
  if (want("A1")) out.push_back(check_A1(atlas));
  if (want("A2")) out.push_back(check_A2(atlas));
  if (want("A3")) out.push_back(check_A3(atlas, options));
  if (want("A4")) out.push_back(check_A4(atlas));
  if (want("A5")) out.push_back(check_A5(atlas, options));
  if (want("A6")) out.push_back(check_A6(atlas));
  if (want("EC")) out.push_back(check_EC(atlas));
  if (want("SE")) out.push_back(check_SE(atlas, options));
  return out;
}

std::string format_reports(const std::vector<AxiomReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    for (const auto& line : r.lines) out << line << '\n';
  }
  out << "SUMMARY\n";
  for (const auto& r : reports) {
    out << "summary axiom=" << r.axiom << " verdict=" << to_string(r.verdict)
        << " configurations=" << r.configurations << " counterexamples=" << r.counterexamples.size() << '\n';
  }
  int code = exit_code(reports);
  out << "result=" << (code == 0 ? "pass" : code == 1 ? "fail" : "inconclusive") << '\n';
  return out.str();
}

int exit_code(const std::vector<AxiomReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return 1;
    inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
  }
  return inconclusive ? 3 : 0;
}

// ------------------------------------------------------------------ searches

Coapartment germ_coapartment(const Atlas& atlas, const InfinityComplex& infinity, const BuildingSector& s,
                             const BuildingSector& t, Budget& budget) {
  Coapartment out;
  const Apartment& sigma = atlas.apartment();
  const std::size_t chamber_s = infinity.chamber(s.chart, s.sector.direction);
  auto d = infinity.distance(chamber_s, infinity.chamber(t.chart, t.sector.direction));
  if (d) out.initial_length = d->length();
  BuildingGerm gs{s.chart, {s.sector}}, gt{t.chart, {t.sector}};
  auto settle = [&](std::size_t c, int stage) {
    if (!budget.spend()) return false;
    auto a = atlas.transport(gs, c);
    auto b = a ? atlas.transport(gt, c) : std::nullopt;
    if (!b) return false;
    out.chart = c;
    out.stage = stage;
    return true;
  };
  // Charts through both base points first, then everything else.
  auto through = atlas.common_charts({s.chart, s.sector.base}, {t.chart, t.sector.base});
  bool found = false;
  for (std::size_t c : through) {
    if ((found = settle(c, 1))) break;
  }
  for (std::size_t c = 0; c < atlas.size() && !found; ++c) {
    if (std::find(through.begin(), through.end(), c) != through.end()) continue;
    found = settle(c, 2);
  }
  if (!found) {
    out.budget_exhausted = budget.exhausted();
    return out;
  }
  // l(delta(S'_y, T_y)) for S' the sector at y parallel to S: S' lies in a
  // chart through y whose boundary holds the chamber of S.
  BuildingPoint y{t.chart, t.sector.base};
  for (std::size_t c = 0; c < atlas.size() && out.final_length < 0; ++c) {
    auto yc = atlas.transport(y, c);
    if (!yc) continue;
    for (const auto& w : sigma.weyl().elements()) {
      if (infinity.chamber(c, w) != chamber_s) continue;
      BuildingGerm parallel{c, {{*yc, w}}};
      for (std::size_t e = 0; e < atlas.size(); ++e) {
        if (!budget.spend()) {
          out.budget_exhausted = true;
          return out;
        }
        auto a = atlas.transport(parallel, e);
        auto b = a ? atlas.transport(gt, e) : std::nullopt;
        if (!b) continue;
        out.final_length = sigma.germ_distance(*a, *b).length();
        break;
      }
      break;
    }
  }
  return out;
}

std::optional<OppositeGerm> opposite_germ(const Atlas& atlas, const BuildingGerm& s, std::size_t chart_b,
                                          const Point& y) {
  const Apartment& sigma = atlas.apartment();
  std::optional<OppositeGerm> best;
  for (const auto& v : sigma.weyl().elements()) {
    BuildingSector candidate{chart_b, {y, v}};
    for (std::size_t c = 0; c < atlas.size(); ++c) {
      auto germ = atlas.transport(s, c);
      auto sector = germ ? atlas.transport(candidate, c) : std::nullopt;
      if (!sector) continue;
      WeylElement delta = germ->direction().inverse() * sector->direction;
      if (!best || delta.length() > best->delta.length()) {
        Sector parallel{germ->base(), sector->direction};
        best = OppositeGerm{candidate.sector, c, delta, sigma.in_sector(parallel, sector->base)};
      }
      break;
    }
  }
  return best;
}

bool covers(const Apartment& sigma, const std::vector<ConvexRegion>& regions, Budget& budget,
            std::optional<Point>* uncovered) {
  // Sigma minus X_1 minus ... is split into cases by the violated
  // constraint of each region; every case must be infeasible.
  std::vector<ConstraintSystem> systems;
  for (const auto& r : regions) systems.push_back(sigma.system(r));
  std::function<bool(const ConstraintSystem&, std::size_t)> rest = [&](const ConstraintSystem& u, std::size_t k) {
    if (!budget.spend()) return false;
    auto f = feasible(u);
    if (!f) return true;
    if (k == regions.size()) {
      if (uncovered) *uncovered = Point{std::move(f.witness)};
      return false;
    }
    ConstraintSystem meet = u;
    meet.append(systems[k]);
    if (!feasible(meet)) return rest(u, k + 1);
    for (const auto& c : systems[k].constraints()) {
      ConstraintSystem branch = u;
      auto coeffs = c.coefficients;
      for (auto& q : coeffs) q = -q;
      branch.add(std::move(coeffs), Relation::Gt, -c.bound);
      if (!rest(branch, k + 1)) return false;
    }
    return true;
  };
  return rest(ConstraintSystem(sigma.dimension(), sigma.lambda_rank()), 0);
}

FiniteCover finite_cover(const Atlas& atlas, const BuildingGerm& s, std::size_t chart_b, Budget& budget) {
  const Apartment& sigma = atlas.apartment();
  FiniteCover out;
  if (atlas.transport(s, chart_b)) {
    out.pieces.push_back({ConvexRegion{}, chart_b});
    out.complete = true;
    return out;
  }
  std::vector<CoverPiece> pieces;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    auto germ = atlas.transport(s, c);
    const Transition* t = germ ? atlas.transition(c, chart_b) : nullptr;
    if (!t) continue;
    for (const auto& w : sigma.weyl().elements()) {
      ConvexRegion piece = sigma.intersect(sigma.region(Sector{germ->base(), w}), t->region);
      if (sigma.is_empty(piece)) continue;
      pieces.push_back({sigma.transport(piece, t->map), c});
    }
  }
  // Drop pieces inside an earlier or larger one.
  std::vector<CoverPiece> kept;
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    bool inside = false;
    for (std::size_t b = 0; b < pieces.size() && !inside; ++b) {
      if (a == b || !sigma.contains(pieces[b].region, pieces[a].region)) continue;
      inside = b < a || !sigma.contains(pieces[a].region, pieces[b].region);
    }
    if (!inside) kept.push_back(pieces[a]);
  }
  auto regions_of = [](const std::vector<CoverPiece>& ps) {
    std::vector<ConvexRegion> rs;
    for (const auto& p : ps) rs.push_back(p.region);
    return rs;
  };
  out.complete = covers(sigma, regions_of(kept), budget, &out.uncovered);
  if (out.complete) {
    for (std::size_t k = kept.size(); k-- > 0;) {
      auto without = kept;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
      if (covers(sigma, regions_of(without), budget)) kept = std::move(without);
    }
  }
  out.budget_exhausted = budget.exhausted();
  if (out.budget_exhausted) out.complete = false;
  out.pieces = std::move(kept);
  return out;
}

// ------------------------------------------------------------------ suite

EquivalenceReport equivalence_suite(const Atlas& atlas, const CheckOptions& options) {
  EquivalenceReport out;
  out.reports = check_axioms(atlas, {}, options);
  auto verdict = [&](const std::string& id) {
    for (const auto& r : out.reports) {
      if (r.axiom == id) return r.verdict;
    }
    return Verdict::Inconclusive;
  };
  out.applicable = verdict("A1") == Verdict::Pass && verdict("A2") == Verdict::Pass &&
                   verdict("A3") == Verdict::Pass && verdict("A4") == Verdict::Pass;
  if (!out.applicable) return out;
  Verdict a6 = verdict("A6"), ec = verdict("EC"), se = verdict("SE"), a5 = verdict("A5");
  bool decided = a6 != Verdict::Inconclusive && ec != Verdict::Inconclusive && se != Verdict::Inconclusive;
  if (decided && a6 != ec) out.alarms.push_back("A6=" + to_string(a6) + " but EC=" + to_string(ec));
  if (decided && ec != se) out.alarms.push_back("EC=" + to_string(ec) + " but SE=" + to_string(se));
  if (se == Verdict::Pass && a5 == Verdict::Fail) out.alarms.push_back("SE=pass but A5=fail");
  return out;
}

std::string to_string(const EquivalenceReport& report) {
  std::string out = format_reports(report.reports);
  out += std::string("equivalence applicable=") + (report.applicable ? "yes" : "no") +
         " alarms=" + std::to_string(report.alarms.size()) + "\n";
  for (const auto& a : report.alarms) out += "alarm " + a + "\n";
  return out;
}

}  // namespace lbk
