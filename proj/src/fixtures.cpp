#include "lbk/fixtures.hpp"

#include <utility>
#include <vector>

#include "lbk/errors.hpp"

namespace lbk {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> end_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// +1 when `end` is the larger member of the pair; the tree and the fan use
// opposite orientations for it.
int side(const Pair& p, std::size_t end) { return end == p.second ? 1 : -1; }

// Glues pair charts: along the shared end's half-apartment of the first
// simple root, or along its wall through the origin when the pairs are
// disjoint. `sign` flips which side the larger end occupies.
Atlas glue_pairs(std::shared_ptr<const RootSystem> roots, std::size_t k, std::size_t n, int sign) {
  auto pairs = end_pairs(n);
  std::vector<std::string> names;
  for (const auto& [i, j] : pairs) names.push_back(pair_name(i, j, n));
  Atlas atlas(std::move(roots), k, std::move(names));
  const Apartment& sigma = atlas.apartment();
  Lambda zero(k);
  RootVector a1 = sigma.roots().simple_root(0);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const Pair& p = pairs[a];
      const Pair& q = pairs[b];
      std::size_t shared = 0;
      for (std::size_t e : {p.first, p.second}) {
        if (e == q.first || e == q.second) shared = e;
      }
      if (shared == 0) {
        atlas.glue(a, b, sigma.wall(0, zero), sigma.identity());
        continue;
      }
      int sp = sign * side(p, shared), sq = sign * side(q, shared);
      ConvexRegion ray{{sigma.half_apartment(a1, sp > 0 ? Sense::Ge : Sense::Le, zero)}};
      AffineIsometry map = sp == sq ? sigma.identity() : sigma.linear(sigma.weyl().generator(0));
      atlas.glue(a, b, ray, map);
    }
  }
  return atlas;
}

}  // namespace

std::string pair_name(std::size_t i, std::size_t j, std::size_t ends) {
  if (ends < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "_" + std::to_string(j);
}

Atlas single_apartment(std::string_view type, std::size_t lambda_rank) {
  return Atlas(RootSystem::of_type(type), lambda_rank, 1);
}

Atlas lambda_tree(std::size_t ends, std::size_t lambda_rank) {
  if (ends < 2) throw MalformedInput("a tree fixture needs at least two ends");
  return glue_pairs(RootSystem::of_type("A1"), lambda_rank, ends, 1);
}

Atlas fan(std::size_t leaves, std::string_view type, std::size_t lambda_rank) {
  if (leaves < 2) throw MalformedInput("a fan fixture needs at least two leaves");
  auto roots = RootSystem::of_type(type);
  if (roots->rank() != 2) throw MalformedInput("fan fixtures need a rank-two root system");
  return glue_pairs(std::move(roots), lambda_rank, leaves, -1);
}

Atlas pruned_fan(std::string_view type, std::size_t lambda_rank) {
  Atlas full = fan(3, type, lambda_rank);
  // Charts 12 and 13 only.
  Atlas atlas(full.apartment().root_system(), lambda_rank, {full.name(0), full.name(1)});
  atlas.set_transition(0, 1, *full.transition(0, 1));
  atlas.set_transition(1, 0, *full.transition(1, 0));
  return atlas;
}

Atlas broken_pair(std::size_t lambda_rank) {
  Atlas atlas(RootSystem::of_type("A1"), lambda_rank, 2);
  const Apartment& sigma = atlas.apartment();
  atlas.glue(0, 1, ConvexRegion{{{0, Sense::Ge, Lambda(lambda_rank)}}}, sigma.identity());
  return atlas;
}

Atlas shifted_rays(std::size_t lambda_rank) {
  Atlas atlas(RootSystem::of_type("A1"), lambda_rank, 3);
  const Apartment& sigma = atlas.apartment();
  Lambda zero(lambda_rank);
  // (a1, v) = 2v, so v <= -1 reads (a1, v) <= -2.
  Lambda minus_two = Lambda::scalar(lambda_rank, -2);
  auto flip = sigma.linear(sigma.weyl().generator(0));
  atlas.glue(0, 1, ConvexRegion{{{0, Sense::Ge, zero}}}, sigma.identity());
  atlas.glue(0, 2, ConvexRegion{{{0, Sense::Le, minus_two}}}, flip);
  atlas.glue(1, 2, ConvexRegion{{{0, Sense::Le, minus_two}}}, sigma.identity());
  return atlas;
}

}  // namespace lbk
