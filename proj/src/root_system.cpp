#include "lbk/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>

#include "lbk/errors.hpp"

namespace lbk {

// ---------------------------------------------------------------- WeylElement

const IntMatrix& WeylElement::matrix() const { return group_->matrix(id_); }
const std::vector<int>& WeylElement::word() const { return group_->word(id_); }
int WeylElement::length() const { return group_->length(id_); }

WeylElement WeylElement::inverse() const { return {group_, group_->inverse(id_)}; }

RootVector WeylElement::apply(const RootVector& root) const {
  const auto& m = matrix();
  const std::size_t n = group_->rank();
  if (root.size() != n) throw MalformedInput("root length does not match Weyl group rank");
  RootVector out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) out[k] += m[k * n + j] * root[j];
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.group_ != b.group_ || a.group_ == nullptr) {
    throw MalformedInput("Weyl elements belong to different root systems");
  }
  return {a.group_, a.group_->multiply(a.id_, b.id_)};
}

std::string word_string(const WeylElement& w) {
  if (w.word().empty()) return "e";
  std::string out;
  for (int g : w.word()) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(g + 1);
  }
  return out;
}

// ------------------------------------------------------------------ WeylGroup

WeylGroup::WeylGroup(std::size_t rank, const std::vector<int>& cartan, std::size_t cap)
    : rank_(rank) {
  const std::size_t n = rank;
  std::vector<IntMatrix> gens(n, IntMatrix(n * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) gens[i][k * n + k] = 1;
    for (std::size_t j = 0; j < n; ++j) gens[i][i * n + j] -= cartan[i * n + j];
  }

  IntMatrix id(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) id[k * n + k] = 1;
  matrices_.push_back(id);
  words_.push_back({});
  index_.emplace(id, 0);

  for (std::size_t cur = 0; cur < matrices_.size(); ++cur) {
    std::vector<std::uint32_t> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix m = product(matrices_[cur], gens[i]);
      auto [it, fresh] = index_.try_emplace(m, static_cast<std::uint32_t>(matrices_.size()));
      if (fresh) {
        if (matrices_.size() >= cap) {
          throw MalformedInput("Weyl group exceeds the enumeration cap of " + std::to_string(cap));
        }
        auto w = words_[cur];
        w.push_back(static_cast<int>(i));
        matrices_.push_back(std::move(m));
        words_.push_back(std::move(w));
      }
      row[i] = it->second;
    }
    right_gen_.push_back(std::move(row));
  }

  inverses_.resize(size());
  for (std::uint32_t a = 0; a < size(); ++a) {
    std::uint32_t acc = 0;
    for (auto it = words_[a].rbegin(); it != words_[a].rend(); ++it) acc = right_gen_[acc][*it];
    inverses_[a] = acc;
  }
  longest_ = static_cast<std::uint32_t>(size() - 1);
}

IntMatrix WeylGroup::product(const IntMatrix& a, const IntMatrix& b) const {
  const std::size_t n = rank_;
  IntMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
    }
  }
  return out;
}

WeylElement WeylGroup::generator(std::size_t i) const {
  if (i >= rank_) throw MalformedInput("generator index " + std::to_string(i + 1) + " out of range");
  return {this, right_gen_[0][i]};
}

WeylElement WeylGroup::element(std::size_t id) const {
  if (id >= size()) throw MalformedInput("Weyl element id out of range");
  return {this, static_cast<std::uint32_t>(id)};
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.emplace_back(this, i);
  return out;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  std::uint32_t acc = 0;
  for (int g : word) {
    if (g < 0 || static_cast<std::size_t>(g) >= rank_) {
      throw MalformedInput("generator index " + std::to_string(g + 1) + " out of range");
    }
    acc = right_gen_[acc][g];
  }
  return {this, acc};
}

std::optional<WeylElement> WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return WeylElement(this, it->second);
}

std::uint32_t WeylGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  for (int g : words_[b]) a = right_gen_[a][g];
  return a;
}

// ----------------------------------------------------------------- RootSystem

namespace {

std::vector<std::vector<int>> cartan_of_type(char family, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  switch (family) {
    case 'A': break;
    case 'B': a[n - 1][n - 2] = -2; break;  // alpha_n short
    case 'C': a[n - 2][n - 1] = -2; break;  // alpha_n long
    case 'G': a[0][1] = -3; break;          // alpha_1 short
    default: break;
  }
  return a;
}

// Gauss-Jordan inverse of a nonsingular rational matrix (row-major).
std::vector<Rational> invert(std::vector<Rational> m, std::size_t n) {
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv * n + col]) == 0) ++piv;
    if (piv == n) throw MalformedInput("Cartan matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    }
    Rational p = m[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r * n + col]) == 0) continue;
      Rational f = m[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r * n + j] -= f * m[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::of_type(std::string_view type, std::size_t cap) {
  if (type.size() < 2) throw MalformedInput("unknown root system type '" + std::string(type) + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int n = 0;
  auto [ptr, ec] = std::from_chars(type.data() + 1, type.data() + type.size(), n);
  if (ec != std::errc() || ptr != type.data() + type.size()) {
    throw MalformedInput("unknown root system type '" + std::string(type) + "'");
  }
  bool ok = (family == 'A' && n >= 1) || ((family == 'B' || family == 'C') && n >= 2) ||
            (family == 'G' && n == 2);
  if (!ok || n > 16) throw MalformedInput("unsupported root system type '" + std::string(type) + "'");
  auto a = cartan_of_type(family, n);
  std::vector<int> flat;
  for (auto& row : a) flat.insert(flat.end(), row.begin(), row.end());
  std::string name(1, family);
  name += std::to_string(n);
  return std::shared_ptr<const RootSystem>(new RootSystem(name, n, std::move(flat), cap));
}

std::shared_ptr<const RootSystem> RootSystem::from_cartan(std::vector<std::vector<int>> cartan,
                                                          std::size_t cap) {
  const std::size_t n = cartan.size();
  if (n == 0) throw MalformedInput("empty Cartan matrix");
  std::vector<int> flat;
  for (auto& row : cartan) {
    if (row.size() != n) throw MalformedInput("Cartan matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::shared_ptr<const RootSystem>(new RootSystem("cartan", n, std::move(flat), cap));
}

RootSystem::RootSystem(std::string name, std::size_t rank, std::vector<int> cartan, std::size_t cap)
    : name_(std::move(name)), rank_(rank), cartan_(std::move(cartan)) {
  const std::size_t n = rank_;
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i * n + i] != 2) throw MalformedInput("Cartan matrix needs a_ii = 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_[i * n + j] > 0) throw MalformedInput("Cartan matrix needs a_ij <= 0 off the diagonal");
      if ((cartan_[i * n + j] == 0) != (cartan_[j * n + i] == 0)) {
        throw MalformedInput("Cartan matrix needs a_ij = 0 iff a_ji = 0");
      }
    }
  }

  // Symmetrizer: d_i a_ij = d_j a_ji, propagated along the Dynkin graph.
  symmetrizer_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    symmetrizer_[start] = 1;
    seen[start] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      std::size_t i = component[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[j] || cartan_[i * n + j] == 0) continue;
        symmetrizer_[j] = symmetrizer_[i] * cartan_[i * n + j] / cartan_[j * n + i];
        seen[j] = true;
        component.push_back(j);
      }
    }
    Rational lo = symmetrizer_[component.front()];
    for (auto i : component) lo = std::min(lo, symmetrizer_[i]);
    for (auto i : component) symmetrizer_[i] /= lo;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetrizer_[i] * cartan_[i * n + j] != symmetrizer_[j] * cartan_[j * n + i]) {
        throw MalformedInput("Cartan matrix is not symmetrizable");
      }
    }
  }

  // Positive roots by reflection closure.
  const std::size_t bound = 10 * n * n;
  for (std::size_t i = 0; i < n; ++i) {
    positive_.push_back(simple_root(i));
    root_index_.emplace(positive_.back(), i);
  }
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      RootVector r = reflect(i, positive_[k]);
      if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
      if (root_index_.try_emplace(r, positive_.size()).second) {
        if (positive_.size() >= bound) {
          throw MalformedInput("Cartan matrix is not of finite type (root closure exceeds bound)");
        }
        positive_.push_back(std::move(r));
      }
    }
  }
  // Height, then lexicographic: a stable presentation order.
  std::vector<RootVector> sorted = positive_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const RootVector& a, const RootVector& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  positive_ = std::move(sorted);
  root_index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) root_index_.emplace(positive_[k], k);

  pairing_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairing_[i * n + j] = symmetrizer_[i] * cartan_[i * n + j];
  }
  auto inv = invert(pairing_, n);
  rays_.assign(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) rays_[j][k] = inv[k * n + j];
  }

  weyl_ = std::make_unique<WeylGroup>(n, cartan_, cap);
}

std::optional<SignedRoot> RootSystem::find_root(const RootVector& root) const {
  if (auto it = root_index_.find(root); it != root_index_.end()) return SignedRoot{it->second, false};
  RootVector neg(root.size());
  std::transform(root.begin(), root.end(), neg.begin(), [](int c) { return -c; });
  if (auto it = root_index_.find(neg); it != root_index_.end()) return SignedRoot{it->second, true};
  return std::nullopt;
}

RootVector RootSystem::reflect(std::size_t i, const RootVector& root) const {
  if (i >= rank_) throw MalformedInput("reflection index " + std::to_string(i + 1) + " out of range");
  RootVector out = root;
  int shift = 0;
  for (std::size_t j = 0; j < rank_; ++j) shift += cartan_[i * rank_ + j] * root[j];
  out[i] -= shift;
  return out;
}

RootVector RootSystem::simple_root(std::size_t i) const {
  RootVector r(rank_, 0);
  r.at(i) = 1;
  return r;
}

std::vector<Rational> RootSystem::form(const RootVector& root) const {
  if (!find_root(root)) throw MalformedInput(root_string(root) + " is not a root");
  std::vector<Rational> row(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (root[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) row[j] += root[i] * pairing(i, j);
  }
  return row;
}

std::string root_string(const RootVector& root) {
  std::string out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    int c = root[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lbk
