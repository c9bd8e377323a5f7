#include "lbk/lambda.hpp"

#include <cctype>
#include <ostream>

#include "lbk/errors.hpp"

namespace lbk {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw MalformedInput("empty rational literal");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-')) {
      throw MalformedInput("bad rational literal '" + std::string(text) + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw MalformedInput("bad rational literal '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw MalformedInput("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Lambda Lambda::unit(std::size_t rank) {
  Lambda out(rank);
  if (rank > 0) out.parts_[0] = 1;
  return out;
}

Lambda Lambda::scalar(std::size_t rank, const Rational& q) {
  Lambda out(rank);
  if (rank > 0) out.parts_[0] = q;
  return out;
}

bool Lambda::is_zero() const {
  for (const auto& p : parts_) {
    if (sgn(p) != 0) return false;
  }
  return true;
}

int Lambda::sign() const {
  for (const auto& p : parts_) {
    if (int s = sgn(p); s != 0) return s;
  }
  return 0;
}

void Lambda::require_same_rank(const Lambda& other) const {
  if (rank() != other.rank()) {
    throw MalformedInput("lambda rank mismatch: " + std::to_string(rank()) + " vs " +
                         std::to_string(other.rank()));
  }
}

Lambda& Lambda::operator+=(const Lambda& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += other.parts_[i];
  return *this;
}

Lambda& Lambda::operator-=(const Lambda& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= other.parts_[i];
  return *this;
}

Lambda& Lambda::operator*=(const Rational& q) {
  for (auto& p : parts_) p *= q;
  return *this;
}

Lambda& Lambda::operator/=(const Rational& q) {
  if (sgn(q) == 0) throw MalformedInput("division of lambda value by zero");
  for (auto& p : parts_) p /= q;
  return *this;
}

Lambda Lambda::operator-() const {
  Lambda out = *this;
  for (auto& p : out.parts_) p = -p;
  return out;
}

std::strong_ordering operator<=>(const Lambda& a, const Lambda& b) {
  a.require_same_rank(b);
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    int c = cmp(a.parts_[i], b.parts_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Lambda& a, const Lambda& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering compare(const Lambda& a, const Lambda& b) { return a <=> b; }

Lambda abs(const Lambda& a) { return a.sign() < 0 ? -a : a; }

const Lambda& min(const Lambda& a, const Lambda& b) { return b < a ? b : a; }
const Lambda& max(const Lambda& a, const Lambda& b) { return a < b ? b : a; }

std::string to_string(const Lambda& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) out += '|';
    out += to_string(a[i]);
  }
  return out;
}

Lambda parse_lambda(std::string_view text, std::size_t rank) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    parts.push_back(parse_rational(text.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (parts.size() > rank) {
    throw MalformedInput("lambda literal '" + std::string(text) + "' has more than " +
                         std::to_string(rank) + " components");
  }
  parts.resize(rank);
  return Lambda(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Lambda& a) { return os << to_string(a); }

}  // namespace lbk
