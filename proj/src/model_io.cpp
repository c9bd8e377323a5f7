#include "lbk/model_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lbk/errors.hpp"

namespace lbk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(std::string_view s, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw MalformedInput(std::string("expected a ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::vector<int>> parse_cartan(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
    throw MalformedInput("cartan matrix must look like [[2,-1],[-1,2]]");
  }
  std::vector<std::vector<int>> rows;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] != '[') throw MalformedInput("cartan matrix: expected '['");
    auto close = s.find(']', pos);
    std::vector<int> row;
    std::string_view body(s.data() + pos + 1, close - pos - 1);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto entry = body.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(entry.data(), entry.data() + entry.size(), v);
      if (ec != std::errc() || ptr != entry.data() + entry.size()) {
        throw MalformedInput("cartan matrix: bad entry '" + std::string(entry) + "'");
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
    pos = close + 1;
  }
  return rows;
}

std::string format_cartan(const RootSystem& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      if (j) out += ',';
      out += std::to_string(rs.cartan(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::vector<HalfApartment> parse_constraints(const Apartment& sigma, std::string_view text) {
  std::string cleaned(text);
  for (char& ch : cleaned) {
    if (ch == ',') ch = ' ';
  }
  auto t = tokens(cleaned);
  if (t.size() % 3 != 0) throw MalformedInput("constraints come as <ge|le|eq> <root> <lambda> triples");
  std::vector<HalfApartment> out;
  for (std::size_t k = 0; k < t.size(); k += 3) {
    RootVector root = parse_root(t[k + 1], sigma.dimension());
    Lambda bound = parse_lambda(t[k + 2], sigma.lambda_rank());
    const std::string& rel = t[k];
    if (rel == "ge" || rel == "eq") out.push_back(sigma.half_apartment(root, Sense::Ge, bound));
    if (rel == "le" || rel == "eq") out.push_back(sigma.half_apartment(root, Sense::Le, bound));
    if (rel != "ge" && rel != "le" && rel != "eq") throw MalformedInput("unknown relation '" + rel + "'");
  }
  return out;
}

std::string format_constraints(const Apartment& sigma, const ConvexRegion& r) {
  std::string out;
  for (const auto& h : r.constraints) {
    if (!out.empty()) out += ' ';
    out += h.sense == Sense::Ge ? "ge " : "le ";
    out += root_string(sigma.roots().positive_roots()[h.root]) + ' ' + to_string(h.bound);
  }
  return out;
}

}  // namespace

RootVector parse_root(std::string_view text, std::size_t rank) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw MalformedInput("empty root expression");
  RootVector root(rank, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw MalformedInput("bad root expression '" + s + "'");
    }
    int coeff = 1;
    std::size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits > pos) {
      std::from_chars(s.data() + pos, s.data() + digits, coeff);
      pos = digits;
    }
    if (pos >= s.size() || s[pos] != 'a') throw MalformedInput("bad root expression '" + s + "'");
    ++pos;
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) throw MalformedInput("bad root expression '" + s + "'");
    std::size_t index = 0;
    std::from_chars(s.data() + pos, s.data() + end, index);
    if (index == 0 || index > rank) throw MalformedInput("root index out of range in '" + s + "'");
    root[index - 1] += sign * coeff;
    pos = end;
  }
  return root;
}

AffineIsometry parse_isometry(const Apartment& sigma, std::string_view text) {
  AffineIsometry g = sigma.identity();
  std::string_view rest = text;
  while (!trim(rest).empty()) {
    auto semi = rest.find(';');
    std::string_view part = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (part.empty()) continue;
    auto t = tokens(part);
    if (t[0] == "word") {
      std::vector<int> word;
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (t[k] == "e") continue;
        if (t[k].size() < 2 || t[k][0] != 's') throw MalformedInput("bad generator '" + t[k] + "'");
        std::size_t index = parse_count(std::string_view(t[k]).substr(1), "generator index");
        if (index == 0 || index > sigma.dimension()) throw MalformedInput("generator out of range: " + t[k]);
        word.push_back(static_cast<int>(index - 1));
      }
      g.linear = sigma.weyl().from_word(word);
    } else if (t[0] == "t") {
      g.translation = parse_point(trim(part.substr(1)), sigma.dimension(), sigma.lambda_rank());
    } else {
      throw MalformedInput("isometry parts are 'word ...' and 't (...)', got '" + std::string(part) + "'");
    }
  }
  return g;
}

std::string format_isometry(const AffineIsometry& g) {
  std::string out = "word";
  for (int k : g.linear.word()) out += " s" + std::to_string(k + 1);
  return out + " ; t " + to_string(g.translation);
}

Atlas parse_model(std::string_view text) {
  std::size_t lambda = 0, charts = 0;
  std::shared_ptr<const RootSystem> roots;
  struct Pending {
    std::size_t line;
    std::vector<std::string> words;
    std::string body;
  };
  std::vector<Pending> later;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto hash = raw.find('#');
    std::string_view line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    try {
      auto t = tokens(line);
      const std::string& key = t[0];
      if (key == "lambda") {
        if (t.size() != 2) throw MalformedInput("usage: lambda <rank>");
        lambda = parse_count(t[1], "lambda rank");
        if (lambda == 0) throw MalformedInput("lambda rank must be positive");
      } else if (key == "roots") {
        if (t.size() != 2) throw MalformedInput("usage: roots <type>");
        roots = RootSystem::of_type(t[1]);
      } else if (key == "cartan") {
        roots = RootSystem::from_cartan(parse_cartan(line.substr(6)));
      } else if (key == "charts") {
        if (t.size() != 2) throw MalformedInput("usage: charts <count>");
        charts = parse_count(t[1], "chart count");
      } else if (key == "name" || key == "glue") {
        later.push_back({line_no, t, std::string(line)});
      } else {
        throw MalformedInput("unknown directive '" + key + "'");
      }
    } catch (const MalformedInput& e) {
      throw MalformedInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (lambda == 0) throw MalformedInput("missing 'lambda' directive");
  if (!roots) throw MalformedInput("missing 'roots' or 'cartan' directive");
  if (charts == 0) throw MalformedInput("missing 'charts' directive");
  Atlas atlas(roots, lambda, charts);
  const Apartment& sigma = atlas.apartment();
  auto chart_index = [&](const std::string& s) {
    std::size_t c = parse_count(s, "chart index");
    if (c == 0 || c > charts) throw MalformedInput("chart index " + s + " out of range");
    return c - 1;
  };
  for (const auto& p : later) {
    try {
      if (p.words[0] == "name") {
        if (p.words.size() != 3) throw MalformedInput("usage: name <chart> <label>");
        atlas.set_name(chart_index(p.words[1]), p.words[2]);
        continue;
      }
      std::string_view body = p.body;
      auto colon = body.find(':');
      if (colon == std::string_view::npos) throw MalformedInput("glue line needs ':'");
      auto head = tokens(body.substr(4, colon - 4));
      if (head.size() != 2) throw MalformedInput("usage: glue <i> <j> : constraints ; word ... ; t (...)");
      std::size_t i = chart_index(head[0]), j = chart_index(head[1]);
      std::string_view rest = body.substr(colon + 1);
      auto semi = rest.find(';');
      ConvexRegion region{parse_constraints(sigma, rest.substr(0, semi))};
      AffineIsometry map = semi == std::string_view::npos ? sigma.identity()
                                                           : parse_isometry(sigma, rest.substr(semi + 1));
      if (atlas.transition(i, j)) throw MalformedInput("charts " + head[0] + " " + head[1] + " glued twice");
      atlas.set_transition(i, j, {std::move(region), map});
    } catch (const MalformedInput& e) {
      throw MalformedInput("line " + std::to_string(p.line) + ": " + e.what());
    }
  }
  atlas.complete();
  return atlas;
}

Atlas load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read model file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_model(buffer.str());
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

std::string format_model(const Atlas& atlas) {
  const Apartment& sigma = atlas.apartment();
  std::ostringstream out;
  out << "lambda " << sigma.lambda_rank() << '\n';
  if (sigma.roots().name() == "cartan") {
    out << "cartan " << format_cartan(sigma.roots()) << '\n';
  } else {
    out << "roots " << sigma.roots().name() << '\n';
  }
  out << "charts " << atlas.size() << '\n';
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    if (atlas.name(c) != std::to_string(c + 1)) out << "name " << c + 1 << ' ' << atlas.name(c) << '\n';
  }
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    for (std::size_t j = 0; j < atlas.size(); ++j) {
      const Transition* t = i == j ? nullptr : atlas.transition(i, j);
      if (!t) continue;
      if (i > j) {
        // Skip reverse transitions that parsing would derive anyway.
        const Transition* f = atlas.transition(j, i);
        ConvexRegion derived = sigma.transport(f->region, f->map);
        AffineIsometry inv = sigma.inverse(f->map);
        if (derived.constraints == t->region.constraints && inv.linear == t->map.linear &&
            inv.translation == t->map.translation) {
          continue;
        }
      }
      out << "glue " << i + 1 << ' ' << j + 1 << " : " << format_constraints(sigma, t->region) << " ; "
          << format_isometry(t->map) << '\n';
    }
  }
  return out.str();
}

}  // namespace lbk
