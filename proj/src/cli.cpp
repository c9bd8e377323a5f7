#include "lbk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lbk/axioms.hpp"
#include "lbk/errors.hpp"
#include "lbk/fixtures.hpp"
#include "lbk/model_io.hpp"

namespace lbk {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t budget_from_env() {
  const char* raw = std::getenv("LBK_BUDGET");
  if (!raw || !*raw) return CheckOptions{}.budget;
  std::string text(trim(raw));
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw MalformedInput("LBK_BUDGET must be a nonnegative integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw MalformedInput("LBK_BUDGET is out of range");
  }
}

std::set<std::string> parse_only(const std::string& list) {
  static const std::set<std::string> known{"A1", "A2", "A3", "A4", "A5", "A6", "EC", "SE"};
  std::set<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string id(trim(item));
    for (auto& c : id) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!known.count(id)) throw MalformedInput("unknown axiom '" + id + "'");
    out.insert(id);
  }
  if (out.empty()) throw MalformedInput("--only needs at least one axiom");
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw MalformedInput("cannot write " + path);
  file << text;
}

std::size_t require_chart(const Atlas& atlas, std::string_view name) {
  auto c = atlas.find_chart(name);
  if (!c) throw MalformedInput("unknown chart '" + std::string(name) + "'");
  return *c;
}

std::string germ_word(const WeylElement& w) {
  std::string word = word_string(w);
  std::replace(word.begin(), word.end(), ' ', '.');
  return word;
}

}  // namespace

std::string short_string(const Lambda& a) {
  std::size_t keep = a.rank();
  while (keep > 1 && a[keep - 1] == 0) --keep;
  std::string out;
  for (std::size_t i = 0; i < keep; ++i) {
    if (i) out += '|';
    out += to_string(a[i]);
  }
  return out;
}

BuildingPoint parse_building_point(const Atlas& atlas, std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, 6) == "chart:") s.remove_prefix(6);
  auto open = s.find('(');
  if (open == std::string_view::npos) throw MalformedInput("point needs a chart and a literal: '" + std::string(text) + "'");
  std::string_view name = trim(s.substr(0, open));
  if (!name.empty() && name.back() == ':') name = trim(name.substr(0, name.size() - 1));
  if (name.empty()) throw MalformedInput("point is missing its chart: '" + std::string(text) + "'");
  const Apartment& sigma = atlas.apartment();
  return {require_chart(atlas, name), parse_point(s.substr(open), sigma.dimension(), sigma.lambda_rank())};
}

BuildingSector parse_building_sector(const Atlas& atlas, std::string_view text) {
  auto slash = text.rfind('/');
  if (slash == std::string_view::npos) throw MalformedInput("sector needs '/ word': '" + std::string(text) + "'");
  BuildingPoint base = parse_building_point(atlas, text.substr(0, slash));
  std::string word_text(trim(text.substr(slash + 1)));
  std::replace(word_text.begin(), word_text.end(), '.', ' ');
  const WeylGroup& group = atlas.apartment().weyl();
  std::vector<int> word;
  std::stringstream in(word_text);
  std::string letter;
  while (in >> letter) {
    if (letter == "e") continue;
    if (letter.size() < 2 || letter[0] != 's') throw MalformedInput("bad generator '" + letter + "'");
    std::size_t index = 0;
    for (std::size_t i = 1; i < letter.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(letter[i]))) throw MalformedInput("bad generator '" + letter + "'");
      index = index * 10 + static_cast<std::size_t>(letter[i] - '0');
    }
    if (index == 0 || index > group.rank()) throw MalformedInput("generator '" + letter + "' out of range");
    word.push_back(static_cast<int>(index - 1));
  }
  return {base.chart, {base.point, group.from_word(word)}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine Lambda-building models: validation, axiom checks, retractions"};
  app.name("lbk");
  app.require_subcommand(1);

  std::string model;
  std::string only;
  std::string output;
  std::size_t samples = 200;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Check transition symmetry and cocycle conditions");
  validate->add_option("model", model, "Model file")->required();

  auto* axioms = app.add_subcommand("axioms", "Decide A1-A6, EC and SE");
  axioms->add_option("model", model, "Model file")->required();
  axioms->add_option("--only", only, "Comma-separated subset, e.g. A6,EC,SE");
  axioms->add_option("--samples", samples, "Sampled configurations per check")->capture_default_str();
  axioms->add_option("--seed", seed, "Random seed")->capture_default_str();
  axioms->add_option("-o", output, "Write the report to PATH");

  std::vector<std::string> points;
  auto* distance = app.add_subcommand("distance", "Distance between two points of the building");
  distance->add_option("model", model, "Model file")->required();
  distance->add_option("points", points, "Two points such as \"chart:23 (1)\"")->required()->expected(2);

  std::string germ_text;
  std::string target_text;
  auto* retract = app.add_subcommand("retract", "Retract points onto a chart from a sector germ");
  retract->add_option("model", model, "Model file")->required();
  retract->add_option("--germ", germ_text, "Germ such as \"chart:12 (0) / s1\"")->required();
  retract->add_option("--target", target_text, "Target chart (defaults to the germ's chart)");
  retract->add_option("points", points, "Points to retract")->required();

  auto* infinity = app.add_subcommand("infinity", "Chambers and apartments at infinity");
  infinity->add_option("model", model, "Model file")->required();

  std::vector<std::string> germs;
  auto* gallery = app.add_subcommand("gallery", "Weyl distance and minimal gallery between two germs");
  gallery->add_option("model", model, "Model file")->required();
  gallery->add_option("germs", germs, "Two germs such as \"chart:12 (0) / e\"")->required()->expected(2);

  std::string kind;
  std::size_t ends = 3;
  std::size_t leaves = 3;
  std::size_t lambda_rank = 1;
  std::string type = "A2";
  auto* fixture = app.add_subcommand("fixture", "Emit a generated model file");
  fixture->add_option("kind", kind, "tree | single | fan | pruned-fan | broken-pair | shifted-rays")
      ->required()
      ->check(CLI::IsMember({"tree", "single", "fan", "pruned-fan", "broken-pair", "shifted-rays"}));
  fixture->add_option("--ends", ends, "Ends of the tree")->capture_default_str();
  fixture->add_option("--leaves", leaves, "Leaves of the fan")->capture_default_str();
  fixture->add_option("--type", type, "Root system type for single and fan models")->capture_default_str();
  fixture->add_option("--lambda", lambda_rank, "Rank of the lexicographic value group")->capture_default_str();
  fixture->add_option("-o", output, "Write the model to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kMalformed;
  }

  try {
    if (fixture->parsed()) {
      if (lambda_rank == 0) throw MalformedInput("--lambda must be positive");
      Atlas atlas = kind == "tree"         ? lambda_tree(ends, lambda_rank)
                    : kind == "single"     ? single_apartment(type, lambda_rank)
                    : kind == "fan"        ? fan(leaves, type, lambda_rank)
                    : kind == "pruned-fan" ? pruned_fan(type, lambda_rank)
                    : kind == "broken-pair" ? broken_pair(lambda_rank)
                                            : shifted_rays(lambda_rank);
      emit(format_model(atlas), output, out);
      return kPass;
    }

    Atlas atlas = load_model(model);

    if (validate->parsed()) {
      ValidationReport report = atlas.validate();
      out << to_string(report);
      return report.valid() ? kPass : kFail;
    }

    if (axioms->parsed()) {
      CheckOptions options;
      options.samples = samples;
      options.seed = seed;
      options.budget = budget_from_env();
      std::set<std::string> subset =
          only.empty() ? std::set<std::string>{"A1", "A2", "A3", "A4", "A5", "A6", "EC", "SE"} : parse_only(only);
      auto reports = check_axioms(atlas, subset, options);
      emit(format_reports(reports), output, out);
      return exit_code(reports);
    }

    if (distance->parsed()) {
      BuildingPoint p = parse_building_point(atlas, points[0]);
      BuildingPoint q = parse_building_point(atlas, points[1]);
      try {
        out << short_string(atlas.global_distance(p, q)) << '\n';
      } catch (const AxiomFailure& e) {
        err << "lbk: " << e.what() << '\n';
        return kFail;
      }
      return kPass;
    }

    if (retract->parsed()) {
      BuildingSector s = parse_building_sector(atlas, germ_text);
      std::size_t target = target_text.empty() ? s.chart : require_chart(atlas, target_text);
      Retraction rho(atlas, {s.chart, {s.sector}}, target);
      int code = kPass;
      for (const auto& text : points) {
        BuildingPoint y = parse_building_point(atlas, text);
        try {
          out << to_string(atlas, y) << " -> " << atlas.name(target) << ":" << to_string(rho(y)) << '\n';
        } catch (const TheoremViolation& e) {
          out << to_string(atlas, y) << " -> undefined reason=" << e.what() << '\n';
          code = kFail;
        }
      }
      return code;
    }

    if (infinity->parsed()) {
      InfinityComplex complex(atlas);
      auto report = complex.report();
      out << to_string(report);
      return report.problems.empty() ? kPass : kFail;
    }

    if (gallery->parsed()) {
      BuildingSector a = parse_building_sector(atlas, germs[0]);
      BuildingSector b = parse_building_sector(atlas, germs[1]);
      const Apartment& sigma = atlas.apartment();
      for (std::size_t c = 0; c < atlas.size(); ++c) {
        auto ga = atlas.transport(BuildingGerm{a.chart, {a.sector}}, c);
        auto gb = atlas.transport(BuildingGerm{b.chart, {b.sector}}, c);
        if (!ga || !gb) continue;
        if (ga->base() != gb->base()) throw MalformedInput("germs have different base points");
        WeylElement delta = sigma.germ_distance(*ga, *gb);
        std::string types;
        for (int i : sigma.gallery(*ga, *gb)) types += (types.empty() ? "" : ".") + ("s" + std::to_string(i + 1));
        out << "chart=" << atlas.name(c) << " delta=" << germ_word(delta) << " length=" << delta.length()
            << " gallery=" << (types.empty() ? "e" : types) << '\n';
        return kPass;
      }
      out << "no chart holds both germs\n";
      return kFail;
    }
  } catch (const MalformedInput& e) {
    err << "lbk: " << e.what() << '\n';
    return kMalformed;
  } catch (const TheoremViolation& e) {
    err << "lbk: " << e.what() << '\n';
    return kFail;
  }
  return kMalformed;
}

}  // namespace lbk
