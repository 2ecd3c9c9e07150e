#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pullback/balance.hpp"
#include "pullback/document.hpp"
#include "pullback/enrichment.hpp"
#include "pullback/error.hpp"
#include "pullback/labeling.hpp"
#include "pullback/monodromy.hpp"
#include "pullback/real_combinatorics.hpp"
#include "pullback/render.hpp"

using namespace pullback;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Config {
  std::string input;
  std::string format;
  int d = 0;
  std::vector<int> a;
  std::size_t cap_regions = 1'000'000;
  std::optional<std::uint64_t> seed;
};

std::string read_input(const std::string& input) {
  if (input.empty()) throw Error(ErrorKind::ParseError, "--input is required");
  if (input.front() == '{') return input;
  if (input == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(input);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + input);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string faces_string(const std::vector<int>& faces) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < faces.size(); ++i) os << (i ? "," : "") << faces[i];
  os << "]";
  return os.str();
}

WeightComposition composition(const Config& cfg) {
  WeightComposition t{cfg.d, cfg.a};
  if (!t.valid()) {
    throw Error(ErrorKind::PreconditionFailed,
                "--a must have at least two parts in 1..d-1 summing to 2d-2");
  }
  return t;
}

int cmd_check(const Config& cfg) {
  const auto doc = parse_map_document(read_input(cfg.input));
  const auto& map = doc.map;
  BalanceReport r;
  FaceColoring coloring;
  if (doc.colors) {
    coloring = *doc.colors;
    r = is_globally_balanced(map, coloring);
  } else {
    r = is_globally_balanced(map);
    if (r.globally_balanced) coloring = alternating_coloring(map);
  }
  if (r.globally_balanced) r = is_locally_balanced(map, coloring, {cfg.cap_regions});
  const int g = map.genus();
  const bool balanced = r.globally_balanced && r.locally_balanced;

  if (cfg.format == "document") {
    nlohmann::json j{{"balanced", balanced},
                     {"d", r.d},
                     {"genus", g},
                     {"globally_balanced", r.globally_balanced},
                     {"locally_balanced", r.locally_balanced},
                     {"corners", map.corners().size()}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.violation) {
      j["certificate"] = {{"faces", r.violation->faces},
                          {"a_faces", r.violation->a_faces},
                          {"b_faces", r.violation->b_faces}};
    }
    std::cout << j.dump() << "\n";
  } else {
    if (balanced) {
      std::cout << "balanced, d=" << r.d << ", g=" << g << "\n";
    } else {
      std::cout << "not balanced, d=" << r.d << ", g=" << g << ": " << r.reason << "\n";
    }
    std::cout << "globally balanced: " << (r.globally_balanced ? "yes" : "no") << "\n";
    if (r.globally_balanced) {
      std::cout << "locally balanced: " << (r.locally_balanced ? "yes" : "no") << "\n";
      std::cout << "corners: " << map.corners().size() << " (bound " << 2 * (g + r.d - 1)
                << ")\n";
    }
    if (r.violation) {
      std::cout << "certificate region: faces " << faces_string(r.violation->faces)
                << ", A=" << r.violation->a_faces << ", B=" << r.violation->b_faces
                << (*r.violation_coloring == coloring ? "" : " (flipped coloring)") << "\n";
    }
  }
  return balanced ? kOk : kNo;
}

int cmd_realize(const Config& cfg) {
  const auto doc = parse_map_document(read_input(cfg.input));
  const auto coloring = doc.colors ? *doc.colors : alternating_coloring(doc.map);
  const auto gb = is_globally_balanced(doc.map, coloring);
  if (!gb.globally_balanced) {
    std::cerr << "not globally balanced: " << gb.reason << "\n";
    return kNo;
  }
  const auto dg = dot_graph(doc.map, coloring);
  const auto hall = hall_check(dg);
  if (!hall.ok) {
    std::cerr << "Hall condition fails: " << hall.witness.size() << " B dots in faces "
              << faces_string(hall.witness_faces) << " see only " << hall.neighbor_dots
              << " A dots in faces " << faces_string(hall.neighbor_faces) << "\n";
    return kNo;
  }
  const auto rz = realize(doc.map, coloring);
  auto out = canonicalize({rz.enriched, rz.labeling.label, rz.coloring, std::nullopt});
  const auto lab = *out.labeling();
  const auto c = constellation_from(out.map, *out.colors, lab);
  const auto report = verify_constellation(c, passport_of(out.map, lab));
  if (!report.ok()) throw Error(ErrorKind::NotVerified, report.failures.front());
  if (cfg.format == "text") {
    std::cout << "d=" << c.d << ", m=" << c.perms.size() << ", g=" << report.genus << "\n";
    for (const auto& p : c.perms) std::cout << cycle_string(p) << "\n";
  } else {
    std::cout << nlohmann::json{{"constellation", to_json(c)}, {"map", to_json(out)}}.dump()
              << "\n";
  }
  return kOk;
}

int cmd_pullback(const Config& cfg) {
  const auto c = parse_constellation(read_input(cfg.input));
  const auto report = verify_constellation(c);
  if (!report.ok()) {
    std::cerr << "not a constellation: " << report.failures.front() << "\n";
    return kNo;
  }
  const auto lm = pullback_from_constellation(c);
  const auto doc = canonicalize({lm.map, lm.labeling.label, lm.coloring, std::nullopt});
  if (cfg.format == "text") {
    std::cout << "V=" << doc.map.vertex_count() << ", E=" << doc.map.edge_count()
              << ", F=" << doc.map.face_count() << ", g=" << doc.map.genus() << "\n";
  } else {
    std::cout << serialize(doc) << "\n";
  }
  return kOk;
}

int cmd_count(const Config& cfg) {
  if (cfg.d < 2) throw Error(ErrorKind::PreconditionFailed, "--d must be at least 2");
  std::vector<WeightComposition> types;
  if (cfg.a.empty()) {
    types = compositions(cfg.d);
  } else {
    types.push_back(composition(cfg));
  }
  std::cout << "a\tpairings\tssyt\tkostka\n";
  for (const auto& t : types) {
    std::ostringstream a;
    for (int i = 0; i < t.n(); ++i) a << (i ? "," : "") << t.a[i];
    std::cout << a.str() << "\t" << count_pairings(t) << "\t" << enumerate_ssyt(t).size() << "\t"
              << kostka(t) << "\n";
  }
  std::cout << "catalan(" << cfg.d << ")\t" << catalan(cfg.d) << "\n";
  return kOk;
}

int cmd_pairings(const Config& cfg) {
  for (const auto& p : enumerate_pairings(composition(cfg))) std::cout << serialize(p) << "\n";
  return kOk;
}

int cmd_ssyt(const Config& cfg) {
  for (const auto& t : enumerate_ssyt(composition(cfg))) std::cout << serialize(t) << "\n";
  return kOk;
}

int cmd_mirror(const Config& cfg) {
  NonCrossingPairing p;
  if (!cfg.input.empty()) {
    p = parse_pairing(read_input(cfg.input));
  } else {
    const auto all = enumerate_pairings(composition(cfg));
    std::size_t pick = 0;
    if (cfg.seed) {
      std::mt19937_64 rng(*cfg.seed);
      pick = std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng);
    }
    p = all.at(pick);
  }
  const auto mg = mirror_graph(p);
  const MapDocument doc{mg.map, std::nullopt, mg.coloring, mg.real_cycle};
  if (cfg.format == "dot") {
    std::cout << to_dot(doc);
  } else if (cfg.format == "svg") {
    std::cout << to_svg(doc);
  } else {
    std::cout << serialize(doc) << "\n";
  }
  return kOk;
}

int cmd_export(const Config& cfg) {
  const auto doc = parse_map_document(read_input(cfg.input));
  if (cfg.format == "svg") {
    std::cout << to_svg(doc);
  } else if (cfg.format == "dot" || cfg.format.empty()) {
    std::cout << to_dot(doc);
  } else {
    std::cout << serialize(canonicalize(doc)) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced graphs, branched coverings and real pullback graphs"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    cfg.format = default_format;
    sub->add_option("--input", cfg.input, "document path, '-' for stdin, or inline JSON");
    sub->add_option("--format", cfg.format, "text | document | dot | svg")
        ->check(CLI::IsMember({"text", "document", "dot", "svg"}));
    sub->add_option("--d", cfg.d, "degree");
    sub->add_option("--a", cfg.a, "weights a_1,...,a_n")->delimiter(',');
    sub->add_option("--cap-regions", cfg.cap_regions, "positive region limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for random choices");
  };

  struct Entry {
    const char* name;
    const char* help;
    const char* format;
    int (*run)(const Config&);
  };
  const Entry entries[] = {
      {"check", "decide global and local balance", "text", cmd_check},
      {"realize", "enrich, label and extract the monodromy", "document", cmd_realize},
      {"pullback", "build the pullback graph of a constellation", "document", cmd_pullback},
      {"count", "pairing, tableau and Kostka counts", "text", cmd_count},
      {"pairings", "list non-crossing pairings", "document", cmd_pairings},
      {"ssyt", "list semistandard tableaux", "document", cmd_ssyt},
      {"mirror", "mirror graph of a pairing", "document", cmd_mirror},
      {"export", "render a map as DOT or SVG", "dot", cmd_export},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    subs.emplace_back(sub, &e);
  }
  for (auto& [sub, e] : subs) {
    sub->preparse_callback([&cfg, e = e](std::size_t) { cfg.format = e->format; });
    add_common(sub, e->format);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  try {
    for (auto& [sub, e] : subs) {
      if (sub->parsed()) return e->run(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
