#include "cli.hpp"

#include "capcone/negative_classes.hpp"
#include "capcone/numbers_game.hpp"
#include "capcone/reduction.hpp"
#include "capcone/verify.hpp"
#include "capcone/wall_crossing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace capcone::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json json_capacities(const CapacityVector& delta) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : delta.delta) arr.push_back(format_rational(d));
  return arr;
}

ordered_json json_pd(const PDClass& cls) {
  ordered_json j;
  j["a0"] = format_rational(cls.c0);
  ordered_json arr = ordered_json::array();
  for (const auto& c : cls.c) arr.push_back(format_rational(c));
  j["a"] = arr;
  return j;
}

ordered_json json_hclass(const HClass& cls) {
  ordered_json j;
  j["a0"] = std::to_string(cls.a0);
  ordered_json arr = ordered_json::array();
  for (long long a : cls.a) arr.push_back(std::to_string(a));
  j["a"] = arr;
  return j;
}

ordered_json json_family(const FamilyTag& tag) {
  ordered_json j;
  j["family"] = family_name(tag.family);
  if (!tag.indices.empty()) j["indices"] = tag.indices;
  if (tag.root) {
    j["m"] = tag.m;
    j["root"] = format_root(*tag.root);
  }
  return j;
}

// class literals contain commas, so CSV cells holding them are quoted
std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string join_indices(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(idx[i]);
  }
  return s;
}

// family,indices,m,a0,a1..a9,self_int,c1,codim
std::string csv_class_row(const HClass& cls) {
  const FamilyTag tag = classify_negative(cls);
  const auto inv = class_invariants(cls);
  std::ostringstream os;
  os << family_name(tag.family) << ',' << join_indices(tag.indices) << ',' << tag.m << ','
     << cls.a0;
  for (long long a : cls.a) os << ',' << a;
  os << ',' << inv.self_int << ',' << *inv.c1 << ',' << *inv.codim;
  return os.str();
}

constexpr const char* kClassCsvHeader =
    "family,indices,m,a0,a1,a2,a3,a4,a5,a6,a7,a8,a9,self_int,c1,codim";

struct Args {
  Config config;

  std::string family;
  long long max_m = 0;
  long long max_a0 = 0;
  std::string format;
  std::string cls_text;
  std::string delta_text;
  std::string delta0_text;
  std::string from_text;
  std::string to_text;
  std::string wall_text;
  std::string near_text;
  std::string epsilon_text = "1/100";
  std::string strategy;
  std::uint64_t seed = 0;
  int moves = 0;
  int steps = 0;
  std::string only_module;
};

// ---------------------------------------------------------------------------
// subcommand bodies

CommandResult cmd_enumerate(const Args& a) {
  std::vector<HClass> classes;
  if (a.family == "le3") {
    classes = enumerate_le_minus3();
  } else if (a.family == "neg2") {
    for (const auto& r : *enumerate_neg2_roots(a.max_m)) classes.push_back(r.cls);
  } else if (a.family == "exceptional") {
    classes = *enumerate_exceptional(a.max_a0);
  } else {
    return {2, "unknown family '" + a.family + "' (expected le3|neg2|exceptional)\n"};
  }

  if (a.format == "csv") {
    std::ostringstream os;
    os << kClassCsvHeader << '\n';
    for (const auto& cls : classes) os << csv_class_row(cls) << '\n';
    return {0, os.str()};
  }
  ordered_json out;
  out["family"] = a.family;
  if (a.family == "neg2") out["max_m"] = a.max_m;
  if (a.family == "exceptional") out["max_a0"] = a.max_a0;
  out["count"] = classes.size();
  ordered_json rows = ordered_json::array();
  for (const auto& cls : classes) {
    const auto inv = class_invariants(cls);
    ordered_json row = json_family(classify_negative(cls));
    row["class"] = format_class(cls);
    row["self_int"] = inv.self_int;
    row["c1"] = *inv.c1;
    row["codim"] = *inv.codim;
    rows.push_back(row);
  }
  out["classes"] = rows;
  return {0, dump(out)};
}

CommandResult cmd_class_info(const Args& a) {
  const HClass cls = parse_h_class(a.cls_text);
  const auto inv = class_invariants(cls);
  ordered_json out;
  out["class"] = format_class(cls);
  out["n"] = cls.n;
  out["coefficients"] = json_hclass(cls);
  out["self_int"] = inv.self_int;
  if (inv.c1) {
    out["c1"] = *inv.c1;
    out["k"] = format_rational(*inv.k);
    out["k_integral"] = inv.k_integral;
    out["genus_defect"] = *inv.genus_defect;
    out["codim"] = *inv.codim;
    out["classification"] = json_family(classify_negative(cls));
    out["is_positive_root"] = is_positive_root(cls);
    out["is_reduced"] = is_reduced(cls);
  }
  return {0, dump(out)};
}

CommandResult cmd_reduce(const Args& a) {
  const PDClass cls = parse_pd_class(a.cls_text);
  const CremonaReduction red = cremona_reduce(cls);
  ordered_json out;
  out["input"] = format_class(cls);
  out["reduced"] = format_class(red.cls);
  out["is_reduced"] = is_reduced(red.cls);
  ordered_json word = ordered_json::array();
  for (const auto& move : red.word) word.push_back(format_move(move));
  out["word"] = word;
  return {0, dump(out)};
}

CommandResult cmd_area(const Args& a) {
  const CapacityVector delta = parse_capacities(a.delta_text);
  const HClass cls = parse_h_class(a.cls_text);
  ordered_json out;
  out["delta"] = json_capacities(delta);
  out["class"] = format_class(cls);
  out["area"] = format_rational(area(delta, cls));
  return {0, dump(out)};
}

CommandResult cmd_game_play(const Args& a) {
  const Strategy strategy = parse_strategy(a.strategy);
  std::mt19937_64 rng(a.seed);
  GameState plain = initial_e8_state();
  LatticeGameState lattice = lattice_init();
  const auto& weights = e8_game_weights();

  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  if (a.format == "csv") {
    csv << "step,fired_node,invariant,crossed_class";
    for (int i = 0; i < 9; ++i) csv << ",v" << i;
    csv << '\n';
  }
  for (int step = 1; step <= a.moves; ++step) {
    const int node = pick_positive(plain.values, strategy, rng);
    auto [next, crossed] = lattice_fire(lattice, node);
    lattice = std::move(next);
    plain = fire(plain, node);

    if (a.format == "csv") {
      csv << step << ',' << plain.graph.labels[node] << ',' << invariant(plain, weights)
          << ',' << csv_quote(format_class(crossed));
      for (long long v : plain.values) csv << ',' << v;
      csv << '\n';
      continue;
    }
    ordered_json row;
    row["step"] = step;
    row["fired_node"] = plain.graph.labels[node];
    row["values"] = plain.values;
    row["invariant"] = invariant(plain, weights);
    row["crossed_class"] = format_class(crossed);
    rows.push_back(row);
  }
  if (a.format == "csv") return {0, csv.str()};
  return {0, dump(rows)};
}

CommandResult cmd_sequence(const Args& a) {
  const CapacityVector delta0 =
      a.delta0_text.empty() ? default_sequence_start() : parse_capacities(a.delta0_text);
  const Strategy strategy = parse_strategy(a.strategy);
  const auto records = generate_sequence(delta0, a.steps, strategy, a.seed);

  if (a.format == "csv") {
    std::ostringstream os;
    os << "step,crossed,area_before,area_after,invariant,sup_distance";
    for (int i = 1; i <= 9; ++i) os << ",delta" << i;
    os << ",pd_c0";
    for (int i = 1; i <= 9; ++i) os << ",pd_c" << i;
    os << '\n';
    for (const auto& rec : records) {
      os << rec.step << ',' << csv_quote(format_class(rec.crossed)) << ','
         << format_rational(rec.area_before) << ',' << format_rational(rec.area_after)
         << ',' << rec.invariant_value << ','
         << format_rational(rec.sup_distance_to_monotone);
      for (const auto& d : rec.delta.delta) os << ',' << format_rational(d);
      os << ',' << format_rational(rec.pd_unnormalized.c0);
      for (const auto& c : rec.pd_unnormalized.c) os << ',' << format_rational(c);
      os << '\n';
    }
    return {0, os.str()};
  }

  ordered_json rows = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json row;
    row["step"] = rec.step;
    row["crossed"] = format_class(rec.crossed);
    row["crossed_root"] = format_root(*classify_negative(rec.crossed).root);
    row["area_before"] = format_rational(rec.area_before);
    row["area_after"] = format_rational(rec.area_after);
    row["invariant"] = rec.invariant_value;
    row["sup_distance"] = format_rational(rec.sup_distance_to_monotone);
    row["delta"] = json_capacities(rec.delta);
    row["pd"] = json_pd(rec.pd_unnormalized);
    rows.push_back(row);
  }
  return {0, dump(rows)};
}

CommandResult cmd_chamber(const Args& a) {
  const CapacityVector delta = parse_capacities(a.delta_text);
  const ChamberSignature sig = chamber_signature(delta);
  ordered_json out;
  out["delta"] = json_capacities(delta);
  out["level_bound"] = sig.level_bound;
  out["interior"] = sig.interior();
  ordered_json on_wall = ordered_json::array();
  for (const auto& cls : sig.on_wall) on_wall.push_back(format_class(cls));
  out["on_wall"] = on_wall;
  ordered_json roots = ordered_json::array();
  for (const auto& [root, sign] : sig.root_signs) {
    ordered_json row;
    row["root"] = format_root(root);
    row["class"] = format_class(root.cls);
    row["sign"] = sign;
    roots.push_back(row);
  }
  out["roots"] = roots;
  ordered_json le3 = ordered_json::array();
  for (const auto& [cls, sign] : sig.le3_signs) {
    ordered_json row;
    row["class"] = format_class(cls);
    row["sign"] = sign;
    le3.push_back(row);
  }
  out["le3"] = le3;
  return {0, dump(out)};
}

CommandResult cmd_separating_walls(const Args& a) {
  const CapacityVector from = parse_capacities(a.from_text);
  const CapacityVector to = parse_capacities(a.to_text);
  const auto walls = separating_walls(from, to);
  ordered_json out;
  out["from"] = json_capacities(from);
  out["to"] = json_capacities(to);
  out["count"] = walls.size();
  ordered_json rows = ordered_json::array();
  for (const auto& cls : walls) {
    ordered_json row = json_family(classify_negative(cls));
    row["class"] = format_class(cls);
    rows.push_back(row);
  }
  out["walls"] = rows;
  return {0, dump(out)};
}

CommandResult cmd_restrict(const Args& a) {
  const HClass wall = parse_h_class(a.wall_text);
  const CapacityVector near = parse_capacities(a.near_text);
  const Rat epsilon = parse_rational(a.epsilon_text);
  const RestrictionPair pair = comparable_pair(wall, near, epsilon, a.max_a0);

  std::vector<Rat> normal(wall.a.begin(), wall.a.end());
  ordered_json out;
  out["wall"] = format_class(wall);
  out["near"] = json_capacities(near);
  out["epsilon"] = format_rational(pair.epsilon);
  out["k"] = format_rational(pair.k);
  out["direction"] = restriction_direction_name(restriction_direction(normal));
  out["x_minus"] = json_capacities(pair.x_minus);
  out["x_plus"] = json_capacities(pair.x_plus);
  out["area_x_minus"] = format_rational(area(pair.x_minus, wall));
  out["area_x_plus"] = format_rational(area(pair.x_plus, wall));
  return {0, dump(out)};
}

CommandResult cmd_admissible(const Args& a) {
  const CapacityVector delta = parse_capacities(a.delta_text);
  const AdmissibilityResult res = is_admissible(delta, a.max_a0);
  ordered_json out;
  out["delta"] = json_capacities(delta);
  out["admissible"] = res.admissible;
  out["certificate"] = res.certificate;
  out["max_a0"] = res.max_a0;
  if (res.violating_class) out["violating_class"] = format_class(*res.violating_class);
  return {0, dump(out)};
}

CommandResult cmd_verify(const Args& a) {
  std::ostringstream os;
  int failures = 0, ran = 0;
  for (const auto& check : verification_checks()) {
    if (!a.only_module.empty() && check.module != a.only_module) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult res = check.run();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    char line[64];
    std::snprintf(line, sizeof(line), " (%.1f ms)", ms);
    os << (res.pass ? "PASS " : "FAIL ") << check.module << '/' << check.name << line;
    if (!res.detail.empty()) os << "  " << res.detail;
    os << '\n';
    if (!res.pass) ++failures;
  }
  if (ran == 0) {
    return {2, "no checks in module '" + a.only_module + "'\n"};
  }
  os << (failures ? "FAILED " : "OK ") << (ran - failures) << '/' << ran
     << " checks passed\n";
  return {failures ? 1 : 0, os.str()};
}

}  // namespace

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "strategy") {
      cfg.default_strategy = value;
    } else if (key == "format") {
      cfg.format = value;
    } else if (key == "n" || key == "max_m" || key == "max_a0" || key == "seed") {
      try {
        if (key == "n") cfg.default_n = std::stoi(value);
        else if (key == "max_m") cfg.default_max_m = std::stoll(value);
        else if (key == "max_a0") cfg.default_max_a0 = std::stoll(value);
        else cfg.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": bad value for '" + key + "'");
      }
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  if (cfg.default_n != 9) throw std::invalid_argument("config: n must be 9");
  if (cfg.default_max_m < 0 || cfg.default_max_a0 < 0) {
    throw std::invalid_argument("config: bounds must be non-negative");
  }
  parse_strategy(cfg.default_strategy);
  if (cfg.format != "json" && cfg.format != "csv") {
    throw std::invalid_argument("config: format must be json or csv");
  }
  return cfg;
}

Config load_default_config() {
  std::string path = "capcone.cfg";
  if (const char* env = std::getenv("CAPCONE_CONFIG")) path = env;
  std::ifstream in(path);
  if (!in) return Config{};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

CommandResult run(const std::vector<std::string>& argv, const Config& config) {
  Args a;
  a.config = config;
  a.max_m = config.default_max_m;
  a.max_a0 = config.default_max_a0;
  a.format = config.format;
  a.strategy = config.default_strategy;
  a.seed = config.seed;

  CLI::App app{"exact wall-and-chamber computations for ball capacities in the projective plane"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate-classes", "list wall classes by family");
  enumerate->add_option("--family", a.family, "le3|neg2|exceptional")->required();
  enumerate->add_option("--max-m", a.max_m, "level bound for neg2");
  enumerate->add_option("--max-a0", a.max_a0, "degree bound for exceptional");
  enumerate->add_option("--format", a.format, "json|csv");

  auto* class_info = app.add_subcommand("class-info", "invariants of one integer class");
  class_info->add_option("class", a.cls_text, "class literal, e.g. \"(3;1,1,1,1,1,1,1,1,1)\"")
      ->required();

  auto* reduce = app.add_subcommand("reduce", "Cremona-reduce a rational class");
  reduce->add_option("class", a.cls_text, "class literal with rational entries")->required();

  auto* area_cmd = app.add_subcommand("area", "pair capacities with a class");
  area_cmd->add_option("--delta", a.delta_text, "comma-separated capacities")->required();
  area_cmd->add_option("class", a.cls_text, "class literal")->required();

  auto* game = app.add_subcommand("game", "Mozes' game of numbers on the affine E8 diagram");
  auto* play = game->add_subcommand("play", "run the game and the tracked reflections");
  play->add_option("--moves", a.moves, "number of moves")->required();
  play->add_option("--strategy", a.strategy, "first|random");
  play->add_option("--seed", a.seed, "rng seed for the random strategy");
  play->add_option("--format", a.format, "json|csv");

  auto* sequence = app.add_subcommand("sequence", "wall-crossing capacity sequence");
  sequence->add_option("--delta0", a.delta0_text,
                       "starting capacities (default: the shipped generic start)");
  sequence->add_option("--steps", a.steps, "number of crossings")->required();
  sequence->add_option("--strategy", a.strategy, "first|random");
  sequence->add_option("--seed", a.seed, "rng seed for the random strategy");
  sequence->add_option("--format", a.format, "json|csv");

  auto* chamber = app.add_subcommand("chamber", "signs of every wall at given capacities");
  chamber->add_option("--delta", a.delta_text, "comma-separated capacities")->required();

  auto* separating = app.add_subcommand("separating-walls",
                                        "walls with opposite signs at two capacities");
  separating->add_option("--from", a.from_text, "comma-separated capacities")->required();
  separating->add_option("--to", a.to_text, "comma-separated capacities")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "comparable pair across one (-2)-wall");
  restrict_cmd->add_option("--wall", a.wall_text, "positive-root class literal")->required();
  restrict_cmd->add_option("--near", a.near_text, "capacities on the positive side")
      ->required();
  restrict_cmd->add_option("--epsilon", a.epsilon_text, "proximity budget, rational");
  restrict_cmd->add_option("--max-a0", a.max_a0, "admissibility bound");

  auto* admissible = app.add_subcommand("admissible", "bounded admissibility certificate");
  admissible->add_option("--delta", a.delta_text, "comma-separated capacities")->required();
  admissible->add_option("--max-a0", a.max_a0, "exceptional-class bound");

  auto* verify = app.add_subcommand("verify", "run the bundled invariant suite");
  verify->add_option("--only", a.only_module,
                     "lattice|negative_classes|numbers_game|wall_crossing");

  std::vector<const char*> cargv;
  cargv.push_back("capcone");
  for (const auto& s : argv) cargv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    (void)e;
    std::ostringstream os;
    for (const auto* sub : app.get_subcommands({})) {
      if (sub->parsed()) return {0, sub->help()};
    }
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string(e.what()) + "\n" + app.help()};
  }

  if (a.format != "json" && a.format != "csv") {
    return {2, "unknown format '" + a.format + "' (expected json|csv)\n"};
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(a);
    if (class_info->parsed()) return cmd_class_info(a);
    if (reduce->parsed()) return cmd_reduce(a);
    if (area_cmd->parsed()) return cmd_area(a);
    if (game->parsed()) {
      if (!play->parsed()) return {2, "usage: game play --moves K [...]\n"};
      return cmd_game_play(a);
    }
    if (sequence->parsed()) return cmd_sequence(a);
    if (chamber->parsed()) return cmd_chamber(a);
    if (separating->parsed()) return cmd_separating_walls(a);
    if (restrict_cmd->parsed()) return cmd_restrict(a);
    if (admissible->parsed()) return cmd_admissible(a);
    if (verify->parsed()) return cmd_verify(a);
  } catch (const math_error& e) {
    return {1, std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string(e.what()) + "\n"};
  }
  return {2, "no subcommand\n"};
}

}  // namespace capcone::cli
