#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gridcodes/ball.hpp"
#include "gridcodes/bounds.hpp"
#include "gridcodes/code_analysis.hpp"
#include "gridcodes/cyclic.hpp"
#include "gridcodes/errors.hpp"
#include "gridcodes/io.hpp"
#include "gridcodes/metrics.hpp"

namespace gridcodes::cli {

namespace {

using nlohmann::json;

enum class Format { json, csv, text };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); })) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
    return s;
  }
  return v.dump();
}

void write_csv_table(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void emit(std::ostream& out, Format format, const json& record) {
  switch (format) {
    case Format::json:
      out << record.dump(2) << '\n';
      return;
    case Format::csv: {
      std::vector<std::string> header, row;
      for (const auto& [key, value] : record.items()) {
        header.push_back(key);
        row.push_back(scalar_text(value));
      }
      write_csv_table(out, header, {row});
      return;
    }
    case Format::text:
      for (const auto& [key, value] : record.items()) out << key << ": " << scalar_text(value) << '\n';
      return;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EnumerationBudget budget_from_env() {
  EnumerationBudget budget;
  if (const char* env = std::getenv("GRIDCODES_BUDGET")) {
    const std::string_view text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value == 0)
      throw DomainError("GRIDCODES_BUDGET must be a positive integer, got '" + std::string(text) + "'");
    budget.max_points = value;
  }
  return budget;
}

// Each subcommand parses into one of these and runs after CLI11 is done.
struct Options {
  std::string format = "json";
  std::string grid;
  Coord radius = -1;
  std::string kind = "eta";
  std::string center;
  bool verify = false;
  Coord distance = -1;
  Coord sweep = 0;
  std::string code_file;
  std::string covering;
  std::string mode = "exact";
  std::string output;
  std::uint64_t max_volume = ExactSearchLimits{}.max_volume;
  std::string orders;
  std::string generator;
  std::string spec_file;
  std::uint64_t codewords_limit = 4096;
};

json ball_size(const Options& o, const EnumerationBudget& budget, std::ostream& err) {
  const Grid g = parse_grid(o.grid);
  BallSizeReport report = [&] {
    if (o.kind == "eta") {
      if (!o.center.empty()) throw DomainError("--center is only valid with --kind at");
      return eta(g, o.radius);
    }
    if (o.kind == "gamma") {
      if (!o.center.empty()) throw DomainError("--center is only valid with --kind at");
      return gamma(g, o.radius);
    }
    if (o.center.empty()) throw DomainError("--center is required with --kind at");
    return ball_size_at(g, parse_point(o.center), o.radius);
  }();
  json j = to_json(report);
  if (o.verify) {
    // eta is attained at the origin corner, gamma at the first innermost point.
    const Point center = report.center ? *report.center
                         : report.kind == BallKind::eta ? outermost_set(g).front()
                                                        : innermost_set(g).front();
    try {
      const auto ball = enumerate_ball(g, {center, o.radius}, Metric::manhattan, budget);
      j["oracle_value"] = ball.size();
      j["verified"] = Count(ball.size()) == report.value;
      if (!j["verified"].get<bool>()) throw std::logic_error("formula and enumeration disagree");
    } catch (const BudgetError& e) {
      err << "verification skipped: " << e.what() << '\n';
      j["verified"] = nullptr;
    }
  }
  return j;
}

int bounds(const Options& o, Format format, std::ostream& out) {
  const Grid g = parse_grid(o.grid);
  if (o.sweep > 0) {
    std::vector<std::vector<std::string>> rows;
    for (Coord d = 1; d <= o.sweep; ++d) {
      const BoundReport r = bound_report(g, d);
      rows.push_back({std::to_string(d), r.gv_lower_weak.str(), r.gv_lower_strong.str(),
                      r.hamming_upper.str()});
    }
    write_csv_table(out, {"d", "gv_weak", "gv_strong", "hamming_upper"}, rows);
    return kSuccess;
  }
  if (o.distance < 1) throw DomainError("--distance must be at least 1");
  emit(out, format, to_json(bound_report(g, o.distance)));
  return kSuccess;
}

json analyze_code(const Options& o, const EnumerationBudget& budget) {
  const GridCode code = code_from_json(parse_json_text(read_file(o.code_file), o.code_file));
  std::vector<Coord> radii;
  if (!o.covering.empty()) radii = parse_coord_list(o.covering, "--covering");
  json j = to_json(analyze(code, radii, budget));
  j["dims"] = to_json(code.grid());
  return j;
}

json search(const Options& o, const EnumerationBudget& budget) {
  const Grid g = parse_grid(o.grid);
  if (o.distance < 1) throw DomainError("--distance must be at least 1");
  json j;
  if (o.mode == "exact") {
    auto result = exact_max_code(g, o.distance, {o.max_volume});
    j = to_json(result.witness);
  } else if (o.mode == "greedy") {
    j = to_json(greedy_code(g, o.distance, {}, budget));
  } else {
    throw DomainError("--mode must be exact or greedy");
  }
  j["distance"] = o.distance;
  j["mode"] = o.mode;
  j["size"] = j["codewords"].size();
  if (!o.output.empty()) {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw DomainError("cannot write " + o.output);
    json code_only = {{"dims", j["dims"]}, {"codewords", j["codewords"]}};
    file << code_only.dump(2) << '\n';
  }
  return j;
}

json cyclic(const Options& o) {
  CyclicCodeSpec spec;
  if (!o.spec_file.empty()) {
    if (!o.orders.empty() || !o.generator.empty())
      throw DomainError("--spec excludes --orders/--generator");
    spec = cyclic_spec_from_json(parse_json_text(read_file(o.spec_file), o.spec_file));
  } else {
    if (o.orders.empty() || o.generator.empty())
      throw DomainError("--orders and --generator are required (or --spec)");
    spec = {parse_coord_list(o.orders, "--orders"), parse_coord_list(o.generator, "--generator")};
  }
  const CyclicDerived derived = derive(spec);
  const HammingExtent hamming = min_hamming_distance(derived);
  json support = json::array();
  for (std::size_t i : derived.support) support.push_back(i + 1);
  json maximal = json::array();
  for (const auto& x : derived.maximal_sets) {
    json set = json::array();
    for (std::size_t i : x) set.push_back(i + 1);
    maximal.push_back(std::move(set));
  }
  json j = {{"orders", spec.orders},
            {"generator_exponents", spec.generator_exponents},
            {"order", count_to_json(derived.order)},
            {"support", std::move(support)},
            {"l", derived.min_gcd},
            {"maximal_sets", std::move(maximal)},
            {"d_hamming", hamming.min},
            {"delta_hamming", hamming.max}};
  const BoundChain chain = bound_chain(spec);
  j["chain"] = to_json(chain);
  if (derived.order <= o.codewords_limit) {
    json words = json::array();
    for (const auto& c : cyclic_codewords(spec)) words.push_back(to_json(c));
    j["codewords"] = std::move(words);
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ball sizes, bounds and code analysis for Manhattan-metric grid codes",
               "gridcodes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  auto* ball = app.add_subcommand("ball-size", "Minimum, maximum or pointwise Manhattan ball size");
  ball->add_option("--grid", o.grid, "Side lengths m_1,...,m_n")->required();
  ball->add_option("--radius", o.radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--kind", o.kind, "eta (minimum), gamma (maximum) or at (given center)")
      ->check(CLI::IsMember({"eta", "gamma", "at"}))
      ->capture_default_str();
  ball->add_option("--center", o.center, "Center point for --kind at");
  ball->add_flag("--verify", o.verify, "Cross-check against ball enumeration");

  auto* bnd = app.add_subcommand("bounds", "Hamming and Gilbert-Varshamov bounds");
  bnd->add_option("--grid", o.grid, "Side lengths m_1,...,m_n")->required();
  bnd->add_option("--distance", o.distance, "Design distance d");
  bnd->add_option("--sweep", o.sweep, "Emit a CSV table for d = 1..DMAX")->check(CLI::PositiveNumber);

  auto* ana = app.add_subcommand("analyze", "Parameters of an explicit code");
  ana->add_option("--code", o.code_file, "Code JSON file")->required();
  ana->add_option("--covering", o.covering, "Radii to test for the covering property");

  auto* srch = app.add_subcommand("search", "Exact or greedy search for a large code");
  srch->add_option("--grid", o.grid, "Side lengths m_1,...,m_n")->required();
  srch->add_option("--distance", o.distance, "Minimum distance d")->required();
  srch->add_option("--mode", o.mode, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  srch->add_option("--output", o.output, "Also write the witness code to this file");
  srch->add_option("--max-volume", o.max_volume, "Largest grid volume for exact search")
      ->capture_default_str();

  auto* cyc = app.add_subcommand("cyclic", "Cyclic subgroup code of C_m1 x ... x C_mn");
  cyc->add_option("--orders", o.orders, "Cyclic factor orders m_1,...,m_n");
  cyc->add_option("--generator", o.generator, "Generator exponents e_1,...,e_n");
  cyc->add_option("--spec", o.spec_file, "Group spec JSON file");
  cyc->add_option("--codewords-limit", o.codewords_limit, "List codewords up to this order")
      ->capture_default_str();

  for (auto* sub : {ball, bnd, ana, srch, cyc}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  const Format format = o.format == "csv" ? Format::csv : o.format == "text" ? Format::text : Format::json;
  try {
    const EnumerationBudget budget = budget_from_env();
    if (ball->parsed()) {
      emit(out, format, ball_size(o, budget, err));
    } else if (bnd->parsed()) {
      return bounds(o, format, out);
    } else if (ana->parsed()) {
      emit(out, format, analyze_code(o, budget));
    } else if (srch->parsed()) {
      emit(out, format, search(o, budget));
    } else if (cyc->parsed()) {
      emit(out, format, cyclic(o));
    }
    return kSuccess;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace gridcodes::cli
