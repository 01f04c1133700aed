#include "gridcodes/io.hpp"

#include <algorithm>
#include <limits>

#include "gridcodes/errors.hpp"

namespace gridcodes {

using nlohmann::json;

json count_to_json(const Count& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(value);
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(value);
  return value.str();
}

json to_json(const Point& p) { return json(std::vector<Coord>(p.coords().begin(), p.coords().end())); }

json to_json(const Grid& g) { return json(std::vector<Coord>(g.dims().begin(), g.dims().end())); }

json to_json(const GridCode& code) {
  json words = json::array();
  for (const auto& c : code.codewords()) words.push_back(to_json(c));
  return {{"dims", to_json(code.grid())}, {"codewords", std::move(words)}};
}

json to_json(const BallSizeReport& report) {
  json j = {{"grid", to_json(report.grid)},
            {"radius", report.radius},
            {"kind", std::string(to_string(report.kind))},
            {"value", count_to_json(report.value)},
            {"path", std::string(to_string(report.path))}};
  if (report.center) j["center"] = to_json(*report.center);
  return j;
}

json to_json(const BoundReport& report) {
  return {{"grid", to_json(report.grid)},
          {"distance", report.distance},
          {"packing_radius", report.packing_radius},
          {"hamming_upper", count_to_json(report.hamming_upper)},
          {"gv_lower_strong", count_to_json(report.gv_lower_strong)},
          {"gv_lower_weak", count_to_json(report.gv_lower_weak)}};
}

json to_json(const CodeAnalysis& a) {
  auto optional = [](const std::optional<Coord>& v) { return v ? json(*v) : json(nullptr); };
  json covering = json::array();
  for (const auto& [r, covered] : a.covering) covering.push_back({{"radius", r}, {"covered", covered}});
  return {{"size", a.size},
          {"min_distance", optional(a.min_manhattan)},
          {"min_distance_lee", optional(a.min_lee)},
          {"min_distance_hamming", optional(a.min_hamming)},
          {"max_distance", optional(a.max_manhattan)},
          {"packing_radius", a.packing_radius},
          {"covering_radius", a.covering_radius},
          {"perfect", a.perfect},
          {"attains_hamming_bound", a.attains_hamming_bound},
          {"covering", std::move(covering)}};
}

json to_json(const BoundChain& c) {
  return {{"l", c.l},
          {"d_hamming", c.d_hamming},
          {"hat_d_lee", c.hat_d_lee},
          {"hat_d", c.hat_d},
          {"l_d_hamming", c.l_d_hamming},
          {"l_hat_d_lee", c.l_hat_d_lee},
          {"d_lee", c.d_lee},
          {"l_hat_d", c.l_hat_d},
          {"max_d_lee_l_hat_d", c.max_lee_hat},
          {"d", c.d},
          {"delta", c.delta},
          {"delta_upper", c.delta_upper},
          {"holds", c.holds()}};
}

json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DomainError(std::string(source) + ":" + std::to_string(line) + ":" +
                      std::to_string(column) + ": malformed JSON");
  }
}

namespace {

std::vector<Coord> coord_array(const json& j, std::string_view what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
  std::vector<Coord> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw DomainError(std::string(what) + " must contain only integers");
    out.push_back(v.get<Coord>());
  }
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

GridCode code_from_json(const json& j) {
  Grid grid(coord_array(member(j, "dims"), "dims"));
  const json& words = member(j, "codewords");
  if (!words.is_array()) throw DomainError("codewords must be an array");
  std::vector<Point> codewords;
  for (const auto& w : words) codewords.emplace_back(coord_array(w, "codeword"));
  return GridCode(std::move(grid), std::move(codewords));
}

CyclicCodeSpec cyclic_spec_from_json(const json& j) {
  CyclicCodeSpec spec{coord_array(member(j, "orders"), "orders"),
                      coord_array(member(j, "generator_exponents"), "generator_exponents")};
  validate(spec);
  return spec;
}

}  // namespace gridcodes
