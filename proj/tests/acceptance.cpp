// One line per acceptance criterion: PASS or FAIL with a short reason.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "gridcodes/ball.hpp"
#include "gridcodes/bounds.hpp"
#include "gridcodes/code_analysis.hpp"
#include "gridcodes/cyclic.hpp"
#include "gridcodes/errors.hpp"
#include "gridcodes/metrics.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace gridcodes;

namespace {

constexpr std::uint64_t kFamilySeed = 20261016;

// Collects failures for one criterion; the first few are reported.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what);
    ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << checks_ << " checks";
    } else {
      os << failed_ << " of " << checks_ << " checks failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const Count& c) { return c.str(); }

std::vector<Grid> family() { return oracle::random_grids(200, kFamilySeed, 4, 9, 20000); }

// 1
void eta_regression(Check& c) {
  const std::array<std::tuple<Grid, Coord, int>, 4> cases{{
      {Grid{2, 2, 10}, 5, 20}, {Grid{7, 7}, 9, 43}, {Grid{5, 2}, 2, 5}, {Grid{5, 2}, 1, 3}}};
  for (const auto& [g, r, want] : cases) {
    const Count got = eta(g, r).value;
    c.expect(got == want, "eta([" + to_string(g) + "]," + std::to_string(r) + ")=" + str(got) +
                              ", expected " + std::to_string(want));
  }
}

// 2
void gamma_regression(Check& c) {
  const std::array<std::tuple<Grid, Coord, int>, 4> cases{{
      {Grid{9, 4, 4}, 4, 80}, {Grid{9, 4}, 4, 28}, {Grid{5, 2}, 2, 7}, {Grid{5, 2}, 1, 4}}};
  for (const auto& [g, r, want] : cases) {
    const Count got = gamma(g, r).value;
    c.expect(got == want, "gamma([" + to_string(g) + "]," + std::to_string(r) + ")=" + str(got) +
                              ", expected " + std::to_string(want));
  }
}

// 3
void extremality(Check& c) {
  for (const auto& g : family()) {
    const auto dims = oracle::dims_of(g);
    const auto table = oracle::ball_size_table(dims);
    const auto pts = enumerate_grid(g);
    const auto corners = outermost_set(g);
    const auto inner = innermost_set(g);
    for (Coord r = 0; r <= g.diameter(); ++r) {
      std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
      for (const auto& row : table) {
        lo = std::min(lo, row[r]);
        hi = std::max(hi, row[r]);
      }
      const std::string at = to_string(g) + " r=" + std::to_string(r);
      c.expect(eta(g, r).value == lo, "eta " + at);
      c.expect(gamma(g, r).value == hi, "gamma " + at);
      for (const auto& p : corners) c.expect(table[linear_index(g, p)][r] == lo, "corner " + at);
      for (const auto& p : inner) c.expect(table[linear_index(g, p)][r] == hi, "inner " + at);
    }
  }
}

// 4
void bound_regression(Check& c) {
  c.expect(hamming_bound(Grid{5, 2}, 5) == 2, "hamming_bound([5,2],5)");
  c.expect(hamming_bound(Grid{5, 2}, 3) == 3, "hamming_bound([5,2],3)");
  c.expect(gv_bound(Grid{10, 4, 4}, 5).strong == 2, "gv strong([10,4,4],5)");
}

// 5
void sandwich(Check& c, std::uint64_t max_nodes) {
  c.expect(exact_max_code(Grid{5, 2}, 5).size == 2, "exact([5,2],5)");
  c.expect(exact_max_code(Grid{5, 2}, 3).size == 3, "exact([5,2],3)");
  std::size_t instances = 0;
  std::vector<std::string> unresolved;
  for (const auto& g : family()) {
    if (g.volume() > 512) continue;
    for (Coord d = 1; d <= g.diameter() + 1; ++d) {
      ++instances;
      const std::string at = to_string(g) + " d=" + std::to_string(d);
      const auto b = bound_report(g, d);
      try {
        const auto a = exact_max_code(g, d, {512, max_nodes});
        c.expect(b.gv_lower_weak <= b.gv_lower_strong && b.gv_lower_strong <= a.size &&
                     Count(a.size) <= b.hamming_upper,
                 "sandwich " + at);
      } catch (const BudgetError&) {
        unresolved.push_back(at);
      }
    }
  }
  std::string list;
  for (const auto& u : unresolved) list += (list.empty() ? "" : ", ") + u;
  c.expect(unresolved.empty(), "exact search unresolved within " + std::to_string(max_nodes) +
                                   " nodes for " + std::to_string(unresolved.size()) + " of " +
                                   std::to_string(instances) + " instances: " + list);
}

// 6
void perfect_codes(Check& c) {
  const auto a = analyze(GridCode(Grid{5, 2}, {{0, 0}, {4, 1}}));
  c.expect(a.perfect && a.attains_hamming_bound, "{(0,0),(4,1)}");
  const auto b = analyze(GridCode(Grid{5, 2}, {{0, 1}, {2, 0}, {4, 1}}));
  c.expect(b.perfect && !b.attains_hamming_bound, "{(0,1),(2,0),(4,1)}");
}

// 7
void integer_ball(Check& c) {
  c.expect(zn_ball_size(2, 3) == 25, "zn_ball_size(2,3)");
  const auto lee = enumerate_ball(Grid{4, 4}, {Point{0, 0}, 3}, Metric::lee);
  c.expect(lee.size() == 15, "Lee ball size " + std::to_string(lee.size()));
}

// Minimum ball size of a box by scanning every center.
std::uint64_t brute_eta(const std::vector<Coord>& dims, Coord r) {
  if (r < 0) return 0;
  std::uint64_t lo = ~std::uint64_t{0};
  for (const auto& x : oracle::all_points(dims)) lo = std::min(lo, oracle::ball_size(dims, x, r));
  return lo;
}

// 8
void decompositions(Check& c) {
  std::mt19937_64 rng(kFamilySeed + 8);
  const auto grids = oracle::random_grids(100, kFamilySeed + 8, 4, 9, 4000);
  for (const auto& g : grids) {
    const auto pts = enumerate_grid(g);
    const Point x = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    const Coord r = std::uniform_int_distribution<Coord>(0, g.diameter())(rng);
    const std::string at = to_string(g) + " x=" + to_string(x) + " r=" + std::to_string(r);
    const auto dims = oracle::dims_of(g);
    std::vector<Point> ball;
    for (const auto& p : pts)
      if (oracle::manhattan(p, x) <= r) ball.push_back(p);

    std::vector<Point> merged;
    const std::vector<Coord> sub_dims(dims.begin(), dims.end() - 1);
    const std::vector<Coord> sub_x(x.coords().begin(), x.coords().end() - 1);
    for (const auto& s : decompose_ball_slices(g, x, r)) {
      const std::uint64_t expect = sub_dims.empty() ? 1 : oracle::ball_size(sub_dims, sub_x, s.sub_radius);
      c.expect(s.points.size() == expect && s.expected_size == expect, "slice size " + at);
      merged.insert(merged.end(), s.points.begin(), s.points.end());
    }
    std::sort(merged.begin(), merged.end());
    c.expect(merged == ball, "slices do not partition the ball " + at);

    const auto od = decompose_ball_orthants(g, x, r);
    merged = od.centric;
    c.expect(od.orthants.size() == (r >= static_cast<Coord>(g.dimension()) ? (std::size_t{1} << g.dimension()) : 0),
             "orthant count " + at);
    for (const auto& piece : od.orthants) {
      if (piece.in_w) {
        std::vector<Coord> sides;
        for (Coord s : piece.sub_extents) sides.push_back(s + 1);
        const auto expect = brute_eta(sides, r - static_cast<Coord>(g.dimension()));
        c.expect(piece.points.size() == expect && piece.expected_size == expect, "orthant size " + at);
      } else {
        c.expect(piece.points.empty() && piece.expected_size == 0, "orthant outside W " + at);
      }
      merged.insert(merged.end(), piece.points.begin(), piece.points.end());
    }
    std::sort(merged.begin(), merged.end());
    c.expect(merged == ball, "orthants do not partition the ball " + at);
  }
}

// 9
void cyclic_regression(Check& c) {
  const CyclicCodeSpec spec{{8, 8, 8, 8}, {2, 2, 4, 4}};
  c.expect(derive(spec).order == 4, "order");
  c.expect(cyclic_codewords(spec) ==
               std::vector<Point>{{0, 0, 0, 0}, {2, 2, 4, 4}, {4, 4, 0, 0}, {6, 6, 4, 4}},
           "codewords");
  c.expect(min_hamming_distance(spec).min == 2, "d_H");
  const auto ch = bound_chain(spec);
  c.expect(ch.l_d_hamming == 4 && ch.l_hat_d_lee == 8 && ch.max_lee_hat == 8 && ch.d == 8,
           "chain values");
  c.expect(ch.delta == 20 && ch.delta_upper == 20, "maximum distance and its bound");
}

// 10
void cyclic_properties(Check& c) {
  std::mt19937_64 rng(kFamilySeed + 10);
  std::size_t accepted = 0;
  while (accepted < 500) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<Coord> m(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = std::uniform_int_distribution<Coord>(2, 30)(rng);
      e[i] = std::uniform_int_distribution<Coord>(0, m[i] - 1)(rng);
    }
    if (std::all_of(e.begin(), e.end(), [](Coord v) { return v == 0; })) continue;
    const auto brute = oracle::cyclic_brute(m, e, 10000);
    if (brute.words.size() > 10000) continue;
    ++accepted;
    const CyclicCodeSpec spec{m, e};
    const auto dv = derive(spec);
    const std::size_t order = brute.words.size();
    std::string at = "orders";
    for (std::size_t i = 0; i < n; ++i) at += " " + std::to_string(m[i]) + "^" + std::to_string(e[i]);

    // Support sizes over the non-identity codewords.
    std::size_t min_support = n, max_support = 0;
    for (std::size_t k = 1; k < order; ++k) {
      min_support = std::min(min_support, oracle::support_size(brute.words[k]));
      max_support = std::max(max_support, oracle::support_size(brute.words[k]));
    }
    const auto h = min_hamming_distance(dv);
    c.expect(dv.order == order, "order " + at);
    if (order < 2) continue;
    c.expect(h.min == static_cast<Coord>(min_support) && h.max == static_cast<Coord>(max_support),
             "support sizes " + at);

    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (int t = 0; t < 20; ++t) {
      const std::size_t a = pick(rng), b = pick(rng);
      c.expect(codeword_distance(dv, a, b) == oracle::manhattan(brute.words[a], brute.words[b]),
               "distance formula " + at);
    }

    // Pairwise chain, with the hatted coordinates read off the codewords.
    std::vector<Coord> l(n, 0), hat(n, 0);
    Coord lmin = std::numeric_limits<Coord>::max(), delta_upper = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      l[i] = std::gcd(e[i], m[i]);
      hat[i] = m[i] / l[i];
      lmin = std::min(lmin, l[i]);
      delta_upper += m[i] - l[i];
    }
    // Flat copies keep the quadratic scan cheap.
    std::vector<Coord> word(order * n), khat(order * n);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t i = 0; i < n; ++i) {
        word[a * n + i] = brute.words[a][i];
        khat[a * n + i] = l[i] ? brute.words[a][i] / l[i] : 0;
      }
    Coord min_h = std::numeric_limits<Coord>::max(), min_hl = min_h, min_l = min_h, min_hd = min_h,
          min_d = min_h, max_d = 0;
    bool pairwise = true;
    for (std::size_t a = 0; a < order; ++a) {
      const Coord* wa = &word[a * n];
      const Coord* ka = &khat[a * n];
      for (std::size_t b = a + 1; b < order; ++b) {
        const Coord* wb = &word[b * n];
        const Coord* kb = &khat[b * n];
        Coord dh = 0, dl = 0, dd = 0, hdl = 0, hd = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const Coord diff = std::abs(wa[i] - wb[i]);
          const Coord k = std::abs(ka[i] - kb[i]);
          dh += diff != 0;
          dd += diff;
          dl += std::min(diff, m[i] - diff);
          hd += k;
          hdl += std::min(k, hat[i] - k);
        }
        pairwise &= lmin * dh <= lmin * hdl && lmin * hdl <= std::max(dl, lmin * hd) &&
                    std::max(dl, lmin * hd) <= dd && dd <= delta_upper;
        min_h = std::min(min_h, dh);
        min_hl = std::min(min_hl, hdl);
        min_l = std::min(min_l, dl);
        min_hd = std::min(min_hd, hd);
        min_d = std::min(min_d, dd);
        max_d = std::max(max_d, dd);
      }
    }
    c.expect(pairwise, "pairwise chain " + at);
    const auto ch = bound_chain(spec);
    c.expect(ch.holds(), "chain " + at);
    c.expect(ch.l == lmin && ch.d_hamming == min_h && ch.hat_d_lee == min_hl && ch.d_lee == min_l &&
                 ch.hat_d == min_hd && ch.d == min_d && ch.delta == max_d && ch.delta_upper == delta_upper,
             "chain values " + at);
  }
}

// Runs the command line tool and returns (exit status, stdout).
std::pair<int, std::string> shell(const std::string& args) {
  const std::string cmd = std::string(GRIDCODES_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 11
void cli_round_trip(Check& c) {
  using nlohmann::json;
  const auto dir = std::filesystem::temp_directory_path() / "gridcodes_acceptance";
  std::filesystem::create_directories(dir);
  const std::array<std::tuple<std::string, Coord, std::string>, 4> runs{{
      {"5,2", 3, "exact"}, {"6,5", 3, "exact"}, {"4,4,3", 4, "exact"}, {"9,9,9", 5, "greedy"}}};
  for (const auto& [grid, d, mode] : runs) {
    const auto file = (dir / ("code_" + mode + "_" + std::to_string(d) + ".json")).string();
    const std::string search = "search --grid " + grid + " --distance " + std::to_string(d) +
                               " --mode " + mode + " --output " + file;
    const auto [rc, out] = shell(search);
    c.expect(rc == 0, "search exit status for " + grid);
    if (rc != 0) continue;
    const auto found = json::parse(out);
    const auto [rc2, analysed] = shell("analyze --code " + file);
    c.expect(rc2 == 0, "analyze exit status for " + grid);
    if (rc2 != 0) continue;
    const auto a = json::parse(analysed);
    c.expect(a["size"] == found["size"], "round-trip size for " + grid);
    c.expect(a["size"].get<int>() < 2 || a["min_distance"].get<Coord>() >= d,
             "round-trip distance for " + grid);
    std::ifstream in(file);
    const auto saved = json::parse(in);
    c.expect(saved["codewords"] == found["codewords"] && saved["dims"] == found["dims"],
             "written file matches output for " + grid);
    c.expect(shell(search).second == out, "search output not repeatable for " + grid);
    c.expect(shell("analyze --code " + file).second == analysed, "analyze output not repeatable");
  }
  for (const std::string args :
       {"ball-size --grid 9,4,4 --radius 4 --kind gamma", "bounds --grid 10,4,4 --sweep 12",
        "--format csv bounds --grid 5,2 --distance 3", "cyclic --orders 8,8,8,8 --generator 2,2,4,4",
        "--format text ball-size --grid 7,7 --radius 9 --kind eta --verify"}) {
    const auto first = shell(args);
    c.expect(first.first == 0, "exit status for " + args);
    c.expect(shell(args) == first, "output not repeatable for " + args);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t sandwich_nodes = 2'000'000;
  std::size_t only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--sandwich-nodes") sandwich_nodes = std::stoull(argv[i + 1]);
    if (std::string(argv[i]) == "--only") only = std::stoul(argv[i + 1]);
  }

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"minimum ball size regression", eta_regression},
      {"maximum ball size regression", gamma_regression},
      {"extremal centers against brute force", extremality},
      {"bound regression", bound_regression},
      {"bound sandwich around the exact maximum code",
       [&](Check& c) { sandwich(c, sandwich_nodes); }},
      {"perfect code regression", perfect_codes},
      {"integer ball and Lee ball", integer_ball},
      {"ball decompositions partition the ball", decompositions},
      {"cyclic code regression", cyclic_regression},
      {"cyclic code properties", cyclic_properties},
      {"command line determinism and round trip", cli_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (check.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
         << criteria[i].first << " (" << check.summary() << ", " << std::fixed
         << std::setprecision(1) << secs << "s)";
    std::cout << line.str() << std::endl;
    failed += check.passed() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
