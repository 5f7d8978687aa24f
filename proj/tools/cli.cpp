#include "arx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "arx/bfs.hpp"
#include "arx/bipartite_diameter.hpp"
#include "arx/chordal_bipartite.hpp"
#include "arx/errors.hpp"
#include "arx/generators.hpp"
#include "arx/instrument.hpp"
#include "arx/io.hpp"
#include "arx/k_chromatic.hpp"
#include "arx/planar.hpp"
#include "arx/split.hpp"
#include "arx/verify.hpp"

namespace arx::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Exit statuses.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCertificate = 2;

struct Options {
  std::string in, out, map, log;
  std::string cls, family, property;
  Vertex n = 0;
  bool seed_given = false;
  Seed seed = 0;
  int threads = 1;
  std::int64_t trials = 10000;
  int k = 3;
  double density = 0.5;
  double keep = 0.6;
  bool embedded = false;
  bool exact = false;
  bool colours = false;
  int reps = 5;
};

std::string hex(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << x;
  return s.str();
}

template <class Seq>
std::string join(const Seq& xs) {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) s << ' ';
    s << x;
    first = false;
  }
  return s.str();
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  template <class T>
  Report& operator()(const std::string& key, const T& value) {
    out_ << key << ": " << value << '\n';
    return *this;
  }

 private:
  std::ostream& out_;
};

struct Input {
  std::string text;
  std::string hash;
};

Input read_input(const std::string& path) {
  if (path.empty()) throw InvalidArgument("--in is required");
  Input in{read_file(path), {}};
  in.hash = hex(fnv1a(in.text));
  return in;
}

Graph parse_graph(const Input& in) {
  std::istringstream s(in.text);
  return read_graph(s);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

Seed resolve_seed(Options& o) {
  if (!o.seed_given) {
    std::random_device rd;
    o.seed = (static_cast<Seed>(rd()) << 32) ^ rd();
  }
  return o.seed;
}

void header(Report& r, const std::string& command, const Input& in, const Graph& g) {
  r("command", command)("input_hash", in.hash)("n", g.order())("m", g.size());
}

void verdict_lines(Report& r, const Verdict& v) {
  r("outcome", to_string(v.outcome));
  if (!v.detail.empty()) r("detail", v.detail);
  if (!v.witness.empty()) r("witness", join(v.witness));
  if (!v.radii.empty()) r("radii", join(v.radii));
}

int cmd_gen(Options& o, Report& r) {
  if (o.out.empty()) throw InvalidArgument("--out is required");
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  const Seed seed = resolve_seed(o);
  const std::string& f = o.family;
  std::optional<EmbeddedGraph> plane_graph;
  Graph g;
  if (f == "chordal-bipartite") {
    g = gen_chordal_bipartite(o.n, seed);
  } else if (f == "split") {
    g = gen_split(o.n, o.density, seed).graph;
  } else if (f == "tree") {
    g = random_tree(o.n, seed);
    if (o.embedded) plane_graph = embed_tree(g);
  } else if (f == "connected") {
    g = random_connected(o.n, o.n, seed);
  } else if (f == "kchromatic") {
    g = gen_kchromatic_candidate(o.n, o.k, 0, o.density, seed);
  } else if (f == "apollonian") {
    plane_graph = apollonian(o.n - 3, seed);
  } else if (f == "planar") {
    plane_graph = random_planar(o.n, o.keep, seed);
  } else if (f == "cycle") {
    g = named::cycle(o.n);
    if (o.embedded) plane_graph = plane::cycle(o.n);
  } else if (f == "path") {
    g = named::path(o.n);
    if (o.embedded) plane_graph = embed_tree(g);
  } else if (f == "grid") {
    g = named::grid(o.n, o.n);
    if (o.embedded) plane_graph = plane::grid(o.n, o.n);
  } else if (f == "hypercube") {
    g = named::hypercube(o.n);
  } else {
    throw InvalidArgument("unknown family '" + f + "'");
  }
  std::ofstream out = open_out(o.out);
  if (plane_graph) {
    g = plane_graph->graph();
    write_embedded_graph(out, *plane_graph);
  } else {
    write_graph(out, g);
  }
  r("command", "gen")("family", f)("seed", seed)("n", g.order())("m", g.size())("out", o.out);
  return kOk;
}

int cmd_diam(Options& o, Report& r) {
  Input in = read_input(o.in);
  Graph g = parse_graph(in);
  header(r, "diam", in, g);
  r("class", o.cls);
  const bool randomized = o.cls == "bipartite-retract" || o.cls == "k-chromatic-retract";
  if (randomized) r("seed", resolve_seed(o));
  ops::reset();
  auto t0 = Clock::now();
  if (o.cls == "bipartite-retract") {
    BipartiteDiameterOptions opts;
    opts.sampling.force_all = o.exact;
    opts.sampling.threads = o.threads;
    auto res = diameter_absolute_bipartite(g, o.seed, opts);
    double ms = ms_since(t0);
    const char* regime = res.regime == Regime::kTrivial ? "trivial" : res.regime == Regime::kSmall ? "small" : "sampling";
    r("diameter", res.diameter)("regime", regime)("approximation", res.approximation);
    r("time_ms", fixed(ms))("ops", ops::read());
  } else if (o.cls == "k-chromatic-retract") {
    KChromaticOptions opts;
    opts.sampling.force_all = o.exact;
    opts.sampling.threads = o.threads;
    auto res = diameter_k_chromatic_detail(g, o.seed, opts);
    double ms = ms_since(t0);
    r("diameter", res.diameter)("k", res.coloured.k);
    if (o.colours) r("colors", join(res.coloured.colour));
    r("time_ms", fixed(ms))("ops", ops::read());
  } else if (o.cls == "split") {
    int d = split_diameter(g);
    r("diameter", d)("time_ms", fixed(ms_since(t0)))("ops", ops::read());
  } else if (o.cls == "oracle") {
    int d = diameter_oracle(g);
    r("diameter", d)("time_ms", fixed(ms_since(t0)));
  } else {
    throw InvalidArgument("unknown class '" + o.cls + "'");
  }
  return kOk;
}

int cmd_ecc(Options& o, Report& r) {
  Input in = read_input(o.in);
  Graph g = parse_graph(in);
  header(r, "ecc", in, g);
  r("class", o.cls);
  ops::reset();
  auto t0 = Clock::now();
  std::vector<int> ecc;
  if (o.cls == "chordal-bipartite") {
    ecc = all_eccentricities_chordal_bipartite(g);
  } else if (o.cls == "oracle") {
    ecc = eccentricities_oracle(g);
  } else {
    throw InvalidArgument("unknown class '" + o.cls + "'");
  }
  double ms = ms_since(t0);
  r("radius", *std::min_element(ecc.begin(), ecc.end()))("diameter", *std::max_element(ecc.begin(), ecc.end()));
  r("ecc", join(ecc))("time_ms", fixed(ms));
  if (o.cls != "oracle") r("ops", ops::read());
  if (!o.out.empty()) {
    std::ofstream out = open_out(o.out);
    for (int e : ecc) out << e << '\n';
  }
  return kOk;
}

int cmd_check(Options& o, Report& r) {
  Input in = read_input(o.in);
  std::istringstream s(in.text);
  const std::string& p = o.property;
  Verdict v;
  if (p == "planar-retract") {
    EmbeddedGraph e = read_embedded_graph(s);
    header(r, "check", in, e.graph());
    r("property", p);
    v = check_planar_retract(e);
  } else if (p == "kchrom-characterization") {
    ColoredInput ci = read_colored_graph(s);
    header(r, "check", in, ci.graph);
    r("property", p);
    ColoredGraph cg = ci.colour.empty() ? color_absolute_retract(ci.graph) : ColoredGraph::make(ci.graph, ci.colour);
    CharacterizationOptions opts;
    opts.budget = static_cast<int>(std::min<std::int64_t>(o.trials, 1 << 30));
    opts.seed = resolve_seed(o);
    r("seed", opts.seed)("k", cg.k);
    v = check_characterization(cg, opts);
  } else {
    Graph g = read_graph(s);
    header(r, "check", in, g);
    r("property", p);
    if (p == "half-ball-helly") {
      HalfBallOptions opts;
      opts.trials = o.trials;
      opts.seed = resolve_seed(o);
      r("seed", opts.seed);
      v = half_ball_helly_sample(g, opts);
    } else if (p == "helly") {
      v = is_helly_small(g);
    } else if (p == "chordal-bipartite") {
      v = is_chordal_bipartite_small(g);
    } else if (p == "split-retract") {
      SplitPartition part = split_partition(g);
      v = part.unique() ? Verdict::pass()
                        : Verdict::fail("clique/stable partition is not unique (case " + std::to_string(part.tag) + ")", {});
    } else {
      throw InvalidArgument("unknown property '" + p + "'");
    }
  }
  verdict_lines(r, v);
  return v.ok() ? kOk : kCertificate;
}

int cmd_reduce_split(Options& o, Report& r) {
  if (o.out.empty()) throw InvalidArgument("--out is required");
  Input in = read_input(o.in);
  Graph g = parse_graph(in);
  header(r, "reduce-split", in, g);
  ops::reset();
  auto t0 = Clock::now();
  PruneResult res = prune_to_retract(g);
  double ms = ms_since(t0);
  std::ofstream out = open_out(o.out);
  write_graph(out, res.graph);
  if (!o.log.empty()) {
    std::ofstream log = open_out(o.log);
    for (Vertex v : res.removed) log << v << '\n';
  }
  r("removed", res.removed.size())("kept", join(res.kept))("time_ms", fixed(ms))("ops", ops::read());
  return kOk;
}

int cmd_planar_embed(Options& o, Report& r) {
  if (o.out.empty()) throw InvalidArgument("--out is required");
  Input in = read_input(o.in);
  std::istringstream s(in.text);
  EmbeddedGraph e = read_embedded_graph(s);
  header(r, "planar-embed", in, e.graph());
  auto t0 = Clock::now();
  PlanarEmbedding res = embed_into_retract(e);
  double ms = ms_since(t0);
  std::ofstream out = open_out(o.out);
  write_embedded_graph(out, res.graph);
  if (!o.map.empty()) {
    std::ofstream map = open_out(o.map);
    for (std::size_t u = 0; u < res.map.image.size(); ++u) map << u << ' ' << res.map.image[u] << '\n';
  }
  for (const auto& st : res.map.stages) {
    r("stage", st.name + " n=" + std::to_string(st.order) + " m=" + std::to_string(st.size) + " f=" + std::to_string(st.faces));
  }
  r("output_n", res.graph.order())("output_m", res.graph.size())("time_ms", fixed(ms));
  return kOk;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

int cmd_bench(Options& o, Report& r) {
  const Seed seed = resolve_seed(o);
  const Vertex top = o.n > 0 ? o.n : 4096;
  std::function<Graph(Vertex, Seed)> make;
  std::function<std::vector<int>(const Graph&)> algo;  // single value for diameter classes
  std::function<std::vector<int>(const Graph&)> oracle;
  const std::string& c = o.cls;
  if (c == "bipartite-retract") {
    make = [](Vertex n, Seed s) { return gen_chordal_bipartite(n, s); };
    algo = [&](const Graph& g) { return std::vector<int>{diameter_absolute_bipartite(g, seed).diameter}; };
    oracle = [](const Graph& g) { return std::vector<int>{diameter_oracle(g)}; };
  } else if (c == "chordal-bipartite") {
    make = [](Vertex n, Seed s) { return gen_chordal_bipartite(n, s); };
    algo = [](const Graph& g) { return all_eccentricities_chordal_bipartite(g); };
    oracle = [](const Graph& g) { return eccentricities_oracle(g); };
  } else if (c == "k-chromatic-retract") {
    make = [&](Vertex n, Seed s) { return gen_kchromatic_candidate(std::max<Vertex>(1, n / o.k), o.k, 0, o.density, s); };
    algo = [&](const Graph& g) { return std::vector<int>{diameter_k_chromatic(g, seed)}; };
    oracle = [](const Graph& g) { return std::vector<int>{diameter_oracle(g)}; };
  } else if (c == "split") {
    make = [&](Vertex n, Seed s) { return gen_split(n, o.density, s).graph; };
    algo = [](const Graph& g) { return std::vector<int>{split_diameter(g)}; };
    oracle = [](const Graph& g) { return std::vector<int>{diameter_oracle(g)}; };
  } else {
    throw InvalidArgument("unknown class '" + c + "'");
  }
  r("command", "bench")("class", c)("seed", seed)("reps", o.reps);
  r("columns", "n m algo_ms oracle_ms ops match");
  const int reps = std::max(1, o.reps);
  for (Vertex size = std::min<Vertex>(256, top); size <= top; size *= 2) {
    Graph g = make(size, mix64(seed + static_cast<Seed>(size)));
    std::vector<double> at, ot;
    std::vector<int> value, reference;
    std::uint64_t work = 0;
    algo(g);  // warm-up
    for (int i = 0; i < reps; ++i) {
      ops::reset();
      auto t0 = Clock::now();
      value = algo(g);
      at.push_back(ms_since(t0));
      work = ops::read();
    }
    // The O(nm) oracle is skipped on large inputs.
    const bool run_oracle = static_cast<double>(g.order()) * static_cast<double>(g.size()) <= 5e9;
    if (run_oracle) {
      oracle(g);
      for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        reference = oracle(g);
        ot.push_back(ms_since(t0));
      }
    }
    r("row", std::to_string(g.order()) + ' ' + std::to_string(g.size()) + ' ' + fixed(median(at)) + ' ' +
                 (run_oracle ? fixed(median(ot)) : "-") + ' ' + std::to_string(work) + ' ' +
                 (run_oracle ? (value == reference ? "yes" : "no") : "-"));
    if (size > top / 2) break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameters and eccentricities of absolute retracts", "arx"};
  app.require_subcommand(1);
  Options o;
  std::optional<Seed> seed;

  auto add_in = [&](CLI::App* s) { s->add_option("--in", o.in, "input file")->required(); };
  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", seed, "random seed (generated and printed if absent)"); };

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--family", o.family, "chordal-bipartite|split|tree|connected|kchromatic|apollonian|planar|cycle|path|grid|hypercube")
      ->required();
  gen->add_option("--n", o.n, "size parameter")->required();
  gen->add_option("--out", o.out, "output file")->required();
  gen->add_option("--k", o.k, "number of colours (kchromatic)");
  gen->add_option("--density", o.density, "edge density (split, kchromatic)");
  gen->add_option("--keep", o.keep, "edge keep probability (planar)");
  gen->add_flag("--embedded", o.embedded, "write a rotation system when the family has one");
  add_seed(gen);

  auto* diam = app.add_subcommand("diam", "diameter of a graph");
  add_in(diam);
  diam->add_option("--class", o.cls)
      ->required()
      ->check(CLI::IsMember({"bipartite-retract", "k-chromatic-retract", "split", "oracle"}));
  diam->add_flag("--exact", o.exact, "sample every vertex (p = 1)");
  diam->add_flag("--colors", o.colours, "print the computed colouring (k-chromatic-retract)");
  diam->add_option("--threads", o.threads, "worker threads for sampling");
  add_seed(diam);

  auto* ecc = app.add_subcommand("ecc", "all eccentricities");
  add_in(ecc);
  ecc->add_option("--class", o.cls)->required()->check(CLI::IsMember({"chordal-bipartite", "oracle"}));
  ecc->add_option("--out", o.out, "write one eccentricity per line");

  auto* check = app.add_subcommand("check", "class-membership and property checks");
  add_in(check);
  check->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember({"half-ball-helly", "helly", "chordal-bipartite", "planar-retract", "split-retract",
                             "kchrom-characterization"}));
  check->add_option("--trials", o.trials, "sampled families");
  add_seed(check);

  auto* reduce = app.add_subcommand("reduce-split", "prune a split graph to an absolute split retract");
  add_in(reduce);
  reduce->add_option("--out", o.out, "pruned graph")->required();
  reduce->add_option("--log", o.log, "removal order, one vertex per line");

  auto* embed = app.add_subcommand("planar-embed", "embed a planar graph isometrically into an absolute planar retract");
  add_in(embed);
  embed->add_option("--out", o.out, "output embedded graph")->required();
  embed->add_option("--map", o.map, "vertex map, lines 'input output'");

  auto* bench = app.add_subcommand("bench", "timing against the oracle over doubling sizes");
  bench->add_option("--class", o.cls)
      ->required()
      ->check(CLI::IsMember({"bipartite-retract", "chordal-bipartite", "k-chromatic-retract", "split"}));
  bench->add_option("--n", o.n, "largest size (default 4096)");
  bench->add_option("--reps", o.reps, "timed repetitions; the median is reported");
  bench->add_option("--k", o.k, "colours for k-chromatic-retract");
  bench->add_option("--density", o.density, "density for generated inputs");
  add_seed(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (seed) {
    o.seed = *seed;
    o.seed_given = true;
  }

  Report r(out);
  try {
    if (*gen) return cmd_gen(o, r);
    if (*diam) return cmd_diam(o, r);
    if (*ecc) return cmd_ecc(o, r);
    if (*check) return cmd_check(o, r);
    if (*reduce) return cmd_reduce_split(o, r);
    if (*embed) return cmd_planar_embed(o, r);
    if (*bench) return cmd_bench(o, r);
  } catch (const Certificate& c) {
    r("status", "certificate")("certificate", c.kind())("detail", c.detail());
    if (!c.witness().empty()) r("witness", join(c.witness()));
    return kCertificate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace arx::cli
