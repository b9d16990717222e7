// Command-line front end: construct the families, analyze stored graphs,
// run the named claim checks, and drive the random deletion experiment.
// Reports are JSON lines on standard output (stable key order, the
// wall_ms manifest field is the only run-varying value); human summaries
// go to standard error.  Exit code 0 iff every requested check passed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "girthlab/analysis.hpp"
#include "girthlab/claims.hpp"
#include "girthlab/dseries.hpp"
#include "girthlab/field.hpp"
#include "girthlab/gdel.hpp"
#include "girthlab/geometry.hpp"
#include "girthlab/graph.hpp"
#include "girthlab/symmetry.hpp"

#ifndef GIRTHLAB_VERSION
#define GIRTHLAB_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace girthlab;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json field_json(const Field& F) {
  json j;
  j["p"] = F.p();
  j["n"] = F.n();
  j["q"] = F.q();
  j["modulus"] = F.modulus();
  return j;
}

json make_manifest(const std::string& command, json parameters) {
  json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["version"] = GIRTHLAB_VERSION;
  return m;
}

void emit(json report, json manifest, Clock::time_point t0) {
  manifest["wall_ms"] = ms_since(t0);
  report["manifest"] = std::move(manifest);
  std::cout << report.dump() << "\n";
}

json value_json(const std::string& s) {
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
      s.size() <= 19)
    return json(std::stoull(s));
  return json(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Scalar> parse_coords(const std::string& s, uint32_t q) {
  std::vector<Scalar> v;
  for (const std::string& t : split(s, ',')) {
    long x = std::stol(t);
    if (x < 0 || uint64_t(x) >= q)
      throw std::invalid_argument("coordinate out of range: " + t);
    v.push_back(Scalar(x));
  }
  return v;
}

// line-side coordinates of the arc graph, as a Wenger vertex id
std::vector<uint32_t> arc_wenger_vertex_map(const Graph& Ga, int k,
                                            const Field& F) {
  const uint32_t N = Ga.part_sizes[0];
  const int npts = k + 1;
  std::vector<uint32_t> map(Ga.num_vertices());
  std::iota(map.begin(), map.begin() + N, 0);
  for (uint32_t j = 0; j < Ga.part_sizes[1]; ++j) {
    auto lab = Ga.label(N + j);
    std::vector<Scalar> S(npts), P(npts);
    for (int t = 0; t < npts; ++t) {
      S[t] = Scalar(lab[t]);
      P[t] = Scalar(lab[npts + t]);
    }
    map[N + j] =
        N + uint32_t(encode_tuple(arc_to_wenger_map(S, P, k, F), F.q()));
  }
  return map;
}

struct ConstructArgs {
  std::string family;
  int k = 0, t = 0, r = 0, s = 1;
  std::string q;
  std::string arc_kind = "nrc";
  std::string out = "-";
};

int cmd_construct(const ConstructArgs& a, Clock::time_point t0) {
  json params = {{"family", a.family}, {"out", a.out}};
  std::optional<Field> F;
  if (!a.q.empty()) F = parse_field(a.q);
  if (a.r > 0) {
    if (F && (F->p() != 2 || F->n() != a.r))
      throw std::invalid_argument("--r disagrees with --q");
    if (!F) F = Field::make(2, a.r);
    params["r"] = a.r;
  }
  if (!F) throw std::invalid_argument("need --q (or --r for g2rs)");
  params["field"] = field_json(*F);

  std::ostringstream body;
  json stats;
  if (a.family == "D" || a.family == "Dprime") {
    if (a.k < 2) throw std::invalid_argument("--k must be >= 2");
    params["k"] = a.k;
    DFamily fam = a.family == "D" ? DFamily::D : DFamily::Dprime;
    Graph G = build_bipartite(fam, a.k, *F);
    serialize(G, body);
    stats = {{"vertices", G.num_vertices()}, {"edges", G.num_edges()}};
  } else if (a.family == "D3") {
    if (a.k < 2) throw std::invalid_argument("--k must be >= 2");
    params["k"] = a.k;
    TripleSystem H = build_triple_system(a.k, *F);
    serialize(H, body);
    stats = {{"vertices", H.num_vertices()}, {"hyperedges", H.num_edges()}};
  } else if (a.family == "wenger") {
    if (a.k < 2) throw std::invalid_argument("--k must be >= 2");
    params["k"] = a.k;
    Graph G = build_wenger(a.k, *F);
    serialize(G, body);
    stats = {{"vertices", G.num_vertices()}, {"edges", G.num_edges()}};
  } else if (a.family == "g2rs") {
    params["s"] = a.s;
    Graph G = build_g2rs(*F, a.s);
    serialize(G, body);
    stats = {{"vertices", G.num_vertices()}, {"edges", G.num_edges()}};
  } else if (a.family == "arc") {
    int t = a.t ? a.t : 3;
    params["t"] = t;
    params["arc"] = a.arc_kind;
    std::vector<std::vector<Scalar>> arc;
    if (a.arc_kind == "nrc")
      arc = nrc_arc(t, *F, true);
    else if (a.arc_kind == "nrc-")
      arc = nrc_arc(t, *F, false);
    else if (a.arc_kind == "frobenius") {
      params["s"] = a.s;
      arc = frobenius_arc(*F, a.s);
      if (t != 3) throw std::invalid_argument("frobenius arcs live in t=3");
    } else {
      throw std::invalid_argument("unknown arc kind: " + a.arc_kind);
    }
    if (!is_arc(arc, t, *F)) throw std::runtime_error("point set is not an arc");
    Graph G = build_arc_graph(t, *F, arc);
    serialize(G, body);
    stats = {{"vertices", G.num_vertices()},
             {"edges", G.num_edges()},
             {"arc_points", arc.size()}};
  } else {
    throw std::invalid_argument("unknown family: " + a.family);
  }

  std::string text = body.str();
  if (a.out == "-") {
    // edge list owns standard output; no JSON line in this mode
    std::cout << text;
    std::cerr << "constructed " << a.family << ": " << stats.dump() << "\n";
    return 0;
  }
  std::ofstream f(a.out);
  if (!f) throw std::runtime_error("cannot open " + a.out);
  f << text;
  f.close();
  json report;
  report["construct"] = stats;
  report["path"] = a.out;
  emit(std::move(report), make_manifest("construct", params), t0);
  std::cerr << "constructed " << a.family << " -> " << a.out << ": "
            << stats.dump() << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string in;
  bool do_girth = false, do_diameter = false, do_signature = false;
  uint32_t cap = 0;
  std::string cycles;
  int suspension = 0;
};

int cmd_analyze(const AnalyzeArgs& a, Clock::time_point t0) {
  json params = {{"in", a.in}};
  Deserialized D;
  if (a.in == "-") {
    D = deserialize(std::cin);
  } else {
    std::ifstream f(a.in);
    if (!f) throw std::runtime_error("cannot open " + a.in);
    D = deserialize(f);
  }
  json report;
  bool pass = true;
  std::ostringstream human;

  if (D.graph) {
    const Graph& G = *D.graph;
    if (a.suspension)
      throw std::invalid_argument("--suspension needs a triple system");
    if (a.do_girth) {
      params["girth"] = true;
      if (a.cap) params["cap"] = a.cap;
      GirthResult g = girth(G, a.cap);
      if (g.exact && g.value == UINT32_MAX) {
        report["girth"] = "infinite";
        human << "girth: infinite (acyclic); ";
      } else {
        report["girth"] = g.value;
        report["girth_exact"] = g.exact;
        human << "girth" << (g.exact ? ": " : " >= ") << g.value << "; ";
      }
    }
    if (a.do_diameter) {
      params["diameter"] = true;
      Component comp = component_of(G, 0);
      uint32_t d = diameter(comp.graph);
      report["diameter"] = d;
      report["component_vertices"] = comp.graph.num_vertices();
      human << "diameter of the base component: " << d << " ("
            << comp.graph.num_vertices() << " vertices); ";
    }
    if (!a.cycles.empty()) {
      params["cycles"] = a.cycles;
      auto f = split(a.cycles, ',');
      if (f.size() != 3) throw std::invalid_argument("--cycles wants u,v,L");
      uint32_t u = uint32_t(std::stoul(f[0]));
      uint32_t v = uint32_t(std::stoul(f[1]));
      if (G.num_parts == 2) v += G.part_begin(1);
      if (!G.has_edge(u, v))
        throw std::invalid_argument("--cycles: {u,v} is not an edge");
      uint32_t L;
      if (f[2] == "auto") {
        L = min_cycle_through_edge(G, u, v);
        if (!L) throw std::runtime_error("edge lies on no cycle");
      } else {
        L = uint32_t(std::stoul(f[2]));
      }
      uint64_t cnt = cycles_through_edge(G, u, v, L);
      report["cycles"] = {{"u", u}, {"v", v}, {"L", L}, {"count", cnt}};
      human << "cycles of length " << L << " through {" << u << "," << v
            << "}: " << cnt << "; ";
    }
    if (a.do_signature) {
      params["signature"] = true;
      InvariantSignature sig = signature(G, a.cap);
      json degrees = json::array();
      for (auto& [d, c] : sig.degrees) degrees.push_back({d, c});
      report["signature"] = {
          {"part_sizes", sig.part_sizes},
          {"degrees", degrees},
          {"girth", sig.girth_value},
          {"girth_exact", sig.girth_exact},
          {"diameter_of_base_component", sig.diameter_of_base_component},
          {"min_cycle_through_base_edge", sig.min_cycle_through_base_edge},
          {"cycles_at_min_length", sig.cycles_at_min_length}};
      human << "signature: " << sig.to_string() << "; ";
    }
  } else {
    const TripleSystem& H = *D.triples;
    if (a.do_girth || a.do_diameter || !a.cycles.empty() || a.do_signature)
      throw std::invalid_argument(
          "graph analyses need a graph input (got a triple system)");
    if (a.suspension) {
      params["suspension"] = a.suspension;
      SuspensionWitness w = is_suspension_free(H, a.suspension);
      report["suspension_free"] = w.free;
      if (!w.free) {
        report["witness"] = {{"apex", w.apex}, {"cycle", w.cycle}};
        pass = false;
      }
      human << "suspension-free (k=" << a.suspension
            << "): " << (w.free ? "yes" : "no") << "; ";
    }
  }
  emit(std::move(report), make_manifest("analyze", params), t0);
  std::cerr << human.str() << (pass ? "ok" : "CHECK FAILED") << "\n";
  return pass ? 0 : 1;
}

struct VerifyArgs {
  std::string id;
  ClaimOptions opts;
  std::vector<uint32_t> ns;
  std::vector<uint64_t> seeds;
  int k = -1, r = -1, s = -1;
  std::string q, c;
};

int cmd_verify(VerifyArgs& a, Clock::time_point) {
  if (a.k >= 0) a.opts.k = a.k;
  if (a.r >= 0) a.opts.r = a.r;
  if (a.s >= 0) a.opts.s = a.s;
  if (!a.q.empty()) a.opts.q = a.q;
  if (!a.c.empty()) a.opts.c = a.c;
  if (!a.ns.empty()) a.opts.ns = a.ns;
  if (!a.seeds.empty()) a.opts.seeds = a.seeds;

  std::vector<std::string> ids =
      a.id == "all" ? claim_ids() : std::vector<std::string>{a.id};
  bool all_pass = true;
  for (const std::string& id : ids) {
    auto t0 = Clock::now();
    ClaimResult res = run_claim(id, a.opts);
    all_pass = all_pass && res.pass;
    json params = {{"claim", id}};
    if (a.opts.k) params["k"] = *a.opts.k;
    if (a.opts.q) params["q"] = *a.opts.q;
    if (a.opts.r) params["r"] = *a.opts.r;
    if (a.opts.s) params["s"] = *a.opts.s;
    json report;
    report["claim"] = id;
    report["pass"] = res.pass;
    json values;
    for (auto& [key, val] : res.values) values[key] = value_json(val);
    report["values"] = std::move(values);
    report["detail"] = res.lines;
    emit(std::move(report), make_manifest("verify", params), t0);
    std::cerr << "claim " << id << ": " << (res.pass ? "PASS" : "FAIL")
              << "\n";
    for (const std::string& line : res.lines)
      if (!res.pass || line.rfind("FAIL", 0) == 0)
        std::cerr << "  " << line << "\n";
  }
  return all_pass ? 0 : 1;
}

struct DeleteArgs {
  uint32_t n = 0;
  int k = 2;
  uint64_t seed = 0;
  std::string c = "0.5";
  std::string out;
};

int cmd_random_delete(const DeleteArgs& a, Clock::time_point t0) {
  RationalPower rate{parse_rational(a.c), -(2 * int64_t(a.k) - 2),
                     2 * int64_t(a.k) - 1};
  TripleSystem survivor;
  DeletionReport rep =
      deletion_experiment(a.n, a.k, rate, a.seed,
                          a.out.empty() ? nullptr : &survivor);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot open " + a.out);
    serialize(survivor, f);
  }
  json params = {{"n", a.n}, {"k", a.k}, {"c", a.c}};
  json manifest = make_manifest("random-delete", params);
  manifest["seed"] = a.seed;
  json report;
  report["random_delete"] = {
      {"threshold", rep.threshold},
      {"p", rep.p.str()},
      {"initial_edges", rep.initial_edges},
      {"deleted_edges", rep.deleted_edges},
      {"final_edges", rep.final_edges},
      {"expected_initial", rep.expected_initial.convert_to<double>()},
      {"expected_final_lb", rep.expected_final_lb.convert_to<double>()},
      {"suspension_free", rep.suspension_free}};
  if (!a.out.empty()) report["path"] = a.out;
  emit(std::move(report), std::move(manifest), t0);
  std::cerr << "n=" << a.n << " seed=" << a.seed << ": kept "
            << rep.final_edges << " of " << rep.initial_edges
            << " hyperedges, suspension-free: "
            << (rep.suspension_free ? "yes" : "no") << "\n";
  return rep.suspension_free ? 0 : 1;
}

struct NormalizeArgs {
  std::string q, coords;
  int k = 0, s = 0;
};

int cmd_normalize(const NormalizeArgs& a, Clock::time_point t0) {
  Field F = parse_field(a.q);
  if (F.characteristic() != 3)
    throw std::invalid_argument("normalization is defined in characteristic 3");
  std::vector<Scalar> coords = parse_coords(a.coords, F.q());
  int k = a.k ? a.k : int(coords.size());
  if (int(coords.size()) != k)
    throw std::invalid_argument("--coords length disagrees with --k");
  int s = a.s ? a.s : k - 1;
  NormalizeResult nr = normalize_vertex(coords, s, F);
  bool zeroed = true;
  for (int p = 2; p <= s + 1; ++p) zeroed = zeroed && nr.image[p - 1] == 0;
  uint64_t sample = 1;
  for (int i = 0; i < 2 * k + 1 && sample <= 1000000; ++i) sample *= F.q();
  AutoCheckReport rep =
      verify_auto(nr.chain, k, F, sample <= 1000000 ? 0 : 20000);
  json params = {{"q", a.q}, {"k", k}, {"s", s}, {"coords", a.coords}};
  json report;
  report["normalize"] = {{"chain", print_chain(nr.chain)},
                         {"image", nr.image},
                         {"zeroed", zeroed},
                         {"chain_verified", rep.ok},
                         {"checks", rep.checked}};
  emit(std::move(report), make_manifest("normalize", params), t0);
  std::cerr << "chain " << print_chain(nr.chain) << ", zeroed positions 2.."
            << s + 1 << ": " << (zeroed ? "yes" : "no") << ", verified: "
            << (rep.ok ? "yes" : "no") << "\n";
  return zeroed && rep.ok ? 0 : 1;
}

struct IsoArgs {
  std::string map, q;
  int k = 3, r = 3;
};

int cmd_isocheck(const IsoArgs& a, Clock::time_point t0) {
  json params = {{"map", a.map}};
  IsoReport rep;
  uint64_t edges = 0;
  if (a.map == "table2") {
    Field F = parse_field(a.q.empty() ? "3" : a.q);
    params["k"] = a.k;
    params["field"] = field_json(F);
    Graph Dk = build_bipartite(DFamily::D, a.k, F);
    Graph Dp = build_bipartite(DFamily::Dprime, a.k, F);
    rep = verify_iso_map(Dp, Dk, coordinate_bijection(Dp, Dk, a.k, F,
                                                      &table2_map));
    edges = Dp.num_edges();
  } else if (a.map == "arc-wenger") {
    Field F = parse_field(a.q.empty() ? "3" : a.q);
    params["k"] = a.k;
    params["field"] = field_json(F);
    Graph Ga = build_arc_graph(a.k, F, nrc_arc(a.k, F, false));
    Graph Hw = build_wenger(a.k, F);
    rep = verify_iso_map(Ga, Hw, arc_wenger_vertex_map(Ga, a.k, F));
    edges = Ga.num_edges();
  } else if (a.map == "g2rs-wenger") {
    Field F = Field::make(2, a.r);
    params["r"] = a.r;
    params["field"] = field_json(F);
    Graph G1 = build_g2rs(F, 1);
    Graph Hw = build_wenger(3, F);
    std::vector<uint32_t> id(G1.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    rep = verify_iso_map(G1, Hw, id);
    edges = G1.num_edges();
  } else {
    throw std::invalid_argument("unknown map: " + a.map);
  }
  json report;
  report["isocheck"] = {{"map", a.map}, {"pass", rep.ok}, {"edges", edges}};
  if (!rep.ok) report["isocheck"]["error"] = rep.error;
  emit(std::move(report), make_manifest("isocheck", params), t0);
  std::cerr << "isocheck " << a.map << ": " << (rep.ok ? "PASS" : "FAIL")
            << (rep.ok ? "" : " " + rep.error) << "\n";
  return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"girthlab: exact algebraic graph families and structural checks"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: all cores)");

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "build a family member");
  construct->fallthrough();
  construct->add_option("--family", ca.family,
                        "D|Dprime|D3|wenger|g2rs|arc")->required();
  construct->add_option("--k", ca.k, "coordinate length");
  construct->add_option("--t", ca.t, "projective dimension (arc)");
  construct->add_option("--r", ca.r, "extension degree over GF(2) (g2rs)");
  construct->add_option("--q", ca.q, "field: prime power or p^n:c0,c1,...");
  construct->add_option("--s", ca.s, "Frobenius parameter");
  construct->add_option("--arc", ca.arc_kind, "nrc|nrc-|frobenius");
  construct->add_option("-o,--out", ca.out, "output path, - for stdout");

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "measure a stored graph");
  analyze->fallthrough();
  analyze->add_option("--in", aa.in, "edge-list path, - for stdin")->required();
  analyze->add_flag("--girth", aa.do_girth, "exact girth");
  analyze->add_option("--cap", aa.cap, "girth cap (0 = uncapped)");
  analyze->add_flag("--diameter", aa.do_diameter,
                    "diameter of the base component");
  analyze->add_option("--cycles", aa.cycles,
                      "u,v,L: cycles of length L through the edge (L=auto for "
                      "the minimum)");
  analyze->add_flag("--signature", aa.do_signature, "invariant signature");
  analyze->add_option("--suspension", aa.suspension,
                      "check suspension-freeness for this k");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a named claim check");
  verify->fallthrough();
  verify->add_option("claim", va.id, "claim id or 'all'")->required();
  verify->add_option("--k", va.k, "narrow to one k");
  verify->add_option("--q", va.q, "narrow to one field");
  verify->add_option("--r", va.r, "narrow to one extension degree");
  verify->add_option("--s", va.s, "narrow to one Frobenius parameter");
  verify->add_option("--n", va.ns, "deletion sizes");
  verify->add_option("--seed", va.seeds, "deletion seeds");
  verify->add_option("--c", va.c, "deletion rate coefficient");

  DeleteArgs da;
  CLI::App* rdel = app.add_subcommand("random-delete",
                                      "sample G3(n,p) and delete short "
                                      "suspended cycles");
  rdel->fallthrough();
  rdel->add_option("--n", da.n, "vertex count")->required();
  rdel->add_option("--k", da.k, "forbidden suspended cycle length 2k")
      ->required();
  rdel->add_option("--seed", da.seed, "sampler seed")->required();
  rdel->add_option("--c", da.c, "rate coefficient for c*n^(-(2k-2)/(2k-1))");
  rdel->add_option("-o,--out", da.out, "write the surviving system here");

  NormalizeArgs na;
  CLI::App* normalize = app.add_subcommand(
      "normalize", "zero leading coordinates by the triangular generators");
  normalize->fallthrough();
  normalize->add_option("--q", na.q, "field (characteristic 3)")->required();
  normalize->add_option("--k", na.k, "coordinate length");
  normalize->add_option("--coords", na.coords, "c1,c2,...,ck")->required();
  normalize->add_option("--s", na.s, "zero positions 2..s+1 (default k-1)");

  IsoArgs ia;
  CLI::App* isocheck =
      app.add_subcommand("isocheck", "verify one of the explicit bijections");
  isocheck->fallthrough();
  isocheck->add_option("--map", ia.map, "table2|arc-wenger|g2rs-wenger")
      ->required();
  isocheck->add_option("--k", ia.k, "coordinate length");
  isocheck->add_option("--q", ia.q, "field");
  isocheck->add_option("--r", ia.r, "extension degree over GF(2)");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_threads(threads);

  auto t0 = Clock::now();
  try {
    if (construct->parsed()) return cmd_construct(ca, t0);
    if (analyze->parsed()) return cmd_analyze(aa, t0);
    if (verify->parsed()) return cmd_verify(va, t0);
    if (rdel->parsed()) return cmd_random_delete(da, t0);
    if (normalize->parsed()) return cmd_normalize(na, t0);
    if (isocheck->parsed()) return cmd_isocheck(ia, t0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
