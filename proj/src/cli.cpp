#include "lpp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "lpp/census.hpp"
#include "lpp/decomposition.hpp"
#include "lpp/error.hpp"
#include "lpp/graph.hpp"
#include "lpp/permanent.hpp"
#include "lpp/verify.hpp"

namespace lpp::cli {

namespace {

using nlohmann::json;

// Failures the user can fix by changing the command line.
class UsageError : public Error { using Error::Error; };
// Failures caused by the input data itself.
class InputError : public Error { using Error::Error; };

struct GraphSource {
  std::string family;
  std::optional<long> n, a, b, p, q, r;
  std::string spec;
  std::string graph_file;

  void add_to(CLI::App* app, const std::string& suffix = "") {
    if (suffix.empty()) {
      app->add_option("--family", family, "path|cycle|complete|bipartite|lollipop|dumbbell|theta");
      app->add_option("--n", n, "vertex count (path, cycle, complete, lollipop)");
      app->add_option("--a", a, "first part size (bipartite)");
      app->add_option("--b", b, "second part size (bipartite)");
      app->add_option("--p", p, "dumbbell/theta parameter p");
      app->add_option("--q", q, "dumbbell/theta parameter q");
      app->add_option("--r", r, "dumbbell/theta parameter r, lollipop cycle length");
    }
    app->add_option("--spec" + suffix, spec, "family spec such as 'theta(1,1,1) + cycle(3)'");
    app->add_option("--graph" + suffix, graph_file, "graph JSON file {\"n\":..,\"edges\":[[i,j],..]}");
  }

  bool empty() const { return family.empty() && spec.empty() && graph_file.empty(); }
};

struct ResolvedGraph {
  Graph graph;
  std::optional<FamilySpec> spec;
  std::string description;
};

long need(const std::optional<long>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("--family " + family + " requires " + flag);
  return *v;
}

FamilySpec family_from_flags(const GraphSource& s) {
  const std::string& f = s.family;
  if (f == "path") return FamilySpec::path(need(s.n, "--n", f));
  if (f == "cycle") return FamilySpec::cycle(need(s.n, "--n", f));
  if (f == "complete") return FamilySpec::complete(need(s.n, "--n", f));
  if (f == "bipartite" || f == "complete-bipartite" || f == "complete_bipartite") {
    return FamilySpec::complete_bipartite(need(s.a, "--a", f), need(s.b, "--b", f));
  }
  if (f == "lollipop") return FamilySpec::lollipop(need(s.r, "--r", f), need(s.n, "--n", f));
  if (f == "dumbbell") return FamilySpec::dumbbell(need(s.p, "--p", f), need(s.q, "--q", f), need(s.r, "--r", f));
  if (f == "theta") return FamilySpec::theta(need(s.p, "--p", f), need(s.q, "--q", f), need(s.r, "--r", f));
  throw UsageError("unknown family '" + f + "'");
}

ResolvedGraph resolve(const GraphSource& s) {
  const int given = !s.family.empty() + !s.spec.empty() + !s.graph_file.empty();
  if (given != 1) throw UsageError("give exactly one of --family, --spec or --graph");
  ResolvedGraph out;
  if (!s.graph_file.empty()) {
    try {
      out.graph = load_graph_file(s.graph_file);
    } catch (const ParseError& e) {
      throw InputError(s.graph_file + ": " + e.what());
    } catch (const InvalidGraph& e) {
      throw InputError(s.graph_file + ": " + e.what());
    }
    out.description = s.graph_file;
    return out;
  }
  FamilySpec spec;
  try {
    spec = s.spec.empty() ? family_from_flags(s) : parse_family_spec(s.spec);
    spec.validate();
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const InvalidFamilyParams& e) {
    throw UsageError(e.what());
  }
  out.graph = generate(spec);
  out.spec = spec;
  out.description = to_string(spec);
  return out;
}

MatrixKind kind_from(const std::string& text) {
  try {
    return parse_matrix_kind(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

// Decompositions used by the coalescence route.
IntPoly coalescence_route(const ResolvedGraph& g, MatrixKind kind, const PermPolyOptions& opts) {
  if (!g.spec) throw UsageError("the coalescence route needs a family spec, not a graph file");
  const FamilySpec& s = *g.spec;
  const auto [a, b, c] = s.params;
  switch (s.tag) {
    case FamilySpec::Tag::Dumbbell: {
      const Graph lolly = generate(FamilySpec::lollipop(b, b + c + 1));
      return perm_poly_coalescence(generate(FamilySpec::cycle(a)), 0, lolly, lolly.n() - 1, kind, opts);
    }
    case FamilySpec::Tag::Lollipop:
      return perm_poly_coalescence(generate(FamilySpec::cycle(a)), 0, generate(FamilySpec::path(b - a + 1)), 0, kind,
                                   opts);
    case FamilySpec::Tag::Path:
      if (a >= 2) {
        return perm_poly_coalescence(generate(FamilySpec::path(a - 1)), static_cast<Vertex>(a - 2),
                                     generate(FamilySpec::path(2)), 0, kind, opts);
      }
      break;
    default:
      break;
  }
  throw UsageError("no coalescence decomposition for " + g.description +
                   " (supported: dumbbell, lollipop, path with n >= 2)");
}

IntPoly compute_poly(const ResolvedGraph& g, MatrixKind kind, const std::string& route, Vertex vertex,
                     unsigned threads) {
  PermPolyOptions opts;
  opts.threads = threads;
  if (route == "auto" || route == "interpolation") return perm_poly(g.graph, kind, opts);
  if (route == "ryser-poly") {
    opts.route = PolyRoute::RyserPoly;
    return perm_poly(g.graph, kind, opts);
  }
  if (route == "vertex-expansion") {
    if (vertex >= g.graph.n()) throw UsageError("--vertex " + std::to_string(vertex) + " is not a vertex");
    return perm_poly_vertex_expansion(g.graph, vertex, kind, opts);
  }
  return coalescence_route(g, kind, opts);
}

Rational parse_rational(const std::string& text) {
  Rational v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("--eval expects an integer or fraction, got '" + text + "'");
  if (v.get_den() == 0) throw UsageError("--eval denominator is zero");
  v.canonicalize();
  return v;
}

int do_compute(const GraphSource& src, const std::string& kind_text, const std::string& route, Vertex vertex,
               const std::vector<std::string>& evals, bool as_json, unsigned threads, std::ostream& out) {
  const ResolvedGraph g = resolve(src);
  const MatrixKind kind = kind_from(kind_text);
  if ((route == "vertex-expansion" || route == "coalescence") && kind != MatrixKind::Laplacian &&
      kind != MatrixKind::SignlessLaplacian) {
    throw UsageError("route " + route + " needs --kind laplacian or signless");
  }
  std::vector<Rational> points;
  for (const auto& e : evals) points.push_back(parse_rational(e));

  const IntPoly poly = compute_poly(g, kind, route, vertex, threads);
  const std::string route_name = route == "auto" ? "interpolation" : route;
  if (as_json) {
    json evaluations = json::array();
    for (const auto& x : points) evaluations.push_back({{"x", x.get_str()}, {"value", poly.eval(x).get_str()}});
    json j{{"graph", g.description},
           {"n", g.graph.n()},
           {"m", g.graph.m()},
           {"kind", std::string(to_string(kind))},
           {"route", route_name},
           {"coefficients", to_json(poly)},
           {"evaluations", evaluations}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << g.description << " (n=" << g.graph.n() << ", m=" << g.graph.m() << ")\n";
  out << "kind: " << to_string(kind) << "\nroute: " << route_name << '\n';
  out << "pi(x) = " << poly.to_string() << '\n';
  out << "coefficients (constant first): " << to_json(poly).dump() << '\n';
  for (const auto& x : points) out << "pi(" << x.get_str() << ") = " << poly.eval(x).get_str() << '\n';
  return kOk;
}

int do_compare(const GraphSource& first, const GraphSource& second, const std::string& kind_text,
               const std::string& kind2_text, bool as_json, unsigned threads, std::ostream& out) {
  const ResolvedGraph g1 = resolve(first);
  const ResolvedGraph g2 = second.empty() ? g1 : resolve(second);
  const MatrixKind k1 = kind_from(kind_text);
  const MatrixKind k2 = kind2_text.empty() ? k1 : kind_from(kind2_text);
  PermPolyOptions opts;
  opts.threads = threads;
  const IntPoly p1 = perm_poly(g1.graph, k1, opts);
  const IntPoly p2 = perm_poly(g2.graph, k2, opts);
  const bool same = p1 == p2;
  // Index i refers to the coefficient of x^{n-i}, counted from the leading term.
  std::optional<std::size_t> first_diff;
  if (!same) {
    const auto& a = p1.coeffs();
    const auto& b = p2.coeffs();
    if (a.size() == b.size()) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[a.size() - 1 - i] != b[b.size() - 1 - i]) {
          first_diff = i;
          break;
        }
      }
    }
  }
  if (as_json) {
    json j{{"first", g1.description},
           {"first_kind", std::string(to_string(k1))},
           {"second", g2.description},
           {"second_kind", std::string(to_string(k2))},
           {"copermanental", same}};
    if (first_diff) j["first_differing_index"] = *first_diff;
    if (!same && !first_diff) j["degrees_differ"] = true;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "copermanental: " << (same ? "true" : "false") << '\n';
  if (first_diff) {
    const std::size_t n = p1.coeffs().size() - 1;
    out << "first differing index: " << *first_diff << " (coefficient of x^" << n - *first_diff << ")\n";
  } else if (!same) {
    out << "degrees differ: " << p1.degree() << " vs " << p2.degree() << '\n';
  }
  return kOk;
}

int do_verify(const std::string& suite, bool as_json, unsigned threads, std::ostream& out) {
  const SuiteReport report = run_suite(suite, threads);
  if (as_json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "suite " << report.suite << ": " << report.cases << " cases, " << report.failures.size() << " failures\n";
    if (!report.passed()) out << to_json(report).dump(2) << '\n';
  }
  return report.passed() ? kOk : kFailure;
}

int do_census(std::size_t n_min, std::size_t n_max, const std::string& kind_text, bool include_r0,
              const std::string& out_path, bool as_json, unsigned threads, std::ostream& out) {
  CensusOptions opts;
  opts.n_min = n_min;
  opts.n_max = n_max;
  opts.include_r0 = include_r0;
  opts.threads = threads;
  if (kind_text == "both") {
    opts.kinds = {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian};
  } else {
    const MatrixKind k = kind_from(kind_text);
    if (k != MatrixKind::Laplacian && k != MatrixKind::SignlessLaplacian) {
      throw UsageError("census --kind must be laplacian, signless or both");
    }
    opts.kinds = {k};
  }
  CensusReport report;
  try {
    report = run_census(opts);
  } catch (const OutOfRange& e) {
    throw UsageError(e.what());
  }
  if (!out_path.empty()) write_catalog(report, out_path);

  const auto violations = report.theorem_violations(true);
  const auto strict = report.theorem_violations(false);
  if (as_json) {
    json collisions = json::array();
    for (const auto& c : report.collisions) {
      const auto& a = report.records[c.first];
      const auto& b = report.records[c.second];
      collisions.push_back({{"n", a.n}, {"kind", std::string(to_string(a.kind))}, {"first", a.description},
                            {"second", b.description}, {"fingerprint", a.fingerprint}});
    }
    json j{{"n_min", report.n_min},
           {"n_max", report.n_max},
           {"records", report.records.size()},
           {"collisions", collisions},
           {"hash_conflicts", report.hash_conflicts},
           {"theorem_violations", violations.size()},
           {"theorem_violations_without_r0", strict.size()}};
    if (!out_path.empty()) j["catalog"] = out_path;
    out << j.dump(2) << '\n';
  } else {
    out << "census n=" << report.n_min << ".." << report.n_max << ", kinds:";
    for (MatrixKind k : report.kinds) out << ' ' << to_string(k);
    out << "\nrecords: " << report.records.size() << "\ncollisions: " << report.collisions.size() << '\n';
    for (const auto& c : report.collisions) {
      const auto& a = report.records[c.first];
      const auto& b = report.records[c.second];
      out << "  n=" << a.n << ' ' << to_string(a.kind) << ": " << a.description << " ~ " << b.description << '\n';
    }
    out << "hash conflicts: " << report.hash_conflicts << '\n';
    out << "collisions involving a connected dumbbell or theta: " << violations.size()
        << " (without r=0 dumbbells: " << strict.size() << ")\n";
    if (!out_path.empty()) out << "catalog: " << out_path << '\n';
  }
  return report.collisions.empty() && report.hash_conflicts == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian and signless Laplacian permanental polynomials", "lpp"};
  app.require_subcommand(1);
  unsigned threads = 0;
  bool as_json = false;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable output");

  GraphSource src, src2;
  std::string kind = "laplacian", kind2, route = "auto", suite;
  Vertex vertex = 0;
  std::vector<std::string> evals;

  auto* compute = app.add_subcommand("compute", "permanental polynomial of one graph");
  src.add_to(compute);
  compute->add_option("--kind", kind, "laplacian|signless|adjacency|degree")->capture_default_str();
  compute->add_option("--route", route)
      ->check(CLI::IsMember({"auto", "interpolation", "ryser-poly", "vertex-expansion", "coalescence"}))
      ->capture_default_str();
  compute->add_option("--vertex", vertex, "expansion vertex for --route vertex-expansion")->capture_default_str();
  compute->add_option("--eval", evals, "evaluate at x (integer or fraction); repeatable");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));

  GraphSource cmp1, cmp2;
  auto* compare = app.add_subcommand("compare", "test two graphs for equal permanental polynomials");
  cmp1.add_to(compare);
  cmp2.add_to(compare, "2");
  compare->add_option("--kind", kind, "matrix kind of the first graph")->capture_default_str();
  compare->add_option("--kind2", kind2, "matrix kind of the second graph (default: --kind)");

  std::size_t n_min = kCensusMinN, n_max = 12;
  bool include_r0 = false;
  std::string census_kind = "both", out_path;
  auto* census = app.add_subcommand("census", "copermanental census over degree sequence (3,3,2,...,2)");
  census->add_option("--n-min", n_min)->capture_default_str();
  census->add_option("--n-max", n_max)->capture_default_str();
  census->add_option("--kind", census_kind)->check(CLI::IsMember({"laplacian", "signless", "both"}))->capture_default_str();
  census->add_flag("--include-r0", include_r0, "include dumbbells whose cycles are joined by a single edge");
  census->add_option("--out", out_path, "write the JSONL catalog here");

  for (auto* sub : {compute, verify, compare, census}) {
    sub->add_option("--threads", threads, "worker threads (0 = all cores)");
    sub->add_flag("--json", as_json, "machine-readable output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return do_compute(src, kind, route, vertex, evals, as_json, threads, out);
    if (*verify) return do_verify(suite, as_json, threads, out);
    if (*compare) {
      if (cmp1.empty()) throw UsageError("compare needs a first graph");
      return do_compare(cmp1, cmp2, kind, kind2, as_json, threads, out);
    }
    return do_census(n_min, n_max, census_kind, include_r0, out_path, as_json, threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace lpp::cli
