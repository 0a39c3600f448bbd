#include "lpp/verify.hpp"

#include <functional>
#include <optional>

#include "lpp/closed_forms.hpp"
#include "lpp/decomposition.hpp"
#include "lpp/error.hpp"
#include "lpp/expansion.hpp"
#include "lpp/parallel.hpp"
#include "lpp/permanent.hpp"

namespace lpp {

namespace {

constexpr MatrixKind kKinds[] = {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian};

std::string label(const FamilySpec& spec, MatrixKind kind) {
  return to_string(spec) + " " + std::string(to_string(kind));
}

// One slot of failures per case keeps the report independent of scheduling.
struct Collector {
  std::vector<std::vector<SuiteFailure>> slots;

  explicit Collector(std::size_t cases) : slots(cases) {}

  void check(std::size_t slot, bool ok, std::string name, std::string expected, std::string got) {
    if (!ok) slots[slot].push_back({std::move(name), std::move(expected), std::move(got)});
  }

  SuiteReport finish(std::string suite) {
    SuiteReport r;
    r.suite = std::move(suite);
    r.cases = slots.size();
    for (auto& s : slots) {
      for (auto& f : s) r.failures.push_back(std::move(f));
    }
    return r;
  }
};

struct KindCase {
  FamilySpec spec;
  MatrixKind kind;
};

std::vector<KindCase> with_kinds(const std::vector<FamilySpec>& specs) {
  std::vector<KindCase> out;
  for (const auto& s : specs) {
    for (MatrixKind k : kKinds) out.push_back({s, k});
  }
  return out;
}

SuiteReport coefficients_suite(unsigned threads) {
  const auto cases = with_kinds(family_sweep(14));
  Collector c(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& [spec, kind] = cases[i];
    const CoefficientReport rep = coeff_formulas(generate(spec), kind);
    for (std::size_t k = 0; k < 5; ++k) {
      c.check(i, rep.match[k], label(spec, kind) + " coefficient " + std::to_string(k), rep.formula[k].get_str(),
              rep.computed[k].get_str());
    }
  });
  return c.finish("coefficients");
}

SuiteReport closed_forms_suite(unsigned threads) {
  struct Case {
    PathlikeTag tag;
    MatrixKind kind;
    std::size_t n;
  };
  std::vector<Case> cases;
  for (PathlikeTag tag : {PathlikeTag::P, PathlikeTag::B, PathlikeTag::U, PathlikeTag::C}) {
    for (MatrixKind kind : kKinds) {
      for (std::size_t n = tag == PathlikeTag::C ? 3 : 1; n <= 12; ++n) cases.push_back({tag, kind, n});
    }
  }
  static constexpr const char* names[] = {"P", "B", "U", "C"};
  Collector c(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& [tag, kind, n] = cases[i];
    const PathlikeSides sides = pathlike_sides(tag, kind, n);
    c.check(i, sides.lhs == sides.rhs,
            std::string(names[static_cast<int>(tag)]) + "_" + std::to_string(n) + " " + std::string(to_string(kind)),
            sides.rhs.to_string(), sides.lhs.to_string());
  });
  return c.finish("closed-forms");
}

std::vector<FamilySpec> y1_specs() {
  std::vector<FamilySpec> specs;
  for (long n = 1; n <= 12; ++n) specs.push_back(FamilySpec::path(n));
  for (long n = 3; n <= 12; ++n) specs.push_back(FamilySpec::cycle(n));
  for (auto& s : dumbbell_sweep()) specs.push_back(s);
  for (auto& s : theta_sweep()) specs.push_back(s);
  return specs;
}

SuiteReport y1_suite(unsigned threads) {
  const auto cases = with_kinds(y1_specs());
  const std::size_t aux_cases = 2 * 2 * 12;
  Collector c(cases.size() + aux_cases);
  parallel_for(cases.size() + aux_cases, threads, [&](std::size_t i) {
    if (i < cases.size()) {
      const auto& [spec, kind] = cases[i];
      const Integer expected = y1_value(spec, kind);
      const Integer got = perm_poly(generate(spec), kind).eval(Integer(2));
      c.check(i, expected == got, label(spec, kind) + " at y=1", expected.get_str(), got.get_str());
      return;
    }
    const std::size_t j = i - cases.size();
    const AuxTag tag = j / 24 == 0 ? AuxTag::B : AuxTag::U;
    const MatrixKind kind = kKinds[j / 12 % 2];
    const std::size_t n = j % 12 + 1;
    const Integer expected = aux_y1_value(tag, n);
    const Integer got = perm_poly_matrix(build_aux({tag, n, kind})).eval(Integer(2));
    c.check(i, expected == got,
            std::string(tag == AuxTag::B ? "B_" : "U_") + std::to_string(n) + " " + std::string(to_string(kind)) +
                " at y=1",
            expected.get_str(), got.get_str());
  });
  return c.finish("y1");
}

std::string monomial_string(const Monomial& m) { return m.coeff.get_str() + "*y^" + std::to_string(m.exponent); }

SuiteReport residuals_suite(unsigned threads) {
  std::vector<FamilySpec> specs = dumbbell_sweep();
  for (auto& s : theta_sweep()) specs.push_back(s);
  const auto cases = with_kinds(specs);
  Collector c(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& [spec, kind] = cases[i];
    const ResidualReport rep = residual(spec, kind);
    const Integer expected_one = 8 * y1_value(spec, kind) - rep.f.eval_at_one();
    c.check(i, residual_consistent_at_one(rep), label(spec, kind) + " R(1)", expected_one.get_str(),
            rep.value_at_one.get_str());
    const LeadingComparison lead = compare_leading_terms(rep);
    c.check(i, lead.monomial_matches, label(spec, kind) + " leading term", monomial_string(lead.claimed),
            monomial_string(lead.observed));
  });
  return c.finish("residuals");
}

SuiteReport expansion_suite(unsigned threads) {
  const auto cases = with_kinds(family_sweep(12));
  Collector c(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& [spec, kind] = cases[i];
    const Graph g = generate(spec);
    const Integer expected = permanent_ryser(build_matrix(g, kind));
    const Integer got = permanent_by_expansion(g, kind);
    c.check(i, expected == got, label(spec, kind) + " permanent", expected.get_str(), got.get_str());
  });
  return c.finish("expansion");
}

SuiteReport decomposition_suite(unsigned threads) {
  struct Case {
    std::string name;
    std::function<IntPoly()> route;
    std::function<IntPoly()> direct;
  };
  std::vector<Case> cases;
  for (const auto& [spec, kind] : with_kinds(family_sweep(10))) {
    const Graph g = generate(spec);
    for (Vertex v = 0; v < g.n(); ++v) {
      cases.push_back({label(spec, kind) + " expansion at " + std::to_string(v),
                       [g, v, kind = kind] { return perm_poly_vertex_expansion(g, v, kind); },
                       [g, kind = kind] { return perm_poly(g, kind); }});
    }
  }
  for (MatrixKind kind : kKinds) {
    // C_p joined at its hub to the far end of the lollipop C_q plus r+1 path vertices.
    for (const auto& spec : dumbbell_sweep()) {
      const auto [p, q, r] = spec.params;
      if (p + q + r > 12) continue;
      const Graph cycle = generate(FamilySpec::cycle(p));
      const Graph lolly = generate(FamilySpec::lollipop(q, q + r + 1));
      cases.push_back({label(spec, kind) + " coalescence",
                       [cycle, lolly, kind] {
                         return perm_poly_coalescence(cycle, 0, lolly, lolly.n() - 1, kind);
                       },
                       [spec = spec, kind] { return perm_poly(generate(spec), kind); }});
    }
    // Lollipop as a cycle joined to the end of a path.
    for (long n = 4; n <= 12; ++n) {
      for (long r = 3; r < n; ++r) {
        const FamilySpec spec = FamilySpec::lollipop(r, n);
        const Graph cycle = generate(FamilySpec::cycle(r));
        const Graph path = generate(FamilySpec::path(n - r + 1));
        cases.push_back({label(spec, kind) + " coalescence",
                         [cycle, path, kind] { return perm_poly_coalescence(cycle, 0, path, 0, kind); },
                         [spec, kind] { return perm_poly(generate(spec), kind); }});
      }
    }
  }
  Collector c(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const IntPoly got = cases[i].route();
    const IntPoly expected = cases[i].direct();
    c.check(i, got == expected, cases[i].name, expected.to_string(), got.to_string());
  });
  return c.finish("decomposition");
}

}  // namespace

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"case", f.case_name}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"suite", report.suite}, {"cases", report.cases}, {"failures", failures}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coefficients", "closed-forms", "y1",
                                              "residuals",    "expansion",    "decomposition"};
  return names;
}

SuiteReport run_suite(std::string_view name, unsigned threads) {
  if (name == "coefficients") return coefficients_suite(threads);
  if (name == "closed-forms") return closed_forms_suite(threads);
  if (name == "y1") return y1_suite(threads);
  if (name == "residuals") return residuals_suite(threads);
  if (name == "expansion") return expansion_suite(threads);
  if (name == "decomposition") return decomposition_suite(threads);
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::vector<FamilySpec> dumbbell_sweep() {
  std::vector<FamilySpec> out;
  for (long p = 3; p <= 7; ++p) {
    for (long q = p; q <= 7; ++q) {
      for (long r = 0; r <= 5; ++r) out.push_back(FamilySpec::dumbbell(p, q, r));
    }
  }
  return out;
}

std::vector<FamilySpec> theta_sweep() {
  std::vector<FamilySpec> out;
  for (long p = 0; p <= 12; ++p) {
    for (long q = std::max(p, 1L); p + q <= 12; ++q) {
      for (long r = q; p + q + r <= 12; ++r) out.push_back(FamilySpec::theta(p, q, r));
    }
  }
  return out;
}

}  // namespace lpp
