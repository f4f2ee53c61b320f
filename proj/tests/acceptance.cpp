// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "betti_cone/catalog.hpp"
#include "betti_cone/cone.hpp"
#include "betti_cone/fan.hpp"
#include "betti_cone/functionals.hpp"
#include "betti_cone/resolver.hpp"
#include "corpus.hpp"

using namespace betti;
using namespace betti::testing;

namespace {

constexpr int kSteps = 6;

// Collects the first few mismatches of a criterion.
struct Check {
  std::vector<std::string> problems;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Check&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (c.ok() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << c.cases << " checks, "
       << secs << " s)";
  std::cout << line.str() << "\n";
  for (const auto& p : c.problems) std::cout << "     " << p << "\n";
  if (!c.ok()) ++failures;
}

Decomposition terms(std::vector<std::pair<Rational, DegreeSequence>> t) {
  Decomposition d;
  for (auto& [c, s] : t) d.terms.push_back({c, s});
  return d;
}

// Multiplicity straight from the module: length when the Hilbert function
// dies out, otherwise its eventual value.
Rational module_multiplicity(const GradedPresentation& p) {
  int lo = 0, hi = 0;
  for (int g : p.generator_degrees) lo = std::min(lo, g);
  for (int r : p.relation_degrees) hi = std::max(hi, r);
  const auto h = hilbert_values(p, lo, hi + 16);
  if (h.back() != 0) return h.back();
  long total = 0;
  for (int v : h) total += v;
  return Rational(total);
}

ResolutionData raw_resolution(const GradedPresentation& p, int steps) {
  for (int slack = 0;; slack += 4) {
    try {
      return resolve(p, steps, automatic_bound(p, steps, slack));
    } catch (const DegreeBoundTooSmall&) {
      if (slack >= 16) throw;
    }
  }
}

struct Oracle {
  CorpusModule module;
  BettiDiagram diagram;
};

std::vector<Oracle> oracle_outputs(const std::vector<CorpusModule>& modules) {
  std::vector<Oracle> out;
  for (const auto& m : modules) out.push_back({m, minimal_betti(m.ring, m.presentation, kSteps)});
  return out;
}

std::string degree_window(const ResolutionData& res) {
  std::ostringstream s;
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    s << (i ? " |" : "");
    for (int d : res.degrees[i]) s << " " << d;
  }
  return s.str();
}

struct Perturbed {
  std::string name;
  BettiDiagram v;
  std::string family;
};

std::vector<Perturbed> perturbed_diagrams() {
  const RingSpec q = x_squared(), r = xy();
  const RingSpec a3 = RingSpec::embdim1(3), a4 = RingSpec::embdim1(4);
  const ShiftPeriodic qt{1, 1, 2};
  auto make = [](const RingSpec& ring, std::vector<Column> c, std::optional<ShiftPeriodic> t) {
    return BettiDiagram::make(ring, std::move(c), t);
  };
  const ShiftPeriodic t3{2, 3, 1}, t4{2, 4, 1};
  return {
      {"negative generator", make(q, {{{0, -1}}}, std::nullopt), "eps"},
      {"negative first syzygy", make(q, {{{0, 1}}, {{1, 1}, {2, -1}}}, std::nullopt), "eps"},
      {"negative periodic tail", make(r, {{{0, 1}}, {{2, 2}}, {{3, -2}}}, qt), "eps"},
      {"tail breaks shift symmetry", make(q, {{{0, 1}}, {{1, 2}}, {{2, 2}}}, std::nullopt), "shift"},
      {"tail drifts", make(r, {{{0, 1}}, {{1, 2}}, {{2, 2}}, {{4, 2}}}, std::nullopt), "shift"},
      {"second column too large", make(q, {{{0, 1}}, {{1, 2}}, {{2, 3}}}, qt), "alpha"},
      {"second column too large, shifted", make(r, {{{2, 1}}, {{4, 1}}, {{5, 2}}}, qt), "alpha"},
      {"too many linear relations", make(q, {{{0, 1}}, {{1, 2}}}, std::nullopt), "gamma"},
      {"too many quadratic relations", make(r, {{{0, 1}}, {{2, 3}}}, std::nullopt), "gamma"},
      {"two generators, five relations", make(q, {{{0, 2}}, {{1, 5}}}, std::nullopt), "gamma"},
      {"negative entry over x^3", make(a3, {{{0, 1}}, {{1, -1}}, {{3, 1}}}, t3), "eps"},
      {"negative generator over x^4", make(a4, {{{0, -1}}}, std::nullopt), "eps"},
      {"no periodic tail over x^3", make(a3, {{{0, 1}}, {{1, 1}}, {{3, 1}}}, std::nullopt), "alpha_a"},
      {"missing generator over x^3", make(a3, {{}, {{1, 1}}, {{3, 1}}}, t3), "alpha_a"},
      {"late second syzygy over x^3", make(a3, {{{0, 1}, {1, 1}}, {{1, 1}}, {{4, 1}}}, t3), "theta"},
      {"late second syzygy over x^4", make(a4, {{{0, 1}, {1, 1}}, {{1, 1}}, {{5, 1}}}, t4), "theta"},
      {"early second syzygy over x^3", make(a3, {{{-1, 1}, {0, 1}}, {{2, 1}}, {{2, 1}}}, t3), "eta"},
      {"early second syzygy over x^4", make(a4, {{{-2, 1}, {0, 1}}, {{2, 1}}, {{2, 1}}}, t4), "eta"},
      {"unmatched first syzygy over x^3", make(a3, {{{0, 1}}, {{1, 1}}, {}}, t3), "eta_inf"},
      {"unmatched first syzygy over x^4", make(a4, {{{0, 1}}, {{2, 1}}, {}}, t4), "eta_inf"},
  };
}

}  // namespace

int main() {
  const auto pure = pure_family(5);
  const auto randoms = random_monomial_modules(
      {x_squared(), xy(), RingSpec::embdim1(2), RingSpec::embdim1(3), RingSpec::embdim1(4)}, 60, 20240611u);
  std::vector<CorpusModule> corpus = pure;
  corpus.insert(corpus.end(), randoms.begin(), randoms.end());
  const auto outputs = oracle_outputs(corpus);

  report(1, "pure diagrams reproduce the stored example matrices", [](Check& c) {
    const RingSpec q = x_squared(), a3 = RingSpec::embdim1(3);
    const std::vector<std::tuple<RingSpec, DegreeSequence, std::string>> cases = {
        {q, DegreeSequence::pd0(0), "0,0=1"},
        {q, DegreeSequence::pd1(1, 2), "0,1=1 1,2=1"},
        {q, DegreeSequence::inf(0, 3), "0,0=1 1,3=2 2,4=2 3,5=2 4,6=2 5,7=2 6,8=2 7,9=2 8,10=2 9,11=2"},
        {a3, DegreeSequence::pd0(0), "0,0=1"},
        {a3, DegreeSequence::inf(0, 1), "0,0=1 1,1=1 2,3=1 3,4=1 4,6=1 5,7=1 6,9=1 7,10=1 8,12=1 9,13=1"},
    };
    for (const auto& [ring, d, expected] : cases) {
      const std::string got = cells(pure_diagram(ring, d), 10);
      c.expect(got == expected, d.describe(ring) + ": got " + got);
    }
  });

  report(2, "two-generator module decomposes as 1/2, 1, 1/2", [](Check& c) {
    const RingSpec q = x_squared();
    const Poly x = Poly::x(), y = Poly::y();
    const auto p = GradedPresentation::over_ring(
        q, {0, 0}, {{x, Poly()}, {x * y * y, y.pow(3)}, {y.pow(4), x * y.pow(3)}});
    const BettiDiagram v = minimal_betti(q, p, kSteps);
    c.expect(v == two_generator_diagram(), "resolver diagram differs from the stored one");
    const auto expected = terms({{Rational(1, 2), DegreeSequence::inf(0, 1)},
                                 {Rational(1), DegreeSequence::pd1(0, 3)},
                                 {Rational(1, 2), DegreeSequence::inf(0, 4)}});
    const auto dec = decompose(q, v);
    c.expect(dec == expected, "decomposition differs");
    c.expect(reassemble(q, dec) == v, "reassembly differs");
  });

  report(3, "diagram of <x> decomposes as 1/2 (0,1,2,...) + 1/2 (0,inf,...)", [](Check& c) {
    const RingSpec q = x_squared();
    const auto p = GradedPresentation::over_ring(q, {0}, {{Poly::x()}});
    const BettiDiagram v = minimal_betti(q, p, kSteps);
    c.expect(v == ideal_x_diagram(), "resolver diagram of k[x,y]/<x> differs");
    const auto dec = decompose(q, v);
    c.expect(dec == terms({{Rational(1, 2), DegreeSequence::inf(0, 1)}, {Rational(1, 2), DegreeSequence::pd0(0)}}),
             "decomposition differs");
    c.expect(reassemble(q, dec) == v, "reassembly differs");
  });

  report(4, "resolver outputs are pure where expected, in the cone, and decompose exactly", [&](Check& c) {
    for (const auto& [m, v] : outputs) {
      if (m.pure) c.expect(v == pure_diagram(m.ring, *m.pure), m.name + " is not pure");
      const auto bad = membership(m.ring, v);
      c.expect(!bad, m.name + " violates " + (bad ? describe(bad->functional) : std::string()));
      if (bad) continue;
      c.expect(reassemble(m.ring, decompose(m.ring, v)) == v, m.name + " does not reassemble");
      if (!m.ring.is_quadric()) {
        c.expect(structure_theorem_betti(m.ring, m.presentation) == v, m.name + " disagrees with the structure theorem");
      }
    }
    c.expect(randoms.size() >= 50, "fewer than 50 random modules");
  });

  report(5, "alpha_k equals the rank of the scalar part of the homotopy", [&](Check& c) {
    for (const auto& [m, v] : outputs) {
      if (!m.ring.is_quadric()) continue;
      const auto res = s_resolution(lift_to_polynomial_ring(m.presentation));
      const auto h = compute_homotopies(res, defining_quadric(m.ring));
      int lo = 0, hi = 0;
      for (const auto& degs : res.degrees) {
        for (int d : degs) {
          lo = std::min(lo, d);
          hi = std::max(hi, d);
        }
      }
      for (int k = lo - 3; k <= hi + 1; ++k) {
        const Rational a = eval(AlphaQ{k}, v);
        const int s = sigma_rank(res, h, 2, k);
        c.expect(a == Rational(s), m.name + ": alpha_" + std::to_string(k) + " = " + to_string(a) + ", rank " +
                                       std::to_string(s));
      }
    }
  });

  report(6, "gamma_k of the truncated module equals its Hilbert function at k+2", [&](Check& c) {
    for (const auto& [m, v] : outputs) {
      if (!m.ring.is_quadric()) continue;
      const auto minimal = minimal_presentation(m.presentation, automatic_bound(m.presentation, 4, 0));
      int lo = 0, hi = 0;
      for (int g : minimal.generator_degrees) lo = std::min(lo, g);
      for (int r : minimal.relation_degrees) hi = std::max(hi, r);
      for (int k = lo - 1; k <= hi + 1; ++k) {
        const auto n = truncate_presentation(minimal, k);
        const BettiDiagram bn = minimal_betti(m.ring, n, kSteps);
        const Rational g = eval(Gamma{k}, bn);
        const int h = presentation_hilbert(n, k + 2);
        c.expect(g == Rational(h), m.name + ": gamma_" + std::to_string(k) + " = " + to_string(g) + ", h = " +
                                       std::to_string(h));
      }
    }
  });

  report(7, "multiplicities of pure diagrams and the bounds from the extreme sequences", [&](Check& c) {
    const RingSpec q = x_squared();
    for (int d1 = 1; d1 <= 6; ++d1) {
      for (const auto& [d, e] : {std::pair{DegreeSequence::pd1(0, d1), 2 * d1},
                                 std::pair{DegreeSequence::inf(0, d1), 2 * d1 - 1}}) {
        const Rational from_diagram = multiplicity(q, pure_diagram(q, d));
        const Rational from_module = module_multiplicity(pure_module(q, d));
        c.expect(from_diagram == Rational(e) && from_module == Rational(e),
                 d.describe(q) + ": " + to_string(from_diagram) + " / " + to_string(from_module));
      }
    }
    for (const auto& [m, v] : outputs) {
      if (!m.ring.is_quadric() || v.column(0).size() != 1) continue;
      const auto r = multiplicity_bounds(m.ring, v);
      c.expect(r.e == module_multiplicity(m.presentation), m.name + ": e from the diagram disagrees with the module");
      c.expect(r.e <= r.upper, m.name + ": e above the upper bound");
      if (r.lower) {
        c.expect(*r.lower <= r.e, m.name + ": e below the lower bound");
        c.expect(r.lower_equal == r.extremes_coincide && r.upper_equal == r.extremes_coincide,
                 m.name + ": equality does not match coinciding extremes");
      }
    }
  });

  report(8, "fan over x^2 with m = 1", [](Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const FanReport r = verify_fan(x_squared(), 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(r.maximal_cones == 12, "maximal chains: " + std::to_string(r.maximal_cones));
    c.expect(r.expected_chain_length == 9 && r.chain_lengths_ok, "chains are not all of length 9");
    c.expect(r.independence_ok && r.staircase_ok, "dependent chain");
    c.expect(r.facets_matched, "unmatched boundary facet");
    c.expect(r.intersections_ok, "cones meet outside common faces");
    c.expect(case_vector(r) == std::vector<std::size_t>{0, 2, 2, 0, 1, 1, 0, 1}, "lower-left counts differ");
    c.expect(secs < 10, "took " + std::to_string(secs) + " s");
  });

  report(9, "fans over k[x]/<x^n> for n = 2, 3 and m = 1, 2", [](Check& c) {
    for (int n : {2, 3}) {
      for (int m : {1, 2}) {
        const FanReport r = verify_fan(RingSpec::embdim1(n), m);
        const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        c.expect(r.independence_ok && r.staircase_ok, tag + ": dependent chain");
        c.expect(r.facets_matched && !r.case_counts.count('?'), tag + ": unmatched boundary facet");
        c.expect(r.ok(), tag + ": " + (r.failures.empty() ? std::string() : r.failures.front()));
      }
    }
  });

  report(10, "resolutions are periodic on the whole computed window", [&](Check& c) {
    constexpr int steps = 8;
    for (const auto& m : corpus) {
      const ResolutionData res = raw_resolution(m.presentation, steps);
      const int p = m.ring.tail_period(), s = m.ring.tail_shift();
      bool ok = true;
      for (int i = m.ring.tail_anchor(); i + p <= steps; ++i) {
        for (int j = -4; j + s <= res.degree_bound; ++j) ok = ok && res.betti(i, j) == res.betti(i + p, j + s);
      }
      c.expect(ok, m.name + ":" + degree_window(res));
    }
  });

  report(11, "perturbed diagrams are rejected by the right family", [](Check& c) {
    for (const auto& t : perturbed_diagrams()) {
      const auto bad = membership(t.v.ring(), t.v);
      const std::string got = bad ? family_name(bad->functional) : "in cone";
      c.expect(got == t.family, t.name + ": expected " + t.family + ", got " + got);
    }
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << "\n";
  return failures ? 1 : 0;
}
