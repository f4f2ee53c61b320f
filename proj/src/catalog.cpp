#include "betti_cone/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "betti_cone/cone.hpp"
#include "betti_cone/fan.hpp"
#include "betti_cone/resolver.hpp"

namespace betti {

std::string cells(const BettiDiagram& v, int columns) {
  std::string s;
  for (int i = 0; i < columns; ++i) {
    for (const auto& [j, x] : v.column(i)) {
      if (!s.empty()) s += " ";
      s += std::to_string(i) + "," + std::to_string(j) + "=" + to_string(x);
    }
  }
  return s;
}

BettiDiagram two_generator_diagram() {
  const RingSpec q = RingSpec::quadric(1, 0, 0);
  return BettiDiagram::make(q, {{{0, 2}}, {{1, 1}, {3, 1}, {4, 1}}, {{2, 1}, {5, 1}}},
                            ShiftPeriodic{1, 1, 2});
}

BettiDiagram ideal_x_diagram() {
  const RingSpec q = RingSpec::quadric(1, 0, 0);
  return BettiDiagram::make(q, {{{0, 1}}, {{1, 1}}, {{2, 1}}}, ShiftPeriodic{1, 1, 2});
}

namespace {

std::string seq_list(const RingSpec& ring, std::vector<DegreeSequence> ds) {
  std::string s;
  for (const auto& d : ds) s += (s.empty() ? "" : " ") + d.describe(ring);
  return s;
}

std::string dec_text(const RingSpec& ring, const Decomposition& dec) {
  std::string s;
  for (const auto& t : dec.terms) {
    s += (s.empty() ? "" : " + ") + to_string(t.coefficient) + "*" + t.sequence.describe(ring);
  }
  return s;
}

std::string degree_lists(const ResolutionData& r) {
  std::string s;
  for (const auto& d : r.degrees) {
    if (!s.empty()) s += " | ";
    std::string part;
    for (int g : d) part += (part.empty() ? "" : " ") + std::to_string(g);
    s += part.empty() ? "0" : part;
  }
  return s;
}

// Unit-diagram dot product: coefficient of eps_{i,j} in f on rows j - i in [lo, hi].
std::string pattern(const RingSpec& ring, const FunctionalId& f, int cols, int lo, int hi) {
  std::string s;
  for (int r = hi; r >= lo; --r) {
    if (!s.empty()) s += " / ";
    for (int i = 0; i < cols; ++i) {
      std::vector<Column> c(i + 1);
      c[i][r + i] = 1;
      s += (i ? " " : "") + to_string(eval(f, BettiDiagram::make(ring, c, std::nullopt)));
    }
  }
  return s;
}

std::optional<Chain> chain_through(const PosetWindow& w, const Chain& piece) {
  for (const auto& c : maximal_chains(w)) {
    for (std::size_t k = 0; k + piece.size() <= c.size(); ++k) {
      if (std::equal(piece.begin(), piece.end(), c.begin() + static_cast<std::ptrdiff_t>(k))) return c;
    }
  }
  return std::nullopt;
}

std::string facet_of(const PosetWindow& w, const Chain& piece, const DegreeSequence& hat) {
  auto c = chain_through(w, piece);
  if (!c) return "no maximal chain";
  c->erase(std::find(c->begin(), c->end(), hat));
  auto r = classify_submaximal(w, *c);
  if (!r) return "interior";
  return std::string(1, r->case_tag) + " " + (r->matched ? describe(*r->matched) : "unmatched");
}

}  // namespace

std::vector<CatalogEntry> run_catalog() {
  const RingSpec q = RingSpec::quadric(1, 0, 0);
  const RingSpec a3 = RingSpec::embdim1(3);
  const Poly x = Poly::x(), y = Poly::y();
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string expected, const std::function<std::string()>& f) {
    std::string actual;
    try {
      actual = f();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    out.push_back({std::move(name), std::move(expected), std::move(actual)});
  };

  add("pure (0,inf) over x^2", "0,0=1", [&] { return cells(pure_diagram(q, DegreeSequence::pd0(0)), 10); });
  add("pure (1,2,inf) over x^2", "0,1=1 1,2=1",
      [&] { return cells(pure_diagram(q, DegreeSequence::pd1(1, 2)), 10); });
  add("pure (0,3,4,5,...) over x^2",
      "0,0=1 1,3=2 2,4=2 3,5=2 4,6=2 5,7=2 6,8=2 7,9=2 8,10=2 9,11=2",
      [&] { return cells(pure_diagram(q, DegreeSequence::inf(0, 3)), 10); });
  add("pure (0,inf) over x^3", "0,0=1", [&] { return cells(pure_diagram(a3, DegreeSequence::pd0(0)), 10); });
  add("pure (0,1,3,4,...) over x^3", "0,0=1 1,1=1 2,3=1 3,4=1 4,6=1 5,7=1 6,9=1 7,10=1 8,12=1 9,13=1",
      [&] { return cells(pure_diagram(a3, DegreeSequence::inf(0, 1)), 10); });
  add("pure (0,1,3,4,...) entry (4,6)", "1",
      [&] { return to_string(pure_diagram(a3, DegreeSequence::inf(0, 1)).entry(4, 6)); });
  add("order (0,1,inf) vs (0,2,3,4,...)", "Less",
      [&] { return to_string(compare(q, DegreeSequence::pd1(0, 1), DegreeSequence::inf(0, 2))); });
  add("order (0,2,3,4,...) vs (0,2,inf)", "Less",
      [&] { return to_string(compare(q, DegreeSequence::inf(0, 2), DegreeSequence::pd1(0, 2))); });
  add("half sum of (0,1,2,...) and (0,inf)", "0,0=1 1,1=1 2,2=1 3,3=1 4,4=1 5,5=1", [&] {
    std::vector<std::pair<Rational, BettiDiagram>> t{{Rational(1, 2), pure_diagram(q, DegreeSequence::inf(0, 1))},
                                                     {Rational(1, 2), pure_diagram(q, DegreeSequence::pd0(0))}};
    return cells(linear_combine(t), 6);
  });
  add("three pure pieces reassemble the two-generator diagram", "true", [&] {
    Decomposition d{{{Rational(1, 2), DegreeSequence::inf(0, 1)},
                     {Rational(1), DegreeSequence::pd1(0, 3)},
                     {Rational(1, 2), DegreeSequence::inf(0, 4)}}};
    return reassemble(q, d) == two_generator_diagram() ? "true" : "false";
  });
  add("gamma_2 coefficients on rows 3..-1", "0 0 0 / 2 -2 1 / 2 -2 1 / 2 -2 1 / 2 -2 1",
      [&] { return pattern(q, Gamma{2}, 3, -1, 3); });
  add("eta_3 coefficients on rows 3..-1", "0 0 0 0 / 0 1 -1 0 / 0 1 -1 0 / 0 1 -1 0 / 0 1 -1 0",
      [&] { return pattern(a3, Eta{3}, 4, -1, 3); });
  add("every pure diagram with degrees in [-3,3] is in the cone", "true", [&] {
    for (const RingSpec& r : {q, a3}) {
      for (int d0 = -3; d0 <= 3; ++d0) {
        std::vector<DegreeSequence> ds{DegreeSequence::pd0(d0)};
        for (int d1 = d0 + 1; d1 <= 3; ++d1) {
          if (r.is_quadric() || d1 < d0 + r.n()) ds.push_back(DegreeSequence::inf(d0, d1));
          if (r.is_quadric()) ds.push_back(DegreeSequence::pd1(d0, d1));
        }
        for (const auto& d : ds) {
          if (membership(r, pure_diagram(r, d))) return "false at " + d.describe(r);
        }
      }
    }
    return std::string("true");
  });
  add("decompose the two-generator diagram", "1/2*(0,1,2,3,...) + 1*(0,3,inf,...) + 1/2*(0,4,5,6,...)",
      [&] { return dec_text(q, decompose(q, two_generator_diagram())); });
  add("decompose the <x> diagram", "1/2*(0,1,2,3,...) + 1/2*(0,inf,...)",
      [&] { return dec_text(q, decompose(q, ideal_x_diagram())); });
  add("first minimal compatible sequence", "(0,1,2,3,...)",
      [&] { return minimal_compatible(q, two_generator_diagram()).describe(q); });
  add("minimal compatible sequence after two subtractions", "(0,4,5,6,...)", [&] {
    BettiDiagram v = two_generator_diagram() -
                     pure_diagram(q, DegreeSequence::inf(0, 1)).scaled(Rational(1, 2)) -
                     pure_diagram(q, DegreeSequence::pd1(0, 3));
    return minimal_compatible(q, v).describe(q);
  });
  add("first step size", "1/2",
      [&] { return to_string(max_step(q, two_generator_diagram(), DegreeSequence::inf(0, 1))); });
  add("second step size", "1", [&] {
    BettiDiagram v =
        two_generator_diagram() - pure_diagram(q, DegreeSequence::inf(0, 1)).scaled(Rational(1, 2));
    return to_string(max_step(q, v, DegreeSequence::pd1(0, 3)));
  });
  add("Hilbert function of the ring at 0,1,2", "1 2 2", [&] {
    const BettiDiagram r = pure_diagram(q, DegreeSequence::pd0(0));
    std::string s;
    for (int k = 0; k <= 2; ++k) s += (k ? " " : "") + to_string(hilbert_function(q, r, k));
    return s;
  });
  add("multiplicity of (0,d1,inf) for d1 = 1..5", "2 4 6 8 10", [&] {
    std::string s;
    for (int d1 = 1; d1 <= 5; ++d1) {
      s += (d1 > 1 ? " " : "") + to_string(multiplicity(q, pure_diagram(q, DegreeSequence::pd1(0, d1))));
    }
    return s;
  });
  add("multiplicity of (0,d1,d1+1,...) for d1 = 1..5", "1 3 5 7 9", [&] {
    std::string s;
    for (int d1 = 1; d1 <= 5; ++d1) {
      s += (d1 > 1 ? " " : "") + to_string(multiplicity(q, pure_diagram(q, DegreeSequence::inf(0, d1))));
    }
    return s;
  });

  const PosetWindow w = enumerate_window(q, 1);
  add("window m=1 over x^2",
      "(-1,0,1,2,...) (-1,0,inf,...) (-1,1,2,3,...) (-1,1,inf,...) (-1,2,3,4,...) (-1,2,inf,...) "
      "(-1,inf,...) (0,1,2,3,...) (0,1,inf,...) (0,2,3,4,...) (0,2,inf,...) (0,inf,...) "
      "(1,2,3,4,...) (1,2,inf,...) (1,inf,...)",
      [&] { return seq_list(q, w.elements); });
  add("maximal chains m=1: count, lengths, ends", "12 chains of length 9 from (-1,0,1,2,...) to (1,inf,...)", [&] {
    const auto chains = maximal_chains(w);
    std::set<std::size_t> lengths;
    std::set<std::string> firsts, lasts;
    for (const auto& c : chains) {
      lengths.insert(c.size());
      firsts.insert(c.front().describe(q));
      lasts.insert(c.back().describe(q));
    }
    std::ostringstream s;
    s << chains.size() << " chains of length";
    for (auto l : lengths) s << " " << l;
    s << " from";
    for (const auto& f : firsts) s << " " << f;
    s << " to";
    for (const auto& l : lasts) s << " " << l;
    return s.str();
  });
  add("every maximal chain m=1 is independent", "true", [&] {
    for (const auto& c : maximal_chains(w)) {
      if (!check_chain_independence(q, c)) return std::string("false");
    }
    return std::string("true");
  });
  add("boundary facet (0,1,inf) < [(0,2,3,4,...)] < (0,2,inf)", "a eps_{2,3}", [&] {
    return facet_of(w, {DegreeSequence::pd1(0, 1), DegreeSequence::inf(0, 2), DegreeSequence::pd1(0, 2)},
                    DegreeSequence::inf(0, 2));
  });
  add("boundary facet (-1,1,2,3,...) < [(-1,1,inf)] < (-1,2,3,4,...)", "b alpha_{1}", [&] {
    return facet_of(w, {DegreeSequence::inf(-1, 1), DegreeSequence::pd1(-1, 1), DegreeSequence::inf(-1, 2)},
                    DegreeSequence::pd1(-1, 1));
  });
  add("boundary facet of type f over x^3, m=1", "alpha_{0,-1}", [&] {
    const PosetWindow wa = enumerate_window(a3, 1);
    for (const auto& c : maximal_chains(wa)) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Chain sub = c;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        auto r = classify_submaximal(wa, sub);
        if (r && r->case_tag == 'f') return r->matched ? describe(*r->matched) : std::string("unmatched");
      }
    }
    return std::string("no type f facet");
  });
  add("fan m=1 over x^2", "12 maximal cones, dim 9, all facets matched",
      [&] { return summary(verify_fan(q, 1)); });
  add("lower-left chain case counts m=1", "0 2 2 0 1 1 0 1", [&] {
    std::string s;
    for (auto n : case_vector(verify_fan(q, 1, false))) s += (s.empty() ? "" : " ") + std::to_string(n);
    return s;
  });

  add("syzygies of [x^2, y^3, x*y^2] over Q[x,y]", "4 4", [&] {
    PolyMatrix m(1, 3);
    m(0, 0) = x * x;
    m(0, 1) = y.pow(3);
    m(0, 2) = x * y * y;
    auto step = graded_kernel_step(GradedBase::polynomial(2), {2, 3, 3}, {0}, m, 2, 12);
    std::string s;
    for (int d : step.degrees) s += (s.empty() ? "" : " ") + std::to_string(d);
    return s;
  });
  add("R/<y^3> over x^2", "true", [&] {
    auto p = GradedPresentation::over_ring(q, {0}, {{y.pow(3)}});
    return minimal_betti(q, p, 5) == pure_diagram(q, DegreeSequence::pd1(0, 3)) ? "true" : "false";
  });
  add("R/<y^3, x*y^2> over x^2", "true", [&] {
    auto p = GradedPresentation::over_ring(q, {0}, {{y.pow(3)}, {x * y * y}});
    return minimal_betti(q, p, 5) == pure_diagram(q, DegreeSequence::inf(0, 3)) ? "true" : "false";
  });
  add("cokernel of [[x, x*y^2, y^4], [0, y^3, x*y^3]] over x^2", "true", [&] {
    auto p = GradedPresentation::over_ring(q, {0, 0}, {{x, Poly()}, {x * y * y, y.pow(3)}, {y.pow(4), x * y.pow(3)}});
    return minimal_betti(q, p, 6) == two_generator_diagram() ? "true" : "false";
  });

  const auto sp = GradedPresentation::over_polynomial(2, {0}, {{x * x}, {y.pow(3)}, {x * y * y}});
  add("resolution of S/<x^2, y^3, x*y^2>", "0 | 2 3 3 | 4 4", [&] { return degree_lists(s_resolution(sp)); });
  add("homotopy s1 on the quadric generator", "1", [&] {
    const auto res = s_resolution(sp);
    const auto h = compute_homotopies(res, x * x);
    for (std::size_t r = 0; r < res.degrees[1].size(); ++r) {
      if (res.degrees[1][r] == 2) return to_string(h.s1(r, 0).constant());
    }
    return std::string("missing");
  });
  add("unit entries of s1 and s2", "1", [&] {
    const auto h = compute_homotopies(s_resolution(sp), x * x);
    int units = 0;
    for (const PolyMatrix* m : {&h.s1, &h.s2}) {
      for (std::size_t r = 0; r < m->rows(); ++r) {
        for (std::size_t c = 0; c < m->cols(); ++c) units += (*m)(r, c).degree() == 0 ? 1 : 0;
      }
    }
    return std::to_string(units);
  });
  add("standard complex: nonminimal maps", "steps 2 4 6 in degrees 2 4 6", [&] {
    const auto res = s_resolution(sp);
    const auto sh = shamash_resolution(res, compute_homotopies(res, x * x), x * x, 7);
    std::string steps, degrees;
    for (std::size_t i = 0; i < sh.maps.size(); ++i) {
      const PolyMatrix& m = sh.maps[i];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (m(r, c).degree() == 0) {
            steps += " " + std::to_string(i + 1);
            degrees += " " + std::to_string(sh.degrees[i + 1][c]);
          }
        }
      }
    }
    return "steps" + steps + " in degrees" + degrees;
  });
  add("standard complex: cancellations", "(2,2)=1 (4,4)=1 (6,6)=1", [&] {
    const auto res = s_resolution(sp);
    const auto mn = minimize_resolution(shamash_resolution(res, compute_homotopies(res, x * x), x * x, 7));
    std::string s;
    for (const auto& [k, n] : mn.cancellations) {
      s += (s.empty() ? "" : " ") + ("(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")=") +
           std::to_string(n);
    }
    return s;
  });
  add("alpha_k equals the sigma rank for R/<y^3>", "-1:0/0 0:0/0 1:0/0 2:0/0 3:1/1 4:0/0 5:0/0", [&] {
    const auto b = minimal_betti(q, GradedPresentation::over_ring(q, {0}, {{y.pow(3)}}), 5);
    const auto res = s_resolution(GradedPresentation::over_polynomial(2, {0}, {{y.pow(3)}, {x * x}}));
    const auto h = compute_homotopies(res, x * x);
    std::string s;
    for (int k = -1; k <= 5; ++k) {
      s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + to_string(eval(AlphaQ{k}, b)) + "/" +
           std::to_string(sigma_rank(res, h, 2, k));
    }
    return s;
  });
  return out;
}

}  // namespace betti
