#include "betti_cone/json_io.hpp"

namespace betti::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

int int_field(const Json& j, const char* key) { return as_int(field(j, key), key); }

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"num/den\" string or an integer");
}

Json ring_to_json(const RingSpec& ring) {
  if (!ring.is_quadric()) return Json{{"family", "embdim1"}, {"n", ring.n()}};
  Json q = Json::array();
  for (const auto& c : ring.quadric_coeffs()) q.push_back(rational_to_json(c));
  return Json{{"family", "quadric"}, {"q", q}};
}

RingSpec ring_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw ParseError("ring family must be a string");
  const auto name = fam.get<std::string>();
  if (name == "embdim1") return RingSpec::embdim1(int_field(j, "n"));
  if (name == "quadric") {
    const Json& q = array_field(j, "q");
    if (q.size() != 3) throw ParseError("quadric needs three coefficients [a, b, c]");
    return RingSpec::quadric(rational_from_json(q[0]), rational_from_json(q[1]), rational_from_json(q[2]));
  }
  throw ParseError("unknown ring family \"" + name + "\"");
}

Json sequence_to_json(const DegreeSequence& d) {
  switch (d.kind) {
    case SeqKind::Pd0:
      return Json{{"kind", "pd0"}, {"d0", d.d0}};
    case SeqKind::Pd1:
      return Json{{"kind", "pd1"}, {"d0", d.d0}, {"d1", d.d1}};
    case SeqKind::Inf:
      break;
  }
  return Json{{"kind", "inf"}, {"d0", d.d0}, {"d1", d.d1}};
}

DegreeSequence sequence_from_json(const RingSpec& ring, const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("sequence kind must be a string");
  const auto k = kind.get<std::string>();
  DegreeSequence d;
  if (k == "pd0") d = DegreeSequence::pd0(int_field(j, "d0"));
  else if (k == "pd1") d = DegreeSequence::pd1(int_field(j, "d0"), int_field(j, "d1"));
  else if (k == "inf") d = DegreeSequence::inf(int_field(j, "d0"), int_field(j, "d1"));
  else throw ParseError("unknown sequence kind \"" + k + "\"");
  d.validate(ring);
  return d;
}

Json diagram_to_json(const BettiDiagram& v) {
  Json cols = Json::array();
  for (const auto& c : v.columns()) {
    Json col = Json::array();
    for (const auto& [j, x] : c) col.push_back(Json{{"j", j}, {"v", rational_to_json(x)}});
    cols.push_back(col);
  }
  Json tail = "zero";
  if (v.tail()) tail = Json{{"p", v.tail()->period}, {"s", v.tail()->shift}, {"anchor", v.tail()->anchor}};
  return Json{{"ring", ring_to_json(v.ring())}, {"cols", cols}, {"tail", tail}};
}

BettiDiagram diagram_from_json(const Json& j) {
  const RingSpec ring = ring_from_json(field(j, "ring"));
  std::vector<Column> cols;
  for (const Json& c : array_field(j, "cols")) {
    if (!c.is_array()) throw ParseError("each column must be an array of {j, v} entries");
    Column col;
    for (const Json& e : c) {
      const int deg = int_field(e, "j");
      if (col.count(deg)) throw ParseError("degree " + std::to_string(deg) + " listed twice in a column");
      Rational x = rational_from_json(field(e, "v"));
      if (sgn(x) != 0) col.emplace(deg, std::move(x));
    }
    cols.push_back(std::move(col));
  }
  std::optional<ShiftPeriodic> tail;
  const Json& t = j.contains("tail") ? j.at("tail") : Json("zero");
  if (t.is_string()) {
    if (t.get<std::string>() != "zero") throw ParseError("tail must be \"zero\" or {p, s, anchor}");
  } else {
    tail = ShiftPeriodic{int_field(t, "p"), int_field(t, "s"), int_field(t, "anchor")};
  }
  return BettiDiagram::make(ring, std::move(cols), tail);
}

Json functional_to_json(const FunctionalId& f) {
  Json j{{"kind", family_name(f)}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Eps> || std::is_same_v<T, Shift>) {
          j["i"] = x.i;
          j["j"] = x.j;
        } else if constexpr (std::is_same_v<T, AlphaA>) {
          j["i"] = x.i;
          j["k"] = x.k;
        } else if constexpr (!std::is_same_v<T, EtaInf>) {
          j["k"] = x.k;
        }
      },
      f);
  return j;
}

FunctionalId functional_from_json(const Json& j) {
  const Json& fam = field(j, "kind");
  if (!fam.is_string()) throw ParseError("functional kind must be a string");
  const auto name = fam.get<std::string>();
  if (name == "eps") return Eps{int_field(j, "i"), int_field(j, "j")};
  if (name == "alpha") return AlphaQ{int_field(j, "k")};
  if (name == "gamma") return Gamma{int_field(j, "k")};
  if (name == "shift") return Shift{int_field(j, "i"), int_field(j, "j")};
  if (name == "alpha_a") return AlphaA{int_field(j, "i"), int_field(j, "k")};
  if (name == "theta") return Theta{int_field(j, "k")};
  if (name == "eta") return Eta{int_field(j, "k")};
  if (name == "eta_inf") return EtaInf{};
  throw ParseError("unknown functional kind \"" + name + "\"");
}

Json violation_to_json(const Violation& v) {
  return Json{{"functional", functional_to_json(v.functional)},
              {"describe", describe(v.functional)},
              {"value", rational_to_json(v.value)}};
}

Json decomposition_to_json(const RingSpec& ring, const Decomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    terms.push_back(Json{{"coeff", rational_to_json(t.coefficient)},
                         {"d", sequence_to_json(t.sequence)},
                         {"describe", t.sequence.describe(ring)}});
  }
  return Json{{"ring", ring_to_json(ring)}, {"terms", terms}};
}

Decomposition decomposition_from_json(const RingSpec& ring, const Json& j) {
  if (j.contains("ring") && !(ring_from_json(j.at("ring")) == ring)) {
    throw FamilyMismatch("decomposition is over another ring");
  }
  Decomposition dec;
  for (const Json& t : array_field(j, "terms")) {
    dec.terms.push_back({rational_from_json(field(t, "coeff")), sequence_from_json(ring, field(t, "d"))});
  }
  return dec;
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"exp", {m.a, m.b}}, {"c", rational_to_json(c)}});
  return terms;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of {exp, c} terms");
  Poly p;
  for (const Json& t : j) {
    const Json& e = array_field(t, "exp");
    if (e.size() != 1 && e.size() != 2) throw ParseError("exponent vector needs one or two entries");
    const int a = as_int(e[0], "exponent");
    const int b = e.size() == 2 ? as_int(e[1], "exponent") : 0;
    if (a < 0 || b < 0) throw ParseError("exponents must be nonnegative");
    p += Poly::monomial({a, b}, rational_from_json(field(t, "c")));
  }
  return p;
}

Json presentation_to_json(const GradedPresentation& p) {
  Json ring = p.ring ? ring_to_json(*p.ring) : Json{{"family", "poly"}, {"nvars", p.base.nvars()}};
  Json rels = Json::array();
  for (std::size_t c = 0; c < p.relations.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < p.relations.rows(); ++r) {
      if (!p.relations(r, c).is_zero()) col.push_back(Json{{"row", r}, {"terms", poly_to_json(p.relations(r, c))}});
    }
    rels.push_back(col);
  }
  return Json{{"ring", ring}, {"generators", p.generator_degrees}, {"relations", rels}};
}

GradedPresentation presentation_from_json(const Json& j) {
  const Json& ring = field(j, "ring");
  std::vector<int> gens;
  for (const Json& g : array_field(j, "generators")) gens.push_back(as_int(g, "generator degree"));
  std::vector<std::vector<Poly>> cols;
  for (const Json& c : array_field(j, "relations")) {
    if (!c.is_array()) throw ParseError("each relation must be an array of {row, terms} entries");
    std::vector<Poly> col(gens.size());
    for (const Json& e : c) {
      const int r = int_field(e, "row");
      if (r < 0 || r >= static_cast<int>(gens.size())) throw ParseError("relation row out of range");
      col[r] += poly_from_json(field(e, "terms"));
    }
    cols.push_back(std::move(col));
  }
  const Json& fam = field(ring, "family");
  if (fam.is_string() && fam.get<std::string>() == "poly") {
    return GradedPresentation::over_polynomial(int_field(ring, "nvars"), std::move(gens), std::move(cols));
  }
  return GradedPresentation::over_ring(ring_from_json(ring), std::move(gens), std::move(cols));
}

Json multiplicity_to_json(const RingSpec& ring, const MultiplicityReport& r) {
  Json j{{"e", rational_to_json(r.e)}};
  j["lower"] = r.lower ? rational_to_json(*r.lower) : Json(nullptr);
  j["upper"] = rational_to_json(r.upper);
  j["min_compatible"] = sequence_to_json(r.min_compatible);
  j["max_compatible"] = sequence_to_json(r.max_compatible);
  j["min_describe"] = r.min_compatible.describe(ring);
  j["max_describe"] = r.max_compatible.describe(ring);
  j["lower_equal"] = r.lower_equal;
  j["upper_equal"] = r.upper_equal;
  j["extremes_coincide"] = r.extremes_coincide;
  return j;
}

Json fan_report_to_json(const FanReport& r) {
  Json cases = Json::object();
  for (const auto& [c, n] : r.case_counts) cases[std::string(1, c)] = n;
  return Json{{"ring", ring_to_json(r.ring)},
              {"m", r.m},
              {"elements", r.elements},
              {"maximal_cones", r.maximal_cones},
              {"ambient_dimension", r.ambient_dimension},
              {"chain_lengths_ok", r.chain_lengths_ok},
              {"independence_ok", r.independence_ok},
              {"staircase_ok", r.staircase_ok},
              {"inside_ambient_ok", r.inside_ambient_ok},
              {"facets_matched", r.facets_matched},
              {"intersections_checked", r.intersections_checked},
              {"intersections_ok", r.intersections_ok},
              {"boundary_facets", r.boundary_facets},
              {"case_counts", cases},
              {"lower_left_counts", case_vector(r)},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

}  // namespace betti::json
