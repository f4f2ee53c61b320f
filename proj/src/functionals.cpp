#include "betti_cone/functionals.hpp"

#include <algorithm>
#include <set>

#include "betti_cone/errors.hpp"

namespace betti {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Rational sum_up_to(const Column& c, int k) {
  Rational s = 0;
  for (auto it = c.begin(); it != c.end() && it->first <= k; ++it) s += it->second;
  return s;
}

Rational total(const Column& c) {
  Rational s = 0;
  for (const auto& [j, v] : c) s += v;
  return s;
}

}  // namespace

std::string family_name(const FunctionalId& f) {
  return std::visit(overloaded{
                        [](const Eps&) { return "eps"; },
                        [](const AlphaQ&) { return "alpha"; },
                        [](const Gamma&) { return "gamma"; },
                        [](const Shift&) { return "shift"; },
                        [](const AlphaA&) { return "alpha_a"; },
                        [](const Theta&) { return "theta"; },
                        [](const Eta&) { return "eta"; },
                        [](const EtaInf&) { return "eta_inf"; },
                    },
                    f);
}

std::string describe(const FunctionalId& f) {
  using std::to_string;
  return std::visit(
      overloaded{
          [](const Eps& e) { return "eps_{" + to_string(e.i) + "," + to_string(e.j) + "}"; },
          [](const AlphaQ& a) { return "alpha_{" + to_string(a.k) + "}"; },
          [](const Gamma& g) { return "gamma_{" + to_string(g.k) + "}"; },
          [](const Shift& s) {
            return "eps_{" + to_string(s.i) + "," + to_string(s.j) + "} - eps_{" +
                   to_string(s.i + 1) + "," + to_string(s.j + 1) + "}";
          },
          [](const AlphaA& a) { return "alpha_{" + to_string(a.i) + "," + to_string(a.k) + "}"; },
          [](const Theta& t) { return "theta_{" + to_string(t.k) + "}"; },
          [](const Eta& e) { return "eta_{" + to_string(e.k) + "}"; },
          [](const EtaInf&) { return std::string("eta_inf"); },
      },
      f);
}

bool is_equality(const FunctionalId& f) {
  if (std::holds_alternative<Shift>(f) || std::holds_alternative<EtaInf>(f)) return true;
  if (auto* a = std::get_if<AlphaA>(&f)) return a->i >= 1;
  return false;
}

void check_family(const FunctionalId& f, const RingSpec& ring) {
  const bool quadric_only = std::holds_alternative<AlphaQ>(f) || std::holds_alternative<Gamma>(f) ||
                            std::holds_alternative<Shift>(f);
  const bool embdim1_only = std::holds_alternative<AlphaA>(f) || std::holds_alternative<Theta>(f) ||
                            std::holds_alternative<Eta>(f) || std::holds_alternative<EtaInf>(f);
  if ((quadric_only && !ring.is_quadric()) || (embdim1_only && ring.is_quadric())) {
    throw FamilyMismatch(describe(f) + " is not defined over " + ring.describe());
  }
  if (auto* e = std::get_if<Eps>(&f); e && e->i < 0) throw InvalidArgument("eps needs i >= 0");
  if (auto* s = std::get_if<Shift>(&f); s && s->i < 0) throw InvalidArgument("shift needs i >= 0");
  if (auto* a = std::get_if<AlphaA>(&f); a && a->i < 0) throw InvalidArgument("alpha needs i >= 0");
}

Rational eval(const FunctionalId& f, const BettiDiagram& v) {
  check_family(f, v.ring());
  const int n = v.ring().n();
  return std::visit(
      overloaded{
          [&](const Eps& e) { return v.entry(e.i, e.j); },
          [&](const AlphaQ& a) { return Rational(v.entry(1, a.k) - v.entry(2, a.k + 1)); },
          [&](const Gamma& g) {
            return Rational(2 * sum_up_to(v.column(0), g.k) - 2 * sum_up_to(v.column(1), g.k + 1) +
                            sum_up_to(v.column(2), g.k + 2));
          },
          [&](const Shift& s) { return Rational(v.entry(s.i, s.j) - v.entry(s.i + 1, s.j + 1)); },
          [&](const AlphaA& a) { return Rational(v.entry(a.i, a.k) - v.entry(a.i + 2, a.k + n)); },
          [&](const Theta& t) {
            return Rational(sum_up_to(v.column(2), t.k) - sum_up_to(v.column(1), t.k - n + 1));
          },
          [&](const Eta& e) {
            return Rational(sum_up_to(v.column(1), e.k) - sum_up_to(v.column(2), e.k + 1));
          },
          [&](const EtaInf&) { return Rational(total(v.column(1)) - total(v.column(2))); },
      },
      f);
}

std::vector<FunctionalId> active_functionals(const RingSpec& ring,
                                             const std::vector<const BettiDiagram*>& diagrams) {
  const int p = ring.tail_period();
  int horizon = 2;
  int equality_reach = 0;
  for (const auto* v : diagrams) {
    horizon = std::max(horizon, v->horizon());
    int base = std::max(v->last_column(), ring.tail_anchor());
    if (v->tail()) base = std::max(base, v->tail()->anchor);
    equality_reach = std::max(equality_reach, base + std::max(p, v->tail() ? v->tail()->period : 0));
  }

  std::vector<std::set<int>> support(horizon + 3);
  for (const auto* v : diagrams) {
    for (int i = 0; i < static_cast<int>(support.size()); ++i) {
      for (const auto& [j, x] : v->column(i)) support[i].insert(j);
    }
  }

  std::vector<FunctionalId> out;
  for (int i = 0; i <= horizon; ++i) {
    for (int j : support[i]) out.push_back(Eps{i, j});
  }

  auto degrees_near = [&](int i, int partner, int offset) {
    std::set<int> js(support[i]);
    for (int j : support[partner]) js.insert(j - offset);
    return js;
  };
  if (ring.is_quadric()) {
    support.resize(std::max<int>(support.size(), equality_reach + 2));
    for (const auto* v : diagrams) {
      for (int i = horizon + 3; i <= equality_reach + 1; ++i) {
        for (const auto& [j, x] : v->column(i)) support[i].insert(j);
      }
    }
    for (int i = 2; i <= equality_reach; ++i) {
      for (int j : degrees_near(i, i + 1, 1)) out.push_back(Shift{i, j});
    }
  } else {
    support.resize(std::max<int>(support.size(), equality_reach + 3));
    for (const auto* v : diagrams) {
      for (int i = horizon + 3; i <= equality_reach + 2; ++i) {
        for (const auto& [j, x] : v->column(i)) support[i].insert(j);
      }
    }
    for (int i = 1; i <= equality_reach; ++i) {
      for (int k : degrees_near(i, i + 2, ring.n())) out.push_back(AlphaA{i, k});
    }
    out.push_back(EtaInf{});
  }

  std::optional<std::pair<int, int>> range;
  for (int i = 0; i <= 2; ++i) {
    for (int j : support[i]) {
      if (!range) range = {j, j};
      range->first = std::min(range->first, j);
      range->second = std::max(range->second, j);
    }
  }
  if (!range) return out;
  const int pad = ring.relation_degree() + 2;
  const int lo = range->first - pad;
  const int hi = range->second + pad;
  if (ring.is_quadric()) {
    for (int k = lo; k <= hi; ++k) out.push_back(AlphaQ{k});
    for (int k = lo; k <= hi; ++k) out.push_back(Gamma{k});
  } else {
    for (int k = lo; k <= hi; ++k) out.push_back(AlphaA{0, k});
    for (int k = lo; k <= hi; ++k) out.push_back(Theta{k});
    for (int k = lo; k <= hi; ++k) out.push_back(Eta{k});
  }
  return out;
}

MembershipVerdict membership(const RingSpec& ring, const BettiDiagram& v) {
  if (!(v.ring() == ring)) {
    throw FamilyMismatch("diagram over " + v.ring().describe() + " tested against " +
                         ring.describe());
  }
  for (const auto& f : active_functionals(ring, {&v})) {
    Rational x = eval(f, v);
    if (is_equality(f) ? sgn(x) != 0 : sgn(x) < 0) return Violation{f, std::move(x)};
  }
  return std::nullopt;
}

}  // namespace betti
