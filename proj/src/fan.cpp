#include "betti_cone/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "betti_cone/betti_diagram.hpp"

namespace betti {

namespace {

// First three columns of pi_d as a finite diagram.
BettiDiagram head(const RingSpec& ring, const DegreeSequence& d) {
  const BettiDiagram pure = pure_diagram(ring, d);
  std::vector<Column> cols;
  for (int i = 0; i <= 2; ++i) cols.push_back(pure.column(i));
  return BettiDiagram::make(ring, std::move(cols), std::nullopt);
}

bool in_window(const BettiDiagram& h, int m) {
  for (int i = 0; i <= h.last_column(); ++i) {
    for (const auto& [j, x] : h.columns()[i]) {
      if (j - i < -m || j - i > m) return false;
    }
  }
  return true;
}

// Coordinates of the first three columns over rows [lo, hi] of j - i.
linalg::Vector head_coordinates(const RingSpec& ring, const DegreeSequence& d, int lo, int hi) {
  const int rows = hi - lo + 1;
  linalg::Vector v(3 * rows);
  const BettiDiagram h = head(ring, d);
  for (int i = 0; i <= h.last_column(); ++i) {
    for (const auto& [j, x] : h.columns()[i]) {
      const int r = j - i;
      if (r < lo || r > hi) throw InvalidArgument(d.describe(ring) + " leaves the coordinate window");
      v[i * rows + (r - lo)] = x;
    }
  }
  return v;
}

bool staircase(const std::vector<linalg::Vector>& vecs) {
  for (std::size_t k = 0; k < vecs.size(); ++k) {
    bool found = false;
    for (std::size_t c = 0; c < vecs[k].size() && !found; ++c) {
      if (sgn(vecs[k][c]) == 0) continue;
      bool clear = true;
      for (std::size_t l = k + 1; l < vecs.size() && clear; ++l) clear = sgn(vecs[l][c]) == 0;
      found = clear;
    }
    if (!found) return false;
  }
  return true;
}

std::size_t chain_rank(const std::vector<linalg::Vector>& vecs) {
  if (vecs.empty()) return 0;
  return linalg::rank(linalg::Matrix::from_rows(vecs, vecs.front().size()));
}

bool is_inf(const std::optional<DegreeSequence>& d) { return d && d->kind == SeqKind::Inf; }
bool is_pd1(const std::optional<DegreeSequence>& d) { return d && d->kind == SeqKind::Pd1; }
bool is_pd0(const std::optional<DegreeSequence>& d) { return d && d->kind == SeqKind::Pd0; }

char quadric_case(int m, const std::optional<DegreeSequence>& lo, const DegreeSequence& d,
                  const std::optional<DegreeSequence>& hi) {
  if (!lo) return 'h';
  if (!hi) {
    if (*lo == DegreeSequence::pd1(m, m + 1)) return 'f';
    if (*lo == DegreeSequence::pd0(m - 1)) return 'g';
    return '?';
  }
  if (is_inf(lo) && lo->d1 == m + 1 && d == DegreeSequence::pd1(lo->d0, m + 1) &&
      *hi == DegreeSequence::pd0(lo->d0)) {
    return 'e';
  }
  if (is_pd1(lo) && lo->d1 == lo->d0 + 1 && *hi == DegreeSequence::inf(lo->d0 + 1, lo->d0 + 2)) {
    return 'c';
  }
  if (hi->d0 - lo->d0 == 2) return 'd';
  const bool step0 = hi->d0 - lo->d0 == 1;
  const bool step1 = hi->kind != SeqKind::Pd0 && lo->kind != SeqKind::Pd0 && hi->d1 - lo->d1 == 1;
  if (step0 != step1) {
    if (is_pd1(lo) && is_pd1(hi)) return 'a';
    if (is_inf(lo) && is_inf(hi)) return 'b';
  }
  return '?';
}

char embdim1_case(int m, int n, const std::optional<DegreeSequence>& lo, const DegreeSequence& d,
                  const std::optional<DegreeSequence>& hi) {
  if (!lo) return 'h';
  if (!hi) return (d == DegreeSequence::pd0(m) && *lo == DegreeSequence::pd0(m - 1)) ? 'i' : '?';
  if (is_pd0(lo) && d.kind == SeqKind::Pd0 && is_pd0(hi)) return 'g';
  if (is_inf(lo) && d == DegreeSequence::pd0(-m) && *hi == DegreeSequence::pd0(-m + 1)) return 'f';
  if (is_inf(lo) && d.kind == SeqKind::Inf && is_pd0(hi)) return 'e';
  if (!is_inf(lo) || d.kind != SeqKind::Inf || !is_inf(hi)) return '?';
  const int x = lo->d0;
  // For n = 2 every finite sequence is (x, x + 1, ...), so the steps of (a) and (b) coincide.
  if (n == 2 && d.d0 == x + 1 && hi->d0 == x + 2) return 'a';
  if (lo->d1 == d.d1 && d.d1 == hi->d1 && d.d0 == x + 1 && hi->d0 == x + 2) return 'a';
  if (lo->d0 == d.d0 && d.d0 == hi->d0 && d.d1 == lo->d1 + 1 && hi->d1 == lo->d1 + 2) return 'b';
  if (lo->d1 == x + 1 && d == DegreeSequence::inf(x, x + 2) && *hi == DegreeSequence::inf(x + 1, x + 2)) {
    return 'c';
  }
  if (lo->d1 == x + n - 1 && d == DegreeSequence::inf(x + 1, x + n - 1) &&
      *hi == DegreeSequence::inf(x + 1, x + n)) {
    return 'd';
  }
  return '?';
}

std::optional<FunctionalId> predicted_halfspace(const RingSpec& ring, int m, char tag,
                                                const std::optional<DegreeSequence>& lo,
                                                const DegreeSequence& d) {
  const int n = ring.n();
  if (ring.is_quadric()) {
    switch (tag) {
      case 'a':
      case 'h':
        if (auto d2 = d.degree(ring, 2)) return Eps{2, *d2};
        return std::nullopt;
      case 'b':
        return AlphaQ{d.d1};
      case 'e':
        return AlphaQ{m + 1};
      case 'c':
      case 'f':
        return Gamma{lo->d0};
      case 'd':
      case 'g':
        return Eps{0, d.d0};
      default:
        return std::nullopt;
    }
  }
  switch (tag) {
    case 'a':
      return Eps{2, d.d0 + n};
    case 'b':
      return Eps{1, d.d1};
    case 'c':
      return Theta{lo->d0 + n};
    case 'd':
      return Eta{lo->d0 + n - 1};
    case 'e':
      return Eps{1, m + 1};
    case 'f':
      return AlphaA{0, -m};
    case 'g':
      return AlphaA{0, lo->d0 + 1};
    case 'h':
      return Eps{1, -m + 1};
    case 'i':
      if (n > 2) return Eps{0, m};
      return AlphaA{0, m};
    default:
      return std::nullopt;
  }
}

bool supports_facet(const FunctionalId& f, const std::vector<BettiDiagram>& chain_heads,
                    const BettiDiagram& extension_head) {
  for (const auto& h : chain_heads) {
    if (sgn(eval(f, h)) != 0) return false;
  }
  return sgn(eval(f, extension_head)) > 0;
}

BoundaryFacetReport boundary_report(const PosetWindow& w, const Chain& c, const DegreeSequence& extension) {
  BoundaryFacetReport r;
  r.chain = c;
  r.extension = extension;
  for (const auto& e : c) {
    if (precedes(w.ring, e, r.extension)) r.below = e;  // chain is sorted, keep the last
    else if (!r.above) r.above = e;
  }
  r.case_tag = w.ring.is_quadric() ? quadric_case(w.m, r.below, r.extension, r.above)
                                   : embdim1_case(w.m, w.ring.n(), r.below, r.extension, r.above);

  std::vector<BettiDiagram> heads;
  for (const auto& e : c) heads.push_back(head(w.ring, e));
  const BettiDiagram ext = head(w.ring, r.extension);
  if (auto guess = predicted_halfspace(w.ring, w.m, r.case_tag, r.below, r.extension);
      guess && supports_facet(*guess, heads, ext)) {
    r.matched = *guess;
    r.predicted = true;
    return r;
  }
  for (const auto& f : window_halfspaces(w.ring, w.m)) {
    if (supports_facet(f, heads, ext)) {
      r.matched = f;
      break;
    }
  }
  return r;
}

struct ChainLess {
  bool operator()(const Chain& a, const Chain& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
  }
};

}  // namespace

PosetWindow enumerate_window(const RingSpec& ring, int m) {
  if (m < 0) throw InvalidArgument("window size m must be >= 0");
  PosetWindow w{ring, m, {}};
  const int reach = m + ring.relation_degree() + 2;
  std::vector<DegreeSequence> candidates;
  for (int d0 = -reach; d0 <= reach; ++d0) {
    candidates.push_back(DegreeSequence::pd0(d0));
    for (int d1 = d0 + 1; d1 <= reach; ++d1) {
      if (ring.is_quadric()) candidates.push_back(DegreeSequence::pd1(d0, d1));
      if (ring.is_quadric() || d1 < d0 + ring.n()) candidates.push_back(DegreeSequence::inf(d0, d1));
    }
  }
  for (const auto& d : candidates) {
    if (in_window(head(ring, d), m)) w.elements.push_back(d);
  }
  std::sort(w.elements.begin(), w.elements.end(), canonical_less);
  return w;
}

std::vector<Chain> maximal_chains(const PosetWindow& w) {
  const auto& el = w.elements;
  const std::size_t n = el.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) less[a][b] = precedes(w.ring, el[a], el[b]);
  }
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) direct = !(less[a][c] && less[c][b]);
      if (direct) covers[a].push_back(b);
    }
  }
  std::vector<Chain> out;
  Chain path;
  std::function<void(std::size_t)> walk = [&](std::size_t a) {
    path.push_back(el[a]);
    if (covers[a].empty()) out.push_back(path);
    for (auto b : covers[a]) walk(b);
    path.pop_back();
  };
  for (std::size_t a = 0; a < n; ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < n && minimal; ++b) minimal = !less[b][a];
    if (minimal) walk(a);
  }
  return out;
}

bool is_chain(const RingSpec& ring, const Chain& c) {
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (!precedes(ring, c[k], c[k + 1])) return false;
  }
  return true;
}

bool check_chain_independence(const RingSpec& ring, const Chain& c) {
  for (const auto& d : c) d.validate(ring);
  if (!is_chain(ring, c)) return false;
  if (c.empty()) return true;
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& d : c) {
    auto rows = head(ring, d).row_range();
    if (!rows) continue;
    lo = first ? rows->first : std::min(lo, rows->first);
    hi = first ? rows->second : std::max(hi, rows->second);
    first = false;
  }
  std::vector<linalg::Vector> vecs;
  for (const auto& d : c) vecs.push_back(head_coordinates(ring, d, lo, hi));
  return chain_rank(vecs) == c.size() && staircase(vecs);
}

linalg::Vector window_coordinates(const RingSpec& ring, int m, const DegreeSequence& d) {
  return head_coordinates(ring, d, -m, m);
}

std::vector<FunctionalId> window_halfspaces(const RingSpec& ring, int m) {
  std::vector<FunctionalId> out;
  for (int i = 0; i <= 2; ++i) {
    for (int j = -m + i; j <= m + i; ++j) out.push_back(Eps{i, j});
  }
  if (ring.is_quadric()) {
    for (int k = -m; k <= m; ++k) out.push_back(AlphaQ{k});
    for (int k = -m; k <= m; ++k) out.push_back(Gamma{k});
    return out;
  }
  const int n = ring.n();
  for (int j = -m; j <= m + 2 - n; ++j) out.push_back(AlphaA{0, j});
  for (int k = n - m - 1; k <= m + 2; ++k) out.push_back(Theta{k});
  for (int k = -m + 1; k <= m + 1; ++k) out.push_back(Eta{k});
  return out;
}

std::optional<BoundaryFacetReport> classify_submaximal(const PosetWindow& w, const Chain& c) {
  if (!is_chain(w.ring, c)) throw NotSubmaximal("not a chain");
  std::set<std::size_t> used;
  for (const auto& d : c) {
    auto it = std::find(w.elements.begin(), w.elements.end(), d);
    if (it == w.elements.end()) throw NotSubmaximal(d.describe(w.ring) + " is outside P_m");
    used.insert(static_cast<std::size_t>(it - w.elements.begin()));
  }
  const auto chains = maximal_chains(w);
  std::vector<DegreeSequence> extensions;
  for (std::size_t k = 0; k < w.elements.size(); ++k) {
    if (used.count(k)) continue;
    Chain candidate = c;
    candidate.push_back(w.elements[k]);
    std::sort(candidate.begin(), candidate.end(), [&](const auto& a, const auto& b) {
      return precedes(w.ring, a, b);
    });
    if (!is_chain(w.ring, candidate)) continue;
    if (std::find(chains.begin(), chains.end(), candidate) != chains.end()) {
      extensions.push_back(w.elements[k]);
    }
  }
  if (extensions.empty()) throw NotSubmaximal("no element completes the chain to a maximal one");
  if (extensions.size() > 1) return std::nullopt;

  return boundary_report(w, c, extensions.front());
}

Chain lower_left_chain(const PosetWindow& w) {
  const auto chains = maximal_chains(w);
  if (chains.empty()) return {};
  // Lexicographically largest sequence of d0 values, ties to canonical order.
  auto key = [](const Chain& c) {
    std::vector<int> k;
    for (const auto& d : c) k.push_back(d.d0);
    return k;
  };
  return *std::max_element(chains.begin(), chains.end(), [&](const Chain& a, const Chain& b) {
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), canonical_less);
  });
}

std::vector<std::size_t> case_vector(const FanReport& r) {
  const char last = r.ring.is_quadric() ? 'h' : 'i';
  std::vector<std::size_t> out;
  for (char t = 'a'; t <= last; ++t) {
    auto it = r.lower_left_counts.find(t);
    out.push_back(it == r.lower_left_counts.end() ? 0 : it->second);
  }
  return out;
}

std::string summary(const FanReport& r) {
  std::string s = std::to_string(r.maximal_cones) + " maximal cones, dim " + std::to_string(r.ambient_dimension);
  if (r.ok()) return s + ", all facets matched";
  return s + ", " + std::to_string(r.failures.size()) + " checks failed";
}

FanReport verify_fan(const RingSpec& ring, int m, bool check_intersections) {
  FanReport rep(ring, m);
  const PosetWindow w = enumerate_window(ring, m);
  const auto chains = maximal_chains(w);
  rep.elements = w.elements.size();
  rep.maximal_cones = chains.size();

  const std::size_t coords = 3 * (2 * m + 1);
  std::vector<linalg::Vector> constraints;
  if (!ring.is_quadric()) {
    // W_m-bar: eta_inf = 0 and v_{2,j} = 0 for -m + 2 <= j < n - m.
    // For n = 2 the pairs theta_{k+1} = -eta_k force every eta_k to vanish,
    // so row by row v_{1,j} = v_{2,j+1}.
    const int rows = 2 * m + 1;
    linalg::Vector eta(coords);
    for (int r = 0; r < rows; ++r) {
      eta[rows + r] = 1;
      eta[2 * rows + r] = -1;
      if (ring.n() == 2) {
        linalg::Vector e(coords);
        e[rows + r] = 1;
        e[2 * rows + r] = -1;
        constraints.push_back(e);
      }
    }
    constraints.push_back(eta);
    for (int j = -m + 2; j < ring.n() - m; ++j) {
      const int r = j - 2;
      if (r < -m || r > m) continue;
      linalg::Vector e(coords);
      e[2 * rows + (r + m)] = 1;
      constraints.push_back(e);
    }
  }
  rep.ambient_dimension =
      coords - (constraints.empty() ? 0 : linalg::rank(linalg::Matrix::from_rows(constraints, coords)));
  rep.expected_chain_length = rep.ambient_dimension;

  std::map<DegreeSequence, linalg::Vector, decltype(&canonical_less)> coord(canonical_less);
  for (const auto& d : w.elements) {
    coord.emplace(d, window_coordinates(ring, m, d));
    for (const auto& row : constraints) {
      Rational dot = 0;
      for (std::size_t k = 0; k < coords; ++k) dot += row[k] * coord.at(d)[k];
      if (sgn(dot) != 0) {
        rep.inside_ambient_ok = false;
        rep.failures.push_back(d.describe(ring) + " leaves the ambient subspace");
      }
    }
  }

  auto record = [&](const std::string& what, const Chain& c) {
    std::string s = what + ":";
    for (const auto& d : c) s += " " + d.describe(ring);
    rep.failures.push_back(s);
  };

  for (const auto& c : chains) {
    if (c.size() != rep.expected_chain_length) {
      rep.chain_lengths_ok = false;
      record("chain length " + std::to_string(c.size()), c);
    }
    std::vector<linalg::Vector> vecs;
    for (const auto& d : c) vecs.push_back(coord.at(d));
    if (chain_rank(vecs) != c.size()) {
      rep.independence_ok = false;
      record("dependent chain", c);
    }
    if (!staircase(vecs)) {
      rep.staircase_ok = false;
      record("no staircase", c);
    }
  }

  // A submaximal chain is a boundary facet when exactly one maximal chain contains it.
  std::map<Chain, std::vector<std::pair<std::size_t, DegreeSequence>>, ChainLess> owners;
  for (std::size_t x = 0; x < chains.size(); ++x) {
    for (std::size_t k = 0; k < chains[x].size(); ++k) {
      Chain sub = chains[x];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      owners[sub].emplace_back(x, chains[x][k]);
    }
  }
  const Chain lower_left = lower_left_chain(w);
  for (const auto& [sub, who] : owners) {
    if (who.size() != 1) continue;
    const auto facet = boundary_report(w, sub, who.front().second);
    ++rep.boundary_facets;
    ++rep.case_counts[facet.case_tag];
    if (chains[who.front().first] == lower_left) ++rep.lower_left_counts[facet.case_tag];
    if (!facet.matched || facet.case_tag == '?') {
      rep.facets_matched = false;
      record(std::string("unmatched boundary facet (case ") + facet.case_tag + ")", sub);
    }
  }

  if (check_intersections) {
    rep.intersections_checked = true;
    for (std::size_t x = 0; x < chains.size(); ++x) {
      for (std::size_t y = x + 1; y < chains.size(); ++y) {
        const Chain& a = chains[x];
        const Chain& b = chains[y];
        // Feasible iff some point lies in both cones but not in the cone of
        // the shared generators: then the intersection is not a common face.
        linalg::Matrix lp(coords + 1, a.size() + b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
          const auto& v = coord.at(a[k]);
          for (std::size_t r = 0; r < coords; ++r) lp(r, k) = v[r];
          if (std::find(b.begin(), b.end(), a[k]) == b.end()) lp(coords, k) = 1;
        }
        for (std::size_t k = 0; k < b.size(); ++k) {
          const auto& v = coord.at(b[k]);
          for (std::size_t r = 0; r < coords; ++r) lp(r, a.size() + k) = -v[r];
          if (std::find(a.begin(), a.end(), b[k]) == a.end()) lp(coords, a.size() + k) = 1;
        }
        linalg::Vector rhs(coords + 1);
        rhs[coords] = 1;
        if (linalg::nonnegative_feasible(lp, rhs)) {
          rep.intersections_ok = false;
          record("cones meet outside a common face", a);
        }
      }
    }
  }
  return rep;
}

}  // namespace betti
