#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betti_cone/catalog.hpp"
#include "betti_cone/cone.hpp"
#include "betti_cone/fan.hpp"
#include "betti_cone/json_io.hpp"
#include "betti_cone/resolver.hpp"

namespace {

using betti::json::Json;

// Verification failed or the diagram is not in the cone: exit 1 with detail on stderr.
struct Rejected {
  Json detail;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw betti::ParseError("expected an integer for " + what + ", got \"" + s + "\"");
}

// "quadric", "quadric:a,b,c", "embdim1:n" or a JSON ring object.
betti::RingSpec parse_ring(const std::string& s) {
  if (!s.empty() && s.front() == '{') return betti::json::ring_from_json(betti::json::parse(s));
  if (s == "quadric") return betti::RingSpec::quadric(1, 0, 0);
  const auto colon = s.find(':');
  const std::string family = s.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (family == "embdim1" && !args.empty()) return betti::RingSpec::embdim1(to_int(args, "n"));
  if (family == "quadric") {
    const auto q = split(args, ',');
    if (q.size() != 3) throw betti::ParseError("quadric:a,b,c needs three coefficients");
    return betti::RingSpec::quadric(betti::parse_rational(q[0]), betti::parse_rational(q[1]),
                                    betti::parse_rational(q[2]));
  }
  throw betti::ParseError("unknown ring \"" + s + "\" (use quadric, quadric:a,b,c or embdim1:n)");
}

// "0,inf", "0,3,inf", "0,3" or "0,3,4,5" (checked against the implied tail), or JSON.
betti::DegreeSequence parse_sequence(const betti::RingSpec& ring, const std::string& s) {
  if (!s.empty() && s.front() == '{') return betti::json::sequence_from_json(ring, betti::json::parse(s));
  std::string body = s;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  auto t = split(body, ',');
  while (!t.empty() && (t.back() == "..." || t.back().empty())) t.pop_back();
  if (t.size() < 2) throw betti::ParseError("degree sequence needs at least d0 and d1: \"" + s + "\"");
  const int d0 = to_int(t[0], "d0");
  betti::DegreeSequence d;
  if (t[1] == "inf") d = betti::DegreeSequence::pd0(d0);
  else if (t.size() > 2 && t[2] == "inf") d = betti::DegreeSequence::pd1(d0, to_int(t[1], "d1"));
  else d = betti::DegreeSequence::inf(d0, to_int(t[1], "d1"));
  d.validate(ring);
  for (std::size_t i = 2; i < t.size(); ++i) {
    const auto expect = d.degree(ring, static_cast<int>(i));
    const bool ok = t[i] == "inf" ? !expect : (expect && to_int(t[i], "d_i") == *expect);
    if (!ok) throw betti::ParseError("entry " + std::to_string(i) + " of \"" + s + "\" does not follow the tail rule");
  }
  return d;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw betti::ParseError("cannot read \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

betti::BettiDiagram read_diagram(const std::string& path) {
  return betti::json::diagram_from_json(betti::json::parse(read_input(path)));
}

// Parses "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int k = to_int(s, "k");
    return {k, k};
  }
  const int a = to_int(s.substr(0, dots), "k");
  const int b = to_int(s.substr(dots + 2), "k");
  if (a > b) throw betti::ParseError("empty range \"" + s + "\"");
  return {a, b};
}

void check_in_cone(const betti::BettiDiagram& v) {
  if (auto bad = betti::membership(v.ring(), v)) {
    throw Rejected{Json{{"verdict", "NotInCone"}, {"violation", betti::json::violation_to_json(*bad)}}};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti diagrams over k[x]/<x^n> and k[x,y]/<quadric>: pure diagrams, cone membership, "
               "decompositions, fans and minimal resolutions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON instead of the text rendering");

  std::string ring_arg = "quadric", seq_arg, in_path, k_range, presentation_path;
  int m = 1, steps = 6, slack = 0;
  bool bounds = false, report = false, skip_intersections = false;

  auto* pure = app.add_subcommand("pure", "Print the pure diagram pi_d");
  pure->add_option("--ring", ring_arg, "quadric | quadric:a,b,c | embdim1:n")->capture_default_str();
  pure->add_option("--d", seq_arg, "Degree sequence, e.g. 0,inf | 0,3,inf | 0,3")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose a diagram into pure diagrams");
  decompose->add_option("--in", in_path, "Diagram JSON file, - for stdin")->required();

  auto* check = app.add_subcommand("check", "Decide cone membership");
  check->add_option("--in", in_path, "Diagram JSON file, - for stdin")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function values from a diagram");
  hilbert->add_option("--in", in_path, "Diagram JSON file, - for stdin")->required();
  hilbert->add_option("--k", k_range, "Degree or range a..b")->required();

  auto* mult = app.add_subcommand("mult", "Multiplicity of a diagram");
  mult->add_option("--in", in_path, "Diagram JSON file, - for stdin")->required();
  mult->add_flag("--bounds", bounds, "Also report the bounds from the extremal compatible sequences");

  auto* fan = app.add_subcommand("fan", "Verify the simplicial fan on a finite window");
  fan->add_option("--ring", ring_arg, "quadric | quadric:a,b,c | embdim1:n")->capture_default_str();
  fan->add_option("--m", m, "Window size")->required()->check(CLI::Range(0, 4));
  fan->add_flag("--report", report, "Print the full report");
  fan->add_flag("--skip-intersections", skip_intersections, "Skip the pairwise intersection check");

  auto* resolve = app.add_subcommand("resolve", "Minimal Betti diagram of a presented module");
  resolve->add_option("--presentation", presentation_path, "Presentation JSON file, - for stdin")->required();
  resolve->add_option("--steps", steps, "Number of resolution steps")->capture_default_str()->check(
      CLI::Range(1, 40));
  resolve->add_option("--slack", slack, "Extra degrees beyond the automatic bound")->check(CLI::Range(0, 100));

  auto* examples = app.add_subcommand("examples", "Recompute the stored reference examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pure) {
      const auto ring = parse_ring(ring_arg);
      const auto v = betti::pure_diagram(ring, parse_sequence(ring, seq_arg));
      std::cout << (as_json ? betti::json::diagram_to_json(v).dump(2) : betti::render(v, 6)) << "\n";
    } else if (*decompose) {
      const auto v = read_diagram(in_path);
      check_in_cone(v);
      const auto dec = betti::decompose(v.ring(), v);
      if (as_json) {
        std::cout << betti::json::decomposition_to_json(v.ring(), dec).dump(2) << "\n";
      } else {
        for (const auto& t : dec.terms) {
          std::cout << betti::to_string(t.coefficient) << " * " << t.sequence.describe(v.ring()) << "\n";
        }
      }
    } else if (*check) {
      const auto v = read_diagram(in_path);
      check_in_cone(v);
      std::cout << (as_json ? Json{{"verdict", "InCone"}}.dump() : std::string("InCone")) << "\n";
    } else if (*hilbert) {
      const auto v = read_diagram(in_path);
      const auto [a, b] = parse_range(k_range);
      Json out = Json::array();
      for (int k = a; k <= b; ++k) {
        const auto h = betti::hilbert_function(v.ring(), v, k);
        if (as_json) out.push_back(Json{{"k", k}, {"h", betti::json::rational_to_json(h)}});
        else std::cout << k << " " << betti::to_string(h) << "\n";
      }
      if (as_json) std::cout << out.dump(2) << "\n";
    } else if (*mult) {
      const auto v = read_diagram(in_path);
      if (bounds) {
        check_in_cone(v);
        const auto r = betti::multiplicity_bounds(v.ring(), v);
        if (as_json) {
          std::cout << betti::json::multiplicity_to_json(v.ring(), r).dump(2) << "\n";
        } else {
          std::cout << "e = " << betti::to_string(r.e) << "\n";
          std::cout << "lower = " << (r.lower ? betti::to_string(*r.lower) : "none") << " from "
                    << r.min_compatible.describe(v.ring()) << (r.lower_equal ? " (equal)" : "") << "\n";
          std::cout << "upper = " << betti::to_string(r.upper) << " from " << r.max_compatible.describe(v.ring())
                    << (r.upper_equal ? " (equal)" : "") << "\n";
        }
      } else {
        const auto e = betti::multiplicity(v.ring(), v);
        std::cout << (as_json ? Json{{"e", betti::json::rational_to_json(e)}}.dump() : betti::to_string(e)) << "\n";
      }
    } else if (*fan) {
      const auto r = betti::verify_fan(parse_ring(ring_arg), m, !skip_intersections);
      if (report || as_json) std::cout << betti::json::fan_report_to_json(r).dump(2) << "\n";
      else std::cout << betti::summary(r) << "\n";
      if (!r.ok()) throw Rejected{Json{{"verdict", "FanCheckFailed"}, {"failures", r.failures}}};
    } else if (*resolve) {
      const auto p = betti::json::presentation_from_json(betti::json::parse(read_input(presentation_path)));
      if (!p.ring) throw betti::ParseError("resolve needs a presentation over embdim1 or quadric");
      const auto v = betti::minimal_betti(*p.ring, p, steps, slack);
      std::cout << (as_json ? betti::json::diagram_to_json(v).dump(2) : betti::render(v, steps)) << "\n";
    } else if (*examples) {
      const auto entries = betti::run_catalog();
      std::size_t failed = 0;
      for (const auto& e : entries) {
        if (e.pass()) {
          std::cout << "ok    " << e.name << "\n";
        } else {
          ++failed;
          std::cout << "FAIL  " << e.name << "\n      expected: " << e.expected << "\n      actual:   " << e.actual
                    << "\n";
        }
      }
      std::cout << entries.size() - failed << "/" << entries.size() << " examples match\n";
      if (failed) throw Rejected{Json{{"verdict", "ExamplesFailed"}, {"failed", failed}}};
    }
  } catch (const Rejected& r) {
    std::cerr << r.detail.dump() << "\n";
    return 1;
  } catch (const betti::NotInCone& e) {
    std::cerr << Json{{"verdict", "NotInCone"}, {"violation", betti::json::violation_to_json(e.violation())}}.dump()
              << "\n";
    return 1;
  } catch (const betti::ParseError& e) {
    std::cerr << Json{{"error", "malformed input"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const betti::InvalidArgument& e) {
    std::cerr << Json{{"error", "invalid argument"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const betti::FamilyMismatch& e) {
    std::cerr << Json{{"error", "family mismatch"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const betti::TailInconsistency& e) {
    std::cerr << Json{{"error", "tail inconsistency"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const betti::Error& e) {
    std::cerr << Json{{"verdict", "VerificationFailed"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
