#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "betti_cone/betti_diagram.hpp"

namespace betti {

// Quadric ring functionals.
struct Eps { int i; int j; friend bool operator==(const Eps&, const Eps&) = default; };
struct AlphaQ { int k; friend bool operator==(const AlphaQ&, const AlphaQ&) = default; };
struct Gamma { int k; friend bool operator==(const Gamma&, const Gamma&) = default; };
/// eps_{i,j} - eps_{i+1,j+1}; an equality for i >= 2.
struct Shift { int i; int j; friend bool operator==(const Shift&, const Shift&) = default; };
// k[x]/<x^n> functionals.
/// eps_{i,k} - eps_{i+2,k+n}; an equality for i >= 1.
struct AlphaA { int i; int k; friend bool operator==(const AlphaA&, const AlphaA&) = default; };
struct Theta { int k; friend bool operator==(const Theta&, const Theta&) = default; };
struct Eta { int k; friend bool operator==(const Eta&, const Eta&) = default; };
struct EtaInf { friend bool operator==(const EtaInf&, const EtaInf&) = default; };

using FunctionalId = std::variant<Eps, AlphaQ, Gamma, Shift, AlphaA, Theta, Eta, EtaInf>;

/// Family name used in reports and JSON: "eps", "alpha", "gamma", "shift",
/// "alpha_a", "theta", "eta", "eta_inf".
std::string family_name(const FunctionalId& f);
std::string describe(const FunctionalId& f);

/// Equality constraints are checked as "== 0", the rest as ">= 0".
bool is_equality(const FunctionalId& f);

/// Throws FamilyMismatch if f is not defined for the ring's family.
void check_family(const FunctionalId& f, const RingSpec& ring);

Rational eval(const FunctionalId& f, const BettiDiagram& v);

/// InCone, or the first violated functional and its value.
struct Violation {
  FunctionalId functional;
  Rational value;
};
using MembershipVerdict = std::optional<Violation>;  // nullopt == InCone

/// The finite list of functionals that decides membership for diagrams whose
/// supports lie inside the union of the given windows. Order: entries,
/// equalities, then the alpha / gamma-theta / eta families by increasing k.
std::vector<FunctionalId> active_functionals(const RingSpec& ring,
                                             const std::vector<const BettiDiagram*>& diagrams);

/// Exact cone membership. Throws FamilyMismatch if v lives over another ring.
MembershipVerdict membership(const RingSpec& ring, const BettiDiagram& v);

}  // namespace betti
