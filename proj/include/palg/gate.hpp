// Rule engine for admissible prime summands and the integer-slope surgery
// case analysis. Geometric inputs (the Kronheimer-Mrowka-Ozsvath-Szabo
// theorem, Howie's bound on summands of surgeries, the Gordon-Luecke
// reducible-surgery theorem, triviality of free-product group-algebra
// centers) enter as named axioms with citation tags; nothing geometric is
// re-derived here.
#pragma once

#include "palg/int_matrix.hpp"
#include "palg/report.hpp"

namespace palg {

enum class SummandKind { Lens, Prism, TypeT, TypeO, TypeI, S1xS2, Aspherical, Other };

struct SummandDescriptor {
  SummandKind kind = SummandKind::Other;
  long order = 0;  // lens: |pi_1| >= 2
  long m = 0;      // prism / type T, O, I parameter
  long n = 0;      // prism parameter

  static SummandDescriptor lens(long order);
  static SummandDescriptor prism(long m, long n);
  static SummandDescriptor type_t(long m);
  static SummandDescriptor type_o(long m);
  static SummandDescriptor type_i(long m);
  static SummandDescriptor s1xs2();
  static SummandDescriptor aspherical();

  /// Parses "lens(5)", "prism(1,2)", "typeT(1)", "typeO(1)", "typeI(1)",
  /// "s1xs2", "aspherical".
  static SummandDescriptor parse(const std::string& text);
  std::string str() const;
  void validate() const;
};

struct TraceEntry {
  std::string rule_id;   // stable id, e.g. rule.lensprism.prime-divides-k
  std::string citation;  // axiom or theorem tag
  std::string message;
};

struct GateVerdict {
  bool admissible = false;
  std::vector<TraceEntry> trace;
  std::string str() const;
};

/// Summand-level filter: aspherical and type T/O/I summands are rejected,
/// lens orders must have every prime factor dividing k, prism quotients
/// must be even-dihedral, S1xS2 passes at this level.
GateVerdict classify_summand(const SummandDescriptor& s, long k);

enum class KnotConfig { OneNontrivial, BothNontrivial };

/// Full surgery case analysis for slope k >= 1: Howie's summand bound, the
/// per-summand filters, first-homology comparison with Z_k via invariant
/// factors, the two-lens-space chain, and the terminal lens-space rule.
GateVerdict surgery_gate(long k, KnotConfig knots,
                         const std::vector<SummandDescriptor>& candidate);

/// Invariant factors of H_1 of the connected sum (0 entries = free rank).
std::vector<BigInt> candidate_h1(const std::vector<SummandDescriptor>& candidate);

}  // namespace palg
