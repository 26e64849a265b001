// Quivers with potential and their Ginzburg dg algebras.
#pragma once

#include "palg/presentation.hpp"

namespace palg {

/// A potential: degree-0 element whose monomials are cycles, central-free.
struct Potential {
  AlgebraElement element;
  void validate() const;
};

enum class DerivMode { Literal, CyclicOrbit };

/// Cyclic derivative with respect to a degree-0 arrow g: each way of
/// writing a monomial as p g q contributes q p. Literal mode counts every
/// occurrence; cyclic-orbit mode counts occurrences related by a cyclic
/// symmetry of the word once.
AlgebraElement cyclic_derivative(const Potential& w, const std::string& arrow, DerivMode mode);

/// The 2-cycle quiver: vertices 0, 1 and arrows e: 0 -> 1, f: 1 -> 0.
QuiverPtr two_cycle_quiver();

/// w_k = efe(1 + (fe+1) + ... + (fe+1)^(k-1))f, fully expanded.
Potential build_potential_wk(int k, Field field);

/// Adds a reversed degree -1 arrow g_star per arrow and a degree -2 loop
/// h<v> per vertex. Requires all input arrows in degree 0.
QuiverPtr enhance_quiver(const GradedQuiver& q);

enum class GinzMode { CyclicLiteral, CyclicOrbit, Explicit };

/// The Ginzburg dg algebra of (Q, W) on the enhanced quiver: dg = 0,
/// d(g_star) from the chosen cyclic-derivative mode or from explicit
/// overrides, dh_v = sum_{g out of v} g g_star - sum_{g into v} g_star g.
/// There are no relations; the presentation is the free dg path algebra.
DgPresentation ginzburg_dga(QuiverPtr base, const Potential& w, GinzMode mode,
                            const std::map<std::string, AlgebraElement>& overrides = {});

/// The 2-cycle family with potential w_k. Explicit mode installs
/// d(e_star) = fe(1+(fe+1)+...+(fe+1)^(k-1))f and
/// d(f_star) = efe(1+(fe+1)+...+(fe+1)^(k-1)).
DgPresentation build_Gk(int k, Field field, GinzMode mode);

struct ModeComparisonEntry {
  std::string arrow;       // the starred generator's base arrow
  AlgebraElement literal;
  AlgebraElement cyclic_orbit;
  AlgebraElement explicit_form;
};

struct ModeComparison {
  int k = 0;
  std::vector<ModeComparisonEntry> entries;
  bool literal_equals_explicit() const;
  bool orbit_equals_explicit() const;
  /// word -> (literal coefficient, explicit coefficient) for one arrow
  std::vector<std::tuple<std::string, std::string, std::string>> coefficient_table(
      const std::string& arrow) const;
};

ModeComparison compare_differential_modes(int k, Field field);

}  // namespace palg
