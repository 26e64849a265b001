// Dg-algebra presentations: graded quiver, relations, generator-wise
// differentials extended by the Leibniz rule d(uv) = (du)v + (-1)^|u| u(dv).
#pragma once

#include "palg/element.hpp"
#include "palg/parse.hpp"
#include "palg/report.hpp"
#include "palg/rewrite.hpp"

namespace palg {

struct DgPresentation {
  std::string name;
  QuiverPtr quiver;
  Field field = Field::Q();
  std::vector<AlgebraElement> relations;
  // arrow name -> differential; absent means zero. Degree-0 arrows and
  // central variables are closed by construction and may not appear here.
  std::map<std::string, AlgebraElement> differentials;

  /// Throws std::invalid_argument on ill-typed data: a differential that
  /// does not raise degree by one or has mismatched endpoints, a nonzero
  /// differential on a degree-0 generator, or an inhomogeneous relation.
  void validate() const;

  AlgebraElement diff_of_arrow(int arrow_id) const;
  /// Leibniz extension of d to an arbitrary element.
  AlgebraElement d(const AlgebraElement& u) const;

  int default_bound() const;  // 4k+8-style default, from max relation length
  RewriteSystem relation_rewrite(int bound) const;
};

DgPresentation build_Wk(int k, Field field);
DgPresentation build_Ak(int k, Field field);

/// d^2 = 0 on generators and d(relations) = 0 modulo the relation ideal.
CheckReport check_d_squared(const DgPresentation& p, const RewriteSystem& rs);

struct DgMorphismSpec {
  DgPresentation source;
  DgPresentation target;
  std::vector<int> vertex_map;                       // source vertex -> target vertex
  std::map<std::string, AlgebraElement> arrow_images;    // all source arrows
  std::map<std::string, AlgebraElement> central_images;  // all source centrals

  void validate() const;  // endpoint and degree preservation
  AlgebraElement apply(const AlgebraElement& u) const;
};

DgMorphismSpec identity_morphism(const DgPresentation& p);

CheckReport check_dg_morphism(const DgMorphismSpec& phi, const RewriteSystem& target_rs);

/// Substitutes x -> x1 - 1, y -> x2 + 1 into the model with relations
/// ab = x e0, ba = x e1 and matches the result term-by-term against the
/// x1/x2 model, relation list and differentials alike.
CheckReport change_of_variables_Ak_to_Wk(int k, Field field);

/// The substitution morphism used by the check above.
DgMorphismSpec ak_to_wk_morphism(int k, Field field);

std::string serialize_presentation(const DgPresentation& p);
DgPresentation parse_presentation(const std::string& text);

}  // namespace palg
