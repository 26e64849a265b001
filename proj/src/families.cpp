#include "palg/families.hpp"

#include <sstream>

namespace palg {

int default_family_bound(int k) { return 4 * k + 8; }

std::string FamilyReport::str() const {
  std::ostringstream os;
  os << "family suite k=" << k << " field=" << field.str() << " bound=" << bound << "\n";
  os << checks.str();
  for (const auto& [name, value] : payloads) os << "  " << name << " = " << value << "\n";
  os << "status: " << outcome_str(checks.overall()) << "\n";
  return os.str();
}

FamilyReport run_family_suite(int k, Field field, int bound) {
  if (k < 1) throw std::invalid_argument("run_family_suite: k must be >= 1");
  if (!field.is_field()) throw std::invalid_argument("run_family_suite: need a field (q or p:<prime>)");
  FamilyReport rep;
  rep.k = k;
  rep.field = field;
  rep.bound = bound > 0 ? bound : default_family_bound(k);
  bound = rep.bound;

  auto guard = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      rep.checks.add(name, Outcome::Fail, e.what());
    }
  };

  std::optional<DgPresentation> wk, ak, gk;
  guard("build.wk", [&] {
    wk = build_Wk(k, field);
    rep.checks.add("build.wk", Outcome::Pass);
  });
  guard("build.ak", [&] {
    ak = build_Ak(k, field);
    rep.checks.add("build.ak", Outcome::Pass);
  });
  guard("build.gk", [&] {
    gk = build_Gk(k, field, GinzMode::Explicit);
    rep.checks.add("build.gk", Outcome::Pass);
  });
  if (!wk || !ak || !gk) return rep;

  // full-relation rewrite systems, cached for reuse across checks
  std::map<std::string, RewriteSystem> cache;
  auto full_rs = [&](const DgPresentation& p) -> const RewriteSystem& {
    std::string key = p.name + "|" + field.str() + "|" + std::to_string(bound);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, complete(p.quiver, field, p.relations, bound)).first;
    return it->second;
  };

  guard("d2.wk", [&] {
    rep.checks.add("d2.wk", check_d_squared(*wk, full_rs(*wk)).overall());
  });
  guard("d2.ak", [&] {
    rep.checks.add("d2.ak", check_d_squared(*ak, full_rs(*ak)).overall());
  });
  guard("d2.gk", [&] {
    rep.checks.add("d2.gk", check_d_squared(*gk, full_rs(*gk)).overall());
  });

  guard("phi.dg-morphism", [&] {
    DgMorphismSpec phi{*gk, *ak, {0, 1}, {}, {}};
    QuiverPtr q = ak->quiver;
    phi.arrow_images.insert_or_assign("e", parse_element("a", q, field));
    phi.arrow_images.insert_or_assign("f", parse_element("b", q, field));
    phi.arrow_images.insert_or_assign("e_star", parse_element("beta*b - b*alpha", q, field));
    phi.arrow_images.insert_or_assign("f_star", parse_element("a*beta - alpha*a", q, field));
    phi.arrow_images.insert_or_assign("h0", AlgebraElement::zero(q, field));
    phi.arrow_images.insert_or_assign("h1", AlgebraElement::zero(q, field));
    rep.checks.add("phi.dg-morphism", check_dg_morphism(phi, full_rs(*ak)).overall());
  });

  guard("change-of-vars.match", [&] {
    rep.checks.add("change-of-vars.match", change_of_variables_Ak_to_Wk(k, field).overall());
  });

  std::optional<FiniteDimAlgebra> hw, ha, hg;
  auto run_h0 = [&](const std::string& name, const DgPresentation& p,
                    std::optional<FiniteDimAlgebra>& out) {
    H0Result r = h0(p, bound);
    rep.checks.add(name, r.outcome, r.detail);
    if (r.algebra) {
      rep.payload(name + ".dim", std::to_string(r.algebra->dim()));
      out = std::move(r.algebra);
    }
  };
  guard("h0.wk", [&] { run_h0("h0.wk", *wk, hw); });
  guard("h0.ak", [&] { run_h0("h0.ak", *ak, ha); });
  guard("h0.gk", [&] { run_h0("h0.gk", *gk, hg); });

  guard("h0.dims-equal", [&] {
    if (!hw || !ha || !hg) {
      rep.checks.add("h0.dims-equal", Outcome::Inconclusive, "an H0 computation was inconclusive");
      return;
    }
    bool eq = hw->dim() == ha->dim() && ha->dim() == hg->dim();
    rep.checks.add("h0.dims-equal", eq ? Outcome::Pass : Outcome::Fail,
                   std::to_string(hw->dim()) + "/" + std::to_string(ha->dim()) + "/" +
                       std::to_string(hg->dim()));
  });

  guard("h0.phi-iso", [&] {
    if (!hg || !ha) {
      rep.checks.add("h0.phi-iso", Outcome::Inconclusive);
      return;
    }
    CheckReport iso = algebra_iso_check(*hg, *ha, {{"e", "a"}, {"f", "b"}}, {0, 1});
    rep.checks.add("h0.phi-iso", iso.overall());
  });

  guard("identity.x1-unit-relation", [&] {
    if (!hw) {
      rep.checks.add("identity.x1-unit-relation", Outcome::Inconclusive);
      return;
    }
    bool ok = verify_identity(*hw, "(x1-1)*(x1^" + std::to_string(k) + "-1)");
    rep.checks.add("identity.x1-unit-relation", ok ? Outcome::Pass : Outcome::Fail);
  });

  if (field.kind == FieldKind::Rationals) {
    guard("units.x1-semisimplified-order", [&] {
      if (!hw) {
        rep.checks.add("units.x1-semisimplified-order", Outcome::Inconclusive);
        return;
      }
      SemisimplifiedOrderResult r = central_semisimplified_order(*hw, "x1", 2 * k + 4);
      rep.payload("units.x1-semisimplified-order", std::to_string(r.order));
      rep.checks.add("units.x1-semisimplified-order",
                     r.outcome == Outcome::Pass && r.order == k ? Outcome::Pass : Outcome::Fail,
                     r.detail.empty() ? "order " + std::to_string(r.order) : r.detail);
    });
  }

  guard("cyclic-derivative.report", [&] {
    ModeComparison cmp = compare_differential_modes(k, field);
    std::ostringstream os;
    for (const auto& [word, lit, expl] : cmp.coefficient_table("e"))
      os << word << ": literal " << lit << ", explicit " << expl << "; ";
    rep.payload("cyclic-derivative.e_star", os.str());
    rep.payload("cyclic-derivative.literal-equals-explicit",
                cmp.literal_equals_explicit() ? "true" : "false");
    rep.payload("cyclic-derivative.orbit-equals-explicit",
                cmp.orbit_equals_explicit() ? "true" : "false");
    rep.checks.add("cyclic-derivative.report", Outcome::Pass,
                   cmp.literal_equals_explicit() ? "modes agree" : "literal mode differs");
  });

  return rep;
}

}  // namespace palg
