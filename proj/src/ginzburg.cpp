#include "palg/ginzburg.hpp"

namespace palg {

void Potential::validate() const {
  auto deg = element.homogeneous_degree();
  if (!element.is_zero() && (!deg || *deg != 0))
    throw std::invalid_argument("potential must be concentrated in degree 0");
  for (const auto& [k, c] : element.terms()) {
    if (k.central_degree() != 0)
      throw std::invalid_argument("potential must not involve central variables");
    int dst = k.arrows.empty() ? k.src : element.quiver()->arrows()[k.arrows.back()].dst;
    if (dst != k.src) throw std::invalid_argument("potential monomials must be cycles");
  }
}

AlgebraElement cyclic_derivative(const Potential& w, const std::string& arrow, DerivMode mode) {
  const AlgebraElement& W = w.element;
  QuiverPtr q = W.quiver();
  int g = q->arrow_index(arrow);
  if (g < 0) throw std::invalid_argument("cyclic_derivative: unknown arrow " + arrow);
  if (q->arrows()[g].degree != 0)
    throw std::invalid_argument("cyclic_derivative: arrow must have degree 0");
  w.validate();

  AlgebraElement out = AlgebraElement::zero(q, W.field());
  for (const auto& [k, c] : W.terms()) {
    const std::vector<int>& word = k.arrows;
    size_t n = word.size();
    if (n == 0) continue;

    // minimal cyclic period of the word
    size_t period = n;
    for (size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i)
        if (word[i] != word[(i + p) % n]) ok = false;
      if (ok) { period = p; break; }
    }

    std::vector<bool> seen(period, false);
    for (size_t i = 0; i < n; ++i) {
      if (word[i] != g) continue;
      if (mode == DerivMode::CyclicOrbit) {
        if (seen[i % period]) continue;
        seen[i % period] = true;
      }
      // W = p g q with p = word[0..i), q = word[i+1..): contribute q p
      TermKey t;
      t.exps.assign(q->num_centrals(), 0);
      t.arrows.assign(word.begin() + i + 1, word.end());
      t.arrows.insert(t.arrows.end(), word.begin(), word.begin() + i);
      t.src = q->arrows()[g].dst;
      out.add_term(t, c);
    }
  }
  return out;
}

QuiverPtr two_cycle_quiver() {
  return make_quiver({"0", "1"}, {{"e", 0, 1, 0}, {"f", 1, 0, 0}}, {});
}

Potential build_potential_wk(int k, Field field) {
  if (k < 1) throw std::invalid_argument("build_potential_wk: k must be >= 1");
  QuiverPtr q = two_cycle_quiver();
  AlgebraElement e = AlgebraElement::arrow(q, field, 0);
  AlgebraElement f = AlgebraElement::arrow(q, field, 1);
  AlgebraElement one = AlgebraElement::unit(q, field);
  AlgebraElement fe1 = f * e + one;
  AlgebraElement sum = AlgebraElement::zero(q, field);
  AlgebraElement p = one;
  for (int j = 0; j < k; ++j) {
    sum += p;
    p *= fe1;
  }
  Potential w{e * f * e * sum * f};
  w.validate();
  return w;
}

QuiverPtr enhance_quiver(const GradedQuiver& q) {
  for (const auto& a : q.arrows())
    if (a.degree != 0)
      throw std::invalid_argument("enhance_quiver: input must have degree-0 arrows only");
  std::vector<Arrow> arrows = q.arrows();
  for (const auto& a : q.arrows()) arrows.push_back(Arrow{a.name + "_star", a.dst, a.src, -1});
  for (size_t v = 0; v < q.num_vertices(); ++v)
    arrows.push_back(Arrow{"h" + q.vertices()[v], int(v), int(v), -2});
  return make_quiver(q.vertices(), arrows, q.central_vars());
}

namespace {

/// Transports a central-free element of the base quiver onto the enhanced
/// quiver (same arrow names).
AlgebraElement lift(const AlgebraElement& u, QuiverPtr enhanced) {
  AlgebraElement out(enhanced, u.field());
  for (const auto& [k, c] : u.terms()) {
    TermKey t;
    t.exps.assign(enhanced->num_centrals(), 0);
    t.src = k.src;
    for (int a : k.arrows)
      t.arrows.push_back(enhanced->arrow_index(u.quiver()->arrows()[a].name));
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

DgPresentation ginzburg_dga(QuiverPtr base, const Potential& w, GinzMode mode,
                            const std::map<std::string, AlgebraElement>& overrides) {
  w.validate();
  QuiverPtr eq = enhance_quiver(*base);
  Field f = w.element.field();

  DgPresentation p;
  p.quiver = eq;
  p.field = f;
  p.name = "ginzburg";

  for (const auto& a : base->arrows()) {
    std::string star = a.name + "_star";
    if (mode == GinzMode::Explicit) {
      auto it = overrides.find(star);
      if (it == overrides.end())
        throw std::invalid_argument("ginzburg_dga: explicit mode needs an override for " + star);
      p.differentials.insert_or_assign(star, it->second);
    } else {
      DerivMode dm = mode == GinzMode::CyclicLiteral ? DerivMode::Literal : DerivMode::CyclicOrbit;
      p.differentials.insert_or_assign(star, lift(cyclic_derivative(w, a.name, dm), eq));
    }
  }
  for (size_t v = 0; v < base->num_vertices(); ++v) {
    AlgebraElement dh = AlgebraElement::zero(eq, f);
    for (const auto& a : base->arrows()) {
      AlgebraElement g = AlgebraElement::arrow(eq, f, eq->arrow_index(a.name));
      AlgebraElement gs = AlgebraElement::arrow(eq, f, eq->arrow_index(a.name + "_star"));
      if (a.src == int(v)) dh += g * gs;
      if (a.dst == int(v)) dh -= gs * g;
    }
    p.differentials.insert_or_assign("h" + base->vertices()[v], dh);
  }
  p.validate();
  return p;
}

DgPresentation build_Gk(int k, Field field, GinzMode mode) {
  Potential w = build_potential_wk(k, field);
  QuiverPtr base = w.element.quiver();
  std::map<std::string, AlgebraElement> overrides;
  if (mode == GinzMode::Explicit) {
    QuiverPtr eq = enhance_quiver(*base);
    AlgebraElement e = AlgebraElement::arrow(eq, field, eq->arrow_index("e"));
    AlgebraElement f = AlgebraElement::arrow(eq, field, eq->arrow_index("f"));
    AlgebraElement one = AlgebraElement::unit(eq, field);
    AlgebraElement fe1 = f * e + one;
    AlgebraElement sum = AlgebraElement::zero(eq, field);
    AlgebraElement pw = one;
    for (int j = 0; j < k; ++j) {
      sum += pw;
      pw *= fe1;
    }
    overrides.insert_or_assign("e_star", f * e * sum * f);
    overrides.insert_or_assign("f_star", e * f * e * sum);
  }
  DgPresentation p = ginzburg_dga(base, w, mode, overrides);
  std::string tag = mode == GinzMode::Explicit ? "explicit"
                    : mode == GinzMode::CyclicLiteral ? "literal"
                                                      : "cyclic-orbit";
  p.name = "G" + std::to_string(k) + "[" + tag + "]";
  return p;
}

bool ModeComparison::literal_equals_explicit() const {
  for (const auto& e : entries)
    if (!(e.literal == e.explicit_form)) return false;
  return true;
}

bool ModeComparison::orbit_equals_explicit() const {
  for (const auto& e : entries)
    if (!(e.cyclic_orbit == e.explicit_form)) return false;
  return true;
}

std::vector<std::tuple<std::string, std::string, std::string>> ModeComparison::coefficient_table(
    const std::string& arrow) const {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& e : entries) {
    if (e.arrow != arrow) continue;
    // union of words, in canonical term order
    std::map<TermKey, std::pair<Scalar, Scalar>> rows;
    Field f = e.literal.field();
    for (const auto& [k, c] : e.literal.terms()) rows[k] = {c, Scalar::zero(f)};
    for (const auto& [k, c] : e.explicit_form.terms()) {
      auto it = rows.find(k);
      if (it == rows.end()) rows[k] = {Scalar::zero(f), c};
      else it->second.second = c;
    }
    for (const auto& [k, pair] : rows) {
      AlgebraElement word(e.literal.quiver(), f);
      word.add_term(k, Scalar::one(f));
      out.emplace_back(word.str(), pair.first.str(), pair.second.str());
    }
  }
  return out;
}

ModeComparison compare_differential_modes(int k, Field field) {
  ModeComparison cmp;
  cmp.k = k;
  DgPresentation lit = build_Gk(k, field, GinzMode::CyclicLiteral);
  DgPresentation orb = build_Gk(k, field, GinzMode::CyclicOrbit);
  DgPresentation exp = build_Gk(k, field, GinzMode::Explicit);
  for (const std::string& a : {std::string("e"), std::string("f")}) {
    ModeComparisonEntry entry{a, lit.differentials.at(a + "_star"),
                              orb.differentials.at(a + "_star"),
                              exp.differentials.at(a + "_star")};
    cmp.entries.push_back(std::move(entry));
  }
  return cmp;
}

}  // namespace palg
