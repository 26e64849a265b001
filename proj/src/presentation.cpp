#include "palg/presentation.hpp"

#include <sstream>

namespace palg {

void DgPresentation::validate() const {
  for (const auto& r : relations) {
    if (!(r.quiver() == quiver && *r.quiver() == *quiver))
      throw std::invalid_argument(name + ": relation over foreign quiver");
    if (!r.is_homogeneous()) throw std::invalid_argument(name + ": inhomogeneous relation");
  }
  for (const auto& [gen, img] : differentials) {
    int a = quiver->arrow_index(gen);
    if (a < 0) throw std::invalid_argument(name + ": differential on unknown generator " + gen);
    const Arrow& ar = quiver->arrows()[a];
    if (img.is_zero()) continue;
    if (ar.degree == 0)
      throw std::invalid_argument(name + ": degree-0 generator " + gen + " must be closed");
    auto deg = img.homogeneous_degree();
    if (!deg || *deg != ar.degree + 1)
      throw std::invalid_argument(name + ": d" + gen + " does not raise degree by 1");
    for (const auto& [k, c] : img.terms()) {
      int src = k.src;
      int dst = k.arrows.empty() ? k.src : quiver->arrows()[k.arrows.back()].dst;
      if (src != ar.src || dst != ar.dst)
        throw std::invalid_argument(name + ": d" + gen + " has mismatched endpoints");
    }
  }
}

AlgebraElement DgPresentation::diff_of_arrow(int arrow_id) const {
  auto it = differentials.find(quiver->arrows()[arrow_id].name);
  if (it == differentials.end()) return AlgebraElement::zero(quiver, field);
  return it->second;
}

AlgebraElement DgPresentation::d(const AlgebraElement& u) const {
  AlgebraElement out = AlgebraElement::zero(quiver, field);
  for (const auto& [k, c] : u.terms()) {
    int sign_deg = 0;
    for (size_t i = 0; i < k.arrows.size(); ++i) {
      const AlgebraElement dg = diff_of_arrow(k.arrows[i]);
      if (!dg.is_zero()) {
        // prefix carries the central monomial; suffix is the bare tail path
        TermKey pre{k.exps, k.src, {k.arrows.begin(), k.arrows.begin() + i}};
        AlgebraElement prefix(quiver, field);
        Scalar coeff = sign_deg % 2 == 0 ? c : -c;
        prefix.add_term(pre, coeff);

        int tail_src = quiver->arrows()[k.arrows[i]].dst;
        TermKey suf{std::vector<int>(k.exps.size(), 0), tail_src,
                    {k.arrows.begin() + i + 1, k.arrows.end()}};
        AlgebraElement suffix(quiver, field);
        suffix.add_term(suf, Scalar::one(field));

        out += prefix * dg * suffix;
      }
      sign_deg += quiver->arrows()[k.arrows[i]].degree;
    }
  }
  return out;
}

int DgPresentation::default_bound() const {
  size_t m = 2;
  for (const auto& r : relations)
    for (const auto& [k, c] : r.terms())
      m = std::max(m, k.arrows.size() + size_t(k.central_degree()));
  for (const auto& [g, img] : differentials)
    for (const auto& [k, c] : img.terms())
      m = std::max(m, k.arrows.size() + size_t(k.central_degree()));
  return int(2 * m + 8);
}

RewriteSystem DgPresentation::relation_rewrite(int bound) const {
  return complete(quiver, field, relations, bound);
}

DgPresentation build_Wk(int k, Field field) {
  if (k < 1) throw std::invalid_argument("build_Wk: k must be >= 1");
  auto q = make_quiver({"0", "1"},
                       {{"a", 0, 1, 0}, {"b", 1, 0, 0}, {"alpha", 0, 0, -1}, {"beta", 1, 1, -1}},
                       {"x1", "x2"});
  DgPresentation p;
  p.name = "W" + std::to_string(k);
  p.quiver = q;
  p.field = field;
  auto parse = [&](const std::string& s) { return parse_element(s, q, field); };
  p.relations = {parse("a*b - (x1-1)*e0"), parse("b*a - (x1-1)*e1"), parse("alpha^2"),
                 parse("beta^2")};
  p.differentials.insert_or_assign("alpha", parse("(x2+1)*e0"));
  p.differentials.insert_or_assign("beta", parse("(x1^" + std::to_string(k) + "+x2)*e1"));
  p.validate();
  return p;
}

DgPresentation build_Ak(int k, Field field) {
  if (k < 1) throw std::invalid_argument("build_Ak: k must be >= 1");
  auto q = make_quiver({"0", "1"},
                       {{"a", 0, 1, 0}, {"b", 1, 0, 0}, {"alpha", 0, 0, -1}, {"beta", 1, 1, -1}},
                       {"x", "y"});
  DgPresentation p;
  p.name = "A" + std::to_string(k);
  p.quiver = q;
  p.field = field;
  auto parse = [&](const std::string& s) { return parse_element(s, q, field); };
  p.relations = {parse("a*b - x*e0"), parse("b*a - x*e1"), parse("alpha^2"), parse("beta^2")};
  p.differentials.insert_or_assign("alpha", parse("y*e0"));
  p.differentials.insert_or_assign("beta", parse("((x+1)^" + std::to_string(k) + "+y-1)*e1"));
  p.validate();
  return p;
}

CheckReport check_d_squared(const DgPresentation& p, const RewriteSystem& rs) {
  p.validate();
  CheckReport rep;
  auto classify = [&](const std::string& label, const AlgebraElement& u) {
    try {
      AlgebraElement nf = rs.normal_form(u);
      if (nf.is_zero()) {
        rep.add(label, Outcome::Pass);
      } else if (!rs.complete_below_bound()) {
        rep.add(label, Outcome::Inconclusive, "nonzero residue under truncated system");
      } else {
        rep.add(label, Outcome::Fail, "residue " + nf.str());
      }
    } catch (const LengthOverflow& e) {
      rep.add(label, Outcome::Inconclusive, e.what());
    }
  };
  for (const auto& ar : p.quiver->arrows())
    classify("d2." + ar.name, p.d(p.d(AlgebraElement::arrow(p.quiver, p.field, p.quiver->arrow_index(ar.name)))));
  for (size_t i = 0; i < p.relations.size(); ++i)
    classify("descent.relation" + std::to_string(i), p.d(p.relations[i]));
  return rep;
}

void DgMorphismSpec::validate() const {
  source.validate();
  target.validate();
  if (vertex_map.size() != source.quiver->num_vertices())
    throw std::invalid_argument("morphism: vertex map incomplete");
  for (int v : vertex_map)
    if (v < 0 || v >= int(target.quiver->num_vertices()))
      throw std::invalid_argument("morphism: vertex map out of range");
  for (const auto& ar : source.quiver->arrows()) {
    auto it = arrow_images.find(ar.name);
    if (it == arrow_images.end())
      throw std::invalid_argument("morphism: unassigned generator " + ar.name);
    const AlgebraElement& img = it->second;
    if (img.is_zero()) continue;
    auto deg = img.homogeneous_degree();
    if (!deg || *deg != ar.degree)
      throw std::invalid_argument("morphism: image of " + ar.name + " has wrong degree");
    for (const auto& [k, c] : img.terms()) {
      int src = k.src;
      int dst = k.arrows.empty() ? k.src : target.quiver->arrows()[k.arrows.back()].dst;
      if (src != vertex_map[ar.src] || dst != vertex_map[ar.dst])
        throw std::invalid_argument("morphism: image of " + ar.name + " has wrong endpoints");
    }
  }
  for (const auto& cv : source.quiver->central_vars()) {
    auto it = central_images.find(cv);
    if (it == central_images.end())
      throw std::invalid_argument("morphism: unassigned central variable " + cv);
    if (!it->second.is_central_only())
      throw std::invalid_argument("morphism: central variable " + cv + " must map to a central polynomial");
  }
}

AlgebraElement DgMorphismSpec::apply(const AlgebraElement& u) const {
  AlgebraElement out = AlgebraElement::zero(target.quiver, target.field);
  for (const auto& [k, c] : u.terms()) {
    AlgebraElement t = AlgebraElement::idempotent(target.quiver, target.field, vertex_map[k.src]);
    t = t * Scalar(target.field, c.value());
    for (size_t v = 0; v < k.exps.size(); ++v) {
      if (k.exps[v] == 0) continue;
      const AlgebraElement& img = central_images.at(source.quiver->central_vars()[v]);
      t *= img.pow(unsigned(k.exps[v]));
    }
    for (int a : k.arrows) t *= arrow_images.at(source.quiver->arrows()[a].name);
    out += t;
  }
  return out;
}

DgMorphismSpec identity_morphism(const DgPresentation& p) {
  DgMorphismSpec m{p, p, {}, {}, {}};
  for (size_t v = 0; v < p.quiver->num_vertices(); ++v) m.vertex_map.push_back(int(v));
  for (const auto& ar : p.quiver->arrows())
    m.arrow_images.insert_or_assign(ar.name, AlgebraElement::arrow(p.quiver, p.field, p.quiver->arrow_index(ar.name)));
  for (const auto& cv : p.quiver->central_vars())
    m.central_images.insert_or_assign(cv, AlgebraElement::central(p.quiver, p.field, p.quiver->central_index(cv)));
  return m;
}

CheckReport check_dg_morphism(const DgMorphismSpec& phi, const RewriteSystem& target_rs) {
  phi.validate();
  CheckReport rep;
  auto classify = [&](const std::string& label, const AlgebraElement& u) {
    try {
      AlgebraElement nf = target_rs.normal_form(u);
      if (nf.is_zero()) rep.add(label, Outcome::Pass);
      else if (!target_rs.complete_below_bound())
        rep.add(label, Outcome::Inconclusive, "nonzero residue under truncated system");
      else rep.add(label, Outcome::Fail, "residue " + nf.str());
    } catch (const LengthOverflow& e) {
      rep.add(label, Outcome::Inconclusive, e.what());
    }
  };
  for (size_t i = 0; i < phi.source.relations.size(); ++i)
    classify("relation" + std::to_string(i), phi.apply(phi.source.relations[i]));
  for (const auto& ar : phi.source.quiver->arrows()) {
    int a = phi.source.quiver->arrow_index(ar.name);
    AlgebraElement lhs = phi.apply(phi.source.diff_of_arrow(a));
    AlgebraElement rhs = phi.target.d(phi.arrow_images.at(ar.name));
    classify("commute." + ar.name, lhs - rhs);
  }
  return rep;
}

DgMorphismSpec ak_to_wk_morphism(int k, Field field) {
  DgPresentation ak = build_Ak(k, field);
  DgPresentation wk = build_Wk(k, field);
  DgMorphismSpec m{ak, wk, {0, 1}, {}, {}};
  auto q = wk.quiver;
  for (const auto& ar : ak.quiver->arrows())
    m.arrow_images.insert_or_assign(ar.name, AlgebraElement::arrow(q, field, q->arrow_index(ar.name)));
  m.central_images.insert_or_assign("x", parse_element("x1-1", q, field));
  m.central_images.insert_or_assign("y", parse_element("x2+1", q, field));
  return m;
}

CheckReport change_of_variables_Ak_to_Wk(int k, Field field) {
  DgMorphismSpec m = ak_to_wk_morphism(k, field);
  m.validate();
  const DgPresentation& wk = m.target;
  CheckReport rep;
  for (size_t i = 0; i < m.source.relations.size(); ++i) {
    AlgebraElement got = m.apply(m.source.relations[i]);
    bool ok = got == wk.relations[i];
    rep.add("relation" + std::to_string(i), ok ? Outcome::Pass : Outcome::Fail,
            ok ? "" : "got " + got.str() + ", want " + wk.relations[i].str());
  }
  for (const auto& ar : m.source.quiver->arrows()) {
    int a = m.source.quiver->arrow_index(ar.name);
    AlgebraElement got = m.apply(m.source.diff_of_arrow(a));
    AlgebraElement want = wk.diff_of_arrow(wk.quiver->arrow_index(ar.name));
    bool ok = got == want;
    rep.add("diff." + ar.name, ok ? Outcome::Pass : Outcome::Fail,
            ok ? "" : "got " + got.str() + ", want " + want.str());
  }
  return rep;
}

std::string serialize_presentation(const DgPresentation& p) {
  std::ostringstream os;
  os << "presentation " << p.name << "\n";
  os << "field " << p.field.str() << "\n";
  for (const auto& v : p.quiver->vertices()) os << "vertex " << v << "\n";
  for (const auto& a : p.quiver->arrows())
    os << "arrow " << a.name << " " << p.quiver->vertices()[a.src] << " "
       << p.quiver->vertices()[a.dst] << " " << a.degree << "\n";
  for (const auto& c : p.quiver->central_vars()) os << "central " << c << "\n";
  for (const auto& r : p.relations) os << "relation " << r.str() << "\n";
  for (const auto& a : p.quiver->arrows()) {
    auto it = p.differentials.find(a.name);
    if (it != p.differentials.end() && !it->second.is_zero())
      os << "diff " << a.name << " " << it->second.str() << "\n";
  }
  os << "end\n";
  return os.str();
}

DgPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  Field field = Field::Q();
  std::vector<std::string> vertices, centrals;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> relations, diffs;  // (kind payload)
  bool ended = false;
  size_t lineno = 0;

  auto fail = [&](const std::string& msg) {
    throw ParseError("presentation line " + std::to_string(lineno) + ": " + msg, lineno);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw.empty() || kw[0] == '#') continue;
    if (ended) fail("content after end");
    if (kw == "presentation") {
      ls >> name;
    } else if (kw == "field") {
      std::string f;
      ls >> f;
      field = Field::parse(f);
    } else if (kw == "vertex") {
      std::string v;
      if (!(ls >> v)) fail("vertex needs a name");
      vertices.push_back(v);
    } else if (kw == "arrow") {
      std::string n, s, d;
      int deg;
      if (!(ls >> n >> s >> d >> deg)) fail("arrow needs name src dst degree");
      auto find = [&](const std::string& vn) {
        for (size_t i = 0; i < vertices.size(); ++i)
          if (vertices[i] == vn) return int(i);
        fail("unknown vertex " + vn);
        return -1;
      };
      arrows.push_back(Arrow{n, find(s), find(d), deg});
    } else if (kw == "central") {
      std::string c;
      if (!(ls >> c)) fail("central needs a name");
      centrals.push_back(c);
    } else if (kw == "relation" || kw == "diff") {
      std::string rest;
      std::getline(ls, rest);
      if (kw == "relation") relations.emplace_back(kw, rest);
      else diffs.emplace_back(kw, rest);
    } else if (kw == "end") {
      ended = true;
    } else {
      fail("unknown keyword " + kw);
    }
  }
  if (!ended) throw ParseError("presentation: missing end line", lineno);

  DgPresentation p;
  p.name = name;
  p.field = field;
  p.quiver = make_quiver(vertices, arrows, centrals);
  for (const auto& [kw, rest] : relations) p.relations.push_back(parse_element(rest, p.quiver, field));
  for (const auto& [kw, rest] : diffs) {
    std::istringstream ds(rest);
    std::string gen;
    ds >> gen;
    std::string expr;
    std::getline(ds, expr);
    p.differentials.insert_or_assign(gen, parse_element(expr, p.quiver, field));
  }
  p.validate();
  return p;
}

}  // namespace palg
