#include "palg/findim.hpp"

#include <algorithm>
#include <cmath>

namespace palg {

Vec AlgebraTable::mul(const Vec& a, const Vec& b) const {
  Vec r(dim(), Scalar::zero(field));
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const Vec& prod = sc[i][j];
      for (size_t t = 0; t < dim(); ++t)
        if (!prod[t].is_zero()) r[t] += c * prod[t];
    }
  }
  return r;
}

Vec AlgebraTable::power(Vec a, unsigned long e) const {
  Vec r = one;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Mat AlgebraTable::left_mult(const Vec& a) const {
  Mat m(dim(), dim(), field);
  for (size_t j = 0; j < dim(); ++j) {
    Vec ej(dim(), Scalar::zero(field));
    ej[j] = Scalar::one(field);
    Vec col = mul(a, ej);
    for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Mat AlgebraTable::right_mult(const Vec& a) const {
  Mat m(dim(), dim(), field);
  for (size_t j = 0; j < dim(); ++j) {
    Vec ej(dim(), Scalar::zero(field));
    ej[j] = Scalar::one(field);
    Vec col = mul(ej, a);
    for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<Vec> AlgebraTable::inverse(const Vec& a) const {
  // right inverse from the left-multiplication operator; in a
  // finite-dimensional unital algebra this forces two-sidedness
  auto w = solve(left_mult(a), one);
  if (!w) return std::nullopt;
  if (!is_zero_vec([&] {
        Vec d = mul(*w, a);
        for (size_t i = 0; i < dim(); ++i) d[i] -= one[i];
        return d;
      }()))
    return std::nullopt;
  return w;
}

bool AlgebraTable::associative_on_basis() const {
  size_t n = dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec ei(n, Scalar::zero(field)), ej(n, Scalar::zero(field)), ek(n, Scalar::zero(field));
        ei[i] = ej[j] = ek[k] = Scalar::one(field);
        Vec lhs = mul(mul(ei, ej), ek);
        Vec rhs = mul(ei, mul(ej, ek));
        for (size_t t = 0; t < n; ++t)
          if (!(lhs[t] == rhs[t])) return false;
      }
  return true;
}

bool AlgebraTable::is_zero_vec(const Vec& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Vec FiniteDimAlgebra::coords(const AlgebraElement& e) const {
  WordPoly nf = rs.normal_form(to_words(e));
  Vec v(basis.size(), Scalar::zero(field));
  for (const auto& [w, c] : nf.terms()) {
    auto it = std::find_if(basis.begin(), basis.end(), [&](const Word& b) { return b == w; });
    if (it == basis.end())
      throw std::logic_error("coords: normal form word outside the computed basis");
    v[size_t(it - basis.begin())] = c;
  }
  return v;
}

std::string FiniteDimAlgebra::basis_word_str(size_t i) const {
  WordPoly p(field);
  p.add(basis[i], Scalar::one(field));
  return from_words(quiver, field, p).str();
}

namespace {

AlgebraElement transport(const AlgebraElement& u, QuiverPtr dst) {
  AlgebraElement out(dst, u.field());
  const GradedQuiver& src = *u.quiver();
  for (const auto& [k, c] : u.terms()) {
    TermKey t;
    t.exps.assign(dst->num_centrals(), 0);
    for (size_t v = 0; v < k.exps.size(); ++v) {
      if (k.exps[v] == 0) continue;
      int idx = dst->central_index(src.central_vars()[v]);
      if (idx < 0) throw std::logic_error("transport: missing central variable");
      t.exps[idx] = k.exps[v];
    }
    t.src = k.src;
    for (int a : k.arrows) {
      int idx = dst->arrow_index(src.arrows()[a].name);
      if (idx < 0) throw std::logic_error("transport: missing arrow " + src.arrows()[a].name);
      t.arrows.push_back(idx);
    }
    out.add_term(t, c);
  }
  return out;
}

H0Result finish_h0(QuiverPtr q0, Field field, const std::vector<AlgebraElement>& gens,
                   int bound) {
  H0Result res;
  RewriteSystem rs = complete(q0, field, gens, bound);
  if (!rs.complete_below_bound()) {
    res.outcome = Outcome::Inconclusive;
    res.detail = "completion skipped " + std::to_string(rs.skipped_pairs()) +
                 " critical pairs beyond bound " + std::to_string(bound);
    return res;
  }
  QuotientBasis qb = quotient_basis(rs);
  if (qb.verdict != QuotientBasis::Verdict::Finite) {
    res.outcome = Outcome::Inconclusive;
    res.detail = "irreducible words persist at bound " + std::to_string(bound);
    return res;
  }

  FiniteDimAlgebra alg{q0, field, rs, qb.words, AlgebraTable{field, {}, {}}, {}};
  size_t n = qb.words.size();
  alg.table.sc.assign(n, std::vector<Vec>(n));
  auto express = [&](const WordPoly& p) {
    Vec v(n, Scalar::zero(field));
    for (const auto& [w, c] : p.terms()) {
      auto it = std::find_if(alg.basis.begin(), alg.basis.end(),
                             [&](const Word& b) { return b == w; });
      if (it == alg.basis.end()) throw std::logic_error("h0: word escapes basis");
      v[size_t(it - alg.basis.begin())] = c;
    }
    return v;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (alg.basis[i].dst != alg.basis[j].src) {
        alg.table.sc[i][j] = Vec(n, Scalar::zero(field));
        continue;
      }
      WordPoly p(field);
      p.add(word_concat(alg.basis[i], alg.basis[j]), Scalar::one(field));
      alg.table.sc[i][j] = express(rs.normal_form(p));
    }
  WordPoly unit(field);
  for (size_t v = 0; v < q0->num_vertices(); ++v)
    unit.add(Word{int(v), int(v), {}}, Scalar::one(field));
  alg.table.one = express(rs.normal_form(unit));
  for (size_t v = 0; v < q0->num_vertices(); ++v) {
    Word ev{int(v), int(v), {}};
    auto it = std::find_if(alg.basis.begin(), alg.basis.end(),
                           [&](const Word& b) { return b == ev; });
    alg.idempotent_index.push_back(it == alg.basis.end() ? -1 : int(it - alg.basis.begin()));
  }

  res.outcome = Outcome::Pass;
  res.algebra = std::move(alg);
  return res;
}

}  // namespace

H0Result h0(const DgPresentation& p, int bound) {
  p.validate();
  for (const auto& a : p.quiver->arrows())
    if (a.degree > 0)
      throw std::invalid_argument("h0: presentation must be concentrated in degrees <= 0");

  std::vector<Arrow> arrows0;
  for (const auto& a : p.quiver->arrows())
    if (a.degree == 0) arrows0.push_back(a);
  QuiverPtr q0 = make_quiver(p.quiver->vertices(), arrows0, p.quiver->central_vars());

  std::vector<AlgebraElement> gens;
  for (const auto& r : p.relations) {
    auto deg = r.homogeneous_degree();
    if (deg && *deg == 0) gens.push_back(transport(r, q0));
  }
  for (const auto& a : p.quiver->arrows())
    if (a.degree == -1) {
      AlgebraElement dg = p.diff_of_arrow(p.quiver->arrow_index(a.name));
      if (!dg.is_zero()) gens.push_back(transport(dg, q0));
    }
  return finish_h0(q0, p.field, gens, bound);
}

H0Result h0_identified(const DgPresentation& p, int bound) {
  p.validate();
  std::vector<Arrow> arrows0;
  for (const auto& a : p.quiver->arrows())
    if (a.degree == 0) arrows0.push_back(a);

  std::vector<Arrow> loops;
  for (const auto& a : arrows0) loops.push_back(Arrow{a.name, 0, 0, 0});
  QuiverPtr q1 = make_quiver({"0"}, loops, p.quiver->central_vars());

  auto collapse = [&](const AlgebraElement& u) {
    AlgebraElement out(q1, p.field);
    for (const auto& [k, c] : u.terms()) {
      TermKey t;
      t.exps = k.exps;
      t.src = 0;
      for (int a : k.arrows) t.arrows.push_back(q1->arrow_index(p.quiver->arrows()[a].name));
      out.add_term(t, c);
    }
    return out;
  };

  std::vector<AlgebraElement> gens;
  for (const auto& r : p.relations) {
    auto deg = r.homogeneous_degree();
    if (deg && *deg == 0) gens.push_back(collapse(r));
  }
  for (const auto& a : p.quiver->arrows())
    if (a.degree == -1) {
      AlgebraElement dg = p.diff_of_arrow(p.quiver->arrow_index(a.name));
      if (!dg.is_zero()) gens.push_back(collapse(dg));
    }
  // non-composable products of the original quiver become zero relations
  for (const auto& g : arrows0)
    for (const auto& h : arrows0)
      if (g.dst != h.src) {
        AlgebraElement gh = AlgebraElement::arrow(q1, p.field, q1->arrow_index(g.name)) *
                            AlgebraElement::arrow(q1, p.field, q1->arrow_index(h.name));
        gens.push_back(gh);
      }
  return finish_h0(q1, p.field, gens, bound);
}

bool verify_identity(const FiniteDimAlgebra& a, const std::string& expr) {
  AlgebraElement e = parse_element(expr, a.quiver, a.field);
  return a.rs.reduces_to_zero(e);
}

namespace {

std::vector<Vec> generator_vectors(const FiniteDimAlgebra& a) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < a.quiver->num_arrows(); ++i)
    gens.push_back(a.coords(AlgebraElement::arrow(a.quiver, a.field, int(i))));
  for (size_t c = 0; c < a.quiver->num_centrals(); ++c)
    gens.push_back(a.coords(AlgebraElement::central(a.quiver, a.field, int(c))));
  for (size_t v = 0; v < a.quiver->num_vertices(); ++v)
    gens.push_back(a.coords(AlgebraElement::idempotent(a.quiver, a.field, int(v))));
  return gens;
}

}  // namespace

std::vector<Vec> center_basis(const FiniteDimAlgebra& a) {
  size_t n = a.dim();
  std::vector<Vec> gens = generator_vectors(a);
  Mat sys(gens.size() * n, n, a.field);
  for (size_t g = 0; g < gens.size(); ++g) {
    Mat l = a.table.left_mult(gens[g]);
    Mat r = a.table.right_mult(gens[g]);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) sys.at(g * n + i, j) = l.at(i, j) - r.at(i, j);
  }
  return nullspace(sys);
}

std::vector<Vec> nilradical_of_center(const FiniteDimAlgebra& a) {
  std::vector<Vec> z = center_basis(a);
  size_t m = z.size(), n = a.dim();
  if (m == 0) return {};
  Field f = a.field;

  // coordinates of center elements in the z-basis
  Mat zcols(n, m, f);
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) zcols.at(i, j) = z[j][i];
  auto z_coords = [&](const Vec& v) {
    auto x = solve(zcols, v);
    if (!x) throw std::logic_error("nilradical: center not multiplicatively closed");
    return *x;
  };

  std::vector<Vec> candidates;  // in z-coordinates
  if (f.characteristic() == 0) {
    // trace form of the regular representation of the center
    std::vector<Mat> lz;  // left multiplication on the center, m x m
    for (size_t i = 0; i < m; ++i) {
      Mat li(m, m, f);
      for (size_t j = 0; j < m; ++j) {
        Vec prod = z_coords(a.table.mul(z[i], z[j]));
        for (size_t t = 0; t < m; ++t) li.at(t, j) = prod[t];
      }
      lz.push_back(std::move(li));
    }
    Mat form(m, m, f);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        Mat prod = mat_mul(lz[i], lz[j]);
        Scalar tr = Scalar::zero(f);
        for (size_t t = 0; t < m; ++t) tr += prod.at(t, t);
        form.at(i, j) = tr;
      }
    candidates = nullspace(form);
  } else {
    // kernel of the iterated Frobenius, which is linear over F_p
    long p = f.characteristic();
    Mat frob(m, m, f);
    for (size_t j = 0; j < m; ++j) {
      Vec power = a.table.power(z[j], (unsigned long)p);
      Vec zc = z_coords(power);
      for (size_t i = 0; i < m; ++i) frob.at(i, j) = zc[i];
    }
    unsigned long s = 1;
    long long ps = p;
    while (ps < (long long)m) { ps *= p; ++s; }
    candidates = nullspace(mat_pow(frob, s));
  }

  std::vector<Vec> out;
  for (const auto& c : candidates) {
    Vec v(n, Scalar::zero(f));
    for (size_t j = 0; j < m; ++j)
      for (size_t i = 0; i < n; ++i) v[i] += c[j] * z[j][i];
    if (!a.table.is_zero_vec(a.table.power(v, (unsigned long)n + 1)))
      throw std::logic_error("nilradical: candidate failed the nilpotency certificate");
    out.push_back(std::move(v));
  }
  return out;
}

QuotientAlgebra quotient_by_two_sided_ideal(const FiniteDimAlgebra& a,
                                            const std::vector<Vec>& gens) {
  size_t n = a.dim();
  Field f = a.field;
  std::vector<Vec> span = row_basis(gens, n, f);
  for (;;) {
    std::vector<Vec> bigger = span;
    for (const auto& v : span)
      for (size_t b = 0; b < n; ++b) {
        Vec eb(n, Scalar::zero(f));
        eb[b] = Scalar::one(f);
        bigger.push_back(a.table.mul(eb, v));
        bigger.push_back(a.table.mul(v, eb));
      }
    std::vector<Vec> closed = row_basis(bigger, n, f);
    if (closed.size() == span.size()) {
      span = std::move(closed);
      break;
    }
    span = std::move(closed);
  }

  // reduce against the echelonized ideal; keep non-pivot coordinates
  Mat ideal(span.size(), n, f);
  for (size_t i = 0; i < span.size(); ++i)
    for (size_t j = 0; j < n; ++j) ideal.at(i, j) = span[i][j];
  auto pivots = rref(ideal);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<size_t> kept;
  for (size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) kept.push_back(j);

  auto project = [&](Vec v) {
    for (size_t r = 0; r < pivots.size(); ++r) {
      Scalar c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < n; ++j) v[j] -= c * ideal.at(r, j);
    }
    Vec out(kept.size(), Scalar::zero(f));
    for (size_t t = 0; t < kept.size(); ++t) out[t] = v[kept[t]];
    return out;
  };

  QuotientAlgebra q;
  q.projection = Mat(kept.size(), n, f);
  for (size_t j = 0; j < n; ++j) {
    Vec ej(n, Scalar::zero(f));
    ej[j] = Scalar::one(f);
    Vec pj = project(ej);
    for (size_t i = 0; i < kept.size(); ++i) q.projection.at(i, j) = pj[i];
  }
  size_t d = kept.size();
  q.table.field = f;
  q.table.one = project(a.table.one);
  q.table.sc.assign(d, std::vector<Vec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec ei(n, Scalar::zero(f)), ej(n, Scalar::zero(f));
      ei[kept[i]] = Scalar::one(f);
      ej[kept[j]] = Scalar::one(f);
      q.table.sc[i][j] = project(a.table.mul(ei, ej));
    }
  return q;
}

std::optional<long> element_order(const AlgebraTable& t, const Vec& u, long max_power) {
  if (!t.inverse(u)) throw std::domain_error("element_order: element is not a unit");
  Vec p = u;
  for (long nn = 1; nn <= max_power; ++nn) {
    bool is_one = true;
    for (size_t i = 0; i < t.dim() && is_one; ++i)
      if (!(p[i] == t.one[i])) is_one = false;
    if (is_one) return nn;
    p = t.mul(p, u);
  }
  return std::nullopt;
}

SemisimplifiedOrderResult central_semisimplified_order(const FiniteDimAlgebra& a,
                                                       const std::string& central_var,
                                                       long max_power) {
  SemisimplifiedOrderResult res;
  int cv = a.quiver->central_index(central_var);
  if (cv < 0) throw std::invalid_argument("unknown central variable " + central_var);
  std::vector<Vec> nil = nilradical_of_center(a);
  QuotientAlgebra q = nil.empty()
                          ? QuotientAlgebra{a.table, Mat::identity(a.dim(), a.field)}
                          : quotient_by_two_sided_ideal(a, nil);
  Vec u = mat_apply(q.projection, a.coords(AlgebraElement::central(a.quiver, a.field, cv)));
  auto ord = element_order(q.table, u, max_power);
  if (!ord) {
    res.outcome = Outcome::Fail;
    res.detail = "no power up to " + std::to_string(max_power) + " reaches 1";
    return res;
  }
  res.outcome = Outcome::Pass;
  res.order = *ord;
  return res;
}

UnitGroupReport unit_group(const FiniteDimAlgebra& a, const std::string& central_var,
                           long long budget) {
  UnitGroupReport rep;
  long p = a.field.characteristic();
  if (a.field.kind != FieldKind::PrimeField)
    throw std::invalid_argument("unit_group: exhaustive enumeration needs a prime field");
  long long total = 1;
  for (size_t i = 0; i < a.dim(); ++i) {
    total *= p;
    if (total > budget) {
      rep.outcome = Outcome::Inconclusive;
      rep.detail = "budget exceeded: p^dim > " + std::to_string(budget);
      return rep;
    }
  }
  rep.scanned = total;
  std::vector<long> digits(a.dim(), 0);
  for (long long it = 0; it < total; ++it) {
    Vec v(a.dim(), Scalar::zero(a.field));
    for (size_t i = 0; i < a.dim(); ++i) v[i] = Scalar(a.field, digits[i]);
    if (a.table.inverse(v)) ++rep.units;
    for (size_t i = 0; i < a.dim(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  if (!central_var.empty()) {
    int cv = a.quiver->central_index(central_var);
    if (cv < 0) throw std::invalid_argument("unknown central variable " + central_var);
    Vec u = a.coords(AlgebraElement::central(a.quiver, a.field, cv));
    auto ord = element_order(a.table, u, rep.scanned);
    rep.element_order = ord.value_or(0);
  }
  rep.outcome = Outcome::Pass;
  return rep;
}

CheckReport algebra_iso_check(const FiniteDimAlgebra& src, const FiniteDimAlgebra& dst,
                              const std::map<std::string, std::string>& arrow_map,
                              const std::vector<int>& vertex_map) {
  CheckReport rep;
  bool dims = src.dim() == dst.dim();
  rep.add("dims-equal", dims ? Outcome::Pass : Outcome::Fail,
          std::to_string(src.dim()) + " vs " + std::to_string(dst.dim()));
  if (!dims) return rep;

  auto map_name = [&](const std::string& n) {
    auto it = arrow_map.find(n);
    return it == arrow_map.end() ? n : it->second;
  };

  size_t n = src.dim();
  Mat m(n, n, dst.field);
  for (size_t i = 0; i < n; ++i) {
    const Word& w = src.basis[i];
    AlgebraElement img(dst.quiver, dst.field);
    TermKey t;
    t.exps.assign(dst.quiver->num_centrals(), 0);
    t.src = vertex_map[w.src];
    bool ok = true;
    for (int l : w.letters) {
      if (src.quiver->letter_is_arrow(l)) {
        int idx = dst.quiver->arrow_index(map_name(src.quiver->arrows()[l].name));
        if (idx < 0) { ok = false; break; }
        t.arrows.push_back(idx);
      } else {
        int var = src.quiver->letter_central_var(l);
        int idx = dst.quiver->central_index(map_name(src.quiver->central_vars()[var]));
        if (idx < 0) { ok = false; break; }
        t.exps[idx] += 1;
      }
    }
    if (!ok) {
      rep.add("generator-map", Outcome::Fail, "unmapped letter in basis word");
      return rep;
    }
    img.add_term(t, Scalar::one(dst.field));
    Vec col = dst.coords(img);
    for (size_t r = 0; r < n; ++r) m.at(r, i) = col[r];
  }

  bool bij = rank(m) == n;
  rep.add("bijective", bij ? Outcome::Pass : Outcome::Fail);
  if (!bij) return rep;

  Vec unit_src = src.table.one;
  Vec unit_img = mat_apply(m, unit_src);
  bool unit_ok = true;
  for (size_t i = 0; i < n; ++i)
    if (!(unit_img[i] == dst.table.one[i])) unit_ok = false;
  rep.add("unit-preserved", unit_ok ? Outcome::Pass : Outcome::Fail);

  bool mult_ok = true;
  for (size_t i = 0; i < n && mult_ok; ++i)
    for (size_t j = 0; j < n && mult_ok; ++j) {
      Vec lhs = mat_apply(m, src.table.sc[i][j]);
      Vec ei(n, Scalar::zero(dst.field)), ej(n, Scalar::zero(dst.field));
      for (size_t r = 0; r < n; ++r) { ei[r] = m.at(r, i); ej[r] = m.at(r, j); }
      Vec rhs = dst.table.mul(ei, ej);
      for (size_t t = 0; t < n; ++t)
        if (!(lhs[t] == rhs[t])) { mult_ok = false; break; }
    }
  rep.add("structure-constants-preserved", mult_ok ? Outcome::Pass : Outcome::Fail);
  return rep;
}

}  // namespace palg
