#include "palg/commpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace palg {

bool mono_greater_drl(const Mono& a, const Mono& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0;  // smaller exponent in the last differing variable wins
  }
  return false;
}

CommutativePoly CommutativePoly::variable(std::shared_ptr<const std::vector<std::string>> vars,
                                          Field f, size_t i) {
  CommutativePoly p(vars, f);
  Mono m(p.vars().size(), 0);
  m[i] = 1;
  p.add_term(m, Scalar::one(f));
  return p;
}

CommutativePoly CommutativePoly::constant(std::shared_ptr<const std::vector<std::string>> vars,
                                          Field f, const Scalar& c) {
  CommutativePoly p(vars, f);
  p.add_term(Mono(p.vars().size(), 0), c);
  return p;
}

const Mono& CommutativePoly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading_mono of zero");
  return terms_.begin()->first;
}

const Scalar& CommutativePoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
  return terms_.begin()->second;
}

void CommutativePoly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommutativePoly CommutativePoly::operator+(const CommutativePoly& o) const {
  CommutativePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CommutativePoly CommutativePoly::operator-(const CommutativePoly& o) const {
  CommutativePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

CommutativePoly CommutativePoly::operator*(const CommutativePoly& o) const {
  CommutativePoly r(vars_, field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m(m1.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

CommutativePoly CommutativePoly::operator-() const { return scaled(-Scalar::one(field_)); }

CommutativePoly CommutativePoly::scaled(const Scalar& c) const {
  CommutativePoly r(vars_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

CommutativePoly CommutativePoly::pow(unsigned n) const {
  CommutativePoly r = constant(vars_, field_, Scalar::one(field_));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

CommutativePoly CommutativePoly::derivative(size_t var) const {
  CommutativePoly r(vars_, field_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * Scalar(field_, m[var]));
  }
  return r;
}

Scalar CommutativePoly::evaluate(const std::vector<Scalar>& point) const {
  Scalar r = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t *= point[i].pow(m[i]);
    r += t;
  }
  return r;
}

std::string CommutativePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    bool neg = coeff.value() < 0;
    if (first) {
      if (neg) { os << "-"; coeff = -coeff; }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) coeff = -coeff;
    }
    first = false;
    std::vector<std::string> factors;
    bool const_mono = true;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const_mono = false;
      std::string f = vars()[i];
      if (m[i] > 1) f += "^" + std::to_string(m[i]);
      factors.push_back(f);
    }
    if (!coeff.is_one() || const_mono) factors.insert(factors.begin(), coeff.str());
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

CommutativePoly parse_poly(const std::string& text,
                           std::shared_ptr<const std::vector<std::string>> vars, Field f) {
  // minimal recursive-descent over the shared grammar, variables only
  struct P {
    const std::string& s;
    size_t i = 0;
    std::shared_ptr<const std::vector<std::string>> vars;
    Field f;

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eat(char c) {
      skip();
      if (i < s.size() && s[i] == c) { ++i; return true; }
      return false;
    }
    [[noreturn]] void fail(const std::string& m) { throw std::invalid_argument("poly: " + m + " at " + std::to_string(i)); }

    CommutativePoly expr() {
      bool neg = eat('-');
      CommutativePoly e = term();
      if (neg) e = -e;
      for (;;) {
        if (eat('+')) e = e + term();
        else if (eat('-')) e = e - term();
        else return e;
      }
    }
    CommutativePoly term() {
      CommutativePoly e = factor();
      while (eat('*')) e = e * factor();
      return e;
    }
    CommutativePoly factor() {
      CommutativePoly e = atom();
      skip();
      if (eat('^')) {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) fail("expected exponent");
        unsigned n = unsigned(std::stoul(s.substr(i, j - i)));
        i = j;
        e = e.pow(n);
      }
      return e;
    }
    CommutativePoly atom() {
      skip();
      if (i >= s.size()) fail("expected expression");
      if (s[i] == '(') {
        ++i;
        CommutativePoly e = expr();
        if (!eat(')')) fail("expected ')'");
        return e;
      }
      if (std::isdigit((unsigned char)s[i])) {
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        BigInt num(s.substr(i, j - i));
        i = j;
        return CommutativePoly::constant(vars, f, Scalar(f, BigRat(num)));
      }
      if (std::isalpha((unsigned char)s[i])) {
        size_t j = i;
        while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
        std::string name = s.substr(i, j - i);
        i = j;
        for (size_t v = 0; v < vars->size(); ++v)
          if ((*vars)[v] == name) return CommutativePoly::variable(vars, f, v);
        fail("unknown variable " + name);
      }
      fail("unexpected character");
    }
  } p{text, 0, vars, f};
  CommutativePoly e = p.expr();
  p.skip();
  if (p.i != text.size()) throw std::invalid_argument("poly: trailing input");
  return e;
}

namespace {

bool divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

CommutativePoly mono_times(const CommutativePoly& f, const Mono& m, const Scalar& c) {
  CommutativePoly r(f.vars_ptr(), f.field());
  for (const auto& [mm, cc] : f.terms()) {
    Mono t(mm.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = mm[i] + m[i];
    r.add_term(t, cc * c);
  }
  return r;
}

}  // namespace

CommutativePoly poly_normal_form(const CommutativePoly& f,
                                 const std::vector<CommutativePoly>& gb) {
  CommutativePoly rem(f.vars_ptr(), f.field());
  CommutativePoly cur = f;
  while (!cur.is_zero()) {
    const Mono& lm = cur.leading_mono();
    bool reduced = false;
    for (const auto& g : gb) {
      if (!divides(g.leading_mono(), lm)) continue;
      Scalar c = cur.leading_coeff() * g.leading_coeff().inverse();
      cur = cur - mono_times(g, mono_div(lm, g.leading_mono()), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, cur.leading_coeff());
      CommutativePoly rest(f.vars_ptr(), f.field());
      bool skip = true;
      for (const auto& [m, c] : cur.terms()) {
        if (skip) { skip = false; continue; }
        rest.add_term(m, c);
      }
      cur = rest;
    }
  }
  return rem;
}

std::vector<CommutativePoly> buchberger(std::vector<CommutativePoly> gens) {
  std::vector<CommutativePoly> gb;
  for (auto& g : gens)
    if (!g.is_zero()) gb.push_back(g.scaled(g.leading_coeff().inverse()));
  if (gb.empty()) return gb;

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Mono &li = gb[i].leading_mono(), &lj = gb[j].leading_mono();
    Mono lcm = mono_lcm(li, lj);
    // product criterion: coprime leading monomials resolve trivially
    bool coprime = true;
    for (size_t t = 0; t < li.size(); ++t)
      if (li[t] > 0 && lj[t] > 0) coprime = false;
    if (coprime) continue;
    CommutativePoly s =
        mono_times(gb[i], mono_div(lcm, li), Scalar::one(gb[i].field())) -
        mono_times(gb[j], mono_div(lcm, lj), Scalar::one(gb[j].field()));
    CommutativePoly r = poly_normal_form(s, gb);
    if (r.is_zero()) continue;
    r = r.scaled(r.leading_coeff().inverse());
    gb.push_back(r);
    for (size_t t = 0; t + 1 < gb.size(); ++t) pairs.emplace_back(t, gb.size() - 1);
  }

  // reduce: drop redundant leading terms, then tail-reduce
  std::vector<CommutativePoly> reduced;
  for (size_t i = 0; i < gb.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gb.size() && !redundant; ++j)
      if (i != j && divides(gb[j].leading_mono(), gb[i].leading_mono())) {
        if (gb[j].leading_mono() == gb[i].leading_mono() && j > i) continue;
        redundant = true;
      }
    if (!redundant) reduced.push_back(gb[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<CommutativePoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = poly_normal_form(reduced[i], others);
    if (!reduced[i].is_zero())
      reduced[i] = reduced[i].scaled(reduced[i].leading_coeff().inverse());
  }
  std::erase_if(reduced, [](const CommutativePoly& p) { return p.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [](const CommutativePoly& a, const CommutativePoly& b) {
    return mono_greater_drl(b.leading_mono(), a.leading_mono());
  });
  return reduced;
}

QuotientDim quotient_dimension(const std::vector<CommutativePoly>& gb, size_t nvars) {
  QuotientDim out;
  for (const auto& g : gb)
    if (!g.is_zero()) {
      bool const_lead = true;
      for (int e : g.leading_mono())
        if (e) const_lead = false;
      if (const_lead) {  // unit ideal
        out.finite = true;
        out.dimension = 0;
        return out;
      }
    }

  // finite iff every variable has a pure power among the leading terms
  std::vector<int> cap(nvars, -1);
  for (const auto& g : gb) {
    const Mono& lm = g.leading_mono();
    int nz = -1;
    bool pure = true;
    for (size_t i = 0; i < nvars; ++i)
      if (lm[i] > 0) {
        if (nz >= 0) pure = false;
        nz = int(i);
      }
    if (pure && nz >= 0)
      cap[nz] = cap[nz] < 0 ? lm[nz] : std::min(cap[nz], lm[nz]);
  }
  for (size_t i = 0; i < nvars; ++i)
    if (cap[i] < 0) {
      out.finite = false;
      return out;
    }

  std::vector<Mono> lts;
  for (const auto& g : gb) lts.push_back(g.leading_mono());
  Mono cur(nvars, 0);
  std::function<void(size_t)> walk = [&](size_t var) {
    bool reducible = false;
    for (const auto& lt : lts)
      if (divides(lt, cur)) { reducible = true; break; }
    if (reducible) return;
    if (var == nvars) {
      out.standard_monomials.push_back(cur);
      return;
    }
    for (int e = 0; e <= cap[var]; ++e) {
      cur[var] = e;
      walk(var + 1);
    }
    cur[var] = 0;
  };
  walk(0);
  out.finite = true;
  out.dimension = long(out.standard_monomials.size());
  return out;
}

std::vector<CommutativePoly> jacobian_ideal(const CommutativePoly& f) {
  std::vector<CommutativePoly> out;
  for (size_t v = 0; v < f.vars().size(); ++v) out.push_back(f.derivative(v));
  return out;
}

CommutativePoly sigma_k(int k, Field f) {
  if (k < 1) throw std::invalid_argument("sigma_k: k must be >= 1");
  auto vars = std::make_shared<const std::vector<std::string>>(
      std::vector<std::string>{"u", "v", "x", "y"});
  auto u = CommutativePoly::variable(vars, f, 0);
  auto v = CommutativePoly::variable(vars, f, 1);
  auto x = CommutativePoly::variable(vars, f, 2);
  auto y = CommutativePoly::variable(vars, f, 3);
  auto one = CommutativePoly::constant(vars, f, Scalar::one(f));
  return u * v - x * y * ((x + one).pow(unsigned(k)) + y - one);
}

namespace {

// multiplication matrix of a polynomial on the standard-monomial basis
Mat mult_matrix(const CommutativePoly& g, const std::vector<CommutativePoly>& gb,
                const std::vector<Mono>& basis, Field f) {
  auto vars = g.vars_ptr();
  Mat m(basis.size(), basis.size(), f);
  for (size_t j = 0; j < basis.size(); ++j) {
    CommutativePoly bj(vars, f);
    bj.add_term(basis[j], Scalar::one(f));
    CommutativePoly prod = poly_normal_form(g * bj, gb);
    for (const auto& [mono, c] : prod.terms()) {
      auto it = std::find(basis.begin(), basis.end(), mono);
      if (it == basis.end()) throw std::logic_error("mult_matrix: monomial escapes basis");
      m.at(size_t(it - basis.begin()), j) = c;
    }
  }
  return m;
}

}  // namespace

TjurinaResult tjurina_number(int k, Field f) {
  TjurinaResult res;
  CommutativePoly sigma = sigma_k(k, f);
  std::vector<CommutativePoly> gens = jacobian_ideal(sigma);
  gens.push_back(sigma);
  std::vector<CommutativePoly> gb = buchberger(gens);
  QuotientDim qd = quotient_dimension(gb, 4);
  if (!qd.finite) {
    res.outcome = Outcome::Inconclusive;
    return res;
  }
  res.outcome = Outcome::Pass;
  res.dim_global = qd.dimension;
  if (qd.dimension == 0) {
    res.dim_local_origin = 0;
    return res;
  }

  auto vars = sigma.vars_ptr();
  unsigned long n = (unsigned long)qd.dimension;
  // component where all four coordinates act nilpotently
  std::vector<Vec> common;
  bool first = true;
  for (size_t v = 0; v < 4; ++v) {
    Mat mv = mult_matrix(CommutativePoly::variable(vars, f, v), gb, qd.standard_monomials, f);
    Mat pw = mat_pow(mv, n);
    std::vector<Vec> ker = nullspace(pw);
    common = first ? ker : intersect_spans(common, ker, n, f);
    first = false;
  }
  res.dim_local_origin = long(common.size());

  if (k % 2 == 0) {
    // rank of (x+2)^N kills the (x = -2)-supported part
    CommutativePoly xp2 =
        CommutativePoly::variable(vars, f, 2) +
        CommutativePoly::constant(vars, f, Scalar(f, 2));
    Mat mx = mult_matrix(xp2, gb, qd.standard_monomials, f);
    res.dim_saturated = long(rank(mat_pow(mx, n)));
  }
  return res;
}

bool is_singular_point(const CommutativePoly& f, const std::vector<Scalar>& point) {
  if (!f.evaluate(point).is_zero()) return false;
  for (size_t v = 0; v < f.vars().size(); ++v)
    if (!f.derivative(v).evaluate(point).is_zero()) return false;
  return true;
}

}  // namespace palg
