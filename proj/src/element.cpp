#include "palg/element.hpp"

#include <sstream>

namespace palg {

int TermKey::central_degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

std::strong_ordering TermKey::operator<=>(const TermKey& o) const {
  if (auto c = central_degree() <=> o.central_degree(); c != 0) return c;
  if (auto c = exps <=> o.exps; c != 0) return c;
  if (auto c = arrows.size() <=> o.arrows.size(); c != 0) return c;
  if (auto c = src <=> o.src; c != 0) return c;
  return arrows <=> o.arrows;
}

AlgebraElement AlgebraElement::idempotent(QuiverPtr q, Field f, int vertex) {
  AlgebraElement e(q, f);
  if (vertex < 0 || vertex >= int(q->num_vertices()))
    throw std::invalid_argument("idempotent: bad vertex");
  e.add_term(TermKey{std::vector<int>(q->num_centrals(), 0), vertex, {}}, Scalar::one(f));
  return e;
}

AlgebraElement AlgebraElement::unit(QuiverPtr q, Field f) {
  AlgebraElement e(q, f);
  for (size_t v = 0; v < q->num_vertices(); ++v)
    e.add_term(TermKey{std::vector<int>(q->num_centrals(), 0), int(v), {}}, Scalar::one(f));
  return e;
}

AlgebraElement AlgebraElement::arrow(QuiverPtr q, Field f, int arrow_id) {
  AlgebraElement e(q, f);
  if (arrow_id < 0 || arrow_id >= int(q->num_arrows()))
    throw std::invalid_argument("arrow: bad id");
  e.add_term(TermKey{std::vector<int>(q->num_centrals(), 0), q->arrows()[arrow_id].src, {arrow_id}},
             Scalar::one(f));
  return e;
}

AlgebraElement AlgebraElement::central(QuiverPtr q, Field f, int var_id) {
  AlgebraElement e(q, f);
  if (var_id < 0 || var_id >= int(q->num_centrals()))
    throw std::invalid_argument("central: bad id");
  std::vector<int> exps(q->num_centrals(), 0);
  exps[var_id] = 1;
  for (size_t v = 0; v < q->num_vertices(); ++v)
    e.add_term(TermKey{exps, int(v), {}}, Scalar::one(f));
  return e;
}

AlgebraElement AlgebraElement::constant(QuiverPtr q, Field f, const Scalar& c) {
  return unit(q, f) * c;
}

void AlgebraElement::add_term(const TermKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (quiver_ != o.quiver_ && !(*quiver_ == *o.quiver_))
    throw std::invalid_argument("elements over different quivers");
  if (!(field_ == o.field_)) throw std::invalid_argument("elements over different fields");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_same(o);
  AlgebraElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_same(o);
  AlgebraElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(quiver_, field_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(o);
  AlgebraElement r(quiver_, field_);
  for (const auto& [k1, c1] : terms_) {
    int dst1 = k1.arrows.empty() ? k1.src : quiver_->arrows()[k1.arrows.back()].dst;
    for (const auto& [k2, c2] : o.terms_) {
      if (dst1 != k2.src) continue;  // non-composable paths multiply to zero
      TermKey k;
      k.exps.resize(k1.exps.size());
      for (size_t i = 0; i < k.exps.size(); ++i) k.exps[i] = k1.exps[i] + k2.exps[i];
      k.src = k1.src;
      k.arrows = k1.arrows;
      k.arrows.insert(k.arrows.end(), k2.arrows.begin(), k2.arrows.end());
      r.add_term(k, c1 * c2);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
  AlgebraElement r(quiver_, field_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& e) { return e * c; }

AlgebraElement AlgebraElement::pow(unsigned n) const {
  AlgebraElement r = unit(quiver_, field_);
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return *quiver_ == *o.quiver_ && field_ == o.field_ && terms_ == o.terms_;
}

int AlgebraElement::term_degree(const TermKey& k) const {
  int d = 0;
  for (int a : k.arrows) d += quiver_->arrows()[a].degree;
  return d;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : terms_) {
    int td = term_degree(k);
    if (!d) d = td;
    else if (*d != td) return std::nullopt;
  }
  return d;
}

bool AlgebraElement::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

bool AlgebraElement::is_central_only() const {
  for (const auto& [k, c] : terms_)
    if (!k.arrows.empty()) return false;
  return true;
}

AlgebraElement AlgebraElement::substitute(const std::map<std::string, AlgebraElement>& map) const {
  // Validate images: central-only and uniform across vertices.
  std::vector<const AlgebraElement*> image(quiver_->num_centrals(), nullptr);
  for (const auto& [name, img] : map) {
    int c = quiver_->central_index(name);
    if (c < 0) throw std::invalid_argument("substitute: unknown central variable " + name);
    if (!img.is_central_only())
      throw std::invalid_argument("substitute: image of " + name + " is not central");
    for (const auto& [k, coeff] : img.terms()) {
      TermKey other = k;
      for (size_t v = 0; v < quiver_->num_vertices(); ++v) {
        other.src = int(v);
        auto it = img.terms().find(other);
        if (it == img.terms().end() || !(it->second == coeff))
          throw std::invalid_argument("substitute: image of " + name + " is vertex-dependent");
      }
    }
    image[c] = &img;
  }

  AlgebraElement result(quiver_, field_);
  for (const auto& [k, coeff] : terms_) {
    TermKey stripped = k;  // keep exponents of unmapped variables
    AlgebraElement factor = unit(quiver_, field_);
    bool any = false;
    for (size_t c = 0; c < image.size(); ++c) {
      if (!image[c] || k.exps[c] == 0) continue;
      factor *= image[c]->pow(unsigned(k.exps[c]));
      stripped.exps[c] = 0;
      any = true;
    }
    AlgebraElement base(quiver_, field_);
    base.add_term(stripped, coeff);
    result += any ? factor * base : base;
  }
  return result;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
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
    if (!coeff.is_one()) factors.push_back(coeff.str());
    for (size_t v = 0; v < k.exps.size(); ++v) {
      if (k.exps[v] == 0) continue;
      std::string f = quiver_->central_vars()[v];
      if (k.exps[v] > 1) f += "^" + std::to_string(k.exps[v]);
      factors.push_back(f);
    }
    if (k.arrows.empty()) {
      factors.push_back("e" + quiver_->vertices()[k.src]);
    } else {
      for (int a : k.arrows) factors.push_back(quiver_->arrows()[a].name);
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace palg
