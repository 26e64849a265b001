#include "palg/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace palg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
                         std::vector<int> generators)
    : table_(std::move(table)), names_(std::move(names)), generators_(std::move(generators)) {
  validate_and_index();
}

void FiniteGroup::validate_and_index() {
  size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("empty group");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table not square");
    for (int e : row)
      if (e < 0 || e >= int(n)) throw std::invalid_argument("group table entry out of range");
  }
  for (size_t x = 0; x < n; ++x)
    if (table_[0][x] != int(x) || table_[x][0] != int(x))
      throw std::invalid_argument("element 0 is not an identity");
  inverse_.assign(n, -1);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw std::invalid_argument("one-sided inverse");
        inverse_[a] = int(b);
        break;
      }
    if (inverse_[a] < 0) throw std::invalid_argument("missing inverse");
  }
  if (n <= 256) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("group table not associative");
  }
  // conjugacy classes
  std::vector<char> seen(n, 0);
  for (size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<int> cls;
    for (size_t g = 0; g < n; ++g)
      cls.insert(table_[table_[inverse_[g]][x]][g]);
    std::vector<int> v(cls.begin(), cls.end());
    for (int e : v) seen[e] = 1;
    classes_.push_back(std::move(v));
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

int FiniteGroup::element_order(int a) const {
  int p = a, n = 1;
  while (p != 0) {
    p = mul(p, a);
    ++n;
  }
  return n;
}

std::vector<int> FiniteGroup::center_elements() const {
  std::vector<int> out;
  for (size_t z = 0; z < order(); ++z) {
    bool central = true;
    for (size_t g = 0; g < order() && central; ++g)
      if (table_[z][g] != table_[g][z]) central = false;
    if (central) out.push_back(int(z));
  }
  return out;
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << " ";
      os << j + 1;
      first = false;
      j = size_t(p[j]);
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

}  // namespace

GroupPtr permutation_group(int npoints, const std::vector<std::vector<int>>& gen_perms,
                           const std::vector<std::string>& gen_names) {
  (void)gen_names;
  std::set<std::vector<int>> elems;
  std::vector<int> id(npoints);
  for (int i = 0; i < npoints; ++i) id[i] = i;
  elems.insert(id);
  std::deque<std::vector<int>> queue(gen_perms.begin(), gen_perms.end());
  for (const auto& g : gen_perms) elems.insert(g);
  while (!queue.empty()) {
    std::vector<int> p = queue.front();
    queue.pop_front();
    for (const auto& g : gen_perms) {
      std::vector<int> pg(npoints);
      for (int i = 0; i < npoints; ++i) pg[i] = p[g[i]];
      if (elems.insert(pg).second) queue.push_back(pg);
    }
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());  // lexicographic
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < list.size(); ++i) index[list[i]] = int(i);
  size_t n = list.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<int> ab(npoints);
      for (int i = 0; i < npoints; ++i) ab[i] = list[a][list[b][i]];
      table[a][b] = index.at(ab);
    }
  std::vector<std::string> names;
  for (const auto& p : list) names.push_back(cycle_notation(p));
  std::vector<int> gens;
  for (const auto& g : gen_perms) gens.push_back(index.at(g));
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::move(gens));
}

GroupPtr alternating_group(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("alternating_group: n in 3..5");
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> elems;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    if (inv % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  size_t m = elems.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = elems[a][elems[b][i]];
      table[a][b] = index.at(ab);
    }
  std::vector<std::string> names;
  for (const auto& q : elems) names.push_back(cycle_notation(q));
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::vector<int>{});
}

GroupPtr symmetric_group(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("symmetric_group: n in 2..5");
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  size_t m = elems.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = elems[a][elems[b][i]];
      table[a][b] = index.at(ab);
    }
  std::vector<std::string> names;
  for (const auto& q : elems) names.push_back(cycle_notation(q));
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::vector<int>{});
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
  return std::make_shared<FiniteGroup>(std::move(table), std::move(names),
                                       std::vector<int>{n > 1 ? 1 : 0});
}

GroupPtr dihedral_group_perm(int n) {
  if (n < 2) throw std::invalid_argument("dihedral_group_perm: n >= 2");
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return permutation_group(n, {r, s}, {"r", "s"});
}

GroupPresentation cyclic_presentation(int k) {
  GroupPresentation p;
  p.generators = {"x"};
  p.relators.push_back(std::vector<int>(size_t(k), 1));
  return p;
}

GroupPresentation dihedral_presentation(int n) {
  GroupPresentation p;
  p.generators = {"r", "s"};
  p.relators.push_back(std::vector<int>(size_t(n), 1));      // r^n
  p.relators.push_back({2, 2});                              // s^2
  std::vector<int> rs;
  for (int i = 0; i < 2; ++i) { rs.push_back(1); rs.push_back(2); }
  p.relators.push_back(rs);                                  // (r s)^2
  return p;
}

GroupPresentation prism_presentation(int m, int n) {
  GroupPresentation p;
  p.generators = {"x", "y"};
  p.relators.push_back({1, 2, -1, 2});  // x y x^-1 y
  std::vector<int> w;
  for (int i = 0; i < 2 * m; ++i) w.push_back(1);
  for (int i = 0; i < n; ++i) w.push_back(-2);
  p.relators.push_back(w);              // x^2m y^-n
  return p;
}

namespace {

/// HLT coset enumeration over the trivial subgroup.
struct CosetTable {
  int ng;
  std::vector<std::vector<int>> rels;  // letters: 2g forward, 2g+1 inverse
  std::vector<std::vector<int>> tab;
  std::vector<int> rep;
  std::deque<std::pair<int, int>> coinc;
  size_t bound;
  size_t defined = 0;
  size_t merges = 0;

  static int inv(int l) { return l ^ 1; }

  int find(int c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  int newcoset() {
    tab.emplace_back(2 * ng, -1);
    rep.push_back(int(tab.size()) - 1);
    ++defined;
    return int(tab.size()) - 1;
  }

  int get(int c, int l) {
    int d = tab[c][l];
    return d < 0 ? -1 : find(d);
  }

  void set_edge(int c, int l, int d) {
    c = find(c);
    d = find(d);
    int cur = get(c, l);
    if (cur == -1) tab[c][l] = d;
    else if (cur != d) coinc.emplace_back(cur, d);
    c = find(c);
    d = find(d);
    int cur2 = get(d, inv(l));
    if (cur2 == -1) tab[d][inv(l)] = c;
    else if (cur2 != c) coinc.emplace_back(cur2, c);
  }

  void process_coincidences() {
    while (!coinc.empty()) {
      auto [x, y] = coinc.front();
      coinc.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep[y] = x;
      ++merges;
      for (int l = 0; l < 2 * ng; ++l) {
        int d = tab[y][l];
        if (d < 0) continue;
        tab[y][l] = -1;
        set_edge(x, l, find(d));
      }
    }
  }

  // true when the scan closed (possibly after defining cosets);
  // false when the workspace bound was hit
  bool scan_and_fill(int c, const std::vector<int>& w) {
    for (;;) {
      c = find(c);
      size_t i = 0, j = w.size();
      int f = c, b = c;
      while (i < j) {
        int d = get(f, w[i]);
        if (d < 0) break;
        f = d;
        ++i;
      }
      while (j > i) {
        int d = get(b, inv(w[j - 1]));
        if (d < 0) break;
        b = d;
        --j;
      }
      if (i == j) {
        if (f != b) {
          coinc.emplace_back(f, b);
          process_coincidences();
        }
        return true;
      }
      if (i + 1 == j) {
        set_edge(f, w[i], b);
        process_coincidences();
        continue;  // rescan after the deduction
      }
      if (defined >= bound) return false;
      int d = newcoset();
      set_edge(f, w[i], d);
      process_coincidences();
    }
  }

  bool run() {
    newcoset();
    for (;;) {
      size_t defined_before = defined, merges_before = merges;
      for (int c = 0; c < int(tab.size()); ++c) {
        if (find(c) != c) continue;
        for (const auto& r : rels)
          if (!scan_and_fill(c, r)) return false;
        if (find(c) != c) continue;  // merged away during scans
        for (int l = 0; l < 2 * ng; ++l) {
          int cc = find(c);
          if (cc != c) break;
          if (get(c, l) == -1) {
            if (defined >= bound) return false;
            int d = newcoset();
            set_edge(c, l, d);
            process_coincidences();
          }
        }
      }
      if (defined == defined_before && merges == merges_before) return true;
    }
  }
};

std::string word_name(const std::vector<int>& letters, const std::vector<std::string>& gens) {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << "*";
    int l = letters[i];
    os << gens[l / 2];
    if (l % 2) os << "^-1";
  }
  return os.str();
}

}  // namespace

ToddCoxeterResult todd_coxeter(const GroupPresentation& pres, size_t workspace_bound) {
  ToddCoxeterResult res;
  int ng = int(pres.generators.size());
  CosetTable ct;
  ct.ng = ng;
  ct.bound = workspace_bound;
  for (const auto& r : pres.relators) {
    std::vector<int> w;
    for (int letter : r) {
      if (letter == 0 || std::abs(letter) > ng)
        throw std::invalid_argument("relator letter out of range");
      w.push_back(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
    }
    ct.rels.push_back(std::move(w));
  }
  if (!ct.run()) {
    res.outcome = Outcome::Inconclusive;
    res.cosets_defined = ct.defined;
    res.detail = "workspace bound " + std::to_string(workspace_bound) +
                 " exhausted; presentation may define an infinite group";
    return res;
  }

  // compact live cosets
  std::vector<int> live;
  std::vector<int> newid(ct.tab.size(), -1);
  for (int c = 0; c < int(ct.tab.size()); ++c)
    if (ct.find(c) == c) {
      newid[c] = int(live.size());
      live.push_back(c);
    }
  size_t n = live.size();

  // representative words by BFS from the identity coset
  std::vector<std::vector<int>> words(n);
  std::vector<char> visited(n, 0);
  std::deque<int> queue;
  visited[newid[ct.find(0)]] = 1;
  queue.push_back(ct.find(0));
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int l = 0; l < 2 * ng; ++l) {
      int d = ct.get(c, l);
      if (d < 0 || visited[newid[d]]) continue;
      visited[newid[d]] = 1;
      words[newid[d]] = words[newid[c]];
      words[newid[d]].push_back(l);
      queue.push_back(d);
    }
  }

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int c = live[i];
      for (int l : words[j]) c = ct.get(c, l);
      table[i][j] = newid[c];
    }
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(word_name(words[i], pres.generators));
  std::vector<int> gens;
  for (int g = 0; g < ng; ++g) gens.push_back(newid[ct.get(ct.find(0), 2 * g)]);

  res.outcome = Outcome::Pass;
  res.cosets_defined = ct.defined;
  res.group = std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::move(gens));
  return res;
}

std::vector<BigInt> abelianization(const GroupPresentation& pres) {
  size_t ng = pres.generators.size();
  IntMatrix m(pres.relators.size(), ng);
  for (size_t r = 0; r < pres.relators.size(); ++r)
    for (int letter : pres.relators[r]) {
      if (letter > 0) m.at(r, size_t(letter - 1)) += 1;
      else m.at(r, size_t(-letter - 1)) -= 1;
    }
  SmithResult snf = smith_normal_form(m);
  std::vector<BigInt> factors = snf.invariant_factors();
  std::vector<BigInt> out;
  for (const auto& d : factors)
    if (d != 1) out.push_back(d);
  for (size_t i = factors.size(); i < ng; ++i) out.push_back(0);  // free rank
  return out;
}

bool is_cyclic_abelianization(const GroupPresentation& pres) {
  return abelianization(pres).size() <= 1;
}

GroupAlgebraElement GroupAlgebraElement::zero(GroupPtr g, Field r) {
  size_t n = g->order();
  return GroupAlgebraElement{std::move(g), r, Vec(n, Scalar::zero(r))};
}

GroupAlgebraElement GroupAlgebraElement::identity(GroupPtr g, Field r) {
  GroupAlgebraElement e = zero(std::move(g), r);
  e.coeff[0] = Scalar::one(r);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = zero(group, ring);
  size_t n = coeff.size();
  for (size_t a = 0; a < n; ++a) {
    if (coeff[a].is_zero()) continue;
    for (size_t b = 0; b < n; ++b) {
      if (o.coeff[b].is_zero()) continue;
      r.coeff[size_t(group->mul(int(a), int(b)))] += coeff[a] * o.coeff[b];
    }
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& c) const {
  GroupAlgebraElement r = *this;
  for (auto& v : r.coeff) v *= c;
  return r;
}

bool GroupAlgebraElement::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return group == o.group && ring == o.ring && coeff == o.coeff;
}

bool GroupAlgebraElement::is_central() const {
  size_t n = coeff.size();
  for (size_t g = 0; g < n; ++g)
    for (size_t a = 0; a < n; ++a) {
      if (coeff[a].is_zero()) continue;
      // compare coefficient of a in u with coefficient of g a g^-1
      int conj = group->mul(group->mul(int(g), int(a)), group->inverse(int(g)));
      if (!(coeff[a] == coeff[size_t(conj)])) return false;
    }
  return true;
}

std::string GroupAlgebraElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i].is_zero()) continue;
    Scalar c = coeff[i];
    bool neg = c.value() < 0;
    if (first) {
      if (neg) { os << "-"; c = -c; }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) c = -c;
    }
    first = false;
    os << c.str() << "*[" << group->name_of(int(i)) << "]";
  }
  return first ? "0" : os.str();
}

std::vector<GroupAlgebraElement> conjugacy_class_sums(GroupPtr g, Field ring) {
  std::vector<GroupAlgebraElement> out;
  for (const auto& cls : g->conjugacy_classes()) {
    GroupAlgebraElement s = GroupAlgebraElement::zero(g, ring);
    for (int e : cls) s.coeff[size_t(e)] = Scalar::one(ring);
    out.push_back(std::move(s));
  }
  return out;
}

GroupAlgebraElement parse_class_sum_expr(const std::string& text, GroupPtr g, Field ring) {
  std::vector<GroupAlgebraElement> sums = conjugacy_class_sums(g, ring);
  struct P {
    const std::string& s;
    size_t i = 0;
    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eat(char c) {
      skip();
      if (i < s.size() && s[i] == c) { ++i; return true; }
      return false;
    }
    [[noreturn]] void fail(const std::string& m) {
      throw std::invalid_argument("class-sum expression: " + m + " at " + std::to_string(i));
    }
  } p{text, 0};

  GroupAlgebraElement acc = GroupAlgebraElement::zero(g, ring);
  bool first = true;
  for (;;) {
    p.skip();
    if (p.i >= text.size()) {
      if (first) p.fail("empty expression");
      break;
    }
    bool neg = false;
    if (!first || text[p.i] == '+' || text[p.i] == '-') {
      if (p.eat('+')) neg = false;
      else if (p.eat('-')) neg = true;
      else if (!first) p.fail("expected + or -");
    }
    first = false;
    // term: INT | INT * Cn | Cn | Cn * INT
    p.skip();
    Scalar c = Scalar::one(ring);
    int cls = -1;
    bool have_int = false, have_cls = false;
    for (int part = 0; part < 2; ++part) {
      p.skip();
      if (p.i < text.size() && std::isdigit((unsigned char)text[p.i])) {
        if (have_int) p.fail("two numbers in one term");
        size_t j = p.i;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        c = Scalar(ring, BigRat(BigInt(text.substr(p.i, j - p.i))));
        p.i = j;
        have_int = true;
      } else if (p.i < text.size() && (text[p.i] == 'C' || text[p.i] == 'c')) {
        if (have_cls) p.fail("two class sums in one term");
        size_t j = p.i + 1;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        if (j == p.i + 1) p.fail("expected class index after C");
        int idx = std::stoi(text.substr(p.i + 1, j - p.i - 1));
        if (idx < 1 || idx > int(sums.size())) p.fail("class index out of range");
        cls = idx - 1;
        p.i = j;
        have_cls = true;
      } else if (part == 0) {
        p.fail("expected number or class sum");
      }
      if (!p.eat('*')) break;
    }
    GroupAlgebraElement term =
        have_cls ? sums[size_t(cls)].scaled(c)
                 : GroupAlgebraElement::identity(g, ring).scaled(c);
    if (neg) term = term.scaled(-Scalar::one(ring));
    acc = acc + term;
  }
  return acc;
}

namespace {

// class-sum coordinates (constant on classes); nullopt when not constant
std::optional<Vec> class_coords(const GroupAlgebraElement& u, Field f) {
  const auto& classes = u.group->conjugacy_classes();
  Vec out;
  for (const auto& cls : classes) {
    Scalar c0(f, u.coeff[size_t(cls[0])].value());
    for (int e : cls)
      if (!(u.coeff[size_t(e)].value() == c0.value())) return std::nullopt;
    out.push_back(c0);
  }
  return out;
}

GroupAlgebraElement from_class_coords(GroupPtr g, Field ring, const Vec& v) {
  auto sums = conjugacy_class_sums(g, ring);
  GroupAlgebraElement out = GroupAlgebraElement::zero(g, ring);
  for (size_t i = 0; i < v.size(); ++i)
    out = out + sums[i].scaled(Scalar(ring, v[i].value()));
  return out;
}

}  // namespace

CentralUnitResult verify_central_unit(const GroupAlgebraElement& u) {
  CentralUnitResult res;
  if (!u.is_central()) {
    res.detail = "element is not central";
    return res;
  }
  Field solve_field = u.ring.kind == FieldKind::PrimeField ? u.ring : Field::Q();
  auto ucoords = class_coords(u, solve_field);
  if (!ucoords) {
    res.detail = "central element not constant on classes";  // unreachable
    return res;
  }
  GroupPtr g = u.group;
  auto sums = conjugacy_class_sums(g, solve_field);
  size_t c = sums.size();

  GroupAlgebraElement uf = GroupAlgebraElement::zero(g, solve_field);
  for (size_t i = 0; i < u.coeff.size(); ++i)
    uf.coeff[i] = Scalar(solve_field, u.coeff[i].value());

  Mat m(c, c, solve_field);
  for (size_t j = 0; j < c; ++j) {
    GroupAlgebraElement prod = uf * sums[j];
    auto pc = class_coords(prod, solve_field);
    if (!pc) throw std::logic_error("class sum product not central");
    for (size_t i = 0; i < c; ++i) m.at(i, j) = (*pc)[i];
  }
  Vec target(c, Scalar::zero(solve_field));
  target[0] = Scalar::one(solve_field);  // identity class
  auto w = solve(m, target);
  if (!w) {
    res.detail = "singular system: not a unit of the center";
    return res;
  }
  if (u.ring.kind == FieldKind::Integers) {
    for (const auto& x : *w)
      if (!x.is_integer()) {
        res.detail = "rational inverse only: not a unit over Z (coefficient " + x.str() + ")";
        return res;
      }
  }
  GroupAlgebraElement inv = from_class_coords(g, u.ring, *w);
  GroupAlgebraElement one = GroupAlgebraElement::identity(g, u.ring);
  if (!((u * inv) == one) || !((inv * u) == one)) {
    res.detail = "certificate failed re-verification";  // unreachable
    return res;
  }
  res.outcome = Outcome::Pass;
  res.inverse = std::move(inv);
  return res;
}

GroupAlgebraElement reduce_mod_p(const GroupAlgebraElement& u, long p) {
  GroupAlgebraElement out = GroupAlgebraElement::zero(u.group, Field::Fp(p));
  for (size_t i = 0; i < u.coeff.size(); ++i)
    out.coeff[i] = Scalar(Field::Fp(p), u.coeff[i].value());
  return out;
}

std::optional<long> group_algebra_element_order(const GroupAlgebraElement& u, long max_power) {
  GroupAlgebraElement one = GroupAlgebraElement::identity(u.group, u.ring);
  GroupAlgebraElement p = u;
  for (long n = 1; n <= max_power; ++n) {
    if (p == one) return n;
    p = p * u;
  }
  return std::nullopt;
}

CenterUnitSurvey center_unit_survey(GroupPtr g, long p, long long budget) {
  CenterUnitSurvey survey;
  Field f = Field::Fp(p);
  auto sums = conjugacy_class_sums(g, f);
  size_t c = sums.size();
  long long total = 1;
  for (size_t i = 0; i < c; ++i) {
    total *= p;
    if (total > budget) {
      survey.detail = "budget exceeded: p^#classes > " + std::to_string(budget);
      return survey;
    }
  }
  survey.scanned = total;

  // center structure constants, in class coordinates
  std::vector<std::vector<Vec>> sc(c, std::vector<Vec>(c));
  for (size_t i = 0; i < c; ++i)
    for (size_t j = 0; j < c; ++j) {
      auto pc = class_coords(sums[i] * sums[j], f);
      sc[i][j] = *pc;
    }
  auto cmul = [&](const Vec& a, const Vec& b) {
    Vec r(c, Scalar::zero(f));
    for (size_t i = 0; i < c; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < c; ++j) {
        if (b[j].is_zero()) continue;
        Scalar x = a[i] * b[j];
        for (size_t t = 0; t < c; ++t) r[t] += x * sc[i][j][t];
      }
    }
    return r;
  };
  Vec one(c, Scalar::zero(f));
  one[0] = Scalar::one(f);

  std::vector<long> digits(c, 0);
  for (long long it = 0; it < total; ++it) {
    Vec z(c, Scalar::zero(f));
    for (size_t i = 0; i < c; ++i) z[i] = Scalar(f, digits[i]);
    Mat m(c, c, f);
    for (size_t j = 0; j < c; ++j) {
      Vec ej(c, Scalar::zero(f));
      ej[j] = Scalar::one(f);
      Vec col = cmul(z, ej);
      for (size_t i = 0; i < c; ++i) m.at(i, j) = col[i];
    }
    if (auto w = solve(m, one)) {
      Vec check = cmul(z, *w);
      bool ok = true;
      for (size_t i = 0; i < c; ++i)
        if (!(check[i] == one[i])) ok = false;
      if (ok) {
        ++survey.units;
        // order of the unit
        Vec pw = z;
        long ord = 1;
        for (; ord <= total; ++ord) {
          bool is_one = true;
          for (size_t i = 0; i < c; ++i)
            if (!(pw[i] == one[i])) is_one = false;
          if (is_one) break;
          pw = cmul(pw, z);
        }
        survey.order_histogram[ord] += 1;
        int support = 0;
        for (size_t i = 0; i < c; ++i)
          if (!z[i].is_zero()) ++support;
        if (support == 1 && !z[0].is_zero()) ++survey.scalar_units;
        if (support == 1) ++survey.single_class_units;
      }
    }
    for (size_t i = 0; i < c; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  survey.outcome = Outcome::Pass;
  return survey;
}

TrivialityScan central_unit_scan(GroupPtr g, long bound) {
  TrivialityScan scan;
  auto sums = conjugacy_class_sums(g, Field::Z());
  size_t c = sums.size();
  long span = 2 * bound + 1;
  long long total = 1;
  for (size_t i = 0; i < c; ++i) total *= span;
  scan.scanned = total;
  std::vector<long> digits(c, 0);
  GroupAlgebraElement one = GroupAlgebraElement::identity(g, Field::Z());
  for (long long it = 0; it < total; ++it) {
    GroupAlgebraElement z = GroupAlgebraElement::zero(g, Field::Z());
    for (size_t i = 0; i < c; ++i)
      z = z + sums[i].scaled(Scalar(Field::Z(), digits[i] - bound));
    if (!z.is_zero()) {
      auto r = verify_central_unit(z);
      if (r.outcome == Outcome::Pass) {
        ++scan.units_found;
        bool trivial = z == one || z == one.scaled(Scalar(Field::Z(), -1));
        if (!trivial) scan.all_trivial = false;
      }
    }
    for (size_t i = 0; i < c; ++i) {
      if (++digits[i] < span) break;
      digits[i] = 0;
    }
  }
  return scan;
}

}  // namespace palg
