// Test-only oracles: independent computation routes used to pin expected
// values. These deliberately avoid the library's rewriting engine and
// normal-form machinery.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "palg/element.hpp"
#include "palg/int_matrix.hpp"
#include "palg/linalg.hpp"

namespace palg::oracle {

// ---- Smith normal form via gcds of i-by-i minors -------------------------

inline BigInt minor_gcd(const IntMatrix& m, size_t k) {
  std::vector<size_t> rows(m.rows), cols(m.cols);
  for (size_t i = 0; i < m.rows; ++i) rows[i] = i;
  for (size_t j = 0; j < m.cols; ++j) cols[j] = j;
  BigInt g = 0;

  std::vector<size_t> rsel(k), csel(k);
  std::vector<char> rmask(m.rows, 0), cmask(m.cols, 0);
  // enumerate k-subsets of rows and columns
  std::vector<size_t> ridx(k), cidx(k);
  auto enumerate = [&](auto&& self, std::vector<size_t>& idx, size_t pos, size_t start,
                       size_t total, auto&& fn) -> void {
    if (pos == k) {
      fn();
      return;
    }
    for (size_t i = start; i < total; ++i) {
      idx[pos] = i;
      self(self, idx, pos + 1, i + 1, total, fn);
    }
  };
  enumerate(enumerate, ridx, 0, 0, m.rows, [&] {
    enumerate(enumerate, cidx, 0, 0, m.cols, [&] {
      IntMatrix sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ridx[i], cidx[j]);
      g = gcd(g, determinant(sub));
    });
  });
  (void)rsel; (void)csel; (void)rmask; (void)cmask;
  return g < 0 ? -g : g;
}

/// Invariant factors from d_1 ... d_i = gcd of all i x i minors.
inline std::vector<BigInt> invariant_factors_via_minors(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    BigInt gk = minor_gcd(m, k);
    if (gk == 0) break;
    out.push_back(gk / prev);
    prev = gk;
  }
  return out;
}

// ---- brute-force inverse search in F_p ------------------------------------

inline long fp_inverse_bruteforce(long a, long p) {
  a = ((a % p) + p) % p;
  for (long x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::domain_error("no inverse");
}

// ---- tiny bivariate polynomial expander ----------------------------------

// polynomials in two commuting variables, exponent pair -> rational
using BiPoly = std::map<std::pair<int, int>, BigRat>;

inline BiPoly bp_const(long c) { return c == 0 ? BiPoly{} : BiPoly{{{0, 0}, BigRat(c)}}; }
inline BiPoly bp_var(int which) {
  return which == 0 ? BiPoly{{{1, 0}, BigRat(1)}} : BiPoly{{{0, 1}, BigRat(1)}};
}

inline BiPoly bp_add(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [m, c] : b) {
    r[m] += c;
    if (r[m] == 0) r.erase(m);
  }
  return r;
}

inline BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) {
      auto m = std::make_pair(m1.first + m2.first, m1.second + m2.second);
      r[m] += c1 * c2;
      if (r[m] == 0) r.erase(m);
    }
  return r;
}

inline BiPoly bp_pow(const BiPoly& a, int n) {
  BiPoly r = bp_const(1);
  for (int i = 0; i < n; ++i) r = bp_mul(r, a);
  return r;
}

// ---- occurrence-enumeration cyclic derivative on raw words ----------------

/// All contributions q p over occurrences of `g` in `word`; orbit mode
/// collapses occurrences identified by the word's cyclic symmetry.
inline std::vector<std::vector<int>> cyclic_derivative_words(const std::vector<int>& word, int g,
                                                             bool orbit_mode) {
  size_t n = word.size();
  size_t period = n;
  for (size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (word[i] != word[(i + p) % n]) ok = false;
    if (ok) { period = p; break; }
  }
  std::vector<std::vector<int>> out;
  std::vector<char> seen(period, 0);
  for (size_t i = 0; i < n; ++i) {
    if (word[i] != g) continue;
    if (orbit_mode) {
      if (seen[i % period]) continue;
      seen[i % period] = 1;
    }
    std::vector<int> qp(word.begin() + i + 1, word.end());
    qp.insert(qp.end(), word.begin(), word.begin() + i);
    out.push_back(std::move(qp));
  }
  return out;
}

// ---- sparse exact row-echelon rank ----------------------------------------

/// Incremental sparse Gaussian elimination; rows are (column -> coefficient).
struct SparseRank {
  Field field;
  std::map<int, std::map<int, Scalar>> pivots;  // pivot column -> reduced row

  explicit SparseRank(Field f) : field(f) {}

  /// Reduces the row against current pivots; absorbs it if nonzero.
  void add_row(std::map<int, Scalar> row) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Scalar inv = row.begin()->second.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead, std::move(row));
        return;
      }
      Scalar f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto jt = row.find(c);
        Scalar delta = f * v;
        if (jt == row.end()) {
          row.emplace(c, -delta);
        } else {
          jt->second -= delta;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
    }
  }

  size_t rank() const { return pivots.size(); }
};

// ---- exhaustive H0 dimension for the 2-cycle Ginzburg family ---------------

/// Words over e: 0->1, f: 1->0 are determined by (start, length); index
/// 2*len + start. The ideal is spanned by all p * r * q with r one of the
/// two explicit degree -1 differentials; returns #words - rank at length
/// cutoff L (complete rows only).
inline long h0_gk_dimension(int k, Field f, int L) {
  auto binom = [](int n, int r) {
    BigInt b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
  };
  // relation terms: (start, length, coeff); lengths 2j+1, j = 1..k
  struct Rel {
    int src, dst;
    std::vector<std::pair<int, BigInt>> terms;  // length, coeff
  };
  std::vector<Rel> rels;
  {
    Rel de{1, 0, {}};  // sum_j C(k,j) (fe)^j f
    Rel df{0, 1, {}};  // sum_j C(k,j) e (fe)^j
    for (int j = 1; j <= k; ++j) {
      de.terms.emplace_back(2 * j + 1, binom(k, j));
      df.terms.emplace_back(2 * j + 1, binom(k, j));
    }
    rels.push_back(de);
    rels.push_back(df);
  }
  int maxlen = 2 * k + 1;
  SparseRank rk(f);
  for (const auto& r : rels) {
    for (int lp = 0; lp + maxlen <= L; ++lp) {
      for (int lq = 0; lp + maxlen + lq <= L; ++lq) {
        // p ends at r.src, q starts at r.dst; starts forced by parity
        int sp = ((r.src - lp) % 2 + 2) % 2;
        std::map<int, Scalar> row;
        for (const auto& [len, coeff] : r.terms) {
          int total = lp + len + lq;
          int col = 2 * total + sp;
          Scalar c(f, BigRat(coeff));
          auto it = row.find(col);
          if (it == row.end()) row.emplace(col, c);
          else {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
          }
        }
        rk.add_row(std::move(row));
      }
    }
  }
  long words = 2L * (L + 1);
  return words - long(rk.rank());
}

// ---- exhaustive degree-0 dimension for the k = 1 two-vertex family ---------

/// Basis: x1^i x2^j * (word from start s of length l), i + j + l <= L.
/// Relations of the k = 1 family: ab = (x1-1)e0, ba = (x1-1)e1,
/// (x2+1)e0 = 0, (x1+x2)e1 = 0.
inline long h0_w1_dimension(Field f, int L) {
  struct Term {
    int di, dj, len;
    long coeff;
  };
  struct Rel {
    int src, dst;
    std::vector<Term> terms;
  };
  std::vector<Rel> rels = {
      {0, 0, {{0, 0, 2, 1}, {1, 0, 0, -1}, {0, 0, 0, 1}}},   // ab - (x1-1)e0
      {1, 1, {{0, 0, 2, 1}, {1, 0, 0, -1}, {0, 0, 0, 1}}},   // ba - (x1-1)e1
      {0, 0, {{0, 1, 0, 1}, {0, 0, 0, 1}}},                  // (x2+1)e0
      {1, 1, {{1, 0, 0, 1}, {0, 1, 0, 1}}},                  // (x1+x2)e1
  };
  auto col = [&](int i, int j, int s, int l) {
    // dense enumeration of (i, j, s, l) with i + j + l <= L
    return ((i * (L + 1) + j) * 2 + s) * (L + 1) + l;
  };
  SparseRank rk(f);
  long words = 0;
  for (int i = 0; i <= L; ++i)
    for (int j = 0; i + j <= L; ++j)
      for (int l = 0; i + j + l <= L; ++l) words += 2;

  for (const auto& r : rels) {
    int rmax = 0;
    for (const auto& t : r.terms) rmax = std::max(rmax, t.di + t.dj + t.len);
    for (int i1 = 0; i1 <= L; ++i1)
      for (int j1 = 0; i1 + j1 <= L; ++j1)
        for (int lp = 0; i1 + j1 + lp <= L; ++lp)
          for (int i2 = 0; i1 + j1 + lp + rmax + i2 <= L; ++i2)
            for (int j2 = 0; i1 + j1 + lp + rmax + i2 + j2 <= L; ++j2)
              for (int lq = 0; i1 + j1 + lp + rmax + i2 + j2 + lq <= L; ++lq) {
                int sp = ((r.src - lp) % 2 + 2) % 2;
                std::map<int, Scalar> row;
                for (const auto& t : r.terms) {
                  int c = col(i1 + i2 + t.di, j1 + j2 + t.dj, sp, lp + t.len + lq);
                  Scalar v(f, t.coeff);
                  auto it = row.find(c);
                  if (it == row.end()) row.emplace(c, v);
                  else {
                    it->second += v;
                    if (it->second.is_zero()) row.erase(it);
                  }
                }
                rk.add_row(std::move(row));
              }
  }
  return words - long(rk.rank());
}

// ---- random element generation ---------------------------------------------

inline AlgebraElement random_element(QuiverPtr q, Field f, std::mt19937& rng, int max_terms = 3,
                                     int max_len = 3, int max_central = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> vtx(0, int(q->num_vertices()) - 1);
  std::uniform_int_distribution<int> cexp(0, max_central);
  AlgebraElement e(q, f);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    TermKey k;
    k.exps.assign(q->num_centrals(), 0);
    for (size_t c = 0; c < q->num_centrals(); ++c) k.exps[c] = cexp(rng);
    int l = len(rng);
    int v = vtx(rng);
    k.src = v;
    int cur = v;
    for (int i = 0; i < l; ++i) {
      std::vector<int> outgoing;
      for (size_t a = 0; a < q->num_arrows(); ++a)
        if (q->arrows()[a].src == cur) outgoing.push_back(int(a));
      if (outgoing.empty()) break;
      std::uniform_int_distribution<int> pick(0, int(outgoing.size()) - 1);
      int a = outgoing[size_t(pick(rng))];
      k.arrows.push_back(a);
      cur = q->arrows()[a].dst;
    }
    long c = coeff(rng);
    if (c == 0) c = 1;
    e.add_term(k, Scalar(f, c));
  }
  return e;
}

}  // namespace palg::oracle
