// Truncated noncommutative Groebner bases (critical-pair completion) for
// two-sided ideals in path algebras over a field.
//
// Words live over an extended alphabet: the quiver's arrows plus one
// degree-0 loop per (central variable, vertex). The monomial order is
// degree-lexicographic with arrows ranked before central loops and ties
// broken by declaration order. Structural rules (central commutation and
// arrow/central swaps) are part of every system, so normal forms carry
// central letters to the front in a canonical sequence.
#pragma once

#include <map>
#include <optional>

#include "palg/element.hpp"

namespace palg {

struct Word {
  int src = 0;
  int dst = 0;
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  bool operator==(const Word& o) const { return src == o.src && letters == o.letters; }
};

/// Strict deglex comparison: longer words first; on equal length the word
/// whose first differing letter has the smaller id wins (smaller id = higher
/// rank); empty words tie-break on base vertex.
bool word_greater(const Word& a, const Word& b);

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return word_greater(a, b); }
};

class WordPoly {
 public:
  explicit WordPoly(Field f) : field_(f) {}

  const Field& field() const { return field_; }
  const std::map<Word, Scalar, WordGreater>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;

  void add(const Word& w, const Scalar& c);
  WordPoly operator+(const WordPoly& o) const;
  WordPoly operator-(const WordPoly& o) const;
  WordPoly scaled(const Scalar& c) const;

  bool operator==(const WordPoly& o) const { return terms_ == o.terms_; }

 private:
  Field field_;
  std::map<Word, Scalar, WordGreater> terms_;
};

Word word_concat(const Word& a, const Word& b);
WordPoly mul_word_left(const Word& w, const WordPoly& p);
WordPoly mul_word_right(const WordPoly& p, const Word& w);

/// Canonical word form of an element: central loops at the path source,
/// later-declared variables first, then the arrow letters.
WordPoly to_words(const AlgebraElement& e);
AlgebraElement from_words(QuiverPtr q, Field f, const WordPoly& p);

struct Rule {
  Word lhs;
  WordPoly tail;  // lhs rewrites to tail; every tail word < lhs
};

struct LengthOverflow : std::runtime_error {
  explicit LengthOverflow(const std::string& m) : std::runtime_error(m) {}
};

class RewriteSystem {
 public:
  RewriteSystem(QuiverPtr q, Field f, int bound)
      : quiver_(std::move(q)), field_(f), bound_(bound) {}

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  int bound() const { return bound_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool complete_below_bound() const { return complete_below_bound_; }
  long skipped_pairs() const { return skipped_pairs_; }
  size_t max_rule_len() const;

  WordPoly normal_form(WordPoly u) const;
  AlgebraElement normal_form(const AlgebraElement& e) const;
  bool reduces_to_zero(const AlgebraElement& e) const;

  /// First (rule, position) reduction of w, if any.
  std::optional<std::pair<size_t, size_t>> find_reduction(const Word& w) const;
  /// All (rule, position) reductions of w.
  std::vector<std::pair<size_t, size_t>> reductions(const Word& w) const;
  /// Applies rule r at position pos inside term w of u (w must be a term).
  WordPoly apply_rule_at(const WordPoly& u, const Word& w, size_t rule, size_t pos) const;

  std::string str() const;

 private:
  QuiverPtr quiver_;
  Field field_;
  std::vector<Rule> rules_;
  int bound_ = 0;
  bool complete_below_bound_ = false;
  long skipped_pairs_ = 0;

  friend RewriteSystem complete(QuiverPtr, Field, const std::vector<AlgebraElement>&, int);
};

/// Runs overlap completion on the generators plus the structural rules,
/// resolving all ambiguities whose overlap word fits under the bound.
/// S-words beyond the bound are counted and leave the system flagged
/// incomplete (not an error).
RewriteSystem complete(QuiverPtr q, Field f, const std::vector<AlgebraElement>& gens, int bound);

struct QuotientBasis {
  enum class Verdict { Finite, InconclusiveAtBound };
  Verdict verdict = Verdict::InconclusiveAtBound;
  std::vector<Word> words;  // all irreducible words of length < bound
};

/// Irreducible-word enumeration. Requires a system completed below its
/// bound; the finite verdict additionally needs the staircase to die out
/// at least max_rule_len below the bound.
QuotientBasis quotient_basis(const RewriteSystem& rs);

}  // namespace palg
