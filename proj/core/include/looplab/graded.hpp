#pragma once

// Graded linear algebra over Q: basis words in symmetric/exterior powers,
// Koszul signs, shift isomorphisms. Everything here is immutable after
// construction and safe to share across threads.

#include "looplab/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace looplab {

struct Generator {
  std::string name;
  long degree = 0;
};

// Finite ordered basis with integer degrees. The construction order is the
// canonical order used by all word normalization.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_.at(i); }
  long degree(int i) const { return gens_.at(i).degree; }
  const std::string& name(int i) const { return gens_.at(i).name; }
  int index_of(const std::string& name) const;  // throws on unknown name
  bool has(const std::string& name) const { return index_.count(name) != 0; }
  const std::vector<Generator>& generators() const { return gens_; }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

enum class WordKind { Symmetric, Exterior };

// A decomposable word c_1 ... c_k (symmetric) or c_1 ^ ... ^ c_k (exterior)
// with letters in C[shift].  Canonical form keeps letters ascending in the
// generator order; degree of letter i is deg(c_i) - shift.
struct Word {
  WordKind kind = WordKind::Symmetric;
  long shift = 0;
  std::vector<int> letters;

  auto operator<=>(const Word&) const = default;

  int size() const { return static_cast<int>(letters.size()); }
  long letter_degree(const GradedSpace& sp, int pos) const {
    return sp.degree(letters.at(pos)) - shift;
  }
  long degree(const GradedSpace& sp) const {
    long d = 0;
    for (int g : letters) d += sp.degree(g) - shift;
    return d;
  }
  std::string str(const GradedSpace& sp) const;
};

// The sign eps(rho; c_1,...,c_k) = (-1)^{sum_{i<j, rho(i)>rho(j)} |c_i||c_j|}.
// perm holds the images rho(0..k-1), 0-based.
int koszul_sign(const std::vector<int>& perm, const std::vector<long>& degrees);

// Koszul sign of rearranging a word into the order given by `arrangement`
// (a list of original positions); output position p holds the letter that sat
// at arrangement[p].  For Exterior the permutation sign is folded in.
int reorder_sign(const std::vector<long>& degrees, const std::vector<int>& arrangement,
                 WordKind kind);

struct NormalForm {
  bool zero = false;
  int sign = +1;
  Word word;
};

// Stable-sorts letters into canonical order, accumulating the Koszul sign
// (and permutation sign for exterior words).  Flags the word as zero when a
// repeated odd-degree letter occurs in a symmetric word, or a repeated
// even-degree letter occurs in an exterior word (degrees taken in C[shift]).
NormalForm normalize_word(const GradedSpace& sp, WordKind kind, long shift,
                          std::vector<int> letters);

struct SignedWord {
  int sign = +1;
  Word word;
};

// sigma_k : (Lambda^k C[s])[-k] -> S^k(C[s-1]), with sign
// (-1)^{sum_i (k-i) d_i} where d_i is the degree of letter i in C[s].
// sigma_unshift is the inverse; the composite is the identity.
SignedWord sigma_shift(const GradedSpace& sp, const Word& exterior_word);
SignedWord sigma_unshift(const GradedSpace& sp, const Word& symmetric_word);

// Finite Q-linear combination of canonical words. No zero coefficients are
// ever stored.
class Element {
 public:
  Element() = default;

  static Element single(Word w, Rational c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  // Adds c * letters after normalization; a no-op on zero-flagged words.
  void add_word(const GradedSpace& sp, WordKind kind, long shift, std::vector<int> letters,
                const Rational& c);
  void add_term(const Word& canonical, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  std::string str(const GradedSpace& sp) const;

 private:
  std::map<Word, Rational> terms_;
};

enum class DegreeKind { Any, Homogeneous, Mixed };

struct DegreeInfo {
  DegreeKind kind = DegreeKind::Any;
  long degree = 0;  // meaningful only when Homogeneous
};

DegreeInfo element_degree(const GradedSpace& sp, const Element& e);

// Product in S(C[shift]) resp. Lambda(C[shift]): concatenate and normalize.
Element word_product(const GradedSpace& sp, const Element& a, const Element& b);

// Formal sums of w (x) w' used by the coalgebra checks.
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  void add_term(const Key& k, const Rational& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

  std::string str(const GradedSpace& sp) const;

 private:
  std::map<Key, Rational> terms_;
};

// All canonical nonzero symmetric words over C[shift] of length 1..max_len.
std::vector<Word> enumerate_words(const GradedSpace& sp, long shift, int max_len,
                                  WordKind kind = WordKind::Symmetric);

}  // namespace looplab
