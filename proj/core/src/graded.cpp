#include "looplab/graded.hpp"

#include <algorithm>
#include <sstream>

namespace looplab {

GradedSpace::GradedSpace(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    auto [it, fresh] = index_.emplace(gens_[i].name, i);
    if (!fresh) throw std::invalid_argument("duplicate generator name: " + gens_[i].name);
    if (gens_[i].name.empty()) throw std::invalid_argument("empty generator name");
  }
}

int GradedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown generator: " + name);
  return it->second;
}

std::string Word::str(const GradedSpace& sp) const {
  std::ostringstream os;
  const char* sep = kind == WordKind::Symmetric ? "." : "^";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << sep;
    os << sp.name(letters[i]);
  }
  if (letters.empty()) os << "1";
  if (shift != 0) os << "[" << shift << "]";
  return os.str();
}

int koszul_sign(const std::vector<int>& perm, const std::vector<long>& degrees) {
  if (perm.size() != degrees.size())
    throw std::invalid_argument("koszul_sign: permutation/degree length mismatch");
  const int k = static_cast<int>(perm.size());
  std::vector<bool> seen(k, false);
  for (int v : perm) {
    if (v < 0 || v >= k || seen[v]) throw std::invalid_argument("koszul_sign: not a permutation");
    seen[v] = true;
  }
  long exponent = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (perm[i] > perm[j]) exponent += (degrees[i] & 1) & (degrees[j] & 1);
  return (exponent & 1) ? -1 : +1;
}

int reorder_sign(const std::vector<long>& degrees, const std::vector<int>& arrangement,
                 WordKind kind) {
  // Inversions of the arrangement, weighted by the degrees of the letters
  // actually being swapped. This is the sign of performing the rearrangement
  // by adjacent transpositions.
  const int k = static_cast<int>(arrangement.size());
  long exponent = 0;
  long flips = 0;
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q)
      if (arrangement[p] > arrangement[q]) {
        ++flips;
        exponent += (degrees[arrangement[p]] & 1) & (degrees[arrangement[q]] & 1);
      }
  if (kind == WordKind::Exterior) exponent += flips;
  return (exponent & 1) ? -1 : +1;
}

NormalForm normalize_word(const GradedSpace& sp, WordKind kind, long shift,
                          std::vector<int> letters) {
  for (int g : letters)
    if (g < 0 || g >= sp.size()) throw std::out_of_range("normalize_word: unknown generator index");

  NormalForm out;
  // Insertion sort, counting adjacent swaps of actual letters. Stable, so
  // equal letters never swap and the sign is well defined.
  int sign = +1;
  for (size_t i = 1; i < letters.size(); ++i) {
    for (size_t j = i; j > 0 && letters[j - 1] > letters[j]; --j) {
      long da = sp.degree(letters[j - 1]) - shift;
      long db = sp.degree(letters[j]) - shift;
      if ((da & 1) && (db & 1)) sign = -sign;
      if (kind == WordKind::Exterior) sign = -sign;
      std::swap(letters[j - 1], letters[j]);
    }
  }
  for (size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i] != letters[i + 1]) continue;
    long d = sp.degree(letters[i]) - shift;
    bool odd = (d & 1) != 0;
    if ((kind == WordKind::Symmetric && odd) || (kind == WordKind::Exterior && !odd)) {
      out.zero = true;
      return out;
    }
  }
  out.sign = sign;
  out.word = Word{kind, shift, std::move(letters)};
  return out;
}

namespace {
int sigma_sign(const GradedSpace& sp, const std::vector<int>& letters, long base_shift) {
  // (-1)^{sum_i (k-i) d_i}, i = 1..k, degrees in C[base_shift].
  const int k = static_cast<int>(letters.size());
  long exponent = 0;
  for (int i = 0; i < k; ++i) {
    long d = sp.degree(letters[i]) - base_shift;
    exponent += static_cast<long>(k - (i + 1)) * (d & 1);
  }
  return (exponent & 1) ? -1 : +1;
}
}  // namespace

SignedWord sigma_shift(const GradedSpace& sp, const Word& exterior_word) {
  if (exterior_word.kind != WordKind::Exterior)
    throw std::invalid_argument("sigma_shift expects an exterior word");
  int sign = sigma_sign(sp, exterior_word.letters, exterior_word.shift);
  auto nf = normalize_word(sp, WordKind::Symmetric, exterior_word.shift - 1, exterior_word.letters);
  if (nf.zero)
    throw std::logic_error("sigma_shift: image word vanishes; input was not a basis word");
  return SignedWord{sign * nf.sign, nf.word};
}

SignedWord sigma_unshift(const GradedSpace& sp, const Word& symmetric_word) {
  if (symmetric_word.kind != WordKind::Symmetric)
    throw std::invalid_argument("sigma_unshift expects a symmetric word");
  // Degrees in the sign are taken in the exterior-side space C[shift+1].
  int sign = sigma_sign(sp, symmetric_word.letters, symmetric_word.shift + 1);
  auto nf = normalize_word(sp, WordKind::Exterior, symmetric_word.shift + 1, symmetric_word.letters);
  if (nf.zero)
    throw std::logic_error("sigma_unshift: image word vanishes; input was not a basis word");
  return SignedWord{sign * nf.sign, nf.word};
}

Element Element::single(Word w, Rational c) {
  Element e;
  e.add_term(w, c);
  return e;
}

void Element::add_term(const Word& canonical, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(canonical);
  if (it == terms_.end()) {
    terms_.emplace(canonical, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_word(const GradedSpace& sp, WordKind kind, long shift,
                       std::vector<int> letters, const Rational& c) {
  auto nf = normalize_word(sp, kind, shift, std::move(letters));
  if (nf.zero) return;
  add_term(nf.word, Rational(nf.sign) * c);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, Rational(-c));
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string Element::str(const GradedSpace& sp) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << w.str(sp);
  }
  return os.str();
}

DegreeInfo element_degree(const GradedSpace& sp, const Element& e) {
  if (e.is_zero()) return DegreeInfo{DegreeKind::Any, 0};
  std::optional<long> d;
  for (const auto& [w, c] : e.terms()) {
    long wd = w.degree(sp);
    if (!d) {
      d = wd;
    } else if (*d != wd) {
      return DegreeInfo{DegreeKind::Mixed, 0};
    }
  }
  return DegreeInfo{DegreeKind::Homogeneous, *d};
}

Element word_product(const GradedSpace& sp, const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.kind != wb.kind || wa.shift != wb.shift)
        throw std::invalid_argument("word_product: incompatible words");
      std::vector<int> letters = wa.letters;
      letters.insert(letters.end(), wb.letters.begin(), wb.letters.end());
      Rational c = ca * cb;
      out.add_word(sp, wa.kind, wa.shift, std::move(letters), c);
    }
  }
  return out;
}

void TensorElement::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, Rational(-c));
  return *this;
}

std::string TensorElement::str(const GradedSpace& sp) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << k.first.str(sp) << "(x)" << k.second.str(sp);
  }
  return os.str();
}

std::vector<Word> enumerate_words(const GradedSpace& sp, long shift, int max_len, WordKind kind) {
  std::vector<Word> out;
  std::vector<int> stack;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (!stack.empty()) {
      auto nf = normalize_word(sp, kind, shift, stack);
      if (!nf.zero) out.push_back(nf.word);
    }
    if (remaining == 0) return;
    for (int g = start; g < sp.size(); ++g) {
      stack.push_back(g);
      self(self, g, remaining - 1);
      stack.pop_back();
    }
  };
  rec(rec, 0, max_len);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a < b;
  });
  return out;
}

}  // namespace looplab
