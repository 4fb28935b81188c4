#pragma once

// L-infinity algebras through the bar construction: a degree-d structure on C
// is stored as its degree -1 operations l_k on the reduced symmetric
// coalgebra S(C[-d-1]).  The classical operations lambda_k on exterior powers
// of C[-d] are kept alongside, related by the shift isomorphism sigma_k; all
// relation checking treats "l-hat squared = 0" as the normative equation.

#include "looplab/graded.hpp"
#include "looplab/report.hpp"

#include <functional>
#include <map>

namespace looplab {

// Single arity-k multilinear operation, stored sparsely on canonical words.
struct MultilinearOp {
  int arity = 1;
  long degree = -1;
  std::map<Word, Element> table;  // canonical word -> element of 1-letter words

  bool is_zero() const { return table.empty(); }
};

// A finite family of homogeneous operations, one per arity; doubles as the
// linear part of a coderivation of the given degree.
struct OpFamily {
  long degree = -1;
  std::map<int, MultilinearOp> by_arity;

  const MultilinearOp* at(int arity) const {
    auto it = by_arity.find(arity);
    return it == by_arity.end() ? nullptr : &it->second;
  }
  int max_arity() const { return by_arity.empty() ? 0 : by_arity.rbegin()->first; }
};

class LInftyAlgebra {
 public:
  LInftyAlgebra() = default;
  // ops: the l_k tables over C[-d-1]; lambda tables are derived.
  LInftyAlgebra(GradedSpace space, long structure_degree, OpFamily ops,
                std::map<int, long> weights = {});

  const GradedSpace& space() const { return space_; }
  long structure_degree() const { return degree_; }
  long bar_shift() const { return -degree_ - 1; }    // l_k words live in C[bar_shift]
  long lambda_shift() const { return -degree_; }     // lambda_k words live in C[lambda_shift]
  const OpFamily& ops() const { return ops_; }
  const OpFamily& lambda_ops() const { return lambda_; }

  long weight(int gen) const {
    auto it = weights_.find(gen);
    return it == weights_.end() ? 0 : it->second;
  }
  const std::map<int, long>& weights() const { return weights_; }
  long word_level(const Word& w) const {
    long s = 0;
    for (int g : w.letters) s += weight(g);
    return s;
  }

  // l_k applied to a word/element in S(C[bar_shift]); normalizes first.
  Element apply(int arity, const Word& w) const;
  Element apply(int arity, const Element& e) const;
  // lambda_k applied to exterior words over C[lambda_shift].
  Element apply_lambda(int arity, const Word& w) const;
  Element apply_lambda(int arity, const Element& e) const;

 private:
  GradedSpace space_;
  long degree_ = 0;
  OpFamily ops_;
  OpFamily lambda_;
  std::map<int, long> weights_;
};

// ---- construction helpers ----

// Validates arity/degree homogeneity of each table entry.
void validate_op_family(const GradedSpace& sp, long bar_shift, const OpFamily& ops);

// Conjugation through sigma: from lambda_k tables (exterior words over
// C[-d]) to l_k tables (symmetric words over C[-d-1]) and back.
OpFamily ops_from_lambda(const GradedSpace& sp, long structure_degree, const OpFamily& lambda);
OpFamily lambda_from_ops(const GradedSpace& sp, long structure_degree, const OpFamily& ops);

LInftyAlgebra make_algebra_from_lambda(GradedSpace space, long structure_degree, OpFamily lambda,
                                       std::map<int, long> weights = {});

// ---- coalgebra structure ----

// Delta(c_1...c_r) as a sum of splittings; primitive words give zero.
TensorElement coproduct(const GradedSpace& sp, const Word& w);
TensorElement coproduct(const GradedSpace& sp, const Element& e);

// Hat-extension of a single operation to S(C[shift]) by Koszul-signed
// k-subset sums; zero on words shorter than the arity.
Element hat_extend(const GradedSpace& sp, const MultilinearOp& op, const Word& w);
Element hat_extend(const GradedSpace& sp, const MultilinearOp& op, const Element& e);

// Full coderivation sum over all arities in the family.
Element hat_apply(const GradedSpace& sp, const OpFamily& ops, const Element& e);
Element hat_apply(const GradedSpace& sp, const OpFamily& ops, const Word& w);

// Co-Leibniz: Delta l-hat = (l-hat (x) 1 + 1 (x) l-hat) Delta on all words
// up to max_len.
CheckReport check_coleibniz(const GradedSpace& sp, const MultilinearOp& op, long shift,
                            int max_len);

// ---- relation checking ----

struct LInftyCheck {
  bool pass = true;          // all residuals of l-hat(l-hat(w)) vanish
  bool routes_agree = true;  // linear part of the above == unfolded relations
  std::vector<Finding> findings;
};

// Evaluates (l-hat o l-hat)(w) on every canonical basis word w up to
// max_word_len, and cross-checks the linear part against the unfolded
// quadratic relations evaluated through the sigma-shift dictionary.
LInftyCheck check_linfty(const LInftyAlgebra& alg, int max_word_len);

// Linear part of (l-hat o l-hat) on one word, by the direct two-operation
// subset sum.  `via_lambda` routes every operation through sigma and the
// lambda tables instead of the l tables.
Element quadratic_residual(const LInftyAlgebra& alg, const Word& w, bool via_lambda);

// ---- coderivations ----

// [D1,D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, returned through its linear part
// on words up to max_arity.
OpFamily coderivation_commutator(const GradedSpace& sp, long shift, const OpFamily& d1,
                                 const OpFamily& d2, int max_arity);

// A coderivation is determined by its linear part; reconstruction is the
// hat-extension of the given per-arity components.
OpFamily reconstruct_from_linear_part(const GradedSpace& sp, long shift, long degree,
                                      std::map<int, MultilinearOp> parts);

// Linear part of an arbitrary map given word-by-word, restricted to S^k.
MultilinearOp linear_part(const GradedSpace& sp, long shift, long degree, int arity,
                          const std::function<Element(const Word&)>& map);

// ---- combinatorial helpers shared across modules ----

// Calls fn(subset, complement) for every size-k subset of {0..r-1}, both in
// ascending order.
void for_each_subset(int r, int k, const std::function<void(const std::vector<int>&,
                                                            const std::vector<int>&)>& fn);

// Calls fn(blocks) for every partition of {0..k-1} into nonempty blocks,
// blocks ordered by least element, each block ascending.
void for_each_partition(int k,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn);

}  // namespace looplab
