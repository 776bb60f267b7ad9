#pragma once

#include "musat/formula.hpp"

namespace musat {

/**
 * Disjunctive splitting: renames f2 apart from f1, then adds a fresh variable
 * positively to the given target clauses of f1 and negatively to those of f2.
 * Targets must be below width k. Unsatisfiability of both operands carries over.
 */
CnfFormula split_compose(const CnfFormula& f1, const CnfFormula& f2, int p, int q,
                         const std::vector<Clause>& targets1,
                         const std::vector<Clause>& targets2, int k);

/**
 * Repeatedly identifies pairs of degree-2 variables (deleting tautologies that
 * arise) until at most one degree-2 variable remains or no width- and
 * class-preserving identification exists. Keeps unsatisfiable inputs
 * unsatisfiable.
 */
CnfFormula merge_degree2_vars(const CnfFormula& f, const ClassSpec& cls);

/**
 * Replaces each variable pairs[i].first by pairs[i].second. The merged degree
 * must stay within cap; occurrences of the two variables must not overlap in
 * a clause in a way that shrinks it below its width.
 */
CnfFormula identify_variables(const CnfFormula& f,
                              const std::vector<std::pair<int, int>>& pairs, int cap);

/**
 * The reduction from k-SAT to (k,p,q)-SAT: rewrites over-occurring variables
 * through an implication cycle of fresh variables and widens the resulting
 * 2-clauses to width k with variable-disjoint copies of the gadget minus one
 * clause. The gadget must be a minimally unsatisfiable (k,p,q)-formula; the
 * caller is expected to have checked that (see sat-engine).
 */
CnfFormula np_hardness_reduce(const CnfFormula& f, int k, int p, int q,
                              const CnfFormula& gadget);

} // namespace musat
