#ifndef SEMIGAPS_BERNOULLI_HIGHER_HPP
#define SEMIGAPS_BERNOULLI_HIGHER_HPP

#include <vector>

#include "semigaps/bernoulli.hpp"
#include "semigaps/numbers.hpp"

namespace semigaps {

// A request for B_n^(m)(x | d_1..d_m), the Bernoulli polynomial of
// higher order: the coefficient family of e^{xt} / prod_i (e^{d_i t}-1).
// Evaluation points are integers; every argument the power-sum formulas
// substitute is one.
struct HigherOrderQuery {
  unsigned n = 0;             // polynomial index
  unsigned order = 1;         // m, in {1,2,3}
  Int x = 0;                  // evaluation point
  std::vector<Int> weights;   // d_1..d_m, all >= 1
};

// Evaluates via the order-lowering recursion
//   B_n^(m)(x|d^m) = sum_p C(n,p) d_m^p B_p B_{n-p}^(m-1)(x|d^{m-1}),
// with base case B_n^(1)(x|d) = d^n B_n(x/d) expanded in exact rationals.
Rat eval_recursive(const HigherOrderQuery& q, BernoulliCache& cache);

// Evaluates via the explicit multiple sum over Bernoulli numbers
// (order 2: double sum, order 3: triple sum; x = 0 collapses one index).
// Rejects order 1 -- use the base case through eval_recursive.
Rat eval_expansion(const HigherOrderQuery& q, BernoulliCache& cache);

// Expansion path; when check_paths is set, also runs the recursion and
// fails loudly on any mismatch between the two routes.
Rat eval_checked(const HigherOrderQuery& q, BernoulliCache& cache, bool check_paths);

}  // namespace semigaps

#endif  // SEMIGAPS_BERNOULLI_HIGHER_HPP
