#ifndef SEMIGAPS_BERNOULLI_HPP
#define SEMIGAPS_BERNOULLI_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "semigaps/numbers.hpp"

namespace semigaps {

// Bernoulli numbers under the B_1 = -1/2 convention, i.e. the expansion
// of t/(e^t - 1). Entries are computed once via the recurrence
//   sum_{j=0}^{k} C(k+1,j) B_j = 0   (k >= 1)
// and never change afterwards; concurrent callers see identical values.
class BernoulliCache {
 public:
  BernoulliCache() = default;

  // B_k, extending the table as needed.
  Rat at(std::size_t k);

  // Copy of B_0..B_n for hot loops that index repeatedly.
  std::vector<Rat> prefix(std::size_t n);

  std::size_t computed() const;

 private:
  void grow_to(std::size_t k);  // caller holds mu_

  mutable std::mutex mu_;
  std::vector<Rat> values_;
};

Rat bernoulli_number(std::size_t k, BernoulliCache& cache);

}  // namespace semigaps

#endif  // SEMIGAPS_BERNOULLI_HPP
