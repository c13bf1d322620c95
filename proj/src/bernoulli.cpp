#include "semigaps/bernoulli.hpp"

namespace semigaps {

Rat BernoulliCache::at(std::size_t k) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(k);
  return values_[k];
}

std::vector<Rat> BernoulliCache::prefix(std::size_t n) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(n);
  return std::vector<Rat>(values_.begin(), values_.begin() + n + 1);
}

std::size_t BernoulliCache::computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return values_.size();
}

void BernoulliCache::grow_to(std::size_t k) {
  if (values_.empty()) values_.push_back(Rat(1));
  for (std::size_t m = values_.size(); m <= k; ++m) {
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j
    Rat acc(0);
    for (std::size_t j = 0; j < m; ++j) {
      if (values_[j] == 0) continue;
      acc += Rat(binomial(m + 1, static_cast<long>(j))) * values_[j];
    }
    acc /= Rat(static_cast<unsigned long>(m) + 1);
    values_.push_back(-acc);
  }
}

Rat bernoulli_number(std::size_t k, BernoulliCache& cache) { return cache.at(k); }

}  // namespace semigaps
