#include "semigaps/bernoulli_higher.hpp"

#include <cstddef>

namespace semigaps {

namespace {

void check_query(const HigherOrderQuery& q, unsigned min_order) {
  if (q.order < min_order || q.order > 3) {
    throw invalid_input("higher-order Bernoulli: order " + std::to_string(q.order) +
                        " outside supported range");
  }
  if (q.weights.size() != q.order) {
    throw invalid_input("higher-order Bernoulli: weight count does not match order");
  }
  for (const Int& d : q.weights) {
    if (d < 1) throw invalid_input("higher-order Bernoulli: weights must be positive");
  }
}

std::vector<Int> power_table(const Int& base, unsigned max_exp) {
  std::vector<Int> p(max_exp + 1);
  p[0] = 1;
  for (unsigned e = 1; e <= max_exp; ++e) p[e] = p[e - 1] * base;
  return p;
}

// B_n^(1)(x|d) = d^n B_n(x/d) = sum_k C(n,k) B_k d^k x^{n-k}
Rat base_case(unsigned n, const Int& x, const Int& d, BernoulliCache& cache) {
  const std::vector<Rat> bern = cache.prefix(n);
  const std::vector<Int> dp = power_table(d, n);
  const std::vector<Int> xp = power_table(x, n);
  Rat acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    if (bern[k] == 0) continue;
    acc += bern[k] * Rat(binomial(n, k) * dp[k] * xp[n - k]);
  }
  return acc;
}

}  // namespace

Rat eval_recursive(const HigherOrderQuery& q, BernoulliCache& cache) {
  check_query(q, 1);
  if (q.order == 1) return base_case(q.n, q.x, q.weights[0], cache);

  const Int& dm = q.weights.back();
  const std::vector<Rat> bern = cache.prefix(q.n);
  const std::vector<Int> dmp = power_table(dm, q.n);

  HigherOrderQuery sub;
  sub.order = q.order - 1;
  sub.x = q.x;
  sub.weights.assign(q.weights.begin(), q.weights.end() - 1);

  Rat acc(0);
  for (unsigned p = 0; p <= q.n; ++p) {
    if (bern[p] == 0) continue;
    sub.n = q.n - p;
    acc += bern[p] * Rat(binomial(q.n, p) * dmp[p]) * eval_recursive(sub, cache);
  }
  return acc;
}

Rat eval_expansion(const HigherOrderQuery& q, BernoulliCache& cache) {
  check_query(q, 2);
  const unsigned n = q.n;
  const std::vector<Rat> bern = cache.prefix(n);
  const bool at_zero = (q.x == 0);
  const std::vector<Int> xp = power_table(q.x, n);

  if (q.order == 2) {
    const std::vector<Int> d1p = power_table(q.weights[0], n);
    const std::vector<Int> d2p = power_table(q.weights[1], n);
    // sum_{j,k} C(n,j) C(j,k) d1^{j-k} d2^{n-j} B_{j-k} B_{n-j} x^k
    Rat acc(0);
    for (unsigned j = 0; j <= n; ++j) {
      if (bern[n - j] == 0) continue;
      const Int cj = binomial(n, j);
      for (unsigned k = 0; k <= j; ++k) {
        if (at_zero && k > 0) break;
        if (bern[j - k] == 0) continue;
        acc += bern[j - k] * bern[n - j] *
               Rat(cj * binomial(j, k) * d1p[j - k] * d2p[n - j] * xp[k]);
      }
    }
    return acc;
  }

  const std::vector<Int> d1p = power_table(q.weights[0], n);
  const std::vector<Int> d2p = power_table(q.weights[1], n);
  const std::vector<Int> d3p = power_table(q.weights[2], n);
  // sum_{j,k,l} C(n,j) C(j,k) C(k,l) d1^{k-l} d2^{j-k} d3^{n-j}
  //             B_{k-l} B_{j-k} B_{n-j} x^l
  // For x = 0 only l = 0 survives and this is the double-sum shortcut.
  Rat acc(0);
  for (unsigned j = 0; j <= n; ++j) {
    if (bern[n - j] == 0) continue;
    const Int cj = binomial(n, j);
    for (unsigned k = 0; k <= j; ++k) {
      if (bern[j - k] == 0) continue;
      const Int cjk = cj * binomial(j, k);
      const Rat bjk = bern[j - k] * bern[n - j];
      for (unsigned l = 0; l <= k; ++l) {
        if (at_zero && l > 0) break;
        if (bern[k - l] == 0) continue;
        acc += bjk * bern[k - l] *
               Rat(cjk * binomial(k, l) * d1p[k - l] * d2p[j - k] * d3p[n - j] * xp[l]);
      }
    }
  }
  return acc;
}

Rat eval_checked(const HigherOrderQuery& q, BernoulliCache& cache, bool check_paths) {
  const Rat value = (q.order == 1) ? eval_recursive(q, cache) : eval_expansion(q, cache);
  if (check_paths && q.order > 1) {
    const Rat other = eval_recursive(q, cache);
    if (other != value) {
      throw computation_error(
          "higher-order Bernoulli: expansion and recursion paths disagree at n=" +
          std::to_string(q.n) + " order=" + std::to_string(q.order) + " x=" +
          to_string(q.x) + " (" + to_string(value) + " vs " + to_string(other) + ")");
    }
  }
  return value;
}

}  // namespace semigaps
