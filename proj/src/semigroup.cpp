#include "semigaps/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace semigaps {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Enumeration-side scale limits. The closed-form paths have none; these
// only bound the oracle machinery.
constexpr std::uint64_t kMaxAperyModulus = 5'000'000;
constexpr std::uint64_t kMaxSieveBound = 20'000'000;
constexpr std::uint64_t kMaxNumeratorDegree = 20'000'000;
constexpr std::uint64_t kMaxMaterializedGaps = 50'000'000;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// least nonnegative u with u*a == x (mod b); gcd(a,b) must be 1, b >= 1
std::uint64_t solve_congruence(std::uint64_t a, std::uint64_t x, std::uint64_t b) {
  if (b == 1) return 0;
  // extended gcd for the inverse of a mod b; 128-bit signed so the full
  // uint64 range stays safe
  __int128 r0 = b, r1 = a % b;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  __int128 inv = t0 % static_cast<__int128>(b);
  if (inv < 0) inv += static_cast<__int128>(b);
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(static_cast<std::uint64_t>(inv)) * (x % b);
  return static_cast<std::uint64_t>(prod % b);
}

}  // namespace

bool pair_member(std::uint64_t x, std::uint64_t a, std::uint64_t b) {
  if (x == 0) return true;
  if (a == 0 || b == 0) {
    const std::uint64_t d = a | b;
    return d != 0 && x % d == 0;
  }
  const std::uint64_t g = gcd_u64(a, b);
  if (x % g != 0) return false;
  const std::uint64_t ar = a / g, br = b / g, xr = x / g;
  const std::uint64_t u0 = solve_congruence(ar, xr, br);
  const unsigned __int128 used = static_cast<unsigned __int128>(u0) * ar;
  return used <= xr;
}

GeneratorTuple validate(const std::vector<std::uint64_t>& raw) {
  if (raw.size() != 2 && raw.size() != 3) {
    throw invalid_input("expected 2 or 3 generators, got " + std::to_string(raw.size()));
  }
  std::vector<std::uint64_t> g(raw);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (std::uint64_t d : g) {
    if (d <= 1) throw invalid_input("generators must be > 1, got " + std::to_string(d));
  }
  std::uint64_t acc = 0;
  for (std::uint64_t d : g) acc = gcd_u64(acc, d);
  if (acc != 1) {
    throw invalid_input("generators must be coprime overall, gcd is " + std::to_string(acc));
  }
  if (g.size() != 2 && g.size() != 3) {
    throw invalid_input("after deduplication only " + std::to_string(g.size()) +
                        " distinct generators remain");
  }

  GeneratorTuple t;
  t.gens = std::move(g);
  t.minimal = true;
  if (t.count() == 2) {
    // coprime d1 < d2 with d1 >= 2: neither divides the other
    t.minimal = (t.gens[1] % t.gens[0] != 0);
  } else {
    for (std::size_t i = 0; i < 3 && t.minimal; ++i) {
      const std::uint64_t a = t.gens[(i + 1) % 3], b = t.gens[(i + 2) % 3];
      if (pair_member(t.gens[i], a, b)) t.minimal = false;
    }
  }
  return t;
}

AperyProfile apery_profile(const GeneratorTuple& g) {
  const std::uint64_t mod = g.d(0);
  if (mod > kMaxAperyModulus) {
    throw invalid_input("enumeration oracle supports d1 <= " +
                        std::to_string(kMaxAperyModulus));
  }
  const std::uint64_t dmax = g.gens.back();
  if (dmax > kInf / (2 * mod)) {
    throw invalid_input("generators too large for the enumeration oracle");
  }

  AperyProfile p;
  p.modulus = mod;
  p.minima.assign(mod, kInf);
  p.minima[0] = 0;

  using Node = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  heap.emplace(0, 0);
  std::vector<std::uint64_t> steps(g.gens.begin() + 1, g.gens.end());
  while (!heap.empty()) {
    const auto [val, r] = heap.top();
    heap.pop();
    if (val != p.minima[r]) continue;
    for (std::uint64_t s : steps) {
      const std::uint64_t nr = (r + s % mod) % mod;
      const std::uint64_t nv = val + s;
      if (nv < p.minima[nr]) {
        p.minima[nr] = nv;
        heap.emplace(nv, nr);
      }
    }
  }
  // gcd(all generators) == 1 makes every residue reachable
  for (std::uint64_t w : p.minima) {
    if (w == kInf) throw computation_error("apery: unreachable residue class");
  }
  return p;
}

Int AperyProfile::genus() const {
  Int total = 0;
  for (std::uint64_t r = 1; r < modulus; ++r) {
    total += Int((minima[r] - r) / modulus);
  }
  return total;
}

bool AperyProfile::has_gaps() const {
  for (std::uint64_t r = 1; r < modulus; ++r) {
    if (minima[r] > r) return true;
  }
  return false;
}

std::uint64_t AperyProfile::frobenius() const {
  const std::uint64_t top = *std::max_element(minima.begin(), minima.end());
  return top - modulus;
}

GapSet gap_set(const GeneratorTuple& g) {
  const AperyProfile p = apery_profile(g);
  const Int n_gaps = p.genus();
  if (n_gaps > Int(kMaxMaterializedGaps)) {
    throw invalid_input("gap set too large to materialize (genus " +
                        to_string(n_gaps) + "); use the streamed power-sum oracle");
  }
  GapSet out;
  out.gaps.reserve(static_cast<std::size_t>(n_gaps.get_ui()));
  for (std::uint64_t r = 1; r < p.modulus; ++r) {
    for (std::uint64_t x = r; x < p.minima[r]; x += p.modulus) {
      out.gaps.push_back(x);
    }
  }
  std::sort(out.gaps.begin(), out.gaps.end());
  return out;
}

std::uint64_t GapSet::frobenius() const {
  if (gaps.empty()) throw computation_error("frobenius of an empty gap set");
  return gaps.back();
}

std::vector<bool> representability_table(const GeneratorTuple& g, std::uint64_t bound) {
  if (bound > kMaxSieveBound) {
    throw invalid_input("representability sieve bound too large");
  }
  std::vector<bool> rep(bound + 1, false);
  rep[0] = true;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t d : g.gens) {
      if (x >= d && rep[x - d]) {
        rep[x] = true;
        break;
      }
    }
  }
  return rep;
}

GapSet gap_set_sieve(const GeneratorTuple& g) {
  const std::uint64_t bound = g.d(0) * g.gens.back();
  const std::vector<bool> rep = representability_table(g, bound);
  GapSet out;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (!rep[x]) out.gaps.push_back(x);
  }
  return out;
}

Int oracle_power_sum(const AperyProfile& p, unsigned n) {
  Int total = 0;
  Int term;
  for (std::uint64_t r = 1; r < p.modulus; ++r) {
    for (std::uint64_t x = r; x < p.minima[r]; x += p.modulus) {
      if (n == 0) {
        total += 1;
      } else {
        mpz_ui_pow_ui(term.get_mpz_t(), x, n);
        total += term;
      }
    }
  }
  return total;
}

Int oracle_power_sum(const GeneratorTuple& g, unsigned n) {
  return oracle_power_sum(apery_profile(g), n);
}

namespace {

// in-place multiply by (1 - z^d), extending the coefficient vector
void apply_cyclotomic_factor(std::vector<std::int64_t>& c, std::uint64_t d) {
  c.resize(c.size() + d, 0);
  for (std::size_t k = c.size(); k-- > d;) {
    c[k] -= c[k - d];
  }
}

}  // namespace

NumeratorPolynomial numerator_from_oracle(const GeneratorTuple& g) {
  const AperyProfile p = apery_profile(g);
  std::uint64_t sum_d = 0;
  for (std::uint64_t d : g.gens) sum_d += d;
  const std::uint64_t frob = p.has_gaps() ? p.frobenius() : 0;
  if (frob + sum_d > kMaxNumeratorDegree) {
    throw invalid_input("numerator extraction bound exceeded");
  }

  // geometric block: (1 - z^{d_1})/(1 - z) = 1 + z + ... + z^{d_1 - 1}
  std::vector<std::int64_t> head(g.d(0), 1);
  for (std::size_t j = 1; j < g.count(); ++j) apply_cyclotomic_factor(head, g.d(j));

  // gap polynomial Phi times every factor
  std::vector<std::int64_t> tail(frob + 1, 0);
  for (std::uint64_t r = 1; r < p.modulus; ++r) {
    for (std::uint64_t x = r; x < p.minima[r]; x += p.modulus) {
      tail[x] = 1;
    }
  }
  for (std::size_t j = 0; j < g.count(); ++j) apply_cyclotomic_factor(tail, g.d(j));

  NumeratorPolynomial q;
  const std::size_t size = std::max(head.size(), tail.size());
  for (std::size_t k = 0; k < size; ++k) {
    const std::int64_t a = k < head.size() ? head[k] : 0;
    const std::int64_t b = k < tail.size() ? tail[k] : 0;
    q.add_term(k, a - b);
  }
  return q;
}

}  // namespace semigaps
