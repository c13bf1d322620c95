#include "semigaps/relations.hpp"

#include <limits>

namespace semigaps {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// least nonnegative x with x*a == t (mod m), gcd(a,m) == 1; 128-bit
// intermediates keep the full uint64 range safe
std::uint64_t inverse_solve(std::uint64_t a, std::uint64_t t, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 r0 = m, r1 = a % m;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  __int128 inv = t0 % static_cast<__int128>(m);
  if (inv < 0) inv += static_cast<__int128>(m);
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(static_cast<std::uint64_t>(inv)) * (t % m);
  return static_cast<std::uint64_t>(prod % m);
}

struct RowWitness {
  std::uint64_t v = 0;   // a_ii
  std::uint64_t x = 0;   // coefficient of the lower-index partner
  std::uint64_t y = 0;   // coefficient of the higher-index partner
};

// Minimal v >= 2 with v*di = x*dj + y*dk, smallest-x witness.
RowWitness minimal_row(std::uint64_t di, std::uint64_t dj, std::uint64_t dk) {
  const std::uint64_t g = gcd_u64(dj, dk);
  const std::uint64_t jr = dj / g, kr = dk / g;
  const std::uint64_t bound = std::min(dj, dk);  // v = dj always works via x = di
  for (std::uint64_t v = 2; v <= bound; ++v) {
    if (v > kU64Max / di) {
      throw invalid_input("relations: generators too large for the witness search");
    }
    const std::uint64_t t = v * di;
    if (t % g != 0) continue;
    const std::uint64_t tr = t / g;
    const std::uint64_t x = inverse_solve(jr, tr % kr, kr);
    const unsigned __int128 used = static_cast<unsigned __int128>(x) * jr;
    if (used <= tr) {
      RowWitness w;
      w.v = v;
      w.x = x;
      w.y = static_cast<std::uint64_t>((tr - used) / kr);
      return w;
    }
  }
  throw computation_error("relations: no witness found within the search bound");
}

}  // namespace

Int RelationMatrix::diag_product() const {
  return Int(a[0][0]) * Int(a[1][1]) * Int(a[2][2]);
}

Int RelationMatrix::weighted_trace() const {
  return Int(weighted_diag[0]) + Int(weighted_diag[1]) + Int(weighted_diag[2]);
}

RelationMatrix minimal_relations(const GeneratorTuple& g) {
  if (g.count() != 3) {
    throw invalid_input("minimal relations are defined for three generators");
  }
  if (!g.minimal) {
    throw invalid_input(
        "minimal relations need a minimal triple; reduce representable generators first");
  }
  RelationMatrix rel;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i == 0) ? 1 : 0;
    const std::size_t k = (i == 2) ? 1 : 2;
    const RowWitness w = minimal_row(g.d(i), g.d(j), g.d(k));
    rel.a[i][i] = w.v;
    rel.a[i][j] = w.x;
    rel.a[i][k] = w.y;
    rel.weighted_diag[i] = w.v * g.d(i);
  }
  return rel;
}

SemigroupClass classify(const GeneratorTuple& g, const RelationMatrix& rel) {
  if (g.count() != 3) {
    throw invalid_input("classification is defined for three generators");
  }
  SemigroupClass cls;
  cls.trace = rel.weighted_trace();

  // Column c can be dropped from row i's relation iff a_ii d_i is a
  // multiple of the remaining partner generator.
  auto admits_zero = [&](std::size_t row, std::size_t col) {
    const std::size_t other = 3 - row - col;
    return rel.weighted_diag[row] % g.d(other) == 0;
  };
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t i1 = (c == 0) ? 1 : 0;
    const std::size_t i2 = (c == 2) ? 1 : 2;
    if (admits_zero(i1, c) && admits_zero(i2, c)) {
      if (rel.weighted_diag[i1] != rel.weighted_diag[i2]) {
        throw computation_error(
            "classify: symmetric column without matching diagonal products");
      }
      cls.kind = SemigroupKind::Symmetric;
      cls.vanishing_column = c;
      cls.normal_order = {i1, i2, c};
      cls.pair_exponent = rel.weighted_diag[i2];
      cls.tail_exponent = rel.weighted_diag[c];
      cls.reduced_trace = Int(cls.pair_exponent) + Int(cls.tail_exponent);
      return cls;
    }
  }

  cls.kind = SemigroupKind::NonSymmetric;
  const Int wd0(rel.weighted_diag[0]), wd1(rel.weighted_diag[1]), wd2(rel.weighted_diag[2]);
  const Int pi_d = Int(g.d(0)) * Int(g.d(1)) * Int(g.d(2));
  const Int disc =
      cls.trace * cls.trace - 4 * (wd0 * wd1 + wd0 * wd2 + wd1 * wd2) + 4 * pi_d;
  if (sgn(disc) <= 0) {
    throw computation_error("classify: J^2 = " + to_string(disc) +
                            " is not positive (relations bug)");
  }
  if (!mpz_perfect_square_p(disc.get_mpz_t())) {
    throw computation_error("classify: J^2 = " + to_string(disc) +
                            " is not a perfect square (relations bug)");
  }
  Int j;
  mpz_sqrt(j.get_mpz_t(), disc.get_mpz_t());
  if ((cls.trace - j) % 2 != 0) {
    throw computation_error("classify: <a,d> and J have different parity (relations bug)");
  }
  cls.j_invariant = j;
  cls.hole_low = to_u64((cls.trace - j) / 2, "classify: numerator exponent");
  cls.hole_high = to_u64((cls.trace + j) / 2, "classify: numerator exponent");
  return cls;
}

NumeratorPolynomial numerator_closed_form(const GeneratorTuple& g,
                                          const SemigroupClass& cls,
                                          const RelationMatrix& rel) {
  if (g.count() != 3) {
    throw invalid_input("closed-form numerator is defined for three generators");
  }
  NumeratorPolynomial q;
  if (cls.symmetric()) {
    q.add_term(0, 1);
    q.add_term(cls.pair_exponent, -1);
    q.add_term(cls.tail_exponent, -1);
    q.add_term(cls.pair_exponent + cls.tail_exponent, 1);
  } else {
    q.add_term(0, 1);
    for (std::size_t i = 0; i < 3; ++i) q.add_term(rel.weighted_diag[i], -1);
    q.add_term(cls.hole_low, 1);
    q.add_term(cls.hole_high, 1);
  }
  return q;
}

NumeratorPolynomial numerator_m2(const GeneratorTuple& g) {
  if (g.count() != 2) {
    throw invalid_input("numerator_m2 is defined for two generators");
  }
  if (g.d(1) > kU64Max / g.d(0)) {
    throw invalid_input("numerator_m2: product d1*d2 overflows");
  }
  NumeratorPolynomial q;
  q.add_term(0, 1);
  q.add_term(g.d(0) * g.d(1), -1);
  return q;
}

}  // namespace semigaps
