#ifndef SEMIGAPS_RELATIONS_HPP
#define SEMIGAPS_RELATIONS_HPP

#include <array>
#include <cstdint>

#include "semigaps/numbers.hpp"
#include "semigaps/polynomial.hpp"
#include "semigaps/semigroup.hpp"

namespace semigaps {

// Johnson's minimal relations for a minimal triple, in tuple order:
//   a_ii d_i = a_ij d_j + a_ik d_k,  a_ii = min{v >= 2 : v d_i in <d_j, d_k>}.
// When the minimal v admits several witness pairs, the one with the
// smallest first (lower-index) coefficient is stored; only the diagonal
// feeds the power-sum formulas.
struct RelationMatrix {
  std::array<std::array<std::uint64_t, 3>, 3> a{};
  std::array<std::uint64_t, 3> weighted_diag{};  // a_ii * d_i

  std::uint64_t diag(std::size_t i) const { return a[i][i]; }
  Int diag_product() const;   // a_11 a_22 a_33
  Int weighted_trace() const; // sum_i a_ii d_i
};

RelationMatrix minimal_relations(const GeneratorTuple& g);

enum class SemigroupKind { NonSymmetric, Symmetric };

// Classification of a minimal triple from its relation matrix.
//
// Symmetric: some column c has a zero witness in both other rows; the
// generators are internally permuted so that column lands third
// (normal_order lists original indices in normal-frame position).
// pair_exponent and tail_exponent are the two numerator degrees
// a'_22 d'_2 and a'_33 d'_3 of the normal frame.
//
// Non-symmetric: j_invariant is the positive square root of
//   <a,d>^2 - 4 sum_{i>j} a_ii a_jj d_i d_j + 4 d_1 d_2 d_3,
// and hole_low/hole_high are (<a,d> -+ J)/2, the two top numerator
// exponents.
struct SemigroupClass {
  SemigroupKind kind = SemigroupKind::NonSymmetric;
  Int trace;  // <a,d> in every case

  // non-symmetric only
  Int j_invariant;
  std::uint64_t hole_low = 0;
  std::uint64_t hole_high = 0;

  // symmetric only
  std::array<std::size_t, 3> normal_order{0, 1, 2};
  std::size_t vanishing_column = 0;  // original index
  std::uint64_t pair_exponent = 0;
  std::uint64_t tail_exponent = 0;
  Int reduced_trace;  // <a~,d> = pair_exponent + tail_exponent

  bool symmetric() const { return kind == SemigroupKind::Symmetric; }
};

// Fails loudly (computation_error) if the discriminant is negative, not
// a perfect square, or of the wrong parity: those indicate a relations
// bug, never a valid input.
SemigroupClass classify(const GeneratorTuple& g, const RelationMatrix& rel);

// Closed-form Hilbert-series numerator.
//   non-symmetric: 1 - sum_i z^{a_ii d_i} + z^{hole_low} + z^{hole_high}
//   symmetric:     (1 - z^{pair}) (1 - z^{tail})
NumeratorPolynomial numerator_closed_form(const GeneratorTuple& g,
                                          const SemigroupClass& cls,
                                          const RelationMatrix& rel);

// Two-generator numerator: 1 - z^{d_1 d_2}.
NumeratorPolynomial numerator_m2(const GeneratorTuple& g);

}  // namespace semigaps

#endif  // SEMIGAPS_RELATIONS_HPP
