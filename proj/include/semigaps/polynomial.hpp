#ifndef SEMIGAPS_POLYNOMIAL_HPP
#define SEMIGAPS_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>

namespace semigaps {

// Sparse integer polynomial in z; carrier for Hilbert-series numerators.
// Zero coefficients are never stored.
class NumeratorPolynomial {
 public:
  using Terms = std::map<std::uint64_t, std::int64_t>;

  NumeratorPolynomial() = default;

  // Adds c * z^e, merging with an existing term and dropping zeros.
  void add_term(std::uint64_t exponent, std::int64_t coeff);

  std::int64_t coeff(std::uint64_t exponent) const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial

  bool operator==(const NumeratorPolynomial&) const = default;

  // "1 - z^8 - z^9 - z^10 + z^13 + z^14"
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace semigaps

#endif  // SEMIGAPS_POLYNOMIAL_HPP
