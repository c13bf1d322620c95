#include "semigaps/polynomial.hpp"

#include <cstdlib>

namespace semigaps {

void NumeratorPolynomial::add_term(std::uint64_t exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t NumeratorPolynomial::coeff(std::uint64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t NumeratorPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::string NumeratorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const std::int64_t mag = std::abs(c);
    if (exp == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + " ";
      out += "z^" + std::to_string(exp);
    }
  }
  return out;
}

}  // namespace semigaps
