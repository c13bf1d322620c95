#include "semigaps/numbers.hpp"

namespace semigaps {

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int require_integer(const Rat& q, const char* context) {
  if (q.get_den() != 1) {
    throw computation_error(std::string(context) +
                            ": expected an integer, got " + to_string(q));
  }
  return q.get_num();
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::uint64_t to_u64(const Int& v, const char* context) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw computation_error(std::string(context) + ": value " + to_string(v) +
                            " does not fit in 64 bits");
  }
  return v.get_ui();
}

}  // namespace semigaps
