#include "qpb/ints.hpp"

#include <stdexcept>

#include "qpb/errors.hpp"

namespace qpb {

Int binom(const Int& a, long k) {
  if (k < 0) throw std::invalid_argument("binom: negative lower index");
  // C(a, i) = C(a, i-1) * (a - i + 1) / i stays integral at every step.
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= a - (i - 1);
    if (!mpz_divisible_ui_p(result.get_mpz_t(), static_cast<unsigned long>(i)))
      throw invariant_error("binom: non-integral intermediate");
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

Int pow_int(const Int& base, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(e));
  return result;
}

}  // namespace qpb
