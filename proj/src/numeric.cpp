#include "openbook/numeric.hpp"

namespace openbook {

Integer binomial(const Integer& n, unsigned long k) {
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
    return result;
}

}  // namespace openbook
