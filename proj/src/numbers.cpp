#include "skeinlab/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace skeinlab {

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class catalan(int n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

mpz_class narayana(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    return binomial(n, k) * binomial(n, k - 1) / n;
}

mpz_class stirling2(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k && j <= i; ++j)
            s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
    return s[n][k];
}

mpz_class bell(int n) {
    mpz_class total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

}  // namespace skeinlab
