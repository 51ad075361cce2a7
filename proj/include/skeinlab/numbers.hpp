#pragma once

#include <gmpxx.h>

namespace skeinlab {

mpz_class binomial(int n, int k);
mpz_class factorial(int n);
mpz_class catalan(int n);                 // |NC(n)|
mpz_class narayana(int n, int k);         // |NC(n,k)|, Nar(0,0) = 1
mpz_class stirling2(int n, int k);        // |Pi(n,k)|
mpz_class bell(int n);

}  // namespace skeinlab
