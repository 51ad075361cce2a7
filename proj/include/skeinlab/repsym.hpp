#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/perm.hpp"

namespace skeinlab {
namespace repsym {

using IntPartition = std::vector<int>;  // weakly decreasing positive parts

bool is_partition(const IntPartition& p);
int partition_size(const IntPartition& p);
std::vector<IntPartition> partitions_of(int n);
bool dominance_leq(const IntPartition& lambda, const IntPartition& mu);

// Integer-coefficient Schur expansion of a degree-n symmetric function.
class SymFunc {
public:
    explicit SymFunc(int degree) : degree_(degree) {}
    static SymFunc schur(const IntPartition& lambda);
    static SymFunc zero(int degree) { return SymFunc(degree); }

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IntPartition, mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coefficient(const IntPartition& lambda) const;

    SymFunc& add(const IntPartition& lambda, const mpz_class& c);
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    int degree_;
    std::map<IntPartition, mpz_class> coeffs_;
};

struct CharacterTable {
    int n = 0;
    std::vector<IntPartition> partitions;            // row/column labels
    std::vector<std::vector<mpz_class>> chi;         // chi[lambda][mu]
    std::vector<mpz_class> class_sizes;              // indexed like columns
    int index_of(const IntPartition& p) const;
};

// Exact table via the Murnaghan-Nakayama recursion; memoized per n.
const CharacterTable& character_table(int n);

// Permutation with cycle type mu on consecutive letters.
Perm cycle_type_representative(int n, const IntPartition& mu);
IntPartition cycle_type(const Perm& w);

// Decomposes the representation generated by the matrices for s_1..s_{n-1}.
// Verifies the Coxeter relations, evaluates one representative per cycle
// type, and decomposes the trace vector against the character table.
SymFunc frobenius_from_rep(const std::vector<std::vector<std::vector<long long>>>& generators,
                           int n);

SymFunc kronecker(const SymFunc& a, const SymFunc& b);
// Multiplication by e_m: adds vertical m-strips (no two cells in one row).
SymFunc pieri_vertical(const SymFunc& a, int m);

std::string format_int_partition(const IntPartition& p);

}  // namespace repsym
}  // namespace skeinlab
