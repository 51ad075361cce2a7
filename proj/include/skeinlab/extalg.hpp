#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/perm.hpp"

namespace skeinlab {

using Rational = mpq_class;

constexpr int kMaxRank = 16;

struct Bidegree {
    int theta = 0;
    int xi = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// A fermionic generator theta_i or xi_i.
struct Generator {
    bool is_xi = false;
    int index = 0;  // 1-based
};

// Canonical basis monomial theta_S * xi_T of the exterior algebra on
// theta_1..theta_n, xi_1..xi_n; index i is stored as bit i-1.
class ExtMonomial {
public:
    ExtMonomial() = default;
    ExtMonomial(int n, uint32_t theta_mask, uint32_t xi_mask);

    int n() const { return n_; }
    uint32_t theta_mask() const { return theta_; }
    uint32_t xi_mask() const { return xi_; }
    int theta_degree() const;
    int xi_degree() const;
    int total_degree() const { return theta_degree() + xi_degree(); }
    Bidegree bidegree() const { return {theta_degree(), xi_degree()}; }

    // Fixed total order: (theta degree, xi degree, theta mask, xi mask).
    friend bool operator<(const ExtMonomial& a, const ExtMonomial& b);
    friend bool operator==(const ExtMonomial& a, const ExtMonomial& b) {
        return a.theta_ == b.theta_ && a.xi_ == b.xi_;
    }

private:
    int n_ = 0;
    uint32_t theta_ = 0;
    uint32_t xi_ = 0;
};

// Element of the rank-2n exterior algebra with exact rational coefficients.
// Immutable after construction; all operations below are pure.
class Fermion {
public:
    explicit Fermion(int n);

    static Fermion zero(int n) { return Fermion(n); }
    static Fermion one(int n);
    static Fermion monomial(int n, uint32_t theta_mask, uint32_t xi_mask,
                            const Rational& coeff = 1);
    static Fermion generator(int n, Generator g);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExtMonomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const ExtMonomial& m) const;

    // True when every term has the given bidegree (zero is homogeneous).
    bool is_homogeneous(Bidegree d) const;

    Fermion& add_term(const ExtMonomial& m, const Rational& c);

    friend Fermion operator+(const Fermion& a, const Fermion& b);
    friend Fermion operator-(const Fermion& a, const Fermion& b);
    friend Fermion operator*(const Rational& c, const Fermion& a);
    Fermion operator-() const;
    friend bool operator==(const Fermion& a, const Fermion& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_ = 0;
    std::map<ExtMonomial, Rational> terms_;
};

Fermion wedge(const Fermion& a, const Fermion& b);
// g ⊙ f: generators of each monomial of g are contracted into f in
// increasing alphabet order (theta_1 < ... < theta_n < xi_1 < ... < xi_n).
Fermion contract(const Fermion& g, const Fermion& f);
Rational inner(const Fermion& a, const Fermion& b);
Fermion act(const Perm& w, const Fermion& f);
Fermion bidegree_component(const Fermion& f, Bidegree d);
Fermion substitute_zero(const Fermion& f, Generator g);

Fermion theta_gen(int n, int i);
Fermion xi_gen(int n, int i);
Fermion theta_product(int n);  // theta_1 theta_2 ... theta_n

std::vector<ExtMonomial> bidegree_basis(int n, Bidegree d);

// Text format: signed sum of terms like "3/2*t1 t3 x2"; "0" for zero.
std::string format_fermion(const Fermion& f);
Fermion parse_fermion(const std::string& text, int n);

}  // namespace skeinlab
