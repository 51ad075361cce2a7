#include "skeinlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace skeinlab {

namespace {

size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace

int rank_of_rows(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw std::invalid_argument("ragged matrix");
    size_t pivot_row = 0;
    int rank = 0;
    for (size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
        size_t best = rows.size();
        size_t best_bits = 0;
        for (size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            size_t bits = bit_size(rows[r][col]);
            if (best == rows.size() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[pivot_row], rows[best]);
        const Rational& p = rows[pivot_row][col];
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / p;
            rows[r][col] = 0;
            for (size_t c = col + 1; c < width; ++c)
                if (rows[pivot_row][c] != 0) rows[r][c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int rank_of_fermions(const std::vector<Fermion>& vectors) {
    std::map<ExtMonomial, size_t> index;
    for (const auto& f : vectors)
        for (const auto& [m, c] : f.terms())
            index.emplace(m, 0);
    size_t next = 0;
    for (auto& [m, idx] : index) idx = next++;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& f : vectors) {
        if (f.is_zero()) continue;
        std::vector<Rational> row(index.size(), Rational(0));
        for (const auto& [m, c] : f.terms()) row[index.at(m)] = c;
        rows.push_back(std::move(row));
    }
    return rank_of_rows(rows);
}

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    for (auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("not square");
        row.resize(2 * n, Rational(0));
    }
    for (size_t i = 0; i < n; ++i) m[i][n + i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t best = n;
        size_t best_bits = 0;
        for (size_t r = col; r < n; ++r) {
            if (m[r][col] == 0) continue;
            size_t bits = bit_size(m[r][col]);
            if (best == n || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == n) throw std::invalid_argument("singular matrix");
        std::swap(m[col], m[best]);
        Rational p = m[col][col];
        for (size_t c = col; c < 2 * n; ++c) m[col][c] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < 2 * n; ++c)
                if (m[col][c] != 0) m[r][c] -= factor * m[col][c];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

FermionExpander::FermionExpander(std::vector<Fermion> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw std::invalid_argument("empty basis");
    std::map<ExtMonomial, size_t> index;
    for (const auto& f : basis_)
        for (const auto& [m, c] : f.terms())
            index.emplace(m, 0);
    std::vector<ExtMonomial> monomials;
    monomials.reserve(index.size());
    for (auto& [m, idx] : index) {
        idx = monomials.size();
        monomials.push_back(m);
    }

    std::vector<std::vector<Rational>> rows(basis_.size(),
                                            std::vector<Rational>(monomials.size(), Rational(0)));
    for (size_t r = 0; r < basis_.size(); ++r)
        for (const auto& [m, c] : basis_[r].terms()) rows[r][index.at(m)] = c;

    // Row-reduce a copy to locate pivot columns.
    std::vector<std::vector<Rational>> work = rows;
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < monomials.size() && pivot_row < work.size(); ++col) {
        size_t best = work.size();
        size_t best_bits = 0;
        for (size_t r = pivot_row; r < work.size(); ++r) {
            if (work[r][col] == 0) continue;
            size_t bits = bit_size(work[r][col]);
            if (best == work.size() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == work.size()) continue;
        std::swap(work[pivot_row], work[best]);
        const Rational& p = work[pivot_row][col];
        for (size_t r = pivot_row + 1; r < work.size(); ++r) {
            if (work[r][col] == 0) continue;
            Rational factor = work[r][col] / p;
            work[r][col] = 0;
            for (size_t c = col + 1; c < monomials.size(); ++c)
                if (work[pivot_row][c] != 0) work[r][c] -= factor * work[pivot_row][c];
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    if (pivots.size() != basis_.size())
        throw std::invalid_argument("expansion basis is linearly dependent");

    for (size_t c : pivots) pivot_monomials_.push_back(monomials[c]);
    // Square system S^T x = target restricted to pivot coordinates, where
    // S[r][c] = coefficient of basis r at pivot monomial c.
    std::vector<std::vector<Rational>> st(basis_.size(), std::vector<Rational>(basis_.size()));
    for (size_t r = 0; r < basis_.size(); ++r)
        for (size_t c = 0; c < basis_.size(); ++c) st[c][r] = rows[r][pivots[c]];
    solve_ = invert_matrix(std::move(st));
}

std::vector<Rational> FermionExpander::expand(const Fermion& target) const {
    std::vector<Rational> rhs(pivot_monomials_.size());
    for (size_t i = 0; i < pivot_monomials_.size(); ++i)
        rhs[i] = target.coefficient(pivot_monomials_[i]);
    std::vector<Rational> x(basis_.size(), Rational(0));
    for (size_t r = 0; r < basis_.size(); ++r) {
        for (size_t c = 0; c < basis_.size(); ++c)
            if (rhs[c] != 0 && solve_[r][c] != 0) x[r] += solve_[r][c] * rhs[c];
    }
    Fermion recon(target.n());
    for (size_t r = 0; r < basis_.size(); ++r)
        if (x[r] != 0) recon = recon + x[r] * basis_[r];
    if (!(recon == target))
        throw std::invalid_argument("target is not in the span of the basis");
    return x;
}

}  // namespace skeinlab
