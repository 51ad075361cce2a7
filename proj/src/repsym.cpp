#include "skeinlab/repsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "skeinlab/numbers.hpp"

namespace skeinlab {
namespace repsym {

bool is_partition(const IntPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const IntPartition& p) {
    int total = 0;
    for (int v : p) total += v;
    return total;
}

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool dominance_leq(const IntPartition& lambda, const IntPartition& mu) {
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("dominance comparison needs equal sizes");
    int acc_l = 0, acc_m = 0;
    size_t rows = std::max(lambda.size(), mu.size());
    for (size_t i = 0; i < rows; ++i) {
        acc_l += i < lambda.size() ? lambda[i] : 0;
        acc_m += i < mu.size() ? mu[i] : 0;
        if (acc_l > acc_m) return false;
    }
    return true;
}

SymFunc SymFunc::schur(const IntPartition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    SymFunc out(partition_size(lambda));
    out.add(lambda, 1);
    return out;
}

mpz_class SymFunc::coefficient(const IntPartition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

SymFunc& SymFunc::add(const IntPartition& lambda, const mpz_class& c) {
    if (c == 0) return *this;
    if (!is_partition(lambda) || partition_size(lambda) != degree_)
        throw std::invalid_argument("partition does not match degree");
    auto [it, inserted] = coeffs_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("degree mismatch");
    SymFunc out = a;
    for (const auto& [l, c] : b.coeffs_) out.add(l, c);
    return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("degree mismatch");
    SymFunc out = a;
    for (const auto& [l, c] : b.coeffs_) out.add(l, -c);
    return out;
}

int CharacterTable::index_of(const IntPartition& p) const {
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end()) throw std::invalid_argument("unknown partition label");
    return static_cast<int>(it - partitions.begin());
}

namespace {

// chi^lambda(mu) by removing a border strip of size mu[0]; beta-number form.
mpz_class mn_character(const IntPartition& lambda, const IntPartition& mu,
                       std::map<std::pair<IntPartition, IntPartition>, mpz_class>& memo) {
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = mu[0];
    IntPartition rest(mu.begin() + 1, mu.end());
    const int rows = static_cast<int>(lambda.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

    mpz_class total = 0;
    for (int i = 0; i < rows; ++i) {
        int target = beta[i] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (v > target && v < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        IntPartition nl;
        for (int t = 0; t < rows; ++t) {
            int part = nb[t] - (rows - 1 - t);
            if (part > 0) nl.push_back(part);
            else if (part < 0) throw std::logic_error("bad beta numbers");
        }
        mpz_class sub = mn_character(nl, rest, memo);
        total += (height % 2) ? -sub : sub;
    }
    memo[key] = total;
    return total;
}

mpz_class class_size(int n, const IntPartition& mu) {
    std::map<int, int> mult;
    for (int v : mu) ++mult[v];
    mpz_class z = 1;
    for (const auto& [part, count] : mult) {
        for (int t = 0; t < count; ++t) z *= part;
        z *= factorial(count);
    }
    return factorial(n) / z;
}

}  // namespace

const CharacterTable& character_table(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("character table limited to n <= 10");
    static std::mutex mutex;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CharacterTable table;
    table.n = n;
    table.partitions = partitions_of(n);
    std::map<std::pair<IntPartition, IntPartition>, mpz_class> memo;
    table.chi.resize(table.partitions.size());
    for (size_t l = 0; l < table.partitions.size(); ++l) {
        table.chi[l].resize(table.partitions.size());
        for (size_t m = 0; m < table.partitions.size(); ++m)
            table.chi[l][m] = mn_character(table.partitions[l], table.partitions[m], memo);
    }
    for (const auto& mu : table.partitions) table.class_sizes.push_back(class_size(n, mu));
    return cache.emplace(n, std::move(table)).first->second;
}

Perm cycle_type_representative(int n, const IntPartition& mu) {
    if (partition_size(mu) != n) throw std::invalid_argument("cycle type must sum to n");
    std::vector<int> img(n);
    int start = 1;
    for (int part : mu) {
        for (int t = 0; t < part; ++t) {
            int from = start + t;
            int to = (t + 1 == part) ? start : from + 1;
            img[from - 1] = to;
        }
        start += part;
    }
    return Perm(std::move(img));
}

IntPartition cycle_type(const Perm& w) {
    std::vector<char> seen(w.size() + 1, 0);
    IntPartition type;
    for (int i = 1; i <= w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = w(j)) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

namespace {

using Matrix = std::vector<std::vector<long long>>;
using SparseColumns = std::vector<std::vector<std::pair<int, long long>>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    const size_t n = a.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long v = a[i][k];
            if (!v) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j]) out[i][j] += v * b[k][j];
        }
    return out;
}

bool is_identity(const Matrix& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

void verify_coxeter(const std::vector<Matrix>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        if (!is_identity(multiply(gens[i], gens[i])))
            throw std::invalid_argument("generator matrices violate s_i^2 = e");
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
        Matrix lhs = multiply(gens[i], multiply(gens[i + 1], gens[i]));
        Matrix rhs = multiply(gens[i + 1], multiply(gens[i], gens[i + 1]));
        if (lhs != rhs) throw std::invalid_argument("generator matrices violate the braid relation");
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 2; j < gens.size(); ++j)
            if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i]))
                throw std::invalid_argument("distant generators fail to commute");
}

SparseColumns to_sparse(const Matrix& m) {
    SparseColumns cols(m.size());
    for (size_t j = 0; j < m.size(); ++j)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i][j]) cols[j].push_back({static_cast<int>(i), m[i][j]});
    return cols;
}

mpz_class word_trace(const std::vector<SparseColumns>& gens, const std::vector<int>& word,
                     size_t dim) {
    mpz_class trace = 0;
    for (size_t j = 0; j < dim; ++j) {
        std::map<int, long long> v{{static_cast<int>(j), 1}};
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const SparseColumns& m = gens[*it - 1];
            std::map<int, long long> next;
            for (const auto& [row, val] : v)
                for (const auto& [out_row, out_val] : m[row]) next[out_row] += val * out_val;
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            v = std::move(next);
        }
        auto it = v.find(static_cast<int>(j));
        if (it != v.end()) trace += static_cast<long>(it->second);
    }
    return trace;
}

}  // namespace

SymFunc frobenius_from_rep(const std::vector<Matrix>& generators, int n) {
    if (static_cast<int>(generators.size()) != std::max(0, n - 1))
        throw std::invalid_argument("need one matrix per adjacent transposition");
    const CharacterTable& table = character_table(n);
    SymFunc out(n);
    size_t dim = generators.empty() ? 1 : generators[0].size();
    if (n <= 1) {
        // trivial group: dimension copies of the trivial representation
        if (n == 1) out.add({1}, static_cast<long>(dim));
        return out;
    }
    for (const auto& m : generators)
        if (m.size() != dim) throw std::invalid_argument("generator dimensions differ");
    verify_coxeter(generators);

    std::vector<SparseColumns> sparse;
    sparse.reserve(generators.size());
    for (const auto& m : generators) sparse.push_back(to_sparse(m));

    std::vector<mpz_class> traces(table.partitions.size());
    for (size_t c = 0; c < table.partitions.size(); ++c) {
        Perm rep = cycle_type_representative(n, table.partitions[c]);
        traces[c] = word_trace(sparse, rep.adjacent_word(), dim);
    }

    const mpz_class order = factorial(n);
    for (size_t l = 0; l < table.partitions.size(); ++l) {
        mpz_class total = 0;
        for (size_t c = 0; c < table.partitions.size(); ++c)
            total += table.class_sizes[c] * table.chi[l][c] * traces[c];
        if (total % order != 0)
            throw std::invalid_argument("trace vector is not a character");
        mpz_class mult = total / order;
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        out.add(table.partitions[l], mult);
    }
    return out;
}

SymFunc kronecker(const SymFunc& a, const SymFunc& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    const int n = a.degree();
    const CharacterTable& table = character_table(n);
    const size_t classes = table.partitions.size();
    std::vector<mpz_class> chi_a(classes, 0), chi_b(classes, 0);
    for (const auto& [l, c] : a.coeffs()) {
        int li = table.index_of(l);
        for (size_t m = 0; m < classes; ++m) chi_a[m] += c * table.chi[li][m];
    }
    for (const auto& [l, c] : b.coeffs()) {
        int li = table.index_of(l);
        for (size_t m = 0; m < classes; ++m) chi_b[m] += c * table.chi[li][m];
    }
    const mpz_class order = factorial(n);
    SymFunc out(n);
    for (size_t l = 0; l < classes; ++l) {
        mpz_class total = 0;
        for (size_t m = 0; m < classes; ++m)
            total += table.class_sizes[m] * table.chi[l][m] * chi_a[m] * chi_b[m];
        if (total % order != 0) throw std::logic_error("kronecker decomposition failed");
        out.add(table.partitions[l], total / order);
    }
    return out;
}

SymFunc pieri_vertical(const SymFunc& a, int m) {
    if (m < 0) throw std::invalid_argument("strip size must be nonnegative");
    SymFunc out(a.degree() + m);
    for (const auto& [lambda, c] : a.coeffs()) {
        const int rows = static_cast<int>(lambda.size());
        // mu_i = lambda_i + delta_i with delta_i in {0,1}; cells left over at
        // the bottom become new rows of a single cell each.
        IntPartition mu;
        auto rec = [&](auto&& self, int row, int remaining, int prev) -> void {
            if (row == rows) {
                IntPartition full = mu;
                for (int t = 0; t < remaining; ++t) full.push_back(1);
                out.add(full, c);
                return;
            }
            for (int add = 0; add <= std::min(1, remaining); ++add) {
                int v = lambda[row] + add;
                if (v > prev) continue;
                mu.push_back(v);
                self(self, row + 1, remaining - add, v);
                mu.pop_back();
            }
        };
        rec(rec, 0, m, a.degree() + m + 1);
    }
    return out;
}

std::string format_int_partition(const IntPartition& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out.empty() ? "-" : out;
}

}  // namespace repsym
}  // namespace skeinlab
