#include "skeinlab/extalg.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skeinlab {

namespace {

int popcount(uint32_t m) { return std::popcount(m); }

uint32_t bits_below(int i) { return (1u << (i - 1)) - 1; }

// Number of pairs (a, b) with a in first, b in second and a > b; the parity
// is the sign of merging the sorted word of `first` before that of `second`.
int merge_inversions(uint32_t first, uint32_t second) {
    int inv = 0;
    for (uint32_t m = second; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        inv += popcount(first & ~((2u << b) - 1));
    }
    return inv;
}

void check_index(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
}

}  // namespace

ExtMonomial::ExtMonomial(int n, uint32_t theta_mask, uint32_t xi_mask)
    : n_(n), theta_(theta_mask), xi_(xi_mask) {
    if (n < 0 || n > kMaxRank)
        throw std::invalid_argument("ambient rank must satisfy 0 <= n <= 16");
    const uint32_t full = (n == 0) ? 0u : ((1u << n) - 1);
    if ((theta_mask & ~full) || (xi_mask & ~full))
        throw std::invalid_argument("monomial index outside {1..n}");
}

int ExtMonomial::theta_degree() const { return popcount(theta_); }
int ExtMonomial::xi_degree() const { return popcount(xi_); }

bool operator<(const ExtMonomial& a, const ExtMonomial& b) {
    int ad = a.theta_degree(), bd = b.theta_degree();
    if (ad != bd) return ad < bd;
    ad = a.xi_degree(), bd = b.xi_degree();
    if (ad != bd) return ad < bd;
    if (a.theta_ != b.theta_) return a.theta_ < b.theta_;
    return a.xi_ < b.xi_;
}

Fermion::Fermion(int n) : n_(n) {
    if (n < 0 || n > kMaxRank)
        throw std::invalid_argument("ambient rank must satisfy 0 <= n <= 16");
}

Fermion Fermion::one(int n) { return monomial(n, 0, 0, 1); }

Fermion Fermion::monomial(int n, uint32_t theta_mask, uint32_t xi_mask,
                          const Rational& coeff) {
    Fermion f(n);
    f.add_term(ExtMonomial(n, theta_mask, xi_mask), coeff);
    return f;
}

Fermion Fermion::generator(int n, Generator g) {
    check_index(n, g.index);
    uint32_t bit = 1u << (g.index - 1);
    return monomial(n, g.is_xi ? 0 : bit, g.is_xi ? bit : 0, 1);
}

Rational Fermion::coefficient(const ExtMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Fermion::is_homogeneous(Bidegree d) const {
    for (const auto& [m, c] : terms_)
        if (!(m.bidegree() == d)) return false;
    return true;
}

Fermion& Fermion::add_term(const ExtMonomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Fermion operator+(const Fermion& a, const Fermion& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ambient rank mismatch");
    Fermion out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Fermion operator-(const Fermion& a, const Fermion& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ambient rank mismatch");
    Fermion out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

Fermion operator*(const Rational& c, const Fermion& a) {
    Fermion out(a.n());
    if (c == 0) return out;
    for (const auto& [m, v] : a.terms()) out.add_term(m, c * v);
    return out;
}

Fermion Fermion::operator-() const { return Rational(-1) * *this; }

Fermion wedge(const Fermion& a, const Fermion& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ambient rank mismatch");
    Fermion out(a.n());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma.theta_mask() & mb.theta_mask()) || (ma.xi_mask() & mb.xi_mask()))
                continue;  // repeated generator
            // Word theta_{S1} xi_{T1} theta_{S2} xi_{T2}: theta_{S2} passes
            // xi_{T1} wholesale, then the two theta lists and xi lists merge.
            int swaps = mb.theta_degree() * ma.xi_degree()
                      + merge_inversions(ma.theta_mask(), mb.theta_mask())
                      + merge_inversions(ma.xi_mask(), mb.xi_mask());
            Rational c = ca * cb;
            if (swaps % 2) c = -c;
            out.add_term(ExtMonomial(a.n(), ma.theta_mask() | mb.theta_mask(),
                                     ma.xi_mask() | mb.xi_mask()),
                         c);
        }
    }
    return out;
}

namespace {

// Single-generator contraction: (-1)^(s-1) with s the generator's position in
// the canonical word, or zero when the generator is absent.
bool contract_generator(const ExtMonomial& m, Generator g, ExtMonomial& out, int& sign) {
    uint32_t bit = 1u << (g.index - 1);
    if (!g.is_xi) {
        if (!(m.theta_mask() & bit)) return false;
        int pos = popcount(m.theta_mask() & bits_below(g.index));
        sign = (pos % 2) ? -1 : 1;
        out = ExtMonomial(m.n(), m.theta_mask() ^ bit, m.xi_mask());
    } else {
        if (!(m.xi_mask() & bit)) return false;
        int pos = m.theta_degree() + popcount(m.xi_mask() & bits_below(g.index));
        sign = (pos % 2) ? -1 : 1;
        out = ExtMonomial(m.n(), m.theta_mask(), m.xi_mask() ^ bit);
    }
    return true;
}

Fermion contract_by_generator(Generator g, const Fermion& f) {
    Fermion out(f.n());
    for (const auto& [m, c] : f.terms()) {
        ExtMonomial reduced;
        int sign;
        if (contract_generator(m, g, reduced, sign))
            out.add_term(reduced, sign > 0 ? c : -c);
    }
    return out;
}

}  // namespace

Fermion contract(const Fermion& g, const Fermion& f) {
    if (g.n() != f.n()) throw std::invalid_argument("ambient rank mismatch");
    Fermion out(f.n());
    for (const auto& [mg, cg] : g.terms()) {
        Fermion h = f;
        for (uint32_t m = mg.theta_mask(); m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            h = contract_by_generator({false, b + 1}, h);
        }
        for (uint32_t m = mg.xi_mask(); m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            h = contract_by_generator({true, b + 1}, h);
        }
        out = out + cg * h;
    }
    return out;
}

Rational inner(const Fermion& a, const Fermion& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ambient rank mismatch");
    Rational total = 0;
    const auto& small = a.term_count() <= b.term_count() ? a : b;
    const auto& large = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it != large.terms().end()) total += c * it->second;
    }
    return total;
}

namespace {

// Relabels a mask through w and reports the parity of sorting the image list.
uint32_t relabel_mask(const Perm& w, uint32_t mask, int& inversions) {
    std::vector<int> image;
    for (uint32_t m = mask; m;) {
        int b = std::countr_zero(m);
        m &= m - 1;
        image.push_back(w(b + 1));
    }
    uint32_t out = 0;
    for (size_t i = 0; i < image.size(); ++i) {
        out |= 1u << (image[i] - 1);
        for (size_t j = i + 1; j < image.size(); ++j)
            if (image[i] > image[j]) ++inversions;
    }
    return out;
}

}  // namespace

Fermion act(const Perm& w, const Fermion& f) {
    if (w.size() != f.n()) throw std::invalid_argument("permutation size mismatch");
    Fermion out(f.n());
    for (const auto& [m, c] : f.terms()) {
        int inv = 0;
        uint32_t theta = relabel_mask(w, m.theta_mask(), inv);
        uint32_t xi = relabel_mask(w, m.xi_mask(), inv);
        out.add_term(ExtMonomial(f.n(), theta, xi), (inv % 2) ? -c : c);
    }
    return out;
}

Fermion bidegree_component(const Fermion& f, Bidegree d) {
    Fermion out(f.n());
    for (const auto& [m, c] : f.terms())
        if (m.bidegree() == d) out.add_term(m, c);
    return out;
}

Fermion substitute_zero(const Fermion& f, Generator g) {
    check_index(f.n(), g.index);
    uint32_t bit = 1u << (g.index - 1);
    Fermion out(f.n());
    for (const auto& [m, c] : f.terms()) {
        uint32_t mask = g.is_xi ? m.xi_mask() : m.theta_mask();
        if (!(mask & bit)) out.add_term(m, c);
    }
    return out;
}

Fermion theta_gen(int n, int i) { return Fermion::generator(n, {false, i}); }
Fermion xi_gen(int n, int i) { return Fermion::generator(n, {true, i}); }

Fermion theta_product(int n) {
    return Fermion::monomial(n, (n == 0) ? 0u : ((1u << n) - 1), 0, 1);
}

std::vector<ExtMonomial> bidegree_basis(int n, Bidegree d) {
    std::vector<ExtMonomial> out;
    if (d.theta < 0 || d.xi < 0 || d.theta > n || d.xi > n) return out;
    const uint32_t full = (n == 0) ? 0u : ((1u << n) - 1);
    std::vector<uint32_t> thetas, xis;
    for (uint32_t m = 0; m <= full; ++m) {
        if (popcount(m) == d.theta) thetas.push_back(m);
        if (popcount(m) == d.xi) xis.push_back(m);
        if (full == 0) break;
    }
    for (uint32_t s : thetas)
        for (uint32_t t : xis) out.emplace_back(n, s, t);
    return out;
}

std::string format_fermion(const Fermion& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (int i = 1; i <= f.n(); ++i)
            if (m.theta_mask() & (1u << (i - 1)))
                factors += (factors.empty() ? "t" : " t") + std::to_string(i);
        for (int i = 1; i <= f.n(); ++i)
            if (m.xi_mask() & (1u << (i - 1)))
                factors += (factors.empty() ? "x" : " x") + std::to_string(i);
        if (factors.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << factors;
        }
    }
    return out.str();
}

namespace {

struct FermionParser {
    const std::string& s;
    size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("expected number at position " + std::to_string(start));
        Rational r;
        if (r.set_str(s.substr(start, pos - start), 10) != 0)
            throw std::invalid_argument("bad rational at position " + std::to_string(start));
        r.canonicalize();
        return r;
    }

    // factor list "t1 t3 x2"; may be empty for a pure constant term
    bool parse_factors(uint32_t& theta, uint32_t& xi) {
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos >= s.size() || (s[pos] != 't' && s[pos] != 'x')) return any;
            bool is_xi = s[pos] == 'x';
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("expected index at position " + std::to_string(start));
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx < 1 || idx > n) throw std::invalid_argument("generator index out of range");
            uint32_t bit = 1u << (idx - 1);
            uint32_t& mask = is_xi ? xi : theta;
            if (mask & bit) throw std::invalid_argument("repeated generator in term");
            mask |= bit;
            any = true;
        }
    }

    Fermion parse() {
        Fermion out(n);
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("empty fermion text");
        if (s.compare(pos, std::string::npos, "0") == 0) return out;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            int sign = 1;
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos));
            }
            first = false;
            skip_ws();
            Rational coeff = 1;
            bool have_coeff = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
            if (have_coeff) {
                coeff = parse_rational();
                eat('*');
            }
            uint32_t theta = 0, xi = 0;
            bool any = parse_factors(theta, xi);
            if (!any && !have_coeff)
                throw std::invalid_argument("expected term at position " + std::to_string(pos));
            out.add_term(ExtMonomial(n, theta, xi), sign > 0 ? coeff : -coeff);
            skip_ws();
            if (pos >= s.size()) break;
        }
        return out;
    }
};

}  // namespace

Fermion parse_fermion(const std::string& text, int n) {
    FermionParser p{text, 0, n};
    return p.parse();
}

}  // namespace skeinlab
