#include "skeinlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skeinlab {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of {1..n}");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::adjacent_transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("s_i needs 1 <= i <= n-1");
    Perm w = identity(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
}

Perm Perm::long_element(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n - i + 1;
    return Perm(std::move(v));
}

Perm Perm::long_cycle(int n) {
    std::vector<int> v(n);
    for (int i = 1; i < n; ++i) v[i - 1] = i + 1;
    v[n - 1] = 1;
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
    return Perm(std::move(v));
}

int Perm::sign() const {
    int inv = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

Perm operator*(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> w(u.size());
    for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
    return Perm(std::move(w));
}

std::vector<int> Perm::adjacent_word() const {
    // Bubble-sort the one-line form to the identity; each swap at position j
    // multiplies by s_j on the right, so the word read back-to-front gives w.
    std::vector<int> v = img_;
    std::vector<int> swaps;
    const int n = size();
    for (bool moved = true; moved;) {
        moved = false;
        for (int j = 0; j + 1 < n; ++j) {
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                swaps.push_back(j + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Perm parse_permutation(const std::string& text) {
    std::string left = text, right;
    if (auto pos = text.find("->"); pos != std::string::npos) {
        left = text.substr(0, pos);
        right = text.substr(pos + 2);
    }
    auto read_ints = [](const std::string& s) {
        std::istringstream in(s);
        std::vector<int> out;
        int v;
        while (in >> v) out.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad permutation token in '" + s + "'");
        return out;
    };
    std::vector<int> a = read_ints(left);
    if (right.empty()) return Perm(std::move(a));
    std::vector<int> b = read_ints(right);
    if (a.size() != b.size()) throw std::invalid_argument("permutation arrow sides differ in length");
    std::vector<int> img(a.size());
    std::vector<char> seen(a.size() + 1, 0);
    for (size_t t = 0; t < a.size(); ++t) {
        int from = a[t];
        if (from < 1 || from > static_cast<int>(a.size()) || seen[from])
            throw std::invalid_argument("left side of '->' is not a permutation");
        seen[from] = 1;
        img[from - 1] = b[t];
    }
    return Perm(std::move(img));
}

std::string format_permutation(const Perm& w) {
    std::string out;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(w(i));
    }
    return out;
}

}  // namespace skeinlab
