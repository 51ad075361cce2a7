#pragma once

#include <string>
#include <vector>

namespace skeinlab {

// Permutation of {1..n} in one-line notation: img[i-1] = w(i).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);
    static Perm identity(int n);
    static Perm adjacent_transposition(int n, int i);  // s_i = (i, i+1)
    static Perm long_element(int n);                   // w0(i) = n-i+1
    static Perm long_cycle(int n);                     // c = (1,2,...,n)

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Perm inverse() const;
    int sign() const;
    bool is_identity() const;

    // (u * v)(i) = u(v(i))
    friend Perm operator*(const Perm& u, const Perm& v);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    // Word (a_1,...,a_r) with w = s_{a_1} ∘ ... ∘ s_{a_r}.
    std::vector<int> adjacent_word() const;

private:
    std::vector<int> img_;
};

// Accepts one-line "2 3 1" or mapping form "1 2 3 -> 2 3 1".
Perm parse_permutation(const std::string& text);
std::string format_permutation(const Perm& w);

}  // namespace skeinlab
