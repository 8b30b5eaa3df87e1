#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace loopschub {

// Element of the symmetric group S_n, stored in one-line notation:
// window[i-1] = w(i), values 1..n.
//
// Composition is right-to-left: (u*v)(i) = u(v(i)).  A word s_{a_1}...s_{a_k}
// denotes the product in that order, so the rightmost letter acts first.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> window);

    static Perm identity(int n);
    // Simple transposition s_i (1 <= i <= n-1), swapping i and i+1.
    static Perm simple(int n, int i);
    // Longest element w0: i -> n+1-i.
    static Perm longest(int n);
    // Longest element of the parabolic subgroup generated by
    // {s_1..s_{i-1}} x {s_{i+1}..s_{n-1}}, i.e. reversing 1..i and i+1..n.
    static Perm longest_parabolic(int n, int i);
    // Cycle u_i = s_i s_{i-1} ... s_1 (u_0 = id).  u_i(1) = i+1.
    static Perm u_cycle(int n, int i);
    // Product of the word, rightmost letter applied first.
    static Perm from_word(int n, const std::vector<int>& word);

    int n() const { return static_cast<int>(win_.size()); }
    int operator()(int i) const { return win_[i - 1]; }
    const std::vector<int>& window() const { return win_; }

    Perm operator*(const Perm& other) const;  // (u*v)(i) = u(v(i))
    Perm inverse() const;
    bool operator==(const Perm& other) const { return win_ == other.win_; }
    bool operator!=(const Perm& other) const { return win_ != other.win_; }
    bool operator<(const Perm& other) const { return win_ < other.win_; }

    // Number of inversions = Coxeter length.
    int length() const;
    bool is_identity() const;

    // Right descents: i with w(i) > w(i+1).  Left descents: i with
    // w^{-1}(i) > w^{-1}(i+1).
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;

    // Lexicographically smallest reduced word (greedy smallest left descent).
    std::vector<int> reduced_word() const;

    // Inversion set {(i,j) : i < j, w(i) > w(j)} encoded as positive roots
    // e_i - e_j sent negative by w^{-1}; returned as index pairs (i,j).
    std::set<std::pair<int, int>> inversions() const;

    // Conjugation by w0: w -> w0 * w * w0.
    Perm star_dual() const;

  private:
    std::vector<int> win_;
};

// Left weak order: y <= w iff a reduced word for y is a suffix-extendable
// prefix factorization w = (w y^{-1}) y with lengths adding.
bool weak_leq_left(const Perm& y, const Perm& w);

}  // namespace loopschub
