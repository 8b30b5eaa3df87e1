#include "loopschub/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace loopschub {

Perm::Perm(std::vector<int> window) : win_(std::move(window)) {
    std::vector<bool> seen(win_.size(), false);
    for (int v : win_) {
        if (v < 1 || v > static_cast<int>(win_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation window");
        seen[v - 1] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

Perm Perm::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple index out of range");
    Perm p = identity(n);
    std::swap(p.win_[i - 1], p.win_[i]);
    return p;
}

Perm Perm::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Perm(std::move(w));
}

Perm Perm::longest_parabolic(int n, int i) {
    std::vector<int> w(n);
    for (int j = 0; j < i; ++j) w[j] = i - j;
    for (int j = i; j < n; ++j) w[j] = n + i - j;
    return Perm(std::move(w));
}

Perm Perm::u_cycle(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("u_cycle index out of range");
    std::vector<int> w(n);
    w[0] = i + 1;
    for (int j = 1; j <= i; ++j) w[j] = j;
    for (int j = i + 1; j < n; ++j) w[j] = j + 1;
    return Perm(std::move(w));
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
    Perm p = identity(n);
    for (int i : word) p = p * simple(n, i);
    return p;
}

Perm Perm::operator*(const Perm& other) const {
    if (n() != other.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> w(win_.size());
    for (int i = 1; i <= n(); ++i) w[i - 1] = win_[other(i) - 1];
    return Perm(std::move(w));
}

Perm Perm::inverse() const {
    std::vector<int> w(win_.size());
    for (int i = 1; i <= n(); ++i) w[win_[i - 1] - 1] = i;
    return Perm(std::move(w));
}

int Perm::length() const {
    int c = 0;
    for (size_t i = 0; i < win_.size(); ++i)
        for (size_t j = i + 1; j < win_.size(); ++j)
            if (win_[i] > win_[j]) ++c;
    return c;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (win_[i - 1] != i) return false;
    return true;
}

std::vector<int> Perm::right_descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (win_[i - 1] > win_[i]) d.push_back(i);
    return d;
}

std::vector<int> Perm::left_descents() const { return inverse().right_descents(); }

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    while (!w.is_identity()) {
        auto d = w.left_descents();
        int i = d.front();
        word.push_back(i);
        w = simple(n(), i) * w;
    }
    return word;
}

std::set<std::pair<int, int>> Perm::inversions() const {
    std::set<std::pair<int, int>> inv;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (win_[i - 1] > win_[j - 1]) inv.insert({i, j});
    return inv;
}

Perm Perm::star_dual() const {
    Perm w0 = longest(n());
    return w0 * (*this) * w0;
}

bool weak_leq_left(const Perm& y, const Perm& w) {
    return y.length() + (w * y.inverse()).length() == w.length();
}

}  // namespace loopschub
