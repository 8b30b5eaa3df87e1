#include "loopschub/demazure.hpp"

#include <stdexcept>

namespace loopschub {

namespace {

Perm transposition(int n, int i, int j) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    std::swap(w[i - 1], w[j - 1]);
    return Perm(std::move(w));
}

}  // namespace

Poly divided_diff(const Poly& f, Axis axis, int i, int j, bool signed_op) {
    const RingPtr& ring = f.ring();
    int block = axis == Axis::X ? ring->x_begin() : 0;
    int count = axis == Axis::X ? ring->x_count : ring->y_count;
    if (i == j || i < 1 || j < 1 || i > count || j > count)
        throw std::invalid_argument("bad root indices");
    Poly swapped = f.permute_vars(transposition(count, i, j), block);
    Poly denom = Poly::var(ring, block + i - 1) - Poly::var(ring, block + j - 1);
    Poly q = divide_exact(f - swapped, denom);
    return signed_op ? -q : q;
}

Poly demazure_word_op(const Poly& f, const std::vector<int>& word, Axis axis,
                      bool signed_op) {
    Poly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = divided_diff(r, axis, *it, *it + 1, signed_op);
    return r;
}

Poly demazure_perm(const Poly& f, const Perm& w, Axis axis, bool signed_op) {
    return demazure_word_op(f, w.reduced_word(), axis, signed_op);
}

Poly schubert_top(int n) {
    RingPtr ring = make_xy_ring(n);
    Poly p = Poly::one(ring);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; i + j <= n; ++j)
            p = p * (Poly::var(ring, ring->x_begin() + i - 1) - Poly::var(ring, j - 1));
    return p;
}

Poly double_schubert(const Perm& w) {
    int n = w.n();
    Poly f = schubert_top(n);
    auto word = (w.inverse() * Perm::longest(n)).reduced_word();
    return demazure_word_op(f, word, Axis::X, false);
}

Poly single_schubert(const Perm& w) {
    Poly f = double_schubert(w);
    std::vector<int> ys(w.n());
    for (int i = 0; i < w.n(); ++i) ys[i] = i;
    return f.substitute_zero(ys);
}

Poly proj_schubert(int n, int k) {
    if (k < 0 || k > n - 1) throw std::invalid_argument("index out of range");
    RingPtr ring = make_xt_ring(n, 1);
    Poly p = Poly::one(ring);
    for (int j = 1; j <= k; ++j)
        p = p * (Poly::var(ring, ring->x_begin()) - Poly::var(ring, j - 1));
    return p;
}

Poly fixed_point_class(const Perm& w) {
    return schubert_top(w.n()).permute_vars(w.star_dual(), 0);
}

Poly fixed_point_class_proj(int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("index out of range");
    Perm star = Perm::u_cycle(n, i).star_dual();
    return proj_schubert(n, n - 1).permute_vars(star, 0);
}

Poly gysin_pi_star(const Poly& f, int n) {
    Preset J = preset_J(n);
    Poly bar = normal_form(f, J);
    std::vector<std::pair<int, int>> fixed;
    for (int k = 2; k <= n; ++k) fixed.push_back({J.ring->x_begin() + k - 1, n - k});
    Poly coeff = bar.extract_coefficient(fixed);
    RingPtr xt = make_xt_ring(n, 1);
    Poly out(xt);
    for (const auto& [m, c] : coeff.terms()) {
        Mono mm(xt->arity(), 0);
        for (int j = 0; j < n; ++j) mm[j] = m[j];
        mm[xt->x_begin()] = m[J.ring->x_begin()];
        out.add_term(mm, c);
    }
    return normal_form(out, preset_Jpi(n));
}

Poly pi_pullback(const Poly& f, int n) {
    RingPtr xy = make_xy_ring(n);
    Poly out(xy);
    for (const auto& [m, c] : f.terms()) {
        Mono mm(xy->arity(), 0);
        for (int j = 0; j < n; ++j) mm[j] = m[j];
        mm[xy->x_begin()] = m[n];
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace loopschub
