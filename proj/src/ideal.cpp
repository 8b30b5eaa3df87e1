#include "loopschub/ideal.hpp"

#include <stdexcept>

namespace loopschub {

namespace {

std::vector<int> y_indices(const RingPtr& ring) {
    std::vector<int> idx(ring->y_count);
    for (int i = 0; i < ring->y_count; ++i) idx[i] = i;
    return idx;
}

// First k variables of the x-block.
std::vector<int> x_indices(const RingPtr& ring, int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = ring->x_begin() + i;
    return idx;
}

// prod_j (xt_k - y_j) over all y variables.
Poly point_factor(const RingPtr& ring, int k) {
    Poly p = Poly::one(ring);
    for (int j = 0; j < ring->y_count; ++j) {
        Poly f = Poly::var(ring, ring->x_begin() + k) - Poly::var(ring, j);
        p = p * f;
    }
    return p;
}

}  // namespace

Preset preset_J(int n) {
    if (n < 2) throw std::invalid_argument("preset needs n >= 2");
    RingPtr ring = make_xy_ring(n);
    std::vector<Poly> gens;
    gens.push_back(complete_sym(ring, x_indices(ring, n), 1));
    gens.push_back(elementary_sym(ring, y_indices(ring), 1));
    for (int d = 2; d <= n; ++d) {
        Poly g(ring);
        for (int i = 0; i <= d; ++i) {
            Poly t = complete_sym(ring, x_indices(ring, n + 1 - d), d - i) *
                     elementary_sym(ring, y_indices(ring), i);
            g = (i % 2 == 0) ? g + t : g - t;
        }
        gens.push_back(g);
    }
    return Preset{"J(" + std::to_string(n) + ")", ring, std::move(gens)};
}

Preset preset_J0(int n) {
    if (n < 2) throw std::invalid_argument("preset needs n >= 2");
    RingPtr ring = make_xy_ring(n);
    std::vector<Poly> gens;
    for (int d = 1; d <= n; ++d)
        gens.push_back(complete_sym(ring, x_indices(ring, n + 1 - d), d));
    return Preset{"J0(" + std::to_string(n) + ")", ring, std::move(gens)};
}

Preset preset_JpiMulti(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("preset needs n >= 2, m >= 1");
    RingPtr ring = make_xt_ring(n, m);
    std::vector<Poly> gens;
    gens.push_back(elementary_sym(ring, y_indices(ring), 1));
    for (int k = 0; k < m; ++k) gens.push_back(point_factor(ring, k));
    return Preset{"Jpi(" + std::to_string(n) + "," + std::to_string(m) + ")", ring,
                  std::move(gens)};
}

Preset preset_Jpi0Multi(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("preset needs n >= 2, m >= 1");
    RingPtr ring = make_xt_ring(n, m);
    std::vector<Poly> gens;
    for (int k = 0; k < m; ++k) gens.push_back(Poly::var(ring, ring->x_begin() + k, n));
    return Preset{"Jpi0(" + std::to_string(n) + "," + std::to_string(m) + ")", ring,
                  std::move(gens)};
}

Preset preset_Jpi(int n) { return preset_JpiMulti(n, 1); }

Preset preset_Jpi0(int n) { return preset_Jpi0Multi(n, 1); }

Poly normal_form(const Poly& f, const Preset& preset) {
    if (!same_ring(f.ring(), preset.ring)) throw std::invalid_argument("ring mismatch");
    Poly r = f, out(f.ring());
    MonoLess less;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        const Poly* best = nullptr;
        for (const Poly& g : preset.gens) {
            if (!mono_divides(g.leading().first, rm)) continue;
            if (!best || less(g.leading().first, best->leading().first)) best = &g;
        }
        if (best) {
            Mono t = mono_quotient(rm, best->leading().first);
            Rat c = rc / best->leading().second;
            r.add_mul_term(*best, t, -c);
        } else {
            auto lead = r.pop_leading();
            out.add_term(lead.first, lead.second);
        }
    }
    return out;
}

bool buchberger_ok(const Preset& preset) {
    for (size_t i = 0; i < preset.gens.size(); ++i) {
        for (size_t j = i + 1; j < preset.gens.size(); ++j) {
            const Poly& gi = preset.gens[i];
            const Poly& gj = preset.gens[j];
            Mono l = mono_lcm(gi.leading().first, gj.leading().first);
            Poly s = gi.mul_term(mono_quotient(l, gi.leading().first),
                                 Rat(1) / gi.leading().second) -
                     gj.mul_term(mono_quotient(l, gj.leading().first),
                                 Rat(1) / gj.leading().second);
            if (!normal_form(s, preset).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace loopschub
