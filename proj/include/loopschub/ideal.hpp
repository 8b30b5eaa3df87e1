#pragma once

#include <string>
#include <vector>

#include "loopschub/poly.hpp"

namespace loopschub {

// A fixed ideal with its reduced Groebner basis under the ambient lex order.
// The Groebner property is verified by tests (Buchberger criterion), not
// assumed.
struct Preset {
    std::string name;
    RingPtr ring;
    std::vector<Poly> gens;
};

// Ring y1..yn, x1..xn:
//   J(n)  = (h1(x_[n]), e1(y), sum_i (-1)^i h_{d-i}(x_[n+1-d]) e_i(y) for d=2..n)
//   J0(n) = (h_d(x_[n+1-d]) for d=1..n)
Preset preset_J(int n);
Preset preset_J0(int n);

// Ring y1..yn, xt1..xtm (m=1 for the plain versions):
//   Jpi  = (e1(y), prod_j (xt_k - y_j) for each k)
//   Jpi0 = (xt_k^n for each k)
Preset preset_Jpi(int n);
Preset preset_Jpi0(int n);
Preset preset_JpiMulti(int n, int m);
Preset preset_Jpi0Multi(int n, int m);

// Multivariate division remainder: no term divisible by any generator's
// leading term.  When several generators apply, the one with the smallest
// leading term is used.
Poly normal_form(const Poly& f, const Preset& preset);

// All S-polynomials reduce to zero.
bool buchberger_ok(const Preset& preset);

}  // namespace loopschub
