#pragma once

#include "loopschub/ideal.hpp"
#include "loopschub/perm.hpp"
#include "loopschub/poly.hpp"

namespace loopschub {

enum class Axis { X, Y };

// Divided difference along v_i - v_j in the chosen variable block (1-based
// i, j inside the block).  The root need not be simple.  signed_op applies
// the extra minus sign of the left operator; the unsigned version divides
// f - (swap f) by v_i - v_j as is.
Poly divided_diff(const Poly& f, Axis axis, int i, int j, bool signed_op = false);

// Composite operator along a word of simple reflections, rightmost letter
// applied first.
Poly demazure_word_op(const Poly& f, const std::vector<int>& word, Axis axis,
                      bool signed_op = false);
// Same, along a canonical reduced word of w (well defined by the braid
// relations).
Poly demazure_perm(const Poly& f, const Perm& w, Axis axis, bool signed_op = false);

// Top double Schubert polynomial prod_{i+j<=n} (x_i - y_j) in the xy-ring.
Poly schubert_top(int n);

// Double Schubert polynomial: unsigned right divided differences applied to
// the top polynomial down a reduced word of w^{-1} w_0.
Poly double_schubert(const Perm& w);
Poly single_schubert(const Perm& w);  // y := 0

// Projective-space analogues in the xt-ring (m = 1):
// prod_{j<=k} (xt - y_j), the class of the codimension-k Schubert variety.
Poly proj_schubert(int n, int k);

// Fixed-point class [w]_T = top(x, w*(y)) with w* = w0 w w0.
Poly fixed_point_class(const Perm& w);
// [u_i]_T on projective space: prod_{j != n-i} (xt - y_j).
Poly fixed_point_class_proj(int n, int i);

// Gysin push-forward to projective space: Groebner normal form mod J(n),
// coefficient of x_2^{n-2} x_3^{n-3} ... x_n^0, renamed to the xt-ring and
// reduced mod Jpi(n).
Poly gysin_pi_star(const Poly& f, int n);

// Embedding of the xt-ring (m = 1) into the xy-ring by xt -> x_1.
Poly pi_pullback(const Poly& f, int n);

}  // namespace loopschub
