#pragma once

#include <string>
#include <vector>

#include "loopschub/rational.hpp"

namespace loopschub {

// Integer Cartan matrix with entries A[i][j] = <alpha_i, alpha_j-vee>.
using CartanMatrix = std::vector<std::vector<long>>;

// Standard Cartan matrix for a named type: "A2", "B3", "C2", "D4",
// "E6".."E8", "F4", "G2".  Throws on unknown names or out-of-range rank.
CartanMatrix cartan_matrix(const std::string& type);

// A root alpha = sum alpha[i] * alpha_{i+1} together with its coroot
// alpha-vee = sum coroot[i] * alpha_{i+1}-vee, both in simple coordinates.
struct Root {
    std::vector<long> alpha;
    std::vector<long> coroot;
    bool operator==(const Root& o) const { return alpha == o.alpha; }
    bool operator<(const Root& o) const { return alpha < o.alpha; }
};

// Exact-rational point of coweight space in fundamental-coweight
// coordinates: v represents sum v[i] * omega-vee_{i+1}, so <alpha_i, v>
// is simply v[i-1].
using Vec = std::vector<Rat>;
using Matrix = std::vector<std::vector<Rat>>;

// Finite root system of a Cartan matrix, acting on coweight space in
// fundamental-coweight coordinates.  Validates the matrix and requires an
// irreducible finite type: the reflection orbit of the simples must stay
// finite and admit a unique coordinatewise-maximal positive root.
class RootSystem {
  public:
    explicit RootSystem(CartanMatrix a);

    int rank() const { return rank_; }
    const CartanMatrix& cartan() const { return a_; }
    const std::vector<Root>& positive_roots() const { return pos_; }
    const Root& highest_root() const { return pos_[theta_]; }
    // |det Cartan| = index of the coroot lattice in the coweight lattice.
    long cartan_det() const { return det_; }

    // <alpha, v> for v in fundamental-coweight coordinates.
    Rat pair(const Root& alpha, const Vec& v) const;
    // Fundamental-coweight coordinates of alpha-vee.
    Vec coroot_vec(const Root& alpha) const;

    // Barycenter of the fundamental alcove: the average of 0 and the
    // vertices omega-vee_i / c_i, theta = sum c_i alpha_i.  Every positive
    // root pairs with it strictly between 0 and 1.
    Vec barycenter() const;

    // Membership tests: coroot lattice (integral alpha-vee coordinates)
    // and coweight lattice (integral fundamental-coweight coordinates).
    bool in_coroot_lattice(const Vec& v) const;
    bool in_coweight_lattice(const Vec& v) const;

  private:
    int rank_ = 0;
    CartanMatrix a_;
    std::vector<Root> pos_;
    size_t theta_ = 0;
    long det_ = 0;
    Matrix inv_cartan_;
};

// Affine transformation v -> m v + gamma of coweight space, exact-rational,
// in fundamental-coweight coordinates, so x = t_gamma o (linear part).
// Composition is right-to-left.
struct AffXf {
    Matrix m;
    Vec gamma;
    bool operator==(const AffXf& o) const { return m == o.m && gamma == o.gamma; }
    bool operator!=(const AffXf& o) const { return !(*this == o); }
};

AffXf identity_xf(int rank);
AffXf compose(const AffXf& outer, const AffXf& inner);
AffXf inverse_xf(const AffXf& x);
Vec apply_xf(const AffXf& x, const Vec& v);
// v -> v + lambda.
AffXf translation_xf(const Vec& lambda);
// Reflection in <alpha, .> = 0: v -> v - <alpha, v> alpha-vee.
AffXf reflection_xf(const RootSystem& rs, const Root& alpha);
// s_i for i in 1..rank; s_0 = t_{theta-vee} o r_theta.
AffXf simple_xf(const RootSystem& rs, int i);
// Word in letters 0..rank, rightmost letter acting first.
AffXf word_to_xf(const RootSystem& rs, const std::vector<int>& word);

// Coordinatewise floor.
std::vector<long> floor_vec(const Vec& v);

// Number of affine hyperplanes <alpha, .> = k separating the alcove of x
// from the fundamental alcove; equals the Coxeter length on the affine
// Weyl group and the hat-length on the extended group.
long length_by_separation(const RootSystem& rs, const AffXf& x);

// Right order: x is a prefix, l(x) + l(x^{-1} y) == l(y).
// Left order: x is a suffix, l(x) + l(y x^{-1}) == l(y).
bool weak_leq_right(const RootSystem& rs, const AffXf& x, const AffXf& y);
bool weak_leq_left(const RootSystem& rs, const AffXf& x, const AffXf& y);

// The finite Weyl group as matrices (gamma = 0), generated by s_1..s_rank.
std::vector<AffXf> finite_weyl(const RootSystem& rs);
// Indices into positive_roots() of {alpha > 0 : w(alpha) < 0}.
std::vector<size_t> inversion_set(const RootSystem& rs, const AffXf& w);
// Simple indices i in 1..rank with w(alpha_i) < 0.
std::vector<int> descent_set(const RootSystem& rs, const AffXf& w);

// All affine Weyl elements of length <= max_len, found by alcove walks;
// each alcove carries a unique element.
std::vector<AffXf> affine_alcoves(const RootSystem& rs, long max_len);

// The stabilizer of the fundamental alcove inside the extended group;
// size = |det Cartan|, every member fixes the barycenter.
std::vector<AffXf> sigma_group(const RootSystem& rs);
// Affine-Weyl part of t_mu: the unique t_mu o sigma^{-1} lying in the
// affine Weyl group, sigma in the stabilizer.  mu in coweight coordinates.
AffXf t_hat_xf(const RootSystem& rs, const std::vector<long>& mu);

// Coordinates of the box containing the alcove of y: floor(y(barycenter)).
std::vector<long> box_membership(const RootSystem& rs, const AffXf& y);

struct TranslationFactor {
    std::vector<long> lambda;  // dominant coweight, fundamental coords
    AffXf y;                   // x = y o t_{-lambda}, lengths add
    long length_x = 0;
    long length_y = 0;
    long length_t = 0;
};

// Maximal dominant lambda with x = y o t_{-lambda} and
// l(x) = l(y) + l(t_{-lambda}); requires x minimal in its coset x W,
// i.e. x^{-1}(barycenter) strictly dominant.  lambda = floor(x^{-1}(p)).
TranslationFactor max_antidominant_factor(const RootSystem& rs, const AffXf& x);

// Closed form for x = w o t_{-mu} with w finite and mu dominant:
// lambda = mu - sum of omega-vee_i over the descents of w.
std::vector<long> closed_form_lambda(const RootSystem& rs, const AffXf& w,
                                     const std::vector<long>& mu);

}  // namespace loopschub
