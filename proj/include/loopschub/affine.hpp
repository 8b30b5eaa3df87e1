#pragma once

#include <string>
#include <vector>

#include "loopschub/perm.hpp"

namespace loopschub {

// Coweight for SL_n, stored in fundamental-coweight coordinates:
// lambda = sum coords[i-1] * omega-vee_i, i = 1..n-1.
//
// The canonical Z^n lift l satisfies l_i - l_{i+1} = coords[i-1] and is
// shifted by multiples of (1,..,1) so that sum(l) lies in [0, n).
// sum(l) == 0 exactly when lambda is in the coroot lattice.
class Coweight {
  public:
    Coweight() = default;
    Coweight(int n, std::vector<long> coords);

    static Coweight zero(int n);
    static Coweight fundamental(int n, int i);   // omega-vee_i
    static Coweight simple_coroot(int n, int i); // alpha-vee_i
    // From alpha-vee coordinates (length n-1).
    static Coweight from_alpha(int n, const std::vector<long>& a);
    // From any Z^n lift; insensitive to adding a constant vector.
    static Coweight from_lift(const std::vector<long>& lift);

    int n() const { return n_; }
    const std::vector<long>& coords() const { return c_; }
    std::vector<long> lift() const;

    // <alpha_i, lambda> = coords[i-1].
    bool is_dominant() const;
    bool is_antidominant() const;
    bool is_zero() const;
    bool in_coroot_lattice() const;
    // Coordinates in the alpha-vee basis; requires coroot-lattice membership.
    std::vector<long> alpha_coords() const;

    Coweight operator+(const Coweight& o) const;
    Coweight operator-(const Coweight& o) const;
    Coweight operator-() const;
    bool operator==(const Coweight& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Coweight& o) const { return !(*this == o); }
    bool operator<(const Coweight& o) const { return c_ < o.c_; }

    std::string to_string() const;  // "w:c1,c2,..."

  private:
    int n_ = 0;
    std::vector<long> c_;
};

// "w:0,-1" = fundamental-coweight coords; "a:1,0" = alpha-vee coords.
Coweight parse_coweight(int n, const std::string& text);

struct SigmaDecomposition;

// Element of the extended affine Weyl group of SL_n, realized as a periodic
// permutation pi of Z with pi(i+n) = pi(i) + n, stored by its window
// (pi(1),..,pi(n)) and normalized modulo the central shift pi -> pi + n.
//
// charge = sum(window) - n(n+1)/2 is always a multiple of n; the canonical
// window has q = charge/n in [0, n).  q == 0 cuts out the affine Weyl group.
// Composition is right-to-left: (u*v)(i) = u(v(i)).
class AffineElt {
  public:
    AffineElt() = default;
    explicit AffineElt(std::vector<long> window);

    static AffineElt identity(int n);
    // s_i for 0 <= i <= n-1; s_0 = t^{theta-vee} o r_theta, window
    // (0, 2, .., n-1, n+1).
    static AffineElt simple(int n, int i);
    // sigma(i) = i + 1; sigma s_i sigma^{-1} = s_{i+1 mod n}.
    static AffineElt sigma(int n);
    static AffineElt sigma_power(int n, long k);
    static AffineElt translation(const Coweight& lambda);
    static AffineElt from_perm(const Perm& w);
    // sigma^k * s_{word[0]} * ... * s_{word.back()}, rightmost acting first.
    static AffineElt from_word(int n, long sigma_pow, const std::vector<int>& word);

    int n() const { return static_cast<int>(win_.size()); }
    const std::vector<long>& window() const { return win_; }
    long charge() const;

    long eval(long i) const;      // pi(i) for any integer i
    long inv_eval(long j) const;  // pi^{-1}(j)

    AffineElt operator*(const AffineElt& o) const;
    AffineElt inverse() const;
    bool operator==(const AffineElt& o) const { return win_ == o.win_; }
    bool operator!=(const AffineElt& o) const { return win_ != o.win_; }
    bool operator<(const AffineElt& o) const { return win_ < o.win_; }

    // l = sum over window positions i < j of |floor((pi(j) - pi(i)) / n)|.
    long length() const;
    bool is_identity() const;

    // Letters in {0..n-1}.  Left descent i: pi^{-1}(i) > pi^{-1}(i+1).
    std::vector<int> left_descents() const;
    // Right descent i >= 1: pi(i) > pi(i+1); i = 0: pi(n) - n > pi(1).
    std::vector<int> right_descents() const;

    SigmaDecomposition sigma_decompose() const;
    // Reduced word of the affine-Weyl part, smallest left descent first.
    std::vector<int> reduced_word() const;

    // Minimal representative of vW: greedy removal of finite right descents.
    AffineElt min_coset_rep() const;
    bool is_grassmannian() const;  // strictly increasing window

    std::string to_string() const;  // "[a,b,c]"

  private:
    std::vector<long> win_;
};

struct SigmaDecomposition {
    long sigma_pow = 0;  // in [0, n)
    AffineElt hat;       // affine-Weyl part, v = sigma^pow * hat
};

// Minimal coset representative m^lambda = min(t^lambda W).
AffineElt m_min(const Coweight& lambda);

// Affine-Weyl part of t^mu under right division: t^mu = t-hat_mu * sigma^q.
AffineElt t_hat(const Coweight& mu);

struct LambdaHat {
    Coweight lambda_hat;  // in the coroot lattice
    long sigma_pow = 0;
    AffineElt m_hat;      // m^{lambda-hat}, Grassmannian
};

// Decompose m^lambda = sigma^q * m-hat and read off lambda-hat from the
// residues of the Grassmannian window min(m-hat W).
LambdaHat lambda_hat(const Coweight& lambda);

// Closed form for lambda-hat(-omega-vee_i):
// k*alpha-vee_i + sum_{j=1}^{k-1} (k-j)(alpha-vee_{i-j} + alpha-vee_{i+j}),
// k = min(i, n-i), out-of-range terms dropped.
Coweight shimozono_lambda_hat(int n, int i);

// Split a word u_1 0 u_2 0 ... u_r 0 (must end in the letter 0) into the
// finite blocks w_j = product of u_j.
std::vector<Perm> group_blocks(int n, const std::vector<int>& word);

// Right order: l(x) + l(x^{-1} y) == l(y).  Left: l(x) + l(y x^{-1}) == l(y).
bool weak_leq_right(const AffineElt& x, const AffineElt& y);
bool weak_leq_left(const AffineElt& x, const AffineElt& y);

// "[4,2,0]" (window) or "sigma^2 s0 s2" (word form).
AffineElt parse_affine(int n, const std::string& text);

}  // namespace loopschub
