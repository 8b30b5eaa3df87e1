#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopschub/affine.hpp"
#include "loopschub/demazure.hpp"
#include "loopschub/ideal.hpp"

namespace loopschub {

// Twisted point class P^(k)_i = prod_{j != i, 1 <= j <= n} (xt_k - y_j) in a
// y1..yn, xt1..xtm ring.
Poly point_class(const RingPtr& ring, int k, int i);

// S-tilde(xt, y) from a reduced word of m^{lambda-hat} (letters in 0..n-1,
// nonempty, last letter 0).  Works in the xt1..xt_{rn}, y1..yn ring where r is
// the number of 0-letters.  With reduce set, the state is taken to normal form
// mod JpiMulti after every multiplication and divided difference; the class is
// the same either way.
Poly build_tilde(int n, const std::vector<int>& word, bool reduce = true);

// y := 0 followed by reduction mod (xt_k^n); stays in the same ring.
Poly specialize_y0(const Poly& tilde_xy);

// Q-linear map on monomials: prod_k xt_k^{i_k} -> prod_k h_{n-1-i_k}, h_0 = 1.
// Every exponent must be <= n-1.
Poly sym_map(const Poly& tilde_x, int n);

struct AffineSchubert {
    Coweight lambda;
    LambdaHat hat;
    // Intermediate classes; kept only when the pipeline ring is small (and
    // absent when lambda-hat = 0).  schubert_h itself is always computed, via
    // an evaluation that prunes terms which cannot survive the y = 0
    // specialization.
    std::optional<Poly> tilde_xy;
    std::optional<Poly> tilde_x;
    Poly schubert_h;
};

// End-to-end: lambda -> lambda-hat -> reduced word -> pipeline -> Sym.
// Memoized on the window of m^{lambda-hat}.
AffineSchubert affine_schubert(const Coweight& lambda);

// Single un-memoized pipeline run from an explicit reduced word.
Poly affine_schubert_from_word(int n, const std::vector<int>& word);

// Bott's isomorphism turns the Pontryagin product into plain multiplication.
Poly pontryagin_product(const Poly& a, const Poly& b);

struct TheoremAReport {
    bool preconditions_ok = false;
    std::string reason;  // set when a precondition fails
    Coweight nu;
    bool identity_ok = false;
    Poly lhs, rhs;
};

// Check mu anti-dominant, z = m^lambda t^mu minimal in zW, lengths additive;
// then verify S^_lambda * S^_mu == S^_nu in Q[h].
TheoremAReport verify_theorem_A(const Coweight& lambda, const Coweight& mu);

// All reduced words of v (in the affine Weyl group) by descent backtracking;
// cap <= 0 enumerates all of them.
std::vector<std::vector<int>> reduced_words(const AffineElt& v, long cap = 0);

// Run the full pipeline over reduced words of m^{lambda-hat} and compare.
bool word_independence_check(const Coweight& lambda, long cap = 0);

// The coweight lambda with z in t^lambda W, read off the window residues.
Coweight coset_coweight(const AffineElt& z);

struct BoxEntry {
    AffineElt m;       // Grassmannian element of the interval
    Coweight lambda;   // in the coroot lattice
    long length = 0;
    Poly schubert_h;
    // Indices into the returned list when schubert_h factors as a product of
    // two other (shorter) entries; -1 otherwise.
    int factor_a = -1;
    int factor_b = -1;
};

// Grassmannian elements of the left weak-order interval below m-hat^rho, with
// their classes and detected factorizations into shorter box classes.
std::vector<BoxEntry> fundamental_box_classes(int n);

struct BottReport {
    std::vector<long> class_counts;    // indexed by length 0..max_len
    std::vector<long> monomial_counts; // graded dimension of Q[h] at dim 2d
    std::vector<long> ranks;           // exact rank of the coefficient matrix
    bool ok = false;
};

// Exact linear-algebra check that {S^_lambda : lambda in Q-vee} gives a basis
// of Q[h1..h_{n-1}] in each dimension 2d, d <= max_len.
BottReport bott_basis_check(int n, int max_len);

long exact_rank(std::vector<std::vector<Rat>> rows);

// All lambda with l(m^lambda) <= max_len, sorted by (length, coords); the
// search box is certified complete at runtime via the translation length.
std::vector<Coweight> enumerate_coweights_by_length(int n, long max_len,
                                                    bool coroot_only = false);

}  // namespace loopschub
