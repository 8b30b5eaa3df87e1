#include "loopschub/affschubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace loopschub {

namespace {

void validate_pipeline_word(int n, const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("pipeline word must be nonempty");
    for (int a : word)
        if (a < 0 || a >= n) throw std::invalid_argument("pipeline letter out of range");
    if (word.back() != 0)
        throw std::invalid_argument("pipeline word must end in the letter 0");
}

// l(t^lambda) = sum over positive roots |<alpha, lambda>|; in type A_{n-1} the
// positive roots pair with lambda via interval sums of the omega-vee coords.
long translation_length(int n, const std::vector<long>& coords) {
    long total = 0;
    for (int i = 0; i < n - 1; ++i) {
        long s = 0;
        for (int j = i; j < n - 1; ++j) {
            s += coords[j];
            total += s < 0 ? -s : s;
        }
    }
    return total;
}

long binom2(long n) { return n * (n - 1) / 2; }

enum class PipelineMode { Raw, Reduced, Pruned };

// Total y-degree of a monomial.
long y_degree(const Mono& mono, int y_count) {
    long d = 0;
    for (int i = 0; i < y_count; ++i) d += mono[static_cast<size_t>(i)];
    return d;
}

// Drop terms of y-degree above the bound.  Divided differences lower the
// y-degree of every term by exactly one, and every other pipeline step (point
// class multiplication, normal-form rewriting of xt powers) can only raise
// it, so a term whose y-degree exceeds the number of divided differences
// still ahead cannot contribute to the y = 0 specialization of the result.
void prune_y(Poly& p, long bound) {
    int yc = p.ring()->y_count;
    Poly kept(p.ring());
    for (const auto& [mono, c] : p.terms())
        if (y_degree(mono, yc) <= bound) kept.add_term(mono, c);
    p = std::move(kept);
}

Poly run_pipeline(int n, const std::vector<int>& word, PipelineMode mode) {
    validate_pipeline_word(n, word);
    std::vector<Perm> blocks = group_blocks(n, word);
    int r = static_cast<int>(blocks.size());
    int m = r * n;
    RingPtr ring = make_xt_ring(n, m);
    Preset ideal = preset_JpiMulti(n, m);
    long remaining = static_cast<long>(word.size());  // divided differences ahead
    auto settle = [&](Poly& p) {
        if (mode == PipelineMode::Raw) return;
        p = normal_form(p, ideal);
        if (mode == PipelineMode::Pruned) prune_y(p, remaining);
    };

    Poly cur = Poly::one(ring);
    long sign_exp = 0;
    for (int j = r; j >= 1; --j) {
        int base = (j - 1) * n + 1;
        for (int t = 1; t <= n - 1; ++t) {
            cur = cur * point_class(ring, base + t, n - t);
            settle(cur);
        }
        cur = divided_diff(cur, Axis::Y, 1, n);
        --remaining;
        settle(cur);
        cur = cur * point_class(ring, base, n);
        settle(cur);
        const Perm& w = blocks[static_cast<size_t>(j - 1)];
        sign_exp += w.length();
        std::vector<int> wword = w.reduced_word();
        for (auto it = wword.rbegin(); it != wword.rend(); ++it) {
            cur = divided_diff(cur, Axis::Y, *it, *it + 1);
            --remaining;
            settle(cur);
        }
    }
    if (sign_exp % 2 != 0) cur = -cur;
    return cur;
}

}  // namespace

Poly point_class(const RingPtr& ring, int k, int i) {
    int n = ring->y_count, m = ring->x_count;
    if (k < 1 || k > m || i < 1 || i > n)
        throw std::out_of_range("point class index out of range");
    Poly out = Poly::one(ring);
    Poly xk = Poly::var(ring, ring->x_begin() + k - 1);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        out = out * (xk - Poly::var(ring, j - 1));
    }
    return out;
}

Poly build_tilde(int n, const std::vector<int>& word, bool reduce) {
    return run_pipeline(n, word,
                        reduce ? PipelineMode::Reduced : PipelineMode::Raw);
}

Poly specialize_y0(const Poly& tilde_xy) {
    const RingPtr& ring = tilde_xy.ring();
    std::vector<int> ys(static_cast<size_t>(ring->y_count));
    for (int i = 0; i < ring->y_count; ++i) ys[static_cast<size_t>(i)] = i;
    Poly out = tilde_xy.substitute_zero(ys);
    return normal_form(out, preset_Jpi0Multi(ring->y_count, ring->x_count));
}

Poly sym_map(const Poly& tilde_x, int n) {
    RingPtr h = make_h_ring(n);
    const RingPtr& ring = tilde_x.ring();
    Poly out(h);
    for (const auto& [mono, coeff] : tilde_x.terms()) {
        Mono hm(static_cast<size_t>(n - 1), 0);
        for (int k = ring->x_begin(); k < ring->arity(); ++k) {
            int e = mono[static_cast<size_t>(k)];
            if (e > n - 1) throw std::domain_error("sym_map input not reduced");
            int d = n - 1 - e;
            if (d > 0) hm[static_cast<size_t>(d - 1)] += 1;
        }
        for (int i = 0; i < ring->y_count; ++i)
            if (mono[static_cast<size_t>(i)] != 0)
                throw std::domain_error("sym_map input depends on y");
        out.add_term(hm, coeff);
    }
    return out;
}

Poly affine_schubert_from_word(int n, const std::vector<int>& word) {
    if (word.empty()) return Poly::one(make_h_ring(n));
    Poly txy = run_pipeline(n, word, PipelineMode::Pruned);
    return sym_map(specialize_y0(txy), n);
}

AffineSchubert affine_schubert(const Coweight& lambda) {
    static std::map<std::vector<long>, AffineSchubert> memo;
    LambdaHat lh = lambda_hat(lambda);
    auto it = memo.find(lh.m_hat.window());
    if (it != memo.end()) {
        AffineSchubert out = it->second;
        out.lambda = lambda;
        out.hat = lh;
        return out;
    }
    AffineSchubert out;
    out.lambda = lambda;
    out.hat = lh;
    int n = lambda.n();
    std::vector<int> word = lh.m_hat.reduced_word();
    if (word.empty()) {
        out.schubert_h = Poly::one(make_h_ring(n));
    } else {
        out.schubert_h = affine_schubert_from_word(n, word);
        // The intermediate classes are kept only while they stay small.
        long zeros = static_cast<long>(std::count(word.begin(), word.end(), 0));
        if (zeros * n <= 6) {
            out.tilde_xy = build_tilde(n, word, true);
            out.tilde_x = specialize_y0(*out.tilde_xy);
        }
    }
    memo.emplace(lh.m_hat.window(), out);
    return out;
}

Poly pontryagin_product(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("pontryagin product needs matching rings");
    return a * b;
}

Coweight coset_coweight(const AffineElt& z) {
    int n = z.n();
    std::vector<long> lift(static_cast<size_t>(n), 0);
    for (long v : z.window()) {
        long q = v - 1;
        long rem = ((q % n) + n) % n;
        int res = static_cast<int>(rem) + 1;  // v has residue res in 1..n
        lift[static_cast<size_t>(res - 1)] = (v - res) / n;
    }
    return Coweight::from_lift(lift);
}

TheoremAReport verify_theorem_A(const Coweight& lambda, const Coweight& mu) {
    TheoremAReport rep;
    if (lambda.n() != mu.n())
        throw std::invalid_argument("coweights live in different groups");
    if (!mu.is_antidominant()) {
        rep.reason = "mu is not anti-dominant";
        return rep;
    }
    AffineElt ml = m_min(lambda);
    AffineElt tmu = AffineElt::translation(mu);
    AffineElt z = ml * tmu;
    if (!z.is_grassmannian()) {
        rep.reason = "m^lambda t^mu is not minimal in its coset";
        return rep;
    }
    if (ml.length() + tmu.length() != z.length()) {
        rep.reason = "lengths do not add";
        return rep;
    }
    rep.preconditions_ok = true;
    rep.nu = coset_coweight(z);
    rep.lhs = pontryagin_product(affine_schubert(lambda).schubert_h,
                                 affine_schubert(mu).schubert_h);
    rep.rhs = affine_schubert(rep.nu).schubert_h;
    rep.identity_ok = rep.lhs == rep.rhs;
    return rep;
}

namespace {

void reduced_words_rec(const AffineElt& v, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out, long cap) {
    if (cap > 0 && static_cast<long>(out.size()) >= cap) return;
    if (v.is_identity()) {
        out.push_back(acc);
        return;
    }
    int n = v.n();
    for (int i : v.left_descents()) {
        acc.push_back(i);
        reduced_words_rec(AffineElt::simple(n, i) * v, acc, out, cap);
        acc.pop_back();
        if (cap > 0 && static_cast<long>(out.size()) >= cap) return;
    }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const AffineElt& v, long cap) {
    if (v.sigma_decompose().sigma_pow != 0)
        throw std::invalid_argument("reduced words need an affine Weyl element");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    reduced_words_rec(v, acc, out, cap);
    return out;
}

bool word_independence_check(const Coweight& lambda, long cap) {
    LambdaHat lh = lambda_hat(lambda);
    if (lh.m_hat.is_identity()) return true;
    int n = lambda.n();
    std::vector<std::vector<int>> words = reduced_words(lh.m_hat, cap);
    Poly ref = affine_schubert_from_word(n, words.front());
    for (size_t k = 1; k < words.size(); ++k)
        if (affine_schubert_from_word(n, words[k]) != ref) return false;
    return true;
}

std::vector<BoxEntry> fundamental_box_classes(int n) {
    Coweight rho(n, std::vector<long>(static_cast<size_t>(n - 1), 1));
    AffineElt top = lambda_hat(rho).m_hat;

    std::set<AffineElt> seen;
    std::queue<AffineElt> frontier;
    seen.insert(top);
    frontier.push(top);
    while (!frontier.empty()) {
        AffineElt w = frontier.front();
        frontier.pop();
        for (int i : w.left_descents()) {
            AffineElt w2 = AffineElt::simple(n, i) * w;
            if (seen.insert(w2).second) frontier.push(w2);
        }
    }

    std::vector<BoxEntry> out;
    for (const AffineElt& w : seen) {
        if (!w.is_grassmannian()) continue;
        BoxEntry e;
        e.m = w;
        e.lambda = coset_coweight(w);
        e.length = w.length();
        e.schubert_h = affine_schubert(e.lambda).schubert_h;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const BoxEntry& a, const BoxEntry& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.lambda.coords() < b.lambda.coords();
    });
    for (size_t k = 0; k < out.size(); ++k) {
        if (out[k].length < 2) continue;
        for (size_t a = 0; a < out.size() && out[k].factor_a < 0; ++a) {
            if (out[a].length < 1 || out[a].length >= out[k].length) continue;
            for (size_t b = a; b < out.size(); ++b) {
                if (out[b].length < 1) continue;
                if (out[a].length + out[b].length != out[k].length) continue;
                if (pontryagin_product(out[a].schubert_h, out[b].schubert_h) ==
                    out[k].schubert_h) {
                    out[k].factor_a = static_cast<int>(a);
                    out[k].factor_b = static_cast<int>(b);
                    break;
                }
            }
        }
    }
    return out;
}

long exact_rank(std::vector<std::vector<Rat>> rows) {
    long rank = 0;
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rat f = rows[r][c] / rows[pivot_row][c];
            for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<Coweight> enumerate_coweights_by_length(int n, long max_len,
                                                    bool coroot_only) {
    // l(m^lambda) >= l(t^lambda) - l(w0), and l(t^lambda) >= 2*max_i|c_i|
    // (combine |[1..i]|+|[1..i-1]| >= |c_i| with |[i..n-1]|+|[i+1..n-1]| >=
    // |c_i| over the interval sums), so every candidate lies in the box
    // max|c_i| <= budget/2.
    long budget = max_len + binom2(n);
    long R = budget / 2;
    std::vector<std::pair<long, Coweight>> found;
    std::vector<long> coords(static_cast<size_t>(n - 1), -R);
    bool done = false;
    while (!done) {
        long tl = translation_length(n, coords);
        if (tl <= budget) {
            Coweight lam(n, coords);
            if (!coroot_only || lam.in_coroot_lattice()) {
                long len = m_min(lam).length();
                if (len <= max_len) found.emplace_back(len, lam);
            }
        }
        size_t pos = 0;
        while (pos < coords.size()) {
            if (coords[pos] < R) {
                ++coords[pos];
                break;
            }
            coords[pos] = -R;
            ++pos;
        }
        if (pos == coords.size()) done = true;
    }
    std::sort(found.begin(), found.end(),
              [](const std::pair<long, Coweight>& a, const std::pair<long, Coweight>& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second.coords() < b.second.coords();
              });
    std::vector<Coweight> out;
    out.reserve(found.size());
    for (auto& p : found) out.push_back(std::move(p.second));
    return out;
}

BottReport bott_basis_check(int n, int max_len) {
    BottReport rep;
    rep.class_counts.assign(static_cast<size_t>(max_len + 1), 0);
    rep.monomial_counts.assign(static_cast<size_t>(max_len + 1), 0);
    rep.ranks.assign(static_cast<size_t>(max_len + 1), 0);

    std::vector<Coweight> lams = enumerate_coweights_by_length(n, max_len, true);
    std::vector<std::vector<Coweight>> by_len(static_cast<size_t>(max_len + 1));
    for (const Coweight& lam : lams)
        by_len[static_cast<size_t>(m_min(lam).length())].push_back(lam);

    RingPtr h = make_h_ring(n);
    rep.ok = true;
    for (int d = 0; d <= max_len; ++d) {
        // Monomials h^e with sum i*e_i = d.
        std::vector<Mono> basis;
        Mono e(static_cast<size_t>(n - 1), 0);
        std::function<void(int, int)> gen = [&](int i, int rem) {
            if (i == n - 1) {
                if (rem == 0) basis.push_back(e);
                return;
            }
            for (int k = 0; k * (i + 1) <= rem; ++k) {
                e[static_cast<size_t>(i)] = k;
                gen(i + 1, rem - k * (i + 1));
            }
            e[static_cast<size_t>(i)] = 0;
        };
        gen(0, d);
        rep.monomial_counts[static_cast<size_t>(d)] = static_cast<long>(basis.size());
        std::map<Mono, size_t, MonoLess> col;
        for (size_t k = 0; k < basis.size(); ++k) col[basis[k]] = k;

        std::vector<std::vector<Rat>> rows;
        for (const Coweight& lam : by_len[static_cast<size_t>(d)]) {
            Poly s = affine_schubert(lam).schubert_h;
            std::vector<Rat> row(basis.size(), Rat(0));
            for (const auto& [mono, coeff] : s.terms()) {
                auto itc = col.find(mono);
                if (itc == col.end()) {
                    rep.ok = false;  // wrong graded piece
                    continue;
                }
                row[itc->second] = coeff;
            }
            rows.push_back(std::move(row));
        }
        rep.class_counts[static_cast<size_t>(d)] = static_cast<long>(rows.size());
        rep.ranks[static_cast<size_t>(d)] = exact_rank(std::move(rows));
        if (rep.class_counts[static_cast<size_t>(d)] !=
                rep.monomial_counts[static_cast<size_t>(d)] ||
            rep.ranks[static_cast<size_t>(d)] !=
                rep.class_counts[static_cast<size_t>(d)])
            rep.ok = false;
    }
    return rep;
}

}  // namespace loopschub
