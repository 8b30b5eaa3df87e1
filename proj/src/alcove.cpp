#include "loopschub/alcove.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace loopschub {

namespace {

Matrix mat_identity(int n) {
    Matrix m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix c(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Vec mat_vec(const Matrix& a, const Vec& v) {
    size_t n = a.size();
    Vec r(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_of(const std::vector<long>& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

// Gauss-Jordan inverse together with the determinant; exact pivoting.
std::pair<Matrix, Rat> invert_with_det(Matrix a) {
    int n = static_cast<int>(a.size());
    Matrix inv = mat_identity(n);
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return {Matrix(), Rat(0)};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        Rat d = a[col][col];
        det *= d;
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return {inv, det};
}

bool all_nonneg(const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [](long c) { return c >= 0; });
}

bool all_nonpos(const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [](long c) { return c <= 0; });
}

long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("coordinate out of range");
    return z.get_si();
}

}  // namespace

RootSystem::RootSystem(CartanMatrix a) : a_(std::move(a)) {
    rank_ = static_cast<int>(a_.size());
    if (rank_ == 0) throw std::invalid_argument("empty Cartan matrix");
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(a_[i].size()) != rank_)
            throw std::invalid_argument("Cartan matrix is not square");
        if (a_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
        }
    }

    // Reflection closure of the simple roots, tracking coroots alongside.
    std::set<std::vector<long>> seen;
    std::deque<Root> queue;
    std::vector<Root> all;
    for (int i = 0; i < rank_; ++i) {
        Root r;
        r.alpha.assign(rank_, 0);
        r.coroot.assign(rank_, 0);
        r.alpha[i] = r.coroot[i] = 1;
        seen.insert(r.alpha);
        queue.push_back(r);
        all.push_back(r);
    }
    const size_t root_cap = 600;  // past E8's 240 roots: certainly not finite type
    while (!queue.empty()) {
        Root r = queue.front();
        queue.pop_front();
        for (int j = 0; j < rank_; ++j) {
            long pa = 0, pc = 0;  // <alpha, alpha_j-vee> and <alpha_j, alpha-vee>
            for (int i = 0; i < rank_; ++i) {
                pa += r.alpha[i] * a_[i][j];
                pc += a_[j][i] * r.coroot[i];
            }
            Root s = r;
            s.alpha[j] -= pa;
            s.coroot[j] -= pc;
            if (seen.insert(s.alpha).second) {
                queue.push_back(s);
                all.push_back(s);
                if (all.size() > root_cap)
                    throw std::invalid_argument("Cartan matrix is not of finite type");
            }
        }
    }
    for (const Root& r : all) {
        if (all_nonneg(r.alpha))
            pos_.push_back(r);
        else if (!all_nonpos(r.alpha))
            throw std::invalid_argument("Cartan matrix is not of finite type");
    }

    // Highest root: the unique coordinatewise-maximal positive root.
    theta_ = pos_.size();
    for (size_t c = 0; c < pos_.size(); ++c) {
        bool top = true;
        for (const Root& b : pos_)
            for (int i = 0; i < rank_; ++i)
                if (b.alpha[i] > pos_[c].alpha[i]) {
                    top = false;
                    break;
                }
        if (top) {
            theta_ = c;
            break;
        }
    }
    if (theta_ == pos_.size())
        throw std::invalid_argument("Cartan matrix is not irreducible");

    Matrix rat(rank_, Vec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) rat[i][j] = Rat(a_[i][j]);
    auto [inv, det] = invert_with_det(rat);
    if (det == 0) throw std::invalid_argument("singular Cartan matrix");
    inv_cartan_ = inv;
    Rat ad = abs(det);
    det_ = to_long(ad.get_num());
}

Rat RootSystem::pair(const Root& alpha, const Vec& v) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) s += Rat(alpha.alpha[i]) * v[i];
    return s;
}

Vec RootSystem::coroot_vec(const Root& alpha) const {
    // <alpha_i, alpha-vee> = sum_j coroot[j] A[i][j].
    Vec r(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) r[i] += Rat(a_[i][j] * alpha.coroot[j]);
    return r;
}

Vec RootSystem::barycenter() const {
    const Root& th = highest_root();
    Vec p(rank_);
    for (int i = 0; i < rank_; ++i) p[i] = Rat(1, (rank_ + 1) * th.alpha[i]);
    return p;
}

bool RootSystem::in_coroot_lattice(const Vec& v) const {
    Vec d = mat_vec(inv_cartan_, v);
    for (const Rat& q : d)
        if (q.get_den() != 1) return false;
    return true;
}

bool RootSystem::in_coweight_lattice(const Vec& v) const {
    for (const Rat& q : v)
        if (q.get_den() != 1) return false;
    return true;
}

AffXf identity_xf(int rank) { return AffXf{mat_identity(rank), Vec(rank, 0)}; }

AffXf compose(const AffXf& outer, const AffXf& inner) {
    return AffXf{mat_mul(outer.m, inner.m),
                 vec_add(mat_vec(outer.m, inner.gamma), outer.gamma)};
}

AffXf inverse_xf(const AffXf& x) {
    auto [inv, det] = invert_with_det(x.m);
    if (det == 0) throw std::invalid_argument("singular transformation");
    Vec g = mat_vec(inv, x.gamma);
    for (Rat& q : g) q = -q;
    return AffXf{inv, g};
}

Vec apply_xf(const AffXf& x, const Vec& v) { return vec_add(mat_vec(x.m, v), x.gamma); }

AffXf translation_xf(const Vec& lambda) {
    return AffXf{mat_identity(static_cast<int>(lambda.size())), lambda};
}

AffXf reflection_xf(const RootSystem& rs, const Root& alpha) {
    int n = rs.rank();
    Vec cv = rs.coroot_vec(alpha);
    Matrix m = mat_identity(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) m[k][j] -= cv[k] * Rat(alpha.alpha[j]);
    return AffXf{m, Vec(n, 0)};
}

AffXf simple_xf(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index");
    Root r;
    r.alpha.assign(rs.rank(), 0);
    r.coroot.assign(rs.rank(), 0);
    r.alpha[i - 1] = r.coroot[i - 1] = 1;
    return reflection_xf(rs, r);
}

AffXf word_to_xf(const RootSystem& rs, const std::vector<int>& word) {
    AffXf x = identity_xf(rs.rank());
    for (int letter : word) {
        AffXf s;
        if (letter == 0) {
            s = reflection_xf(rs, rs.highest_root());
            s.gamma = rs.coroot_vec(rs.highest_root());
        } else {
            s = simple_xf(rs, letter);
        }
        x = compose(x, s);
    }
    return x;
}

std::vector<long> floor_vec(const Vec& v) {
    std::vector<long> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = to_long(rat_floor(v[i]));
    return r;
}

long length_by_separation(const RootSystem& rs, const AffXf& x) {
    Vec q = apply_xf(x, rs.barycenter());
    long len = 0;
    for (const Root& a : rs.positive_roots()) {
        long f = to_long(rat_floor(rs.pair(a, q)));
        len += f >= 0 ? f : -f;
    }
    return len;
}

bool weak_leq_right(const RootSystem& rs, const AffXf& x, const AffXf& y) {
    AffXf z = compose(inverse_xf(x), y);
    return length_by_separation(rs, x) + length_by_separation(rs, z) ==
           length_by_separation(rs, y);
}

bool weak_leq_left(const RootSystem& rs, const AffXf& x, const AffXf& y) {
    AffXf z = compose(y, inverse_xf(x));
    return length_by_separation(rs, x) + length_by_separation(rs, z) ==
           length_by_separation(rs, y);
}

std::vector<AffXf> finite_weyl(const RootSystem& rs) {
    std::vector<AffXf> gens;
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_xf(rs, i));
    std::set<Matrix> seen;
    std::deque<AffXf> queue;
    std::vector<AffXf> out;
    AffXf id = identity_xf(rs.rank());
    seen.insert(id.m);
    queue.push_back(id);
    out.push_back(id);
    while (!queue.empty()) {
        AffXf w = queue.front();
        queue.pop_front();
        for (const AffXf& s : gens) {
            AffXf y = compose(w, s);
            if (seen.insert(y.m).second) {
                queue.push_back(y);
                out.push_back(y);
            }
        }
    }
    return out;
}

std::vector<size_t> inversion_set(const RootSystem& rs, const AffXf& w) {
    Vec q = apply_xf(inverse_xf(w), rs.barycenter());
    std::vector<size_t> inv;
    const auto& pos = rs.positive_roots();
    for (size_t k = 0; k < pos.size(); ++k)
        if (rs.pair(pos[k], q) < 0) inv.push_back(k);
    return inv;
}

std::vector<int> descent_set(const RootSystem& rs, const AffXf& w) {
    Vec q = apply_xf(inverse_xf(w), rs.barycenter());
    std::vector<int> d;
    for (int i = 1; i <= rs.rank(); ++i)
        if (q[i - 1] < 0) d.push_back(i);
    return d;
}

std::vector<AffXf> affine_alcoves(const RootSystem& rs, long max_len) {
    std::vector<AffXf> gens;
    gens.push_back(word_to_xf(rs, {0}));
    for (int i = 1; i <= rs.rank(); ++i) gens.push_back(simple_xf(rs, i));
    Vec p = rs.barycenter();
    std::set<Vec> seen;
    std::vector<AffXf> out;
    std::vector<AffXf> layer{identity_xf(rs.rank())};
    seen.insert(p);
    out.push_back(layer[0]);
    for (long depth = 0; depth < max_len && !layer.empty(); ++depth) {
        std::vector<AffXf> next;
        for (const AffXf& x : layer)
            for (const AffXf& s : gens) {
                AffXf y = compose(x, s);
                if (seen.insert(apply_xf(y, p)).second) {
                    next.push_back(y);
                    out.push_back(y);
                }
            }
        layer = std::move(next);
    }
    return out;
}

std::vector<AffXf> sigma_group(const RootSystem& rs) {
    Vec p = rs.barycenter();
    std::vector<AffXf> out;
    for (const AffXf& w : finite_weyl(rs)) {
        Vec nu = vec_sub(p, apply_xf(w, p));
        if (!rs.in_coweight_lattice(nu)) continue;
        out.push_back(AffXf{w.m, nu});
    }
    return out;
}

AffXf t_hat_xf(const RootSystem& rs, const std::vector<long>& mu) {
    if (static_cast<int>(mu.size()) != rs.rank())
        throw std::invalid_argument("coweight rank mismatch");
    Vec mv = vec_of(mu);
    const AffXf* found = nullptr;
    std::vector<AffXf> sigma = sigma_group(rs);
    for (const AffXf& s : sigma) {
        if (!rs.in_coroot_lattice(vec_sub(mv, s.gamma))) continue;
        if (found) throw std::logic_error("ambiguous alcove-stabilizer coset");
        found = &s;
    }
    if (!found) throw std::logic_error("no alcove-stabilizer representative");
    return compose(translation_xf(mv), inverse_xf(*found));
}

std::vector<long> box_membership(const RootSystem& rs, const AffXf& y) {
    return floor_vec(apply_xf(y, rs.barycenter()));
}

TranslationFactor max_antidominant_factor(const RootSystem& rs, const AffXf& x) {
    Vec v = apply_xf(inverse_xf(x), rs.barycenter());
    for (const Rat& c : v)
        if (c <= 0)
            throw std::domain_error("element is not minimal in its finite-Weyl coset");
    TranslationFactor f;
    f.lambda = floor_vec(v);
    f.y = compose(x, translation_xf(vec_of(f.lambda)));
    Vec neg(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) neg[i] = Rat(-f.lambda[i]);
    f.length_x = length_by_separation(rs, x);
    f.length_y = length_by_separation(rs, f.y);
    f.length_t = length_by_separation(rs, translation_xf(neg));
    if (f.length_x != f.length_y + f.length_t)
        throw std::logic_error("translation factor is not length-additive");
    return f;
}

std::vector<long> closed_form_lambda(const RootSystem& rs, const AffXf& w,
                                     const std::vector<long>& mu) {
    if (static_cast<int>(mu.size()) != rs.rank())
        throw std::invalid_argument("coweight rank mismatch");
    std::vector<long> lambda = mu;
    for (int i : descent_set(rs, w)) lambda[i - 1] -= 1;
    return lambda;
}

CartanMatrix cartan_matrix(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("bad type name: " + type);
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    int n = 0;
    for (size_t i = 1; i < type.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(type[i])))
            throw std::invalid_argument("bad type name: " + type);
        n = n * 10 + (type[i] - '0');
    }
    auto chain = [](int r) {
        CartanMatrix a(r, std::vector<long>(r, 0));
        for (int i = 0; i < r; ++i) {
            a[i][i] = 2;
            if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    switch (fam) {
        case 'A': {
            if (n < 1) throw std::invalid_argument("rank out of range for type A");
            return chain(n);
        }
        case 'B': {
            if (n < 2) throw std::invalid_argument("rank out of range for type B");
            CartanMatrix a = chain(n);
            a[n - 2][n - 1] = -2;
            return a;
        }
        case 'C': {
            if (n < 2) throw std::invalid_argument("rank out of range for type C");
            CartanMatrix a = chain(n);
            a[n - 1][n - 2] = -2;
            return a;
        }
        case 'D': {
            if (n < 3) throw std::invalid_argument("rank out of range for type D");
            CartanMatrix a = chain(n);
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            return a;
        }
        case 'E': {
            if (n < 6 || n > 8) throw std::invalid_argument("rank out of range for type E");
            CartanMatrix a(n, std::vector<long>(n, 0));
            for (int i = 0; i < n; ++i) a[i][i] = 2;
            auto link = [&a](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (n >= 7) link(6, 7);
            if (n == 8) link(7, 8);
            link(2, 4);
            return a;
        }
        case 'F': {
            if (n != 4) throw std::invalid_argument("rank out of range for type F");
            CartanMatrix a = chain(4);
            a[1][2] = -2;
            return a;
        }
        case 'G': {
            if (n != 2) throw std::invalid_argument("rank out of range for type G");
            return CartanMatrix{{2, -1}, {-3, 2}};
        }
        default:
            throw std::invalid_argument("bad type name: " + type);
    }
}

}  // namespace loopschub
