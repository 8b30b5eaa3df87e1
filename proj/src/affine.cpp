#include "loopschub/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loopschub {

namespace {

long math_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long floor_div(long a, long n) { return (a - math_mod(a, n)) / n; }

}  // namespace

Coweight::Coweight(int n, std::vector<long> coords) : n_(n), c_(std::move(coords)) {
    if (n < 2 || static_cast<int>(c_.size()) != n - 1)
        throw std::invalid_argument("coweight needs n-1 coordinates");
}

Coweight Coweight::zero(int n) { return Coweight(n, std::vector<long>(n - 1, 0)); }

Coweight Coweight::fundamental(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("fundamental index out of range");
    std::vector<long> c(n - 1, 0);
    c[i - 1] = 1;
    return Coweight(n, std::move(c));
}

Coweight Coweight::simple_coroot(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("coroot index out of range");
    std::vector<long> c(n - 1, 0);
    c[i - 1] = 2;
    if (i - 2 >= 0) c[i - 2] = -1;
    if (i < n - 1) c[i] = -1;
    return Coweight(n, std::move(c));
}

Coweight Coweight::from_alpha(int n, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != n - 1)
        throw std::invalid_argument("alpha coords need n-1 entries");
    std::vector<long> lift(n);
    for (int j = 1; j <= n; ++j) {
        long prev = (j >= 2) ? a[j - 2] : 0;
        long cur = (j <= n - 1) ? a[j - 1] : 0;
        lift[j - 1] = cur - prev;
    }
    return from_lift(lift);
}

Coweight Coweight::from_lift(const std::vector<long>& lift) {
    int n = static_cast<int>(lift.size());
    if (n < 2) throw std::invalid_argument("lift too short");
    std::vector<long> c(n - 1);
    for (int i = 0; i < n - 1; ++i) c[i] = lift[i] - lift[i + 1];
    return Coweight(n, std::move(c));
}

std::vector<long> Coweight::lift() const {
    std::vector<long> l(n_, 0);
    for (int j = n_ - 2; j >= 0; --j) l[j] = l[j + 1] + c_[j];
    long s = std::accumulate(l.begin(), l.end(), 0L);
    long shift = floor_div(s, n_);
    for (long& v : l) v -= shift;
    return l;
}

bool Coweight::is_dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](long v) { return v >= 0; });
}

bool Coweight::is_antidominant() const {
    return std::all_of(c_.begin(), c_.end(), [](long v) { return v <= 0; });
}

bool Coweight::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long v) { return v == 0; });
}

bool Coweight::in_coroot_lattice() const {
    auto l = lift();
    return std::accumulate(l.begin(), l.end(), 0L) == 0;
}

std::vector<long> Coweight::alpha_coords() const {
    if (!in_coroot_lattice()) throw std::domain_error("not in the coroot lattice");
    auto l = lift();
    std::vector<long> a(n_ - 1);
    long run = 0;
    for (int i = 0; i < n_ - 1; ++i) {
        run += l[i];
        a[i] = run;
    }
    return a;
}

Coweight Coweight::operator+(const Coweight& o) const {
    if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
    std::vector<long> c(c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Coweight(n_, std::move(c));
}

Coweight Coweight::operator-(const Coweight& o) const { return *this + (-o); }

Coweight Coweight::operator-() const {
    std::vector<long> c(c_);
    for (long& v : c) v = -v;
    return Coweight(n_, std::move(c));
}

std::string Coweight::to_string() const {
    std::string s = "w:";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s;
}

Coweight parse_coweight(int n, const std::string& text) {
    if (text.size() < 2 || text[1] != ':' || (text[0] != 'w' && text[0] != 'a'))
        throw std::invalid_argument("coweight must look like w:1,0 or a:1,0");
    std::vector<long> vals;
    std::string body = text.substr(2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad coweight entry: " + item);
        vals.push_back(v);
    }
    if (static_cast<int>(vals.size()) != n - 1)
        throw std::invalid_argument("coweight needs n-1 entries");
    if (text[0] == 'a') return Coweight::from_alpha(n, vals);
    return Coweight(n, std::move(vals));
}

AffineElt::AffineElt(std::vector<long> window) : win_(std::move(window)) {
    int n = static_cast<int>(win_.size());
    if (n < 2) throw std::invalid_argument("window too short");
    std::set<long> residues;
    for (long v : win_) residues.insert(math_mod(v, n));
    if (static_cast<int>(residues.size()) != n)
        throw std::invalid_argument("window residues collide");
    long ch = charge();
    if (math_mod(ch, n) != 0) throw std::invalid_argument("charge not divisible by n");
    long shift = floor_div(ch / n, n);
    if (shift != 0)
        for (long& v : win_) v -= n * shift;
}

AffineElt AffineElt::identity(int n) {
    std::vector<long> w(n);
    std::iota(w.begin(), w.end(), 1L);
    return AffineElt(std::move(w));
}

AffineElt AffineElt::simple(int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("simple index out of range");
    AffineElt p = identity(n);
    if (i >= 1) {
        std::swap(p.win_[i - 1], p.win_[i]);
    } else {
        p.win_[0] = 0;
        p.win_[n - 1] = n + 1;
    }
    return p;
}

AffineElt AffineElt::sigma(int n) { return sigma_power(n, 1); }

AffineElt AffineElt::sigma_power(int n, long k) {
    std::vector<long> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 + k;
    return AffineElt(std::move(w));
}

AffineElt AffineElt::translation(const Coweight& lambda) {
    auto l = lambda.lift();
    int n = lambda.n();
    std::vector<long> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 + n * l[i];
    return AffineElt(std::move(w));
}

AffineElt AffineElt::from_perm(const Perm& w) {
    std::vector<long> v(w.window().begin(), w.window().end());
    return AffineElt(std::move(v));
}

AffineElt AffineElt::from_word(int n, long sigma_pow, const std::vector<int>& word) {
    AffineElt v = sigma_power(n, sigma_pow);
    for (int letter : word) v = v * simple(n, letter);
    return v;
}

long AffineElt::charge() const {
    long m = n();
    return std::accumulate(win_.begin(), win_.end(), 0L) - m * (m + 1) / 2;
}

long AffineElt::eval(long i) const {
    long m = n();
    long i0 = math_mod(i - 1, m) + 1;
    return win_[i0 - 1] + (i - i0);
}

long AffineElt::inv_eval(long j) const {
    long m = n();
    for (long i0 = 1; i0 <= m; ++i0) {
        long d = j - win_[i0 - 1];
        if (math_mod(d, m) == 0) return i0 + d;
    }
    throw std::logic_error("inv_eval: unreachable");
}

AffineElt AffineElt::operator*(const AffineElt& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch");
    std::vector<long> w(win_.size());
    for (int i = 0; i < n(); ++i) w[i] = eval(o.win_[i]);
    return AffineElt(std::move(w));
}

AffineElt AffineElt::inverse() const {
    std::vector<long> w(win_.size());
    for (int j = 1; j <= n(); ++j) w[j - 1] = inv_eval(j);
    return AffineElt(std::move(w));
}

long AffineElt::length() const {
    long m = n();
    long total = 0;
    for (size_t i = 0; i < win_.size(); ++i)
        for (size_t j = i + 1; j < win_.size(); ++j)
            total += std::labs(floor_div(win_[j] - win_[i], m));
    return total;
}

bool AffineElt::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (win_[i] != i + 1) return false;
    return true;
}

std::vector<int> AffineElt::left_descents() const {
    std::vector<int> d;
    for (int i = 0; i < n(); ++i)
        if (inv_eval(i) > inv_eval(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> AffineElt::right_descents() const {
    std::vector<int> d;
    if (win_[n() - 1] - n() > win_[0]) d.push_back(0);
    for (int i = 1; i < n(); ++i)
        if (win_[i - 1] > win_[i]) d.push_back(i);
    return d;
}

SigmaDecomposition AffineElt::sigma_decompose() const {
    long q = charge() / n();
    std::vector<long> w(win_);
    for (long& v : w) v -= q;
    return SigmaDecomposition{q, AffineElt(std::move(w))};
}

std::vector<int> AffineElt::reduced_word() const {
    AffineElt v = sigma_decompose().hat;
    std::vector<int> word;
    while (!v.is_identity()) {
        int i = v.left_descents().front();
        word.push_back(i);
        v = simple(n(), i) * v;
    }
    return word;
}

AffineElt AffineElt::min_coset_rep() const {
    AffineElt v = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < n(); ++i) {
            if (v.win_[i - 1] > v.win_[i]) {
                std::swap(v.win_[i - 1], v.win_[i]);
                moved = true;
            }
        }
    }
    return v;
}

bool AffineElt::is_grassmannian() const {
    return std::is_sorted(win_.begin(), win_.end()) &&
           std::adjacent_find(win_.begin(), win_.end()) == win_.end();
}

std::string AffineElt::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < win_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(win_[i]);
    }
    return s + "]";
}

AffineElt m_min(const Coweight& lambda) {
    return AffineElt::translation(lambda).min_coset_rep();
}

AffineElt t_hat(const Coweight& mu) {
    AffineElt t = AffineElt::translation(mu);
    long q = t.charge() / t.n();
    return t * AffineElt::sigma_power(t.n(), -q);
}

LambdaHat lambda_hat(const Coweight& lambda) {
    int n = lambda.n();
    AffineElt m = m_min(lambda);
    auto sd = m.sigma_decompose();
    AffineElt g = sd.hat;
    if (!g.is_grassmannian()) g = g.min_coset_rep();
    std::vector<long> l(n);
    for (long x : g.window()) {
        long r = math_mod(x - 1, n) + 1;
        l[r - 1] = (x - r) / n;
    }
    return LambdaHat{Coweight::from_lift(l), sd.sigma_pow, g};
}

Coweight shimozono_lambda_hat(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("index out of range");
    int k = std::min(i, n - i);
    std::vector<long> a(n - 1, 0);
    a[i - 1] += k;
    for (int j = 1; j <= k - 1; ++j) {
        if (i - j >= 1) a[i - j - 1] += k - j;
        if (i + j <= n - 1) a[i + j - 1] += k - j;
    }
    return Coweight::from_alpha(n, a);
}

std::vector<Perm> group_blocks(int n, const std::vector<int>& word) {
    if (word.empty() || word.back() != 0)
        throw std::invalid_argument("word must end in the letter 0");
    std::vector<Perm> blocks;
    std::vector<int> run;
    for (int letter : word) {
        if (letter == 0) {
            blocks.push_back(Perm::from_word(n, run));
            run.clear();
        } else {
            run.push_back(letter);
        }
    }
    return blocks;
}

bool weak_leq_right(const AffineElt& x, const AffineElt& y) {
    return x.length() + (x.inverse() * y).length() == y.length();
}

bool weak_leq_left(const AffineElt& x, const AffineElt& y) {
    return x.length() + (y * x.inverse()).length() == y.length();
}

AffineElt parse_affine(int n, const std::string& text) {
    size_t a = text.find_first_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty affine element");
    if (text[a] == '[') {
        size_t b = text.find(']', a);
        if (b == std::string::npos) throw std::invalid_argument("unterminated window");
        std::vector<long> w;
        std::stringstream ss(text.substr(a + 1, b - a - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad window entry: " + item);
            w.push_back(v);
        }
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("window needs n entries");
        return AffineElt(std::move(w));
    }
    long sigma_pow = 0;
    std::vector<int> word;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok == "id" || tok == "e") continue;
        if (tok.rfind("sigma", 0) == 0) {
            if (tok == "sigma") {
                sigma_pow += 1;
            } else if (tok.size() > 6 && tok[5] == '^') {
                sigma_pow += std::stol(tok.substr(6));
            } else {
                throw std::invalid_argument("bad token: " + tok);
            }
            if (!word.empty())
                throw std::invalid_argument("sigma factors must precede the letters");
        } else if (tok.size() >= 2 && tok[0] == 's') {
            size_t pos = 0;
            int i = static_cast<int>(std::stol(tok.substr(1), &pos));
            if (pos != tok.size() - 1 || i < 0 || i > n - 1)
                throw std::invalid_argument("bad letter: " + tok);
            word.push_back(i);
        } else {
            throw std::invalid_argument("bad token: " + tok);
        }
    }
    return AffineElt::from_word(n, sigma_pow, word);
}

}  // namespace loopschub
