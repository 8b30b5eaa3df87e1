#include "loopschub/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace loopschub {

namespace {

Ring base_ring(std::vector<std::string> names, std::vector<int> dims, int y_count,
               int x_count) {
    Ring r;
    r.vars = std::move(names);
    r.dims = std::move(dims);
    r.y_count = y_count;
    r.x_count = x_count;
    return r;
}

}  // namespace

RingPtr make_xy_ring(int n) {
    if (n < 1) throw std::invalid_argument("ring needs n >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<Ring>(base_ring(std::move(names), std::vector<int>(2 * n, 2), n, n));
}

RingPtr make_xt_ring(int n_y, int m) {
    if (n_y < 1 || m < 1) throw std::invalid_argument("ring needs n,m >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= n_y; ++i) names.push_back("y" + std::to_string(i));
    for (int k = 1; k <= m; ++k) names.push_back("xt" + std::to_string(k));
    return std::make_shared<Ring>(
        base_ring(std::move(names), std::vector<int>(n_y + m, 2), n_y, m));
}

RingPtr make_h_ring(int n) {
    if (n < 2) throw std::invalid_argument("h-ring needs n >= 2");
    std::vector<std::string> names;
    std::vector<int> dims;
    for (int i = 1; i <= n - 1; ++i) {
        names.push_back("h" + std::to_string(i));
        dims.push_back(2 * i);
    }
    return std::make_shared<Ring>(base_ring(std::move(names), std::move(dims), 0, 0));
}

RingPtr make_ring_from_names(const std::vector<std::string>& names) {
    std::vector<int> dims;
    int y_count = 0, x_count = 0;
    for (const auto& name : names) {
        if (name.empty()) throw std::invalid_argument("empty variable name");
        if (name[0] == 'h') {
            dims.push_back(2 * std::stoi(name.substr(1)));
        } else {
            dims.push_back(2);
            if (name[0] == 'y')
                ++y_count;
            else
                ++x_count;
        }
    }
    return std::make_shared<Ring>(base_ring(names, std::move(dims), y_count, x_count));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars);
}

bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Mono mono_quotient(const Mono& m, const Mono& d) {
    Mono q(m);
    for (size_t i = 0; i < q.size(); ++i) q[i] -= d[i];
    return q;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono l(a);
    for (size_t i = 0; i < l.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
    Poly p(std::move(ring));
    p.add_term(Mono(p.ring_->arity(), 0), c);
    return p;
}

Poly Poly::var(RingPtr ring, int idx, int power) {
    Poly p(std::move(ring));
    if (idx < 0 || idx >= p.ring_->arity()) throw std::invalid_argument("variable index");
    Mono m(p.ring_->arity(), 0);
    m[idx] = power;
    p.add_term(m, 1);
    return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(m.size()) != ring_->arity())
        throw std::invalid_argument("exponent arity mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::add_mul_term(const Poly& g, const Mono& t, const Rat& c) {
    if (!same_ring(ring_, g.ring_)) throw std::invalid_argument("ring mismatch");
    if (c == 0) return;
    for (const auto& [gm, gc] : g.terms_) {
        Mono m(gm);
        for (size_t i = 0; i < m.size(); ++i) m[i] += t[i];
        add_term(m, gc * c);
    }
}

const std::pair<const Mono, Rat>& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.rbegin();
}

std::pair<Mono, Rat> Poly::pop_leading() {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    auto it = std::prev(terms_.end());
    std::pair<Mono, Rat> out(it->first, it->second);
    terms_.erase(it);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Rat nc = -c;
        r.terms_.emplace(m, nc);
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
    Poly r(ring_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Mono m(m1);
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            Rat c = c1 * c2;
            r.add_term(m, c);
        }
    }
    return r;
}

Poly Poly::scale(const Rat& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) {
        Rat nc = co * c;
        r.terms_.emplace(m, nc);
    }
    return r;
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [m1, c1] : terms_) {
        Mono mm(m1);
        for (size_t i = 0; i < mm.size(); ++i) mm[i] += m[i];
        Rat nc = c1 * c;
        r.terms_.emplace(std::move(mm), nc);
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Poly Poly::substitute_zero(const std::vector<int>& var_indices) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int idx : var_indices)
            if (m[idx] != 0) {
                keep = false;
                break;
            }
        if (keep) r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::permute_vars(const Perm& w, int block_begin) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        Mono mm(m);
        for (int i = 1; i <= w.n(); ++i) mm[block_begin + w(i) - 1] = m[block_begin + i - 1];
        r.add_term(mm, c);
    }
    return r;
}

Poly Poly::extract_coefficient(const std::vector<std::pair<int, int>>& fixed) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        bool match = true;
        for (const auto& [idx, e] : fixed)
            if (m[idx] != e) {
                match = false;
                break;
            }
        if (!match) continue;
        Mono mm(m);
        for (const auto& [idx, e] : fixed) {
            (void)e;
            mm[idx] = 0;
        }
        r.add_term(mm, c);
    }
    return r;
}

int Poly::degree_in(int var_idx) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m[var_idx]);
    }
    return d;
}

std::optional<long> Poly::dim() const {
    std::optional<long> result;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long d = 0;
        for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * ring_->dims[i];
        if (!result)
            result = d;
        else if (*result != d)
            return std::nullopt;
    }
    return result ? result : std::optional<long>(0);
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> factors;
        bool mono_trivial = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            mono_trivial = false;
            std::string f = ring_->vars[i];
            if (m[i] > 1) f += "^" + std::to_string(m[i]);
            factors.push_back(f);
        }
        if (mono_trivial || a != 1) factors.insert(factors.begin(), rat_to_string(a));
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

Poly Poly::from_text(RingPtr ring, const std::string& text) {
    Poly p(ring);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
    while (pos < s.size()) {
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("empty term");
        Rat coeff = neg ? -1 : 1;
        Mono m(ring->arity(), 0);
        std::stringstream ss(term);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor.empty()) throw std::invalid_argument("empty factor");
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                coeff *= rat_from_string(factor);
                continue;
            }
            std::string name = factor;
            int power = 1;
            size_t caret = factor.find('^');
            if (caret != std::string::npos) {
                name = factor.substr(0, caret);
                power = std::stoi(factor.substr(caret + 1));
            }
            auto it = std::find(ring->vars.begin(), ring->vars.end(), name);
            if (it == ring->vars.end())
                throw std::invalid_argument("unknown variable: " + name);
            m[it - ring->vars.begin()] += power;
        }
        p.add_term(m, coeff);
        if (end < s.size()) neg = s[end] == '-';
        pos = end + 1;
        if (end == s.size()) break;
        if (pos >= s.size()) throw std::invalid_argument("dangling sign");
    }
    return p;
}

std::string Poly::to_json() const {
    nlohmann::json j;
    j["vars"] = ring_->vars;
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        nlohmann::json t;
        t["exp"] = it->first;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

Poly Poly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RingPtr ring = make_ring_from_names(j.at("vars").get<std::vector<std::string>>());
    Poly p(ring);
    for (const auto& t : j.at("terms")) {
        Mono m = t.at("exp").get<Mono>();
        Int num(t.at("num").get<std::string>());
        Int den(t.at("den").get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat c(num, den);
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

Poly elementary_sym(const RingPtr& ring, const std::vector<int>& idx, int d) {
    if (d == 0) return Poly::one(ring);
    if (d < 0 || d > static_cast<int>(idx.size())) return Poly::zero(ring);
    Poly r(ring);
    std::vector<int> pick(d);
    // Iterate over d-subsets of idx.
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) c[i] = i;
    int k = static_cast<int>(idx.size());
    while (true) {
        Mono m(ring->arity(), 0);
        for (int i = 0; i < d; ++i) m[idx[c[i]]] += 1;
        r.add_term(m, 1);
        int i = d - 1;
        while (i >= 0 && c[i] == k - d + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
    }
    return r;
}

Poly complete_sym(const RingPtr& ring, const std::vector<int>& idx, int d) {
    if (d == 0) return Poly::one(ring);
    if (d < 0 || idx.empty()) return Poly::zero(ring);
    // h_d(v1..vk) = sum_e v1^e h_{d-e}(v2..vk)
    std::vector<int> rest(idx.begin() + 1, idx.end());
    Poly r(ring);
    for (int e = 0; e <= d; ++e) {
        Poly tail = complete_sym(ring, rest, d - e);
        if (tail.is_zero()) continue;
        Mono m(ring->arity(), 0);
        m[idx[0]] = e;
        r = r + tail.mul_term(m, 1);
    }
    return r;
}

std::pair<Poly, Poly> divide(const Poly& f, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly q(f.ring()), rem(f.ring()), r = f;
    const auto& [dm, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (mono_divides(dm, rm)) {
            Mono t = mono_quotient(rm, dm);
            Rat c = rc / dc;
            q.add_term(t, c);
            r.add_mul_term(d, t, -c);
        } else {
            auto lead = r.pop_leading();
            rem.add_term(lead.first, lead.second);
        }
    }
    return {q, rem};
}

Poly divide_exact(const Poly& f, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly q(f.ring()), r = f;
    const auto& [dm, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (!mono_divides(dm, rm)) throw std::domain_error("division is not exact");
        Mono t = mono_quotient(rm, dm);
        Rat c = rc / dc;
        q.add_term(t, c);
        r.add_mul_term(d, t, -c);
    }
    return q;
}

}  // namespace loopschub
