#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopschub/perm.hpp"
#include "loopschub/rational.hpp"

namespace loopschub {

// Variable environment.  Variables are listed in ascending term-order
// significance: y-block first, then the x-block, so y1 < ... < yn < x1 < ...
// under the lex order used everywhere.
struct Ring {
    std::vector<std::string> vars;
    std::vector<int> dims;  // grading: dim(x_i) = dim(y_i) = 2, dim(h_i) = 2i
    int y_count = 0;        // y-block occupies indices [0, y_count)
    int x_count = 0;        // x-block occupies [y_count, y_count + x_count)

    int x_begin() const { return y_count; }
    int arity() const { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_xy_ring(int n);             // y1..yn, x1..xn
RingPtr make_xt_ring(int n_y, int m);    // y1..yn, xt1..xtm
RingPtr make_h_ring(int n);              // h1..h_{n-1}, dim(h_i) = 2i
RingPtr make_ring_from_names(const std::vector<std::string>& names);

bool same_ring(const RingPtr& a, const RingPtr& b);

using Mono = std::vector<int>;

// Pure lex: the last variable is the most significant.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        for (size_t k = a.size(); k-- > 0;)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

bool mono_divides(const Mono& d, const Mono& m);
Mono mono_quotient(const Mono& m, const Mono& d);
Mono mono_lcm(const Mono& a, const Mono& b);

class Poly {
  public:
    using TermMap = std::map<Mono, Rat, MonoLess>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rat& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    // 0-based variable index.
    static Poly var(RingPtr ring, int idx, int power = 1);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& m, const Rat& c);
    // In-place *this += c * t * g, without building an intermediate Poly.
    void add_mul_term(const Poly& g, const Mono& t, const Rat& c);
    const std::pair<const Mono, Rat>& leading() const;  // throws on zero
    // Remove and return the leading term; throws on zero.
    std::pair<Mono, Rat> pop_leading();

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(const Rat& c) const;
    Poly mul_term(const Mono& m, const Rat& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Set the listed variables (0-based indices) to zero.
    Poly substitute_zero(const std::vector<int>& var_indices) const;
    // Substitute v_{block+i-1} -> v_{block+w(i)-1} inside one variable block.
    Poly permute_vars(const Perm& w, int block_begin) const;

    // Terms whose exponents at the listed positions match exactly, with those
    // positions cleared.
    Poly extract_coefficient(const std::vector<std::pair<int, int>>& fixed) const;

    int degree_in(int var_idx) const;  // -1 for the zero polynomial
    // Homogeneous grading degree; nullopt if inhomogeneous, 0 for zero.
    std::optional<long> dim() const;

    std::string to_text() const;
    static Poly from_text(RingPtr ring, const std::string& text);
    std::string to_json() const;
    static Poly from_json(const std::string& text);

  private:
    RingPtr ring_;
    TermMap terms_;
};

// Elementary / complete homogeneous symmetric polynomials in the variables at
// the given 0-based indices.
Poly elementary_sym(const RingPtr& ring, const std::vector<int>& idx, int d);
Poly complete_sym(const RingPtr& ring, const std::vector<int>& idx, int d);

// Quotient and remainder of division by a single divisor under the lex order.
std::pair<Poly, Poly> divide(const Poly& f, const Poly& d);
// Division that must be exact; throws std::domain_error otherwise.
Poly divide_exact(const Poly& f, const Poly& d);

}  // namespace loopschub
