#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopschub/ideal.hpp"
#include "loopschub/poly.hpp"

using namespace loopschub;

namespace {

Poly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 6,
                 int max_exp = 3) {
    std::uniform_int_distribution<int> nt(1, max_terms), ex(0, max_exp), co(-9, 9);
    Poly p(ring);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        Mono m(ring->arity(), 0);
        for (int i = 0; i < ring->arity(); ++i) m[i] = ex(rng) == 0 ? ex(rng) : 0;
        p.add_term(m, co(rng));
    }
    return p;
}

int var_index(const RingPtr& ring, const std::string& name) {
    for (int i = 0; i < ring->arity(); ++i)
        if (ring->vars[i] == name) return i;
    throw std::runtime_error("no variable " + name);
}

}  // namespace

TEST_CASE("term order from the back") {
    RingPtr r = make_xy_ring(3);
    MonoLess less;
    Mono y3(6, 0), x1(6, 0), y1cubed(6, 0);
    y3[2] = 1;
    x1[3] = 1;
    y1cubed[0] = 3;
    CHECK(less(y3, x1));       // y3 < x1
    CHECK(less(y1cubed, y3));  // y1^3 < y3 (pure lex, not graded)
    CHECK(!less(y3, y3));
    Poly e1y = elementary_sym(r, {0, 1, 2}, 1);
    CHECK(e1y.leading().first == y3);
}

TEST_CASE("ring constructors") {
    RingPtr r = make_xy_ring(3);
    CHECK(r->vars == std::vector<std::string>{"y1", "y2", "y3", "x1", "x2", "x3"});
    CHECK(r->y_count == 3);
    CHECK(r->x_begin() == 3);
    RingPtr t = make_xt_ring(3, 2);
    CHECK(t->vars == std::vector<std::string>{"y1", "y2", "y3", "xt1", "xt2"});
    RingPtr h = make_h_ring(4);
    CHECK(h->vars == std::vector<std::string>{"h1", "h2", "h3"});
    CHECK(h->dims == std::vector<int>{2, 4, 6});
}

TEST_CASE("arithmetic") {
    RingPtr r = make_xy_ring(2);
    Poly x1 = Poly::var(r, var_index(r, "x1"));
    Poly y1 = Poly::var(r, var_index(r, "y1"));
    CHECK((x1 + Poly::zero(r)) == x1);
    CHECK((x1 - x1).is_zero());
    Poly sq = (x1 + y1) * (x1 + y1);
    Poly expect = x1 * x1 + x1 * y1.scale(2) + y1 * y1;
    CHECK(sq == expect);
    CHECK(((x1 - y1) * (x1 + y1)) == (x1 * x1 - y1 * y1));
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        Poly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b) == (b * a));
    }
}

TEST_CASE("permute and substitute") {
    RingPtr r = make_xy_ring(3);
    Poly y1 = Poly::var(r, 0), y2 = Poly::var(r, 1);
    Poly f = y1 - y2;
    CHECK(f.permute_vars(Perm::simple(3, 1), 0) == (y2 - y1));
    // Top double Schubert polynomial for n=3, then y := 0.
    Poly top = Poly::one(r);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; 3 - i - j >= 0; ++j)
            top = top * (Poly::var(r, r->x_begin() + i - 1) - Poly::var(r, j - 1));
    Poly single = top.substitute_zero({0, 1, 2});
    Poly expect = Poly::var(r, r->x_begin(), 2) * Poly::var(r, r->x_begin() + 1);
    CHECK(single == expect);
}

TEST_CASE("symmetric polynomial helpers") {
    RingPtr r = make_xy_ring(3);
    Poly h2 = complete_sym(r, {3, 4}, 2);
    Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4);
    CHECK(h2 == (x1 * x1 + x1 * x2 + x2 * x2));
    Poly e2 = elementary_sym(r, {0, 1, 2}, 1);
    CHECK(e2.terms().size() == 3);
    CHECK(elementary_sym(r, {0, 1}, 3).is_zero());
    CHECK(complete_sym(r, {0, 1}, 0) == Poly::one(r));
    // sum_{i} (-1)^i e_i h_{d-i} = 0 for d >= 1.
    RingPtr r4 = make_xy_ring(4);
    std::vector<int> xs = {4, 5, 6, 7};
    for (int d = 1; d <= 4; ++d) {
        Poly acc(r4);
        for (int i = 0; i <= d; ++i) {
            Poly t = elementary_sym(r4, xs, i) * complete_sym(r4, xs, d - i);
            acc = (i % 2 == 0) ? acc + t : acc - t;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("grading") {
    RingPtr r = make_xy_ring(3);
    Poly f = Poly::var(r, 3, 2) * Poly::var(r, 4);  // x1^2 x2
    CHECK(f.dim() == 6);
    CHECK(Poly::zero(r).dim() == 0);
    CHECK(!(f + Poly::one(r)).dim().has_value());
    RingPtr h = make_h_ring(4);
    Poly g = Poly::var(h, 1) * Poly::var(h, 0);  // h2 h1
    CHECK(g.dim() == 6);
}

TEST_CASE("division") {
    RingPtr r = make_xy_ring(2);
    Poly x1 = Poly::var(r, 2), y1 = Poly::var(r, 0);
    CHECK(divide_exact(x1 * x1 - y1 * y1, x1 - y1) == (x1 + y1));
    CHECK_THROWS_AS(divide_exact(x1 * x1 + Poly::one(r), x1 - y1), std::domain_error);
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        Poly f = random_poly(r, rng), d = random_poly(r, rng);
        if (d.is_zero()) continue;
        auto [q, rem] = divide(f, d);
        CHECK(f == (q * d + rem));
        if (!rem.is_zero())
            CHECK(!mono_divides(d.leading().first, rem.leading().first));
    }
}

TEST_CASE("preset leading terms") {
    auto J = preset_J(3);
    REQUIRE(J.gens.size() == 4);
    // Reduced basis leading terms: y3, x3, x2^2, x1^3.
    Mono x3(6, 0), y3(6, 0), x2sq(6, 0), x1cb(6, 0);
    x3[5] = 1;
    y3[2] = 1;
    x2sq[4] = 2;
    x1cb[3] = 3;
    CHECK(J.gens[0].leading().first == x3);
    CHECK(J.gens[1].leading().first == y3);
    CHECK(J.gens[2].leading().first == x2sq);
    CHECK(J.gens[3].leading().first == x1cb);
    auto J0 = preset_J0(3);
    REQUIRE(J0.gens.size() == 3);
    CHECK(J0.gens[0].leading().first == x3);
    CHECK(J0.gens[1].leading().first == x2sq);
    CHECK(J0.gens[2].leading().first == x1cb);
    auto Jp = preset_JpiMulti(3, 2);
    REQUIRE(Jp.gens.size() == 3);
    Mono xt1c(5, 0), xt2c(5, 0);
    xt1c[3] = 3;
    xt2c[4] = 3;
    CHECK(Jp.gens[1].leading().first == xt1c);
    CHECK(Jp.gens[2].leading().first == xt2c);
}

TEST_CASE("normal form fixtures") {
    auto J = preset_J(3);
    for (const Poly& g : J.gens) CHECK(normal_form(g, J).is_zero());
    // The displayed degree-2 relation of the SL3 presentation reduces to 0.
    RingPtr r = J.ring;
    Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4);
    Poly rel = x1 * x1 + x1 * x2 + x2 * x2 -
               (x1 + x2) * elementary_sym(r, {0, 1, 2}, 1) +
               elementary_sym(r, {0, 1, 2}, 2);
    CHECK(normal_form(rel, J).is_zero());

    auto Jpi = preset_Jpi(3);
    Poly xt = Poly::var(Jpi.ring, 3);
    Poly nf = normal_form(xt * xt * xt, Jpi);
    Poly expect = Poly::from_text(Jpi.ring,
                                  "xt1*y1^2 + xt1*y1*y2 + xt1*y2^2 - y1^2*y2 - y1*y2^2");
    CHECK(nf == expect);

    auto Jp0 = preset_Jpi0Multi(4, 3);
    for (const Poly& g : Jp0.gens) CHECK(normal_form(g, Jp0).is_zero());
}

TEST_CASE("normal form properties") {
    std::mt19937 rng(23);
    auto Jpi = preset_JpiMulti(3, 2);
    auto J = preset_J(3);
    for (int it = 0; it < 25; ++it) {
        Poly f = random_poly(Jpi.ring, rng), g = random_poly(Jpi.ring, rng);
        Poly nf = normal_form(f, Jpi);
        CHECK(normal_form(nf, Jpi) == nf);
        CHECK(normal_form(f * g, Jpi) == normal_form(normal_form(f, Jpi) * normal_form(g, Jpi), Jpi));
        CHECK(normal_form(f + g, Jpi) == normal_form(f, Jpi) + normal_form(g, Jpi));
        // x-degree cap and y-elimination.
        CHECK(nf.degree_in(3) <= 2);
        CHECK(nf.degree_in(4) <= 2);
        CHECK(nf.degree_in(2) <= 0);
        Poly f2 = random_poly(J.ring, rng);
        CHECK(normal_form(normal_form(f2, J), J) == normal_form(f2, J));
    }
    // Homogeneous reduction preserves the grading.
    RingPtr r = Jpi.ring;
    Poly f = Poly::var(r, 3, 3) * Poly::var(r, 0) - Poly::var(r, 4, 4);
    REQUIRE(f.dim() == 8);
    Poly nf = normal_form(f, Jpi);
    CHECK(nf.dim() == 8);
}

TEST_CASE("buchberger criterion for presets") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(buchberger_ok(preset_J(n)));
        CHECK(buchberger_ok(preset_J0(n)));
        CHECK(buchberger_ok(preset_Jpi(n)));
        CHECK(buchberger_ok(preset_Jpi0(n)));
    }
    CHECK(buchberger_ok(preset_JpiMulti(3, 6)));
    CHECK(buchberger_ok(preset_JpiMulti(5, 4)));
    CHECK(buchberger_ok(preset_Jpi0Multi(5, 6)));
}

TEST_CASE("text io") {
    RingPtr r = make_xy_ring(2);
    Poly f = Poly::var(r, 2, 2).scale(Rat(-3, 2)) + Poly::var(r, 0) * Poly::var(r, 1) -
             Poly::one(r);
    std::string s = f.to_text();
    CHECK(Poly::from_text(r, s) == f);
    CHECK(Poly::from_text(r, "x1 - x1").is_zero());
    CHECK(Poly::zero(r).to_text() == "0");
    CHECK(Poly::from_text(r, "3/2*y1*x1^2 + 1") ==
          (Poly::var(r, 0) * Poly::var(r, 2, 2).scale(Rat(3, 2)) + Poly::one(r)));
    CHECK_THROWS(Poly::from_text(r, "z9"));
    CHECK_THROWS(Poly::from_text(r, ""));
    std::mt19937 rng(5);
    for (int it = 0; it < 25; ++it) {
        Poly p = random_poly(r, rng);
        CHECK(Poly::from_text(r, p.to_text()) == p);
    }
}

TEST_CASE("json io is bit exact") {
    RingPtr r = make_xt_ring(2, 2);
    std::mt19937 rng(13);
    for (int it = 0; it < 25; ++it) {
        Poly p = random_poly(r, rng).scale(Rat(1, 3));
        std::string j = p.to_json();
        Poly q = Poly::from_json(j);
        CHECK(q == p);
        CHECK(q.to_json() == j);
    }
    RingPtr h = make_h_ring(4);
    Poly g = Poly::var(h, 2) * Poly::var(h, 0).scale(Rat(7, 5));
    CHECK(Poly::from_json(g.to_json()) == g);
    CHECK(Poly::from_json(g.to_json()).ring()->dims == h->dims);
}
