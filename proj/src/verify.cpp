#include "loopschub/verify.hpp"

#include <sstream>

#include "loopschub/affschubert.hpp"
#include "loopschub/alcove.hpp"
#include "loopschub/demazure.hpp"

namespace loopschub {

namespace {

CheckResult eq_poly(std::string name, const Poly& got, const Poly& want) {
    CheckResult r{std::move(name), got == want, ""};
    if (!r.pass) r.detail = "expected " + want.to_text() + ", got " + got.to_text();
    return r;
}

CheckResult eq_coords(std::string name, const std::vector<long>& got,
                      const std::vector<long>& want) {
    CheckResult r{std::move(name), got == want, ""};
    if (!r.pass) {
        std::ostringstream os;
        os << "expected (";
        for (size_t i = 0; i < want.size(); ++i) os << (i ? "," : "") << want[i];
        os << "), got (";
        for (size_t i = 0; i < got.size(); ++i) os << (i ? "," : "") << got[i];
        os << ")";
        r.detail = os.str();
    }
    return r;
}

std::string window_name(const Perm& w) {
    std::string s;
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) s += " ";
        s += std::to_string(w(i));
    }
    return s;
}

Poly hpoly(const RingPtr& hr, const std::string& text) {
    return Poly::from_text(hr, text);
}

}  // namespace

std::vector<CheckResult> check_double_schubert_table() {
    RingPtr r = make_xy_ring(3);
    Poly y1 = Poly::var(r, 0), y2 = Poly::var(r, 1);
    Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4);
    const std::vector<std::pair<Perm, Poly>> rows = {
        {Perm({3, 2, 1}), (x1 - y1) * (x1 - y2) * (x2 - y1)},
        {Perm({3, 1, 2}), (x1 - y1) * (x1 - y2)},
        {Perm({2, 3, 1}), (x1 - y1) * (x2 - y1)},
        {Perm({2, 1, 3}), x1 - y1},
        {Perm({1, 3, 2}), x1 + x2 - y1 - y2},
        {Perm({1, 2, 3}), Poly::one(r)},
    };
    std::vector<CheckResult> out;
    for (const auto& [w, want] : rows)
        out.push_back(eq_poly("double schubert n=3 / w = " + window_name(w),
                              double_schubert(w), want));
    return out;
}

std::vector<CheckResult> check_single_schubert_table() {
    RingPtr r = make_xy_ring(3);
    Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4);
    const std::vector<std::pair<Perm, Poly>> rows = {
        {Perm({3, 2, 1}), x1 * x1 * x2},
        {Perm({3, 1, 2}), x1 * x1},
        {Perm({2, 3, 1}), x1 * x2},
        {Perm({2, 1, 3}), x1},
        {Perm({1, 3, 2}), x1 + x2},
        {Perm({1, 2, 3}), Poly::one(r)},
    };
    std::vector<CheckResult> out;
    for (const auto& [w, want] : rows)
        out.push_back(eq_poly("single schubert n=3 / w = " + window_name(w),
                              single_schubert(w), want));
    return out;
}

std::vector<CheckResult> check_affine_sl3_table() {
    std::vector<CheckResult> out;
    RingPtr hr = make_h_ring(3);

    // lambda = rho, word s0.
    {
        Poly t = build_tilde(3, {0}, false);
        RingPtr r = t.ring();
        Poly y1 = Poly::var(r, 0), y2 = Poly::var(r, 1), y3 = Poly::var(r, 2);
        Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4), x3 = Poly::var(r, 5);
        out.push_back(eq_poly(
            "affine n=3 / tilde(x,y) at rho", t,
            (x1 - y1) * (x1 - y2) * (x3 - y2) * (x2 - y3) * (x2 - y1)));
        out.push_back(eq_poly("affine n=3 / tilde(x) at rho", specialize_y0(t),
                              x1 * x1 * x2 * x2 * x3));
        out.push_back(eq_poly("affine n=3 / S-hat at rho",
                              affine_schubert(Coweight(3, {1, 1})).schubert_h,
                              hpoly(hr, "h1")));
    }

    // lambda = -omega1, word s2 s0.
    {
        Poly t = build_tilde(3, {2, 0}, false);
        RingPtr r = t.ring();
        Poly y1 = Poly::var(r, 0), y2 = Poly::var(r, 1), y3 = Poly::var(r, 2);
        Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4), x3 = Poly::var(r, 5);
        Poly cubic =
            x1 * x2 - x1 * x3 + x2 * x3 - x2 * y2 - x2 * y3 + y2 * y3;
        out.push_back(eq_poly("affine n=3 / tilde(x,y) at -omega1", t,
                              (x1 - y1) * (x2 - y1) * cubic));
        out.push_back(
            eq_poly("affine n=3 / tilde(x) at -omega1", specialize_y0(t),
                    x1 * x1 * x2 * x2 - x1 * x1 * x2 * x3 + x1 * x2 * x2 * x3));
        out.push_back(eq_poly("affine n=3 / S-hat at -omega1",
                              affine_schubert(Coweight(3, {-1, 0})).schubert_h,
                              hpoly(hr, "h2")));
    }

    // lambda = -omega2, word s1 s0.
    {
        Poly t = build_tilde(3, {1, 0}, false);
        RingPtr r = t.ring();
        Poly y1 = Poly::var(r, 0), y2 = Poly::var(r, 1), y3 = Poly::var(r, 2);
        Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4), x3 = Poly::var(r, 5);
        out.push_back(eq_poly("affine n=3 / tilde(x,y) at -omega2", t,
                              -(x2 - x3) * (x2 - y3) * (x1 - y1) * (x1 - y2)));
        out.push_back(eq_poly("affine n=3 / tilde(x) at -omega2",
                              specialize_y0(t),
                              x1 * x1 * x2 * x3 - x1 * x1 * x2 * x2));
        out.push_back(eq_poly("affine n=3 / S-hat at -omega2",
                              affine_schubert(Coweight(3, {0, -1})).schubert_h,
                              hpoly(hr, "h1^2 - h2")));
    }

    // lambda = -2*omega2, word s0 s2 s1 s0 (m = 6).
    {
        Poly t = build_tilde(3, {0, 2, 1, 0}, false);
        Poly tx = specialize_y0(t);
        RingPtr r = t.ring();
        Poly x1 = Poly::var(r, 3), x2 = Poly::var(r, 4), x3 = Poly::var(r, 5);
        Poly x4 = Poly::var(r, 6), x5 = Poly::var(r, 7), x6 = Poly::var(r, 8);
        out.push_back(
            eq_poly("affine n=3 / tilde(x) at -2*omega2", tx,
                    -x1 * x1 * x2 * x2 * x3 * (x3 - x4) * (x5 - x6) * (x4 - x5)));
        out.push_back(eq_poly("affine n=3 / S-hat at -2*omega2",
                              affine_schubert(Coweight(3, {0, -2})).schubert_h,
                              hpoly(hr, "h1^4 - 2*h1^2*h2 + h2^2")));
    }
    return out;
}

std::vector<CheckResult> check_affine_sl4_table() {
    RingPtr hr = make_h_ring(4);
    struct Row {
        std::vector<int> word;
        std::string value;
    };
    const std::vector<Row> rows = {
        {{2, 3, 0}, "h3"},
        {{0, 3, 1, 0}, "h2^2 - h1*h3"},
        {{2, 1, 0}, "h1^3 - 2*h1*h2 + h3"},
        {{2, 1, 3, 0}, "h2*h1^2 - h2^2"},
        {{1, 3, 0}, "h1*h2 - h3"},
        {{3, 0}, "h2"},
        {{1, 0}, "h1^2 - h2"},
        {{0}, "h1"},
    };
    std::vector<CheckResult> out;
    for (const Row& row : rows) {
        std::string name = "affine n=4 / word";
        for (int a : row.word) name += " s" + std::to_string(a);
        out.push_back(eq_poly(name, affine_schubert_from_word(4, row.word),
                              hpoly(hr, row.value)));
    }
    const std::vector<std::pair<Coweight, std::string>> named = {
        {Coweight(4, {-1, 0, 0}), "h3"},
        {Coweight(4, {0, -1, 0}), "h2^2 - h1*h3"},
        {Coweight(4, {0, 0, -1}), "h1^3 - 2*h1*h2 + h3"},
        {Coweight(4, {1, 1, 1}), "h2*h1^2 - h2^2"},
    };
    for (const auto& [lam, value] : named)
        out.push_back(eq_poly("affine n=4 / lambda = " + lam.to_string(),
                              affine_schubert(lam).schubert_h,
                              hpoly(hr, value)));
    return out;
}

std::vector<CheckResult> check_lambda_hat_tables() {
    std::vector<CheckResult> out;
    const std::vector<std::vector<long>> n6 = {
        {1, 0, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 2, 3, 2, 1},
        {0, 0, 1, 2, 1}, {0, 0, 0, 0, 1},
    };
    for (int i = 1; i <= 5; ++i) {
        out.push_back(eq_coords(
            "lambda-hat n=6 / i = " + std::to_string(i),
            lambda_hat(-Coweight::fundamental(6, i)).lambda_hat.alpha_coords(),
            n6[i - 1]));
    }
    bool all = true;
    std::string detail;
    for (int n = 2; n <= 8 && all; ++n) {
        for (int i = 1; i <= n - 1 && all; ++i) {
            Coweight got = lambda_hat(-Coweight::fundamental(n, i)).lambda_hat;
            Coweight want = shimozono_lambda_hat(n, i);
            if (!(got == want)) {
                all = false;
                detail = "mismatch at n=" + std::to_string(n) +
                         ", i=" + std::to_string(i) + ": " + got.to_string() +
                         " vs " + want.to_string();
            }
        }
    }
    out.push_back({"lambda-hat closed form / n <= 8", all, detail});
    return out;
}

std::vector<CheckResult> check_factorization_examples() {
    std::vector<CheckResult> out;

    // Worked rank-two factorizations.
    {
        RootSystem a2(cartan_matrix("A2"));
        AffXf x = word_to_xf(a2, {1, 0});
        TranslationFactor f = max_antidominant_factor(a2, x);
        out.push_back(
            eq_coords("factorize / A2 word s1 s0", f.lambda, {0, 1}));
        bool trivial = f.length_y == 0 && f.length_t == f.length_x;
        out.push_back({"factorize / A2 word s1 s0 is a pure translation",
                       trivial,
                       trivial ? "" : "cofactor length nonzero"});
    }
    {
        RootSystem c2(cartan_matrix("C2"));
        AffXf x = word_to_xf(c2, {0, 1, 0});
        TranslationFactor f = max_antidominant_factor(c2, x);
        out.push_back(
            eq_coords("factorize / C2 word s0 s1 s0", f.lambda, {0, 1}));
        bool trivial = f.length_y == 0 && f.length_t == f.length_x;
        out.push_back({"factorize / C2 word s0 s1 s0 is a pure translation",
                       trivial,
                       trivial ? "" : "cofactor length nonzero"});
    }

    // Closed form vs the general floor algorithm over whole Weyl groups.
    for (const std::string type : {"A2", "A3", "B2", "C2"}) {
        RootSystem rs{cartan_matrix(type)};
        const int rank = rs.rank();
        Vec p = rs.barycenter();
        const std::vector<AffXf> weyl = finite_weyl(rs);
        long cases = 0;
        bool all = true;
        std::string detail;
        std::vector<long> mu(rank, 0);
        while (true) {
            Vec neg(rank);
            for (int k = 0; k < rank; ++k) neg[k] = Rat(-mu[k]);
            for (const AffXf& w : weyl) {
                AffXf x = compose(w, translation_xf(neg));
                std::vector<long> want =
                    floor_vec(apply_xf(inverse_xf(x), p));
                std::vector<long> got = closed_form_lambda(rs, w, mu);
                ++cases;
                if (got != want) {
                    all = false;
                    detail = "mismatch in " + type;
                    break;
                }
                bool strict = true;
                for (const Rat& c : apply_xf(inverse_xf(x), p))
                    if (c <= 0) strict = false;
                if (strict) {
                    TranslationFactor f = max_antidominant_factor(rs, x);
                    if (f.lambda != got ||
                        f.length_x != f.length_y + f.length_t) {
                        all = false;
                        detail = "floor algorithm disagrees in " + type;
                        break;
                    }
                }
            }
            if (!all) break;
            int k = 0;
            while (k < rank && mu[k] == 2) mu[k++] = 0;
            if (k == rank) break;
            ++mu[k];
        }
        out.push_back({"factorize closed form / " + type + " (" +
                           std::to_string(cases) + " cases)",
                       all, detail});
    }
    return out;
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    for (auto* fn :
         {check_double_schubert_table, check_single_schubert_table,
          check_affine_sl3_table, check_affine_sl4_table,
          check_lambda_hat_tables, check_factorization_examples}) {
        std::vector<CheckResult> part = fn();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace loopschub
