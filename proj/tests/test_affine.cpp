#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "loopschub/affine.hpp"

using namespace loopschub;

namespace {

std::vector<Perm> all_perms(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Perm> out;
    do {
        out.push_back(Perm(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// All coweights with fundamental coordinates in [lo, hi]^{n-1}.
std::vector<Coweight> coweight_box(int n, long lo, long hi) {
    std::vector<Coweight> out;
    std::vector<long> c(n - 1, lo);
    while (true) {
        out.push_back(Coweight(n, c));
        int i = 0;
        while (i < n - 1 && c[i] == hi) c[i++] = lo;
        if (i == n - 1) break;
        ++c[i];
    }
    return out;
}

Coweight act(const Perm& w, const Coweight& lambda) {
    auto l = lambda.lift();
    std::vector<long> out(l.size());
    for (int i = 1; i <= lambda.n(); ++i) out[w(i) - 1] = l[i - 1];
    return Coweight::from_lift(out);
}

}  // namespace

TEST_CASE("coweight coordinates and lifts") {
    Coweight rho = Coweight(3, {1, 1});
    CHECK(rho.lift() == std::vector<long>{1, 0, -1});
    CHECK(rho.is_dominant());
    CHECK(rho.in_coroot_lattice());
    CHECK(rho.alpha_coords() == std::vector<long>{1, 1});
    Coweight w1 = Coweight::fundamental(3, 1);
    CHECK(w1.lift() == std::vector<long>{1, 0, 0});
    CHECK(!w1.in_coroot_lattice());
    CHECK((-w1).lift() == std::vector<long>{0, 1, 1});
    CHECK(Coweight::simple_coroot(3, 1).coords() == std::vector<long>{2, -1});
    CHECK(Coweight::simple_coroot(3, 1).lift() == std::vector<long>{1, -1, 0});
    CHECK(Coweight::from_alpha(3, {1, 1}) == rho);
    CHECK(Coweight::from_lift({5, 4, 3}) == rho);
    CHECK(Coweight::from_lift({7, 7, 7}) == Coweight::zero(3));
    for (const auto& lam : coweight_box(4, -2, 2)) {
        CHECK(Coweight::from_lift(lam.lift()) == lam);
        if (lam.in_coroot_lattice()) CHECK(Coweight::from_alpha(4, lam.alpha_coords()) == lam);
    }
    CHECK(parse_coweight(3, "w:0,-1") == -Coweight::fundamental(3, 2));
    CHECK(parse_coweight(3, "a:1,1") == rho);
    CHECK_THROWS(parse_coweight(3, "w:1"));
    CHECK_THROWS(parse_coweight(3, "1,2"));
    CHECK_THROWS(Coweight::fundamental(3, 3).alpha_coords());
}

TEST_CASE("affine generators") {
    CHECK(AffineElt::identity(3).window() == std::vector<long>{1, 2, 3});
    CHECK(AffineElt::simple(3, 0).window() == std::vector<long>{0, 2, 4});
    CHECK(AffineElt::simple(4, 0).window() == std::vector<long>{0, 2, 3, 5});
    CHECK(AffineElt::sigma(3).window() == std::vector<long>{2, 3, 4});
    CHECK(AffineElt::sigma_power(3, 3) == AffineElt::identity(3));
    CHECK(AffineElt::sigma_power(3, -1) == AffineElt::sigma_power(3, 2));
    for (int n : {3, 4, 5, 6})
        for (int i = 0; i < n; ++i) {
            AffineElt s = AffineElt::sigma(n);
            AffineElt lhs = s * AffineElt::simple(n, i) * s.inverse();
            CHECK(lhs == AffineElt::simple(n, (i + 1) % n));
        }
}

TEST_CASE("s0 through the highest root") {
    for (int n : {3, 4, 5}) {
        std::vector<long> theta_alpha(n - 1, 1);
        Coweight theta_vee = Coweight::from_alpha(n, theta_alpha);
        std::vector<int> rtheta_win(n);
        for (int i = 0; i < n; ++i) rtheta_win[i] = i + 1;
        std::swap(rtheta_win.front(), rtheta_win.back());
        AffineElt r_theta = AffineElt::from_perm(Perm(rtheta_win));
        AffineElt t_up = AffineElt::translation(theta_vee);
        AffineElt t_dn = AffineElt::translation(-theta_vee);
        CHECK(t_up * r_theta == AffineElt::simple(n, 0));
        CHECK(r_theta * t_dn == AffineElt::simple(n, 0));
    }
    CHECK(AffineElt::translation(Coweight::from_alpha(3, {1, 1})).window() ==
          std::vector<long>{4, 2, 0});
}

TEST_CASE("translations") {
    CHECK(AffineElt::translation(Coweight::zero(3)) == AffineElt::identity(3));
    // t^{lambda+mu} = t^lambda t^mu and w t^lambda w^{-1} = t^{w lambda}.
    for (const auto& lam : coweight_box(3, -2, 2)) {
        AffineElt t = AffineElt::translation(lam);
        for (const auto& mu : coweight_box(3, -1, 1))
            CHECK(t * AffineElt::translation(mu) == AffineElt::translation(lam + mu));
        for (const auto& w : all_perms(3)) {
            AffineElt aw = AffineElt::from_perm(w);
            CHECK(aw * t * aw.inverse() == AffineElt::translation(act(w, lam)));
        }
    }
    // sigma-coset of t^{-omega1} for n=3.
    AffineElt t = AffineElt::translation(-Coweight::fundamental(3, 1));
    CHECK(t.window() == std::vector<long>{1, 5, 6});
    CHECK((t.charge() / 3) % 3 == 2);
}

TEST_CASE("eval and inv_eval") {
    AffineElt v = AffineElt::translation(Coweight::from_alpha(3, {1, 1}));
    for (long i = -7; i <= 7; ++i) {
        CHECK(v.eval(i + 3) == v.eval(i) + 3);
        CHECK(v.inv_eval(v.eval(i)) == i);
    }
    CHECK_THROWS(AffineElt({1, 4, 3}));  // residues collide
    CHECK_THROWS(AffineElt({1, 2, 4}));  // charge not divisible by n
}

TEST_CASE("length") {
    CHECK(AffineElt::identity(3).length() == 0);
    CHECK(AffineElt::simple(3, 0).length() == 1);
    CHECK(AffineElt::sigma(4).length() == 0);
    CHECK(AffineElt::translation(Coweight::from_alpha(3, {1, 1})).length() == 4);
    // Dominant translations: l(t^lambda) = sum over positive roots of <alpha,lambda>.
    for (int n : {3, 4, 5}) {
        for (const auto& lam : coweight_box(n, 0, 3)) {
            auto l = lam.lift();
            long expect = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) expect += l[i] - l[j];
            CHECK(AffineElt::translation(lam).length() == expect);
        }
    }
}

TEST_CASE("length agrees with word-length by exhaustive BFS") {
    for (int n : {3, 4, 5}) {
        int depth = 8;
        std::map<std::vector<long>, int> dist;
        std::queue<AffineElt> q;
        AffineElt e = AffineElt::identity(n);
        dist[e.window()] = 0;
        q.push(e);
        while (!q.empty()) {
            AffineElt v = q.front();
            q.pop();
            int d = dist[v.window()];
            if (d == depth) continue;
            for (int i = 0; i < n; ++i) {
                AffineElt w = AffineElt::simple(n, i) * v;
                if (dist.emplace(w.window(), d + 1).second) q.push(w);
            }
        }
        for (const auto& [win, d] : dist) {
            AffineElt v{std::vector<long>(win)};
            CHECK(v.length() == d);
            CHECK(static_cast<int>(v.reduced_word().size()) == d);
        }
    }
}

TEST_CASE("minimal coset representatives") {
    CHECK(m_min(Coweight::zero(3)) == AffineElt::identity(3));
    CHECK(m_min(Coweight(3, {1, 1})) == AffineElt::simple(3, 0));
    CHECK(m_min(-Coweight::fundamental(4, 2)) == parse_affine(4, "sigma^2 s0 s3 s1 s0"));
    for (const auto& lam : coweight_box(3, -2, 2)) {
        AffineElt t = AffineElt::translation(lam);
        AffineElt m = m_min(lam);
        CHECK(m.is_grassmannian());
        CHECK((m.right_descents().empty() ||
               (m.right_descents().size() == 1 && m.right_descents()[0] == 0)));
        AffineElt w = m.inverse() * t;  // finite part
        CHECK(w.charge() == 0);
        CHECK(m.length() + w.length() == t.length());
        auto word = m.reduced_word();
        if (word.empty()) {
            CHECK(lambda_hat(lam).lambda_hat.is_zero());
        } else {
            CHECK(word.back() == 0);
        }
    }
}

TEST_CASE("sigma decomposition and reduced words") {
    AffineElt m = m_min(-Coweight::fundamental(3, 1));
    CHECK(m.window() == std::vector<long>{1, 5, 6});
    auto sd = m.sigma_decompose();
    CHECK(sd.sigma_pow == 2);
    CHECK(sd.hat.window() == std::vector<long>{-1, 3, 4});
    CHECK(sd.hat == parse_affine(3, "s2 s0"));
    CHECK(m.reduced_word() == std::vector<int>{2, 0});
    CHECK(AffineElt::from_word(3, sd.sigma_pow, m.reduced_word()) == m);

    auto sd4 = m_min(-Coweight::fundamental(4, 3)).sigma_decompose();
    CHECK(sd4.sigma_pow == 1);
    CHECK(sd4.hat == parse_affine(4, "s2 s1 s0"));

    AffineElt m22 = m_min(Coweight(3, {0, -2}));
    auto sd22 = m22.sigma_decompose();
    CHECK(sd22.sigma_pow == 2);
    CHECK(sd22.hat.window() == std::vector<long>{-1, 0, 7});
    CHECK(sd22.hat.reduced_word() == std::vector<int>{0, 2, 1, 0});
    CHECK(sd22.hat == parse_affine(3, "s0 s2 s1 s0"));

    for (const auto& lam : coweight_box(4, -2, 1)) {
        AffineElt mm = m_min(lam);
        auto d = mm.sigma_decompose();
        CHECK(d.hat.charge() == 0);
        CHECK(d.hat.length() == mm.length());
        CHECK(AffineElt::sigma_power(4, d.sigma_pow) * d.hat == mm);
    }
}

TEST_CASE("lambda hat") {
    for (const auto& lam : coweight_box(3, -2, 2))
        if (lam.in_coroot_lattice()) CHECK(lambda_hat(lam).lambda_hat == lam);
    auto lh = lambda_hat(-Coweight::fundamental(3, 1));
    CHECK(lh.lambda_hat == Coweight::simple_coroot(3, 1));
    CHECK(lh.sigma_pow == 2);
    CHECK(lambda_hat(-Coweight::fundamental(6, 3)).lambda_hat ==
          Coweight::from_alpha(6, {1, 2, 3, 2, 1}));
    for (const auto& lam : coweight_box(3, -2, 2)) {
        auto h = lambda_hat(lam);
        CHECK(h.lambda_hat.in_coroot_lattice());
        CHECK(m_min(h.lambda_hat) == h.m_hat);
        CHECK(m_min(h.lambda_hat).length() == m_min(lam).length());
    }
}

TEST_CASE("shimozono closed form") {
    CHECK(shimozono_lambda_hat(6, 1).alpha_coords() == std::vector<long>{1, 0, 0, 0, 0});
    CHECK(shimozono_lambda_hat(6, 2).alpha_coords() == std::vector<long>{1, 2, 1, 0, 0});
    CHECK(shimozono_lambda_hat(6, 3).alpha_coords() == std::vector<long>{1, 2, 3, 2, 1});
    CHECK(shimozono_lambda_hat(6, 4).alpha_coords() == std::vector<long>{0, 0, 1, 2, 1});
    CHECK(shimozono_lambda_hat(6, 5).alpha_coords() == std::vector<long>{0, 0, 0, 0, 1});
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i <= n - 1; ++i)
            CHECK(shimozono_lambda_hat(n, i) ==
                  lambda_hat(-Coweight::fundamental(n, i)).lambda_hat);
    CHECK_THROWS(shimozono_lambda_hat(6, 6));
}

TEST_CASE("anti-dominant translations via cycle words") {
    // t^{-omega_i} = (s_i ... s_1 sigma)^{n-i} = w_i w_0 sigma^{-i}.
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            AffineElt t = AffineElt::translation(-Coweight::fundamental(n, i));
            std::vector<int> desc;
            for (int j = i; j >= 1; --j) desc.push_back(j);
            AffineElt block = AffineElt::from_word(n, 0, desc) * AffineElt::sigma(n);
            AffineElt pw = AffineElt::identity(n);
            for (int k = 0; k < n - i; ++k) pw = pw * block;
            CHECK(pw == t);
            AffineElt wi = AffineElt::from_perm(Perm::longest_parabolic(n, i));
            AffineElt w0 = AffineElt::from_perm(Perm::longest(n));
            CHECK(wi * w0 * AffineElt::sigma_power(n, -i) == t);
        }
    }
}

TEST_CASE("group blocks") {
    auto b1 = group_blocks(3, {0});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].is_identity());
    auto b2 = group_blocks(3, {2, 0});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == Perm::simple(3, 2));
    auto b3 = group_blocks(3, {0, 2, 1, 0});
    REQUIRE(b3.size() == 2);
    CHECK(b3[0].is_identity());
    CHECK(b3[1] == Perm::simple(3, 2) * Perm::simple(3, 1));
    CHECK_THROWS(group_blocks(3, {0, 1}));
    CHECK_THROWS(group_blocks(3, {}));
}

TEST_CASE("weak order") {
    AffineElt y = parse_affine(3, "s1 s0").inverse();
    CHECK(y.window() == std::vector<long>{2, 0, 4});
    CHECK(t_hat(Coweight::fundamental(3, 2)) == y);
    CHECK(weak_leq_right(t_hat(Coweight::fundamental(3, 2)), y));
    CHECK(weak_leq_right(AffineElt::identity(3), y));
    CHECK(weak_leq_left(AffineElt::identity(3), y));
    CHECK(weak_leq_left(y, y));
    AffineElt s0 = AffineElt::simple(3, 0);
    AffineElt x = parse_affine(3, "s1 s0");
    CHECK(weak_leq_right(AffineElt::simple(3, 1), x));  // s1 is a left factor of x
    CHECK(!weak_leq_right(s0, x));
    CHECK(weak_leq_left(s0, x));  // s0 is a right factor of x
    CHECK(!weak_leq_left(AffineElt::simple(3, 1), x));
}

TEST_CASE("parsing") {
    CHECK(parse_affine(3, "[4,2,0]") ==
          AffineElt::translation(Coweight::from_alpha(3, {1, 1})));
    CHECK(parse_affine(3, "sigma^2 s2 s0") == m_min(-Coweight::fundamental(3, 1)));
    CHECK(parse_affine(3, "sigma sigma s2 s0") == m_min(-Coweight::fundamental(3, 1)));
    CHECK(parse_affine(3, "id") == AffineElt::identity(3));
    CHECK_THROWS(parse_affine(3, "[1,2]"));
    CHECK_THROWS(parse_affine(3, "s3"));
    CHECK_THROWS(parse_affine(3, "s1 sigma"));
    CHECK_THROWS(parse_affine(3, ""));
}
