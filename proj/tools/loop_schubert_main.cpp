// Command-line front end: affine Schubert classes for the based loop group
// of SU(n), finite double/single Schubert polynomials, Pontryagin-product
// verification, table generation, alcove factorization, and the golden-data
// suite.  Exit codes: 0 success, 1 parse error, 2 mathematical precondition
// failure, 3 verification mismatch, 4 internal error.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopschub/affschubert.hpp"
#include "loopschub/alcove.hpp"
#include "loopschub/demazure.hpp"
#include "loopschub/verify.hpp"

using nlohmann::ordered_json;
using namespace loopschub;

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kPreconditionError = 2;
constexpr int kMismatch = 3;
constexpr int kInternalError = 4;

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("bad " + what + ": " + s);
    return v;
}

// Simple-reflection word "s0 s3 s1" (bare digits "0 3 1" also accepted),
// letters in [0, max_letter].
std::vector<int> parse_letters(const std::string& text, int max_letter) {
    std::vector<int> out;
    for (const std::string& tok : split_ws(text)) {
        std::string body = tok;
        if (tok.size() > 1 && (tok[0] == 's' || tok[0] == 'S'))
            body = tok.substr(1);
        long v = parse_long(body, "letter");
        if (v < 0 || v > max_letter)
            throw std::invalid_argument("letter out of range: " + tok);
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw std::invalid_argument("empty word");
    return out;
}

// Window notation "3 1 2" or word notation "s2 s1"; "e" is the identity.
Perm parse_perm(int n, const std::string& text) {
    std::vector<std::string> toks = split_ws(text);
    if (toks.empty()) throw std::invalid_argument("empty permutation");
    if (toks.size() == 1 && (toks[0] == "e" || toks[0] == "id"))
        return Perm::identity(n);
    if (toks[0].size() > 1 && (toks[0][0] == 's' || toks[0][0] == 'S')) {
        std::vector<int> word;
        for (const std::string& tok : toks) {
            if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
                throw std::invalid_argument("mixed notations in: " + text);
            long v = parse_long(tok.substr(1), "letter");
            if (v < 1 || v > n - 1)
                throw std::invalid_argument("letter out of range: " + tok);
            word.push_back(static_cast<int>(v));
        }
        return Perm::from_word(n, word);
    }
    std::vector<int> window;
    for (const std::string& tok : toks)
        window.push_back(static_cast<int>(parse_long(tok, "window entry")));
    if (static_cast<int>(window.size()) != n)
        throw std::invalid_argument("window needs " + std::to_string(n) +
                                    " entries");
    return Perm(std::move(window));
}

long pipeline_cap() {
    const char* env = std::getenv("LOOP_SCHUBERT_MAX_DEGREE");
    if (env == nullptr || *env == '\0') return 24;
    return parse_long(env, "LOOP_SCHUBERT_MAX_DEGREE");
}

// The pipeline for a word with r letters equal to 0 works in n*r variables;
// refuse runs above the cap.
void check_cap(int n, const std::vector<int>& word) {
    long zeros = std::count(word.begin(), word.end(), 0);
    long m = static_cast<long>(n) * zeros;
    long cap = pipeline_cap();
    if (m > cap)
        throw std::domain_error(
            "pipeline needs " + std::to_string(m) + " variables, above the cap " +
            std::to_string(cap) + "; raise LOOP_SCHUBERT_MAX_DEGREE to allow");
}

std::string word_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += "s" + std::to_string(word[i]);
    }
    return s;
}

std::string alpha_string(const Coweight& c) {
    std::string s = "a:";
    std::vector<long> a = c.alpha_coords();
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

std::string coords_string(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

ordered_json poly_json(const Poly& p) { return ordered_json::parse(p.to_json()); }

// Intermediate classes beyond this many terms are omitted from records; they
// are reproducible from m_word and only bloat the output.
constexpr size_t kMaxRecordedTerms = 500;

ordered_json record_json(const AffineSchubert& s) {
    ordered_json j;
    j["n"] = s.lambda.n();
    j["lambda"] = s.lambda.coords();
    j["lambda_hat"] = s.hat.lambda_hat.alpha_coords();
    j["m_word"] = s.hat.m_hat.reduced_word();
    j["sigma_power"] = s.hat.sigma_pow;
    j["length"] = s.hat.m_hat.length();
    j["schubert_h"] = poly_json(s.schubert_h);
    if (s.tilde_xy && s.tilde_xy->terms().size() <= kMaxRecordedTerms)
        j["tilde_xy"] = poly_json(*s.tilde_xy);
    if (s.tilde_x && s.tilde_x->terms().size() <= kMaxRecordedTerms)
        j["tilde_x"] = poly_json(*s.tilde_x);
    return j;
}

void print_poly_line(const std::string& label, const Poly& p) {
    if (p.terms().size() <= 60)
        std::cout << label << p.to_text() << "\n";
    else
        std::cout << label << "(" << p.terms().size() << " terms, not shown)\n";
}

void print_record_text(const AffineSchubert& s) {
    std::cout << "n           = " << s.lambda.n() << "\n";
    std::cout << "lambda      = " << s.lambda.to_string() << "\n";
    std::cout << "lambda_hat  = " << alpha_string(s.hat.lambda_hat) << "\n";
    std::cout << "m_word      = " << word_string(s.hat.m_hat.reduced_word())
              << "\n";
    std::cout << "sigma_power = " << s.hat.sigma_pow << "\n";
    std::cout << "length      = " << s.hat.m_hat.length() << "\n";
    if (s.tilde_xy) print_poly_line("tilde(x,y)  = ", *s.tilde_xy);
    if (s.tilde_x) print_poly_line("tilde(x)    = ", *s.tilde_x);
    std::cout << "S-hat       = " << s.schubert_h.to_text() << "\n";
}

int run_affine(int n, const std::string& lambda_text,
               const std::string& word_text, bool json_out) {
    std::optional<Coweight> lam;
    if (!lambda_text.empty()) lam = parse_coweight(n, lambda_text);
    std::vector<int> word;
    if (!word_text.empty()) {
        word = parse_letters(word_text, n - 1);
        if (word.back() != 0)
            throw std::domain_error("word must end in the letter s0");
    }
    if (!lam && word.empty())
        throw std::invalid_argument("affine needs --lambda or --word");

    AffineSchubert rec;
    if (lam) {
        LambdaHat hat = lambda_hat(*lam);
        check_cap(n, hat.m_hat.reduced_word());
        rec = affine_schubert(*lam);
        if (!word.empty()) {
            AffineElt v = AffineElt::from_word(n, 0, word);
            if (static_cast<long>(word.size()) != v.length())
                throw std::domain_error("word is not reduced");
            if (v != rec.hat.m_hat)
                throw std::domain_error(
                    "word is not a reduced word of the minimal representative " +
                    rec.hat.m_hat.to_string());
            if (!(affine_schubert_from_word(n, word) == rec.schubert_h)) {
                std::cerr << "verification mismatch: the supplied word yields a "
                             "different class than the canonical word\n";
                return kMismatch;
            }
        }
    } else {
        check_cap(n, word);
        AffineElt v = AffineElt::from_word(n, 0, word);
        if (static_cast<long>(word.size()) != v.length())
            throw std::domain_error("word is not reduced");
        if (!v.is_grassmannian())
            throw std::domain_error(
                "word is not minimal in its coset (window must increase)");
        rec = affine_schubert(coset_coweight(v));
        if (!(affine_schubert_from_word(n, word) == rec.schubert_h)) {
            std::cerr << "verification mismatch: the supplied word yields a "
                         "different class than the canonical word\n";
            return kMismatch;
        }
    }

    if (json_out)
        std::cout << record_json(rec).dump(2) << "\n";
    else
        print_record_text(rec);
    return kOk;
}

int run_perm_cmd(const std::string& kind, int n, const std::string& w_text,
                 bool json_out) {
    Perm w = parse_perm(n, w_text);
    Poly p = kind == "double"  ? double_schubert(w)
             : kind == "single" ? single_schubert(w)
                                : fixed_point_class(w);
    if (json_out) {
        ordered_json j;
        j["n"] = n;
        j["window"] = w.window();
        j["length"] = w.length();
        j["polynomial"] = poly_json(p);
        std::cout << j.dump(2) << "\n";
    } else {
        std::string win;
        for (int i = 1; i <= n; ++i)
            win += (i > 1 ? " " : "") + std::to_string(w(i));
        std::cout << "w      = " << win << "\n";
        std::cout << "length = " << w.length() << "\n";
        std::cout << "poly   = " << p.to_text() << "\n";
    }
    return kOk;
}

int run_theorem_a(int n, const std::string& lambda_text,
                  const std::string& mu_text, bool json_out) {
    Coweight lam = parse_coweight(n, lambda_text);
    Coweight mu = parse_coweight(n, mu_text);
    check_cap(n, lambda_hat(lam).m_hat.reduced_word());
    check_cap(n, lambda_hat(mu).m_hat.reduced_word());
    check_cap(n, lambda_hat(lam + mu).m_hat.reduced_word());
    TheoremAReport rep = verify_theorem_A(lam, mu);
    Coweight nu = lam + mu;

    if (json_out) {
        ordered_json j;
        j["n"] = n;
        j["lambda"] = lam.coords();
        j["mu"] = mu.coords();
        j["nu"] = nu.coords();
        j["preconditions_ok"] = rep.preconditions_ok;
        j["reason"] = rep.reason;
        j["identity_ok"] = rep.identity_ok;
        if (rep.preconditions_ok) {
            j["lhs"] = poly_json(rep.lhs);
            j["rhs"] = poly_json(rep.rhs);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda        = " << lam.to_string() << "\n";
        std::cout << "mu            = " << mu.to_string() << "\n";
        std::cout << "nu            = " << nu.to_string() << "\n";
        if (!rep.preconditions_ok) {
            std::cout << "preconditions = failed: " << rep.reason << "\n";
        } else {
            std::cout << "preconditions = ok\n";
            std::cout << "product       = " << rep.lhs.to_text() << "\n";
            std::cout << "S-hat(nu)     = " << rep.rhs.to_text() << "\n";
            std::cout << "identity      = " << (rep.identity_ok ? "ok" : "FAILED")
                      << "\n";
        }
    }
    if (!rep.preconditions_ok) return kPreconditionError;
    return rep.identity_ok ? kOk : kMismatch;
}

int run_table(int n, long max_len, const std::string& out_path) {
    ordered_json arr = ordered_json::array();
    for (const Coweight& lam : enumerate_coweights_by_length(n, max_len)) {
        check_cap(n, lambda_hat(lam).m_hat.reduced_word());
        arr.push_back(record_json(affine_schubert(lam)));
    }
    std::string text = arr.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open " + out_path);
        f << text;
        std::cout << "wrote " << arr.size() << " records to " << out_path
                  << "\n";
    }
    return kOk;
}

CartanMatrix parse_cartan(const std::string& text) {
    if (!text.empty() && text[0] == '[') {
        ordered_json j = ordered_json::parse(text);
        if (!j.is_array() || j.empty())
            throw std::invalid_argument("Cartan matrix must be a JSON array");
        CartanMatrix a;
        for (const auto& row : j) {
            if (!row.is_array())
                throw std::invalid_argument("Cartan matrix rows must be arrays");
            std::vector<long> r;
            for (const auto& entry : row) {
                if (!entry.is_number_integer())
                    throw std::invalid_argument(
                        "Cartan matrix entries must be integers");
                r.push_back(entry.get<long>());
            }
            a.push_back(std::move(r));
        }
        return a;
    }
    return cartan_matrix(text);
}

// Reduced word of y by peeling right descents (letters 0..rank).
std::vector<int> peel_word(const RootSystem& rs, AffXf y) {
    std::vector<AffXf> gens;
    for (int i = 0; i <= rs.rank(); ++i) gens.push_back(word_to_xf(rs, {i}));
    std::vector<int> rev;
    long len = length_by_separation(rs, y);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i <= rs.rank() && !found; ++i) {
            AffXf cand = compose(y, gens[i]);
            long cl = length_by_separation(rs, cand);
            if (cl == len - 1) {
                rev.push_back(i);
                y = cand;
                len = cl;
                found = true;
            }
        }
        if (!found) throw std::logic_error("descent peeling stuck");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int run_factorize(const std::string& type_text, const std::string& word_text,
                  bool json_out) {
    RootSystem rs(parse_cartan(type_text));
    std::vector<int> letters = parse_letters(word_text, rs.rank());
    AffXf x = word_to_xf(rs, letters);
    TranslationFactor f = max_antidominant_factor(rs, x);
    std::vector<int> cofactor = peel_word(rs, f.y);

    if (json_out) {
        ordered_json j;
        j["type"] = type_text;
        j["word"] = letters;
        j["lambda"] = f.lambda;
        j["cofactor_word"] = cofactor;
        j["length_x"] = f.length_x;
        j["length_y"] = f.length_y;
        j["length_translation"] = f.length_t;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "x           = " << word_string(letters) << "\n";
        std::cout << "lambda      = " << coords_string(f.lambda)
                  << "  [fundamental coweight coordinates]\n";
        std::cout << "cofactor y  = " << word_string(cofactor) << "\n";
        std::cout << "lengths     : l(x) = " << f.length_x << ", l(y) = "
                  << f.length_y << ", l(t_{-lambda}) = " << f.length_t << "\n";
    }
    return kOk;
}

int run_verify(bool json_out) {
    std::vector<CheckResult> rows = verify_all();
    size_t passed = 0;
    for (const CheckResult& row : rows) passed += row.pass ? 1 : 0;
    if (json_out) {
        ordered_json arr = ordered_json::array();
        for (const CheckResult& row : rows) {
            ordered_json j;
            j["name"] = row.name;
            j["pass"] = row.pass;
            j["detail"] = row.detail;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const CheckResult& row : rows) {
            std::cout << (row.pass ? "PASS  " : "FAIL  ") << row.name;
            if (!row.pass && !row.detail.empty())
                std::cout << "  [" << row.detail << "]";
            std::cout << "\n";
        }
        std::cout << passed << "/" << rows.size() << " checks passed\n";
    }
    return passed == rows.size() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Schubert calculus: double/single Schubert polynomials for "
        "SL_n, affine Schubert classes for the based loop group of SU(n) in "
        "the Pontryagin ring Q[h1..h_{n-1}], and anti-dominant translation "
        "factorization in arbitrary finite type."};
    app.require_subcommand(1);

    int n = 3;
    std::string lambda_text, mu_text, word_text, w_text, type_text, out_path;
    long max_len = 4;
    bool json_out = false;

    CLI::App* c_affine = app.add_subcommand(
        "affine", "Affine Schubert class S-hat of a coweight or reduced word");
    c_affine->add_option("--n", n, "Rank parameter n of SU(n)")
        ->required()
        ->check(CLI::Range(2, 12));
    c_affine->add_option("--lambda", lambda_text,
                         "Coweight, e.g. w:0,-1,0 or a:1,0,1");
    c_affine->add_option("--word", word_text,
                         "Reduced word, e.g. \"s0 s3 s1 s0\"");
    c_affine->add_flag("--json", json_out, "Emit JSON");

    CLI::App* c_double = app.add_subcommand(
        "double", "Double Schubert polynomial of a permutation");
    CLI::App* c_single = app.add_subcommand(
        "single", "Single Schubert polynomial of a permutation");
    CLI::App* c_fixed = app.add_subcommand(
        "fixed-point", "Equivariant fixed-point class of a permutation");
    for (CLI::App* sc : {c_double, c_single, c_fixed}) {
        sc->add_option("--n", n, "Number of letters")
            ->required()
            ->check(CLI::Range(2, 12));
        sc->add_option("--w", w_text,
                       "Permutation: window \"3 1 2\" or word \"s2 s1\"")
            ->required();
        sc->add_flag("--json", json_out, "Emit JSON");
    }

    CLI::App* c_thm = app.add_subcommand(
        "theorem-a", "Check S-hat(lambda) * S-hat(mu) = S-hat(lambda + mu)");
    c_thm->add_option("--n", n, "Rank parameter n of SU(n)")
        ->required()
        ->check(CLI::Range(2, 12));
    c_thm->add_option("--lambda", lambda_text, "Coweight, e.g. w:1,1")
        ->required();
    c_thm->add_option("--mu", mu_text, "Anti-dominant coweight, e.g. w:0,-1")
        ->required();
    c_thm->add_flag("--json", json_out, "Emit JSON");

    CLI::App* c_table = app.add_subcommand(
        "table", "All records with l(m^lambda) <= bound, sorted, as JSON");
    c_table->add_option("--n", n, "Rank parameter n of SU(n)")
        ->required()
        ->check(CLI::Range(2, 12));
    c_table->add_option("--max-length", max_len, "Length bound")
        ->required()
        ->check(CLI::Range(0L, 1000000L));
    c_table->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* c_fact = app.add_subcommand(
        "factorize",
        "Maximal anti-dominant translation factor x = y o t_{-lambda}");
    c_fact->add_option("--type", type_text,
                       "Cartan type (A1..A9, B2.., C2.., D3.., E6..E8, F4, "
                       "G2) or a Cartan matrix as JSON")
        ->required();
    c_fact->add_option("--word", word_text, "Affine word, e.g. \"s0 s1 s0\"")
        ->required();
    c_fact->add_flag("--json", json_out, "Emit JSON");

    CLI::App* c_verify = app.add_subcommand(
        "verify", "Replay the full golden suite and print a pass/fail matrix");
    c_verify->add_flag("--json", json_out, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c_affine->parsed())
            return run_affine(n, lambda_text, word_text, json_out);
        if (c_double->parsed()) return run_perm_cmd("double", n, w_text, json_out);
        if (c_single->parsed()) return run_perm_cmd("single", n, w_text, json_out);
        if (c_fixed->parsed())
            return run_perm_cmd("fixed-point", n, w_text, json_out);
        if (c_thm->parsed()) return run_theorem_a(n, lambda_text, mu_text, json_out);
        if (c_table->parsed()) return run_table(n, max_len, out_path);
        if (c_fact->parsed()) return run_factorize(type_text, word_text, json_out);
        if (c_verify->parsed()) return run_verify(json_out);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}
