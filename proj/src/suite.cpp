#include "permucell/suite.hpp"

#include <chrono>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "permucell/barcobar.hpp"
#include "permucell/brackets.hpp"
#include "permucell/cells.hpp"
#include "permucell/gs.hpp"
#include "permucell/hochschild.hpp"

namespace permucell::suite {

namespace {

long binom_l(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

long fact_l(int n) { return n <= 1 ? 1 : n * fact_l(n - 1); }

// Collects sub-check failures; empty = criterion passed.
struct Checker {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    std::string summary() const {
        if (failures.empty()) return std::to_string(checks) + " checks";
        std::string s = std::to_string(failures.size()) + "/" + std::to_string(checks) +
                        " checks failed; first: " + failures.front();
        return s;
    }
};

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    std::shuffle(g.begin(), g.end(), rng);
    return g;
}

template <class Cell>
bool equivariant_at(const std::vector<int>& g, const Cell& cell,
                    SignedCellSum<Cell> (*boundary)(const Cell&)) {
    auto [img, sign] = sn_action(g, cell);
    SignedCellSum<Cell> lhs = boundary(img);
    SignedCellSum<Cell> rhs;
    for (const auto& [c, coeff] : boundary(cell)) {
        auto [ci, si] = sn_action(g, c);
        rhs[ci] += coeff * Rational(si * sign);
        if (rhs[ci].is_zero()) rhs.erase(ci);
    }
    return lhs == rhs;
}

CriterionResult criterion1_cells() {
    Checker ck;
    std::mt19937 rng(101);
    for (int n = 1; n <= 6; ++n) {
        FinChainComplex cx = build_perm_complex(n);
        ck.expect(validate(cx).ok, "perm n=" + std::to_string(n) + " d^2 != 0");
        BettiTable b = betti(cx);
        for (const auto& [d, v] : b)
            ck.expect(v == (d == 0 ? 1 : 0), "perm n=" + std::to_string(n) + " betti");
        for (int k = 1; k <= n; ++k)
            ck.expect(cx.dim_at(-(n - k)) == fact_l(k) * stirling2(n, k),
                      "perm n=" + std::to_string(n) + " f-vector");
        auto cells = enumerate_perm_cells(n);
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        bool all_eq = true;
        for (int t = 0; t < 100; ++t)
            all_eq = all_eq &&
                     equivariant_at(random_permutation(n, rng), cells[pick(rng)], &perm_boundary);
        ck.expect(all_eq, "perm n=" + std::to_string(n) + " equivariance");
    }
    for (int n = 1; n <= 8; ++n) {
        FinChainComplex cx = build_simplex_complex(n);
        ck.expect(validate(cx).ok, "simplex n=" + std::to_string(n) + " d^2 != 0");
        BettiTable b = betti(cx);
        for (const auto& [d, v] : b)
            ck.expect(v == (d == 0 ? 1 : 0), "simplex n=" + std::to_string(n) + " betti");
        for (int k = 0; k <= n - 1; ++k)
            ck.expect(cx.dim_at(-k) == binom_l(n, n - k - 1),
                      "simplex n=" + std::to_string(n) + " f-vector");
        auto cells = enumerate_simplex_cells(n);
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        bool all_eq = true;
        for (int t = 0; t < 100; ++t)
            all_eq = all_eq &&
                     equivariant_at(random_permutation(n, rng), cells[pick(rng)], &simplex_boundary);
        ck.expect(all_eq, "simplex n=" + std::to_string(n) + " equivariance");
    }
    return {1, "cell complexes: d^2=0, contractibility, f-vectors, equivariance", ck.failures.empty(),
            true, ck.summary()};
}

CriterionResult criterion2_koszul() {
    Checker ck;
    for (int dim = 1; dim <= 3; ++dim)
        for (int m = 1; m <= 4; ++m) {
            FinChainComplex cx = build_koszul_complex(dim, m);
            ck.expect(validate(cx).ok, "koszul d^2");
            BettiTable b = betti(cx);
            for (const auto& [d, v] : b)
                ck.expect(v == (d == m - 1 ? binom_l(dim + m - 1, m) : 0),
                          "koszul dim=" + std::to_string(dim) + " m=" + std::to_string(m));
        }
    return {2, "koszul complexes: cohomology = Sym^m V in the terminal degree", ck.failures.empty(),
            true, ck.summary()};
}

CriterionResult criterion3_barcobar() {
    Checker ck;
    for (int dim = 1; dim <= 3; ++dim)
        for (int w = 1; w <= 5; ++w) {
            FinChainComplex bar = build_bar_complex(dim, w);
            ck.expect(validate(bar).ok, "bar d^2");
            long total = 0;
            for (const auto& [d, v] : betti(bar)) total += v;
            ck.expect(total == binom_l(dim, w),
                      "bar dim=" + std::to_string(dim) + " w=" + std::to_string(w));
            FinChainComplex cobar = build_cobar_complex(dim, w);
            ck.expect(validate(cobar).ok, "cobar d^2");
            total = 0;
            for (const auto& [d, v] : betti(cobar)) total += v;
            ck.expect(total == binom_l(dim + w - 1, w),
                      "cobar dim=" + std::to_string(dim) + " w=" + std::to_string(w));
        }
    return {3, "bar/cobar: cohomology totals are wedge and Sym dimensions", ck.failures.empty(), true,
            ck.summary()};
}

CriterionResult criterion4_polydiff_hochschild() {
    Checker ck;
    for (int dim = 1; dim <= 2; ++dim)
        for (int m = 1; m <= 6; ++m)
            for (int n = 0; m + n <= 6; ++n) {
                FinChainComplex cx = build_polydiff_complex(dim, m, n);
                ck.expect(validate(cx).ok, "polydiff d^2");
                BettiTable b = betti(cx);
                for (const auto& [k, v] : b)
                    ck.expect(v == (k == m ? binom_l(dim, m) * binom_l(dim + n - 1, n) : 0),
                              "polydiff dim=" + std::to_string(dim) + " (m,n)=(" +
                                  std::to_string(m) + "," + std::to_string(n) + ") k=" +
                                  std::to_string(k));
            }
    return {4, "polydifferential Hochschild: cohomology at top arity, HKR dimensions",
            ck.failures.empty(), true, ck.summary()};
}

CriterionResult criterion5_chain_maps() {
    Checker ck;
    const int D = 6;
    for (int dim = 1; dim <= 2; ++dim)
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; m + n <= 4; ++n)
                for (int k = 1; k <= m; ++k)
                    for (const PolyOpLabel& L : enumerate_poly_labels(dim, m, n, k)) {
                        FullCochain lhs, rhs;
                        for (const auto& [t, v] : polydiff_diff_terms(L))
                            for (const auto& [f, c] : include_polydiff(t, D)) {
                                lhs[f] += v * c;
                                if (lhs[f].is_zero()) lhs.erase(f);
                            }
                        for (const auto& [f, c] : include_polydiff(L, D))
                            for (const auto& [t, v] : hochschild_diff_terms(f, D)) {
                                rhs[t] += c * v;
                                if (rhs[t].is_zero()) rhs.erase(t);
                            }
                        ck.expect(lhs == rhs, "hochschild chain map at " + L.label());
                    }
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l)
                    for (const GSOpLabel& L : enumerate_gs_poly_labels(1, m, n, k, l)) {
                        int min_ = m + 2, mout = n + 2;
                        GSFullCochain lhs, rhs;
                        for (const auto& [t, v] : gs_poly_diff_terms(L))
                            for (const auto& [f, c] : include_polydiff_gs(t, min_, mout)) {
                                lhs[f] += v * c;
                                if (lhs[f].is_zero()) lhs.erase(f);
                            }
                        for (const auto& [f, c] : include_polydiff_gs(L, min_, mout))
                            for (const auto& [t, v] : gs_full_diff_terms(f, min_, mout)) {
                                rhs[t] += c * v;
                                if (rhs[t].is_zero()) rhs.erase(t);
                            }
                        ck.expect(lhs == rhs, "GS chain map at " + L.label());
                    }
    return {5, "inclusion chain maps: include after diff equals diff after include",
            ck.failures.empty(), true, ck.summary()};
}

CriterionResult criterion6_full_hochschild() {
    Checker ck;
    bool stable = true;
    const int D = 4;
    for (int w = -1; w <= 1; ++w) {
        BettiTable bD = betti(build_full_hochschild_complex(1, w, D));
        BettiTable bD1 = betti(build_full_hochschild_complex(1, w, D + 1));
        // polydiff reference: total cohomology per arity over bigrades with n - m = w
        std::map<int, long> ref;
        for (int m = 1; m <= D; ++m) {
            int n = m + w;
            if (n < 0) continue;
            for (const auto& [k, v] : betti(build_polydiff_complex(1, m, n))) ref[k] += v;
        }
        for (int k = 1; k <= 3; ++k) {
            if (bD.at(k) != bD1.at(k)) {
                stable = false;
                continue;  // not-yet-stable, not a failure
            }
            ck.expect(bD.at(k) == ref[k], "full Hochschild betti w=" + std::to_string(w) +
                                              " arity " + std::to_string(k));
        }
    }
    return {6, "full Hochschild (truncated): betti matches polydifferential totals",
            ck.failures.empty(), stable,
            ck.summary() + (stable ? "" : "; some arities not yet truncation-stable")};
}

CriterionResult criterion7_gs() {
    Checker ck;
    for (int dim = 1; dim <= 2; ++dim)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                FinChainComplex cx = build_polydiff_gs_complex(dim, m, n);
                ck.expect(validate(cx).ok, "polydiff GS d^2");
                for (const auto& [d, v] : betti(cx))
                    ck.expect(v == (d == m + n ? binom_l(dim, m) * binom_l(dim, n) : 0),
                              "polydiff GS dim=" + std::to_string(dim) + " (m,n)=(" +
                                  std::to_string(m) + "," + std::to_string(n) + ")");
            }
    // full GS partial-differential identities at dim = 1, bounds 3
    const int B = 3;
    auto apply = [&](auto&& f, const GSFullCochain& z) {
        GSFullCochain out;
        for (const auto& [l, c] : z)
            for (const auto& [t, v] : f(l)) {
                out[t] += c * v;
                if (out[t].is_zero()) out.erase(t);
            }
        return out;
    };
    auto d1 = [&](const FullGSLabel& l) { return gs_full_d1_terms(l, B, B); };
    auto d2t = [&](const FullGSLabel& l) {
        GSFullCochain out;
        Rational twist(l.k() % 2 == 0 ? 1 : -1);
        for (const auto& [t, v] : gs_full_d2_terms(l, B, B)) out[t] = twist * v;
        return out;
    };
    for (int k = 1; k <= B; ++k)
        for (int l = 1; l <= B; ++l)
            for (int w = -B; w <= B; ++w)
                for (const FullGSLabel& L : enumerate_gs_full_labels(1, w, B, B, k, l)) {
                    GSFullCochain z{{L, Rational(1)}};
                    ck.expect(apply(d1, apply(d1, z)).empty(), "d1 d1 != 0 at " + L.label());
                    ck.expect(apply(d2t, apply(d2t, z)).empty(), "d2 d2 != 0 at " + L.label());
                    GSFullCochain anti = apply(d1, apply(d2t, z));
                    for (const auto& [t, v] : apply(d2t, apply(d1, z))) {
                        anti[t] += v;
                        if (anti[t].is_zero()) anti.erase(t);
                    }
                    ck.expect(anti.empty(), "d1 d2 + d2 d1 != 0 at " + L.label());
                }
    // truncation-stable betti agreement with the polydifferential complex
    bool stable = true;
    for (int w = -1; w <= 1; ++w) {
        BettiTable b3 = betti(build_full_gs_complex(1, w, 3, 3));
        BettiTable b4 = betti(build_full_gs_complex(1, w, 4, 4));
        std::map<int, long> ref;
        for (int m = 1; m <= 3; ++m) {
            int n = m + w;
            if (n < 1) continue;
            for (const auto& [d, v] : betti(build_polydiff_gs_complex(1, m, n))) ref[d] += v;
        }
        for (int deg = 2; deg <= 3; ++deg) {
            long v3 = b3.count(deg) ? b3.at(deg) : 0;
            long v4 = b4.count(deg) ? b4.at(deg) : 0;
            if (v3 != v4) {
                stable = false;
                continue;
            }
            ck.expect(v3 == ref[deg],
                      "full GS betti w=" + std::to_string(w) + " deg " + std::to_string(deg));
        }
    }
    return {7, "Gerstenhaber-Schack: polydiff cohomology, partial-differential identities,"
               " truncation-stable betti",
            ck.failures.empty(), stable, ck.summary()};
}

CriterionResult criterion8_brackets() {
    Checker ck;
    std::mt19937 rng(808);
    // [mu, mu] = 0
    for (int dim = 1; dim <= 2; ++dim) {
        Cochain mu = mu_cochain(dim, 4, 4);
        ck.expect(gerstenhaber_bracket(mu, mu).terms.empty(), "[mu,mu] != 0");
    }
    // d_H = [mu, .] as matrices on dim=1, D=4 windows
    for (int k = 1; k <= 3; ++k)
        for (int w = -2; w <= 2; ++w)
            for (const FullHochLabel& l : enumerate_full_labels(1, w, 4, k)) {
                if (l.output.is_one()) continue;
                Cochain a{1, {5, 4}, {{l, Rational(1)}}};
                try {
                    hochschild_diff_via_bracket(a);
                    ck.expect(true, "");
                } catch (const std::exception& e) {
                    ck.expect(false, std::string("d_H vs [mu,.]: ") + e.what());
                }
            }
    // graded Jacobi for the Gerstenhaber bracket, 24 random homogeneous triples
    auto random_cochain = [&](int arity) {
        Cochain c{1, {12, 18}, {}};
        std::uniform_int_distribution<int> coeff(-3, 3), outw(1, 3);
        for (const auto& ins : enumerate_tuples(1, 3, arity, false)) {
            int v = coeff(rng);
            if (v) c.terms[{ins, Monomial(1, std::vector<int>(outw(rng), 1))}] = Rational(v);
        }
        return c;
    };
    int jacobi_checked = 0;
    for (int trial = 0; trial < 8; ++trial)
        for (auto [p, q, r] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {1, 2, 2}, {2, 2, 2}}) {
            Cochain a = random_cochain(p), b = random_cochain(q), c = random_cochain(r);
            Cochain lhs = gerstenhaber_bracket(a, gerstenhaber_bracket(b, c));
            Cochain rhs1 = gerstenhaber_bracket(gerstenhaber_bracket(a, b), c);
            Cochain rhs2 = gerstenhaber_bracket(b, gerstenhaber_bracket(a, c));
            int sign = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
            FullCochain res = lhs.terms;
            for (const auto& [l, v] : rhs1.terms) {
                res[l] -= v;
                if (res[l].is_zero()) res.erase(l);
            }
            for (const auto& [l, v] : rhs2.terms) {
                res[l] -= Rational(sign) * v;
                if (res[l].is_zero()) res.erase(l);
            }
            ck.expect(res.empty(), "Gerstenhaber Jacobi");
            ++jacobi_checked;
        }
    ck.expect(jacobi_checked >= 20, "fewer than 20 Gerstenhaber Jacobi samples");
    // graded Jacobi for the Schouten bracket, homogeneous samples
    std::uniform_int_distribution<int> cf(-2, 2);
    auto random_pv = [&](int ext_deg) {
        PolyVector p{2, {}};
        std::vector<std::vector<int>> exts =
            ext_deg == 1 ? std::vector<std::vector<int>>{{1}, {2}}
                         : std::vector<std::vector<int>>{{1, 2}};
        for (const auto& e : exts)
            for (int w = 0; w <= 2; ++w)
                for (const Monomial& s : enumerate_monomials(2, w)) {
                    int v = cf(rng);
                    if (v) p.terms[{e, s}] = Rational(v);
                }
        return p;
    };
    int schouten_checked = 0;
    for (int trial = 0; trial < 6; ++trial)
        for (auto [dp, dq, dr] : std::vector<std::tuple<int, int, int>>{
                 {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}}) {
            PolyVector p = random_pv(dp), q = random_pv(dq), r = random_pv(dr);
            PolyVector lhs = schouten_bracket(p, schouten_bracket(q, r));
            PolyVector rhs = schouten_bracket(schouten_bracket(p, q), r);
            int sign = ((dp - 1) * (dq - 1)) % 2 == 0 ? 1 : -1;
            for (const auto& [t, c] : schouten_bracket(q, schouten_bracket(p, r)).terms) {
                rhs.terms[t] += Rational(sign) * c;
                if (rhs.terms[t].is_zero()) rhs.terms.erase(t);
            }
            ck.expect(lhs == rhs, "Schouten Jacobi");
            ++schouten_checked;
        }
    ck.expect(schouten_checked >= 20, "fewer than 20 Schouten Jacobi samples");
    // HKR bracket compatibility with the global sign +1, >= 10 cocycle pairs
    const int dim = 2;
    std::vector<std::pair<int, int>> grades{{1, 1}, {2, 1}, {1, 2}};
    int hkr_pairs = 0;
    for (auto [m1, n1] : grades)
        for (auto [m2, n2] : grades) {
            int m = m1 + m2 - 1;
            if (m > dim) continue;
            for (int trial = 0; trial < 2; ++trial) {
                PolyCochain z1, z2;
                for (const PolyOpLabel& L : enumerate_poly_labels(dim, m1, n1, m1)) {
                    int c = cf(rng);
                    if (c) z1[L] = Rational(c);
                }
                for (const PolyOpLabel& L : enumerate_poly_labels(dim, m2, n2, m2)) {
                    int c = cf(rng);
                    if (c) z2[L] = Rational(c);
                }
                if (z1.empty() || z2.empty()) continue;
                PolyVector p1 = hkr_project(z1, dim, m1, n1);
                PolyVector p2 = hkr_project(z2, dim, m2, n2);
                int D_safe = m1 + m2 + n1 + n2, D_inc = D_safe + 2, K = m1 + m2 + 1;
                Cochain c1{dim, {K, D_inc}, {}}, c2{dim, {K, D_inc}, {}};
                for (const auto& [L, c] : z1)
                    for (const auto& [f, v] : include_polydiff(L, D_inc)) {
                        c1.terms[f] += c * v;
                        if (c1.terms[f].is_zero()) c1.terms.erase(f);
                    }
                for (const auto& [L, c] : z2)
                    for (const auto& [f, v] : include_polydiff(L, D_inc)) {
                        c2.terms[f] += c * v;
                        if (c2.terms[f].is_zero()) c2.terms.erase(f);
                    }
                Cochain br = gerstenhaber_bracket_restricted(c1, c2, {K, D_safe});
                PolyVector hb = hkr_project_full(br, m);
                PolyVector sb = schouten_bracket(p1, p2);
                ck.expect(hb == sb, "HKR bracket compatibility at (" + std::to_string(m1) + "," +
                                        std::to_string(n1) + ")x(" + std::to_string(m2) + "," +
                                        std::to_string(n2) + ")");
                ++hkr_pairs;
            }
        }
    ck.expect(hkr_pairs >= 10, "fewer than 10 HKR cocycle pairs");
    // Maurer-Cartan: undeformed mu, and a gauge-trivial deformation
    {
        Cochain mu = mu_cochain(1, 4, 4);
        ck.expect(mc_check(mu).is_mc, "mc(mu) != 0");
        const int D_deep = 12, K = 4, D_report = 4;
        Cochain phi{1, {K, D_deep}, {}};
        phi.terms[{{Monomial(1, {1})}, Monomial(1, {1, 1})}] = Rational(2);
        phi.terms[{{Monomial(1, {1, 1})}, Monomial(1, {1, 1, 1, 1})}] = Rational(-1);
        Cochain id = identity_cochain(1, D_deep, K);
        Cochain t = id;
        for (const auto& [l, v] : phi.terms) t.terms[l] += v;
        Cochain mu_deep = mu_cochain(1, D_deep + 8, K);
        Cochain g = post_compose(neumann_inverse(phi), plug_slots(mu_deep, t));
        for (const auto& [l, v] : mu_deep.terms) {
            g.terms[l] -= v;
            if (g.terms[l].is_zero()) g.terms.erase(l);
        }
        Cochain gamma = restrict_to_window(g, {K, D_deep});
        ck.expect(!gamma.terms.empty(), "gauge deformation trivially zero");
        ck.expect(mc_check(gamma, {3, D_report}).is_mc, "mc(gauge deformation) != 0");
    }
    return {8, "brackets: [mu,mu]=0, d_H=[mu,.], Jacobi, HKR compatibility, Maurer-Cartan",
            ck.failures.empty(), true, ck.summary()};
}

CriterionResult criterion9_determinism() {
    namespace fs = std::filesystem;
    Checker ck;
    fs::path base = fs::temp_directory_path() /
                    ("permucell_det_" + std::to_string(static_cast<long>(::getpid())));
    fs::remove_all(base);
    fs::path a = base / "run_a", b = base / "run_b";
    write_suite_artifacts(a.string());
    write_suite_artifacts(b.string());
    std::vector<fs::path> files_a;
    for (const auto& e : fs::recursive_directory_iterator(a))
        if (e.is_regular_file()) files_a.push_back(fs::relative(e.path(), a));
    std::sort(files_a.begin(), files_a.end());
    ck.expect(!files_a.empty(), "no artifacts written");
    for (const auto& rel : files_a) {
        std::ifstream fa(a / rel, std::ios::binary), fb(b / rel, std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        ck.expect(fb.good() && sa.str() == sb.str(), "artifact differs: " + rel.string());
    }
    fs::remove_all(base);
    return {9, "determinism: repeated runs produce byte-identical artifacts", ck.failures.empty(),
            true, ck.summary()};
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    f << content;
}

}  // namespace

void write_suite_artifacts(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::path root(dir);

    FinChainComplex perm4 = build_perm_complex(4);
    write_file(root / "cells" / "perm_4_betti.json", betti_to_json(betti(perm4)));
    write_file(root / "cells" / "perm_4_betti.md", betti_to_markdown(betti(perm4)));
    std::ostringstream fv;
    fv << "dimension,cells\n";
    for (const auto& [d, c] : f_vector(perm4)) fv << d << ',' << c << '\n';
    write_file(root / "cells" / "perm_4_fvector.csv", fv.str());
    write_file(root / "cells" / "simplex_5_betti.json", betti_to_json(betti(build_simplex_complex(5))));

    FinChainComplex perm3 = build_perm_complex(3);
    write_file(root / "cells" / "perm_3_complex.json", complex_to_json(perm3));
    write_file(root / "cells" / "perm_3_boundary_deg-2.mtx", perm3.diff.at(-2).to_cache_string());

    write_file(root / "koszul_2_3_betti.json", betti_to_json(betti(build_koszul_complex(2, 3))));
    write_file(root / "bar_2_3_betti.json", betti_to_json(betti(build_bar_complex(2, 3))));
    write_file(root / "cobar_2_3_betti.json", betti_to_json(betti(build_cobar_complex(2, 3))));

    write_file(root / "hoch_poly_2_2_1_betti.json",
               betti_to_json(betti(build_polydiff_complex(2, 2, 1))));
    write_file(root / "hoch_full_1_w0_D4_betti.json",
               betti_to_json(betti(build_full_hochschild_complex(1, 0, 4))));
    write_file(root / "gs_poly_2_2_2_betti.json",
               betti_to_json(betti(build_polydiff_gs_complex(2, 2, 2))));
    write_file(root / "gs_full_1_w0_B3_betti.json",
               betti_to_json(betti(build_full_gs_complex(1, 0, 3, 3))));

    // a small bracket artifact: [mu, Euler] = 0 and an MC residual
    Cochain mu = mu_cochain(1, 4, 4);
    std::ostringstream br;
    br << "{\n  \"mu_bracket_mu_terms\": " << gerstenhaber_bracket(mu, mu).terms.size()
       << ",\n  \"mc_mu_is_flat\": " << (mc_check(mu).is_mc ? "true" : "false") << "\n}\n";
    write_file(root / "bracket_report.json", br.str());
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
    using Fn = std::function<CriterionResult()>;
    std::vector<Fn> fns{criterion1_cells,           criterion2_koszul,
                        criterion3_barcobar,        criterion4_polydiff_hochschild,
                        criterion5_chain_maps,      criterion6_full_hochschild,
                        criterion7_gs,              criterion8_brackets,
                        criterion9_determinism};
    std::vector<CriterionResult> results(fns.size());
    int jobs = std::max(1, opt.jobs);
    std::vector<std::future<void>> running;
    std::size_t next = 0;
    auto launch = [&](std::size_t i) {
        return std::async(std::launch::async, [&results, &fns, i] {
            auto t0 = std::chrono::steady_clock::now();
            results[i] = fns[i]();
            results[i].seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        });
    };
    while (next < fns.size() || !running.empty()) {
        while (next < fns.size() && static_cast<int>(running.size()) < jobs)
            running.push_back(launch(next++));
        running.front().wait();
        running.erase(running.begin());
    }
    if (!opt.artifact_dir.empty()) write_suite_artifacts(opt.artifact_dir);
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string format_report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name;
        if (!r.stable) os << " (not-yet-stable)";
        os << " - " << r.detail << " (" << r.seconds << "s)\n";
    }
    os << (all_passed(results) ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return os.str();
}

}  // namespace permucell::suite
