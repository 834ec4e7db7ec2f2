#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "permucell/cells.hpp"
#include "permucell/chain.hpp"

using namespace permucell;

TEST_CASE("validate passes for cell complexes") {
    CHECK(validate(build_simplex_complex(3)).ok);
    CHECK(validate(build_perm_complex(4)).ok);
}

TEST_CASE("validate catches a flipped sign in a P_2 edge boundary") {
    FinChainComplex cx = build_perm_complex(3);
    // flip one entry of the edge->vertex differential
    SparseMatrix& m = cx.diff.at(-1);
    REQUIRE(!m.row(0).empty());
    int col = m.row(0).front().first;
    Rational v = m.row(0).front().second;
    m.add(0, col, Rational(-2) * v);  // v -> -v
    ValidationReport rep = validate(cx);
    CHECK(!rep.ok);
    REQUIRE(!rep.issues.empty());
    CHECK(rep.issues.front().degree == -2);
    CHECK(!rep.issues.front().label.empty());
    CHECK_THROWS(betti(cx));
}

TEST_CASE("betti of contractible cell complexes is concentrated at the vertices") {
    BettiTable simp = betti(build_simplex_complex(3));
    CHECK(simp == BettiTable{{-2, 0}, {-1, 0}, {0, 1}});
    BettiTable perm = betti(build_perm_complex(3));
    CHECK(perm == BettiTable{{-2, 0}, {-1, 0}, {0, 1}});
}

TEST_CASE("betti of the empty complex is empty") {
    FinChainComplex empty;
    CHECK(betti(empty).empty());
    CHECK(euler(empty) == 0);
}

TEST_CASE("euler characteristics") {
    CHECK(euler(build_perm_complex(3)) == 1);   // 6 - 6 + 1
    CHECK(euler(build_perm_complex(4)) == 1);   // 24 - 36 + 14 - 1
    CHECK(euler(build_simplex_complex(4)) == 1);  // 4 - 6 + 4 - 1
}

TEST_CASE("alternating betti sum equals euler characteristic") {
    for (int n = 1; n <= 4; ++n) {
        FinChainComplex cx = build_perm_complex(n);
        BettiTable t = betti(cx);
        long alt = 0;
        for (const auto& [d, b] : t) alt += (d % 2 == 0 ? 1 : -1) * b;
        CHECK(alt == euler(cx));
    }
}

TEST_CASE("betti is invariant under basis relabeling with matching conjugation") {
    std::mt19937 rng(42);
    FinChainComplex cx = build_perm_complex(3);
    BettiTable before = betti(cx);

    FinChainComplex shuffled = cx;
    std::map<int, std::vector<int>> perm;  // new index of old basis vector
    for (int d : cx.degrees) {
        int n = cx.dim_at(d);
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        perm[d] = p;
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i) labels[p[i]] = cx.basis[d][i];
        shuffled.basis[d] = labels;
    }
    for (auto& [d, m] : cx.diff) {
        SparseMatrix conj(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) conj.add(perm[d + 1][r], perm[d][c], v);
        shuffled.diff[d] = conj;
    }
    CHECK(betti(shuffled) == before);
}

TEST_CASE("complex JSON round-trip") {
    FinChainComplex cx = build_perm_complex(3);
    std::string text = complex_to_json(cx);
    FinChainComplex back = complex_from_json(text);
    CHECK(back.degrees == cx.degrees);
    CHECK(back.basis == cx.basis);
    for (const auto& [d, m] : cx.diff) CHECK(back.diff.at(d) == m);
    CHECK(complex_to_json(back) == text);
}

TEST_CASE("betti table emitters are deterministic") {
    BettiTable t{{-1, 0}, {0, 1}};
    CHECK(betti_to_json(t) == "{\n  \"-1\": 0,\n  \"0\": 1\n}\n");
    CHECK(betti_to_markdown(t) == "| degree | betti |\n|---|---|\n| -1 | 0 |\n| 0 | 1 |\n");
    CHECK(betti_to_csv(t) == "degree,betti\n-1,0\n0,1\n");
}
