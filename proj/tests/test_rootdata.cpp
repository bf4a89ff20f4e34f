#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cellcrys/cartan.hpp"
#include "cellcrys/weyl.hpp"

using namespace cellcrys;

TEST_CASE("cartan matrices match the standard tables") {
    auto a2 = cartan_matrix('A', 2);
    CHECK(a2.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    auto g2 = cartan_matrix('G', 2);
    CHECK(g2.a == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
    CHECK(g2.at(1, 2) * g2.at(2, 1) == 3);
    auto b2 = cartan_matrix('B', 2);
    auto c2 = cartan_matrix('C', 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(b2.a[i][j] == c2.a[j][i]);
    CHECK_THROWS(cartan_matrix('D', 3));
    CHECK_THROWS(cartan_matrix('E', 9));
}

TEST_CASE("langlands dual transposes and swaps B/C") {
    auto a3 = cartan_matrix('A', 3);
    CHECK(langlands_dual(a3) == a3);
    auto b2 = cartan_matrix('B', 2);
    auto d = langlands_dual(b2);
    CHECK(d.family == 'C');
    CHECK(d == cartan_matrix('C', 2));
    for (char f : {'A', 'B', 'C', 'D', 'G'}) {
        int r = (f == 'A') ? 3 : (f == 'D' ? 4 : 2);
        auto cd = cartan_matrix(f, r);
        CHECK(langlands_dual(langlands_dual(cd)) == cd);
    }
}

TEST_CASE("reflections") {
    auto a2 = cartan_matrix('A', 2);
    // s_1 Lambda_1 = -Lambda_1 + Lambda_2
    WeightVec l1 = fundamental_weight(a2, 1);
    WeightVec r = reflect(a2, 1, l1);
    CHECK(r.c == std::vector<std::int64_t>{-1, 1});
    // s_i Lambda_j = Lambda_j for i != j
    CHECK(reflect(a2, 2, l1) == l1);
    // involution on a random weight sample
    auto g2 = cartan_matrix('G', 2);
    Rng rng(7);
    for (int t = 0; t < 10000; ++t) {
        WeightVec w;
        w.c = {rng.uniform(-50, 50), rng.uniform(-50, 50)};
        for (int i = 1; i <= 2; ++i) {
            CHECK(reflect(g2, i, reflect(g2, i, w)) == w);
            CHECK(reflect(a2, i, reflect(a2, i, w)) == w);
        }
    }
    // G2: s_1(alpha_2) by direct arithmetic: alpha_2 - a_{12} alpha_1
    RootVec a_2 = simple_root(g2, 2);
    RootVec s1a2 = reflect(g2, 1, a_2);
    CHECK(s1a2.c == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("is_reduced and canonical longest words") {
    auto a2 = cartan_matrix('A', 2);
    CHECK(is_reduced(a2, ReducedWord{{1, 2, 1}}));
    CHECK_FALSE(is_reduced(a2, ReducedWord{{1, 1}}));
    CHECK(is_reduced_longest(a2, ReducedWord{{1, 2, 1}}));
    CHECK(is_reduced_longest(a2, ReducedWord{{2, 1, 2}}));

    // every canonical word is reduced longest, all families rank <= 8
    std::vector<std::pair<char, std::vector<int>>> fams = {
        {'A', {1, 2, 3, 4, 5, 6, 7, 8}}, {'B', {2, 3, 4, 5, 6, 7, 8}},
        {'C', {2, 3, 4, 5, 6, 7, 8}},    {'D', {4, 5, 6, 7, 8}},
        {'E', {6, 7, 8}},                {'F', {4}},
        {'G', {2}}};
    for (auto& [f, ranks] : fams)
        for (int r : ranks) {
            auto cd = cartan_matrix(f, r);
            auto w = canonical_longest_word(cd);
            INFO(cd.name());
            CHECK(is_reduced_longest(cd, w));
        }
    CHECK(canonical_longest_word(cartan_matrix('A', 3)).letters ==
          std::vector<int>{1, 2, 3, 1, 2, 1});
    CHECK(canonical_longest_word(cartan_matrix('F', 4)).size() == 24);
    CHECK(canonical_longest_word(cartan_matrix('G', 2)).letters ==
          std::vector<int>{1, 2, 1, 2, 1, 2});
}

TEST_CASE("positive roots from word") {
    auto a2 = cartan_matrix('A', 2);
    auto roots = positive_roots_from_word(a2, ReducedWord{{1, 2, 1}});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].c == std::vector<std::int64_t>{0, 1});
    CHECK(roots[1].c == std::vector<std::int64_t>{1, 1});
    CHECK(roots[2].c == std::vector<std::int64_t>{1, 0});

    // C2: four distinct positive roots matching the closed list
    auto c2 = cartan_matrix('C', 2);
    auto cr = positive_roots_from_word(c2, ReducedWord{{1, 2, 1, 2}});
    std::set<std::vector<std::int64_t>> got;
    for (auto& r : cr) got.insert(r.c);
    CHECK(got == std::set<std::vector<std::int64_t>>{{0, 1}, {1, 1}, {2, 1}, {1, 0}});

    // every family rank <= 8: |Delta_+| distinct nonnegative vectors,
    // each simple root exactly once
    for (auto& [f, ranks] : std::vector<std::pair<char, std::vector<int>>>{
             {'A', {4}}, {'B', {4}}, {'C', {4}}, {'D', {5}}, {'E', {6}}, {'F', {4}}, {'G', {2}}}) {
        for (int r : ranks) {
            auto cd = cartan_matrix(f, r);
            auto w = canonical_longest_word(cd);
            auto rs = positive_roots_from_word(cd, w);
            std::set<std::vector<std::int64_t>> s;
            int simple_count = 0;
            for (auto& rv : rs) {
                s.insert(rv.c);
                std::int64_t total = 0;
                for (auto x : rv.c) {
                    CHECK(x >= 0);
                    total += x;
                }
                if (total == 1) ++simple_count;
            }
            CHECK(s.size() == rs.size());
            CHECK(simple_count == cd.rank);
            CHECK(rs.size() == positive_roots(cd).size());
        }
    }
}

TEST_CASE("kplus and kminus") {
    ReducedWord w{{1, 2, 1}};
    CHECK(kplus(w, 1) == 3);
    CHECK(kplus(w, 2) == 0);
    CHECK(kminus(w, 3) == 1);
    CHECK(kminus(w, 1) == 0);
    // (1..n)^n type C: kplus(k) = k+n whenever k <= n(n-1)
    auto c3 = cartan_matrix('C', 3);
    auto cw = canonical_longest_word(c3);
    for (int k = 1; k <= 6; ++k) CHECK(kplus(cw, k) == k + 3);
}

TEST_CASE("word graph paths") {
    auto a2 = cartan_matrix('A', 2);
    auto p = word_graph_path(a2, ReducedWord{{1, 2, 1}}, ReducedWord{{2, 1, 2}});
    REQUIRE(p.has_value());
    CHECK(p->size() == 1);
    CHECK((*p)[0].len == 3);
    auto same = word_graph_path(a2, ReducedWord{{1, 2, 1}}, ReducedWord{{1, 2, 1}});
    REQUIRE(same.has_value());
    CHECK(same->empty());
    auto c2 = cartan_matrix('C', 2);
    auto q = word_graph_path(c2, ReducedWord{{1, 2, 1, 2}}, ReducedWord{{2, 1, 2, 1}});
    REQUIRE(q.has_value());
    CHECK(q->size() == 1);
    CHECK((*q)[0].len == 4);
    // replaying the path reproduces the target
    auto a3 = cartan_matrix('A', 3);
    ReducedWord from = canonical_longest_word(a3);
    ReducedWord to{{3, 2, 3, 1, 2, 3}};
    REQUIRE(is_reduced_longest(a3, to));
    auto path = word_graph_path(a3, from, to);
    REQUIRE(path.has_value());
    ReducedWord cur = from;
    for (auto& m : *path) cur = apply_move(a3, cur, m);
    CHECK(cur == to);
    // inequivalent words have no path
    CHECK_FALSE(word_graph_path(a3, ReducedWord{{1, 2}}, ReducedWord{{2, 3}}).has_value());
}

TEST_CASE("partner index") {
    auto a3 = cartan_matrix('A', 3);
    auto w = canonical_longest_word(a3);  // starts with 1
    CHECK(partner_index(a3, w) == 3);     // A_n: k = n+1-i_1
    auto b3 = cartan_matrix('B', 3);
    CHECK(partner_index(b3, canonical_longest_word(b3)) == 1);
    auto c3 = cartan_matrix('C', 3);
    CHECK(partner_index(c3, canonical_longest_word(c3)) == 1);

    // rewritten word s_{i_2}...s_{i_N}s_k is reduced and equals w0 on weights
    for (char f : {'A', 'B', 'C', 'G'}) {
        auto cd = cartan_matrix(f, f == 'A' ? 3 : (f == 'G' ? 2 : 3));
        auto w0 = canonical_longest_word(cd);
        int k = partner_index(cd, w0);
        ReducedWord rewritten;
        for (int t = 2; t <= w0.size(); ++t) rewritten.letters.push_back(w0.at(t));
        rewritten.letters.push_back(k);
        CHECK(is_reduced_longest(cd, rewritten));
        for (int i = 1; i <= cd.rank; ++i) {
            RootVec v = simple_root(cd, i);
            CHECK(word_action(cd, w0, v) == word_action(cd, rewritten, v));
        }
    }
    // E6 canonical word: -alpha_k = w0(alpha_{i_1}) by direct action
    auto e6 = cartan_matrix('E', 6);
    auto w0 = canonical_longest_word(e6);
    int k = partner_index(e6, w0);
    RootVec img = word_action(e6, w0, simple_root(e6, w0.at(1)));
    RootVec neg = simple_root(e6, k);
    for (auto& x : neg.c) x = -x;
    CHECK(img == neg);
}
