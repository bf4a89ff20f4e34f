#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cellcrys/cellular.hpp"

using namespace cellcrys;

TEST_CASE("word context flattening") {
    auto ctx = WordCtx::canonical('A', 3);  // word 1,2,3,1,2,1
    CHECK(ctx->N == 6);
    CHECK(ctx->dindex[0] == std::make_pair(1, 1));
    CHECK(ctx->dindex[2] == std::make_pair(1, 3));
    CHECK(ctx->dindex[3] == std::make_pair(2, 1));
    CHECK(ctx->dindex[5] == std::make_pair(3, 1));
    CHECK(ctx->pos_of(2, 2) == 4);
    CHECK(ctx->pos_of(2, 3) == -1);
    auto g2 = WordCtx::canonical('G', 2);
    CHECK(g2->pos_of(3, 2) == 5);
}

TEST_CASE("cellular structure functions") {
    auto ctx = WordCtx::canonical('A', 2);  // 121
    std::vector<int> zero = {0, 0, 0};
    CHECK(cell_wt_fund(*ctx, zero) == std::vector<std::int64_t>{0, 0});
    std::vector<int> x = {1, 0, 0};
    CHECK(cell_wt_i(*ctx, x, 1) == -2);
    CHECK(cell_wt_i(*ctx, x, 2) == 1);
    // eps example: word 121, x = (0,0,1), eps_1 = 2
    std::vector<int> y = {0, 0, 1};
    CHECK(cell_eps(*ctx, y, 1) == TInt::of(2));
    CHECK(cell_eps(*ctx, zero, 1) == TInt::of(0));
}

TEST_CASE("catalog potentials") {
    // A2: c3 + c1 + c2/c3; tropical min(x3, x1, x2-x3)
    Potential a2 = potential_catalog('A', 2);
    auto names = a2.ctx->names;
    CHECK(a2.laurent ==
          poly_parse("c[2,1] + c[1,1] + c[1,2]*c[2,1]^-1", names));
    CHECK(a2.trop.form_count() == 3);
    CHECK(binf_member(a2, {0, 0, 0}));
    CHECK(binf_member(a2, {1, 1, 1}));
    CHECK_FALSE(binf_member(a2, {0, 0, 1}));
    // G2 has 14 tropical forms
    Potential g2 = potential_catalog('G', 2);
    CHECK(g2.trop.form_count() == 14);
    // B2 includes the coefficient-2 monomial whose form drops the 2
    Potential b2 = potential_catalog('B', 2);
    CHECK(b2.laurent.term_count() == 5);
    CHECK(b2.trop.form_count() == 5);
}

TEST_CASE("catalog equals oracle for the small types") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2},
                                                         {'G', 2}}) {
        INFO(std::string(1, f) << r);
        auto ctx = WordCtx::canonical(f, r);
        Potential cat = potential_catalog(f, r);
        Potential orc = potential_from_minors(ctx);
        CHECK(cat.laurent == orc.laurent);
        CHECK(cat.trop == orc.trop);
    }
}

TEST_CASE("per-minor oracle matches per-minor catalog including D4 partials") {
    auto d4 = WordCtx::canonical('D', 4);
    for (int i = 1; i <= 2; ++i) {
        INFO(i);
        CHECK(catalog_minor(*d4, i) == oracle_minor(*d4, i));
    }
    CHECK_THROWS(oracle_minor(*d4, 3));
    auto c3 = WordCtx::canonical('C', 3);
    for (int i = 1; i <= 3; ++i) CHECK(catalog_minor(*c3, i) == oracle_minor(*c3, i));
}

TEST_CASE("potential on a non-canonical word: A2 word 212") {
    auto cd = cartan_matrix('A', 2);
    auto ctx = WordCtx::make(cd, ReducedWord{{2, 1, 2}});
    Potential p = potential_from_minors(ctx);
    CHECK(p.laurent.is_subtraction_free());
    // B(infinity) truncations agree with the canonical-word one
    Potential q = potential_catalog('A', 2);
    auto g1 = binf_graph_potential(p, 6);
    auto g2 = binf_graph_potential(q, 6);
    CHECK(graph_isomorphic(g1.graph, g2.graph).has_value());
}

TEST_CASE("cell_e_pow properties") {
    auto ctx = WordCtx::canonical('C', 2);
    Rng rng(131);
    for (int t = 0; t < 10000; ++t) {
        std::vector<int> x;
        for (int k = 0; k < 4; ++k) x.push_back(static_cast<int>(rng.uniform(-5, 5)));
        for (int i = 1; i <= 2; ++i) {
            CHECK(cell_e_pow(*ctx, x, i, 0) == x);
            // n = 1 agrees with cell_step e; n = -1 with f
            auto e1 = cell_e_pow(*ctx, x, i, 1);
            auto s = cell_step(*ctx, x, i, -1, nullptr);
            REQUIRE(s.has_value());
            CHECK(e1 == *s);
            auto f1 = cell_e_pow(*ctx, x, i, -1);
            auto sf = cell_step(*ctx, x, i, +1, nullptr);
            CHECK(f1 == *sf);
            // one-parameter property
            int m = static_cast<int>(rng.uniform(-3, 3)), n = static_cast<int>(rng.uniform(-3, 3));
            CHECK(cell_e_pow(*ctx, cell_e_pow(*ctx, x, i, n), i, m) ==
                  cell_e_pow(*ctx, x, i, m + n));
        }
    }
}

TEST_CASE("free cellular ops equal the dual multi-tensor action") {
    Rng rng(137);
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2},
                                                         {'G', 2}}) {
        auto ctx = WordCtx::canonical(f, r);
        Potential pot = potential_catalog(f, r);
        for (int t = 0; t < 2000; ++t) {
            std::vector<int> x;
            for (int k = 0; k < ctx->N; ++k) x.push_back(static_cast<int>(rng.uniform(-4, 4)));
            TensorB tb = TensorB::from_cell(pot, x);
            CHECK(tb.cell_coords() == x);
            for (int i = 1; i <= r; ++i) {
                CHECK(cell_eps(*ctx, x, i) == tb.w.eps(i));
                CHECK(cell_wt_i(*ctx, x, i) == tb.w.wt_pair(i));
                auto cf = cell_step(*ctx, x, i, +1, nullptr);
                auto tf = tb.w.f(i);
                REQUIRE(cf.has_value());
                REQUIRE(tf.has_value());
                TensorB tfb{&pot, *tf};
                CHECK(tfb.cell_coords() == *cf);
                auto ce = cell_step(*ctx, x, i, -1, nullptr);
                auto te = tb.w.e(i);
                TensorB teb{&pot, *te};
                CHECK(teb.cell_coords() == *ce);
            }
        }
    }
}

TEST_CASE("A2 potential cutoff blocks e at the origin") {
    Potential pot = potential_catalog('A', 2);
    std::vector<int> zero = {0, 0, 0};
    CHECK_FALSE(cell_step(*pot.ctx, zero, 1, -1, &pot).has_value());
    // f from 0 bumps the first occurrence of the letter
    auto f1 = cell_step(*pot.ctx, zero, 1, +1, &pot);
    REQUIRE(f1.has_value());
    CHECK(*f1 == std::vector<int>{1, 0, 0});
    auto f2 = cell_step(*pot.ctx, zero, 2, +1, &pot);
    CHECK(*f2 == std::vector<int>{0, 1, 0});
}

TEST_CASE("triple realization agreement at depth 6 for A2") {
    Potential pot = potential_catalog('A', 2);
    auto ga = binf_graph_potential(pot, 6);
    auto gb = binf_graph_polyhedral(pot.ctx->cd, 6);
    auto gc = binf_graph_tensor(pot, 6);
    CHECK(ga.graph.size() == gb.graph.size());
    CHECK(graph_isomorphic(ga.graph, gb.graph).has_value());
    CHECK(graph_isomorphic(ga.graph, gc.graph).has_value());
    CHECK(ga.graph.validate(pot.ctx->dual.a).empty());
}

TEST_CASE("psi_plus") {
    Potential pot = potential_catalog('A', 2);
    auto [xi0, w0] = psi_plus(pot, {0, 0, 0}, 1);
    CHECK(w0 == 0);
    CHECK(xi0 == std::vector<int>{0, 0, 0});
    // i-leading word: xi zeroes x1, omega = x1
    auto [xi1, w1] = psi_plus(pot, {2, 1, 1}, 1);
    CHECK(w1 == 2);
    CHECK(xi1 == std::vector<int>{0, 1, 1});
    // strict morphism check on a depth-5 truncation
    auto gen = binf_graph_potential(pot, 5);
    using Pair = Tensor<CellB, BiElem>;
    auto errs = strict_morphism_check<CellB, Pair>(
        gen.elems,
        [&](const CellB& b) {
            auto [z, w] = psi_plus(pot, b.x, 1);
            return Pair{CellB{&pot, z}, BiElem{&pot.ctx->dual, 1, -static_cast<int>(w)}};
        },
        2);
    for (auto& e : errs) INFO(e);
    CHECK(errs.empty());
}

TEST_CASE("ks_check passes for A2 and flags injected faults") {
    Potential pot = potential_catalog('A', 2);
    KsReport rep = ks_check(pot, 6);
    for (auto& m : rep.messages) INFO(m);
    CHECK(rep.all());
    // drop the bare x1 form: uniqueness or omega must fail
    Potential broken = pot;
    TropForm t(pot.ctx->N);
    for (auto& f : pot.trop.forms())
        if (!(f[0] == 1 && f[1] == 0 && f[2] == 0)) t.add_form(f);
    broken.trop = t;
    CHECK_FALSE(minx1_structure_check(broken));
    KsReport rep2 = ks_check(broken, 4);
    CHECK_FALSE(rep2.all());
}

TEST_CASE("minx1 structure") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2},
                                                         {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
        INFO(std::string(1, f) << r);
        CHECK(minx1_structure_check(potential_catalog(f, r)));
    }
    Potential fake = potential_catalog('A', 2);
    TropForm t(3);
    t.add_form({2, 0, 0});
    t.add_form({1, 0, 0});
    fake.trop = t;
    CHECK_FALSE(minx1_structure_check(fake));
}

TEST_CASE("monomial restatements reproduce the catalogs") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'B', 3}, {'C', 2},
                                                         {'C', 3}, {'D', 4}, {'G', 2}}) {
        INFO(std::string(1, f) << r);
        auto errs = monomial_restatement_check(f, r);
        for (auto& e : errs) INFO(e);
        CHECK(errs.empty());
    }
}

TEST_CASE("lower potential is lower-normal on A2") {
    auto ctx = WordCtx::canonical('A', 2);
    Potential low = potential_lower_from_minors(ctx);
    CHECK(low.laurent.is_subtraction_free());
    // phi_i(b) = max chain of in-set f-steps on a box sample
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                std::vector<int> x = {a, b, c};
                if (low.trop.eval(x) < 0) continue;
                for (int i = 1; i <= 2; ++i) {
                    int count = 0;
                    std::vector<int> cur = x;
                    while (true) {
                        auto n = cell_step(*ctx, cur, i, +1, &low);
                        if (!n) break;
                        cur = *n;
                        ++count;
                        REQUIRE(count < 100);
                    }
                    TInt phi = cell_eps(*ctx, x, i) + TInt::of(cell_wt_i(*ctx, x, i));
                    CHECK(TInt::of(count) == phi);
                }
            }
}
