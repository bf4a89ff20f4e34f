#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellcrys/basics.hpp"
#include "cellcrys/cartan.hpp"

namespace cellcrys {

// Sign table p_{i,j} in {0,1} with p_{i,j} + p_{j,i} = 1, plus its Cartan datum.
struct MonCtx {
    CartanData cd;
    std::vector<std::vector<int>> p;  // p[i-1][j-1], diagonal unused

    static MonCtx from_cycle(const CartanData& cd, const std::vector<int>& cycle);
};

// Monomial in the doubly-indexed variables Y_{m,i}; finitely many nonzero
// exponents l_{m,i}.
struct MonomialElem {
    const MonCtx* ctx = nullptr;
    std::map<std::pair<int, int>, int> l;  // (m, i) -> exponent, no zeros

    static MonomialElem var(const MonCtx& ctx, int m, int i, int power = 1);

    int rank() const { return ctx->cd.rank; }
    void mul_var(int m, int i, int power);
    MonomialElem times(const MonomialElem& o) const;

    std::vector<std::int64_t> wt_fund() const;
    std::int64_t wt_pair(int i) const;
    TInt eps(int i) const;
    TInt phi(int i) const;
    std::optional<MonomialElem> e(int i) const;
    std::optional<MonomialElem> f(int i) const;

    bool operator==(const MonomialElem& o) const { return l == o.l; }
    std::size_t hash() const;
    std::string str() const;  // e.g. "Y[1,1]*Y[2,1]^-1"
};

// A_{m,i} = Y_{m,i} Y_{m+1,i} prod_{j != i} Y_{m+p_{j,i}, j}^{a_{j,i}}
MonomialElem monomial_A(const MonCtx& ctx, int m, int i);

}  // namespace cellcrys
