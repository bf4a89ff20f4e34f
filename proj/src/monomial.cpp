#include "cellcrys/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cellcrys {

MonCtx MonCtx::from_cycle(const CartanData& cd, const std::vector<int>& cycle) {
    MonCtx ctx;
    ctx.cd = cd;
    int n = cd.rank;
    ctx.p.assign(n, std::vector<int>(n, 0));
    std::vector<int> pos(n + 1, -1);
    for (std::size_t a = 0; a < cycle.size(); ++a) {
        check(cycle[a] >= 1 && cycle[a] <= n, "sign cycle: letter out of range");
        check(pos[cycle[a]] < 0, "sign cycle: repeated letter");
        pos[cycle[a]] = static_cast<int>(a);
    }
    for (int i = 1; i <= n; ++i) check(pos[i] >= 0, "sign cycle: missing letter");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) ctx.p[i - 1][j - 1] = pos[i] < pos[j] ? 1 : 0;
    return ctx;
}

MonomialElem MonomialElem::var(const MonCtx& ctx, int m, int i, int power) {
    MonomialElem y;
    y.ctx = &ctx;
    if (power != 0) y.l[{m, i}] = power;
    return y;
}

void MonomialElem::mul_var(int m, int i, int power) {
    if (power == 0) return;
    auto key = std::make_pair(m, i);
    auto it = l.find(key);
    if (it == l.end()) {
        l[key] = power;
    } else {
        it->second += power;
        if (it->second == 0) l.erase(it);
    }
}

MonomialElem MonomialElem::times(const MonomialElem& o) const {
    MonomialElem out = *this;
    for (const auto& [k, v] : o.l) out.mul_var(k.first, k.second, v);
    return out;
}

std::vector<std::int64_t> MonomialElem::wt_fund() const {
    std::vector<std::int64_t> w(ctx->cd.rank, 0);
    for (const auto& [k, v] : l) w[k.second - 1] += v;
    return w;
}

std::int64_t MonomialElem::wt_pair(int i) const {
    std::int64_t s = 0;
    for (const auto& [k, v] : l)
        if (k.second == i) s += v;
    return s;
}

namespace {

// The prefix sum n -> sum_{k<=n} l_{k,i} is a step function, constant between
// support points, 0 before the first and equal to the color total after the
// last. phi_i = its max; n_f = min argmax (a support point, when phi > 0);
// n_e = max argmax (the right endpoint of the rightmost maximizing interval,
// finite exactly when eps_i > 0).
struct PrefixData {
    std::int64_t best = 0;
    std::int64_t total = 0;
    int nf = std::numeric_limits<int>::min();
    int ne = std::numeric_limits<int>::min();
    bool ne_finite = false;
};

PrefixData color_prefixes(const MonomialElem& y, int i) {
    PrefixData d;
    std::vector<std::pair<int, int>> entries;  // (m, l_{m,i}), sorted by m
    for (const auto& [k, v] : y.l)
        if (k.second == i) entries.emplace_back(k.first, v);
    std::sort(entries.begin(), entries.end());
    std::int64_t run = 0;
    for (auto& [m, v] : entries) {
        run += v;
        if (run > d.best) {
            d.best = run;
            d.nf = m;
        }
    }
    d.total = run;
    // rightmost interval attaining the max, scanned from the right; the
    // final interval [m_r, inf) has level = total
    if (d.best > d.total) {
        std::int64_t level = d.total;
        for (int k = static_cast<int>(entries.size()) - 1; k >= 0; --k) {
            level -= entries[k].second;  // level on [m_{k-1}, m_k - 1]
            if (level == d.best) {
                d.ne = entries[k].first - 1;
                d.ne_finite = true;
                break;
            }
        }
        check(d.ne_finite, "monomial prefix scan: maximizing interval not found");
    }
    return d;
}

}  // namespace

TInt MonomialElem::phi(int i) const { return TInt::of(color_prefixes(*this, i).best); }

TInt MonomialElem::eps(int i) const {
    auto d = color_prefixes(*this, i);
    return TInt::of(d.best - d.total);
}

std::optional<MonomialElem> MonomialElem::f(int i) const {
    auto d = color_prefixes(*this, i);
    if (d.best <= 0) return std::nullopt;
    MonomialElem a = monomial_A(*ctx, d.nf, i);
    MonomialElem out = *this;
    for (const auto& [k, v] : a.l) out.mul_var(k.first, k.second, -v);
    return out;
}

std::optional<MonomialElem> MonomialElem::e(int i) const {
    auto d = color_prefixes(*this, i);
    if (d.best - d.total <= 0) return std::nullopt;
    // eps > 0 means the running max is attained strictly before the end of
    // the support, so ne is a finite index here
    MonomialElem a = monomial_A(*ctx, d.ne, i);
    return times(a);
}

std::size_t MonomialElem::hash() const {
    std::size_t h = l.size();
    for (const auto& [k, v] : l) {
        hash_mix(h, static_cast<std::size_t>(k.first + (1 << 16)));
        hash_mix(h, static_cast<std::size_t>(k.second));
        hash_mix(h, static_cast<std::size_t>(v + (1 << 16)));
    }
    return h;
}

std::string MonomialElem::str() const {
    if (l.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : l) {
        if (!first) os << "*";
        first = false;
        os << "Y[" << k.first << "," << k.second << "]";
        if (v != 1) os << "^" << v;
    }
    return os.str();
}

MonomialElem monomial_A(const MonCtx& ctx, int m, int i) {
    MonomialElem a = MonomialElem::var(ctx, m, i);
    a.mul_var(m + 1, i, 1);
    for (int j = 1; j <= ctx.cd.rank; ++j) {
        if (j == i) continue;
        int aji = ctx.cd.at(j, i);
        if (aji != 0) a.mul_var(m + ctx.p[j - 1][i - 1], j, aji);
    }
    return a;
}

}  // namespace cellcrys
