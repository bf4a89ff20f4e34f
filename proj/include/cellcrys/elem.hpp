#pragma once

#include <optional>
#include <vector>

#include "cellcrys/basics.hpp"
#include "cellcrys/cartan.hpp"

namespace cellcrys {

// Element (x)_i of the elementary crystal B_i over a fixed Cartan datum.
// The absorbing element 0 is represented as an empty optional everywhere,
// never as a node value.
struct BiElem {
    const CartanData* cd = nullptr;
    int color = 0;  // i
    int x = 0;

    int rank() const { return cd->rank; }
    std::vector<std::int64_t> wt_fund() const {
        std::vector<std::int64_t> w(cd->rank, 0);
        for (int j = 1; j <= cd->rank; ++j) w[j - 1] = static_cast<std::int64_t>(x) * cd->at(j, color);
        return w;
    }
    std::int64_t wt_pair(int i) const { return static_cast<std::int64_t>(x) * cd->at(i, color); }
    TInt eps(int i) const { return i == color ? TInt::of(-x) : TInt::ninf(); }
    TInt phi(int i) const { return i == color ? TInt::of(x) : TInt::ninf(); }
    std::optional<BiElem> e(int i) const {
        if (i != color) return std::nullopt;
        return BiElem{cd, color, x + 1};
    }
    std::optional<BiElem> f(int i) const {
        if (i != color) return std::nullopt;
        return BiElem{cd, color, x - 1};
    }
    bool operator==(const BiElem& o) const { return color == o.color && x == o.x; }
    std::size_t hash() const {
        std::size_t h = 1469598103u;
        hash_mix(h, static_cast<std::size_t>(color));
        hash_mix(h, static_cast<std::size_t>(x + (1 << 20)));
        return h;
    }
};

// Binary tensor product b1 (x) b2 with the standard rules; the left factor is
// b1. Works for any pair of element types exposing the common interface.
template <typename L, typename R>
struct Tensor {
    L left;
    R right;

    int rank() const { return left.rank(); }
    std::vector<std::int64_t> wt_fund() const {
        auto w = left.wt_fund();
        auto v = right.wt_fund();
        for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
        return w;
    }
    std::int64_t wt_pair(int i) const { return left.wt_pair(i) + right.wt_pair(i); }
    TInt eps(int i) const {
        return tmax(left.eps(i), right.eps(i) - left.wt_pair(i));
    }
    TInt phi(int i) const {
        return tmax(right.phi(i), left.phi(i) + right.wt_pair(i));
    }
    std::optional<Tensor> e(int i) const {
        if (left.phi(i) >= right.eps(i)) {
            auto l = left.e(i);
            if (!l) return std::nullopt;
            return Tensor{*l, right};
        }
        auto r = right.e(i);
        if (!r) return std::nullopt;
        return Tensor{left, *r};
    }
    std::optional<Tensor> f(int i) const {
        if (left.phi(i) > right.eps(i)) {
            auto l = left.f(i);
            if (!l) return std::nullopt;
            return Tensor{*l, right};
        }
        auto r = right.f(i);
        if (!r) return std::nullopt;
        return Tensor{left, *r};
    }
    bool operator==(const Tensor& o) const { return left == o.left && right == o.right; }
    std::size_t hash() const {
        std::size_t h = left.hash();
        hash_mix(h, right.hash());
        return h;
    }
};

// Multi-fold tensor of B_i's with the closed selection rule. The selection
// indices a_k = eps_i(b_k) - sum_{j<k} <h_i, wt(b_j)> satisfy
// eps_i(tensor) = max_k a_k; e acts at the first maximizer, f at the last.
struct BiWord {
    const CartanData* cd = nullptr;
    std::vector<int> colors;
    std::vector<int> xs;

    int rank() const { return cd->rank; }
    std::size_t size() const { return colors.size(); }
    std::vector<std::int64_t> wt_fund() const {
        std::vector<std::int64_t> w(cd->rank, 0);
        for (std::size_t k = 0; k < colors.size(); ++k)
            for (int j = 1; j <= cd->rank; ++j)
                w[j - 1] += static_cast<std::int64_t>(xs[k]) * cd->at(j, colors[k]);
        return w;
    }
    std::int64_t wt_pair(int i) const {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < colors.size(); ++k)
            s += static_cast<std::int64_t>(xs[k]) * cd->at(i, colors[k]);
        return s;
    }
    // a_k sequence restricted bookkeeping; -inf at other colors
    std::vector<TInt> selection(int i) const {
        std::vector<TInt> a(colors.size());
        std::int64_t acc = 0;  // sum of <h_i, wt(b_j)> for j < k
        for (std::size_t k = 0; k < colors.size(); ++k) {
            a[k] = (colors[k] == i) ? TInt::of(-xs[k] - acc) : TInt::ninf();
            acc += static_cast<std::int64_t>(xs[k]) * cd->at(i, colors[k]);
        }
        return a;
    }
    TInt eps(int i) const {
        TInt m = TInt::ninf();
        for (auto a : selection(i)) m = tmax(m, a);
        return m;
    }
    TInt phi(int i) const { return eps(i) + TInt::of(wt_pair(i)); }
    // positions (0-based) where e and f act, or -1
    std::pair<int, int> action_slots(int i) const {
        auto a = selection(i);
        TInt best = TInt::ninf();
        for (auto v : a) best = tmax(best, v);
        if (!best.finite()) return {-1, -1};
        int ke = -1, kf = -1;
        for (int k = 0; k < static_cast<int>(a.size()); ++k)
            if (a[k] == best) {
                if (ke < 0) ke = k;
                kf = k;
            }
        return {ke, kf};
    }
    std::optional<BiWord> e(int i) const {
        auto [ke, kf] = action_slots(i);
        if (ke < 0) return std::nullopt;
        BiWord out = *this;
        out.xs[ke] += 1;
        return out;
    }
    std::optional<BiWord> f(int i) const {
        auto [ke, kf] = action_slots(i);
        if (kf < 0) return std::nullopt;
        BiWord out = *this;
        out.xs[kf] -= 1;
        return out;
    }
    bool operator==(const BiWord& o) const { return colors == o.colors && xs == o.xs; }
    std::size_t hash() const {
        std::size_t h = colors.size();
        for (std::size_t k = 0; k < colors.size(); ++k) {
            hash_mix(h, static_cast<std::size_t>(colors[k]));
            hash_mix(h, static_cast<std::size_t>(xs[k] + (1 << 20)));
        }
        return h;
    }
};

}  // namespace cellcrys
