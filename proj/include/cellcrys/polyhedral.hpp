#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cellcrys/basics.hpp"
#include "cellcrys/cartan.hpp"

namespace cellcrys {

// Infinite index sequence iota(1), iota(2), ... realized lazily from a base
// cycle; consecutive letters must differ and every letter occurs.
struct Iota {
    CartanData cd;
    std::vector<int> cycle;

    static Iota cyclic(const CartanData& cd);                       // (1,2,...,n) repeated
    static Iota from_cycle(const CartanData& cd, std::vector<int>); // validated

    int at(int k) const {  // 1-based
        return cycle[static_cast<std::size_t>(k - 1) % cycle.size()];
    }
    int kplus(int k) const {
        for (int l = k + 1;; ++l)
            if (at(l) == at(k)) return l;
    }
    int kminus(int k) const {
        for (int l = k - 1; l >= 1; --l)
            if (at(l) == at(k)) return l;
        return 0;
    }
};

// Finitely supported integer sequence (x_1, x_2, ...).
struct ZInfElem {
    const Iota* iota = nullptr;
    std::vector<int> x;  // x[k-1]; zero beyond the stored window

    int rank() const { return iota->cd.rank; }
    int support() const;  // largest k with x_k != 0 (0 if none)
    int get(int k) const {
        return (k >= 1 && k <= static_cast<int>(x.size())) ? x[k - 1] : 0;
    }

    std::int64_t sigma_k(int k) const;
    std::int64_t sigma_i(int i) const;     // max over k with iota(k) = i; >= 0
    int m_f(int i) const;                  // min argmax
    int m_e(int i) const;                  // max argmax (only valid when sigma_i > 0)

    std::vector<std::int64_t> wt_fund() const;
    std::int64_t wt_pair(int i) const;
    TInt eps(int i) const { return TInt::of(sigma_i(i)); }
    TInt phi(int i) const { return TInt::of(wt_pair(i) + sigma_i(i)); }
    std::optional<ZInfElem> e(int i) const;
    std::optional<ZInfElem> f(int i) const;

    bool operator==(const ZInfElem& o) const;
    std::size_t hash() const;
};

// Finitely supported rational linear form sum phi_k x_k. Coefficients are
// kept as exact rationals (S_k can produce rational multiples transiently).
struct LinearFormInf {
    std::map<int, Rat> coef;  // k -> phi_k, no zeros

    Rat at(int k) const {
        auto it = coef.find(k);
        return it == coef.end() ? Rat(0) : it->second;
    }
    void set(int k, const Rat& v);
    Rat eval(const ZInfElem& x) const;
    bool operator<(const LinearFormInf& o) const { return coef < o.coef; }
    bool operator==(const LinearFormInf& o) const { return coef == o.coef; }
};

LinearFormInf coordinate_form(int k);
LinearFormInf beta_form(const Iota& iota, int k);
LinearFormInf S_k(const Iota& iota, int k, const LinearFormInf& phi);

struct XiResult {
    std::set<LinearFormInf> forms;
    bool stabilized = false;
    bool positivity_ok = false;  // first-occurrence coefficients nonnegative
};

// Closure of the coordinate forms under all S_k within a support window.
XiResult generate_Xi(const Iota& iota, int window, std::size_t form_cap = 10000,
                     int apply_cap = 50);

bool sigma_membership(const ZInfElem& x, const XiResult& xi);

// Z^inf element with membership-checked operators (the B(inf) model used as
// the polyhedral-side realization).
struct SigmaElem {
    ZInfElem z;
    const XiResult* xi = nullptr;

    int rank() const { return z.rank(); }
    std::vector<std::int64_t> wt_fund() const { return z.wt_fund(); }
    std::int64_t wt_pair(int i) const { return z.wt_pair(i); }
    TInt eps(int i) const { return z.eps(i); }
    TInt phi(int i) const { return z.phi(i); }
    std::optional<SigmaElem> e(int i) const {
        auto n = z.e(i);
        if (!n || !sigma_membership(*n, *xi)) return std::nullopt;
        return SigmaElem{*n, xi};
    }
    std::optional<SigmaElem> f(int i) const {
        auto n = z.f(i);
        if (!n || !sigma_membership(*n, *xi)) return std::nullopt;
        return SigmaElem{*n, xi};
    }
    bool operator==(const SigmaElem& o) const { return z == o.z; }
    std::size_t hash() const { return z.hash(); }
};

std::string xi_json(const XiResult& xi);

}  // namespace cellcrys
