#include "cellcrys/chamber.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>

namespace cellcrys {

namespace {

// Model data: which small rep and which node pair realizes the ordered
// Cartan pair (p, q) = (a_{ij}, a_{ji}).
struct Model {
    CartanData cd;
    int ni, nj;
};

Model model_for(int p, int q) {
    if (p == -1 && q == -1) return {cartan_matrix('A', 2), 1, 2};
    if (p == -2 && q == -1) return {cartan_matrix('C', 2), 1, 2};
    if (p == -1 && q == -2) return {cartan_matrix('C', 2), 2, 1};
    if (p == -3 && q == -1) return {cartan_matrix('G', 2), 2, 1};
    if (p == -1 && q == -3) return {cartan_matrix('G', 2), 1, 2};
    check(false, "chamber_solve: unsupported Cartan pair");
    return {cartan_matrix('A', 2), 1, 2};
}

RationalPair rp_const(int nv, int c) { return RationalPair::of(LaurentPoly::constant(nv, c)); }
RationalPair rp_var(int nv, int idx) { return RationalPair::of(LaurentPoly::var(nv, idx)); }

// generic symbolic product used to locate identically-zero entries of the
// shorter word's cell
std::vector<std::pair<int, int>> vanishing_entries(const MatrixRep& rep,
                                                   const std::vector<int>& word) {
    int nv = static_cast<int>(word.size());
    SymMatrix m = rep.yb(word[0], nv, 0);
    for (int k = 1; k < nv; ++k) m = m * rep.yb(word[k], nv, k);
    std::vector<std::pair<int, int>> zeros;
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            if (m.at(r, c).is_zero()) zeros.emplace_back(r, c);
    return zeros;
}

// Pool of content-free polynomial factors discovered during peeling. Every
// denominator in the computation is a product of pool powers, so matrix
// entries are kept as num / prod pool[i]^{e_i} with exact cancellation by
// trial division.
struct Pool {
    std::vector<LaurentPoly> polys;

    // strips monomial/integer content and sign; returns -1 for Laurent units
    int intern(LaurentPoly f) {
        check(!f.is_zero(), "pool: zero factor");
        Expo m = f.monomial_content();
        for (auto& x : m) x = -x;
        f = f * LaurentPoly::monomial(f.nvars(), m, 1);
        Int g = f.integer_content();
        if (f.terms().rbegin()->second < 0) g = -g;
        LaurentPoly out(f.nvars());
        for (const auto& [e, c] : f.terms()) out.add_term(e, c / g);
        if (out.is_one()) return -1;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (polys[i] == out) return static_cast<int>(i);
        polys.push_back(out);
        return static_cast<int>(polys.size()) - 1;
    }
};

struct FRP {
    LaurentPoly num;
    std::map<int, int> den;  // pool index -> exponent > 0
    Int denint = 1;          // positive integer denominator part

    bool is_zero() const { return num.is_zero(); }
};

struct FCtx {
    Pool* pool;
    int nv;

    FRP of(const LaurentPoly& p) const { return FRP{p, {}}; }
    FRP zero() const { return FRP{LaurentPoly::zero(nv), {}}; }

    void reduce(FRP& x) const {
        if (x.num.is_zero()) {
            x.den.clear();
            x.denint = 1;
            return;
        }
        for (auto it = x.den.begin(); it != x.den.end();) {
            while (it->second > 0) {
                auto q = x.num.try_div(pool->polys[it->first], 4096);
                if (!q) break;
                x.num = *q;
                --it->second;
            }
            it = (it->second == 0) ? x.den.erase(it) : std::next(it);
        }
        if (x.denint != 1) {
            Int g = boost::multiprecision::gcd(x.num.integer_content(), x.denint);
            if (g > 1) {
                LaurentPoly outp(nv);
                for (const auto& [e, cc] : x.num.terms()) outp.add_term(e, cc / g);
                x.num = outp;
                x.denint /= g;
            }
        }
    }
    FRP mul(const FRP& a, const FRP& b) const {
        FRP out{a.num * b.num, a.den, a.denint * b.denint};
        for (const auto& [i, e] : b.den) out.den[i] += e;
        reduce(out);
        return out;
    }
    FRP add(const FRP& a, const FRP& b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::map<int, int> lcm = a.den;
        for (const auto& [i, e] : b.den) {
            auto it = lcm.find(i);
            if (it == lcm.end())
                lcm[i] = e;
            else
                it->second = std::max(it->second, e);
        }
        LaurentPoly na = a.num, nb = b.num;
        for (const auto& [i, e] : lcm) {
            auto ita = a.den.find(i);
            int ea = e - (ita == a.den.end() ? 0 : ita->second);
            for (int t = 0; t < ea; ++t) na = na * pool->polys[i];
            auto itb = b.den.find(i);
            int eb = e - (itb == b.den.end() ? 0 : itb->second);
            for (int t = 0; t < eb; ++t) nb = nb * pool->polys[i];
        }
        Int g = boost::multiprecision::gcd(a.denint, b.denint);
        Int ilcm = a.denint / g * b.denint;
        na = na * LaurentPoly::constant(nv, ilcm / a.denint);
        nb = nb * LaurentPoly::constant(nv, ilcm / b.denint);
        FRP out{na + nb, std::move(lcm), ilcm};
        reduce(out);
        return out;
    }
    // d^e where d = P/Q with pool ids pi/qi (-1 when the whole part is a
    // Laurent unit). P = uP * pool[pi], Q = uQ * pool[qi] with monomial units
    // u; units fold into the numerator.
    FRP dpow(const LaurentPoly& P, int pi, const LaurentPoly& Q, int qi, int e) const {
        FRP out = of(LaurentPoly::constant(nv, 1));
        // split the unit cofactor into a monomial and an integer scalar
        auto split = [&](const LaurentPoly& whole, int id) {
            LaurentPoly u = id >= 0 ? whole.div_exact(pool->polys[id]) : whole;
            check(u.is_monomial(), "dpow: unit cofactor not a monomial");
            const auto& [em, cm] = *u.terms().begin();
            Int coeff = cm < 0 ? Int(-cm) : cm;
            check(cm > 0, "dpow: negative unit cofactor");
            return std::make_pair(LaurentPoly::monomial(nv, em, 1), coeff);
        };
        if (e > 0) {
            auto [mono, coeff] = split(Q, qi);
            for (int t = 0; t < e; ++t) {
                out.num = out.num * P;
                out.num = out.num.div_exact(mono);
                out.denint *= coeff;
            }
            if (qi >= 0) out.den[qi] = e;
        } else if (e < 0) {
            auto [mono, coeff] = split(P, pi);
            for (int t = 0; t < -e; ++t) {
                out.num = out.num * Q;
                out.num = out.num.div_exact(mono);
                out.denint *= coeff;
            }
            if (pi >= 0) out.den[pi] = -e;
        }
        reduce(out);
        return out;
    }
    RationalPair to_rp(const FRP& x) const {
        LaurentPoly d = LaurentPoly::constant(nv, x.denint);
        for (const auto& [i, e] : x.den)
            for (int t = 0; t < e; ++t) d = d * pool->polys[i];
        return RationalPair(x.num, d);
    }
};

using FMat = std::vector<FRP>;  // dim*dim row-major

FMat fmat_mul(const FCtx& fc, const FMat& a, const FMat& b, int n) {
    FMat out(static_cast<std::size_t>(n) * n, fc.zero());
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            if (a[r * n + k].is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (b[k * n + c].is_zero()) continue;
                out[r * n + c] = fc.add(out[r * n + c], fc.mul(a[r * n + k], b[k * n + c]));
            }
        }
    return out;
}

std::size_t fmat_terms(const FMat& m) {
    std::size_t t = 0;
    for (const auto& e : m) t += e.num.term_count();
    return t;
}

// yb_i(d) (sign=+1) or yb_i(d)^{-1} (sign=-1) in factored form
FMat yb_factored(const FCtx& fc, const MatrixRep& rep, int i, const LaurentPoly& P, int pi,
                 const LaurentPoly& Q, int qi, int sign) {
    int n = rep.dim();
    FMat out(static_cast<std::size_t>(n) * n, fc.zero());
    const auto& fp = rep.f_pows(i);
    for (std::size_t k = 0; k < fp.size(); ++k)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const Int& v = fp[k].at(r, c);
                if (v == 0) continue;
                int e = sign > 0 ? static_cast<int>(k) - static_cast<int>(rep.h_eig(i, c))
                                 : static_cast<int>(rep.h_eig(i, r)) + static_cast<int>(k);
                Int coeff = (sign < 0 && k % 2 == 1) ? Int(-v) : v;
                FRP term = fc.dpow(P, pi, Q, qi, e);
                term.num = term.num * LaurentPoly::constant(fc.nv, coeff);
                out[r * n + c] = fc.add(out[r * n + c], term);
            }
    return out;
}

bool debug_on() { return std::getenv("CELLCRYS_CHAMBER_DEBUG") != nullptr; }

}  // namespace

ChamberSolution chamber_solve(int p, int q) {
    ChamberSolution sol;
    if (p == 0 && q == 0) {
        sol.len = 2;
        sol.d = {rp_var(2, 1), rp_var(2, 0)};
        for (auto& d : sol.d) sol.trop.push_back(tropicalize(d));
        return sol;
    }
    Model mod = model_for(p, q);
    MatrixRep rep = MatrixRep::make(mod.cd);
    int dim = rep.dim();
    int len = braid_pattern_len(mod.cd, mod.ni, mod.nj);
    sol.len = len;
    std::vector<int> lhs_word, rhs_word;
    for (int t = 0; t < len; ++t) {
        lhs_word.push_back(t % 2 == 0 ? mod.ni : mod.nj);
        rhs_word.push_back(t % 2 == 0 ? mod.nj : mod.ni);
    }
    SymMatrix theta = rep.theta_minus(ReducedWord{lhs_word});
    Pool pool;
    FCtx fc{&pool, len};
    FMat cur(static_cast<std::size_t>(dim) * dim, fc.zero());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) cur[r * dim + c] = fc.of(theta.at(r, c));
    sol.d.assign(len, rp_const(len, 0));
    std::vector<std::pair<int, int>> dids(len, {-1, -1});
    constexpr std::size_t kTermBudget = 100000;

    // Solve one end coordinate from a binomial pivot equation; candidates are
    // ranked by size (the smallest one is consistently the reduced form).
    auto solve_at = [&](bool right, int lo, int hi, RationalPair& dout) {
        int letter = right ? rhs_word[hi - 1] : rhs_word[lo];
        std::vector<int> shorter;
        if (right)
            shorter.assign(rhs_word.begin() + lo, rhs_word.begin() + hi - 1);
        else
            shorter.assign(rhs_word.begin() + lo + 1, rhs_word.begin() + hi);
        std::vector<RationalPair> cands;
        const auto& fp = rep.f_pows(letter);
        for (auto [r, s] : vanishing_entries(rep, shorter)) {
            std::map<int, FRP> by_exp;
            for (std::size_t k = 0; k < fp.size(); ++k)
                for (int rho = 0; rho < dim; ++rho) {
                    const Int& v = right ? fp[k].at(rho, s) : fp[k].at(r, rho);
                    const FRP& entry = right ? cur[r * dim + rho] : cur[rho * dim + s];
                    if (v == 0 || entry.is_zero()) continue;
                    Int coeff = (k % 2 == 0) ? v : Int(-v);
                    int e = static_cast<int>(rep.h_eig(letter, right ? rho : r)) +
                            static_cast<int>(k);
                    FRP term = entry;
                    term.num = term.num * LaurentPoly::constant(len, coeff);
                    auto it = by_exp.find(e);
                    if (it == by_exp.end())
                        by_exp.emplace(e, term);
                    else
                        it->second = fc.add(it->second, term);
                }
            for (auto it = by_exp.begin(); it != by_exp.end();)
                it = it->second.is_zero() ? by_exp.erase(it) : std::next(it);
            if (by_exp.size() != 2) continue;
            auto elo = by_exp.begin();
            auto ehi = std::next(elo);
            if (ehi->first - elo->first != 1) continue;
            // d = -(lo/hi): cross-assemble with factored denominators
            LaurentPoly n = -elo->second.num, d = ehi->second.num;
            n = n * LaurentPoly::constant(len, ehi->second.denint);
            d = d * LaurentPoly::constant(len, elo->second.denint);
            for (const auto& [i, e2] : ehi->second.den)
                for (int t = 0; t < e2; ++t) n = n * pool.polys[i];
            for (const auto& [i, e2] : elo->second.den)
                for (int t = 0; t < e2; ++t) d = d * pool.polys[i];
            for (const auto& f : pool.polys) {
                while (true) {
                    auto qa = n.try_div(f, 4096);
                    if (!qa) break;
                    auto qb = d.try_div(f, 4096);
                    if (!qb) break;
                    n = *qa;
                    d = *qb;
                }
            }
            RationalPair cand(n, d);
            if (cand.is_zero() || !cand.num().is_subtraction_free() ||
                !cand.den().is_subtraction_free())
                continue;
            cands.push_back(cand);
        }
        if (cands.empty()) return false;
        std::sort(cands.begin(), cands.end(), [](const RationalPair& x, const RationalPair& y) {
            return x.num().term_count() + x.den().term_count() <
                   y.num().term_count() + y.den().term_count();
        });
        if (debug_on()) {
            std::cerr << (right ? "R" : "L") << "-peel cands:";
            for (auto& c : cands)
                std::cerr << " " << c.num().term_count() << "/" << c.den().term_count();
            std::cerr << std::endl;
        }
        dout = cands.front();
        return true;
    };

    int lo = 0, hi = len;
    bool prefer_right = true;
    while (hi - lo > 1) {
        RationalPair d;
        bool right = prefer_right;
        if (!solve_at(right, lo, hi, d)) {
            right = !right;
            check(solve_at(right, lo, hi, d), "chamber_solve: no usable pivot");
        }
        prefer_right = !prefer_right;
        int slot = right ? hi - 1 : lo;
        sol.d[slot] = d;
        dids[slot] = {pool.intern(d.num()), pool.intern(d.den())};
        FMat inv = yb_factored(fc, rep, rhs_word[slot], d.num(), dids[slot].first, d.den(),
                               dids[slot].second, -1);
        cur = right ? fmat_mul(fc, cur, inv, dim) : fmat_mul(fc, inv, cur, dim);
        if (right)
            --hi;
        else
            ++lo;
        if (debug_on())
            std::cerr << "segment [" << lo << "," << hi << ") terms=" << fmat_terms(cur)
                      << std::endl;
        check(fmat_terms(cur) < kTermBudget, "chamber_solve: symbolic budget exceeded");
    }
    // the remaining factor is yb_{rhs_word[lo]}(d); read it off a diagonal
    // entry with h-eigenvalue -1 (entry = d) or +1 (entry = 1/d)
    {
        int i = rhs_word[lo];
        bool got = false;
        for (int r = 0; r < dim && !got; ++r) {
            RationalPair entry = fc.to_rp(cur[r * dim + r]);
            if (rep.h_eig(i, r) == -1) {
                sol.d[lo] = entry;
                got = true;
            } else if (rep.h_eig(i, r) == 1) {
                sol.d[lo] = rp_const(len, 1) / entry;
                got = true;
            }
        }
        check(got, "chamber_solve: no unit-eigenvalue diagonal entry");
        dids[lo] = {pool.intern(sol.d[lo].num()), pool.intern(sol.d[lo].den())};
    }
    // exact reassembly: the factored product of the solved yb's equals theta
    {
        FMat re = yb_factored(fc, rep, rhs_word[0], sol.d[0].num(), dids[0].first, sol.d[0].den(),
                              dids[0].second, +1);
        for (int t = 1; t < len; ++t) {
            FMat f = yb_factored(fc, rep, rhs_word[t], sol.d[t].num(), dids[t].first,
                                 sol.d[t].den(), dids[t].second, +1);
            re = fmat_mul(fc, re, f, dim);
            check(fmat_terms(re) < kTermBudget, "chamber_solve: reassembly budget exceeded");
        }
        if (!std::getenv("CELLCRYS_CHAMBER_SKIP_CHECK"))
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    bool same = fc.to_rp(re[r * dim + c]) == RationalPair::of(theta.at(r, c));
                    if (!same && debug_on()) {
                        std::vector<Rat> pt;
                        for (int t = 0; t < len; ++t) pt.push_back(Rat(t + 2));
                        std::cerr << "entry (" << r << "," << c << ") differs: re="
                                  << fc.to_rp(re[r * dim + c]).eval_positive(pt)
                                  << " theta=" << RationalPair::of(theta.at(r, c)).eval_positive(pt)
                                  << std::endl;
                    }
                    check(same, "chamber_solve: reassembled product differs");
                }
    }
    for (auto& d : sol.d) {
        check(d.is_subtraction_free(), "chamber_solve: non-subtraction-free solution");
        sol.trop.push_back(tropicalize(d));
    }
    return sol;
}

const ChamberSolution& chamber_transition(int p, int q) {
    static std::map<std::pair<int, int>, ChamberSolution> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, chamber_solve(p, q)).first;
    return it->second;
}

}  // namespace cellcrys
