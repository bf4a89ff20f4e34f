#include "cellcrys/rep.hpp"

#include <algorithm>
#include <map>

namespace cellcrys {

IntMat int_identity(int n) {
    IntMat m(n, Int(0));
    for (int r = 0; r < n; ++r) m.at(r, r) = 1;
    return m;
}

IntMat int_inverse_unimodular(const IntMat& m) {
    // Gauss-Jordan over rationals, then integrality check.
    int n = m.n;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[r][c] = Rat(m.at(r, c));
        a[r][n + r] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        check(piv >= 0, "int_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        Rat d = a[col][col];
        for (int c = 0; c < 2 * n; ++c) a[col][c] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    IntMat out(n, Int(0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rat v = a[r][n + c];
            check(boost::multiprecision::denominator(v) == 1,
                  "int_inverse: non-integer inverse entry");
            out.at(r, c) = boost::multiprecision::numerator(v);
        }
    return out;
}

namespace {

IntMat unit(int n, int r, int c, const Int& v = 1) {
    IntMat m(n, Int(0));
    m.at(r - 1, c - 1) = v;  // 1-based entry helpers
    return m;
}

IntMat add(const IntMat& a, const IntMat& b) {
    IntMat out = a;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += b.a[k];
    return out;
}

IntMat sub(const IntMat& a, const IntMat& b) {
    IntMat out = a;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] -= b.a[k];
    return out;
}

bool is_zero(const IntMat& m) {
    return std::all_of(m.a.begin(), m.a.end(), [](const Int& x) { return x == 0; });
}

IntMat bracket(const IntMat& a, const IntMat& b) { return sub(a * b, b * a); }

std::vector<IntMat> divided_powers(const IntMat& x) {
    // x^k / k! while nonzero; asserts integrality.
    std::vector<IntMat> pows{int_identity(x.n)};
    IntMat acc = int_identity(x.n);
    for (int k = 1;; ++k) {
        acc = acc * x;
        bool ok = true;
        IntMat dp(x.n, Int(0));
        Int fact = 1;
        for (int t = 2; t <= k; ++t) fact *= t;
        for (std::size_t idx = 0; idx < acc.a.size(); ++idx) {
            if (acc.a[idx] % fact != 0) {
                ok = false;
                break;
            }
            dp.a[idx] = acc.a[idx] / fact;
        }
        check(ok, "divided_powers: non-integral divided power");
        if (is_zero(dp)) break;
        pows.push_back(dp);
        check(k < 16, "divided_powers: generator not nilpotent?");
    }
    return pows;
}

}  // namespace

MatrixRep MatrixRep::make(const CartanData& cd) {
    MatrixRep rep;
    rep.cd_ = cd;
    int n = cd.rank;
    switch (cd.family) {
        case 'A': {
            int d = n + 1;
            rep.dim_ = d;
            for (int i = 1; i <= n; ++i) {
                rep.e_.push_back(unit(d, i, i + 1));
                rep.f_.push_back(unit(d, i + 1, i));
            }
            break;
        }
        case 'C': {
            int d = 2 * n;
            rep.dim_ = d;
            for (int i = 1; i < n; ++i) {
                rep.e_.push_back(add(unit(d, i, i + 1), unit(d, 2 * n - i, 2 * n - i + 1)));
                rep.f_.push_back(add(unit(d, i + 1, i), unit(d, 2 * n - i + 1, 2 * n - i)));
            }
            rep.e_.push_back(unit(d, n, n + 1));
            rep.f_.push_back(unit(d, n + 1, n));
            break;
        }
        case 'B': {
            int d = 2 * n + 1;
            rep.dim_ = d;
            for (int i = 1; i < n; ++i) {
                rep.e_.push_back(add(unit(d, i, i + 1), unit(d, 2 * n + 1 - i, 2 * n + 2 - i)));
                rep.f_.push_back(add(unit(d, i + 1, i), unit(d, 2 * n + 2 - i, 2 * n + 1 - i)));
            }
            rep.e_.push_back(add(unit(d, n, n + 1, 2), unit(d, n + 1, n + 2)));
            rep.f_.push_back(add(unit(d, n + 1, n), unit(d, n + 2, n + 1, 2)));
            break;
        }
        case 'D': {
            int d = 2 * n;
            rep.dim_ = d;
            for (int i = 1; i < n; ++i) {
                rep.e_.push_back(add(unit(d, i, i + 1), unit(d, 2 * n - i, 2 * n + 1 - i)));
                rep.f_.push_back(add(unit(d, i + 1, i), unit(d, 2 * n + 1 - i, 2 * n - i)));
            }
            rep.e_.push_back(add(unit(d, n - 1, n + 1), unit(d, n, n + 2)));
            rep.f_.push_back(add(unit(d, n + 1, n - 1), unit(d, n + 2, n)));
            break;
        }
        case 'G': {
            int d = 7;
            rep.dim_ = d;
            rep.e_.push_back(add(unit(d, 2, 3), unit(d, 5, 6)));
            rep.f_.push_back(add(unit(d, 3, 2), unit(d, 6, 5)));
            rep.e_.push_back(
                add(add(unit(d, 1, 2), unit(d, 3, 4)), add(unit(d, 4, 5, 2), unit(d, 6, 7))));
            rep.f_.push_back(
                add(add(unit(d, 2, 1), unit(d, 4, 3, 2)), add(unit(d, 5, 4), unit(d, 7, 6))));
            break;
        }
        default:
            check(false, "defining_rep: unsupported family (no small faithful model)");
    }
    rep.finalize_and_validate();
    return rep;
}

void MatrixRep::finalize_and_validate() {
    int n = cd_.rank, d = dim_;
    // H_i from [E_i, F_i]; must be diagonal
    hw_.assign(n, std::vector<std::int64_t>(d, 0));
    for (int i = 1; i <= n; ++i) {
        IntMat h = bracket(e_[i - 1], f_[i - 1]);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (r != c) check(h.at(r, c) == 0, "rep: [E_i,F_i] not diagonal");
        for (int r = 0; r < d; ++r) hw_[i - 1][r] = static_cast<std::int64_t>(h.at(r, r));
    }
    // weights of basis vectors
    wt_.resize(d);
    for (int r = 0; r < d; ++r) {
        wt_[r].c.assign(n, 0);
        for (int i = 1; i <= n; ++i) wt_[r].c[i - 1] = hw_[i - 1][r];
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // [E_i, F_j] = delta_ij H_i
            IntMat br = bracket(e_[i - 1], f_[j - 1]);
            if (i != j) check(is_zero(br), "rep: [E_i,F_j] nonzero for i != j");
            // Serre relations
            if (i != j) {
                int m = 1 - cd_.at(i, j);
                IntMat acc = e_[j - 1];
                for (int t = 0; t < m; ++t) acc = bracket(e_[i - 1], acc);
                check(is_zero(acc), "rep: Serre relation (E) fails");
                acc = f_[j - 1];
                for (int t = 0; t < m; ++t) acc = bracket(f_[i - 1], acc);
                check(is_zero(acc), "rep: Serre relation (F) fails");
            }
        }
        // E_i strictly upper, F_i strictly lower, and weight-raising
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                if (e_[i - 1].at(r, c) != 0) {
                    check(r < c, "rep: E_i not strictly upper triangular");
                    WeightVec expect = wt_[c];
                    for (int j = 1; j <= n; ++j) expect.c[j - 1] += cd_.at(j, i);
                    check(expect == wt_[r], "rep: E_i does not raise weight by alpha_i");
                }
                if (f_[i - 1].at(r, c) != 0)
                    check(r > c, "rep: F_i not strictly lower triangular");
            }
    }
    epow_.resize(n);
    fpow_.resize(n);
    for (int i = 0; i < n; ++i) {
        epow_[i] = divided_powers(e_[i]);
        fpow_[i] = divided_powers(f_[i]);
    }
    // principal-minor support: sum of the first k weights must be Lambda_i and
    // the top wedge must be highest (automatic for strictly upper E's, checked
    // via the weight sums here).
    for (int i = 1; i <= n; ++i) {
        auto lvl = minor_level(i);
        if (!lvl) continue;
        WeightVec sum;
        sum.c.assign(n, 0);
        for (int r = 0; r < *lvl; ++r)
            for (int j = 0; j < n; ++j) sum.c[j] += wt_[r].c[j];
        check(sum == fundamental_weight(cd_, i),
              "rep: top wedge weight mismatch for minor level");
    }
}

std::optional<int> MatrixRep::minor_level(int i) const {
    int n = cd_.rank;
    switch (cd_.family) {
        case 'A':
        case 'C':
            return i;
        case 'B':
            if (i <= n - 1) return i;
            return std::nullopt;
        case 'D':
            if (i <= n - 2) return i;
            return std::nullopt;
        case 'G':
            return i == 2 ? 1 : 2;
        default:
            return std::nullopt;
    }
}

IntMat MatrixRep::x_at(int i, const Int& t) const {
    IntMat out(dim_, Int(0));
    Int tk = 1;
    for (std::size_t k = 0; k < epow_[i - 1].size(); ++k) {
        for (std::size_t idx = 0; idx < out.a.size(); ++idx)
            out.a[idx] += tk * epow_[i - 1][k].a[idx];
        tk *= t;
    }
    return out;
}

IntMat MatrixRep::y_at(int i, const Int& t) const {
    IntMat out(dim_, Int(0));
    Int tk = 1;
    for (std::size_t k = 0; k < fpow_[i - 1].size(); ++k) {
        for (std::size_t idx = 0; idx < out.a.size(); ++idx)
            out.a[idx] += tk * fpow_[i - 1][k].a[idx];
        tk *= t;
    }
    return out;
}

IntMat MatrixRep::sbar(int i) const { return x_at(i, -1) * y_at(i, 1) * x_at(i, -1); }

IntMat MatrixRep::word_rep(const ReducedWord& w) const {
    IntMat out = int_identity(dim_);
    for (int k = 1; k <= w.size(); ++k) out = out * sbar(w.at(k));
    return out;
}

SymMatrix MatrixRep::xb(int i, int nvars, int slot) const {
    SymMatrix out(dim_, LaurentPoly::zero(nvars));
    for (std::size_t k = 0; k < epow_[i - 1].size(); ++k) {
        Expo e(nvars, 0);
        e[slot] = static_cast<int>(k);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) {
                const Int& v = epow_[i - 1][k].at(r, c);
                if (v != 0) out.at(r, c).add_term(e, v);
            }
    }
    return out;
}

SymMatrix MatrixRep::acheck(int i, int nvars, int slot) const {
    SymMatrix out(dim_, LaurentPoly::zero(nvars));
    for (int r = 0; r < dim_; ++r) {
        Expo e(nvars, 0);
        e[slot] = static_cast<int>(hw_[i - 1][r]);
        out.at(r, r).add_term(e, 1);
    }
    return out;
}

SymMatrix MatrixRep::yb(int i, int nvars, int slot) const {
    // y_i(c) alpha_i^vee(c^{-1}); entry (r,c) = F^{(k)}_{rc} c^{k - h_i(c-col)}
    SymMatrix out(dim_, LaurentPoly::zero(nvars));
    for (std::size_t k = 0; k < fpow_[i - 1].size(); ++k) {
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) {
                const Int& v = fpow_[i - 1][k].at(r, c);
                if (v == 0) continue;
                Expo e(nvars, 0);
                e[slot] = static_cast<int>(k) - static_cast<int>(hw_[i - 1][c]);
                out.at(r, c).add_term(e, v);
            }
    }
    return out;
}

SymMatrix MatrixRep::theta_minus(const ReducedWord& w) const {
    int nvars = w.size();
    check(nvars > 0, "theta_minus: empty word");
    SymMatrix out = yb(w.at(1), nvars, 0);
    for (int k = 2; k <= nvars; ++k) out = out * yb(w.at(k), nvars, k - 1);
    return out;
}

RatMatrix MatrixRep::yb_rat(int i, const RationalPair& c) const {
    int nv = c.nvars();
    auto rp_pow = [&](const RationalPair& b, int e) {
        RationalPair acc = RationalPair::of(LaurentPoly::constant(nv, 1));
        RationalPair base = e < 0 ? RationalPair::of(LaurentPoly::constant(nv, 1)) / b : b;
        for (int t = 0; t < std::abs(e); ++t) acc = acc * base;
        return acc;
    };
    RatMatrix out(dim_, RationalPair::of(LaurentPoly::zero(nv)));
    for (std::size_t k = 0; k < fpow_[i - 1].size(); ++k)
        for (int r = 0; r < dim_; ++r)
            for (int col = 0; col < dim_; ++col) {
                const Int& v = fpow_[i - 1][k].at(r, col);
                if (v == 0) continue;
                int e = static_cast<int>(k) - static_cast<int>(hw_[i - 1][col]);
                RationalPair term =
                    RationalPair::of(LaurentPoly::constant(nv, v)) * rp_pow(c, e);
                out.at(r, col) = out.at(r, col) + term;
            }
    return out;
}

RatMatrix MatrixRep::yb_rat_inverse(int i, const RationalPair& c) const {
    // (y_i(c) a^vee(c^-1))^{-1} = a^vee(c) y_i(-c); entry (r,col):
    // c^{h_i(r)} (-c)^k F^{(k)}_{rcol}
    int nv = c.nvars();
    auto rp_pow = [&](const RationalPair& b, int e) {
        RationalPair acc = RationalPair::of(LaurentPoly::constant(nv, 1));
        RationalPair base = e < 0 ? RationalPair::of(LaurentPoly::constant(nv, 1)) / b : b;
        for (int t = 0; t < std::abs(e); ++t) acc = acc * base;
        return acc;
    };
    RatMatrix out(dim_, RationalPair::of(LaurentPoly::zero(nv)));
    for (std::size_t k = 0; k < fpow_[i - 1].size(); ++k)
        for (int r = 0; r < dim_; ++r)
            for (int col = 0; col < dim_; ++col) {
                const Int& v = fpow_[i - 1][k].at(r, col);
                if (v == 0) continue;
                Int coeff = (k % 2 == 0) ? v : Int(-v);
                int e = static_cast<int>(hw_[i - 1][r]) + static_cast<int>(k);
                RationalPair term =
                    RationalPair::of(LaurentPoly::constant(nv, coeff)) * rp_pow(c, e);
                out.at(r, col) = out.at(r, col) + term;
            }
    return out;
}

LaurentPoly principal_minor(const SymMatrix& m, int k) {
    check(k >= 1 && k <= m.n, "principal_minor: bad size");
    int nv = m.at(0, 0).nvars();
    // det over rows [0,k) with column subsets, memoized on bitmask
    std::map<unsigned, LaurentPoly> memo;
    std::function<const LaurentPoly&(unsigned)> det = [&](unsigned mask) -> const LaurentPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int r = __builtin_popcount(mask) - 1;
        LaurentPoly acc(nv);
        int pos = 0;  // index of c within the sorted subset
        for (int c = 0; c < m.n; ++c) {
            if (!(mask & (1u << c))) continue;
            const LaurentPoly& entry = m.at(r, c);
            if (!entry.is_zero()) {
                LaurentPoly sub = det(mask & ~(1u << c));
                LaurentPoly t = entry * sub;
                acc = ((r + pos) % 2 == 0) ? acc + t : acc - t;
            }
            ++pos;
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    memo[0] = LaurentPoly::constant(nv, 1);
    unsigned full = 0;
    for (int c = 0; c < k; ++c) full |= 1u << c;
    return det(full);
}

namespace {

SymMatrix int_times_sym(const IntMat& a, const SymMatrix& b) {
    int nv = b.at(0, 0).nvars();
    SymMatrix out(a.n, LaurentPoly::zero(nv));
    for (int r = 0; r < a.n; ++r)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(r, k) == 0) continue;
            for (int c = 0; c < a.n; ++c) {
                if (b.at(k, c).is_zero()) continue;
                for (const auto& [e, cc] : b.at(k, c).terms())
                    out.at(r, c).add_term(e, cc * a.at(r, k));
            }
        }
    return out;
}

SymMatrix sym_times_int(const SymMatrix& a, const IntMat& b) {
    int nv = a.at(0, 0).nvars();
    SymMatrix out(a.n, LaurentPoly::zero(nv));
    for (int r = 0; r < a.n; ++r)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < a.n; ++c) {
                if (b.at(k, c) == 0) continue;
                for (const auto& [e, cc] : a.at(r, k).terms())
                    out.at(r, c).add_term(e, cc * b.at(k, c));
            }
        }
    return out;
}

}  // namespace

LaurentPoly generalized_minor(const MatrixRep& rep, const SymMatrix& g, const ReducedWord& u,
                              const ReducedWord& v, int i) {
    auto lvl = rep.minor_level(i);
    check(lvl.has_value(), "unsupported-minor: fundamental weight " + std::to_string(i) +
                               " not realized in the defining representation of " +
                               rep.cartan().name());
    IntMat ubar = rep.word_rep(u);
    IntMat vbar = rep.word_rep(v);
    IntMat ubar_inv = int_inverse_unimodular(ubar);
    SymMatrix t = int_times_sym(ubar_inv, sym_times_int(g, vbar));
    return principal_minor(t, *lvl);
}

RationalPair eps_minor(const MatrixRep& rep, const SymMatrix& g, int i) {
    ReducedWord si{{i}}, e{{}};
    LaurentPoly num = generalized_minor(rep, g, si, si, i);
    LaurentPoly den = generalized_minor(rep, g, si, e, i);
    return RationalPair(num, den);
}

Matrix<Rat> eval_matrix(const SymMatrix& m, const std::vector<Rat>& point) {
    Matrix<Rat> out(m.n, Rat(0));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            if (!m.at(r, c).is_zero()) out.at(r, c) = m.at(r, c).eval_positive(point);
    return out;
}

}  // namespace cellcrys
