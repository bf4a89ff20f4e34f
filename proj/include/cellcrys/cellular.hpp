#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellcrys/braid.hpp"
#include "cellcrys/elem.hpp"
#include "cellcrys/graph.hpp"
#include "cellcrys/laurent.hpp"
#include "cellcrys/monomial.hpp"
#include "cellcrys/polyhedral.hpp"
#include "cellcrys/rep.hpp"
#include "cellcrys/tropical.hpp"
#include "cellcrys/weyl.hpp"

namespace cellcrys {

// Immutable context shared by everything attached to one reduced word: the
// Cartan datum, the word, and the double-index flattening c^{(s)}_j <-> flat
// variable slot. Blocks are maximal increasing runs of letters.
struct WordCtx {
    CartanData cd;
    CartanData dual;  // transposed; the crystal side lives over this
    ReducedWord word;
    int N = 0;
    std::vector<std::pair<int, int>> dindex;  // position -> (s, j)
    std::vector<std::string> names;           // "c[s,j]"

    int pos_of(int s, int j) const;  // -1 when absent
    int letter(int k) const { return word.at(k); }  // 1-based

    static std::shared_ptr<const WordCtx> make(const CartanData& cd, const ReducedWord& w);
    static std::shared_ptr<const WordCtx> canonical(char family, int rank);
};

// --- free cellular structure functions -------------------------------------

std::int64_t cell_wt_i(const WordCtx& ctx, const std::vector<int>& x, int i);
std::vector<std::int64_t> cell_wt_fund(const WordCtx& ctx, const std::vector<int>& x);
TInt cell_eps(const WordCtx& ctx, const std::vector<int>& x, int i);

// X_m(x) = x_m + sum_{k<m} a_{i_k, i_m} x_k over positions with letter i;
// returns (m_e, m_f) as 1-based positions (max/min argmin).
std::pair<int, int> cell_argmin(const WordCtx& ctx, const std::vector<int>& x, int i);

// n-fold operator by the closed two-min formula; n < 0 applies f-powers.
std::vector<int> cell_e_pow(const WordCtx& ctx, const std::vector<int>& x, int i, int n);

// --- potentials -------------------------------------------------------------

enum class Provenance { catalog, minor_oracle, ef_partial };

struct Potential {
    std::shared_ptr<const WordCtx> ctx;
    LaurentPoly laurent;  // empty for ef_partial
    TropForm trop;
    Provenance provenance = Provenance::catalog;

    std::string provenance_str() const;
};

// per-minor catalog polynomials (closed forms, canonical word)
LaurentPoly catalog_minor(const WordCtx& ctx, int j);
Potential potential_catalog(char family, int rank);

// symbolic sum of generalized minors over the oracle; any reduced longest
// word of a supported family
Potential potential_from_minors(const std::shared_ptr<const WordCtx>& ctx);
LaurentPoly oracle_minor(const WordCtx& ctx, int i);  // Delta_{w0 L_i, s_i L_i}

bool binf_member(const Potential& pot, const std::vector<int>& x);

// single step with the potential cutoff (dir > 0: f, dir < 0: e)
std::optional<std::vector<int>> cell_step(const WordCtx& ctx, const std::vector<int>& x, int i,
                                          int dir, const Potential* cutoff);

// --- crystal element views ---------------------------------------------------

// Cellular point with the potential cutoff: the B(infinity) model.
struct CellB {
    const Potential* pot = nullptr;
    std::vector<int> x;

    int rank() const { return pot->ctx->cd.rank; }
    std::vector<std::int64_t> wt_fund() const { return cell_wt_fund(*pot->ctx, x); }
    std::int64_t wt_pair(int i) const { return cell_wt_i(*pot->ctx, x, i); }
    TInt eps(int i) const { return cell_eps(*pot->ctx, x, i); }
    TInt phi(int i) const { return eps(i) + TInt::of(wt_pair(i)); }
    std::optional<CellB> e(int i) const {
        auto n = cell_step(*pot->ctx, x, i, -1, pot);
        if (!n) return std::nullopt;
        return CellB{pot, *n};
    }
    std::optional<CellB> f(int i) const {
        auto n = cell_step(*pot->ctx, x, i, +1, pot);
        if (!n) return std::nullopt;
        return CellB{pot, *n};
    }
    bool operator==(const CellB& o) const { return x == o.x; }
    std::size_t hash() const {
        std::size_t h = 77;
        for (int v : x) hash_mix(h, static_cast<std::size_t>(v + (1 << 20)));
        return h;
    }
};

// Free cellular point (no cutoff), used for shift-equivariance and BFS work.
struct CellFree {
    const WordCtx* ctx = nullptr;
    std::vector<int> x;

    int rank() const { return ctx->cd.rank; }
    std::vector<std::int64_t> wt_fund() const { return cell_wt_fund(*ctx, x); }
    std::int64_t wt_pair(int i) const { return cell_wt_i(*ctx, x, i); }
    TInt eps(int i) const { return cell_eps(*ctx, x, i); }
    TInt phi(int i) const { return eps(i) + TInt::of(wt_pair(i)); }
    std::optional<CellFree> e(int i) const {
        auto n = cell_step(*ctx, x, i, -1, nullptr);
        if (!n) return std::nullopt;
        return CellFree{ctx, *n};
    }
    std::optional<CellFree> f(int i) const {
        auto n = cell_step(*ctx, x, i, +1, nullptr);
        if (!n) return std::nullopt;
        return CellFree{ctx, *n};
    }
    bool operator==(const CellFree& o) const { return x == o.x; }
    std::size_t hash() const {
        std::size_t h = 19;
        for (int v : x) hash_mix(h, static_cast<std::size_t>(v + (1 << 20)));
        return h;
    }
};

// Tensor-product realization: B_i word over the dual Cartan (reversed word,
// negated coordinates) with the same membership cutoff.
struct TensorB {
    const Potential* pot = nullptr;
    BiWord w;  // colors = reversed word letters over ctx->dual

    static TensorB from_cell(const Potential& pot, const std::vector<int>& x);
    std::vector<int> cell_coords() const;

    int rank() const { return w.cd->rank; }
    std::vector<std::int64_t> wt_fund() const { return w.wt_fund(); }
    std::int64_t wt_pair(int i) const { return w.wt_pair(i); }
    TInt eps(int i) const { return w.eps(i); }
    TInt phi(int i) const { return w.phi(i); }
    std::optional<TensorB> e(int i) const;
    std::optional<TensorB> f(int i) const;
    bool operator==(const TensorB& o) const { return w == o.w; }
    std::size_t hash() const { return w.hash(); }
};

// --- B(infinity) realizations and checks ------------------------------------

Generated<CellB> binf_graph_potential(const Potential& pot, int depth);
Generated<TensorB> binf_graph_tensor(const Potential& pot, int depth);

struct PolyhedralModel {
    Iota iota;
    XiResult xi;
};
// shared per (dual Cartan); window sized from the longest-word length
const PolyhedralModel& polyhedral_model(const CartanData& cd_primal);
Generated<SigmaElem> binf_graph_polyhedral(const CartanData& cd_primal, int depth);

// Psi^(+)_i(x) = (xi^{(i)}(x), omega_i(x)); requires membership.
std::pair<std::vector<int>, std::int64_t> psi_plus(const Potential& pot,
                                                   const std::vector<int>& x, int i);

struct KsReport {
    bool wt_in_Qminus = true;        // (i)
    bool unique_weight0 = true;      // (ii)
    bool eps_zero_at_origin = true;  // (iii)
    bool eps_integral = true;        // (iv)
    bool omega_nonneg = true;        // (vi)
    bool e_exists_off_origin = true; // (vii')
    bool upper_normal = true;
    bool uniq_box = true;            // only x = 0 has Phi >= 0 and all eps <= 0
    std::vector<std::string> messages;
    bool all() const {
        return wt_in_Qminus && unique_weight0 && eps_zero_at_origin && eps_integral &&
               omega_nonneg && e_exists_off_origin && upper_normal && uniq_box;
    }
};

KsReport ks_check(const Potential& pot, int depth, int uniq_box_radius = 4);

bool minx1_structure_check(const Potential& pot);

// mirrored membership for the lower half potential (oracle-only)
LaurentPoly oracle_minor_lower(const WordCtx& ctx, int i);  // Delta_{w0 s_i L_i, L_i}
Potential potential_lower_from_minors(const std::shared_ptr<const WordCtx>& ctx);

// --- monomial-crystal restatements of the catalogs ---------------------------

// checks that catalog_minor(ctx, j) equals the stated sum of monomial-crystal
// elements for the family; returns failure messages (empty = pass)
std::vector<std::string> monomial_restatement_check(char family, int rank);

}  // namespace cellcrys
