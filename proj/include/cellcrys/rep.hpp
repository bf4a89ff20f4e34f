#pragma once

#include <optional>
#include <vector>

#include "cellcrys/basics.hpp"
#include "cellcrys/cartan.hpp"
#include "cellcrys/laurent.hpp"
#include "cellcrys/weyl.hpp"

namespace cellcrys {

// Small dense matrix; T is any exact ring type (Int, Rat, LaurentPoly,
// RationalPair).
template <typename T>
struct Matrix {
    int n = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int dim, const T& fill) : n(dim), a(dim * dim, fill) {}

    T& at(int r, int c) { return a[r * n + c]; }
    const T& at(int r, int c) const { return a[r * n + c]; }

    bool operator==(const Matrix& o) const { return n == o.n && a == o.a; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        check(x.n == y.n, "matmul: dim mismatch");
        Matrix out(x.n, x.at(0, 0) - x.at(0, 0));
        for (int r = 0; r < x.n; ++r)
            for (int k = 0; k < x.n; ++k)
                for (int c = 0; c < x.n; ++c) out.at(r, c) = out.at(r, c) + x.at(r, k) * y.at(k, c);
        return out;
    }
};

using IntMat = Matrix<Int>;
using SymMatrix = Matrix<LaurentPoly>;
using RatMatrix = Matrix<RationalPair>;

IntMat int_identity(int n);
// Exact inverse of a determinant +-1 integer matrix.
IntMat int_inverse_unimodular(const IntMat& m);

// Defining (minuscule-or-small) representation with exact Chevalley
// generators, weight-ordered basis; construction asserts the generator
// relations, Serre relations and weight consistency.
class MatrixRep {
  public:
    static MatrixRep make(const CartanData& cd);

    const CartanData& cartan() const { return cd_; }
    int dim() const { return dim_; }

    const IntMat& E(int i) const { return e_[i - 1]; }
    const IntMat& F(int i) const { return f_[i - 1]; }
    std::int64_t h_eig(int i, int r) const { return hw_[i - 1][r]; }  // r 0-based
    const WeightVec& basis_weight(int r) const { return wt_[r]; }

    // divided powers E_i^k / k!, F_i^k / k! (exact integer matrices)
    const std::vector<IntMat>& e_pows(int i) const { return epow_[i - 1]; }
    const std::vector<IntMat>& f_pows(int i) const { return fpow_[i - 1]; }

    // wedge size realizing Delta_{Lambda_i} as a leading principal minor;
    // nullopt when the fundamental weight is not realized (spin cases).
    std::optional<int> minor_level(int i) const;

    IntMat x_at(int i, const Int& t) const;  // x_i(t)
    IntMat y_at(int i, const Int& t) const;  // y_i(t)
    IntMat sbar(int i) const;                // x_i(-1) y_i(1) x_i(-1)
    IntMat word_rep(const ReducedWord& w) const;  // product of sbar's

    // symbolic one-parameter subgroups in variable slot `slot` of an
    // nvars-variable Laurent ring
    SymMatrix xb(int i, int nvars, int slot) const;       // x_i(c)
    SymMatrix yb(int i, int nvars, int slot) const;       // y_i(c) acheck_i(c^-1)
    SymMatrix acheck(int i, int nvars, int slot) const;   // alpha_i^vee(c)
    SymMatrix theta_minus(const ReducedWord& w) const;    // product of yb's, nvars = |w|

    // RationalPair-parameter versions used by the chamber solver
    RatMatrix yb_rat(int i, const RationalPair& c) const;
    RatMatrix yb_rat_inverse(int i, const RationalPair& c) const;

  private:
    CartanData cd_;
    int dim_ = 0;
    std::vector<IntMat> e_, f_;
    std::vector<std::vector<std::int64_t>> hw_;
    std::vector<WeightVec> wt_;
    std::vector<std::vector<IntMat>> epow_, fpow_;

    void finalize_and_validate();
};

// Leading principal k x k minor (exact, memoized Laplace expansion).
LaurentPoly principal_minor(const SymMatrix& m, int k);

// Delta_{u Lambda_i, v Lambda_i}(g) = Delta_{Lambda_i}(ubar^{-1} g vbar).
// u, v are given by reduced words. Errors on unsupported fundamental weights.
LaurentPoly generalized_minor(const MatrixRep& rep, const SymMatrix& g,
                              const ReducedWord& u, const ReducedWord& v, int i);

// Matrix-level eps_i and gamma_i used as oracle cross-checks:
//   eps_i(g)   = Delta_{s_i L_i, s_i L_i}(g) / Delta_{s_i L_i, L_i}(g)
//   gamma_i(g) = alpha_i evaluated on the torus part (from the diagonal)
RationalPair eps_minor(const MatrixRep& rep, const SymMatrix& g, int i);

Matrix<Rat> eval_matrix(const SymMatrix& m, const std::vector<Rat>& point);

}  // namespace cellcrys
