#pragma once

#include <vector>

#include "cellcrys/chamber.hpp"
#include "cellcrys/elem.hpp"
#include "cellcrys/weyl.hpp"

namespace cellcrys {

// Piecewise-linear transition on a local window of cellular coordinates,
// derived from the chamber solution for the ordered pattern (i, j, ...).
struct TropTransition {
    int len = 0;
    std::vector<TropRatio> out;  // new window value m from the old window
};

const TropTransition& derive_phi(int p, int q);

// Apply one braid move to a cellular point; rewrites word and coordinates.
void apply_move_cell(const CartanData& cd, ReducedWord& word, std::vector<int>& x,
                     const BraidMove& m);

struct CellTransport {
    ReducedWord word;
    std::vector<int> x;
};

CellTransport apply_path_cell(const CartanData& cd, const ReducedWord& word,
                              const std::vector<int>& x, const std::vector<BraidMove>& path);

// omega_i / omega'_i: first (resp. last) coordinate after transporting to a
// word that starts (resp. ends) with i. Well-definedness is a tested
// property, not an assumption.
enum class WordEnd { first, last };
std::int64_t omega(const CartanData& cd, const ReducedWord& word, const std::vector<int>& x,
                   int i, WordEnd end = WordEnd::first);

// Transport to an i-leading word, zero the first coordinate, transport back.
std::vector<int> xi_map(const CartanData& cd, const ReducedWord& word,
                        const std::vector<int>& x, int i);

// Closed-form braid-type isomorphisms on tensor displays of B_i elements
// (displays read left-to-right; colors alternate).
std::vector<BiElem> phi01(const CartanData& cd, const std::vector<BiElem>& elems);

// Derived transition expressed on the tensor display (reverse-negate
// conjugation of the cellular transition); used to validate the pipeline
// against the closed forms and as the general phi^(k).
std::vector<BiElem> phi_derived(const CartanData& cd, const std::vector<BiElem>& elems);

}  // namespace cellcrys
