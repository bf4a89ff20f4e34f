#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellcrys/cellular.hpp"

namespace cellcrys {

// Exponent vector of one monomial t_1^{d_1} ... t_N^{d_N} contributing to a
// generalized minor, with its coefficient when known.
struct TrailMono {
    std::vector<int> d;
    Int coeff = 0;
};

// The lowest-degree monomial of Delta_{w0 L_j, s_j L_j} on a reduced longest
// word: t_J prod_{k>J} t_k^{a_{i_k, j}} with J the last position of letter j.
std::vector<int> lowest_term_exponents(const WordCtx& ctx, int j);

// presence of the lowest term with positive coefficient in the oracle minor
bool lowest_term_check(const WordCtx& ctx, int j);

// A_{s,i} as a flat exponent vector over the word's variables (the sign table
// comes from the cyclic order of the blocks); empty when out of the window.
std::optional<std::vector<int>> a_monomial_exponents(const WordCtx& ctx, int s, int i);

struct FactorReport {
    bool all_factored = true;
    std::size_t monomials = 0;
    std::vector<std::string> failures;
};

// every monomial of the oracle minor factors as lowest * prod A_{s,i}^{l}
FactorReport a_monomial_factor_check(const WordCtx& ctx, int j);

// Tabulated lowest-term factorizations for the E/F families: each entry
// states lowest(i) = c^{(s)}_j * prod A^{-1}; verified as exact monomial
// arithmetic over the word's exponent lattice.
struct EfIdentity {
    int i;                                    // minor index
    std::pair<int, int> base;                 // (s, j) of the leading variable
    std::vector<std::pair<int, int>> afactors;  // A_{s,j} list (inverted)
    std::vector<std::pair<std::pair<int, int>, int>> apowers;  // entries with exponent != 1
};

std::vector<std::string> ef_identity_check(char family, int rank);

// Bounded enumerator of pre-trails: weight sequences in the defining rep from
// gamma to delta stepping down by multiples of alpha_{i_k}; returns the d_k
// exponent vectors.
std::vector<TrailMono> pretrail_monomials(const WordCtx& ctx, int j, std::size_t cap = 200000);

}  // namespace cellcrys
