#pragma once

#include <optional>
#include <vector>

#include "cellcrys/cartan.hpp"

namespace cellcrys {

// Integer vector in the fundamental-weight basis {Lambda_i}.
struct WeightVec {
    std::vector<std::int64_t> c;
    bool operator==(const WeightVec& o) const { return c == o.c; }
};

// Integer vector in the simple-root basis {alpha_i}.
struct RootVec {
    std::vector<std::int64_t> c;
    bool operator==(const RootVec& o) const { return c == o.c; }
    bool is_zero() const {
        for (auto x : c)
            if (x) return false;
        return true;
    }
};

WeightVec fundamental_weight(const CartanData& cd, int i);
WeightVec simple_root_weight(const CartanData& cd, int i);  // alpha_i in Lambda basis
RootVec simple_root(const CartanData& cd, int i);

// <h_i, v> for v in the respective basis
std::int64_t pair_weight(const CartanData& cd, int i, const WeightVec& w);
std::int64_t pair_root(const CartanData& cd, int i, const RootVec& r);

WeightVec root_to_weight(const CartanData& cd, const RootVec& r);

// s_i v = v - <h_i, v> alpha_i in either basis
WeightVec reflect(const CartanData& cd, int i, const WeightVec& w);
RootVec reflect(const CartanData& cd, int i, const RootVec& r);

std::vector<RootVec> positive_roots(const CartanData& cd);

struct ReducedWord {
    std::vector<int> letters;  // values in [1, rank]
    int size() const { return static_cast<int>(letters.size()); }
    int at(int k) const { return letters[k - 1]; }  // 1-based
    bool operator==(const ReducedWord& o) const { return letters == o.letters; }
};

int weyl_length(const CartanData& cd, const ReducedWord& w);
bool is_reduced(const CartanData& cd, const ReducedWord& w);
bool is_reduced_longest(const CartanData& cd, const ReducedWord& w);

ReducedWord canonical_longest_word(const CartanData& cd);

// alpha^{(k)} = s_{i_N}...s_{i_{k+1}}(alpha_{i_k}) for k = 1..N, in root coords.
std::vector<RootVec> positive_roots_from_word(const CartanData& cd, const ReducedWord& w);

// next/previous occurrence of the same letter; kplus: 0 means none, kminus: 0 means none
int kplus(const ReducedWord& w, int k);
int kminus(const ReducedWord& w, int k);

// unique k with -alpha_k = w0(alpha_{i_1})
int partner_index(const CartanData& cd, const ReducedWord& longest);

struct BraidMove {
    int pos = 0;  // 0-based start position of the local pattern
    int len = 0;  // 2, 3, 4 or 6
    bool operator==(const BraidMove& o) const { return pos == o.pos && len == o.len; }
};

int braid_pattern_len(const CartanData& cd, int i, int j);
bool move_applicable(const CartanData& cd, const ReducedWord& w, int pos);
ReducedWord apply_move(const CartanData& cd, const ReducedWord& w, const BraidMove& m);

// Shortest move sequence from one reduced word to another (BFS over the word
// graph, capped number of visited words).
std::optional<std::vector<BraidMove>> word_graph_path(const CartanData& cd,
                                                      const ReducedWord& from,
                                                      const ReducedWord& to,
                                                      std::size_t cap = 1000000);

// Shortest path to any word whose first letter is i.
std::optional<std::pair<std::vector<BraidMove>, ReducedWord>> word_graph_path_to_leading(
    const CartanData& cd, const ReducedWord& from, int i, std::size_t cap = 1000000);

// Action of the word (as product s_{i_1}...s_{i_k}) on a root-basis vector.
RootVec word_action(const CartanData& cd, const ReducedWord& w, RootVec v);

}  // namespace cellcrys
