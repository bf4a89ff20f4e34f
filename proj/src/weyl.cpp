#include "cellcrys/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace cellcrys {

WeightVec fundamental_weight(const CartanData& cd, int i) {
    WeightVec w;
    w.c.assign(cd.rank, 0);
    w.c[i - 1] = 1;
    return w;
}

WeightVec simple_root_weight(const CartanData& cd, int i) {
    // alpha_i = sum_j a_{ji} Lambda_j
    WeightVec w;
    w.c.assign(cd.rank, 0);
    for (int j = 1; j <= cd.rank; ++j) w.c[j - 1] = cd.at(j, i);
    return w;
}

RootVec simple_root(const CartanData& cd, int i) {
    RootVec r;
    r.c.assign(cd.rank, 0);
    r.c[i - 1] = 1;
    return r;
}

std::int64_t pair_weight(const CartanData& cd, int i, const WeightVec& w) {
    (void)cd;
    return w.c[i - 1];
}

std::int64_t pair_root(const CartanData& cd, int i, const RootVec& r) {
    std::int64_t s = 0;
    for (int j = 1; j <= cd.rank; ++j) s += static_cast<std::int64_t>(cd.at(i, j)) * r.c[j - 1];
    return s;
}

WeightVec root_to_weight(const CartanData& cd, const RootVec& r) {
    WeightVec w;
    w.c.assign(cd.rank, 0);
    for (int i = 1; i <= cd.rank; ++i) w.c[i - 1] = pair_root(cd, i, r);
    return w;
}

WeightVec reflect(const CartanData& cd, int i, const WeightVec& w) {
    WeightVec out = w;
    std::int64_t p = pair_weight(cd, i, w);
    for (int j = 1; j <= cd.rank; ++j) out.c[j - 1] -= p * cd.at(j, i);
    return out;
}

RootVec reflect(const CartanData& cd, int i, const RootVec& r) {
    RootVec out = r;
    out.c[i - 1] -= pair_root(cd, i, r);
    return out;
}

std::vector<RootVec> positive_roots(const CartanData& cd) {
    std::set<std::vector<std::int64_t>> seen;
    std::deque<RootVec> queue;
    for (int i = 1; i <= cd.rank; ++i) {
        queue.push_back(simple_root(cd, i));
        seen.insert(queue.back().c);
    }
    std::vector<RootVec> pos;
    while (!queue.empty()) {
        RootVec r = queue.front();
        queue.pop_front();
        bool positive = std::all_of(r.c.begin(), r.c.end(), [](auto x) { return x >= 0; });
        if (positive) pos.push_back(r);
        for (int i = 1; i <= cd.rank; ++i) {
            RootVec s = reflect(cd, i, r);
            if (seen.insert(s.c).second) queue.push_back(s);
        }
    }
    std::sort(pos.begin(), pos.end(), [](const RootVec& x, const RootVec& y) { return x.c < y.c; });
    return pos;
}

RootVec word_action(const CartanData& cd, const ReducedWord& w, RootVec v) {
    for (int k = w.size(); k >= 1; --k) v = reflect(cd, w.at(k), v);
    return v;
}

int weyl_length(const CartanData& cd, const ReducedWord& w) {
    auto pos = positive_roots(cd);
    int len = 0;
    for (const auto& r : pos) {
        RootVec img = word_action(cd, w, r);
        bool neg = std::all_of(img.c.begin(), img.c.end(), [](auto x) { return x <= 0; });
        if (neg) ++len;
    }
    return len;
}

bool is_reduced(const CartanData& cd, const ReducedWord& w) {
    for (int x : w.letters)
        if (x < 1 || x > cd.rank) return false;
    return weyl_length(cd, w) == w.size();
}

bool is_reduced_longest(const CartanData& cd, const ReducedWord& w) {
    return is_reduced(cd, w) &&
           w.size() == static_cast<int>(positive_roots(cd).size());
}

ReducedWord canonical_longest_word(const CartanData& cd) {
    ReducedWord w;
    int n = cd.rank;
    auto cycles = [&](int count) {
        for (int c = 0; c < count; ++c)
            for (int i = 1; i <= n; ++i) w.letters.push_back(i);
    };
    switch (cd.family) {
        case 'A':
            for (int len = n; len >= 1; --len)
                for (int i = 1; i <= len; ++i) w.letters.push_back(i);
            break;
        case 'B':
        case 'C':
            cycles(n);
            break;
        case 'D':
            cycles(n - 1);
            break;
        case 'G':
            w.letters = {1, 2, 1, 2, 1, 2};
            break;
        case 'F':
            cycles(6);
            break;
        case 'E':
            if (n == 6) {
                cycles(4);
                for (int i : {1, 2, 3, 4, 6, 1, 2, 3, 6, 1, 2, 1}) w.letters.push_back(i);
            } else if (n == 7) {
                cycles(9);
            } else {
                cycles(15);
            }
            break;
        default:
            check(false, "canonical_longest_word: bad family");
    }
    return w;
}

std::vector<RootVec> positive_roots_from_word(const CartanData& cd, const ReducedWord& w) {
    check(is_reduced_longest(cd, w), "positive_roots_from_word: word not reduced longest");
    int N = w.size();
    std::vector<RootVec> out(N);
    for (int k = 1; k <= N; ++k) {
        RootVec r = simple_root(cd, w.at(k));
        for (int l = k + 1; l <= N; ++l) r = reflect(cd, w.at(l), r);
        out[k - 1] = r;
    }
    return out;
}

int kplus(const ReducedWord& w, int k) {
    for (int l = k + 1; l <= w.size(); ++l)
        if (w.at(l) == w.at(k)) return l;
    return 0;
}

int kminus(const ReducedWord& w, int k) {
    for (int l = k - 1; l >= 1; --l)
        if (w.at(l) == w.at(k)) return l;
    return 0;
}

int partner_index(const CartanData& cd, const ReducedWord& longest) {
    RootVec img = word_action(cd, longest, simple_root(cd, longest.at(1)));
    for (int k = 1; k <= cd.rank; ++k) {
        RootVec neg = simple_root(cd, k);
        for (auto& x : neg.c) x = -x;
        if (img == neg) return k;
    }
    check(false, "partner_index: no partner found (word not reduced longest?)");
    return 0;
}

int braid_pattern_len(const CartanData& cd, int i, int j) {
    int q = cd.at(i, j) * cd.at(j, i);
    switch (q) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: check(false, "braid_pattern_len: not a finite rank-2 pair"); return 0;
    }
}

bool move_applicable(const CartanData& cd, const ReducedWord& w, int pos) {
    if (pos < 0 || pos + 1 >= w.size()) return false;
    int i = w.letters[pos], j = w.letters[pos + 1];
    if (i == j) return false;
    int len = braid_pattern_len(cd, i, j);
    if (pos + len > w.size()) return false;
    for (int t = 0; t < len; ++t)
        if (w.letters[pos + t] != (t % 2 == 0 ? i : j)) return false;
    return true;
}

ReducedWord apply_move(const CartanData& cd, const ReducedWord& w, const BraidMove& m) {
    check(move_applicable(cd, w, m.pos), "apply_move: pattern does not match");
    int i = w.letters[m.pos], j = w.letters[m.pos + 1];
    int len = braid_pattern_len(cd, i, j);
    check(len == m.len, "apply_move: wrong pattern length");
    ReducedWord out = w;
    for (int t = 0; t < len; ++t) out.letters[m.pos + t] = (t % 2 == 0 ? j : i);
    return out;
}

namespace {

template <typename Accept>
std::optional<std::pair<std::vector<BraidMove>, ReducedWord>> word_bfs(
    const CartanData& cd, const ReducedWord& from, Accept accept, std::size_t cap) {
    struct Parent {
        std::vector<int> word;
        BraidMove via;
    };
    std::map<std::vector<int>, Parent> seen;
    std::deque<ReducedWord> queue;
    seen.emplace(from.letters, Parent{{}, {}});
    queue.push_back(from);
    auto recover = [&](const ReducedWord& target) {
        std::vector<BraidMove> path;
        std::vector<int> cur = target.letters;
        while (true) {
            const Parent& p = seen.at(cur);
            if (p.word.empty() && cur == from.letters) break;
            path.push_back(p.via);
            cur = p.word;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    while (!queue.empty()) {
        ReducedWord w = queue.front();
        queue.pop_front();
        if (accept(w)) return std::make_pair(recover(w), w);
        for (int pos = 0; pos < w.size(); ++pos) {
            if (!move_applicable(cd, w, pos)) continue;
            int len = braid_pattern_len(cd, w.letters[pos], w.letters[pos + 1]);
            BraidMove m{pos, len};
            ReducedWord nw = apply_move(cd, w, m);
            if (seen.count(nw.letters)) continue;
            if (seen.size() >= cap) return std::nullopt;
            seen.emplace(nw.letters, Parent{w.letters, m});
            queue.push_back(nw);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<BraidMove>> word_graph_path(const CartanData& cd,
                                                      const ReducedWord& from,
                                                      const ReducedWord& to, std::size_t cap) {
    auto r = word_bfs(cd, from, [&](const ReducedWord& w) { return w == to; }, cap);
    if (!r) return std::nullopt;
    return r->first;
}

std::optional<std::pair<std::vector<BraidMove>, ReducedWord>> word_graph_path_to_leading(
    const CartanData& cd, const ReducedWord& from, int i, std::size_t cap) {
    return word_bfs(cd, from, [&](const ReducedWord& w) { return w.size() > 0 && w.at(1) == i; },
                    cap);
}

}  // namespace cellcrys
