#include "cellcrys/braid.hpp"

#include <deque>
#include <map>
#include <mutex>

namespace cellcrys {

const TropTransition& derive_phi(int p, int q) {
    static std::map<std::pair<int, int>, TropTransition> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const ChamberSolution& sol = chamber_transition(p, q);
        TropTransition t;
        t.len = sol.len;
        t.out = sol.trop;
        it = cache.emplace(key, std::move(t)).first;
    }
    return it->second;
}

void apply_move_cell(const CartanData& cd, ReducedWord& word, std::vector<int>& x,
                     const BraidMove& m) {
    check(move_applicable(cd, word, m.pos), "apply_move_cell: pattern mismatch");
    int i = word.letters[m.pos], j = word.letters[m.pos + 1];
    int len = braid_pattern_len(cd, i, j);
    check(len == m.len, "apply_move_cell: wrong length");
    const TropTransition& tr = derive_phi(cd.at(i, j), cd.at(j, i));
    std::vector<int> win(x.begin() + m.pos, x.begin() + m.pos + len);
    for (int t = 0; t < len; ++t)
        x[m.pos + t] = static_cast<int>(tr.out[t].eval(win));
    word = apply_move(cd, word, m);
}

CellTransport apply_path_cell(const CartanData& cd, const ReducedWord& word,
                              const std::vector<int>& x, const std::vector<BraidMove>& path) {
    CellTransport out{word, x};
    for (const auto& m : path) apply_move_cell(cd, out.word, out.x, m);
    return out;
}

namespace {

struct PathKey {
    std::string type;
    std::vector<int> word;
    int i;
    bool leading;
    bool operator<(const PathKey& o) const {
        return std::tie(type, word, i, leading) < std::tie(o.type, o.word, o.i, o.leading);
    }
};

const std::pair<std::vector<BraidMove>, ReducedWord>& transport_path(const CartanData& cd,
                                                                     const ReducedWord& word,
                                                                     int i, bool leading) {
    static std::map<PathKey, std::pair<std::vector<BraidMove>, ReducedWord>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    PathKey key{cd.name(), word.letters, i, leading};
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::optional<std::pair<std::vector<BraidMove>, ReducedWord>> r;
        if (leading) {
            r = word_graph_path_to_leading(cd, word, i);
        } else {
            // BFS to any word ending with i
            r = std::nullopt;
            std::map<std::vector<int>, std::pair<std::vector<int>, BraidMove>> seen;
            std::deque<ReducedWord> queue;
            seen.emplace(word.letters, std::make_pair(std::vector<int>{}, BraidMove{}));
            queue.push_back(word);
            while (!queue.empty()) {
                ReducedWord w = queue.front();
                queue.pop_front();
                if (w.letters.back() == i) {
                    std::vector<BraidMove> path;
                    std::vector<int> cur = w.letters;
                    while (cur != word.letters) {
                        auto& pr = seen.at(cur);
                        path.push_back(pr.second);
                        cur = pr.first;
                    }
                    std::reverse(path.begin(), path.end());
                    r = std::make_pair(path, w);
                    break;
                }
                for (int pos = 0; pos < w.size(); ++pos) {
                    if (!move_applicable(cd, w, pos)) continue;
                    BraidMove m{pos, braid_pattern_len(cd, w.letters[pos], w.letters[pos + 1])};
                    ReducedWord nw = apply_move(cd, w, m);
                    if (seen.count(nw.letters)) continue;
                    check(seen.size() < 1000000, "transport_path: word-graph cap exceeded");
                    seen.emplace(nw.letters, std::make_pair(w.letters, m));
                    queue.push_back(nw);
                }
            }
        }
        check(r.has_value(), "transport_path: no transport target found");
        it = cache.emplace(key, *r).first;
    }
    return it->second;
}

}  // namespace

std::int64_t omega(const CartanData& cd, const ReducedWord& word, const std::vector<int>& x,
                   int i, WordEnd end) {
    const auto& [path, target] = transport_path(cd, word, i, end == WordEnd::first);
    CellTransport t = apply_path_cell(cd, word, x, path);
    check(t.word == target, "omega: transport mismatch");
    return end == WordEnd::first ? t.x.front() : t.x.back();
}

std::vector<int> xi_map(const CartanData& cd, const ReducedWord& word, const std::vector<int>& x,
                        int i) {
    const auto& [path, target] = transport_path(cd, word, i, true);
    CellTransport t = apply_path_cell(cd, word, x, path);
    t.x[0] = 0;
    // each move is its own inverse at the same position, replay reversed
    std::vector<BraidMove> back(path.rbegin(), path.rend());
    CellTransport home = apply_path_cell(cd, t.word, t.x, back);
    check(home.word == word, "xi: return transport mismatch");
    return home.x;
}

std::vector<BiElem> phi01(const CartanData& cd, const std::vector<BiElem>& elems) {
    check(elems.size() == 2 || elems.size() == 3, "phi01: pattern length must be 2 or 3");
    int i = elems[0].color, j = elems[1].color;
    check(i != j, "phi01: colors must differ");
    if (elems.size() == 2) {
        check(cd.at(i, j) == 0, "phi01: length-2 pattern needs orthogonal colors");
        return {elems[1], elems[0]};
    }
    check(cd.at(i, j) * cd.at(j, i) == 1, "phi01: length-3 pattern needs A2-type pair");
    check(elems[2].color == i, "phi01: pattern must alternate");
    int x = elems[0].x, y = elems[1].x, z = elems[2].x;
    return {BiElem{&cd, j, std::max(z, y - x)}, BiElem{&cd, i, x + z},
            BiElem{&cd, j, -std::max(-x, z - y)}};
}

std::vector<BiElem> phi_derived(const CartanData& cd, const std::vector<BiElem>& elems) {
    int L = static_cast<int>(elems.size());
    int i = elems[0].color, j = elems[1].color;
    check(braid_pattern_len(cd, i, j) == L, "phi_derived: wrong display length");
    // tensor display values <-> cellular window by reverse-negate
    std::vector<int> cell(L);
    for (int t = 0; t < L; ++t) cell[t] = -elems[L - 1 - t].x;
    const TropTransition& tr = derive_phi(cd.at(i, j), cd.at(j, i));
    std::vector<int> out(L);
    for (int t = 0; t < L; ++t) out[t] = static_cast<int>(tr.out[t].eval(cell));
    std::vector<BiElem> res(L);
    for (int t = 0; t < L; ++t)
        res[t] = BiElem{&cd, (t % 2 == 0) ? j : i, -out[L - 1 - t]};
    return res;
}

}  // namespace cellcrys
