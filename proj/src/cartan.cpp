#include "cellcrys/cartan.hpp"

#include <algorithm>

namespace cellcrys {

bool valid_type(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

static void set_edge(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
}

CartanData cartan_matrix(char family, int rank) {
    check(valid_type(family, rank), std::string("invalid finite type ") + family +
                                        std::to_string(rank));
    int n = rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto path = [&](int upto) {
        for (int i = 1; i < upto; ++i) set_edge(a, i, i + 1, -1, -1);
    };
    switch (family) {
        case 'A':
            path(n);
            break;
        case 'B':
            path(n);
            set_edge(a, n - 1, n, -1, -2);
            break;
        case 'C':
            path(n);
            set_edge(a, n - 1, n, -2, -1);
            break;
        case 'D':
            path(n - 1);
            set_edge(a, n - 2, n, -1, -1);
            break;
        case 'E':
            path(n - 1);
            set_edge(a, n == 6 ? 3 : (n == 7 ? 4 : 5), n, -1, -1);
            break;
        case 'F':
            path(4);
            set_edge(a, 2, 3, -1, -2);
            break;
        case 'G':
            set_edge(a, 1, 2, -1, -3);
            break;
    }
    CartanData cd;
    cd.family = family;
    cd.rank = n;
    cd.a = std::move(a);
    return cd;
}

CartanData langlands_dual(const CartanData& cd) {
    CartanData d = cd;
    if (cd.family == 'B') d.family = 'C';
    else if (cd.family == 'C') d.family = 'B';
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) d.a[i][j] = cd.a[j][i];
    return d;
}

}  // namespace cellcrys
