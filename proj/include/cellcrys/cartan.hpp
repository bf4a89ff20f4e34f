#pragma once

#include <string>
#include <vector>

#include "cellcrys/basics.hpp"

namespace cellcrys {

// Finite-type Cartan matrix with the node numbering used throughout this
// project:
//   A_n : path 1-2-...-n
//   B_n : path with a_{n,n-1} = -2 (node n short)
//   C_n : path with a_{n-1,n} = -2 (node n long)
//   D_n : path 1-...-(n-1) plus node n attached to n-2
//   E_6 : path 1-2-3-4-5 plus node 6 attached to 3
//   E_7 : path 1-...-6 plus node 7 attached to 4
//   E_8 : path 1-...-7 plus node 8 attached to 5
//   F_4 : path with a_{32} = -2 (nodes 1,2 long; 3,4 short)
//   G_2 : a_{12} = -1, a_{21} = -3 (node 1 long, node 2 short)
struct CartanData {
    char family = 'A';
    int rank = 0;
    std::vector<std::vector<int>> a;  // a[i][j] = a_{i+1,j+1}

    // 1-based entry access: a_{ij} = <h_i, alpha_j>
    int at(int i, int j) const { return a[i - 1][j - 1]; }

    bool operator==(const CartanData& o) const {
        return family == o.family && rank == o.rank && a == o.a;
    }
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

CartanData cartan_matrix(char family, int rank);
CartanData langlands_dual(const CartanData& cd);

// Validity of (family, rank) as a finite type in this project's tables.
bool valid_type(char family, int rank);

}  // namespace cellcrys
