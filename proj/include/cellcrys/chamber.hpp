#pragma once

#include <vector>

#include "cellcrys/rep.hpp"
#include "cellcrys/tropical.hpp"

namespace cellcrys {

// Solution of the rank-2 relation
//   yb_i(c_1) yb_j(c_2) ... = yb_j(d_1) yb_i(d_2) ...
// in the defining representation: d_k as subtraction-free rational
// expressions in c, verified by exact reassembly.
struct ChamberSolution {
    int len = 0;                     // 2, 3, 4 or 6
    std::vector<RationalPair> d;     // d_1..d_len in variables c_1..c_len
    std::vector<TropRatio> trop;     // tropicalized transitions
};

// p = a_{ij}, q = a_{ji} for the ordered pattern (i, j, i, ...). Valid pairs:
// (0,0), (-1,-1), (-2,-1), (-1,-2), (-3,-1), (-1,-3).
ChamberSolution chamber_solve(int p, int q);

// cached access (derived once per pattern)
const ChamberSolution& chamber_transition(int p, int q);

}  // namespace cellcrys
