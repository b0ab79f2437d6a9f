#pragma once

#include <map>
#include <vector>

#include "veerkit/cfk.hpp"

namespace veerkit {

// A copy of generator `gen` placed at (i, j) with j - i = A(gen).
struct CornerCell {
    std::size_t gen = 0;
    int i = 0;
    int j = 0;
};

// Cells of C{i < 0, j >= k}. Only i in [k - A, -1] is realizable.
std::vector<CornerCell> corner_cells(const ReducedCFK& c, int k);

struct CornerHomology {
    int total = 0;
    std::map<SpincLabel, int> per_spinc;
};

// Homology of the subquotient C{i < 0, j >= k}.
CornerHomology corner_homology(const ReducedCFK& c, int k);

// Arrow between the two modeled generators of L. Only the dimensions are pinned,
// so the component is left as a knob for robustness tests.
enum class LArrow { None, Vertical, Horizontal };

struct SyntheticLModel {
    int n = 1;
    int side = 1;
    int l_genus = 1;
    int g_prime = 0;  // 3 l_genus + 3n
    ReducedCFK complex;
};

SyntheticLModel synthetic_l_model(int n, int side, int l_genus = 1, LArrow arrow = LArrow::None);

// K # L_side as the tensor product with the synthetic model.
ReducedCFK build_J(const ReducedCFK& k, int n, int side, int l_genus = 1,
                   LArrow arrow = LArrow::None);

// Corner homology of j at k = gbar - 2. Refuses input whose top generator lacks
// either a (0,1) arrow out or a (1,0) arrow in.
CornerHomology zero_surgery_top_minus_one(const ReducedCFK& j);

struct YiRow {
    int n = 1;
    int plus = 0;
    int minus = 0;
    int expected = 0;  // dim HFK(K, g-1) - 1
    int off_label = 0; // corner dimension outside the expected spin^c labels
    bool holds() const { return plus == expected && minus == expected && off_label == 0; }
};

// Runs both sides for each n. Requires b(K) = b(mirror K) = 1 and g >= 1.
std::vector<YiRow> check_yi(const ReducedCFK& k, const std::vector<int>& ns = {1, 2, 3},
                            int l_genus = 1, LArrow arrow = LArrow::None);

}  // namespace veerkit
