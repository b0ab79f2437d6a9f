#include "veerkit/surgery.hpp"

#include <stdexcept>

#include "veerkit/errors.hpp"

namespace veerkit {

std::vector<CornerCell> corner_cells(const ReducedCFK& c, int k) {
    std::vector<CornerCell> out;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        int a = c.generators[g].alexander;
        for (int i = k - a; i <= -1; ++i) out.push_back({g, i, i + a});
    }
    return out;
}

CornerHomology corner_homology(const ReducedCFK& c, int k) {
    require_valid_cfk(c);
    // Cells need every generator with A >= k + 1.
    if (c.truncation_floor && k + 1 < *c.truncation_floor)
        throw DomainError("insufficient model: region reads below the truncation floor");

    auto cells = corner_cells(c, k);
    std::map<std::tuple<std::size_t, int>, std::size_t> at;  // (gen, i) -> cell
    for (std::size_t x = 0; x < cells.size(); ++x) at[{cells[x].gen, cells[x].i}] = x;

    auto idx = c.index();
    std::map<SpincLabel, std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < cells.size(); ++x)
        blocks[c.generators[cells[x].gen].spinc].push_back(x);

    std::vector<gf2::BitVector> d(cells.size(), gf2::BitVector(cells.size()));
    for (const auto& a : c.arrows) {
        std::size_t from = idx.at(a.from), to = idx.at(a.to);
        for (std::size_t x = 0; x < cells.size(); ++x) {
            if (cells[x].gen != from) continue;
            auto it = at.find({to, cells[x].i - a.m});
            if (it != at.end()) d[x].flip(it->second);
        }
    }
    for (std::size_t x = 0; x < cells.size(); ++x) {
        gf2::BitVector dd(cells.size());
        for (std::size_t y : d[x].support()) dd ^= d[y];
        if (dd.any()) throw std::logic_error("corner differential does not square to zero");
    }

    CornerHomology out;
    for (const auto& [label, members] : blocks) {
        std::vector<gf2::BitVector> cols;
        for (std::size_t x : members) cols.push_back(d[x]);
        int dim = static_cast<int>(members.size()) - 2 * static_cast<int>(gf2::rank(cols));
        out.per_spinc[label] = dim;
        out.total += dim;
    }
    return out;
}

SyntheticLModel synthetic_l_model(int n, int side, int l_genus, LArrow arrow) {
    if (n < 1) throw DomainError("n must be positive");
    if (side != 1 && side != -1) throw DomainError("side must be + or -");
    if (l_genus < 1) throw DomainError("L genus must be positive");
    SyntheticLModel l;
    l.n = n;
    l.side = side;
    l.l_genus = l_genus;
    l.g_prime = 3 * l_genus + 3 * n;
    SpincLabel s0 = side > 0 ? "s0" : spinc_conjugate("s0");
    l.complex.generators = {{"L.top", l.g_prime, std::nullopt, s0},
                            {"L.next", l.g_prime - 1, std::nullopt, s0}};
    if (arrow == LArrow::Vertical) l.complex.arrows.push_back({"L.top", "L.next", 0, 1});
    if (arrow == LArrow::Horizontal) l.complex.arrows.push_back({"L.next", "L.top", 1, 0});
    l.complex.truncation_floor = l.g_prime - 2;
    l.complex.fibered_genus = l.g_prime;
    l.complex.fibration_spinc = s0;
    return l;
}

ReducedCFK build_J(const ReducedCFK& k, int n, int side, int l_genus, LArrow arrow) {
    require_valid_cfk(k);
    if (!k.fibered_genus) throw DomainError("fibered genus unset");
    if (k.truncation_floor) throw DomainError("build_J needs an untruncated complex");
    auto l = synthetic_l_model(n, side, l_genus, arrow);
    ReducedCFK j = tensor(k, l.complex);
    if (!validate_cfk(j).empty()) throw std::logic_error("tensor product failed validation");
    return j;
}

CornerHomology zero_surgery_top_minus_one(const ReducedCFK& j) {
    require_valid_cfk(j);
    if (!j.fibered_genus) throw DomainError("fibered genus unset");
    const int gbar = *j.fibered_genus;
    Id top;
    for (const auto& g : j.generators)
        if (g.alexander == gbar) top = g.id;
    bool d01 = false, d10 = false;
    for (const auto& a : j.arrows) {
        if (a.from == top && a.m == 0 && a.n == 1) d01 = true;
        if (a.to == top && a.m == 1 && a.n == 0) d10 = true;
    }
    if (!d01) throw DomainError("hypotheses not satisfied: no (0,1) arrow out of the top generator");
    if (!d10) throw DomainError("hypotheses not satisfied: no (1,0) arrow into the top generator");
    return corner_homology(j, gbar - 2);
}

std::vector<YiRow> check_yi(const ReducedCFK& k, const std::vector<int>& ns, int l_genus,
                            LArrow arrow) {
    require_valid_cfk(k);
    if (!k.fibered_genus) throw DomainError("fibered genus unset");
    const int g = *k.fibered_genus;
    if (g < 1) throw DomainError("hypotheses not satisfied: knot is trivial");
    BValue b = b_invariant(k), bm = b_invariant(mirror(k));
    if (b != 1 || bm != 1)
        throw DomainError("hypotheses not satisfied: b(K) = " + to_string(b) +
                          ", b(mirror K) = " + to_string(bm));

    SpincLabel label;
    for (const auto& x : k.generators)
        if (x.alexander == g) label = x.spinc;
    auto dims = hfk_dims_by_alexander(k);
    const int expected = (dims.count(g - 1) ? dims.at(g - 1) : 0) - 1;

    std::vector<YiRow> rows;
    for (int n : ns) {
        YiRow row;
        row.n = n;
        row.expected = expected;
        for (int side : {1, -1}) {
            auto h = zero_surgery_top_minus_one(build_J(k, n, side, l_genus, arrow));
            SpincLabel want = spinc_tensor(label, side > 0 ? "s0" : spinc_conjugate("s0"));
            for (const auto& [s, d] : h.per_spinc)
                if (s != want) row.off_label += d;
            (side > 0 ? row.plus : row.minus) = h.total;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace veerkit
