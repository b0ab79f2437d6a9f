#include "support/oracles.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace oracle {

int dense_rank(Matrix rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

bool in_row_span(const Matrix& rows, const std::vector<std::uint8_t>& v) {
    Matrix with = rows;
    with.push_back(v);
    return dense_rank(rows) == dense_rank(with);
}

Matrix differential(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Matrix d(n, std::vector<std::uint8_t>(n, 0));
    for (auto [from, to] : edges) d[from][to] ^= 1;
    return d;
}

int homology_dim(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return static_cast<int>(n) - 2 * dense_rank(differential(n, edges));
}

namespace {

// Kernel of the map e_j -> rows[j] for j in `dom`, as vectors in the ambient basis.
Matrix kernel_vectors(const Matrix& d, const std::vector<std::size_t>& dom) {
    const std::size_t n = d.size();
    Matrix aug;
    for (std::size_t j : dom) {
        std::vector<std::uint8_t> row(2 * n, 0);
        for (std::size_t k = 0; k < n; ++k) row[k] = d[j][k];
        row[n + j] = 1;
        aug.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < aug.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < aug.size() && !aug[pivot][c]) ++pivot;
        if (pivot == aug.size()) continue;
        std::swap(aug[pivot], aug[rank]);
        for (std::size_t r = 0; r < aug.size(); ++r)
            if (r != rank && aug[r][c])
                for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] ^= aug[rank][k];
        ++rank;
    }
    Matrix out;
    for (std::size_t r = rank; r < aug.size(); ++r)
        out.emplace_back(aug[r].begin() + static_cast<long>(n), aug[r].end());
    return out;
}

}  // namespace

std::map<int, int> e_infinity(const std::vector<int>& level,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const std::size_t n = level.size();
    Matrix d = differential(n, edges);
    const int boundaries = dense_rank(d);
    std::map<int, int> out;
    if (n == 0) return out;
    int lo = *std::min_element(level.begin(), level.end());
    int hi = *std::max_element(level.begin(), level.end());
    int prev = 0;
    for (int p = lo; p <= hi; ++p) {
        std::vector<std::size_t> dom;
        for (std::size_t j = 0; j < n; ++j)
            if (level[j] <= p) dom.push_back(j);
        Matrix span = d;
        for (auto& z : kernel_vectors(d, dom)) span.push_back(z);
        int image = dense_rank(span) - boundaries;
        out[p] = image - prev;
        prev = image;
    }
    return out;
}

std::pair<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> slice_i0(
    const veerkit::ReducedCFK& c) {
    auto idx = c.index();
    std::vector<int> level;
    for (const auto& g : c.generators) level.push_back(g.alexander);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : c.arrows)
        if (a.m == 0) edges.emplace_back(idx.at(a.from), idx.at(a.to));
    return {level, edges};
}

int tau(const veerkit::ReducedCFK& c) {
    auto [level, edges] = slice_i0(c);
    for (const auto& [p, d] : e_infinity(level, edges))
        if (d) return p;
    return 0;
}

std::optional<int> b_value(const veerkit::ReducedCFK& c) {
    const int g = *c.fibered_genus;
    auto idx = c.index();
    const std::size_t n = c.generators.size();
    // Mirror by hand: levels negate, (0, n) arrows reverse.
    std::vector<int> level;
    std::size_t bottom = 0;
    for (std::size_t j = 0; j < n; ++j) {
        level.push_back(-c.generators[j].alexander);
        if (c.generators[j].alexander == g) bottom = j;
    }
    Matrix d(n, std::vector<std::uint8_t>(n, 0));
    for (const auto& a : c.arrows)
        if (a.m == 0) d[idx.at(a.to)][idx.at(a.from)] ^= 1;
    std::vector<std::uint8_t> target(n, 0);
    target[bottom] = 1;
    for (int k = -g; k <= g; ++k) {
        Matrix rows;
        for (std::size_t j = 0; j < n; ++j)
            if (level[j] <= k) rows.push_back(d[j]);
        if (!rows.empty() && in_row_span(rows, target)) return g + k;
    }
    return std::nullopt;
}

bool d_squared_zero(const veerkit::ReducedCFK& c) {
    std::map<std::tuple<std::string, std::string, int, int>, int> parity;
    for (const auto& a : c.arrows)
        for (const auto& b : c.arrows)
            if (a.to == b.from) parity[{a.from, b.to, a.m + b.m, a.n + b.n}] ^= 1;
    return std::all_of(parity.begin(), parity.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace oracle

namespace fixtures {

using veerkit::Arrow;
using veerkit::CfkGenerator;

ReducedCFK dot(const std::string& id, int a, int m) {
    ReducedCFK c;
    c.generators.push_back({id, a, m, ""});
    return c;
}

ReducedCFK box(const std::string& p, int a, int m) {
    ReducedCFK c;
    c.generators = {{p + "0", a, m, ""}, {p + "1", a + 1, m + 1, ""}, {p + "2", a - 1, m - 1, ""},
                    {p + "3", a, m, ""}};
    c.arrows = {{p + "0", p + "1", 1, 0}, {p + "0", p + "2", 0, 1}, {p + "1", p + "3", 0, 1},
                {p + "2", p + "3", 1, 0}};
    return c;
}

ReducedCFK staircase(const std::vector<int>& steps, const std::string& prefix) {
    int total = 0;
    for (int s : steps) total += s;
    ReducedCFK c;
    int a = total / 2, m = 0;
    c.generators.push_back({prefix + "0", a, m, ""});
    for (std::size_t i = 1; i <= steps.size(); ++i) {
        const int s = steps[i - 1];
        const std::string prev = prefix + std::to_string(i - 1), cur = prefix + std::to_string(i);
        a -= s;
        if (i % 2 == 1) {
            m = m + 1 - 2 * s;
            c.arrows.push_back({cur, prev, s, 0});
        } else {
            m = m - 1;
            c.arrows.push_back({prev, cur, 0, s});
        }
        c.generators.push_back({cur, a, m, ""});
    }
    c.fibered_genus = total / 2;
    return c;
}

ReducedCFK shift(ReducedCFK c, int da, int dm) {
    for (auto& g : c.generators) {
        g.alexander += da;
        if (g.maslov) *g.maslov += dm;
    }
    if (da != 0) c.fibered_genus.reset();
    return c;
}

ReducedCFK direct_sum(const std::vector<ReducedCFK>& parts) {
    ReducedCFK out;
    for (const auto& p : parts) {
        out.generators.insert(out.generators.end(), p.generators.begin(), p.generators.end());
        out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
    }
    return out;
}

ReducedCFK unknot() {
    auto c = dot("u", 0, 0);
    c.fibered_genus = 0;
    return c;
}

ReducedCFK right_trefoil() { return staircase({1, 1}); }

ReducedCFK left_trefoil() {
    ReducedCFK c;
    c.generators = {{"x", 1, 2, ""}, {"y", 0, 1, ""}, {"z", -1, 0, ""}};
    c.arrows = {{"x", "y", 0, 1}, {"z", "y", 1, 0}};
    c.fibered_genus = 1;
    return c;
}

ReducedCFK figure8() {
    auto c = direct_sum({box("b", 0, 0), dot("e", 0, 0)});
    c.fibered_genus = 1;
    return c;
}

ReducedCFK basis_change(ReducedCFK c, std::mt19937_64& rng, int moves) {
    const std::size_t n = c.generators.size();
    if (n < 2) return c;
    using Key = std::pair<int, int>;  // (m, n)
    auto idx = c.index();
    std::map<Key, std::vector<std::set<std::size_t>>> cols;
    for (const auto& a : c.arrows) {
        auto& v = cols[{a.m, a.n}];
        if (v.empty()) v.resize(n);
        v[idx.at(a.from)].insert(idx.at(a.to));
    }
    auto toggle = [](std::set<std::size_t>& s, std::size_t k) {
        if (!s.erase(k)) s.insert(k);
    };
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < moves; ++t) {
        std::size_t x = pick(rng), y = pick(rng);
        const auto& gx = c.generators[x];
        const auto& gy = c.generators[y];
        if (x == y || gx.alexander != gy.alexander || gx.maslov != gy.maslov || gx.spinc != gy.spinc)
            continue;
        // New basis: x' = x + y. Old x = x' + y, so any column containing x also toggles y.
        for (auto& [key, v] : cols) {
            std::set<std::size_t> dx = v[x];
            for (std::size_t k : v[y]) toggle(dx, k);
            v[x] = dx;
            for (auto& col : v)
                if (col.count(x)) toggle(col, y);
        }
    }
    c.arrows.clear();
    for (const auto& [key, v] : cols)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k : v[j])
                c.arrows.push_back({c.generators[j].id, c.generators[k].id, key.first, key.second});
    std::sort(c.arrows.begin(), c.arrows.end());
    return c;
}

ReducedCFK random_complex(std::mt19937_64& rng, int max_generators, bool thin_only) {
    std::vector<ReducedCFK> parts;
    int used = 0, k = 0;
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const char* labels[] = {"", "s1", "s2"};
    while (true) {
        const std::string prefix = "g" + std::to_string(k++) + "_";
        ReducedCFK part;
        int kind = uni(0, 2);
        if (kind == 0) {
            std::vector<int> steps(uni(1, 2) * 2);
            for (auto& s : steps) s = thin_only ? 1 : uni(1, 2);
            part = staircase(steps, prefix);
            const int g = *part.fibered_genus;
            const int t = uni(-2, 2);
            part = thin_only ? shift(part, t, t + g) : shift(part, t, uni(-3, 3));
        } else if (kind == 1) {
            int a = uni(-3, 3);
            part = box(prefix, a, thin_only ? a : uni(-3, 3));
        } else {
            int a = uni(-3, 3);
            part = dot(prefix + "d", a, thin_only ? a : uni(-3, 3));
        }
        if (used + static_cast<int>(part.generators.size()) > max_generators) break;
        const std::string label = labels[uni(0, 2)];
        for (auto& g : part.generators) g.spinc = label;
        part.fibered_genus.reset();
        used += static_cast<int>(part.generators.size());
        parts.push_back(std::move(part));
    }
    auto c = direct_sum(parts);
    return basis_change(std::move(c), rng, 3 * used);
}

ReducedCFK random_neither_knot(std::mt19937_64& rng, int g) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<ReducedCFK> parts;
    if (g == 1) {
        parts.push_back(box("top", 0, 0));
    } else {
        parts.push_back(box("top", g - 1, g - 1));
        parts.push_back(box("bot", 1 - g, 1 - g));
        const int extra = uni(0, 3);
        for (int i = 0; i < extra; ++i) {
            int c = uni(2 - g, g - 2);
            parts.push_back(box("m" + std::to_string(i), c, c));
        }
    }
    parts.push_back(dot("e", 0, 0));
    auto c = direct_sum(parts);
    c = basis_change(std::move(c), rng, 4 * static_cast<int>(c.generators.size()));
    c.fibered_genus = g;
    return c;
}

}  // namespace fixtures
