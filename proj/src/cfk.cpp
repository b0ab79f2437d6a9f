#include "veerkit/cfk.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "veerkit/errors.hpp"

namespace veerkit {

namespace {

std::vector<std::string> atoms(const SpincLabel& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find('#', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

SpincLabel join(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += '#';
        out += v[i];
    }
    return out;
}

}  // namespace

SpincLabel spinc_tensor(const SpincLabel& a, const SpincLabel& b) {
    auto v = atoms(a);
    auto w = atoms(b);
    v.insert(v.end(), w.begin(), w.end());
    return join(std::move(v));
}

SpincLabel spinc_conjugate(const SpincLabel& a) {
    auto v = atoms(a);
    for (auto& x : v) {
        if (!x.empty() && x.back() == '*')
            x.pop_back();
        else
            x.push_back('*');
    }
    return join(std::move(v));
}

std::map<Id, std::size_t> ReducedCFK::index() const {
    std::map<Id, std::size_t> out;
    for (std::size_t i = 0; i < generators.size(); ++i) out.emplace(generators[i].id, i);
    return out;
}

bool ReducedCFK::has_maslov() const {
    return std::all_of(generators.begin(), generators.end(),
                       [](const CfkGenerator& g) { return g.maslov.has_value(); });
}

int ReducedCFK::max_alexander() const {
    if (generators.empty()) throw DomainError("empty complex");
    int m = std::numeric_limits<int>::min();
    for (const auto& g : generators) m = std::max(m, g.alexander);
    return m;
}

int ReducedCFK::min_alexander() const {
    if (generators.empty()) throw DomainError("empty complex");
    int m = std::numeric_limits<int>::max();
    for (const auto& g : generators) m = std::min(m, g.alexander);
    return m;
}

// ---------------------------------------------------------------------------

ValidationReport validate_cfk(const ReducedCFK& c) {
    ValidationReport out;
    auto add = [&](std::string axiom, std::vector<Id> ids, std::string msg) {
        out.push_back({std::move(axiom), std::move(ids), std::move(msg)});
    };
    std::map<Id, std::size_t> idx;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        if (!idx.emplace(c.generators[i].id, i).second)
            add("unique ids", {c.generators[i].id}, "duplicate generator id");
    std::size_t with_m = 0;
    for (const auto& g : c.generators) with_m += g.maslov ? 1 : 0;
    if (with_m != 0 && with_m != c.generators.size())
        add("maslov grading", {}, "maslov grading given on some generators only");
    if (c.truncation_floor)
        for (const auto& g : c.generators)
            if (g.alexander < *c.truncation_floor)
                add("truncation", {g.id}, "generator below the truncation floor");

    std::set<Arrow> seen;
    std::vector<std::vector<const Arrow*>> out_arrows(c.generators.size());
    for (const auto& a : c.arrows) {
        auto f = idx.find(a.from), t = idx.find(a.to);
        if (f == idx.end() || t == idx.end()) {
            add("references", {a.from, a.to}, "arrow references an unknown generator");
            continue;
        }
        if (a.m < 0 || a.n < 0 || (a.m == 0 && a.n == 0)) {
            add("arrow bidegree", {a.from, a.to}, "arrow needs m,n >= 0 and (m,n) != (0,0)");
            continue;
        }
        if (!seen.insert(a).second) add("arrows", {a.from, a.to}, "duplicate arrow");
        const auto& gf = c.generators[f->second];
        const auto& gt = c.generators[t->second];
        if (gf.alexander - gt.alexander != a.n - a.m)
            add("alexander grading", {a.from, a.to}, "arrow violates A(from) - A(to) = n - m");
        if (gf.maslov && gt.maslov && *gt.maslov != *gf.maslov - 1 + 2 * a.m)
            add("maslov grading", {a.from, a.to}, "arrow violates M(to) = M(from) - 1 + 2m");
        if (gf.spinc != gt.spinc) add("spin^c", {a.from, a.to}, "arrow changes spin^c label");
        out_arrows[f->second].push_back(&a);
    }

    // d^2 = 0 per pair and total bidegree
    auto above = [&](std::size_t i) {
        return !c.truncation_floor || c.generators[i].alexander >= *c.truncation_floor;
    };
    for (std::size_t x = 0; x < c.generators.size(); ++x) {
        if (!above(x)) continue;
        std::map<std::tuple<std::size_t, int, int>, int> paths;
        for (const Arrow* a1 : out_arrows[x]) {
            std::size_t y = idx.at(a1->to);
            if (!above(y)) continue;
            for (const Arrow* a2 : out_arrows[y]) {
                std::size_t z = idx.at(a2->to);
                if (!above(z)) continue;
                paths[{z, a1->m + a2->m, a1->n + a2->n}] ^= 1;
            }
        }
        for (const auto& [key, parity] : paths) {
            // A path of total bidegree (M, N) can pass through Alexander grading A(x) - N;
            // classes that may dip below the floor are not fully modeled.
            if (c.truncation_floor && c.generators[x].alexander - std::get<2>(key) < *c.truncation_floor)
                continue;
            if (parity) {
                std::ostringstream os;
                os << "d^2 != 0 in bidegree (" << std::get<1>(key) << "," << std::get<2>(key) << ")";
                add("d^2 = 0", {c.generators[x].id, c.generators[std::get<0>(key)].id}, os.str());
            }
        }
    }

    if (c.fibered_genus) {
        int g = *c.fibered_genus;
        if (g < 0) add("fibered", {}, "fibered genus must be nonnegative");
        std::vector<const CfkGenerator*> top, bottom;
        for (const auto& gen : c.generators) {
            if (gen.alexander == g) top.push_back(&gen);
            if (gen.alexander == -g) bottom.push_back(&gen);
            if (gen.alexander > g || (!c.truncation_floor && gen.alexander < -g))
                add("fibered", {gen.id}, "generator outside [-g, g]");
        }
        if (top.size() != 1) add("fibered", {}, "top alexander grading must have exactly one generator");
        if (!c.truncation_floor && bottom.size() != 1)
            add("fibered", {}, "bottom alexander grading must have exactly one generator");
        if (top.size() == 1 && c.fibration_spinc && top.front()->spinc != *c.fibration_spinc)
            add("fibered", {top.front()->id}, "top generator is not in the fibration spin^c label");
    }
    return out;
}

void require_valid_cfk(const ReducedCFK& c) {
    auto r = validate_cfk(c);
    if (r.empty()) return;
    std::ostringstream os;
    os << "invalid complex:";
    for (const auto& v : r) {
        os << " [" << v.axiom << ": " << v.message;
        for (const auto& id : v.ids) os << " " << id;
        os << "]";
    }
    throw DomainError(os.str());
}

// ---------------------------------------------------------------------------

ReducedCFK mirror(const ReducedCFK& c) {
    if (c.truncation_floor) throw DomainError("mirror needs an untruncated complex");
    ReducedCFK out;
    for (const auto& g : c.generators) {
        CfkGenerator m = g;
        m.alexander = -g.alexander;
        if (g.maslov) m.maslov = -*g.maslov;
        m.spinc = spinc_conjugate(g.spinc);
        out.generators.push_back(std::move(m));
    }
    // Dual complex: arrows reverse and keep their (m, n).
    for (const auto& a : c.arrows) out.arrows.push_back({a.to, a.from, a.m, a.n});
    std::sort(out.arrows.begin(), out.arrows.end());
    out.fibered_genus = c.fibered_genus;
    if (c.fibration_spinc) out.fibration_spinc = spinc_conjugate(*c.fibration_spinc);
    return out;
}

ReducedCFK tensor(const ReducedCFK& a, const ReducedCFK& b) {
    if (a.generators.empty() || b.generators.empty()) throw DomainError("empty complex");
    std::optional<int> floor;
    if (a.truncation_floor) floor = *a.truncation_floor + b.max_alexander();
    if (b.truncation_floor) {
        int f = *b.truncation_floor + a.max_alexander();
        floor = floor ? std::max(*floor, f) : f;
    }
    auto keep = [&](int alexander) { return !floor || alexander >= *floor; };
    auto name = [](const Id& x, const Id& y) { return x + "|" + y; };

    ReducedCFK out;
    out.truncation_floor = floor;
    std::set<Id> names;
    std::map<Id, int> alex;
    for (const auto& x : a.generators)
        for (const auto& y : b.generators) {
            int A = x.alexander + y.alexander;
            if (!keep(A)) continue;
            CfkGenerator g;
            g.id = name(x.id, y.id);
            g.alexander = A;
            if (x.maslov && y.maslov) g.maslov = *x.maslov + *y.maslov;
            g.spinc = spinc_tensor(x.spinc, y.spinc);
            if (!names.insert(g.id).second)
                throw DomainError("tensor product generator names collide: " + g.id);
            alex[g.id] = A;
            out.generators.push_back(std::move(g));
        }
    auto push = [&](const Id& from, const Id& to, int m, int n) {
        if (alex.count(from) && alex.count(to)) out.arrows.push_back({from, to, m, n});
    };
    for (const auto& e : a.arrows)
        for (const auto& y : b.generators) push(name(e.from, y.id), name(e.to, y.id), e.m, e.n);
    for (const auto& x : a.generators)
        for (const auto& e : b.arrows) push(name(x.id, e.from), name(x.id, e.to), e.m, e.n);
    std::sort(out.arrows.begin(), out.arrows.end());
    if (a.fibered_genus && b.fibered_genus) out.fibered_genus = *a.fibered_genus + *b.fibered_genus;
    if (a.fibration_spinc || b.fibration_spinc)
        out.fibration_spinc = spinc_tensor(a.fibration_spinc.value_or(""), b.fibration_spinc.value_or(""));
    return out;
}

std::map<std::pair<int, SpincLabel>, int> hfk_dims(const ReducedCFK& c) {
    std::map<std::pair<int, SpincLabel>, int> out;
    for (const auto& g : c.generators) out[{g.alexander, g.spinc}]++;
    return out;
}

std::map<int, int> hfk_dims_by_alexander(const ReducedCFK& c) {
    std::map<int, int> out;
    for (const auto& g : c.generators) out[g.alexander]++;
    return out;
}

// ---------------------------------------------------------------------------

FilteredFlattening flatten(const ReducedCFK& c, Slice slice, int k) {
    FilteredFlattening f;
    f.slice = slice;
    f.k = k;
    auto idx = c.index();
    std::size_t n = c.generators.size();
    for (const auto& g : c.generators) {
        f.ids.push_back(g.id);
        // i = k: j = k + A; j = k: i = k - A
        f.level.push_back(slice == Slice::I ? k + g.alexander : k - g.alexander);
    }
    f.d.assign(n, gf2::BitVector(n));
    for (const auto& a : c.arrows) {
        bool in_slice = slice == Slice::I ? a.m == 0 : a.n == 0;
        if (in_slice) f.d[idx.at(a.from)].flip(idx.at(a.to));
    }
    return f;
}

int Page::total() const {
    int t = 0;
    for (const auto& [_, d] : dims) t += d;
    return t;
}

int SpectralSequence::collapse_page() const {
    for (const auto& p : pages)
        if (p.dims == e_infinity().dims) return p.r;
    return pages.back().r;
}

namespace {

class FiltrationSpaces {
public:
    explicit FiltrationSpaces(const FilteredFlattening& f) : f_(f), n_(f.ids.size()) {}

    // Z_r^p = { x in F_p : dx in F_{p-r} }
    const std::vector<gf2::BitVector>& Z(int r, int p) {
        auto key = std::make_pair(r, p);
        auto it = z_.find(key);
        if (it != z_.end()) return it->second;
        std::vector<std::size_t> dom;
        for (std::size_t j = 0; j < n_; ++j)
            if (f_.level[j] <= p) dom.push_back(j);
        std::vector<gf2::BitVector> images;
        for (std::size_t j : dom) {
            gf2::BitVector img(n_);
            for (std::size_t t : f_.d[j].support())
                if (f_.level[t] > p - r) img.set(t);
            images.push_back(std::move(img));
        }
        std::vector<gf2::BitVector> basis;
        if (!dom.empty())
            for (const auto& combo : gf2::kernel(images, dom.size())) {
                gf2::BitVector v(n_);
                for (std::size_t s : combo.support()) v.set(dom[s]);
                basis.push_back(std::move(v));
            }
        return z_.emplace(key, std::move(basis)).first->second;
    }

    // B_r^p = d(Z_r^{p+r})
    std::vector<gf2::BitVector> B(int r, int p) {
        std::vector<gf2::BitVector> out;
        for (const auto& x : Z(r, p + r)) out.push_back(apply(x));
        return out;
    }

    gf2::BitVector apply(const gf2::BitVector& x) const {
        gf2::BitVector y(n_);
        for (std::size_t j : x.support()) y ^= f_.d[j];
        return y;
    }

    int dim_sum(const std::vector<gf2::BitVector>& a, const std::vector<gf2::BitVector>& b) const {
        gf2::EchelonBasis e(n_);
        for (const auto& v : a) e.add(v);
        for (const auto& v : b) e.add(v);
        return static_cast<int>(e.rank());
    }

private:
    const FilteredFlattening& f_;
    std::size_t n_;
    std::map<std::pair<int, int>, std::vector<gf2::BitVector>> z_;
};

}  // namespace

int homology_dim(const FilteredFlattening& f) {
    std::size_t n = f.ids.size();
    return static_cast<int>(n) - 2 * static_cast<int>(gf2::rank(f.d));
}

SpectralSequence spectral_sequence(const FilteredFlattening& f) {
    SpectralSequence ss;
    ss.total_homology = homology_dim(f);
    if (f.ids.empty()) {
        ss.pages.push_back(Page{});
        return ss;
    }
    int lo = *std::min_element(f.level.begin(), f.level.end());
    int hi = *std::max_element(f.level.begin(), f.level.end());
    FiltrationSpaces sp(f);
    const int last = hi - lo + 2;  // E_last = E_infinity
    for (int r = 1; r <= last; ++r) {
        Page page;
        page.r = r;
        for (int p = lo; p <= hi; ++p) {
            int dz = static_cast<int>(sp.Z(r, p).size());
            int quot = sp.dim_sum(sp.Z(r - 1, p - 1), sp.B(r - 1, p));
            page.dims[p] = dz - quot;
        }
        if (r < last) {
            for (int p = lo; p <= hi; ++p) {
                int q = p - r;
                const auto& zlow = sp.Z(r - 1, q - 1);
                int rk = sp.dim_sum(sp.B(r, q), zlow) - sp.dim_sum(sp.B(r - 1, q), zlow);
                page.rank_from_level[p] = rk;
                page.rank += rk;
            }
        }
        ss.pages.push_back(std::move(page));
    }
    return ss;
}

// ---------------------------------------------------------------------------

namespace {

void require_s3_like(const ReducedCFK& c, const FilteredFlattening& f) {
    if (c.truncation_floor) throw DomainError("truncated complex");
    if (!c.has_maslov()) throw DomainError("maslov gradings required");
    if (homology_dim(f) != 1) throw DomainError("total homology dimension must be 1");
}

}  // namespace

int tau(const ReducedCFK& c) {
    require_valid_cfk(c);
    auto f = flatten(c, Slice::I, 0);
    require_s3_like(c, f);
    std::size_t n = f.ids.size();
    gf2::EchelonBasis boundaries(n);
    for (const auto& col : f.d) boundaries.add(col);
    int lo = c.min_alexander(), hi = c.max_alexander();
    for (int k = lo; k <= hi; ++k) {
        std::vector<std::size_t> dom;
        for (std::size_t j = 0; j < n; ++j)
            if (f.level[j] <= k) dom.push_back(j);
        std::vector<gf2::BitVector> images;
        for (std::size_t j : dom) images.push_back(f.d[j]);
        for (const auto& combo : gf2::kernel(images, dom.size())) {
            gf2::BitVector cycle(n);
            for (std::size_t s : combo.support()) cycle.set(dom[s]);
            if (!boundaries.contains(cycle)) return k;
        }
    }
    throw std::logic_error("no filtration level surjects onto total homology");
}

int tau_from_pages(const ReducedCFK& c) {
    require_valid_cfk(c);
    auto f = flatten(c, Slice::I, 0);
    require_s3_like(c, f);
    for (const auto& [p, d] : spectral_sequence(f).e_infinity().dims)
        if (d) return p;
    throw std::logic_error("empty E_infinity page");
}

bool top_d1_nonzero(const ReducedCFK& c) {
    if (!c.fibered_genus) throw DomainError("fibered genus unset");
    auto ss = spectral_sequence(flatten(c, Slice::I, 0));
    const auto& ranks = ss.pages.front().rank_from_level;
    auto it = ranks.find(*c.fibered_genus);
    return it != ranks.end() && it->second > 0;
}

BValue b_invariant(const ReducedCFK& c) {
    require_valid_cfk(c);
    if (!c.fibered_genus) throw DomainError("fibered genus unset");
    if (c.truncation_floor) throw DomainError("b-invariant needs an untruncated complex");
    const int g = *c.fibered_genus;
    ReducedCFK mc = mirror(c);
    auto f = flatten(mc, Slice::I, 0);
    std::size_t n = f.ids.size();
    std::optional<std::size_t> bottom;
    for (std::size_t j = 0; j < n; ++j)
        if (mc.generators[j].alexander == -g) {
            if (bottom) throw DomainError("top dimension is not 1");
            bottom = j;
        }
    if (!bottom) throw DomainError("top dimension is not 1");
    gf2::BitVector cls = gf2::BitVector::unit(n, *bottom);

    BValue result;
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return f.level[x] < f.level[y]; });
    gf2::EchelonBasis boundaries(n);
    std::size_t next = 0;
    for (int k = -g; k <= g && !result; ++k) {
        while (next < n && f.level[order[next]] <= k) boundaries.add(f.d[order[next++]]);
        if (boundaries.contains(cls)) result = g + k;
    }
    if ((result && *result == 1) != top_d1_nonzero(c))
        throw std::logic_error("b-invariant routes disagree");
    return result;
}

std::string to_string(const BValue& b) { return b ? std::to_string(*b) : "infinity"; }

bool is_thin(const ReducedCFK& c) {
    if (!c.has_maslov()) throw DomainError("maslov gradings required");
    std::set<int> deltas;
    for (const auto& g : c.generators) deltas.insert(*g.maslov - g.alexander);
    return deltas.size() <= 1;
}

int genus(const ReducedCFK& c) { return c.max_alexander(); }

// ---------------------------------------------------------------------------

namespace {

struct Shape {
    std::vector<std::tuple<int, int, SpincLabel>> grading;
    std::vector<std::vector<std::tuple<std::size_t, int, int>>> out;  // (target, m, n)
    std::set<std::tuple<std::size_t, std::size_t, int, int>> arrows;
};

Shape shape_of(const ReducedCFK& c) {
    Shape s;
    auto idx = c.index();
    s.out.resize(c.generators.size());
    for (const auto& g : c.generators)
        s.grading.emplace_back(g.alexander, g.maslov.value_or(std::numeric_limits<int>::min()), g.spinc);
    for (const auto& a : c.arrows) {
        auto f = idx.at(a.from), t = idx.at(a.to);
        s.out[f].emplace_back(t, a.m, a.n);
        s.arrows.emplace(f, t, a.m, a.n);
    }
    return s;
}

// Colour refinement: returns stable colours for the disjoint union of two shapes.
std::pair<std::vector<int>, std::vector<int>> refine(const Shape& a, const Shape& b) {
    std::size_t na = a.grading.size();
    auto shape_at = [&](std::size_t i) -> const Shape& { return i < na ? a : b; };
    auto local = [&](std::size_t i) { return i < na ? i : i - na; };
    std::size_t n = na + b.grading.size();
    std::vector<int> colour(n);
    {
        std::map<std::tuple<int, int, SpincLabel>, int> ids;
        for (std::size_t i = 0; i < n; ++i) {
            auto key = shape_at(i).grading[local(i)];
            colour[i] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
        }
    }
    while (true) {
        std::vector<std::vector<std::tuple<int, int, int, int>>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Shape& s = shape_at(i);
            std::size_t off = i < na ? 0 : na;
            for (const auto& [t, m, nn] : s.out[local(i)]) {
                sig[i].emplace_back(0, m, nn, colour[t + off]);
                sig[t + off].emplace_back(1, m, nn, colour[i]);
            }
        }
        std::map<std::pair<int, std::vector<std::tuple<int, int, int, int>>>, int> ids;
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::sort(sig[i].begin(), sig[i].end());
            next[i] = ids.emplace(std::make_pair(colour[i], sig[i]), static_cast<int>(ids.size()))
                          .first->second;
        }
        std::set<int> before(colour.begin(), colour.end()), after(next.begin(), next.end());
        colour = std::move(next);
        if (after.size() == before.size()) break;
    }
    return {std::vector<int>(colour.begin(), colour.begin() + static_cast<long>(na)),
            std::vector<int>(colour.begin() + static_cast<long>(na), colour.end())};
}

}  // namespace

bool isomorphic(const ReducedCFK& a, const ReducedCFK& b) {
    if (a.generators.size() != b.generators.size() || a.arrows.size() != b.arrows.size())
        return false;
    if (a.truncation_floor != b.truncation_floor || a.fibered_genus != b.fibered_genus)
        return false;
    Shape sa = shape_of(a), sb = shape_of(b);
    auto [ca, cb] = refine(sa, sb);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;

    std::size_t n = ca.size();
    std::vector<std::ptrdiff_t> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    // Incoming/outgoing arrows among already-mapped generators must match.
    auto consistent = [&](std::size_t x) {
        for (const auto& [t, m, nn] : sa.out[x])
            if (map[t] >= 0 && !sb.arrows.count({static_cast<std::size_t>(map[x]),
                                                 static_cast<std::size_t>(map[t]), m, nn}))
                return false;
        for (std::size_t y = 0; y < n; ++y) {
            if (map[y] < 0) continue;
            for (const auto& [t, m, nn] : sa.out[y])
                if (t == x && !sb.arrows.count({static_cast<std::size_t>(map[y]),
                                                 static_cast<std::size_t>(map[x]), m, nn}))
                    return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> solve = [&](std::size_t pos) -> bool {
        if (pos == n) return true;
        std::size_t x = order[pos];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cb[y] != ca[x]) continue;
            map[x] = static_cast<std::ptrdiff_t>(y);
            used[y] = true;
            if (consistent(x) && solve(pos + 1)) return true;
            used[y] = false;
            map[x] = -1;
        }
        return false;
    };
    // Arrow counts match and every arrow of a maps to an arrow of b, so the map is onto.
    return solve(0);
}

}  // namespace veerkit
