#include "veerkit/surface_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "veerkit/errors.hpp"

namespace veerkit {

namespace {

const std::vector<Side> kNoSides;

bool is_partial_fraction_ok(const Annulus& a) {
    if (a.fraction == Rational(0)) return false;
    auto abs_f = boost::abs(a.fraction);
    if (abs_f >= Rational(1)) return false;
    return (a.fraction > Rational(0)) == (a.sign > 0);
}

}  // namespace

const char* to_string(PieceKind k) {
    switch (k) {
        case PieceKind::Fixed: return "Fixed";
        case PieceKind::Periodic: return "Periodic";
        case PieceKind::PseudoAnosov: return "PseudoAnosov";
        case PieceKind::Permuted: return "Permuted";
    }
    return "?";
}

const char* to_string(AnnulusKind k) {
    switch (k) {
        case AnnulusKind::TwistFull: return "TwistFull";
        case AnnulusKind::TwistPartial: return "TwistPartial";
        case AnnulusKind::FlipTwist: return "FlipTwist";
        case AnnulusKind::FixedAnnulus: return "FixedAnnulus";
    }
    return "?";
}

StandardFormMap::StandardFormMap(std::vector<Circle> circles, std::vector<Piece> pieces,
                                 std::vector<Annulus> annuli, SurfaceMeta meta,
                                 std::optional<std::vector<Id>> declared_boundary)
    : meta_(meta) {
    for (auto& c : circles) {
        if (!circles_.emplace(c.id, c).second) duplicates_.push_back(c.id);
    }
    for (auto& p : pieces) {
        std::sort(p.boundary.begin(), p.boundary.end());
        if (!pieces_.emplace(p.id, p).second) duplicates_.push_back(p.id);
    }
    for (auto& a : annuli) {
        std::sort(a.sides.begin(), a.sides.end());
        if (!annuli_.emplace(a.id, a).second) duplicates_.push_back(a.id);
    }
    for (const auto& [id, c] : circles_)
        if (c.is_surface_boundary) surface_boundary_.push_back(id);
    if (declared_boundary) {
        declared_boundary_ = *declared_boundary;
        std::sort(declared_boundary_.begin(), declared_boundary_.end());
    } else {
        declared_boundary_ = surface_boundary_;
    }
    for (const auto& [id, p] : pieces_)
        for (const auto& c : p.boundary) incidence_[c].push_back({Side::Type::Piece, id});
    for (const auto& [id, a] : annuli_) {
        if (a.kind == AnnulusKind::FixedAnnulus) continue;
        for (const auto& c : a.sides) incidence_[c].push_back({Side::Type::Annulus, id});
    }
}

const Piece* StandardFormMap::piece(const Id& id) const {
    auto it = pieces_.find(id);
    return it == pieces_.end() ? nullptr : &it->second;
}

const Annulus* StandardFormMap::annulus(const Id& id) const {
    auto it = annuli_.find(id);
    return it == annuli_.end() ? nullptr : &it->second;
}

const Circle* StandardFormMap::circle(const Id& id) const {
    auto it = circles_.find(id);
    return it == circles_.end() ? nullptr : &it->second;
}

const std::vector<Side>& StandardFormMap::incidence(const Id& circle) const {
    auto it = incidence_.find(circle);
    return it == incidence_.end() ? kNoSides : it->second;
}

std::optional<Side> StandardFormMap::across(const Id& circle, const Side& from) const {
    const auto& inc = incidence(circle);
    if (inc.size() != 2) return std::nullopt;
    if (inc[0] == from) return inc[1];
    if (inc[1] == from) return inc[0];
    return std::nullopt;
}

bool StandardFormMap::is_stack_fixed_annulus(const Id& p) const {
    const Piece* piece = this->piece(p);
    const Annulus* a = annulus(p);
    return piece && a && piece->kind == PieceKind::Fixed && a->kind == AnnulusKind::FixedAnnulus;
}

bool StandardFormMap::operator==(const StandardFormMap& o) const {
    return circles_ == o.circles_ && pieces_ == o.pieces_ && annuli_ == o.annuli_ &&
           meta_ == o.meta_ && declared_boundary_ == o.declared_boundary_;
}

// ---------------------------------------------------------------------------
// validate

namespace {

class Validator {
public:
    explicit Validator(const StandardFormMap& m) : m_(m) {}

    ValidationReport run() {
        ids();
        references();
        incidence();
        bookkeeping();
        connectivity();
        piece_data();
        orbits();
        annulus_data();
        fixed_annuli();
        adjacency();
        multitwist_regions();
        return std::move(report_);
    }

private:
    void add(std::string axiom, std::vector<Id> ids, std::string message) {
        report_.push_back({std::move(axiom), std::move(ids), std::move(message)});
    }

    const Piece* piece_side(const std::optional<Side>& s) const {
        if (!s || s->type != Side::Type::Piece) return nullptr;
        return m_.piece(s->id);
    }
    const Annulus* annulus_side(const std::optional<Side>& s) const {
        if (!s || s->type != Side::Type::Annulus) return nullptr;
        return m_.annulus(s->id);
    }

    void ids() {
        for (const auto& id : m_.duplicate_ids()) add("unique ids", {id}, "duplicate id");
        for (const auto& [id, a] : m_.annuli()) {
            if (m_.circle(id)) add("unique ids", {id}, "annulus id collides with a circle id");
            if (m_.piece(id) && a.kind != AnnulusKind::FixedAnnulus)
                add("unique ids", {id}, "annulus id collides with a piece id");
        }
        for (const auto& [id, p] : m_.pieces())
            if (m_.circle(id)) add("unique ids", {id}, "piece id collides with a circle id");
    }

    void references() {
        auto check = [&](const Id& c, const Id& owner) {
            if (!m_.circle(c)) add("references", {owner, c}, "unknown circle");
        };
        for (const auto& [id, p] : m_.pieces()) {
            for (const auto& c : p.boundary) check(c, id);
            for (const auto& [c, _] : p.prongs) check(c, id);
            for (const auto& [c, _] : p.rotation) check(c, id);
        }
        for (const auto& [id, a] : m_.annuli())
            for (const auto& c : a.sides) check(c, id);
        for (const auto& c : m_.declared_boundary()) check(c, "surface_boundary");
    }

    void incidence() {
        for (const auto& [id, c] : m_.circles()) {
            std::size_t need = c.is_surface_boundary ? 1 : 2;
            std::size_t have = m_.incidence(id).size();
            if (have != need) {
                std::ostringstream os;
                os << "circle has " << have << " incident region sides, expected " << need;
                add("incidence", {id}, os.str());
            }
        }
    }

    void bookkeeping() {
        if (m_.declared_boundary() != m_.surface_boundary())
            add("surface boundary", {}, "surface_boundary list disagrees with circle flags");
        const auto& meta = m_.meta();
        if (meta.boundary_count != static_cast<int>(m_.surface_boundary().size()))
            add("euler characteristic", {}, "declared boundary_count disagrees with surface boundary");
        int chi = 0;
        for (const auto& [_, p] : m_.pieces()) chi += p.euler_characteristic();
        int declared = 2 - 2 * meta.genus - meta.boundary_count;
        if (chi != declared) {
            std::ostringstream os;
            os << "pieces give chi=" << chi << ", declared surface has chi=" << declared;
            add("euler characteristic", {}, os.str());
        }
    }

    void connectivity() {
        if (m_.pieces().empty() && m_.annuli().empty()) {
            add("connectivity", {}, "map has no regions");
            return;
        }
        // Union circles through the regions that contain them.
        std::map<Id, Id> parent;
        std::function<Id(const Id&)> find = [&](const Id& x) -> Id {
            auto it = parent.find(x);
            if (it == parent.end() || it->second == x) return x;
            return it->second = find(it->second);
        };
        auto unite = [&](const Id& a, const Id& b) { parent[find(a)] = find(b); };
        std::vector<Id> nodes;
        for (const auto& [id, p] : m_.pieces()) {
            nodes.push_back("p:" + id);
            for (const auto& c : p.boundary) unite("p:" + id, "c:" + c);
        }
        for (const auto& [id, a] : m_.annuli()) {
            if (a.kind == AnnulusKind::FixedAnnulus) continue;
            nodes.push_back("a:" + id);
            for (const auto& c : a.sides) unite("a:" + id, "c:" + c);
        }
        for (const auto& [id, _] : m_.circles()) nodes.push_back("c:" + id);
        std::set<Id> roots;
        for (const auto& n : nodes) roots.insert(find(n));
        if (roots.size() > 1) add("connectivity", {}, "incidence graph is disconnected");
    }

    void piece_data() {
        for (const auto& [id, p] : m_.pieces()) {
            if (p.genus < 0) add("piece data", {id}, "negative genus");
            if (p.genus == 0 && p.boundary_count() == 2 && p.kind != PieceKind::Fixed)
                add("annular pieces", {id}, "annular piece outside the invariant set must be fixed");
            if (p.genus == 0 && p.boundary_count() == 1) {
                const Circle* c = m_.circle(p.boundary[0]);
                if (c && !c->is_surface_boundary)
                    add("essential reducing circles", {id, p.boundary[0]},
                        "disk piece bounded by a reducing circle");
            }
            if (p.genus == 0 && p.boundary_count() == 2 && p.kind == PieceKind::Fixed &&
                !m_.is_stack_fixed_annulus(id)) {
                bool both_boundary = true;
                for (const auto& c : p.boundary) {
                    const Circle* cc = m_.circle(c);
                    both_boundary = both_boundary && cc && cc->is_surface_boundary;
                }
                if (!both_boundary)
                    add("fixed annuli", {id}, "fixed annulus outside a multitwist region");
            }
            bool extras_pa = !p.prongs.empty() || p.pa_fixed_count || !p.rotation.empty();
            switch (p.kind) {
                case PieceKind::Fixed:
                    if (p.period != 0 || p.lefschetz || extras_pa || !p.orbit.empty())
                        add("piece data", {id}, "fixed piece carries periodic/pA/orbit data");
                    break;
                case PieceKind::Periodic:
                    if (p.period < 2) add("piece data", {id}, "periodic piece needs period >= 2");
                    if (p.lefschetz && *p.lefschetz < 0)
                        add("piece data", {id}, "lefschetz number must be nonnegative");
                    if (extras_pa || !p.orbit.empty())
                        add("piece data", {id}, "periodic piece carries pA/orbit data");
                    break;
                case PieceKind::PseudoAnosov: {
                    std::set<Id> circles(p.boundary.begin(), p.boundary.end());
                    std::set<Id> keys;
                    for (const auto& [c, k] : p.prongs) {
                        keys.insert(c);
                        if (k < 1) add("piece data", {id, c}, "prong count must be >= 1");
                    }
                    if (keys != circles)
                        add("piece data", {id}, "prong counts must cover exactly the boundary circles");
                    for (const auto& [c, r] : p.rotation) {
                        if (!circles.count(c)) add("piece data", {id, c}, "rotation on a foreign circle");
                        if (r < Rational(0) || r >= Rational(1)) add("piece data", {id, c}, "rotation must lie in [0,1)");
                    }
                    if (p.pa_fixed_count && *p.pa_fixed_count < 0)
                        add("piece data", {id}, "pa_fixed_count must be nonnegative");
                    if (p.period != 0 || p.lefschetz || !p.orbit.empty())
                        add("piece data", {id}, "pA piece carries periodic/orbit data");
                    break;
                }
                case PieceKind::Permuted:
                    if (p.period < 2) add("piece data", {id}, "permuted piece needs orbit size >= 2");
                    if (p.orbit.empty()) add("piece data", {id}, "permuted piece needs an orbit id");
                    if (p.lefschetz && *p.lefschetz < 0)
                        add("piece data", {id}, "lefschetz override must be nonnegative");
                    if (extras_pa) add("piece data", {id}, "permuted piece carries pA data");
                    break;
            }
        }
    }

    void orbits() {
        std::map<Id, std::vector<const Piece*>> by_orbit;
        for (const auto& [id, p] : m_.pieces())
            if (p.kind == PieceKind::Permuted && !p.orbit.empty()) by_orbit[p.orbit].push_back(&p);
        for (const auto& [orbit, members] : by_orbit) {
            const Piece& first = *members.front();
            bool ok = static_cast<int>(members.size()) == first.period;
            for (const Piece* p : members)
                ok = ok && p->period == first.period && p->genus == first.genus &&
                     p->boundary_count() == first.boundary_count();
            if (!ok) {
                std::vector<Id> ids{orbit};
                for (const Piece* p : members) ids.push_back(p->id);
                add("permuted orbits", ids, "orbit size must equal period with matching combinatorics");
            }
        }
    }

    void annulus_data() {
        for (const auto& [id, a] : m_.annuli()) {
            if (a.sides[0] == a.sides[1]) add("annulus data", {id}, "annulus sides coincide");
            switch (a.kind) {
                case AnnulusKind::TwistFull:
                    if (a.sign != 1 && a.sign != -1) add("annulus data", {id}, "twist sign must be +1 or -1");
                    if (a.fraction != Rational(0)) add("annulus data", {id}, "full twist carries a fraction");
                    break;
                case AnnulusKind::TwistPartial:
                    if (a.sign != 1 && a.sign != -1) add("annulus data", {id}, "twist sign must be +1 or -1");
                    if (!is_partial_fraction_ok(a))
                        add("annulus data", {id}, "partial fraction must satisfy 0<|r|<1 with the twist sign");
                    break;
                case AnnulusKind::FlipTwist:
                case AnnulusKind::FixedAnnulus:
                    if (a.sign != 0 || a.fraction != Rational(0))
                        add("annulus data", {id}, "flip-twist/fixed annulus carries twist data");
                    break;
            }
            if (a.kind == AnnulusKind::FlipTwist) {
                for (const auto& c : a.sides) {
                    auto s = m_.across(c, {Side::Type::Annulus, id});
                    const Piece* p = piece_side(s);
                    if (!p || p->kind == PieceKind::Fixed)
                        add("flip-twist regions", {id, c},
                            "flip-twist must abut periodic, pA or permuted pieces");
                }
            }
        }
    }

    void fixed_annuli() {
        for (const auto& [id, a] : m_.annuli()) {
            if (a.kind != AnnulusKind::FixedAnnulus) continue;
            const Piece* p = m_.piece(id);
            std::vector<Id> sides(a.sides.begin(), a.sides.end());
            if (!p || p->kind != PieceKind::Fixed || p->genus != 0 || p->boundary != sides) {
                add("fixed annuli", {id}, "fixed annulus record has no matching annular fixed piece");
                continue;
            }
            for (const auto& c : a.sides) {
                auto s = m_.across(c, {Side::Type::Piece, id});
                const Annulus* t = annulus_side(s);
                if (!t || !t->is_twist())
                    add("fixed annuli", {id, c}, "fixed annulus must separate twist regions");
            }
        }
    }

    void adjacency() {
        for (const auto& [cid, _] : m_.circles()) {
            const auto& inc = m_.incidence(cid);
            if (inc.size() != 2) continue;
            const Piece* p0 = piece_side(inc[0]);
            const Piece* p1 = piece_side(inc[1]);
            if (p0 && p1) {
                auto kinds = std::minmax(p0->kind, p1->kind);
                if (kinds.first == PieceKind::Fixed && kinds.second == PieceKind::Fixed)
                    add("minimality", {cid, p0->id, p1->id}, "reducing circle with fixed pieces on both sides");
                if (kinds.first == PieceKind::Fixed && kinds.second == PieceKind::Periodic)
                    add("fixed-periodic", {cid, p0->id, p1->id}, "fixed piece abuts a periodic piece");
                if (kinds.first == PieceKind::Fixed && kinds.second == PieceKind::Permuted)
                    add("fixed-permuted", {cid, p0->id, p1->id}, "fixed piece abuts a permuted piece");
            }
            for (int s = 0; s < 2; ++s) {
                const Annulus* a = annulus_side(inc[s]);
                const Piece* p = piece_side(inc[1 - s]);
                if (!a || !a->is_twist() || !p) continue;
                if (p->kind == PieceKind::Permuted)
                    add("twist regions", {a->id, p->id}, "twist region abuts a permuted piece");
                if (p->kind == PieceKind::Periodic && a->kind == AnnulusKind::TwistFull)
                    add("twist regions", {a->id, p->id},
                        "twist region abutting a periodic piece must be partial");
            }
        }
    }

    void multitwist_regions() {
        // Links between twist annuli: direct (shared circle) or parallel (through a fixed annulus).
        std::map<Id, int> parallel_degree;
        std::map<Id, Id> parent;
        std::function<Id(const Id&)> find = [&](const Id& x) -> Id {
            auto it = parent.find(x);
            if (it == parent.end() || it->second == x) return x;
            return it->second = find(it->second);
        };
        std::set<std::tuple<Id, Id, Id>> links;
        std::map<Id, std::set<Id>> run_adj;
        for (const auto& [id, a] : m_.annuli()) {
            if (!a.is_twist()) continue;
            parent[id] = id;
            for (const auto& c : a.sides) {
                auto s = m_.across(c, {Side::Type::Annulus, id});
                if (!s) continue;
                if (const Annulus* b = annulus_side(s); b && b->is_twist()) {
                    if (b->sign == a.sign && id < b->id)
                        add("parallel twist regions", {id, b->id, c}, "missing separating fixed annulus");
                    links.insert({std::min(id, b->id), std::max(id, b->id), c});
                    continue;
                }
                const Piece* p = piece_side(s);
                if (!p || !m_.is_stack_fixed_annulus(p->id)) continue;
                const Id& c2 = p->boundary[0] == c ? p->boundary[1] : p->boundary[0];
                const Annulus* b = annulus_side(m_.across(c2, {Side::Type::Piece, p->id}));
                if (!b || !b->is_twist()) continue;
                if (b->sign != a.sign && id < b->id)
                    add("parallel twist regions", {id, b->id, p->id},
                        "parallel twist regions have different signs");
                parallel_degree[id]++;
                run_adj[id].insert(b->id);
                links.insert({std::min(id, b->id), std::max(id, b->id), p->id});
            }
        }
        // Cycle detection over all links.
        std::map<Id, int> nodes_in, edges_in;
        for (const auto& [x, y, _] : links) {
            parent[find(x)] = find(y);
        }
        for (const auto& [id, _] : parent) nodes_in[find(id)]++;
        for (const auto& [x, y, _] : links) edges_in[find(x)]++;
        for (const auto& [root, e] : edges_in)
            if (e >= nodes_in[root]) add("annular cycles", {root}, "closed chain of annuli is unsupported");

        // Partial twists: at region ends, abutting a periodic or pA piece.
        for (const auto& [id, a] : m_.annuli()) {
            if (a.kind != AnnulusKind::TwistPartial) continue;
            if (parallel_degree[id] >= 2)
                add("partial twists", {id}, "partial twist region in the middle of a multitwist region");
            bool rotating = false;
            for (const auto& c : a.sides) {
                const Piece* p = piece_side(m_.across(c, {Side::Type::Annulus, id}));
                rotating = rotating || (p && (p->kind == PieceKind::Periodic ||
                                              p->kind == PieceKind::PseudoAnosov));
            }
            if (!rotating)
                add("partial twists", {id}, "partial twist region must abut a periodic or pA piece");
        }
        // At most two partial twists per multitwist region.
        std::map<Id, Id> run_parent;
        std::function<Id(const Id&)> rfind = [&](const Id& x) -> Id {
            auto it = run_parent.find(x);
            if (it == run_parent.end() || it->second == x) return x;
            return it->second = rfind(it->second);
        };
        for (const auto& [x, ys] : run_adj)
            for (const auto& y : ys) run_parent[rfind(x)] = rfind(y);
        std::map<Id, int> partials;
        for (const auto& [id, a] : m_.annuli())
            if (a.kind == AnnulusKind::TwistPartial) partials[rfind(id)]++;
        for (const auto& [root, count] : partials)
            if (count > 2) add("partial twists", {root}, "more than two partial twist regions in a multitwist region");
    }

    const StandardFormMap& m_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const StandardFormMap& m) { return Validator(m).run(); }

void require_valid(const StandardFormMap& m) {
    auto report = validate(m);
    if (report.empty()) return;
    std::ostringstream os;
    os << "invalid standard form:";
    for (const auto& v : report) {
        os << " [" << v.axiom << ": " << v.message;
        for (const auto& id : v.ids) os << " " << id;
        os << "]";
    }
    throw DomainError(os.str());
}

// ---------------------------------------------------------------------------

StandardFormMap inverse(const StandardFormMap& m) {
    std::vector<Circle> circles;
    for (const auto& [_, c] : m.circles()) circles.push_back(c);
    std::vector<Piece> pieces;
    for (auto [_, p] : m.pieces()) {
        for (auto& [c, r] : p.rotation)
            if (r != Rational(0)) r = Rational(1) - r;
        pieces.push_back(std::move(p));
    }
    std::vector<Annulus> annuli;
    for (auto [_, a] : m.annuli()) {
        a.sign = -a.sign;
        a.fraction = -a.fraction;
        annuli.push_back(std::move(a));
    }
    return StandardFormMap(std::move(circles), std::move(pieces), std::move(annuli), m.meta(),
                           m.declared_boundary());
}

bool is_identity(const StandardFormMap& m) {
    return m.annuli().empty() && m.pieces().size() == 1 &&
           m.pieces().begin()->second.kind == PieceKind::Fixed;
}

MultitwistStub MultitwistStub::from_value(const Rational& v) {
    MultitwistStub s;
    s.epsilon = v < Rational(0) ? -1 : 1;
    Rational a = boost::abs(v);
    s.k = a.numerator() / a.denominator();
    s.r = Rational(s.epsilon) * (a - Rational(s.k));
    return s;
}

MultitwistStub MultitwistStub::power(std::int64_t n) const {
    return from_value(value() * Rational(n));
}

BoundaryStub boundary_stub(const StandardFormMap& m, const Id& b) {
    const Circle* c = m.circle(b);
    if (!c || !c->is_surface_boundary) throw DomainError("unknown boundary circle: " + b);
    const auto& inc = m.incidence(b);
    if (inc.size() != 1) throw DomainError("boundary circle has malformed incidence: " + b);
    const Side& s = inc[0];
    if (s.type == Side::Type::Piece) {
        const Piece& p = *m.piece(s.id);
        if (p.kind == PieceKind::Fixed) return DirectlyFixed{p.id};
        if (p.kind == PieceKind::PseudoAnosov) {
            auto it = p.rotation.find(b);
            if (it == p.rotation.end() || it->second == Rational(0)) {
                MultitwistStub stub;
                stub.end_piece = p.id;
                return stub;
            }
        }
        return NonTrivialBoundary{p.id};
    }
    const Annulus* first = m.annulus(s.id);
    if (!first->is_twist()) return NonTrivialBoundary{first->id};

    MultitwistStub stub;
    stub.epsilon = first->sign;
    const Annulus* cur = first;
    Id from = b;
    while (true) {
        stub.annuli.push_back(cur->id);
        if (cur->kind == AnnulusKind::TwistFull)
            ++stub.k;
        else
            stub.r = cur->fraction;
        if (cur->kind == AnnulusKind::TwistPartial) {
            const Id& c2 = cur->other_side(from);
            if (auto next = m.across(c2, {Side::Type::Annulus, cur->id});
                next && next->type == Side::Type::Piece)
                stub.end_piece = next->id;
            break;
        }
        const Id& c2 = cur->other_side(from);
        auto next = m.across(c2, {Side::Type::Annulus, cur->id});
        if (!next || next->type == Side::Type::Annulus) break;
        if (!m.is_stack_fixed_annulus(next->id)) {
            stub.end_piece = next->id;
            break;
        }
        const Piece& fa = *m.piece(next->id);
        const Id& c3 = fa.boundary[0] == c2 ? fa.boundary[1] : fa.boundary[0];
        auto after = m.across(c3, {Side::Type::Piece, fa.id});
        if (!after || after->type != Side::Type::Annulus) break;
        const Annulus* nxt = m.annulus(after->id);
        if (!nxt->is_twist() || nxt->sign != stub.epsilon) break;
        cur = nxt;
        from = c3;
    }
    return stub;
}

// ---------------------------------------------------------------------------

void MapBuilder::touch(const Id& c) {
    if (circles_.emplace(c, false).second) circle_order_.push_back(c);
}

MapBuilder& MapBuilder::boundary(const Id& c) {
    touch(c);
    circles_[c] = true;
    return *this;
}

MapBuilder& MapBuilder::fixed(const Id& id, int genus, std::vector<Id> circles) {
    for (const auto& c : circles) touch(c);
    Piece p;
    p.id = id;
    p.genus = genus;
    p.boundary = std::move(circles);
    pieces_.push_back(std::move(p));
    return *this;
}

MapBuilder& MapBuilder::periodic(const Id& id, int genus, std::vector<Id> circles, int period,
                                 std::optional<std::int64_t> lefschetz) {
    for (const auto& c : circles) touch(c);
    Piece p;
    p.id = id;
    p.genus = genus;
    p.boundary = std::move(circles);
    p.kind = PieceKind::Periodic;
    p.period = period;
    p.lefschetz = lefschetz;
    pieces_.push_back(std::move(p));
    return *this;
}

MapBuilder& MapBuilder::pseudo_anosov(const Id& id, int genus, std::map<Id, int> prongs,
                                      std::optional<std::int64_t> fixed_count) {
    Piece p;
    p.id = id;
    p.genus = genus;
    for (const auto& [c, _] : prongs) {
        touch(c);
        p.boundary.push_back(c);
    }
    p.kind = PieceKind::PseudoAnosov;
    p.prongs = std::move(prongs);
    p.pa_fixed_count = fixed_count;
    pieces_.push_back(std::move(p));
    return *this;
}

MapBuilder& MapBuilder::permuted(const Id& id, int genus, std::vector<Id> circles, int period,
                                 const Id& orbit) {
    for (const auto& c : circles) touch(c);
    Piece p;
    p.id = id;
    p.genus = genus;
    p.boundary = std::move(circles);
    p.kind = PieceKind::Permuted;
    p.period = period;
    p.orbit = orbit;
    pieces_.push_back(std::move(p));
    return *this;
}

MapBuilder& MapBuilder::twist(const Id& id, const Id& a, const Id& b, int sign) {
    touch(a);
    touch(b);
    annuli_.push_back({id, {a, b}, AnnulusKind::TwistFull, sign, Rational(0)});
    return *this;
}

MapBuilder& MapBuilder::partial(const Id& id, const Id& a, const Id& b, Rational fraction) {
    touch(a);
    touch(b);
    annuli_.push_back({id, {a, b}, AnnulusKind::TwistPartial, fraction < Rational(0) ? -1 : 1, fraction});
    return *this;
}

MapBuilder& MapBuilder::flip(const Id& id, const Id& a, const Id& b) {
    touch(a);
    touch(b);
    annuli_.push_back({id, {a, b}, AnnulusKind::FlipTwist, 0, Rational(0)});
    return *this;
}

MapBuilder& MapBuilder::fixed_annulus(const Id& id, const Id& a, const Id& b) {
    fixed(id, 0, {a, b});
    annuli_.push_back({id, {a, b}, AnnulusKind::FixedAnnulus, 0, Rational(0)});
    return *this;
}

MapBuilder& MapBuilder::rotation(const Id& piece, const Id& circle, Rational r) {
    for (auto& p : pieces_)
        if (p.id == piece) p.rotation[circle] = r;
    return *this;
}

MapBuilder& MapBuilder::genus(int g) {
    genus_ = g;
    return *this;
}

StandardFormMap MapBuilder::build() const {
    std::vector<Circle> circles;
    int nb = 0;
    for (const auto& id : circle_order_) {
        circles.push_back({id, circles_.at(id)});
        nb += circles_.at(id) ? 1 : 0;
    }
    int chi = 0;
    for (const auto& p : pieces_) chi += p.euler_characteristic();
    SurfaceMeta meta;
    meta.boundary_count = nb;
    meta.genus = genus_ ? *genus_ : (2 - chi - nb) / 2;
    return StandardFormMap(circles, pieces_, annuli_, meta);
}

}  // namespace veerkit
