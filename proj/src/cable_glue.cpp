#include "veerkit/cable_glue.hpp"

#include <stdexcept>

#include "veerkit/errors.hpp"

namespace veerkit {

CableBoundaryModel build_cable_boundary_model(int n, int side, int l_genus) {
    if (n < 1) throw DomainError("cable parameter n must be >= 1");
    if (side != 1 && side != -1) throw DomainError("side must be +1 or -1");
    if (l_genus < 1) throw DomainError("genus of L must be >= 1");
    CableBoundaryModel g;
    g.n = n;
    g.side = side;
    g.l_genus = l_genus;
    const int period = 9 * n + 3;
    g.stub.epsilon = side;
    g.stub.k = 0;
    g.stub.r = Rational(side, period);
    g.stub.annuli = {"F.twist"};
    g.stub.end_piece = "F.T";
    g.boundary = "F.d";
    MapBuilder b;
    b.boundary("F.d")
        .partial("F.twist", "F.d", "F.cT", g.stub.r)
        .periodic("F.T", 3 * n, {"F.cT", "F.c1", "F.c2", "F.c3"}, period);
    for (int i = 1; i <= 3; ++i) {
        auto s = std::to_string(i);
        b.permuted("F.G" + s, l_genus, {"F.c" + s}, 3, "F.G");
    }
    g.map = b.build();
    return g;
}

namespace {

Id s_name(const Id& id) { return "S." + id; }

}  // namespace

StandardFormMap glue(const StandardFormMap& h, const CableBoundaryModel& g) {
    require_valid(h);
    if (h.surface_boundary().size() != 1)
        throw DomainError("gluing needs exactly one boundary circle on h");
    const Id b = h.surface_boundary().front();
    auto stub = boundary_stub(h, b);
    if (std::holds_alternative<NonTrivialBoundary>(stub))
        throw DomainError("map not identity on boundary");
    if (is_identity(h)) throw DomainError("h is isotopic to the identity");

    std::vector<Circle> circles;
    std::vector<Piece> pieces;
    std::vector<Annulus> annuli;
    for (const auto& [id, c] : h.circles()) circles.push_back({s_name(id), false});
    for (auto [id, p] : h.pieces()) {
        p.id = s_name(id);
        for (auto& c : p.boundary) c = s_name(c);
        std::map<Id, int> prongs;
        for (const auto& [c, k] : p.prongs) prongs[s_name(c)] = k;
        p.prongs = std::move(prongs);
        std::map<Id, Rational> rotation;
        for (const auto& [c, r] : p.rotation) rotation[s_name(c)] = r;
        p.rotation = std::move(rotation);
        if (!p.orbit.empty()) p.orbit = s_name(p.orbit);
        pieces.push_back(std::move(p));
    }
    for (auto [id, a] : h.annuli()) {
        a.id = s_name(id);
        for (auto& c : a.sides) c = s_name(c);
        annuli.push_back(std::move(a));
    }

    // The glued circle keeps h's name; g's twist region attaches to it, or to
    // a new fixed annulus when the twist regions on both sides share a sign.
    Id junction = s_name(b);
    const Side& s_side = h.incidence(b).front();
    if (s_side.type == Side::Type::Annulus) {
        const Annulus& first = *h.annulus(s_side.id);
        if (first.is_twist() && first.sign == g.side) {
            circles.push_back({"J.c", false});
            pieces.push_back({"J.A", 0, {junction, "J.c"}, PieceKind::Fixed, 0, {}, {}, {}, {}, {}});
            annuli.push_back({"J.A", {junction, "J.c"}, AnnulusKind::FixedAnnulus, 0, Rational(0)});
            junction = "J.c";
        }
    }
    for (const auto& [id, c] : g.map.circles())
        if (id != g.boundary) circles.push_back({id, false});
    for (const auto& [_, p] : g.map.pieces()) pieces.push_back(p);
    for (auto [_, a] : g.map.annuli()) {
        for (auto& c : a.sides)
            if (c == g.boundary) c = junction;
        annuli.push_back(std::move(a));
    }
    SurfaceMeta meta{h.meta().genus + g.map.meta().genus, 0};
    StandardFormMap out(std::move(circles), std::move(pieces), std::move(annuli), meta);
    auto report = validate(out);
    if (!report.empty())
        throw std::logic_error("glued map failed validation: " + report.front().axiom + ": " +
                               report.front().message);
    return out;
}

SymplecticVerdict rv_via_symplectic(const StandardFormMap& h, int n) {
    auto plus = hf_symp_dim(glue(h, build_cable_boundary_model(n, +1)));
    auto minus = hf_symp_dim(glue(h, build_cable_boundary_model(n, -1)));
    if (plus.opaque != minus.opaque)
        throw std::logic_error("opaque terms of the two gluings differ");
    SymplecticVerdict out;
    out.difference = dim_difference(plus, minus);
    switch (out.difference) {
        case 2: out.verdict = Verdict::RightVeering; break;
        case -2: out.verdict = Verdict::LeftVeering; break;
        case 0: out.verdict = Verdict::Neither; break;
        default: throw std::logic_error("symplectic difference outside {-2,0,2}");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random standard forms

namespace {

enum class Scenario { PositiveStub, NegativeStub, DirectlyFixed, DirectPseudoAnosov, Closed };

class Generator {
public:
    Generator(std::mt19937_64& rng, const RandomMapOptions& o) : rng_(rng), o_(o) {}

    StandardFormMap make() {
        Scenario sc = Scenario::Closed;
        if (!o_.closed) {
            std::discrete_distribution<int> w({3, 3, 3, 1});
            sc = static_cast<Scenario>(w(rng_));
        }
        int budget = uniform(1, o_.max_pieces);
        if (sc == Scenario::DirectlyFixed) budget = std::max(budget, 2);

        PieceKind root_kind;
        switch (sc) {
            case Scenario::DirectlyFixed: root_kind = PieceKind::Fixed; break;
            case Scenario::DirectPseudoAnosov: root_kind = PieceKind::PseudoAnosov; break;
            default: root_kind = pick({PieceKind::Fixed, PieceKind::Periodic, PieceKind::PseudoAnosov});
        }
        add_node(root_kind);
        while (static_cast<int>(nodes_.size()) < budget) {
            std::vector<int> parents;
            for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
                if (nodes_[i].kind != PieceKind::Permuted) parents.push_back(i);
            int parent = parents[uniform(0, static_cast<int>(parents.size()) - 1)];
            PieceKind pk = nodes_[parent].kind;
            int room = budget - static_cast<int>(nodes_.size());
            double u = coin_value();
            if (u < 0.1 && pk != PieceKind::Fixed && room >= 2) {
                int size = uniform(2, std::min(3, room));
                Id orbit = "O" + std::to_string(orbit_count_++);
                int g = uniform(1, o_.max_genus);
                for (int i = 0; i < size; ++i) {
                    int child = add_node(PieceKind::Permuted);
                    nodes_[child].orbit = orbit;
                    nodes_[child].period = size;
                    nodes_[child].genus = g;
                    direct(parent, child);
                }
                continue;
            }
            PieceKind ck = u < 0.45 ? PieceKind::Fixed
                                    : (u < 0.65 ? PieceKind::Periodic : PieceKind::PseudoAnosov);
            int child = add_node(ck);
            connect(parent, child);
        }
        for (auto& node : nodes_)
            if (node.kind != PieceKind::Fixed && node.kind != PieceKind::Permuted && coin(0.2)) {
                Id a = new_circle(), b = new_circle();
                node.circles.push_back(a);
                node.circles.push_back(b);
                annuli_.push_back({"f" + std::to_string(annuli_.size()), {a, b},
                                   AnnulusKind::FlipTwist, 0, Rational(0)});
            }
        switch (sc) {
            case Scenario::PositiveStub:
            case Scenario::NegativeStub: {
                Id d = "d";
                boundary_ = d;
                chain_from(d, 0, sc == Scenario::PositiveStub ? 1 : -1);
                break;
            }
            case Scenario::DirectlyFixed:
            case Scenario::DirectPseudoAnosov:
                boundary_ = "d";
                nodes_[0].circles.push_back("d");
                break;
            case Scenario::Closed: break;
        }
        return finish();
    }

private:
    struct Node {
        Id id;
        PieceKind kind;
        int genus = -1;
        int period = 0;
        Id orbit;
        std::vector<Id> circles;
    };

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double coin_value() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    bool coin(double p) { return coin_value() < p; }
    PieceKind pick(std::initializer_list<PieceKind> ks) {
        std::vector<PieceKind> v(ks);
        return v[uniform(0, static_cast<int>(v.size()) - 1)];
    }

    int add_node(PieceKind k) {
        Node n;
        n.id = "P" + std::to_string(nodes_.size());
        n.kind = k;
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }
    Id new_circle() { return "c" + std::to_string(circle_count_++); }

    void direct(int a, int b) {
        Id c = new_circle();
        nodes_[a].circles.push_back(c);
        nodes_[b].circles.push_back(c);
    }

    Rational random_fraction(int sign) {
        int den = uniform(2, 12);
        int num = uniform(1, den - 1);
        return Rational(sign * num, den);
    }

    // Twist chain from circle-owner end `a_circle` (already attached on its side)
    // to node `b`. `a_rotates` allows a partial twist at the a end.
    void chain(const Id& a_circle, bool a_needs_partial, bool a_may_partial, int b, int sign) {
        PieceKind bk = nodes_[b].kind;
        bool b_needs = bk == PieceKind::Periodic;
        bool b_may = bk == PieceKind::Periodic || bk == PieceKind::PseudoAnosov;
        bool pa = a_needs_partial || (a_may_partial && coin(0.5));
        bool pb = b_needs || (b_may && coin(0.5));
        int t = uniform(1, 3);
        Id cur = a_circle;
        for (int i = 0; i < t; ++i) {
            bool partial = (t == 1) ? (pa || pb) : ((i == 0 && pa) || (i == t - 1 && pb));
            Id next = new_circle();
            Id id = "t" + std::to_string(annuli_.size());
            if (partial)
                annuli_.push_back({id, {cur, next}, AnnulusKind::TwistPartial, sign, random_fraction(sign)});
            else
                annuli_.push_back({id, {cur, next}, AnnulusKind::TwistFull, sign, Rational(0)});
            cur = next;
            if (i + 1 < t) {
                Id after = new_circle();
                Id fa = "A" + std::to_string(fixed_annuli_++);
                extra_pieces_.push_back({fa, 0, {cur, after}, PieceKind::Fixed, 0, {}, {}, {}, {}, {}});
                annuli_.push_back({fa, {cur, after}, AnnulusKind::FixedAnnulus, 0, Rational(0)});
                cur = after;
            }
        }
        nodes_[b].circles.push_back(cur);
    }

    void chain_from(const Id& boundary_circle, int b, int sign) {
        chain(boundary_circle, false, false, b, sign);
    }

    void connect(int a, int b) {
        PieceKind ak = nodes_[a].kind, bk = nodes_[b].kind;
        bool a_fixed = ak == PieceKind::Fixed, b_fixed = bk == PieceKind::Fixed;
        bool can_direct = !(a_fixed && b_fixed) && !(a_fixed && bk == PieceKind::Periodic) &&
                          !(b_fixed && ak == PieceKind::Periodic);
        if (can_direct && coin(0.4)) {
            direct(a, b);
            return;
        }
        Id c = new_circle();
        nodes_[a].circles.push_back(c);
        bool a_needs = ak == PieceKind::Periodic;
        bool a_may = a_needs || ak == PieceKind::PseudoAnosov;
        chain(c, a_needs, a_may, b, coin(0.5) ? 1 : -1);
    }

    StandardFormMap finish() {
        std::vector<Piece> pieces;
        for (auto& node : nodes_) {
            int b = static_cast<int>(node.circles.size());
            int g = node.genus;
            if (g < 0) {
                int lo = (b <= 2) ? 1 : 0;
                g = uniform(lo, o_.max_genus);
            }
            Piece p;
            p.id = node.id;
            p.genus = g;
            p.boundary = node.circles;
            p.kind = node.kind;
            switch (node.kind) {
                case PieceKind::Fixed: break;
                case PieceKind::Periodic:
                    p.period = uniform(2, 12);
                    if (coin(0.5)) p.lefschetz = uniform(0, 4);
                    break;
                case PieceKind::PseudoAnosov:
                    for (const auto& c : node.circles) p.prongs[c] = uniform(1, o_.max_prongs);
                    if (coin(0.5)) p.pa_fixed_count = uniform(0, 6);
                    break;
                case PieceKind::Permuted:
                    p.period = node.period;
                    p.orbit = node.orbit;
                    break;
            }
            pieces.push_back(std::move(p));
        }
        for (auto& p : extra_pieces_) pieces.push_back(p);
        std::vector<Circle> circles;
        for (int i = 0; i < circle_count_; ++i) circles.push_back({"c" + std::to_string(i), false});
        if (!boundary_.empty()) circles.push_back({boundary_, true});
        int chi = 0;
        for (const auto& p : pieces) chi += p.euler_characteristic();
        int nb = boundary_.empty() ? 0 : 1;
        int genus = (2 - chi - nb) / 2;
        if (o_.closed && genus < 2) {
            pieces[0].genus += 2 - genus;
            genus = 2;
        }
        return StandardFormMap(std::move(circles), std::move(pieces), annuli_, {genus, nb});
    }

    std::mt19937_64& rng_;
    RandomMapOptions o_;
    std::vector<Node> nodes_;
    std::vector<Annulus> annuli_;
    std::vector<Piece> extra_pieces_;
    Id boundary_;
    int circle_count_ = 0;
    int orbit_count_ = 0;
    int fixed_annuli_ = 0;
};

}  // namespace

StandardFormMap random_standard_form(std::mt19937_64& rng, const RandomMapOptions& opts) {
    while (true) {
        StandardFormMap m = Generator(rng, opts).make();
        if (!opts.closed && is_identity(m)) continue;
        return m;
    }
}

Bindings random_bindings(const StandardFormMap& m, std::mt19937_64& rng) {
    Bindings out;
    std::uniform_int_distribution<std::int64_t> d(0, 6);
    for (const auto& [id, p] : m.pieces()) {
        if (p.kind == PieceKind::Periodic && !p.lefschetz) out[id] = d(rng);
        if (p.kind == PieceKind::PseudoAnosov && !p.pa_fixed_count) out[id] = d(rng);
    }
    return out;
}

}  // namespace veerkit
