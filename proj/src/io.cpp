#include "veerkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "veerkit/errors.hpp"

namespace veerkit::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing key \"" + key + "\"");
    return *it;
}

template <class T>
T get(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(where + "." + key + ": " + e.what());
    }
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(where + "." + key + ": " + e.what());
    }
}

// Integer or "opaque".
std::optional<std::int64_t> opaque_int(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (it->is_string()) {
        if (*it == "opaque") return std::nullopt;
        throw InputError(where + "." + key + ": expected an integer or \"opaque\"");
    }
    if (!it->is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
    return it->get<std::int64_t>();
}

Json opaque_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json("opaque"); }

PieceKind piece_kind(const std::string& s, const std::string& where) {
    for (auto k : {PieceKind::Fixed, PieceKind::Periodic, PieceKind::PseudoAnosov, PieceKind::Permuted})
        if (s == to_string(k)) return k;
    throw InputError(where + ": unknown piece kind \"" + s + "\"");
}

AnnulusKind annulus_kind(const std::string& s, const std::string& where) {
    for (auto k : {AnnulusKind::TwistFull, AnnulusKind::TwistPartial, AnnulusKind::FlipTwist,
                   AnnulusKind::FixedAnnulus})
        if (s == to_string(k)) return k;
    throw InputError(where + ": unknown annulus kind \"" + s + "\"");
}

}  // namespace

Json parse(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    auto num = get<std::int64_t>(j, "num", "rational");
    auto den = get<std::int64_t>(j, "den", "rational");
    if (den == 0) throw InputError("rational: zero denominator");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------

Json to_json(const StandardFormMap& m) {
    Json circles = Json::array();
    for (const auto& [id, c] : m.circles())
        circles.push_back({{"id", id}, {"surface_boundary", c.is_surface_boundary}});
    Json pieces = Json::array();
    for (const auto& [id, p] : m.pieces()) {
        Json o{{"id", id}, {"genus", p.genus}, {"boundary", p.boundary}, {"kind", to_string(p.kind)}};
        switch (p.kind) {
            case PieceKind::Fixed: break;
            case PieceKind::Periodic:
                o["period"] = p.period;
                o["lefschetz"] = opaque_json(p.lefschetz);
                break;
            case PieceKind::PseudoAnosov: {
                o["pa_fixed_count"] = opaque_json(p.pa_fixed_count);
                o["prongs"] = p.prongs;
                Json rot = Json::object();
                for (const auto& [c, r] : p.rotation)
                    if (r != Rational(0)) rot[c] = to_json(r);
                if (!rot.empty()) o["rotation"] = rot;
                break;
            }
            case PieceKind::Permuted:
                o["period"] = p.period;
                o["orbit"] = p.orbit;
                if (p.lefschetz) o["lefschetz"] = *p.lefschetz;
                break;
        }
        pieces.push_back(std::move(o));
    }
    Json annuli = Json::array();
    for (const auto& [id, a] : m.annuli()) {
        Json o{{"id", id}, {"sides", {a.sides[0], a.sides[1]}}, {"kind", to_string(a.kind)}};
        if (a.is_twist()) o["sign"] = a.sign;
        if (a.kind == AnnulusKind::TwistPartial) o["fraction"] = to_json(a.fraction);
        annuli.push_back(std::move(o));
    }
    std::vector<Id> boundary = m.declared_boundary();
    std::sort(boundary.begin(), boundary.end());
    return Json{{"circles", circles},
                {"pieces", pieces},
                {"annuli", annuli},
                {"surface_boundary", boundary},
                {"meta", {{"genus", m.meta().genus}, {"boundary_count", m.meta().boundary_count}}}};
}

StandardFormMap map_from_json(const Json& j) {
    const std::string w = "map";
    std::vector<Circle> circles;
    for (const auto& c : field(j, "circles", w)) {
        Circle x;
        x.id = get<Id>(c, "id", "circle");
        x.is_surface_boundary = get_opt<bool>(c, "surface_boundary", "circle").value_or(false);
        circles.push_back(std::move(x));
    }
    std::vector<Piece> pieces;
    for (const auto& p : field(j, "pieces", w)) {
        Piece x;
        x.id = get<Id>(p, "id", "piece");
        const std::string pw = "piece " + x.id;
        x.genus = get<int>(p, "genus", pw);
        x.boundary = get<std::vector<Id>>(p, "boundary", pw);
        x.kind = piece_kind(get<std::string>(p, "kind", pw), pw);
        x.period = get_opt<int>(p, "period", pw).value_or(0);
        x.lefschetz = opaque_int(p, "lefschetz", pw);
        x.pa_fixed_count = opaque_int(p, "pa_fixed_count", pw);
        x.prongs = get_opt<std::map<Id, int>>(p, "prongs", pw).value_or(std::map<Id, int>{});
        if (auto it = p.find("rotation"); it != p.end() && it->is_object())
            for (const auto& [c, r] : it->items()) x.rotation[c] = rational_from_json(r);
        x.orbit = get_opt<Id>(p, "orbit", pw).value_or("");
        pieces.push_back(std::move(x));
    }
    std::vector<Annulus> annuli;
    for (const auto& a : field(j, "annuli", w)) {
        Annulus x;
        x.id = get<Id>(a, "id", "annulus");
        const std::string aw = "annulus " + x.id;
        auto sides = get<std::vector<Id>>(a, "sides", aw);
        if (sides.size() != 2) throw InputError(aw + ": sides must list two circles");
        x.sides = {sides[0], sides[1]};
        x.kind = annulus_kind(get<std::string>(a, "kind", aw), aw);
        x.sign = get_opt<int>(a, "sign", aw).value_or(0);
        if (auto it = a.find("fraction"); it != a.end()) x.fraction = rational_from_json(*it);
        annuli.push_back(std::move(x));
    }
    SurfaceMeta meta;
    const Json& mj = field(j, "meta", w);
    meta.genus = get<int>(mj, "genus", "meta");
    meta.boundary_count = get<int>(mj, "boundary_count", "meta");
    std::optional<std::vector<Id>> declared;
    if (j.contains("surface_boundary"))
        declared = get<std::vector<Id>>(j, "surface_boundary", w);
    return StandardFormMap(std::move(circles), std::move(pieces), std::move(annuli), meta,
                           std::move(declared));
}

// ---------------------------------------------------------------------------

Json to_json(const ReducedCFK& c) {
    auto gens = c.generators;
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    Json g = Json::array();
    for (const auto& x : gens) {
        Json o{{"id", x.id}, {"A", x.alexander}, {"spinc", x.spinc}};
        if (x.maslov) o["M"] = *x.maslov;
        g.push_back(std::move(o));
    }
    auto arrows = c.arrows;
    std::sort(arrows.begin(), arrows.end());
    Json a = Json::array();
    for (const auto& e : arrows) a.push_back({{"from", e.from}, {"to", e.to}, {"m", e.m}, {"n", e.n}});
    Json out{{"generators", g}, {"arrows", a}};
    out["fibered_genus"] = c.fibered_genus ? Json(*c.fibered_genus) : Json(nullptr);
    out["truncation_floor"] = c.truncation_floor ? Json(*c.truncation_floor) : Json(nullptr);
    if (c.fibration_spinc) out["fibration_spinc"] = *c.fibration_spinc;
    return out;
}

ReducedCFK cfk_from_json(const Json& j) {
    const std::string w = "complex";
    ReducedCFK c;
    for (const auto& g : field(j, "generators", w)) {
        CfkGenerator x;
        x.id = get<Id>(g, "id", "generator");
        const std::string gw = "generator " + x.id;
        x.alexander = get<int>(g, "A", gw);
        x.maslov = get_opt<int>(g, "M", gw);
        x.spinc = get_opt<std::string>(g, "spinc", gw).value_or("");
        c.generators.push_back(std::move(x));
    }
    for (const auto& a : field(j, "arrows", w)) {
        Arrow x;
        x.from = get<Id>(a, "from", "arrow");
        x.to = get<Id>(a, "to", "arrow");
        x.m = get<int>(a, "m", "arrow");
        x.n = get<int>(a, "n", "arrow");
        c.arrows.push_back(std::move(x));
    }
    c.fibered_genus = get_opt<int>(j, "fibered_genus", w);
    c.truncation_floor = get_opt<int>(j, "truncation_floor", w);
    c.fibration_spinc = get_opt<std::string>(j, "fibration_spinc", w);
    return c;
}

// ---------------------------------------------------------------------------

Json to_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& x : r) v.push_back({{"axiom", x.axiom}, {"ids", x.ids}, {"message", x.message}});
    return Json{{"valid", r.empty()}, {"violations", v}};
}

Json to_json(const DimBreakdown& d) {
    Json regions = Json::object();
    for (const auto& [id, t] : d.per_region) {
        Json o{{"class", t.klass}, {"value", t.value}};
        if (!t.token.empty()) o["token"] = t.token;
        regions[id] = std::move(o);
    }
    return Json{{"concrete", d.concrete}, {"opaque", d.opaque}, {"per_region", regions}};
}

Json to_json(const BValue& b) { return b ? Json(*b) : Json("infinity"); }

Json to_json(const Classification& c) {
    Json out{{"b", to_json(c.b)},
             {"b_mirror", to_json(c.b_mirror)},
             {"genus", c.genus},
             {"monodromy_verdict", to_string(c.monodromy_verdict)},
             {"inconsistent", c.inconsistent},
             {"surgery_constraint", to_string(c.surgery_constraint)}};
    out["tau"] = c.tau ? Json(*c.tau) : Json(nullptr);
    out["thin"] = c.thin ? Json(*c.thin) : Json(nullptr);
    out["persistently_foliar"] = c.persistently_foliar ? Json(*c.persistently_foliar) : Json(nullptr);
    out["notes"] = {
        {"b", "g + first level of the mirror's i=0 filtration where the bottom generator bounds"},
        {"b_mirror", "b of the mirror complex"},
        {"monodromy_verdict", "right-veering iff b > 1; left-veering iff b_mirror > 1"},
        {"tau", c.tau ? "least Alexander level surjecting onto total homology" : "not S^3-like; not computed"},
        {"thin", c.thin ? "maslov - alexander constant" : "not S^3-like; not computed"},
        {"persistently_foliar", c.persistently_foliar ? "thin, |tau| < g, g >= 1" : "no claim"},
        {"surgery_constraint", "conditional on hyperbolicity"}};
    return out;
}

Json to_json(const CornerHomology& h) { return Json{{"dim", h.total}, {"per_spinc", h.per_spinc}}; }

Json to_json(const AuditReport& r) {
    Json out{{"classification", to_json(r.classification)}, {"agree", r.agree}};
    out["b_route"] = to_string(r.classification.monodromy_verdict);
    if (r.standard_form) out["standard_form_route"] = to_string(*r.standard_form);
    if (r.symplectic)
        out["symplectic_route"] = {{"difference", r.symplectic->difference},
                                   {"verdict", to_string(r.symplectic->verdict)}};
    return out;
}

}  // namespace veerkit::io
