#include "veerkit/twist_calculus.hpp"

#include "veerkit/errors.hpp"

namespace veerkit {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::RightVeering: return "right-veering";
        case Verdict::LeftVeering: return "left-veering";
        case Verdict::Neither: return "neither";
        case Verdict::Identity: return "identity";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::RightVeering, Verdict::LeftVeering, Verdict::Neither,
                   Verdict::Identity, Verdict::Unknown})
        if (s == to_string(v)) return v;
    throw InputError("unknown verdict: " + s);
}

Verdict flip(Verdict v) {
    if (v == Verdict::RightVeering) return Verdict::LeftVeering;
    if (v == Verdict::LeftVeering) return Verdict::RightVeering;
    return v;
}

Rational fdtc(const StandardFormMap& m, const Id& b) {
    require_valid(m);
    auto stub = boundary_stub(m, b);
    if (std::holds_alternative<NonTrivialBoundary>(stub))
        throw DomainError("map not identity on boundary");
    if (auto* s = std::get_if<MultitwistStub>(&stub)) return s->value();
    return Rational(0);
}

bool fdtc_axioms_check(const StandardFormMap& m, const Id& b, std::int64_t n) {
    if (n < 1) throw DomainError("power must be positive");
    Rational c = fdtc(m, b);
    if (fdtc(inverse(m), b) != -c) return false;
    auto stub = boundary_stub(m, b);
    Rational powered(0);
    if (auto* s = std::get_if<MultitwistStub>(&stub)) powered = s->power(n).value();
    return powered == Rational(n) * c;
}

bool right_veering_at(const StandardFormMap& m, const Id& b) {
    auto stub = boundary_stub(m, b);
    if (auto* s = std::get_if<MultitwistStub>(&stub))
        return s->epsilon > 0 && (s->k > 0 || s->r != Rational(0));
    if (auto* f = std::get_if<DirectlyFixed>(&stub)) {
        const Piece& s0 = *m.piece(f->piece);
        bool any_other = false;
        for (const auto& c : s0.boundary) {
            if (c == b) continue;
            any_other = true;
            auto other = m.across(c, {Side::Type::Piece, s0.id});
            if (!other || other->type != Side::Type::Annulus) return false;
            const Annulus& a = *m.annulus(other->id);
            if (!a.is_twist() || a.sign < 0) return false;
        }
        return any_other;
    }
    return false;
}

Verdict veering(const StandardFormMap& m) {
    require_valid(m);
    if (is_identity(m)) return Verdict::Identity;
    if (m.surface_boundary().size() != 1)
        throw DomainError("unsupported: veering is implemented for exactly one boundary circle");
    const Id& b = m.surface_boundary().front();
    if (std::holds_alternative<NonTrivialBoundary>(boundary_stub(m, b)))
        throw DomainError("map not identity on boundary");
    if (right_veering_at(m, b)) return Verdict::RightVeering;
    if (right_veering_at(inverse(m), b)) return Verdict::LeftVeering;
    return Verdict::Neither;
}

}  // namespace veerkit
