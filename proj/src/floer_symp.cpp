#include "veerkit/floer_symp.hpp"

#include "veerkit/errors.hpp"

namespace veerkit {

int surface_homology_dim(int genus, int boundary) {
    return boundary > 0 ? 2 * genus + boundary : 2 * genus + 2;
}

int relative_homology_dim(int genus, int boundary, int negative) {
    int h = surface_homology_dim(genus, boundary);
    return (negative == 0 || negative == boundary) ? h : h - 2;
}

namespace {

const Piece* neighbor_piece(const StandardFormMap& m, const Piece& p, const Id& c) {
    auto s = m.across(c, {Side::Type::Piece, p.id});
    if (!s || s->type != Side::Type::Piece) return nullptr;
    return m.piece(s->id);
}

const Annulus* neighbor_twist(const StandardFormMap& m, const Piece& p, const Id& c) {
    auto s = m.across(c, {Side::Type::Piece, p.id});
    if (!s || s->type != Side::Type::Annulus) return nullptr;
    const Annulus* a = m.annulus(s->id);
    return a && a->is_twist() ? a : nullptr;
}

}  // namespace

Partition partition(const StandardFormMap& m) {
    require_valid(m);
    if (!m.closed()) throw DomainError("symplectic Floer formula needs a closed surface");
    if (m.meta().genus < 2) throw DomainError("symplectic Floer formula needs genus >= 2");
    Partition out;
    for (const auto& [id, p] : m.pieces()) {
        switch (p.kind) {
            case PieceKind::Periodic:
            case PieceKind::Permuted: out.sigma_1.insert(id); continue;
            case PieceKind::PseudoAnosov: out.sigma_2.insert(id); continue;
            case PieceKind::Fixed: break;
        }
        int meetings = 0, prongs = 0;
        for (const auto& c : p.boundary) {
            const Piece* q = neighbor_piece(m, p, c);
            if (!q) continue;
            if (q->kind == PieceKind::Periodic)
                throw DomainError("structural violation: fixed piece " + id +
                                  " abuts periodic piece " + q->id);
            if (q->kind == PieceKind::PseudoAnosov) {
                ++meetings;
                prongs += q->prongs.at(c);
            }
        }
        if (meetings == 0)
            out.sigma_a.insert(id);
        else if (meetings == 1)
            out.sigma_b[id] = prongs;
        else
            out.sigma_c[id] = prongs;
    }
    for (const auto& [_, a] : m.annuli())
        if (a.kind == AnnulusKind::FlipTwist) ++out.flip_count;
    return out;
}

SignAssignment boundary_signs(const StandardFormMap& m, const Partition& part) {
    SignAssignment out;
    auto assign_piece = [&](const Piece& p, bool is_c) {
        std::vector<Id> pa_circles, free_circles;
        bool have_positive = false;
        for (const auto& c : p.boundary) {
            if (const Annulus* a = neighbor_twist(m, p, c)) {
                auto s = a->sign > 0 ? BoundarySign::Positive : BoundarySign::Negative;
                out[{p.id, c}] = s;
                have_positive = have_positive || s == BoundarySign::Positive;
                continue;
            }
            const Piece* q = neighbor_piece(m, p, c);
            if (q && q->kind == PieceKind::PseudoAnosov)
                pa_circles.push_back(c);
            else
                free_circles.push_back(c);
        }
        if (!pa_circles.empty()) {
            // boundary lists are sorted, so front() is the lexicographically least
            out[{p.id, pa_circles.front()}] = BoundarySign::Negative;
            for (std::size_t i = 1; i < pa_circles.size(); ++i) free_circles.push_back(pa_circles[i]);
        }
        if (is_c && !have_positive && free_circles.empty())
            throw DomainError("structural violation: piece " + p.id + " cannot take a positive circle");
        for (const auto& c : free_circles) out[{p.id, c}] = BoundarySign::Positive;
    };
    for (const auto& id : part.sigma_a) assign_piece(*m.piece(id), false);
    for (const auto& [id, _] : part.sigma_b) assign_piece(*m.piece(id), false);
    for (const auto& [id, _] : part.sigma_c) {
        const Piece& p = *m.piece(id);
        if (p.boundary_count() < 2)
            throw DomainError("structural violation: piece " + id + " has fewer than 2 circles");
        assign_piece(p, true);
    }
    return out;
}

bool admissible(const StandardFormMap& m, const Partition& part, const SignAssignment& s) {
    auto sign_of = [&](const Id& p, const Id& c) -> std::optional<BoundarySign> {
        auto it = s.find({p, c});
        if (it == s.end()) return std::nullopt;
        return it->second;
    };
    auto check_piece = [&](const Id& id, int mode) {
        const Piece& p = *m.piece(id);
        int pa_neg = 0, pos = 0;
        for (const auto& c : p.boundary) {
            auto sg = sign_of(id, c);
            if (!sg) return false;
            if (const Annulus* a = neighbor_twist(m, p, c)) {
                if ((a->sign > 0) != (*sg == BoundarySign::Positive)) return false;
            } else if (const Piece* q = neighbor_piece(m, p, c);
                       q && q->kind == PieceKind::PseudoAnosov) {
                if (mode == 1 && *sg != BoundarySign::Negative) return false;
                if (*sg == BoundarySign::Negative) ++pa_neg;
            }
            if (*sg == BoundarySign::Positive) ++pos;
        }
        if (mode == 2) return pa_neg >= 1 && pos >= 1;
        return true;
    };
    for (const auto& id : part.sigma_a)
        if (!check_piece(id, 0)) return false;
    for (const auto& [id, _] : part.sigma_b)
        if (!check_piece(id, 1)) return false;
    for (const auto& [id, _] : part.sigma_c)
        if (!check_piece(id, 2)) return false;
    return true;
}

DimBreakdown hf_symp_dim(const StandardFormMap& m, const Bindings& bindings) {
    Partition p = partition(m);
    return hf_symp_dim(m, p, boundary_signs(m, p), bindings);
}

DimBreakdown hf_symp_dim(const StandardFormMap& m, const Partition& part, const SignAssignment& s,
                         const Bindings& bindings) {
    for (const auto& [id, v] : bindings) {
        if (!m.piece(id)) throw DomainError("binding for unknown piece " + id);
        if (v < 0) throw DomainError("bound value for " + id + " must be nonnegative");
    }
    DimBreakdown out;
    auto negatives = [&](const Piece& p) {
        int n = 0;
        for (const auto& c : p.boundary)
            if (s.at({p.id, c}) == BoundarySign::Negative) ++n;
        return n;
    };
    auto put = [&](const Id& id, std::string klass, std::int64_t v) {
        out.concrete += v;
        out.per_region[id] = {std::move(klass), v, {}};
    };
    auto put_opaque = [&](const Id& id, std::string klass, std::string token) {
        out.opaque[token]++;
        out.per_region[id] = {std::move(klass), 0, std::move(token)};
    };
    for (const auto& id : part.sigma_a) {
        const Piece& p = *m.piece(id);
        put(id, "a", relative_homology_dim(p.genus, p.boundary_count(), negatives(p)));
    }
    for (const auto& [id, prongs] : part.sigma_b) {
        const Piece& p = *m.piece(id);
        // S minus an open disk: one more boundary circle, never negative
        int relh = relative_homology_dim(p.genus, p.boundary_count() + 1, negatives(p));
        put(id, "b", relh + (prongs - 1));
    }
    for (const auto& [id, prongs] : part.sigma_c) {
        const Piece& p = *m.piece(id);
        put(id, "c", relative_homology_dim(p.genus, p.boundary_count(), negatives(p)) + prongs);
    }
    for (const auto& id : part.sigma_1) {
        const Piece& p = *m.piece(id);
        auto b = bindings.find(id);
        if (b != bindings.end()) {
            put(id, p.kind == PieceKind::Periodic ? "periodic" : "permuted", b->second);
        } else if (p.lefschetz) {
            put(id, p.kind == PieceKind::Periodic ? "periodic" : "permuted", *p.lefschetz);
        } else if (p.kind == PieceKind::Permuted) {
            put(id, "permuted", 0);
        } else {
            put_opaque(id, "periodic", "lefschetz:" + id);
        }
    }
    for (const auto& id : part.sigma_2) {
        const Piece& p = *m.piece(id);
        auto b = bindings.find(id);
        if (b != bindings.end())
            put(id, "pa", b->second);
        else if (p.pa_fixed_count)
            put(id, "pa", *p.pa_fixed_count);
        else
            put_opaque(id, "pa", "fixed_points:" + id);
    }
    for (const auto& [id, a] : m.annuli())
        if (a.kind == AnnulusKind::FlipTwist) put(id, "flip", 2);
    return out;
}

std::int64_t dim_difference(const DimBreakdown& a, const DimBreakdown& b) {
    if (a.opaque != b.opaque) throw DomainError("difference not determined");
    return a.concrete - b.concrete;
}

}  // namespace veerkit
