#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace veerkit {

using Id = std::string;
using Rational = boost::rational<std::int64_t>;

enum class PieceKind { Fixed, Periodic, PseudoAnosov, Permuted };
enum class AnnulusKind { TwistFull, TwistPartial, FlipTwist, FixedAnnulus };

struct Circle {
    Id id;
    bool is_surface_boundary = false;
    bool operator==(const Circle&) const = default;
};

struct Piece {
    Id id;
    int genus = 0;
    std::vector<Id> boundary;
    PieceKind kind = PieceKind::Fixed;
    int period = 0;                              // Periodic, Permuted (orbit size)
    std::optional<std::int64_t> lefschetz;       // Periodic; nullopt = opaque
    std::optional<std::int64_t> pa_fixed_count;  // PseudoAnosov; nullopt = opaque
    std::map<Id, int> prongs;                    // PseudoAnosov: circle -> prong count
    std::map<Id, Rational> rotation;             // PseudoAnosov: boundary rotation in [0,1), default 0
    Id orbit;                                    // Permuted

    int boundary_count() const { return static_cast<int>(boundary.size()); }
    int euler_characteristic() const { return 2 - 2 * genus - boundary_count(); }
    bool operator==(const Piece&) const = default;
};

struct Annulus {
    Id id;
    std::array<Id, 2> sides;
    AnnulusKind kind = AnnulusKind::TwistFull;
    int sign = 0;       // TwistFull, TwistPartial
    Rational fraction;  // TwistPartial, signed

    bool is_twist() const {
        return kind == AnnulusKind::TwistFull || kind == AnnulusKind::TwistPartial;
    }
    const Id& other_side(const Id& c) const { return sides[0] == c ? sides[1] : sides[0]; }
    bool operator==(const Annulus&) const = default;
};

struct SurfaceMeta {
    int genus = 0;
    int boundary_count = 0;
    bool operator==(const SurfaceMeta&) const = default;
};

// One side of a circle: a piece or a (non-fixed) annulus. Fixed annuli are
// reached through their Piece record, which is authoritative.
struct Side {
    enum class Type { Piece, Annulus } type;
    Id id;
    bool operator==(const Side&) const = default;
};

class StandardFormMap {
public:
    StandardFormMap() = default;
    // `declared_boundary` is the surface_boundary list as given; when absent it is
    // derived from the circle flags. A mismatch is reported by validate.
    StandardFormMap(std::vector<Circle> circles, std::vector<Piece> pieces,
                    std::vector<Annulus> annuli, SurfaceMeta meta,
                    std::optional<std::vector<Id>> declared_boundary = std::nullopt);

    const std::map<Id, Circle>& circles() const { return circles_; }
    const std::map<Id, Piece>& pieces() const { return pieces_; }
    const std::map<Id, Annulus>& annuli() const { return annuli_; }
    const std::vector<Id>& surface_boundary() const { return surface_boundary_; }
    const std::vector<Id>& declared_boundary() const { return declared_boundary_; }
    const SurfaceMeta& meta() const { return meta_; }

    const Piece* piece(const Id& id) const;
    const Annulus* annulus(const Id& id) const;
    const Circle* circle(const Id& id) const;

    // Sides incident to a circle (pieces once per occurrence in their boundary list,
    // non-fixed annuli once per side).
    const std::vector<Side>& incidence(const Id& circle) const;
    // The side across `circle` from `from`; nullopt at the surface boundary or on bad incidence.
    std::optional<Side> across(const Id& circle, const Side& from) const;

    bool closed() const { return surface_boundary_.empty(); }

    // Duplicate ids seen while building; reported by validate.
    const std::vector<Id>& duplicate_ids() const { return duplicates_; }

    bool operator==(const StandardFormMap& o) const;
    // True when `p` is a fixed annulus that also has an annular-stack record.
    bool is_stack_fixed_annulus(const Id& p) const;

private:
    std::map<Id, Circle> circles_;
    std::map<Id, Piece> pieces_;
    std::map<Id, Annulus> annuli_;
    std::vector<Id> surface_boundary_;
    std::vector<Id> declared_boundary_;
    SurfaceMeta meta_;
    std::map<Id, std::vector<Side>> incidence_;
    std::vector<Id> duplicates_;
};

struct Violation {
    std::string axiom;
    std::vector<Id> ids;
    std::string message;
};
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const StandardFormMap& m);
void require_valid(const StandardFormMap& m);  // throws DomainError listing violations

StandardFormMap inverse(const StandardFormMap& m);
bool is_identity(const StandardFormMap& m);

struct MultitwistStub {
    int epsilon = 1;
    std::int64_t k = 0;
    Rational r;
    std::vector<Id> annuli;      // twist annuli from the boundary inward
    std::optional<Id> end_piece; // non-annular piece where the stack ends, if any
    Rational value() const { return Rational(epsilon * k) + r; }
    // Stub whose twisting is n times this one, renormalized to (epsilon, k, r).
    MultitwistStub power(std::int64_t n) const;
    static MultitwistStub from_value(const Rational& v);
};
struct DirectlyFixed {
    Id piece;
};
struct NonTrivialBoundary {
    Id piece;
};
using BoundaryStub = std::variant<MultitwistStub, DirectlyFixed, NonTrivialBoundary>;

BoundaryStub boundary_stub(const StandardFormMap& m, const Id& b);

// Convenience builder; interior circles are created on first reference.
class MapBuilder {
public:
    MapBuilder& boundary(const Id& c);
    MapBuilder& fixed(const Id& id, int genus, std::vector<Id> circles);
    MapBuilder& periodic(const Id& id, int genus, std::vector<Id> circles, int period,
                         std::optional<std::int64_t> lefschetz = std::nullopt);
    MapBuilder& pseudo_anosov(const Id& id, int genus, std::map<Id, int> prongs,
                              std::optional<std::int64_t> fixed_count = std::nullopt);
    MapBuilder& permuted(const Id& id, int genus, std::vector<Id> circles, int period,
                         const Id& orbit);
    MapBuilder& twist(const Id& id, const Id& a, const Id& b, int sign);
    MapBuilder& partial(const Id& id, const Id& a, const Id& b, Rational fraction);
    MapBuilder& flip(const Id& id, const Id& a, const Id& b);
    // Fixed annulus: both the Piece and the annular-stack record.
    MapBuilder& fixed_annulus(const Id& id, const Id& a, const Id& b);
    MapBuilder& rotation(const Id& piece, const Id& circle, Rational r);
    MapBuilder& genus(int g);  // declared genus; default derived from Euler characteristic
    StandardFormMap build() const;

private:
    void touch(const Id& c);
    std::vector<Id> circle_order_;
    std::map<Id, bool> circles_;
    std::vector<Piece> pieces_;
    std::vector<Annulus> annuli_;
    std::optional<int> genus_;
};

const char* to_string(PieceKind k);
const char* to_string(AnnulusKind k);

}  // namespace veerkit
