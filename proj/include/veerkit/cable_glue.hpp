#pragma once

#include <cstdint>
#include <random>

#include "veerkit/floer_symp.hpp"
#include "veerkit/surface_map.hpp"
#include "veerkit/twist_calculus.hpp"

namespace veerkit {

// Standard form of the cable monodromy g+ or g- on F, with one boundary circle.
struct CableBoundaryModel {
    int n = 1;
    int side = 1;
    int l_genus = 1;
    MultitwistStub stub;
    StandardFormMap map;  // F itself; its pieces are prefixed "F."
    Id boundary;          // the circle dF
};

CableBoundaryModel build_cable_boundary_model(int n, int side, int l_genus = 1);

// Closed map h u g on S u F, glued along the boundary circles.
StandardFormMap glue(const StandardFormMap& h, const CableBoundaryModel& g);

struct SymplecticVerdict {
    std::int64_t difference = 0;
    Verdict verdict = Verdict::Neither;
};
SymplecticVerdict rv_via_symplectic(const StandardFormMap& h, int n);

struct RandomMapOptions {
    bool closed = false;
    int max_pieces = 6;
    int max_genus = 3;
    int max_prongs = 4;
};

// Seeded generator of valid standard forms. Single-boundary maps are never the identity.
StandardFormMap random_standard_form(std::mt19937_64& rng, const RandomMapOptions& opts = {});

// Random nonnegative values for every opaque piece of m.
Bindings random_bindings(const StandardFormMap& m, std::mt19937_64& rng);

}  // namespace veerkit
