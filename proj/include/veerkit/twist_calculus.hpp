#pragma once

#include "veerkit/surface_map.hpp"

namespace veerkit {

enum class Verdict { RightVeering, LeftVeering, Neither, Identity, Unknown };

const char* to_string(Verdict v);  // "right-veering", ...
Verdict verdict_from_string(const std::string& s);
Verdict flip(Verdict v);  // swap right and left

// Fractional Dehn twist coefficient at a surface-boundary circle.
Rational fdtc(const StandardFormMap& m, const Id& b);

// c(inverse) = -c and c(n-th power) = n*c, with the power taken on the stub.
bool fdtc_axioms_check(const StandardFormMap& m, const Id& b, std::int64_t n);

// Right-veering test from standard-form data at the single boundary circle.
Verdict veering(const StandardFormMap& m);

// True when the boundary behavior alone makes the map right-veering at b.
bool right_veering_at(const StandardFormMap& m, const Id& b);

}  // namespace veerkit
