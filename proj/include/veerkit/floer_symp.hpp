#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "veerkit/surface_map.hpp"

namespace veerkit {

struct Partition {
    std::set<Id> sigma_a;
    std::map<Id, int> sigma_b;  // piece -> prongs at its unique pA-meeting circle
    std::map<Id, int> sigma_c;  // piece -> total prongs over pA-meeting circles
    std::set<Id> sigma_1;       // periodic and permuted pieces
    std::set<Id> sigma_2;       // pA pieces
    int flip_count = 0;
};

enum class BoundarySign { Positive, Negative };
using SignAssignment = std::map<std::pair<Id, Id>, BoundarySign>;  // (piece, circle)

struct RegionTerm {
    std::string klass;  // "a", "b", "c", "flip", "periodic", "permuted", "pa"
    std::int64_t value = 0;
    std::string token;  // set when the contribution is opaque
};

struct DimBreakdown {
    std::int64_t concrete = 0;
    std::map<std::string, int> opaque;  // token multiset
    std::map<Id, RegionTerm> per_region;
};

// Values substituted for opaque Lefschetz / fixed-point counts, keyed by piece id.
using Bindings = std::map<Id, std::int64_t>;

// Betti sum of a compact surface of genus g with b boundary circles.
int surface_homology_dim(int genus, int boundary);
// dim H_*(S, d_-S) where `negative` of the `boundary` circles lie in d_-S.
int relative_homology_dim(int genus, int boundary, int negative);

Partition partition(const StandardFormMap& m);
SignAssignment boundary_signs(const StandardFormMap& m, const Partition& p);
// True if `s` meets the sign constraints for every fixed piece.
bool admissible(const StandardFormMap& m, const Partition& p, const SignAssignment& s);

DimBreakdown hf_symp_dim(const StandardFormMap& m, const Bindings& bindings = {});
DimBreakdown hf_symp_dim(const StandardFormMap& m, const Partition& p, const SignAssignment& s,
                         const Bindings& bindings = {});

std::int64_t dim_difference(const DimBreakdown& a, const DimBreakdown& b);

}  // namespace veerkit
