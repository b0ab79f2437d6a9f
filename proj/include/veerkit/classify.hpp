#pragma once

#include <optional>
#include <string>

#include "veerkit/cable_glue.hpp"
#include "veerkit/cfk.hpp"
#include "veerkit/twist_calculus.hpp"

namespace veerkit {

enum class SurgeryConstraint { None, NonnegativeInterval, NonpositiveInterval, QBound2 };
// "none", "[0,4g]", "[-4g,0]", "|q|<=2"
const char* to_string(SurgeryConstraint s);

struct Classification {
    BValue b;
    BValue b_mirror;
    std::optional<int> tau;
    int genus = 0;
    std::optional<bool> thin;
    Verdict monodromy_verdict = Verdict::Unknown;
    bool inconsistent = false;  // right- and left-veering at once on a nontrivial knot
    std::optional<bool> persistently_foliar;
    SurgeryConstraint surgery_constraint = SurgeryConstraint::None;
};

// Unit spin^c labels, Maslov gradings present, and one-dimensional homology of the
// i = 0 flattening sitting in Maslov grading 0.
bool s3_like(const ReducedCFK& c);

Classification classify_fibered(const ReducedCFK& c);

struct AuditReport {
    Classification classification;
    std::optional<Verdict> standard_form;  // veering(h)
    std::optional<SymplecticVerdict> symplectic;
    bool agree = true;
};

AuditReport consistency_audit(const ReducedCFK& c, const std::optional<StandardFormMap>& h);

}  // namespace veerkit
