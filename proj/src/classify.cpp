#include "veerkit/classify.hpp"

#include <cstdlib>

#include "veerkit/errors.hpp"

namespace veerkit {

const char* to_string(SurgeryConstraint s) {
    switch (s) {
        case SurgeryConstraint::None: return "none";
        case SurgeryConstraint::NonnegativeInterval: return "[0,4g]";
        case SurgeryConstraint::NonpositiveInterval: return "[-4g,0]";
        case SurgeryConstraint::QBound2: return "|q|<=2";
    }
    return "?";
}

bool s3_like(const ReducedCFK& c) {
    if (c.truncation_floor || !c.has_maslov()) return false;
    for (const auto& g : c.generators)
        if (!g.spinc.empty()) return false;
    auto f = flatten(c, Slice::I, 0);
    if (homology_dim(f) != 1) return false;
    // The flattened differential lowers Maslov grading by one, so homology splits by it.
    std::map<int, std::vector<std::size_t>> by_m;
    for (std::size_t j = 0; j < c.generators.size(); ++j) by_m[*c.generators[j].maslov].push_back(j);
    auto rank_from = [&](int m) {
        std::vector<gf2::BitVector> cols;
        if (by_m.count(m))
            for (std::size_t j : by_m.at(m)) cols.push_back(f.d[j]);
        return static_cast<int>(gf2::rank(cols));
    };
    int at0 = by_m.count(0) ? static_cast<int>(by_m.at(0).size()) : 0;
    return at0 - rank_from(0) - rank_from(1) == 1;
}

Classification classify_fibered(const ReducedCFK& c) {
    require_valid_cfk(c);
    if (!c.fibered_genus) throw DomainError("fibered genus unset");
    Classification out;
    out.genus = genus(c);
    out.b = b_invariant(c);
    out.b_mirror = b_invariant(mirror(c));
    bool right = !out.b || *out.b > 1;
    bool left = !out.b_mirror || *out.b_mirror > 1;
    if (right && left) {
        out.monodromy_verdict = Verdict::Identity;
        out.inconsistent = out.genus != 0;
    } else if (right) {
        out.monodromy_verdict = Verdict::RightVeering;
    } else if (left) {
        out.monodromy_verdict = Verdict::LeftVeering;
    } else {
        out.monodromy_verdict = Verdict::Neither;
    }
    if (s3_like(c)) {
        out.tau = tau(c);
        out.thin = is_thin(c);
        const int g = out.genus, t = *out.tau;
        if (*out.thin && std::abs(t) < g && g >= 1) out.persistently_foliar = true;
        if (t == g && g >= 1)
            out.surgery_constraint = SurgeryConstraint::NonnegativeInterval;
        else if (t == -g && g >= 1)
            out.surgery_constraint = SurgeryConstraint::NonpositiveInterval;
        else if (std::abs(t) < g && *out.thin)
            out.surgery_constraint = SurgeryConstraint::QBound2;
    }
    return out;
}

AuditReport consistency_audit(const ReducedCFK& c, const std::optional<StandardFormMap>& h) {
    AuditReport r;
    r.classification = classify_fibered(c);
    if (!h) return r;
    r.standard_form = veering(*h);
    r.symplectic = rv_via_symplectic(*h, 1);
    r.agree = r.classification.monodromy_verdict == *r.standard_form &&
              r.classification.monodromy_verdict == r.symplectic->verdict;
    return r;
}

}  // namespace veerkit
