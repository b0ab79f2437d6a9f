#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veerkit/gf2.hpp"
#include "veerkit/surface_map.hpp"

namespace veerkit {

// Spin^c labels: '#'-joined sorted atoms, unit = "". Conjugation toggles a trailing '*'.
using SpincLabel = std::string;
SpincLabel spinc_tensor(const SpincLabel& a, const SpincLabel& b);
SpincLabel spinc_conjugate(const SpincLabel& a);

struct CfkGenerator {
    Id id;
    int alexander = 0;
    std::optional<int> maslov;
    SpincLabel spinc;
    bool operator==(const CfkGenerator&) const = default;
};

// d_{mn} component: [from, i, j] -> [to, i - m, j - n].
struct Arrow {
    Id from;
    Id to;
    int m = 0;
    int n = 0;
    auto operator<=>(const Arrow&) const = default;
};

struct ReducedCFK {
    std::vector<CfkGenerator> generators;
    std::vector<Arrow> arrows;
    std::optional<int> truncation_floor;
    std::optional<int> fibered_genus;
    std::optional<SpincLabel> fibration_spinc;

    std::map<Id, std::size_t> index() const;
    bool has_maslov() const;  // every generator carries a Maslov grading
    int max_alexander() const;
    int min_alexander() const;
};

ValidationReport validate_cfk(const ReducedCFK& c);
void require_valid_cfk(const ReducedCFK& c);

ReducedCFK mirror(const ReducedCFK& c);
ReducedCFK tensor(const ReducedCFK& a, const ReducedCFK& b);

std::map<std::pair<int, SpincLabel>, int> hfk_dims(const ReducedCFK& c);
std::map<int, int> hfk_dims_by_alexander(const ReducedCFK& c);

enum class Slice { I, J };  // i = k (filtered by j) or j = k (filtered by i)

struct FilteredFlattening {
    Slice slice = Slice::I;
    int k = 0;
    std::vector<Id> ids;
    std::vector<int> level;                // filtration level per generator
    std::vector<gf2::BitVector> d;         // d[j] = image of generator j
};

FilteredFlattening flatten(const ReducedCFK& c, Slice slice, int k);

struct Page {
    int r = 1;
    std::map<int, int> dims;             // filtration level -> dim E_r
    std::map<int, int> rank_from_level;  // level p -> rank of d_r out of E_r^p
    int rank = 0;                        // total rank of d_r
    int total() const;
};

struct SpectralSequence {
    std::vector<Page> pages;  // pages[0] is E_1; the last page is E_infinity
    int total_homology = 0;   // dim H_* of the flattening, computed directly
    const Page& e_infinity() const { return pages.back(); }
    // First page r with E_r = E_infinity.
    int collapse_page() const;
};

SpectralSequence spectral_sequence(const FilteredFlattening& f);
int homology_dim(const FilteredFlattening& f);

int tau(const ReducedCFK& c);
// Alexander grading of the surviving E_infinity class (second route).
int tau_from_pages(const ReducedCFK& c);

// nullopt encodes infinity.
using BValue = std::optional<int>;
BValue b_invariant(const ReducedCFK& c);
// Whether d_1 from the top Alexander grading of c's own i=0 flattening is nonzero.
bool top_d1_nonzero(const ReducedCFK& c);
std::string to_string(const BValue& b);

bool is_thin(const ReducedCFK& c);
int genus(const ReducedCFK& c);

// Isomorphism of reduced models: a grading- and spinc-preserving bijection of
// generators carrying arrows to arrows with the same (m, n).
bool isomorphic(const ReducedCFK& a, const ReducedCFK& b);

}  // namespace veerkit
