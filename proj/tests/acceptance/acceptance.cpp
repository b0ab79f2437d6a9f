// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
// Usage: acceptance <path-to-veerkit-binary>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <string>

#include "support/oracles.hpp"
#include "veerkit/cable_glue.hpp"
#include "veerkit/classify.hpp"
#include "veerkit/corpus.hpp"
#include "veerkit/surgery.hpp"

using namespace veerkit;

namespace {

// Pinned budgets and sizes.
constexpr int kPropSympTrials = 500;
constexpr double kPropSympSeconds = 10.0;
constexpr int kInverseTrials = 200;
constexpr int kRandomComplexes = 200;
constexpr int kMaxGenerators = 50;
constexpr double kCornerSeconds = 1.0;
constexpr int kDeterminismTrials = 100;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void prop_symp() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240501);
    int bad = 0;
    for (int t = 0; t < kPropSympTrials; ++t) {
        auto h = random_standard_form(rng);
        if (is_identity(h) || h.surface_boundary().size() != 1) {
            ++bad;
            continue;
        }
        auto expected = veering(h);
        std::int64_t first = 0;
        for (int n = 1; n <= 3; ++n) {
            auto s = rv_via_symplectic(h, n);
            bool in_range = s.difference == -2 || s.difference == 0 || s.difference == 2;
            if (n == 1) first = s.difference;
            if (!in_range || s.verdict != expected || s.difference != first) {
                ++bad;
                break;
            }
        }
    }
    double secs = seconds_since(t0);
    report(1, "symplectic dichotomy", bad == 0 && secs < kPropSympSeconds,
           std::to_string(kPropSympTrials) + " maps, " + std::to_string(bad) + " failures, " +
               std::to_string(secs) + " s");
}

void cable_fdtc() {
    bool ok = true;
    for (int n = 1; n <= 5; ++n)
        for (int side : {1, -1}) {
            auto g = build_cable_boundary_model(n, side);
            ok = ok && fdtc(g.map, g.boundary) == Rational(side, 9 * n + 3);
        }
    report(2, "cable fdtc", ok, "n = 1..5, both sides, exact");
}

void cotton_clay() {
    auto id2 = MapBuilder().fixed("S", 2, {}).build();
    auto annulus = MapBuilder()
                       .fixed("A", 1, {"a"})
                       .twist("t1", "a", "b", 1)
                       .fixed_annulus("f", "b", "c")
                       .twist("t2", "c", "d", 1)
                       .fixed("B", 1, {"d"})
                       .build();
    auto mixed = MapBuilder()
                     .fixed("S0", 1, {"u", "v"})
                     .twist("tu", "u", "u2", 1)
                     .fixed("A", 1, {"u2"})
                     .twist("tv", "v", "v2", -1)
                     .fixed("B", 1, {"v2"})
                     .build();
    auto a = hf_symp_dim(id2).concrete;
    auto b = hf_symp_dim(annulus).per_region.at("f").value;
    auto c = hf_symp_dim(mixed).per_region.at("S0").value;
    bool ok = a == 6 && b == 2 && c == surface_homology_dim(1, 2) - 2;
    report(3, "fixed-point formula sanity", ok,
           "identity " + std::to_string(a) + ", positive annulus " + std::to_string(b) +
               ", mixed piece " + std::to_string(c));
}

void inverse_invariance() {
    std::mt19937_64 rng(77);
    RandomMapOptions opts;
    opts.closed = true;
    int bad = 0;
    for (int t = 0; t < kInverseTrials; ++t) {
        auto m = random_standard_form(rng, opts);
        auto bind = random_bindings(m, rng);
        auto d = hf_symp_dim(m, bind), di = hf_symp_dim(inverse(m), bind);
        if (!d.opaque.empty() || d.concrete != di.concrete) ++bad;
    }
    report(4, "inverse invariance", bad == 0,
           std::to_string(kInverseTrials) + " closed maps, " + std::to_string(bad) + " failures");
}

bool engine_checks(const ReducedCFK& c, bool thin) {
    if (!validate_cfk(c).empty() || !oracle::d_squared_zero(c)) return false;
    auto m = mirror(c);
    if (!validate_cfk(m).empty() || !isomorphic(mirror(m), c)) return false;
    auto dims = hfk_dims(c), mdims = hfk_dims(m);
    for (const auto& [key, d] : dims)
        if (mdims[{-key.first, spinc_conjugate(key.second)}] != d) return false;
    for (auto slice : {Slice::I, Slice::J}) {
        auto ss = spectral_sequence(flatten(c, slice, 0));
        int rank_sum = 0;
        for (const auto& p : ss.pages) rank_sum += p.rank;
        if (ss.pages.front().total() - 2 * rank_sum != ss.e_infinity().total()) return false;
        if (ss.e_infinity().total() != ss.total_homology) return false;
        if (thin && ss.collapse_page() > 2) return false;
    }
    return true;
}

void cfk_engine(const std::vector<CorpusEntry>& entries) {
    int bad = 0, total = 0;
    for (const auto& e : entries) {
        if (e.name == "negative_control") continue;
        auto c = io::cfk_from_json(io::load(e.complex));
        ++total;
        if (!engine_checks(c, is_thin(c))) ++bad;
    }
    std::mt19937_64 rng(99);
    for (int t = 0; t < kRandomComplexes; ++t) {
        bool thin = t % 2 == 0;
        auto c = fixtures::random_complex(rng, kMaxGenerators, thin);
        ++total;
        if (static_cast<int>(c.generators.size()) > kMaxGenerators || !engine_checks(c, thin)) ++bad;
    }
    report(5, "knot complex engine", bad == 0,
           std::to_string(total) + " complexes, " + std::to_string(bad) + " failures");
}

ReducedCFK load_named(const std::vector<CorpusEntry>& entries, const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return io::cfk_from_json(io::load(e.complex));
    throw std::runtime_error("corpus entry missing: " + name);
}

void corpus_invariants(const std::vector<CorpusEntry>& entries) {
    auto rt = load_named(entries, "right_trefoil");
    auto lt = load_named(entries, "left_trefoil");
    auto f8 = load_named(entries, "figure8");
    auto routes_agree = [](const ReducedCFK& c) {
        return tau(c) == tau_from_pages(c) && (b_invariant(c) == 1) == top_d1_nonzero(c) &&
               b_invariant(c) == oracle::b_value(c);
    };
    bool ok = tau(rt) == 1 && !b_invariant(rt).has_value() && tau(lt) == -1 && b_invariant(lt) == 1 &&
              tau(f8) == 0 && b_invariant(f8) == 1 && b_invariant(mirror(f8)) == 1 && is_thin(f8) &&
              routes_agree(rt) && routes_agree(lt) && routes_agree(f8);
    report(6, "corpus invariants", ok,
           "RT tau " + std::to_string(tau(rt)) + " b " + to_string(b_invariant(rt)) + "; LT tau " +
               std::to_string(tau(lt)) + " b " + to_string(b_invariant(lt)) + "; fig8 tau " +
               std::to_string(tau(f8)) + " b " + to_string(b_invariant(f8)) + " b_mirror " +
               to_string(b_invariant(mirror(f8))));
}

void figure_eight_corner(const std::vector<CorpusEntry>& entries) {
    auto f8 = load_named(entries, "figure8");
    auto t0 = std::chrono::steady_clock::now();
    const int expected = hfk_dims_by_alexander(f8).at(0) - 1;
    bool ok = expected == 2;
    std::string dims;
    for (int n = 1; n <= 3; ++n) {
        std::array<int, 2> per_side{};
        for (int s = 0; s < 2; ++s) {
            const int side = s == 0 ? 1 : -1;
            auto l = synthetic_l_model(n, side);
            auto h = zero_surgery_top_minus_one(build_J(f8, n, side));
            per_side[s] = h.total;
            int on_label = 0;
            for (const auto& [label, d] : h.per_spinc)
                if (label == *l.complex.fibration_spinc) on_label += d;
            ok = ok && h.total == expected && on_label == h.total;
            dims += std::to_string(h.total) + " ";
        }
        ok = ok && per_side[0] == per_side[1];
    }
    double secs = seconds_since(t0);
    ok = ok && secs < kCornerSeconds;
    report(7, "figure-eight next-to-top corner", ok,
           "dims " + dims + "expected " + std::to_string(expected) + ", " + std::to_string(secs) + " s");
}

void triangulation(const std::vector<CorpusEntry>& entries) {
    bool ok = true;
    int pairs = 0;
    bool control_seen = false;
    for (const auto& e : entries) {
        if (!e.monodromy) continue;
        ++pairs;
        auto c = io::cfk_from_json(io::load(e.complex));
        auto h = io::map_from_json(io::load(*e.monodromy));
        auto audit = consistency_audit(c, h);
        if (e.name == "negative_control") {
            control_seen = true;
            ok = ok && !audit.agree;
        } else {
            ok = ok && audit.agree && audit.standard_form == audit.classification.monodromy_verdict &&
                 audit.symplectic->verdict == audit.classification.monodromy_verdict;
        }
        ok = ok && check_entry(e).ok;
    }
    ok = ok && control_seen;
    report(8, "verdict triangulation", ok,
           std::to_string(pairs) + " paired entries, negative control " +
               (control_seen ? "reported as disagreement" : "missing"));
}

std::string capture(const std::string& cmd) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

void determinism(const std::string& binary) {
    const std::string cmd = "\"" + binary + "\" verify prop-symp --trials " +
                            std::to_string(kDeterminismTrials) + " --seed 7";
    auto a = capture(cmd), b = capture(cmd);
    bool ok = !a.empty() && a == b && a.find("\"failures\": 0") != std::string::npos;
    report(9, "determinism", ok, std::to_string(a.size()) + " bytes, identical " + (a == b ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <veerkit-binary>\n";
        return 2;
    }
    auto entries = load_corpus(default_corpus_dir());
    prop_symp();
    cable_fdtc();
    cotton_clay();
    inverse_invariance();
    cfk_engine(entries);
    corpus_invariants(entries);
    figure_eight_corner(entries);
    triangulation(entries);
    determinism(argv[1]);
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
