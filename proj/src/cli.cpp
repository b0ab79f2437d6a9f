#include "veerkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "veerkit/cable_glue.hpp"
#include "veerkit/classify.hpp"
#include "veerkit/corpus.hpp"
#include "veerkit/errors.hpp"
#include "veerkit/io.hpp"
#include "veerkit/surgery.hpp"
#include "veerkit/twist_calculus.hpp"

namespace veerkit::cli {

namespace {

using io::Json;

struct Result {
    Json body;
    int code = 0;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("VEERKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("VEERKIT_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

StandardFormMap load_map(const std::string& path) { return io::map_from_json(io::load(path)); }
ReducedCFK load_cfk(const std::string& path) { return io::cfk_from_json(io::load(path)); }

int parse_side(const std::string& s) {
    if (s == "+" || s == "plus") return 1;
    if (s == "-" || s == "minus") return -1;
    throw InputError("side must be + or -");
}

Bindings parse_bindings(const std::vector<std::string>& items) {
    Bindings b;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--bind expects piece=value, got " + item);
        try {
            b[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("--bind value is not an integer: " + item);
        }
    }
    return b;
}

Result write_or_print(const Json& j, const std::string& out_path) {
    if (out_path.empty()) return {j};
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write " + out_path);
    f << io::dump(j);
    return {Json{{"written", out_path}}};
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object() && !v.empty())
                render_table(v, out, key);
            else if (v.is_array() && !v.empty() && v.front().is_object())
                for (std::size_t i = 0; i < v.size(); ++i)
                    render_table(v[i], out, key + "[" + std::to_string(i) + "]");
            else
                out << key << "\t" << scalar(v) << "\n";
        }
    } else {
        out << scalar(j) << "\n";
    }
}

// ---------------------------------------------------------------------------

Result verify_prop_symp(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    Json dumps = Json::array();
    for (int t = 0; t < trials; ++t) {
        auto h = random_standard_form(rng);
        std::string reason;
        try {
            Verdict expected = veering(h);
            std::optional<std::int64_t> first;
            for (int n = 1; n <= 3 && reason.empty(); ++n) {
                auto sv = rv_via_symplectic(h, n);
                if (sv.difference != 2 && sv.difference != 0 && sv.difference != -2)
                    reason = "difference " + std::to_string(sv.difference) + " outside {-2,0,2}";
                else if (sv.verdict != expected)
                    reason = std::string("symplectic verdict ") + to_string(sv.verdict) +
                             " != standard-form verdict " + to_string(expected);
                else if (first && *first != sv.difference)
                    reason = "difference depends on n";
                first = sv.difference;
            }
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (!reason.empty()) {
            ++failures;
            if (dumps.size() < 5) dumps.push_back({{"trial", t}, {"reason", reason}, {"map", io::to_json(h)}});
        }
    }
    Json body{{"trials", trials}, {"failures", failures}};
    if (failures) body["counterexamples"] = dumps;
    return {body, failures ? 1 : 0};
}

Result verify_inverse_symp(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RandomMapOptions opts;
    opts.closed = true;
    int failures = 0;
    Json dumps = Json::array();
    for (int t = 0; t < trials; ++t) {
        auto m = random_standard_form(rng, opts);
        auto b = random_bindings(m, rng);
        std::string reason;
        try {
            auto d = hf_symp_dim(m, b);
            auto di = hf_symp_dim(inverse(m), b);
            if (d.concrete != di.concrete || d.opaque != di.opaque)
                reason = "dimension " + std::to_string(d.concrete) + " != " + std::to_string(di.concrete);
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (!reason.empty()) {
            ++failures;
            if (dumps.size() < 5) dumps.push_back({{"trial", t}, {"reason", reason}, {"map", io::to_json(m)}});
        }
    }
    Json body{{"trials", trials}, {"failures", failures}};
    if (failures) body["counterexamples"] = dumps;
    return {body, failures ? 1 : 0};
}

Json dims_json(const ReducedCFK& c) {
    Json rows = Json::array();
    for (const auto& [key, d] : hfk_dims(c)) rows.push_back({{"A", key.first}, {"spinc", key.second}, {"dim", d}});
    Json by_a = Json::object();
    for (const auto& [a, d] : hfk_dims_by_alexander(c)) by_a[std::to_string(a)] = d;
    return Json{{"dims", rows}, {"by_alexander", by_a}};
}

Json pages_json(const SpectralSequence& ss) {
    Json pages = Json::array();
    for (const auto& p : ss.pages) {
        Json dims = Json::object();
        for (const auto& [lvl, d] : p.dims) dims[std::to_string(lvl)] = d;
        pages.push_back({{"r", p.r}, {"dims", dims}, {"rank", p.rank}});
    }
    return Json{{"pages", pages}, {"total_homology", ss.total_homology}, {"collapse_page", ss.collapse_page()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"veerkit: veering, twist coefficients and knot Floer invariants", "veerkit"};
    app.require_subcommand(1);
    std::string format = "json";
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", seed_flag, "random seed (falls back to VEERKIT_SEED)");

    std::function<Result()> action;
    std::string file, file2, boundary, out_path, side = "+";
    std::vector<std::string> binds;
    int n = 1, trials = 500, l_genus = 1, k_level = 0;
    std::vector<int> ns{1, 2, 3};
    std::string slice = "i";

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    auto* validate_cmd = sub("validate", "validate a standard-form map");
    validate_cmd->add_option("map", file)->required();
    validate_cmd->callback([&] {
        action = [&] {
            auto report = validate(load_map(file));
            return Result{io::to_json(report), report.empty() ? 0 : 1};
        };
    });

    auto* canon_cmd = sub("canon", "print the canonical form of a map");
    canon_cmd->add_option("map", file)->required();
    canon_cmd->callback([&] { action = [&] { return Result{io::to_json(load_map(file))}; }; });

    auto* fdtc_cmd = sub("fdtc", "fractional Dehn twist coefficient at a boundary circle");
    fdtc_cmd->add_option("map", file)->required();
    fdtc_cmd->add_option("--boundary", boundary);
    fdtc_cmd->callback([&] {
        action = [&] {
            auto m = load_map(file);
            Id b = boundary;
            if (b.empty()) {
                if (m.surface_boundary().size() != 1)
                    throw DomainError("--boundary is required unless there is exactly one boundary circle");
                b = m.surface_boundary().front();
            }
            return Result{Json{{"fdtc", io::to_json(fdtc(m, b))}}};
        };
    });

    auto* veering_cmd = sub("veering", "right-/left-veering verdict from standard-form data");
    veering_cmd->add_option("map", file)->required();
    veering_cmd->callback([&] {
        action = [&] { return Result{Json{{"verdict", to_string(veering(load_map(file)))}}}; };
    });

    auto* hfsymp_cmd = sub("hfsymp", "symplectic Floer dimension breakdown of a closed map");
    hfsymp_cmd->add_option("map", file)->required();
    hfsymp_cmd->add_option("--bind", binds, "piece=value for an opaque count");
    hfsymp_cmd->callback([&] {
        action = [&] { return Result{io::to_json(hf_symp_dim(load_map(file), parse_bindings(binds)))}; };
    });

    auto* glue_cmd = sub("glue-check", "glue the cable models on and compare dimensions");
    glue_cmd->add_option("map", file)->required();
    glue_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    glue_cmd->callback([&] {
        action = [&] {
            auto sv = rv_via_symplectic(load_map(file), n);
            return Result{Json{{"difference", sv.difference}, {"verdict", to_string(sv.verdict)}}};
        };
    });

    auto* verify_cmd = sub("verify", "randomized verification harnesses");
    verify_cmd->require_subcommand(1);
    auto* v_symp = verify_cmd->add_subcommand("prop-symp", "symplectic difference vs standard-form verdict");
    auto* v_inv = verify_cmd->add_subcommand("inverse-symp", "dimension invariance under inverse");
    for (auto* s : {v_symp, v_inv}) {
        s->fallthrough();
        s->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    }
    v_symp->callback([&] { action = [&] { return verify_prop_symp(trials, resolve_seed(seed_flag)); }; });
    v_inv->callback([&] { action = [&] { return verify_inverse_symp(trials, resolve_seed(seed_flag)); }; });

    auto* cfk_cmd = sub("cfk", "knot Floer complex operations");
    cfk_cmd->require_subcommand(1);
    auto cfk_sub = [&](const char* name, const char* help, std::function<Result(const ReducedCFK&)> f) {
        auto* s = cfk_cmd->add_subcommand(name, help);
        s->fallthrough();
        s->add_option("complex", file)->required();
        s->callback([&, f] { action = [&, f] { return f(load_cfk(file)); }; });
        return s;
    };
    cfk_sub("validate", "check complex invariants", [](const ReducedCFK& c) {
        auto r = validate_cfk(c);
        return Result{io::to_json(r), r.empty() ? 0 : 1};
    });
    cfk_sub("dims", "knot Floer dimensions", [](const ReducedCFK& c) {
        require_valid_cfk(c);
        return Result{dims_json(c)};
    });
    cfk_sub("tau", "tau invariant", [](const ReducedCFK& c) {
        int t = tau(c);
        if (tau_from_pages(c) != t) throw std::logic_error("tau routes disagree");
        return Result{Json{{"tau", t}}};
    });
    cfk_sub("b", "b invariant", [](const ReducedCFK& c) {
        return Result{Json{{"b", io::to_json(b_invariant(c))}, {"top_d1_nonzero", top_d1_nonzero(c)}}};
    });
    cfk_sub("genus", "maximal Alexander grading", [](const ReducedCFK& c) {
        require_valid_cfk(c);
        return Result{Json{{"genus", genus(c)}}};
    });
    cfk_sub("thin", "thinness", [](const ReducedCFK& c) {
        require_valid_cfk(c);
        return Result{Json{{"thin", is_thin(c)}}};
    });
    auto* pages_cmd = cfk_sub("pages", "spectral sequence pages of a flattening", [&](const ReducedCFK& c) {
        require_valid_cfk(c);
        return Result{pages_json(spectral_sequence(flatten(c, slice == "i" ? Slice::I : Slice::J, k_level)))};
    });
    pages_cmd->add_option("--slice", slice)->check(CLI::IsMember({"i", "j"}));
    pages_cmd->add_option("--k", k_level);

    auto* tensor_cmd = cfk_cmd->add_subcommand("tensor", "tensor product");
    tensor_cmd->fallthrough();
    tensor_cmd->add_option("a", file)->required();
    tensor_cmd->add_option("b", file2)->required();
    tensor_cmd->add_option("-o", out_path);
    tensor_cmd->callback([&] {
        action = [&] {
            auto a = load_cfk(file), b = load_cfk(file2);
            require_valid_cfk(a);
            require_valid_cfk(b);
            return write_or_print(io::to_json(tensor(a, b)), out_path);
        };
    });
    auto* mirror_cmd = cfk_cmd->add_subcommand("mirror", "mirror complex");
    mirror_cmd->fallthrough();
    mirror_cmd->add_option("a", file)->required();
    mirror_cmd->add_option("-o", out_path);
    mirror_cmd->callback([&] {
        action = [&] {
            auto a = load_cfk(file);
            require_valid_cfk(a);
            return write_or_print(io::to_json(mirror(a)), out_path);
        };
    });

    auto* surgery_cmd = sub("surgery", "0-surgery next-to-top corner computation");
    surgery_cmd->require_subcommand(1);
    auto* top_cmd = surgery_cmd->add_subcommand("top-minus-one", "corner homology of K # L_side");
    top_cmd->fallthrough();
    top_cmd->add_option("complex", file)->required();
    top_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    top_cmd->add_option("--side", side);
    top_cmd->add_option("--l-genus", l_genus)->check(CLI::PositiveNumber);
    top_cmd->callback([&] {
        action = [&] {
            auto j = build_J(load_cfk(file), n, parse_side(side), l_genus);
            return Result{io::to_json(zero_surgery_top_minus_one(j))};
        };
    });
    auto* yi_cmd = surgery_cmd->add_subcommand("check-yi", "both sides against dim HFK(K, g-1) - 1");
    yi_cmd->fallthrough();
    yi_cmd->add_option("complex", file)->required();
    yi_cmd->add_option("--n", ns)->check(CLI::PositiveNumber);
    yi_cmd->add_option("--l-genus", l_genus)->check(CLI::PositiveNumber);
    yi_cmd->callback([&] {
        action = [&] {
            auto rows = check_yi(load_cfk(file), ns, l_genus);
            Json arr = Json::array();
            bool all = true;
            for (const auto& r : rows) {
                arr.push_back({{"n", r.n}, {"plus", r.plus}, {"minus", r.minus}, {"expected", r.expected},
                               {"off_label", r.off_label}, {"holds", r.holds()}});
                all = all && r.holds();
            }
            return Result{Json{{"rows", arr}, {"holds", all}}, all ? 0 : 1};
        };
    });

    auto* classify_cmd = sub("classify", "classification record of a fibered complex");
    classify_cmd->add_option("complex", file)->required();
    classify_cmd->add_option("--monodromy", file2);
    classify_cmd->callback([&] {
        action = [&] {
            auto c = load_cfk(file);
            if (file2.empty()) return Result{io::to_json(classify_fibered(c))};
            auto report = consistency_audit(c, load_map(file2));
            return Result{io::to_json(report)};
        };
    });

    auto* corpus_cmd = sub("corpus", "bundled corpus");
    corpus_cmd->require_subcommand(1);
    std::string dir = default_corpus_dir().string();
    auto* list_cmd = corpus_cmd->add_subcommand("list", "list entries");
    auto* check_cmd = corpus_cmd->add_subcommand("check", "check golden expectations");
    for (auto* s : {list_cmd, check_cmd}) {
        s->fallthrough();
        s->add_option("--dir", dir);
    }
    list_cmd->callback([&] {
        action = [&] {
            Json arr = Json::array();
            for (const auto& e : load_corpus(dir)) {
                Json o{{"name", e.name}, {"complex", e.complex.filename().string()}};
                if (e.monodromy) o["monodromy"] = e.monodromy->filename().string();
                arr.push_back(std::move(o));
            }
            return Result{Json{{"entries", arr}}};
        };
    });
    check_cmd->callback([&] {
        action = [&] {
            Json arr = Json::array();
            int failed = 0;
            for (const auto& e : load_corpus(dir)) {
                auto r = check_entry(e);
                failed += r.ok ? 0 : 1;
                arr.push_back({{"name", r.name}, {"ok", r.ok}, {"mismatches", r.mismatches}});
            }
            return Result{Json{{"entries", arr}, {"failed", failed}}, failed ? 1 : 0};
        };
    });

    Result result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        result = action();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        result = {Json{{"error", e.what()}, {"kind", "usage"}}, 2};
    } catch (const InputError& e) {
        result = {Json{{"error", e.what()}, {"kind", "input"}}, 2};
    } catch (const DomainError& e) {
        result = {Json{{"error", e.what()}, {"kind", "domain"}}, 1};
    } catch (const std::exception& e) {
        result = {Json{{"error", e.what()}, {"kind", "internal"}}, 3};
    }
    if (format == "table")
        render_table(result.body, out);
    else
        out << io::dump(result.body);
    return result.code;
}

int run(int argc, const char* const* argv, std::ostream& out) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out);
}

}  // namespace veerkit::cli
