#include "veerkit/corpus.hpp"

#include "veerkit/errors.hpp"

namespace veerkit {

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
    auto index = io::load(dir / "index.json");
    if (!index.is_object() || !index.contains("entries") || !index["entries"].is_array())
        throw InputError((dir / "index.json").string() + ": expected {\"entries\": [...]}");
    std::vector<CorpusEntry> out;
    for (const auto& e : index["entries"]) {
        CorpusEntry x;
        try {
            x.name = e.at("name").get<std::string>();
            x.complex = dir / e.at("complex").get<std::string>();
            if (e.contains("monodromy")) x.monodromy = dir / e.at("monodromy").get<std::string>();
            x.expected = e.value("expected", io::Json::object());
        } catch (const nlohmann::json::exception& ex) {
            throw InputError("corpus index: " + std::string(ex.what()));
        }
        out.push_back(std::move(x));
    }
    return out;
}

io::Json audit_record(const CorpusEntry& e) {
    auto c = io::cfk_from_json(io::load(e.complex));
    std::optional<StandardFormMap> h;
    if (e.monodromy) h = io::map_from_json(io::load(*e.monodromy));
    auto report = consistency_audit(c, h);
    auto rec = io::to_json(report.classification);
    rec.erase("notes");
    rec["agree"] = report.agree;
    if (report.standard_form) rec["standard_form_route"] = to_string(*report.standard_form);
    if (report.symplectic) rec["symplectic_difference"] = report.symplectic->difference;
    return rec;
}

EntryCheck check_entry(const CorpusEntry& e) {
    EntryCheck out;
    out.name = e.name;
    auto rec = audit_record(e);
    for (const auto& [key, want] : e.expected.items()) {
        if (!rec.contains(key)) {
            out.mismatches.push_back(key + ": missing from the audit record");
        } else if (rec[key] != want) {
            out.mismatches.push_back(key + ": expected " + want.dump() + ", got " + rec[key].dump());
        }
    }
    out.ok = out.mismatches.empty();
    return out;
}

}  // namespace veerkit
