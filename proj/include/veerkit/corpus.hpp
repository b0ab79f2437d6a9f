#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "veerkit/io.hpp"

namespace veerkit {

struct CorpusEntry {
    std::string name;
    std::filesystem::path complex;
    std::optional<std::filesystem::path> monodromy;
    io::Json expected;  // subset of the audit record, compared field by field
};

// Reads <dir>/index.json; paths inside are relative to dir.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

// Flattened audit record: classification fields plus "agree" and, with a
// monodromy, "standard_form_route" and "symplectic_difference".
io::Json audit_record(const CorpusEntry& e);

struct EntryCheck {
    std::string name;
    bool ok = true;
    std::vector<std::string> mismatches;
};
EntryCheck check_entry(const CorpusEntry& e);

#ifdef VEERKIT_CORPUS_DIR
inline std::filesystem::path default_corpus_dir() { return VEERKIT_CORPUS_DIR; }
#else
inline std::filesystem::path default_corpus_dir() { return "corpus"; }
#endif

}  // namespace veerkit
