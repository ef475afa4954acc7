#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kparadigm/conjugator.hpp"
#include "kparadigm/lexicon.hpp"

namespace kparadigm {

struct LemmaCandidate {
    std::string verb;
    std::string ending;
    VerbClassId verb_class;
    EndingClassId ending_class;

    friend bool operator==(const LemmaCandidate&, const LemmaCandidate&) = default;
    friend auto operator<=>(const LemmaCandidate&, const LemmaCandidate&) = default;
};

/// Reverse index from generated surface text to the (verb, ending) pairs that
/// produce it, over a chosen set of verbs.
class FormIndex {
public:
    FormIndex() = default;

    std::size_t size() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }
    const std::vector<std::string>& scope() const { return scope_; }

    /// Candidates sorted by (verb, ending, verb class, ending class); empty if unknown.
    std::span<const LemmaCandidate> find(std::string_view form) const;

    const std::map<std::string, std::vector<LemmaCandidate>, std::less<>>& entries() const { return forms_; }

    /// Sorted TSV: form TAB verb TAB ending TAB verb_class TAB ending_class.
    void write_tsv(std::ostream& out) const;
    /// Reads what write_tsv produced. The scope is rebuilt from the verbs seen.
    static FormIndex read_tsv(std::istream& in, const std::string& source_name = "index");

    friend bool operator==(const FormIndex&, const FormIndex&) = default;

private:
    friend FormIndex index_paradigms(std::vector<std::string> scope, const std::vector<Paradigm>& paradigms);

    std::vector<std::string> scope_;
    std::map<std::string, std::vector<LemmaCandidate>, std::less<>> forms_;
};

/// Indexes paradigms that were already generated for `scope`.
FormIndex index_paradigms(std::vector<std::string> scope, const std::vector<Paradigm>& paradigms);

/// Indexes every form of every verb in `verbs` (all lexicon verbs when nullopt).
/// Paradigms are generated in parallel. Throws NotFound for unknown verbs.
FormIndex build_index(const Lexicon& lexicon, const std::optional<std::vector<std::string>>& verbs = std::nullopt);

/// Single-threaded reference for build_index.
FormIndex build_index_serial(const Lexicon& lexicon,
                             const std::optional<std::vector<std::string>>& verbs = std::nullopt);

/// Exact-text lookup; deterministic order by (verb, ending).
std::vector<LemmaCandidate> lemmatize(const FormIndex& index, std::string_view form);

}  // namespace kparadigm
