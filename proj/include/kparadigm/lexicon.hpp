#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kparadigm/hangul.hpp"
#include "kparadigm/rule.hpp"

namespace kparadigm {

struct EndingEntry {
    std::string surface;
    EndingClassId class_id;
    LetterSeq letters;

    friend bool operator==(const EndingEntry&, const EndingEntry&) = default;
};

struct VerbEntry {
    std::string surface;
    std::vector<VerbClassId> class_ids;  // declaration order, non-empty, no repeats
    LetterSeq letters;

    friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

/// Endings, verbs and the template they combine through. Immutable once built.
class Lexicon {
public:
    /// Validates every entry: surfaces decompose, ids are in range, verb
    /// surfaces are unique, and every template rule that can fire slices
    /// within the letters of the verbs and endings it applies to.
    Lexicon(std::vector<EndingEntry> endings, std::vector<VerbEntry> verbs, Template tpl);

    /// Throws ParseError, RangeError, DuplicateVerb, MalformedRule or IndexOutOfBounds.
    static Lexicon load(const std::string& endings_path, const std::string& verbs_path,
                        const std::string& template_path);
    static Lexicon parse(std::istream& endings, std::istream& verbs, Template tpl,
                         const std::string& endings_name = "endings", const std::string& verbs_name = "verbs");

    const std::vector<EndingEntry>& endings() const { return endings_; }
    const std::vector<VerbEntry>& verbs() const { return verbs_; }
    const Template& templ() const { return template_; }

    const VerbEntry* find_verb(std::string_view surface) const;
    /// Every ending entry spelled `surface`, in file order.
    std::vector<const EndingEntry*> find_endings(std::string_view surface) const;

    /// Endings of one class in file order; empty when the class is unpopulated.
    std::vector<EndingEntry> endings_of_class(EndingClassId e) const;
    const std::vector<std::size_t>& ending_indices_of_class(EndingClassId e) const {
        return by_class_[e.offset()];
    }

    friend bool operator==(const Lexicon& a, const Lexicon& b) {
        return a.endings_ == b.endings_ && a.verbs_ == b.verbs_ && a.template_ == b.template_;
    }

private:
    std::vector<EndingEntry> endings_;
    std::vector<VerbEntry> verbs_;
    Template template_;
    std::unordered_map<std::string, std::size_t> verb_index_;
    std::array<std::vector<std::size_t>, EndingClassId::kMax> by_class_;
};

// ---------------------------------------------------------------------------
// Surface feature checks

enum class Subject { verb, ending };

struct Predicate {
    enum class Kind { ends_with_consonant, ends_with, last_vowel_light, starts_with_vowel };
    Kind kind = Kind::ends_with_consonant;
    std::string tail;  // ends_with only: ㄹ 하 ㄷ ㅂ ㅅ 르 ㅎ

    friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// "ends-with-consonant", "ends-with:ㄹ", "last-vowel-light", "starts-with-vowel".
Predicate parse_predicate(std::string_view text);
std::string to_string(const Predicate& predicate);

/// Evaluates a predicate on a surface string.
bool holds(const Predicate& predicate, std::string_view surface);
bool holds(const Predicate& predicate, const LetterSeq& letters);

/// Every entry of class `class_id` must satisfy `predicate == expected`.
struct FeatureExpectation {
    Subject subject = Subject::verb;
    int class_id = 1;
    Predicate predicate;
    bool expected = true;

    friend bool operator==(const FeatureExpectation&, const FeatureExpectation&) = default;
};

/// TSV: subject (verb|ending) TAB class id TAB predicate TAB true|false.
std::vector<FeatureExpectation> parse_expectations(std::istream& in, const std::string& source_name = "expectations");
std::vector<FeatureExpectation> load_expectations(const std::string& path);

struct Violation {
    std::string surface;
    FeatureExpectation expectation;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Lists each (entry, failed expectation) pair, in expectation order then file order.
std::vector<Violation> validate(const Lexicon& lexicon, const std::vector<FeatureExpectation>& expectations);

std::string describe(const Violation& violation);

}  // namespace kparadigm
