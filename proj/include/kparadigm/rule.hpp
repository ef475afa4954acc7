#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kparadigm/error.hpp"
#include "kparadigm/hangul.hpp"

namespace kparadigm {

namespace detail {

struct VerbClassTag {
    static constexpr const char* kName = "verb class id";
};
struct EndingClassTag {
    static constexpr const char* kName = "ending class id";
};

template <int Max, class Tag>
class ClassId {
public:
    static constexpr int kMin = 1;
    static constexpr int kMax = Max;

    /// Throws RangeError outside [1, Max].
    explicit ClassId(int id) : id_(id) {
        if (id < kMin || id > kMax) throw RangeError(Tag::kName, id);
    }

    constexpr int value() const { return id_; }
    constexpr std::size_t offset() const { return static_cast<std::size_t>(id_ - 1); }

    friend constexpr bool operator==(ClassId, ClassId) = default;
    friend constexpr auto operator<=>(ClassId, ClassId) = default;

private:
    int id_;
};

}  // namespace detail

using VerbClassId = detail::ClassId<46, detail::VerbClassTag>;
using EndingClassId = detail::ClassId<24, detail::EndingClassTag>;

/// How a verb class joins an ending class: drop `-verb_stop` letters from the
/// end of the verb, append `postfix`, then drop `ending_start` letters from the
/// start of the ending. Absent indices mean no slicing.
struct Rule {
    std::optional<int> verb_stop;     // <= -1 when present
    LetterSeq postfix;
    std::optional<int> ending_start;  // >= 1 when present

    bool is_identity() const { return !verb_stop && postfix.empty() && !ending_start; }

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Parses "stop,postfix,start", e.g. "None,,None" or "-2,ㅐ,2".
/// Throws MalformedRule.
Rule parse_rule(std::string_view text);

/// Canonical text form; inverse of parse_rule.
std::string serialize_rule(const Rule& rule);

/// The verb-class x ending-class grid of combination rules. Blank cells mean
/// the two classes do not combine.
class Template {
public:
    static constexpr int kVerbClasses = VerbClassId::kMax;
    static constexpr int kEndingClasses = EndingClassId::kMax;

    /// Reads the TSV grid (header row of ending ids, first column of verb ids).
    /// Throws ParseError or MalformedRule.
    static Template parse(std::istream& in, const std::string& source_name = "template");
    static Template load(const std::string& path);

    /// Grid transcribed from the published template, compiled into the library.
    static const Template& builtin();

    const std::optional<Rule>& lookup(VerbClassId v, EndingClassId e) const {
        return cells_[v.offset() * kEndingClasses + e.offset()];
    }

    /// Non-blank cells of one verb-class row, in ending-class order.
    struct RowEntry {
        EndingClassId ending_class;
        const Rule* rule;
    };
    std::vector<RowEntry> row(VerbClassId v) const;

    std::size_t rule_count() const;

    /// Writes the grid in the same TSV layout parse() accepts.
    std::string serialize() const;

    friend bool operator==(const Template&, const Template&) = default;

private:
    std::array<std::optional<Rule>, kVerbClasses * kEndingClasses> cells_;
};

std::string to_string(VerbClassId id);
std::string to_string(EndingClassId id);

}  // namespace kparadigm
