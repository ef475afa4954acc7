#include "kparadigm/rule.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kparadigm/utf8.hpp"

namespace kparadigm {

namespace detail {
extern const std::string_view kBuiltinTemplateTsv;
}

namespace {

constexpr std::string_view kNone = "None";

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    for (;;) {
        const auto pos = text.find(sep, begin);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(begin));
            return out;
        }
        out.push_back(text.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

// Digits only, no leading zero, no sign.
std::optional<int> parse_magnitude(std::string_view digits) {
    if (digits.empty() || digits.front() < '1' || digits.front() > '9') return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

}  // namespace

Rule parse_rule(std::string_view text) {
    const std::string owned(text);
    const auto fields = split(text, ',');
    if (fields.size() != 3)
        throw MalformedRule(owned, "expected 3 comma-separated fields, got " + std::to_string(fields.size()));

    Rule rule;
    if (fields[0] != kNone) {
        if (fields[0].empty() || fields[0].front() != '-')
            throw MalformedRule(owned, "verb stop index must be None or a negative integer");
        auto magnitude = parse_magnitude(fields[0].substr(1));
        if (!magnitude) throw MalformedRule(owned, "verb stop index must be None or a negative integer");
        rule.verb_stop = -*magnitude;
    }

    std::size_t offset = 0;
    while (offset < fields[1].size()) {
        auto cp = utf8::next(fields[1], offset);
        if (!cp) throw MalformedRule(owned, "postfix is not valid UTF-8");
        auto letter = Letter::from_jamo(*cp);
        if (!letter) throw MalformedRule(owned, "postfix contains a non-jamo character");
        rule.postfix.push_back(*letter);
    }

    if (fields[2] != kNone) {
        auto magnitude = parse_magnitude(fields[2]);
        if (!magnitude) throw MalformedRule(owned, "ending start index must be None or a positive integer");
        rule.ending_start = *magnitude;
    }
    return rule;
}

std::string serialize_rule(const Rule& rule) {
    std::string out;
    out += rule.verb_stop ? std::to_string(*rule.verb_stop) : std::string(kNone);
    out += ',';
    out += to_jamo(rule.postfix);
    out += ',';
    out += rule.ending_start ? std::to_string(*rule.ending_start) : std::string(kNone);
    return out;
}

Template Template::parse(std::istream& in, const std::string& source_name) {
    Template tpl;
    std::string line;
    std::size_t line_no = 0;
    int next_verb = 1;
    bool seen_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (next_verb > kVerbClasses) continue;  // trailing blank lines
            throw ParseError(source_name, line_no, "unexpected blank line");
        }
        const auto fields = split(line, '\t');
        if (fields.size() != kEndingClasses + 1)
            throw ParseError(source_name, line_no,
                             "expected " + std::to_string(kEndingClasses + 1) + " tab-separated fields, got " +
                                 std::to_string(fields.size()));
        if (!seen_header) {
            if (!fields[0].empty()) throw ParseError(source_name, line_no, "header must start with an empty cell");
            for (int e = 1; e <= kEndingClasses; ++e)
                if (fields[e] != std::to_string(e))
                    throw ParseError(source_name, line_no,
                                     "header column " + std::to_string(e) + " must be ending class " +
                                         std::to_string(e));
            seen_header = true;
            continue;
        }
        if (next_verb > kVerbClasses) throw ParseError(source_name, line_no, "more than 46 verb class rows");
        if (fields[0] != std::to_string(next_verb))
            throw ParseError(source_name, line_no, "expected verb class row " + std::to_string(next_verb));
        const VerbClassId v(next_verb);
        for (int e = 1; e <= kEndingClasses; ++e) {
            if (fields[e].empty()) continue;
            try {
                tpl.cells_[v.offset() * kEndingClasses + static_cast<std::size_t>(e - 1)] = parse_rule(fields[e]);
            } catch (const MalformedRule& err) {
                throw MalformedRule(err.text(), source_name + ":" + std::to_string(line_no) + ": " + err.reason());
            }
        }
        ++next_verb;
    }
    if (!seen_header) throw ParseError(source_name, line_no, "missing header row");
    if (next_verb <= kVerbClasses)
        throw ParseError(source_name, line_no, "missing verb class rows from " + std::to_string(next_verb));

    // Ending class 1 combines with every verb class unchanged.
    for (int v = 1; v <= kVerbClasses; ++v) {
        const auto& cell = tpl.lookup(VerbClassId(v), EndingClassId(1));
        if (!cell || !cell->is_identity())
            throw ParseError(source_name, static_cast<std::size_t>(v) + 1,
                             "ending class 1 cell must be None,,None");
    }
    return tpl;
}

Template Template::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse(in, path);
}

const Template& Template::builtin() {
    static const Template tpl = [] {
        std::istringstream in{std::string(detail::kBuiltinTemplateTsv)};
        return parse(in, "<builtin template>");
    }();
    return tpl;
}

std::vector<Template::RowEntry> Template::row(VerbClassId v) const {
    std::vector<RowEntry> out;
    for (int e = 1; e <= kEndingClasses; ++e) {
        const EndingClassId ending(e);
        if (const auto& cell = lookup(v, ending)) out.push_back({ending, &*cell});
    }
    return out;
}

std::size_t Template::rule_count() const {
    std::size_t count = 0;
    for (const auto& cell : cells_) count += cell.has_value();
    return count;
}

std::string Template::serialize() const {
    std::string out;
    for (int e = 1; e <= kEndingClasses; ++e) out += '\t' + std::to_string(e);
    out += '\n';
    for (int v = 1; v <= kVerbClasses; ++v) {
        out += std::to_string(v);
        for (int e = 1; e <= kEndingClasses; ++e) {
            out += '\t';
            if (const auto& cell = lookup(VerbClassId(v), EndingClassId(e))) out += serialize_rule(*cell);
        }
        out += '\n';
    }
    return out;
}

std::string to_string(VerbClassId id) { return std::to_string(id.value()); }
std::string to_string(EndingClassId id) { return std::to_string(id.value()); }

}  // namespace kparadigm
