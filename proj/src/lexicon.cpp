#include "kparadigm/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <type_traits>

#include "kparadigm/error.hpp"

namespace kparadigm {

namespace {

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

std::optional<int> parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

// Calls fn(line_no, fields) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        fn(line_no, split(line, '\t'));
    }
}

LetterSeq letters_of(std::string_view surface, const std::string& file, std::size_t line_no) {
    if (surface.empty()) throw ParseError(file, line_no, "empty surface");
    try {
        return decompose(surface);
    } catch (const NonHangulInput& err) {
        throw ParseError(file, line_no,
                         "\"" + std::string(surface) + "\" has a non-Hangul character at position " +
                             std::to_string(err.position()));
    }
}

template <class Id>
Id class_id_at(std::string_view field, const std::string& file, std::size_t line_no) {
    const auto value = parse_int(field);
    if (!value) throw ParseError(file, line_no, "class id \"" + std::string(field) + "\" is not an integer");
    try {
        return Id(*value);
    } catch (const RangeError&) {
        throw RangeError(file + ":" + std::to_string(line_no) + ": " +
                             (std::is_same_v<Id, VerbClassId> ? "verb class id" : "ending class id"),
                         *value);
    }
}

}  // namespace

Lexicon::Lexicon(std::vector<EndingEntry> endings, std::vector<VerbEntry> verbs, Template tpl)
    : endings_(std::move(endings)), verbs_(std::move(verbs)), template_(std::move(tpl)) {
    for (std::size_t i = 0; i < endings_.size(); ++i) by_class_[endings_[i].class_id.offset()].push_back(i);

    std::array<bool, VerbClassId::kMax> class_used{};
    verb_index_.reserve(verbs_.size());
    for (std::size_t i = 0; i < verbs_.size(); ++i) {
        const auto& verb = verbs_[i];
        if (verb.class_ids.empty()) throw ParseError("verbs", i + 1, "verb \"" + verb.surface + "\" has no class");
        if (!verb_index_.emplace(verb.surface, i).second) throw DuplicateVerb(verb.surface);
        for (VerbClassId v : verb.class_ids) {
            class_used[v.offset()] = true;
            for (const auto& cell : template_.row(v)) {
                if (cell.rule->verb_stop && static_cast<std::size_t>(-*cell.rule->verb_stop) > verb.letters.size())
                    throw IndexOutOfBounds("verb " + verb.surface + " (class " + to_string(v) + " x ending class " +
                                               to_string(cell.ending_class) + ")",
                                           *cell.rule->verb_stop, verb.letters.size());
            }
        }
    }

    for (const auto& ending : endings_) {
        for (int v = 1; v <= VerbClassId::kMax; ++v) {
            if (!class_used[static_cast<std::size_t>(v - 1)]) continue;
            const auto& cell = template_.lookup(VerbClassId(v), ending.class_id);
            if (cell && cell->ending_start && static_cast<std::size_t>(*cell->ending_start) > ending.letters.size())
                throw IndexOutOfBounds("ending " + ending.surface + " (class " + to_string(ending.class_id) +
                                           " x verb class " + std::to_string(v) + ")",
                                       *cell->ending_start, ending.letters.size());
        }
    }
}

Lexicon Lexicon::parse(std::istream& endings_in, std::istream& verbs_in, Template tpl,
                       const std::string& endings_name, const std::string& verbs_name) {
    std::vector<EndingEntry> endings;
    for_each_record(endings_in, [&](std::size_t line_no, const std::vector<std::string_view>& fields) {
        if (fields.size() != 2) throw ParseError(endings_name, line_no, "expected: surface TAB class_id");
        auto letters = letters_of(fields[0], endings_name, line_no);
        endings.push_back({std::string(fields[0]), class_id_at<EndingClassId>(fields[1], endings_name, line_no),
                           std::move(letters)});
    });

    std::vector<VerbEntry> verbs;
    for_each_record(verbs_in, [&](std::size_t line_no, const std::vector<std::string_view>& fields) {
        if (fields.size() != 2) throw ParseError(verbs_name, line_no, "expected: surface TAB class_ids");
        VerbEntry entry{std::string(fields[0]), {}, letters_of(fields[0], verbs_name, line_no)};
        for (auto id_text : split(fields[1], ',')) {
            const auto id = class_id_at<VerbClassId>(id_text, verbs_name, line_no);
            if (std::find(entry.class_ids.begin(), entry.class_ids.end(), id) != entry.class_ids.end())
                throw ParseError(verbs_name, line_no, "class id " + to_string(id) + " listed twice");
            entry.class_ids.push_back(id);
        }
        verbs.push_back(std::move(entry));
    });

    return Lexicon(std::move(endings), std::move(verbs), std::move(tpl));
}

Lexicon Lexicon::load(const std::string& endings_path, const std::string& verbs_path,
                      const std::string& template_path) {
    auto tpl = Template::load(template_path);
    std::ifstream endings(endings_path, std::ios::binary);
    if (!endings) throw ParseError(endings_path, 0, "cannot open file");
    std::ifstream verbs(verbs_path, std::ios::binary);
    if (!verbs) throw ParseError(verbs_path, 0, "cannot open file");
    return parse(endings, verbs, std::move(tpl), endings_path, verbs_path);
}

const VerbEntry* Lexicon::find_verb(std::string_view surface) const {
    const auto it = verb_index_.find(std::string(surface));
    return it == verb_index_.end() ? nullptr : &verbs_[it->second];
}

std::vector<const EndingEntry*> Lexicon::find_endings(std::string_view surface) const {
    std::vector<const EndingEntry*> out;
    for (const auto& ending : endings_)
        if (ending.surface == surface) out.push_back(&ending);
    return out;
}

std::vector<EndingEntry> Lexicon::endings_of_class(EndingClassId e) const {
    std::vector<EndingEntry> out;
    out.reserve(by_class_[e.offset()].size());
    for (std::size_t i : by_class_[e.offset()]) out.push_back(endings_[i]);
    return out;
}

// ---------------------------------------------------------------------------

Predicate parse_predicate(std::string_view text) {
    using Kind = Predicate::Kind;
    if (text == "ends-with-consonant") return {Kind::ends_with_consonant, {}};
    if (text == "last-vowel-light") return {Kind::last_vowel_light, {}};
    if (text == "starts-with-vowel") return {Kind::starts_with_vowel, {}};
    constexpr std::string_view kEndsWith = "ends-with:";
    if (text.substr(0, kEndsWith.size()) == kEndsWith) {
        static constexpr std::string_view kTails[] = {"ㄹ", "하", "ㄷ", "ㅂ", "ㅅ", "르", "ㅎ"};
        const auto tail = text.substr(kEndsWith.size());
        if (std::find(std::begin(kTails), std::end(kTails), tail) != std::end(kTails))
            return {Kind::ends_with, std::string(tail)};
    }
    throw std::invalid_argument("unknown predicate \"" + std::string(text) + "\"");
}

std::string to_string(const Predicate& predicate) {
    switch (predicate.kind) {
        case Predicate::Kind::ends_with_consonant: return "ends-with-consonant";
        case Predicate::Kind::ends_with: return "ends-with:" + predicate.tail;
        case Predicate::Kind::last_vowel_light: return "last-vowel-light";
        case Predicate::Kind::starts_with_vowel: return "starts-with-vowel";
    }
    return {};
}

bool holds(const Predicate& predicate, const LetterSeq& letters) {
    switch (predicate.kind) {
        case Predicate::Kind::ends_with_consonant:
            return !letters.empty() && letters.back().is_consonant();
        case Predicate::Kind::ends_with: {
            // A consonant+vowel tail is always its own syllable, so a letter
            // suffix match is a syllable match for 하 and 르.
            const auto tail = decompose(predicate.tail);
            return letters.size() >= tail.size() && std::equal(tail.rbegin(), tail.rend(), letters.rbegin());
        }
        case Predicate::Kind::last_vowel_light: {
            auto it = std::find_if(letters.rbegin(), letters.rend(), [](Letter l) { return l.is_vowel(); });
            return it != letters.rend() && classify(*it).harmony == HarmonyClass::light;
        }
        case Predicate::Kind::starts_with_vowel: {
            static const Letter kIeung = *Letter::from_jamo(U'ㅇ');
            return letters.size() >= 2 && letters[0] == kIeung && letters[1].is_vowel();
        }
    }
    return false;
}

bool holds(const Predicate& predicate, std::string_view surface) { return holds(predicate, decompose(surface)); }

std::vector<FeatureExpectation> parse_expectations(std::istream& in, const std::string& source_name) {
    std::vector<FeatureExpectation> out;
    for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& fields) {
        if (fields.size() != 4)
            throw ParseError(source_name, line_no, "expected: subject TAB class_id TAB predicate TAB true|false");
        FeatureExpectation exp;
        if (fields[0] == "verb")
            exp.subject = Subject::verb;
        else if (fields[0] == "ending")
            exp.subject = Subject::ending;
        else
            throw ParseError(source_name, line_no, "subject must be verb or ending");

        if (exp.subject == Subject::verb)
            exp.class_id = class_id_at<VerbClassId>(fields[1], source_name, line_no).value();
        else
            exp.class_id = class_id_at<EndingClassId>(fields[1], source_name, line_no).value();

        try {
            exp.predicate = parse_predicate(fields[2]);
        } catch (const std::invalid_argument& err) {
            throw ParseError(source_name, line_no, err.what());
        }
        if (fields[3] == "true")
            exp.expected = true;
        else if (fields[3] == "false")
            exp.expected = false;
        else
            throw ParseError(source_name, line_no, "expected value must be true or false");
        out.push_back(std::move(exp));
    });
    return out;
}

std::vector<FeatureExpectation> load_expectations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_expectations(in, path);
}

std::vector<Violation> validate(const Lexicon& lexicon, const std::vector<FeatureExpectation>& expectations) {
    std::vector<Violation> out;
    for (const auto& exp : expectations) {
        if (exp.subject == Subject::verb) {
            const VerbClassId v(exp.class_id);
            for (const auto& verb : lexicon.verbs()) {
                if (std::find(verb.class_ids.begin(), verb.class_ids.end(), v) == verb.class_ids.end()) continue;
                if (holds(exp.predicate, verb.letters) != exp.expected) out.push_back({verb.surface, exp});
            }
        } else {
            for (std::size_t i : lexicon.ending_indices_of_class(EndingClassId(exp.class_id))) {
                const auto& ending = lexicon.endings()[i];
                if (holds(exp.predicate, ending.letters) != exp.expected) out.push_back({ending.surface, exp});
            }
        }
    }
    return out;
}

std::string describe(const Violation& violation) {
    const auto& exp = violation.expectation;
    return std::string(exp.subject == Subject::verb ? "verb " : "ending ") + violation.surface + " in class " +
           std::to_string(exp.class_id) + ": expected " + to_string(exp.predicate) + " to be " +
           (exp.expected ? "true" : "false");
}

}  // namespace kparadigm
