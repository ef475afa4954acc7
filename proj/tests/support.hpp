#pragma once

// Shared helpers for the unit tests and the acceptance runner. The oracles
// here deliberately avoid the conjugator's own lookup path.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kparadigm/conjugator.hpp"
#include "kparadigm/hangul.hpp"
#include "kparadigm/lexicon.hpp"
#include "kparadigm/utf8.hpp"

namespace support {

inline std::string data_path(const std::string& file) { return std::string(KPARADIGM_TEST_DATA_DIR) + "/" + file; }
inline std::string fixture_path(const std::string& file) {
    return std::string(KPARADIGM_TEST_FIXTURE_DIR) + "/" + file;
}

inline const kparadigm::Lexicon& sample_lexicon() {
    static const kparadigm::Lexicon lexicon =
        kparadigm::Lexicon::load(data_path("endings.tsv"), data_path("verbs.tsv"), data_path("template.tsv"));
    return lexicon;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Letters as space-separated compatibility jamo.
inline std::string spaced(const kparadigm::LetterSeq& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        kparadigm::utf8::append(out, seq[i].jamo());
    }
    return out;
}

/// Re-executes the seven combination steps for each traced (verb, ending, rule)
/// and returns one message per step that disagrees with the recorded trace.
/// Steps 2 and 3 are recomputed here by plain slicing, not via merge_letters.
inline std::vector<std::string> check_traces(const std::string& path, std::size_t* checked = nullptr) {
    using namespace kparadigm;
    std::vector<std::string> problems;
    std::ifstream in(path);
    if (!in) return {"cannot open " + path};
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) f.push_back(cell);
        if (f.size() == 4) f.emplace_back();
        if (f.size() != 5) {
            problems.push_back("bad trace line: " + line);
            continue;
        }
        const auto verb = decompose(f[0]);
        const auto ending = decompose(f[1]);
        const Rule rule = parse_rule(f[2]);
        const int step = std::stoi(f[3]);

        LetterSeq sliced_verb(verb.begin(), verb.end() - (rule.verb_stop ? -*rule.verb_stop : 0));
        LetterSeq with_postfix = sliced_verb;
        with_postfix.insert(with_postfix.end(), rule.postfix.begin(), rule.postfix.end());
        LetterSeq sliced_ending(ending.begin() + (rule.ending_start ? *rule.ending_start : 0), ending.end());

        std::string actual;
        switch (step) {
            case 1: actual = spaced(verb); break;
            case 2: actual = spaced(sliced_verb); break;
            case 3: actual = spaced(with_postfix); break;
            case 4: actual = spaced(ending); break;
            case 5: actual = spaced(sliced_ending); break;
            case 6: actual = spaced(merge_letters(verb, ending, rule)); break;
            case 7: actual = apply_rule(verb, ending, rule); break;
            default: problems.push_back("unknown step in: " + line); continue;
        }
        ++count;
        if (actual != f[4])
            problems.push_back(f[0] + "+" + f[1] + " step " + f[3] + ": expected '" + f[4] + "', got '" + actual + "'");
    }
    if (checked) *checked = count;
    return problems;
}

/// Brute-force paradigm: every declared verb class, times every ending class,
/// times every ending of the lexicon, keeping the cells that hold a rule.
/// Identical texts for one ending collapse with all derivations kept.
inline kparadigm::Paradigm brute_force_paradigm(const kparadigm::Lexicon& lexicon, const kparadigm::VerbEntry& verb) {
    using namespace kparadigm;
    Paradigm out{verb.surface, verb.class_ids, {}};
    for (int e = 1; e <= EndingClassId::kMax; ++e) {
        for (const auto& ending : lexicon.endings()) {
            if (ending.class_id.value() != e) continue;
            ParadigmEntry entry{ending, {}};
            bool reachable = false;
            for (auto v : verb.class_ids) {
                const auto& cell = lexicon.templ().lookup(v, EndingClassId(e));
                if (!cell) continue;
                reachable = true;
                const auto text = apply_rule(verb.letters, ending.letters, *cell);
                Derivation d{v, EndingClassId(e), *cell};
                bool merged = false;
                for (auto& form : entry.forms)
                    if (form.text == text) {
                        form.derivations.push_back(d);
                        merged = true;
                    }
                if (!merged) entry.forms.push_back({text, verb.surface, ending.surface, {d}});
            }
            if (reachable) out.entries.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace support
