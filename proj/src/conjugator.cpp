#include "kparadigm/conjugator.hpp"

#include <algorithm>
#include <array>
#include <exception>

#include "kparadigm/error.hpp"

namespace kparadigm {

namespace {

struct Route {
    VerbClassId verb_class;
    const Rule* rule;
};

// Appends `text` to `forms`, or records one more derivation if it is already there.
void add_form(std::vector<SurfaceForm>& forms, std::string text, const VerbEntry& verb, const EndingEntry& ending,
              Derivation derivation) {
    auto it = std::find_if(forms.begin(), forms.end(), [&](const SurfaceForm& f) { return f.text == text; });
    if (it != forms.end()) {
        it->derivations.push_back(std::move(derivation));
        return;
    }
    forms.push_back({std::move(text), verb.surface, ending.surface, {std::move(derivation)}});
}

}  // namespace

std::size_t Paradigm::form_count() const {
    std::size_t n = 0;
    for (const auto& entry : entries) n += entry.forms.size();
    return n;
}

LetterSeq merge_letters(const LetterSeq& verb_letters, const LetterSeq& ending_letters, const Rule& rule) {
    std::size_t verb_keep = verb_letters.size();
    if (rule.verb_stop) {
        const auto drop = static_cast<std::size_t>(-*rule.verb_stop);
        if (drop > verb_letters.size()) throw IndexOutOfBounds("verb", *rule.verb_stop, verb_letters.size());
        verb_keep -= drop;
    }
    std::size_t ending_skip = 0;
    if (rule.ending_start) {
        ending_skip = static_cast<std::size_t>(*rule.ending_start);
        if (ending_skip > ending_letters.size())
            throw IndexOutOfBounds("ending", *rule.ending_start, ending_letters.size());
    }

    LetterSeq merged;
    merged.reserve(verb_keep + rule.postfix.size() + ending_letters.size() - ending_skip);
    merged.insert(merged.end(), verb_letters.begin(), verb_letters.begin() + static_cast<std::ptrdiff_t>(verb_keep));
    merged.insert(merged.end(), rule.postfix.begin(), rule.postfix.end());
    merged.insert(merged.end(), ending_letters.begin() + static_cast<std::ptrdiff_t>(ending_skip),
                  ending_letters.end());
    return merged;
}

std::string apply_rule(const LetterSeq& verb_letters, const LetterSeq& ending_letters, const Rule& rule) {
    return compose(contract_vowels(merge_letters(verb_letters, ending_letters, rule)));
}

Paradigm conjugate(const Lexicon& lexicon, std::string_view verb) {
    const VerbEntry* entry = lexicon.find_verb(verb);
    if (!entry) throw NotFound(std::string(verb));

    // Rules reachable from each ending class, over all of the verb's classes.
    std::array<std::vector<Route>, EndingClassId::kMax> routes;
    for (VerbClassId v : entry->class_ids)
        for (const auto& cell : lexicon.templ().row(v)) routes[cell.ending_class.offset()].push_back({v, cell.rule});

    Paradigm paradigm{entry->surface, entry->class_ids, {}};
    for (int e = 1; e <= EndingClassId::kMax; ++e) {
        const EndingClassId ending_class(e);
        const auto& class_routes = routes[ending_class.offset()];
        if (class_routes.empty()) continue;
        for (std::size_t idx : lexicon.ending_indices_of_class(ending_class)) {
            const EndingEntry& ending = lexicon.endings()[idx];
            ParadigmEntry item{ending, {}};
            for (const Route& route : class_routes)
                add_form(item.forms, apply_rule(entry->letters, ending.letters, *route.rule), *entry, ending,
                         {route.verb_class, ending_class, *route.rule});
            paradigm.entries.push_back(std::move(item));
        }
    }
    return paradigm;
}

std::vector<SurfaceForm> conjugate_pair(const Lexicon& lexicon, std::string_view verb, std::string_view ending) {
    const VerbEntry* entry = lexicon.find_verb(verb);
    if (!entry) throw NotFound(std::string(verb));
    const auto endings = lexicon.find_endings(ending);
    if (endings.empty()) throw NotFound(std::string(ending));

    std::vector<SurfaceForm> forms;
    for (const EndingEntry* e : endings) {
        for (VerbClassId v : entry->class_ids) {
            const auto& rule = lexicon.templ().lookup(v, e->class_id);
            if (!rule) continue;
            add_form(forms, apply_rule(entry->letters, e->letters, *rule), *entry, *e, {v, e->class_id, *rule});
        }
    }
    return forms;
}

std::vector<Paradigm> conjugate_many(const Lexicon& lexicon, std::span<const std::string> verbs) {
    std::vector<Paradigm> out(verbs.size());
    std::vector<std::exception_ptr> errors(verbs.size());
    const auto n = static_cast<std::ptrdiff_t>(verbs.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = conjugate(lexicon, verbs[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    // Report the same error the serial loop would hit first.
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

std::vector<Paradigm> conjugate_many_serial(const Lexicon& lexicon, std::span<const std::string> verbs) {
    std::vector<Paradigm> out;
    out.reserve(verbs.size());
    for (const auto& verb : verbs) out.push_back(conjugate(lexicon, verb));
    return out;
}

}  // namespace kparadigm
