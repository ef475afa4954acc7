#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kparadigm/hangul.hpp"
#include "kparadigm/lexicon.hpp"
#include "kparadigm/rule.hpp"

namespace kparadigm {

/// One (verb class, ending class, rule) route that produced a form.
struct Derivation {
    VerbClassId verb_class;
    EndingClassId ending_class;
    Rule rule;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// A generated word form. When several verb classes yield the same text for
/// one ending, the form is kept once and every route is listed in
/// `derivations` (first route first).
struct SurfaceForm {
    std::string text;
    std::string verb;
    std::string ending;
    std::vector<Derivation> derivations;  // non-empty

    VerbClassId verb_class() const { return derivations.front().verb_class; }
    EndingClassId ending_class() const { return derivations.front().ending_class; }
    const Rule& rule() const { return derivations.front().rule; }

    friend bool operator==(const SurfaceForm&, const SurfaceForm&) = default;
};

struct ParadigmEntry {
    EndingEntry ending;
    std::vector<SurfaceForm> forms;

    friend bool operator==(const ParadigmEntry&, const ParadigmEntry&) = default;
};

/// All forms of one verb, ordered by ending class id and then lexicon order.
struct Paradigm {
    std::string verb;
    std::vector<VerbClassId> verb_classes;
    std::vector<ParadigmEntry> entries;

    std::size_t form_count() const;

    friend bool operator==(const Paradigm&, const Paradigm&) = default;
};

/// verb_letters[:stop] + postfix + ending_letters[start:], before vowel contraction.
/// Throws IndexOutOfBounds when a slice index exceeds its sequence.
LetterSeq merge_letters(const LetterSeq& verb_letters, const LetterSeq& ending_letters, const Rule& rule);

/// Combines a verb and an ending under `rule` and composes the result into
/// syllables. Adjacent vowels that form a compound vowel are contracted first
/// (보 + ㅏ → 봐). Throws IndexOutOfBounds or Uncomposable.
std::string apply_rule(const LetterSeq& verb_letters, const LetterSeq& ending_letters, const Rule& rule);

/// Throws NotFound when the verb is not in the lexicon.
Paradigm conjugate(const Lexicon& lexicon, std::string_view verb);

/// Forms for one verb and one ending surface, across every class pairing with
/// a rule. Empty when all cells are blank. Throws NotFound for either side.
std::vector<SurfaceForm> conjugate_pair(const Lexicon& lexicon, std::string_view verb, std::string_view ending);

/// Paradigms for many verbs in input order. Parallel over verbs (OpenMP).
std::vector<Paradigm> conjugate_many(const Lexicon& lexicon, std::span<const std::string> verbs);

/// Single-threaded reference for conjugate_many.
std::vector<Paradigm> conjugate_many_serial(const Lexicon& lexicon, std::span<const std::string> verbs);

}  // namespace kparadigm
