#pragma once

// Conversion between precomposed Hangul text and flat letter sequences.
//
// A Letter is one of the 19 modern onset consonants or one of the 21 medial
// vowels. Position is not part of a letter's identity: the ㄱ that starts 가
// and the ㄱ that closes 각 are the same value. Compound vowels (ㅘ, ㅢ, ...)
// and the doubled consonants ㄲ ㅆ are single letters; compound finals
// (ㄳ, ㄺ, ㅄ, ...) are two.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kparadigm {

enum class HarmonyClass : std::uint8_t { light, dark };

class Letter {
public:
    static constexpr int kConsonantCount = 19;
    static constexpr int kVowelCount = 21;
    static constexpr int kCount = kConsonantCount + kVowelCount;

    /// Consonant by onset index (ㄱ=0 ... ㅎ=18).
    static constexpr Letter consonant(int onset_index) {
        return Letter(static_cast<std::uint8_t>(onset_index));
    }
    /// Vowel by medial index (ㅏ=0 ... ㅣ=20).
    static constexpr Letter vowel(int medial_index) {
        return Letter(static_cast<std::uint8_t>(kConsonantCount + medial_index));
    }
    /// Letter from its index in [0, kCount).
    static constexpr Letter from_index(int index) { return Letter(static_cast<std::uint8_t>(index)); }

    /// Letter for a compatibility jamo code point; nullopt for anything that is
    /// not a single letter (including compound finals such as ㄳ).
    static std::optional<Letter> from_jamo(char32_t cp);

    constexpr bool is_consonant() const { return code_ < kConsonantCount; }
    constexpr bool is_vowel() const { return !is_consonant(); }
    constexpr int index() const { return code_; }
    constexpr int onset_index() const { return code_; }
    constexpr int medial_index() const { return code_ - kConsonantCount; }

    /// Compatibility jamo code point (U+3131..U+3163).
    char32_t jamo() const;

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    constexpr explicit Letter(std::uint8_t code) : code_(code) {}
    std::uint8_t code_;
};

using LetterSeq = std::vector<Letter>;

struct LetterClass {
    bool vowel = false;
    /// Set iff vowel.
    std::optional<HarmonyClass> harmony;

    friend bool operator==(const LetterClass&, const LetterClass&) = default;
};

/// Consonant, or vowel with its harmony class. Light vowels are ㅏ ㅗ ㅑ ㅛ ㅘ ㅚ ㅐ.
LetterClass classify(Letter letter);

/// Splits precomposed syllables (and lone compatibility jamo) into letters.
/// Throws NonHangulInput with the code point index of the first offending character.
LetterSeq decompose(std::string_view text);

/// Packs letters into syllables, greedily attaching trailing consonants as
/// finals unless a consonant is directly followed by a vowel.
/// Throws Uncomposable with the index of the offending letter.
std::string compose(const LetterSeq& seq);

/// Merges every adjacent vowel pair that forms a compound vowel
/// (ㅗ+ㅏ→ㅘ, ㅗ+ㅐ→ㅙ, ㅗ+ㅣ→ㅚ, ㅜ+ㅓ→ㅝ, ㅜ+ㅔ→ㅞ, ㅜ+ㅣ→ㅟ, ㅡ+ㅣ→ㅢ).
/// Sequences without such a pair are returned unchanged.
LetterSeq contract_vowels(const LetterSeq& seq);

/// Compound vowel formed by `first` followed by `second`, if any.
std::optional<Letter> merge_vowels(Letter first, Letter second);

/// Compound-final code point for a consonant pair (ㄱ+ㅅ→ㄳ, ...), if any.
std::optional<char32_t> merge_final(Letter first, Letter second);

/// Letters rendered as compatibility jamo, e.g. "ㄱㅡㄹㅓㅎ".
std::string to_jamo(const LetterSeq& seq);

}  // namespace kparadigm
