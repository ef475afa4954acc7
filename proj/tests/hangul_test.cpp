#include "gtest/gtest.h"

#include <random>
#include <set>
#include <string>

#include "kparadigm/error.hpp"
#include "kparadigm/hangul.hpp"
#include "kparadigm/utf8.hpp"
#include "support.hpp"

using namespace kparadigm;
using support::spaced;

namespace {

LetterSeq letters(std::u32string_view jamo) {
    LetterSeq seq;
    for (char32_t c : jamo) seq.push_back(*Letter::from_jamo(c));
    return seq;
}

std::string syllable(char32_t cp) { return utf8::encode(std::u32string(1, cp)); }

template <class Fn>
std::size_t uncomposable_at(Fn&& fn) {
    try {
        fn();
    } catch (const Uncomposable& e) {
        return e.position();
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(Decompose, Examples) {
    EXPECT_EQ(spaced(decompose("그렇")), "ㄱ ㅡ ㄹ ㅓ ㅎ");
    EXPECT_EQ(spaced(decompose("어야")), "ㅇ ㅓ ㅇ ㅑ");
    EXPECT_EQ(spaced(decompose("없")), "ㅇ ㅓ ㅂ ㅅ");
    EXPECT_TRUE(decompose("").empty());
}

TEST(Decompose, ArithmeticOracleForEobs) {
    // 없 = U+C5C6; offset 0x19C6 = (11 * 21 + 4) * 28 + 18.
    const char32_t cp = U'없';
    const int offset = static_cast<int>(cp - 0xAC00);
    EXPECT_EQ(offset / 588, 11);
    EXPECT_EQ(offset % 588 / 28, 4);
    EXPECT_EQ(offset % 28, 18);
    const LetterSeq expected{Letter::consonant(11), Letter::vowel(4), *Letter::from_jamo(U'ㅂ'),
                             *Letter::from_jamo(U'ㅅ')};
    EXPECT_EQ(decompose(syllable(cp)), expected);
}

TEST(Decompose, CompoundFinalsSplitCompoundVowelsDoNot) {
    EXPECT_EQ(spaced(decompose("값")), "ㄱ ㅏ ㅂ ㅅ");
    EXPECT_EQ(spaced(decompose("닭")), "ㄷ ㅏ ㄹ ㄱ");
    EXPECT_EQ(spaced(decompose("와")), "ㅇ ㅘ");
    EXPECT_EQ(spaced(decompose("있")), "ㅇ ㅣ ㅆ");
    EXPECT_EQ(spaced(decompose("ㅂ니다")), "ㅂ ㄴ ㅣ ㄷ ㅏ");
    EXPECT_EQ(spaced(decompose("ㄳ")), "ㄱ ㅅ");
}

TEST(Decompose, LetterCountMatchesSyllableArithmetic) {
    // Final indices that name a two-consonant cluster.
    const std::set<int> compound{3, 5, 6, 9, 10, 11, 12, 13, 14, 15, 18};
    for (char32_t cp = 0xAC00; cp <= 0xD7A3; ++cp) {
        const int fin = static_cast<int>(cp - 0xAC00) % 28;
        const std::size_t expected = 2 + (fin == 0 ? 0 : compound.count(fin) ? 2 : 1);
        const auto seq = decompose(syllable(cp));
        ASSERT_EQ(seq.size(), expected) << syllable(cp);
        ASSERT_EQ(seq[0], Letter::consonant(static_cast<int>(cp - 0xAC00) / 588));
        ASSERT_EQ(seq[1], Letter::vowel(static_cast<int>(cp - 0xAC00) % 588 / 28));
    }
}

TEST(Decompose, RejectsNonHangul) {
    try {
        decompose("그a렇");
        FAIL();
    } catch (const NonHangulInput& e) {
        EXPECT_EQ(e.position(), 1u);
    }
    EXPECT_THROW(decompose("ㆍ"), NonHangulInput);
    EXPECT_THROW(decompose(" "), NonHangulInput);
    EXPECT_THROW(decompose("\xff"), NonHangulInput);
    EXPECT_THROW(decompose("\xea\xb0"), NonHangulInput);
    // Conjoining (NFD) jamo are rejected rather than normalized.
    EXPECT_THROW(decompose("\u1100\u1161"), NonHangulInput);
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose(letters(U"ㄱㅡㄹㅐㅇㅑ")), "그래야");
    EXPECT_EQ(compose(letters(U"ㅁㅗㄹㄹㅏ")), "몰라");
    EXPECT_EQ(compose(letters(U"ㄷㅗㅇㅘ")), "도와");
    EXPECT_EQ(compose(letters(U"ㅇㅓㅂㅅ")), "없");
    EXPECT_EQ(compose(letters(U"ㅇㅓㅂㅅㅇㅓ")), "없어");
    EXPECT_EQ(compose(letters(U"ㅇㅓㅂㅅㅓ")), "업서");
    EXPECT_EQ(compose({}), "");
}

TEST(Compose, ErrorPositions) {
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㅏㄱ")); }), 0u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㄱㅏㅏ")); }), 2u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㄱㅏㄸ")); }), 2u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㄱㅏㄱㄷ")); }), 3u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㄱㅏㄹㄱㅅ")); }), 4u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㄱ")); }), 0u);
    EXPECT_EQ(uncomposable_at([] { compose(letters(U"ㅂㄴㅣㄷㅏ")); }), 0u);
}

TEST(Compose, RoundTripsEverySyllable) {
    std::string all;
    for (char32_t cp = 0xAC00; cp <= 0xD7A3; ++cp) {
        const auto s = syllable(cp);
        ASSERT_EQ(compose(decompose(s)), s);
        all += s;
    }
    // Every syllable carries an onset, so a consonant run before a vowel always
    // ends in that onset and whole strings round trip too.
    EXPECT_EQ(compose(decompose(all)), all);
}

TEST(Compose, RoundTripsRandomWords) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> pick(0, 11171), len(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        std::u32string word;
        for (int i = len(rng); i > 0; --i) word += static_cast<char32_t>(0xAC00 + pick(rng));
        const auto text = utf8::encode(word);
        const auto seq = decompose(text);
        ASSERT_EQ(compose(seq), text);
        ASSERT_EQ(decompose(compose(seq)), seq);
    }
}

TEST(Classify, VowelHarmony) {
    const auto a = classify(*Letter::from_jamo(U'ㅏ'));
    EXPECT_TRUE(a.vowel);
    EXPECT_EQ(a.harmony, HarmonyClass::light);
    const auto eo = classify(*Letter::from_jamo(U'ㅓ'));
    EXPECT_TRUE(eo.vowel);
    EXPECT_EQ(eo.harmony, HarmonyClass::dark);
    const auto rieul = classify(*Letter::from_jamo(U'ㄹ'));
    EXPECT_FALSE(rieul.vowel);
    EXPECT_FALSE(rieul.harmony.has_value());

    int light = 0;
    for (int m = 0; m < Letter::kVowelCount; ++m) light += classify(Letter::vowel(m)).harmony == HarmonyClass::light;
    EXPECT_EQ(light, 7);
}

TEST(Letters, JamoRoundTrip) {
    for (int i = 0; i < Letter::kCount; ++i) {
        const auto l = Letter::from_index(i);
        EXPECT_EQ(Letter::from_jamo(l.jamo()), l);
    }
    EXPECT_FALSE(Letter::from_jamo(U'ㄳ').has_value());
    EXPECT_FALSE(Letter::from_jamo(U'a').has_value());
}

TEST(ContractVowels, MergesTheSevenPairs) {
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅗㅏ"))), "ㅘ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅗㅐ"))), "ㅙ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅗㅣ"))), "ㅚ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅜㅓ"))), "ㅝ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅜㅔ"))), "ㅞ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅜㅣ"))), "ㅟ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅡㅣ"))), "ㅢ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㅏㅏ"))), "ㅏ ㅏ");
    EXPECT_EQ(spaced(contract_vowels(letters(U"ㄱㅡㄹㅐㅇㅑ"))), "ㄱ ㅡ ㄹ ㅐ ㅇ ㅑ");
}

TEST(MergeFinal, KnownClusters) {
    EXPECT_EQ(merge_final(*Letter::from_jamo(U'ㄹ'), *Letter::from_jamo(U'ㄱ')), U'ㄺ');
    EXPECT_EQ(merge_final(*Letter::from_jamo(U'ㅂ'), *Letter::from_jamo(U'ㅅ')), U'ㅄ');
    EXPECT_FALSE(merge_final(*Letter::from_jamo(U'ㄱ'), *Letter::from_jamo(U'ㄷ')).has_value());
}
