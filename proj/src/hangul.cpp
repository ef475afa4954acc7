#include "kparadigm/hangul.hpp"

#include <array>

#include "kparadigm/error.hpp"
#include "kparadigm/utf8.hpp"

namespace kparadigm {

namespace {

constexpr char32_t kSyllableBase = 0xAC00;
constexpr char32_t kSyllableLast = 0xD7A3;
constexpr int kMedialCount = 21;
constexpr int kFinalCount = 28;  // including "no final"
constexpr char32_t kJamoFirst = 0x3131;
constexpr char32_t kJamoVowelFirst = 0x314F;
constexpr char32_t kJamoLast = 0x3163;

// onset index -> compatibility jamo
constexpr std::array<char32_t, Letter::kConsonantCount> kOnsetJamo = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141, 0x3142, 0x3143, 0x3145,
    0x3146, 0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
};

// ㄱ ㄲ ㄴ ㄷ ㄸ ㄹ ㅁ ㅂ ㅃ ㅅ ㅆ ㅇ ㅈ ㅉ ㅊ ㅋ ㅌ ㅍ ㅎ
enum Onset : int { G, GG, N, D, DD, R, M, B, BB, S, SS, NG, J, JJ, CH, K, T, P, H };

struct FinalSpec {
    int first;   // onset index, -1 for "no final"
    int second;  // onset index, -1 unless compound
    char32_t jamo;
};

// final index (0..27) -> constituent letters
constexpr std::array<FinalSpec, kFinalCount> kFinals = {{
    {-1, -1, 0},       {G, -1, 0x3131},  {GG, -1, 0x3132}, {G, S, 0x3133},   {N, -1, 0x3134},
    {N, J, 0x3135},    {N, H, 0x3136},   {D, -1, 0x3137},  {R, -1, 0x3139},  {R, G, 0x313A},
    {R, M, 0x313B},    {R, B, 0x313C},   {R, S, 0x313D},   {R, T, 0x313E},   {R, P, 0x313F},
    {R, H, 0x3140},    {M, -1, 0x3141},  {B, -1, 0x3142},  {B, S, 0x3144},   {S, -1, 0x3145},
    {SS, -1, 0x3146},  {NG, -1, 0x3147}, {J, -1, 0x3148},  {CH, -1, 0x314A}, {K, -1, 0x314B},
    {T, -1, 0x314C},   {P, -1, 0x314D},  {H, -1, 0x314E},
}};

// Lookup tables built once: single/pair letters -> final index.
struct FinalIndex {
    std::array<int, Letter::kConsonantCount> single{};
    std::array<std::array<int, Letter::kConsonantCount>, Letter::kConsonantCount> pair{};
    // compatibility jamo offset -> final index, for lone compound finals
    std::array<int, 0x3164 - kJamoFirst> by_jamo{};

    FinalIndex() {
        single.fill(0);
        for (auto& row : pair) row.fill(0);
        by_jamo.fill(0);
        for (int f = 1; f < kFinalCount; ++f) {
            const auto& spec = kFinals[f];
            if (spec.second < 0)
                single[spec.first] = f;
            else
                pair[spec.first][spec.second] = f;
            by_jamo[spec.jamo - kJamoFirst] = f;
        }
    }
};

const FinalIndex& final_index() {
    static const FinalIndex table;
    return table;
}

// vowel pair -> compound medial index, -1 if none
constexpr int merged_medial(int first, int second) {
    constexpr int O = 8, U = 13, EU = 18;
    if (first == O && second == 0) return 9;    // ㅘ
    if (first == O && second == 1) return 10;   // ㅙ
    if (first == O && second == 20) return 11;  // ㅚ
    if (first == U && second == 4) return 14;   // ㅝ
    if (first == U && second == 5) return 15;   // ㅞ
    if (first == U && second == 20) return 16;  // ㅟ
    if (first == EU && second == 20) return 19; // ㅢ
    return -1;
}

}  // namespace

std::optional<Letter> Letter::from_jamo(char32_t cp) {
    if (cp >= kJamoVowelFirst && cp <= kJamoLast)
        return Letter::vowel(static_cast<int>(cp - kJamoVowelFirst));
    for (int i = 0; i < kConsonantCount; ++i)
        if (kOnsetJamo[i] == cp) return Letter::consonant(i);
    return std::nullopt;
}

char32_t Letter::jamo() const {
    if (is_consonant()) return kOnsetJamo[onset_index()];
    return kJamoVowelFirst + static_cast<char32_t>(medial_index());
}

LetterClass classify(Letter letter) {
    if (letter.is_consonant()) return {};
    switch (letter.medial_index()) {
        case 0:   // ㅏ
        case 1:   // ㅐ
        case 2:   // ㅑ
        case 8:   // ㅗ
        case 9:   // ㅘ
        case 11:  // ㅚ
        case 12:  // ㅛ
            return {true, HarmonyClass::light};
        default:
            return {true, HarmonyClass::dark};
    }
}

LetterSeq decompose(std::string_view text) {
    const auto& finals = final_index();
    LetterSeq out;
    out.reserve(text.size());
    std::size_t offset = 0;
    for (std::size_t pos = 0; offset < text.size(); ++pos) {
        const auto decoded = utf8::next(text, offset);
        if (!decoded) throw NonHangulInput(pos);
        const char32_t cp = *decoded;
        if (cp >= kSyllableBase && cp <= kSyllableLast) {
            const int code = static_cast<int>(cp - kSyllableBase);
            const int onset = code / (kMedialCount * kFinalCount);
            const int medial = (code / kFinalCount) % kMedialCount;
            const int fin = code % kFinalCount;
            out.push_back(Letter::consonant(onset));
            out.push_back(Letter::vowel(medial));
            if (fin != 0) {
                out.push_back(Letter::consonant(kFinals[fin].first));
                if (kFinals[fin].second >= 0) out.push_back(Letter::consonant(kFinals[fin].second));
            }
        } else if (cp >= kJamoFirst && cp <= kJamoLast) {
            if (auto letter = Letter::from_jamo(cp)) {
                out.push_back(*letter);
            } else {
                // lone compound final
                const int fin = finals.by_jamo[cp - kJamoFirst];
                out.push_back(Letter::consonant(kFinals[fin].first));
                out.push_back(Letter::consonant(kFinals[fin].second));
            }
        } else {
            throw NonHangulInput(pos);
        }
    }
    return out;
}

std::string compose(const LetterSeq& seq) {
    const auto& finals = final_index();
    std::string out;
    out.reserve(seq.size() * 2);
    const std::size_t n = seq.size();
    std::size_t i = 0;
    while (i < n) {
        if (!seq[i].is_consonant()) throw Uncomposable(i);
        if (i + 1 >= n || !seq[i + 1].is_vowel()) throw Uncomposable(i);
        const int onset = seq[i].onset_index();
        const int medial = seq[i + 1].medial_index();

        std::size_t run_begin = i + 2;
        std::size_t run_end = run_begin;
        while (run_end < n && seq[run_end].is_consonant()) ++run_end;
        const std::size_t run = run_end - run_begin;
        if (run == 0 && run_end < n) throw Uncomposable(run_end);  // vowel after vowel

        // A consonant directly followed by a vowel opens the next syllable.
        const std::size_t final_len = (run_end < n) ? run - 1 : run;
        int fin = 0;
        if (final_len == 1) {
            fin = finals.single[seq[run_begin].onset_index()];
            if (fin == 0) throw Uncomposable(run_begin);  // ㄸ ㅃ ㅉ
        } else if (final_len == 2) {
            fin = finals.pair[seq[run_begin].onset_index()][seq[run_begin + 1].onset_index()];
            if (fin == 0) throw Uncomposable(run_begin + 1);
        } else if (final_len > 2) {
            throw Uncomposable(run_begin + 2);
        }
        utf8::append(out, kSyllableBase +
                              static_cast<char32_t>((onset * kMedialCount + medial) * kFinalCount + fin));
        i = run_begin + final_len;
    }
    return out;
}

std::optional<Letter> merge_vowels(Letter first, Letter second) {
    if (!first.is_vowel() || !second.is_vowel()) return std::nullopt;
    const int merged = merged_medial(first.medial_index(), second.medial_index());
    if (merged < 0) return std::nullopt;
    return Letter::vowel(merged);
}

std::optional<char32_t> merge_final(Letter first, Letter second) {
    if (!first.is_consonant() || !second.is_consonant()) return std::nullopt;
    const int fin = final_index().pair[first.onset_index()][second.onset_index()];
    if (fin == 0) return std::nullopt;
    return kFinals[fin].jamo;
}

LetterSeq contract_vowels(const LetterSeq& seq) {
    LetterSeq out;
    out.reserve(seq.size());
    for (Letter letter : seq) {
        if (!out.empty()) {
            if (auto merged = merge_vowels(out.back(), letter)) {
                out.back() = *merged;
                continue;
            }
        }
        out.push_back(letter);
    }
    return out;
}

std::string to_jamo(const LetterSeq& seq) {
    std::string out;
    out.reserve(seq.size() * 3);
    for (Letter letter : seq) utf8::append(out, letter.jamo());
    return out;
}

}  // namespace kparadigm
