#include "kparadigm/lemmatizer.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

#include "kparadigm/error.hpp"

namespace kparadigm {

namespace {

std::vector<std::string> resolve_scope(const Lexicon& lexicon, const std::optional<std::vector<std::string>>& verbs) {
    std::vector<std::string> scope;
    if (!verbs) {
        scope.reserve(lexicon.verbs().size());
        for (const auto& verb : lexicon.verbs()) scope.push_back(verb.surface);
        return scope;
    }
    for (const auto& verb : *verbs) {
        if (!lexicon.find_verb(verb)) throw NotFound(verb);
        if (std::find(scope.begin(), scope.end(), verb) == scope.end()) scope.push_back(verb);
    }
    return scope;
}

}  // namespace

FormIndex index_paradigms(std::vector<std::string> scope, const std::vector<Paradigm>& paradigms) {
    FormIndex index;
    index.scope_ = std::move(scope);
    for (const auto& paradigm : paradigms)
        for (const auto& entry : paradigm.entries)
            for (const auto& form : entry.forms) {
                auto& bucket = index.forms_[form.text];
                for (const auto& d : form.derivations)
                    bucket.push_back({form.verb, form.ending, d.verb_class, d.ending_class});
            }
    for (auto& [text, bucket] : index.forms_) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    return index;
}

FormIndex build_index(const Lexicon& lexicon, const std::optional<std::vector<std::string>>& verbs) {
    auto scope = resolve_scope(lexicon, verbs);
    const auto paradigms = conjugate_many(lexicon, scope);
    return index_paradigms(std::move(scope), paradigms);
}

FormIndex build_index_serial(const Lexicon& lexicon, const std::optional<std::vector<std::string>>& verbs) {
    auto scope = resolve_scope(lexicon, verbs);
    const auto paradigms = conjugate_many_serial(lexicon, scope);
    return index_paradigms(std::move(scope), paradigms);
}

std::span<const LemmaCandidate> FormIndex::find(std::string_view form) const {
    const auto it = forms_.find(form);
    if (it == forms_.end()) return {};
    return it->second;
}

std::vector<LemmaCandidate> lemmatize(const FormIndex& index, std::string_view form) {
    const auto found = index.find(form);
    return {found.begin(), found.end()};
}

void FormIndex::write_tsv(std::ostream& out) const {
    for (const auto& [text, bucket] : forms_)
        for (const auto& c : bucket)
            out << text << '\t' << c.verb << '\t' << c.ending << '\t' << c.verb_class.value() << '\t'
                << c.ending_class.value() << '\n';
}

FormIndex FormIndex::read_tsv(std::istream& in, const std::string& source_name) {
    FormIndex index;
    std::set<std::string> seen_verbs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (auto pos = rest.find('\t'); pos != std::string_view::npos; pos = rest.find('\t')) {
            fields.push_back(rest.substr(0, pos));
            rest.remove_prefix(pos + 1);
        }
        fields.push_back(rest);
        if (fields.size() != 5) throw ParseError(source_name, line_no, "expected 5 tab-separated fields");
        int ids[2] = {0, 0};
        for (int k = 0; k < 2; ++k) {
            const auto f = fields[3 + static_cast<std::size_t>(k)];
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), ids[k]);
            if (ec != std::errc() || ptr != f.data() + f.size())
                throw ParseError(source_name, line_no, "class id is not an integer");
        }
        index.forms_[std::string(fields[0])].push_back(
            {std::string(fields[1]), std::string(fields[2]), VerbClassId(ids[0]), EndingClassId(ids[1])});
        if (seen_verbs.insert(std::string(fields[1])).second) index.scope_.emplace_back(fields[1]);
    }
    for (auto& [text, bucket] : index.forms_) std::sort(bucket.begin(), bucket.end());
    return index;
}

}  // namespace kparadigm
