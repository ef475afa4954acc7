#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kparadigm/conjugator.hpp"
#include "kparadigm/lemmatizer.hpp"
#include "kparadigm/lexicon.hpp"

namespace kparadigm {

enum class OutputFormat { table, json, tsv };

using Json = nlohmann::ordered_json;

Json to_json(const Paradigm& paradigm);
/// Inverse of to_json(Paradigm). Throws nlohmann::json::exception or MalformedRule on bad input.
Paradigm paradigm_from_json(const Json& doc);

std::string render_paradigm(const Paradigm& paradigm, OutputFormat format);
std::string render_forms(std::string_view verb, std::string_view ending, const std::vector<SurfaceForm>& forms,
                         OutputFormat format);
std::string render_candidates(std::string_view form, const std::vector<LemmaCandidate>& candidates,
                              OutputFormat format);
std::string render_violations(const std::vector<Violation>& violations, OutputFormat format);
std::string render_classes(const Lexicon& lexicon, bool verbs, bool endings, OutputFormat format);

}  // namespace kparadigm
