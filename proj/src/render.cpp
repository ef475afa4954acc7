#include "kparadigm/render.hpp"

#include <sstream>

namespace kparadigm {

namespace {

std::string join_derivations(const std::vector<Derivation>& derivations) {
    std::string out;
    for (const auto& d : derivations) {
        if (!out.empty()) out += ';';
        out += to_string(d.verb_class) + ':' + serialize_rule(d.rule);
    }
    return out;
}

Json derivations_json(const std::vector<Derivation>& derivations) {
    Json arr = Json::array();
    for (const auto& d : derivations)
        arr.push_back({{"verb_class", d.verb_class.value()},
                       {"ending_class", d.ending_class.value()},
                       {"rule", serialize_rule(d.rule)}});
    return arr;
}

std::string subject_name(Subject s) { return s == Subject::verb ? "verb" : "ending"; }

}  // namespace

Json to_json(const Paradigm& paradigm) {
    Json classes = Json::array();
    for (auto v : paradigm.verb_classes) classes.push_back(v.value());
    Json entries = Json::array();
    for (const auto& entry : paradigm.entries) {
        Json forms = Json::array();
        for (const auto& form : entry.forms)
            forms.push_back({{"text", form.text}, {"derivations", derivations_json(form.derivations)}});
        entries.push_back({{"ending", entry.ending.surface},
                           {"ending_class", entry.ending.class_id.value()},
                           {"forms", std::move(forms)}});
    }
    return {{"verb", paradigm.verb}, {"verb_classes", std::move(classes)}, {"entries", std::move(entries)}};
}

Paradigm paradigm_from_json(const Json& doc) {
    Paradigm paradigm;
    paradigm.verb = doc.at("verb").get<std::string>();
    for (const auto& v : doc.at("verb_classes")) paradigm.verb_classes.emplace_back(v.get<int>());
    for (const auto& e : doc.at("entries")) {
        const auto surface = e.at("ending").get<std::string>();
        ParadigmEntry entry{{surface, EndingClassId(e.at("ending_class").get<int>()), decompose(surface)}, {}};
        for (const auto& f : e.at("forms")) {
            SurfaceForm form{f.at("text").get<std::string>(), paradigm.verb, surface, {}};
            for (const auto& d : f.at("derivations"))
                form.derivations.push_back({VerbClassId(d.at("verb_class").get<int>()),
                                            EndingClassId(d.at("ending_class").get<int>()),
                                            parse_rule(d.at("rule").get<std::string>())});
            entry.forms.push_back(std::move(form));
        }
        paradigm.entries.push_back(std::move(entry));
    }
    return paradigm;
}

std::string render_paradigm(const Paradigm& paradigm, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::json:
            out << to_json(paradigm).dump(2) << '\n';
            break;
        case OutputFormat::tsv:
            for (const auto& entry : paradigm.entries)
                for (const auto& form : entry.forms)
                    out << paradigm.verb << '\t' << entry.ending.class_id.value() << '\t' << entry.ending.surface
                        << '\t' << form.text << '\t' << join_derivations(form.derivations) << '\n';
            break;
        case OutputFormat::table: {
            out << paradigm.verb << "  (verb class";
            for (std::size_t i = 0; i < paradigm.verb_classes.size(); ++i)
                out << (i ? ", " : " ") << paradigm.verb_classes[i].value();
            out << ")\n";
            int current = 0;
            for (const auto& entry : paradigm.entries) {
                if (entry.ending.class_id.value() != current) {
                    current = entry.ending.class_id.value();
                    out << "\n[ending class " << current << "]\n";
                }
                out << "  -" << entry.ending.surface << "\t";
                for (std::size_t i = 0; i < entry.forms.size(); ++i) out << (i ? ", " : "") << entry.forms[i].text;
                out << '\n';
            }
            out << "\n" << paradigm.form_count() << " forms\n";
            break;
        }
    }
    return out.str();
}

std::string render_forms(std::string_view verb, std::string_view ending, const std::vector<SurfaceForm>& forms,
                         OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& form : forms)
                arr.push_back({{"text", form.text},
                               {"ending_class", form.ending_class().value()},
                               {"derivations", derivations_json(form.derivations)}});
            Json doc{{"verb", verb}, {"ending", ending}, {"forms", std::move(arr)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv:
            for (const auto& form : forms)
                out << verb << '\t' << form.ending_class().value() << '\t' << ending << '\t' << form.text << '\t'
                    << join_derivations(form.derivations) << '\n';
            break;
        case OutputFormat::table:
            for (const auto& form : forms) {
                out << verb << " + " << ending << " -> " << form.text;
                for (const auto& d : form.derivations)
                    out << "  [" << d.verb_class.value() << " x " << d.ending_class.value() << ": "
                        << serialize_rule(d.rule) << "]";
                out << '\n';
            }
            break;
    }
    return out.str();
}

std::string render_candidates(std::string_view form, const std::vector<LemmaCandidate>& candidates,
                              OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& c : candidates)
                arr.push_back({{"verb", c.verb},
                               {"ending", c.ending},
                               {"verb_class", c.verb_class.value()},
                               {"ending_class", c.ending_class.value()}});
            Json doc{{"form", form}, {"candidates", std::move(arr)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv:
            for (const auto& c : candidates)
                out << form << '\t' << c.verb << '\t' << c.ending << '\t' << c.verb_class.value() << '\t'
                    << c.ending_class.value() << '\n';
            break;
        case OutputFormat::table:
            for (const auto& c : candidates)
                out << form << " <- " << c.verb << " + -" << c.ending << "  (verb class " << c.verb_class.value()
                    << ", ending class " << c.ending_class.value() << ")\n";
            break;
    }
    return out.str();
}

std::string render_violations(const std::vector<Violation>& violations, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& v : violations)
                arr.push_back({{"subject", subject_name(v.expectation.subject)},
                               {"surface", v.surface},
                               {"class_id", v.expectation.class_id},
                               {"predicate", to_string(v.expectation.predicate)},
                               {"expected", v.expectation.expected}});
            Json doc{{"violations", std::move(arr)}, {"count", violations.size()}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::tsv:
            for (const auto& v : violations)
                out << subject_name(v.expectation.subject) << '\t' << v.surface << '\t' << v.expectation.class_id
                    << '\t' << to_string(v.expectation.predicate) << '\t'
                    << (v.expectation.expected ? "true" : "false") << '\n';
            break;
        case OutputFormat::table:
            for (const auto& v : violations) out << describe(v) << '\n';
            out << violations.size() << (violations.size() == 1 ? " violation\n" : " violations\n");
            break;
    }
    return out.str();
}

std::string render_classes(const Lexicon& lexicon, bool verbs, bool endings, OutputFormat format) {
    std::vector<std::vector<std::string>> verb_members(VerbClassId::kMax);
    for (const auto& verb : lexicon.verbs())
        for (auto v : verb.class_ids) verb_members[v.offset()].push_back(verb.surface);
    std::vector<std::vector<std::string>> ending_members(EndingClassId::kMax);
    for (const auto& ending : lexicon.endings()) ending_members[ending.class_id.offset()].push_back(ending.surface);

    std::ostringstream out;
    if (format == OutputFormat::json) {
        Json doc = Json::object();
        auto section = [](const std::vector<std::vector<std::string>>& members) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < members.size(); ++i) obj[std::to_string(i + 1)] = members[i];
            return obj;
        };
        if (verbs) doc["verb_classes"] = section(verb_members);
        if (endings) doc["ending_classes"] = section(ending_members);
        out << doc.dump(2) << '\n';
        return out.str();
    }

    auto emit = [&](const char* label, const std::vector<std::vector<std::string>>& members) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (format == OutputFormat::tsv) {
                out << label << '\t' << i + 1 << '\t';
                for (std::size_t k = 0; k < members[i].size(); ++k) out << (k ? "," : "") << members[i][k];
            } else {
                out << label << " class " << i + 1 << ":";
                for (const auto& m : members[i]) out << ' ' << m;
            }
            out << '\n';
        }
    };
    if (verbs) emit("verb", verb_members);
    if (endings) emit("ending", ending_members);
    return out.str();
}

}  // namespace kparadigm
