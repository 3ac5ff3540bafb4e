#include "cogsim/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cogsim {

namespace {

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const std::string& where) {
    if (!j.is_array()) throw ParseError("expected list at " + where);
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("expected string in " + where);
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

const CategoryTemplates& TemplateCorpus::for_category(VideoCategory c) const {
    const auto it = categories.find(c);
    if (it == categories.end()) {
        throw ConfigError("corpus has no templates for category " +
                          std::string(to_string(c)));
    }
    return it->second;
}

TemplateCorpus TemplateCorpus::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("corpus JSON invalid: ") + e.what());
    }

    TemplateCorpus corpus;
    corpus.version = j.value("_version", std::string("unversioned"));
    corpus.fillers = string_list(j.at("_fillers"), "_fillers");
    corpus.vague = string_list(j.at("_vague"), "_vague");
    corpus.offtopic = string_list(j.at("_offtopic"), "_offtopic");

    const auto& topics = j.at("_topics");
    const auto& details = j.at("_details");
    const auto& extensions = j.at("_extensions");
    const auto& titles = j.at("_titles");

    for (VideoCategory c : all_categories()) {
        const std::string name(to_string(c));
        if (!j.contains(name)) {
            throw ParseError("corpus missing category key: " + name);
        }
        CategoryTemplates ct;
        ct.sentence_templates = string_list(j.at(name), name);
        ct.topics = string_list(topics.at(name), "_topics." + name);
        ct.details = string_list(details.at(name), "_details." + name);
        ct.extensions = string_list(extensions.at(name), "_extensions." + name);
        ct.titles = string_list(titles.at(name), "_titles." + name);
        if (ct.sentence_templates.size() < 2) {
            throw ParseError("category " + name + " needs >= 2 templates");
        }
        if (ct.topics.empty() || ct.details.empty() || ct.extensions.empty() ||
            ct.titles.empty()) {
            throw ParseError("category " + name + " has an empty pool");
        }
        corpus.categories.emplace(c, std::move(ct));
    }
    return corpus;
}

TemplateCorpus TemplateCorpus::builtin() {
    return parse(builtin_corpus_json());
}

TemplateCorpus TemplateCorpus::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace cogsim
