#pragma once

#include <map>
#include <string>
#include <vector>

#include "cogsim/domain.hpp"

namespace cogsim {

struct CategoryTemplates {
    std::vector<std::string> sentence_templates;  // carry {topic}/{detail} slots
    std::vector<std::string> topics;
    std::vector<std::string> details;
    std::vector<std::string> extensions;  // third-sentence templates, {topic} slot
    std::vector<std::string> titles;      // title templates, {topic} slot
};

// Versioned template corpus. File format: UTF-8 JSON whose top-level keys are
// the category names mapping to lists of sentence templates; topic/detail/
// extension/title pools and the filler, vague and off-topic lexicons live
// under reserved "_" keys.
struct TemplateCorpus {
    std::string version;
    std::map<VideoCategory, CategoryTemplates> categories;
    std::vector<std::string> fillers;
    std::vector<std::string> vague;
    std::vector<std::string> offtopic;

    const CategoryTemplates& for_category(VideoCategory c) const;

    static TemplateCorpus builtin();
    static TemplateCorpus load(const std::string& path);
    static TemplateCorpus parse(const std::string& json_text);
};

const char* builtin_corpus_json();

}  // namespace cogsim
