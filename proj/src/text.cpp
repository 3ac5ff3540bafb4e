#include "cogsim/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace cogsim {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::string current;
    for (char c : text) {
        if (c == '.' || c == '!' || c == '?') {
            // trim
            const auto begin = current.find_first_not_of(" \t\n\r");
            if (begin != std::string::npos) {
                const auto end = current.find_last_not_of(" \t\n\r");
                sentences.push_back(current.substr(begin, end - begin + 1));
            }
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    const auto begin = current.find_first_not_of(" \t\n\r");
    if (begin != std::string::npos) {
        const auto end = current.find_last_not_of(" \t\n\r");
        sentences.push_back(current.substr(begin, end - begin + 1));
    }
    return sentences;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
    std::string out;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (i > 0) out += ' ';
        out += sentences[i];
        out += '.';
    }
    return out;
}

bool is_stopword(std::string_view token) {
    static const std::unordered_set<std::string_view> kStopwords = {
        "the",  "a",     "an",    "and",   "or",    "of",    "in",    "on",
        "to",   "it",    "this",  "that",  "with",  "for",   "at",    "by",
        "from", "was",   "were",  "is",    "are",   "be",    "been",  "before",
        "after", "near", "about", "its",   "their", "his",   "her",   "our",
        "your", "my",    "we",    "they",  "he",    "she",   "you",   "i",
        "as",   "but",   "not",   "no",    "any",   "each",  "out",   "up",
        "off",  "over",  "under", "through", "into", "while", "without"};
    return kStopwords.count(token) > 0;
}

std::string fill_slot(std::string tmpl, std::string_view slot,
                      std::string_view value) {
    std::size_t pos = 0;
    while ((pos = tmpl.find(slot, pos)) != std::string::npos) {
        tmpl.replace(pos, slot.size(), value);
        pos += value.size();
    }
    return tmpl;
}

}  // namespace cogsim
