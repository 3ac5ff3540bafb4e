#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cogsim {

// Tokenization contract shared by the embedder and the n-gram metrics:
// ASCII lowercase, any non-alphanumeric byte is a separator. Fixed so that
// scores are bit-stable across runs and platforms.
std::vector<std::string> tokenize(std::string_view text);

// Splits on '.', '!' and '?'; returns trimmed sentences without their
// terminators, empty chunks dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Joins sentences back into a paragraph, one period per sentence.
std::string join_sentences(const std::vector<std::string>& sentences);

bool is_stopword(std::string_view token);

// Replaces every occurrence of `slot` (e.g. "{topic}") in `tmpl`.
std::string fill_slot(std::string tmpl, std::string_view slot,
                      std::string_view value);

}  // namespace cogsim
