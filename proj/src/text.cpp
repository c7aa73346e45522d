// Copyright 2026 the sptlab authors
// SPDX-License-Identifier: Apache-2.0
#include "sptlab/text.hpp"

#include <cctype>

namespace sptlab {

static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string normalize_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_space = true;  // trims leading space
    for (char c : text) {
        if (is_space(c)) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        size_t start = i;
        while (i < n && !is_space(text[i])) ++i;
        if (i > start) words.emplace_back(text.substr(start, i - start));
    }
    return words;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) out.push_back(' ');
        out += words[i];
    }
    return out;
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

Sentence Sentence::from_text(std::string_view raw) {
    Sentence s;
    s.text = normalize_ws(raw);
    s.words = split_words(s.text);
    return s;
}

}  // namespace sptlab
