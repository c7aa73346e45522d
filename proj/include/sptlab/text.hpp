// Copyright 2026 the sptlab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sptlab {

// Collapses whitespace runs to single spaces and trims the ends.
std::string normalize_ws(std::string_view text);

std::vector<std::string> split_words(std::string_view text);

std::string join_words(const std::vector<std::string>& words);

std::string to_lower(std::string_view text);

// A whitespace-normalized sentence plus its word list. Words are the unit
// of segmentation and of the word-level tokenizer.
struct Sentence {
    std::string text;                 // normalized
    std::vector<std::string> words;

    static Sentence from_text(std::string_view raw);
    int word_count() const { return static_cast<int>(words.size()); }
};

}  // namespace sptlab
