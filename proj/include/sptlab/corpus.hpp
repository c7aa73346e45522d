// Copyright 2026 the sptlab authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded synthetic datasets: celebrity-style parent/child facts rendered in
// the four training formats D1-D4 and probed by the eight question formats
// Q1-Q8, person/description pairs, and instruction-style QA pairs. All
// generation is a pure function of (seed, config); regeneration is
// byte-identical.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sptlab/rng.hpp"

namespace sptlab {

enum class ParentType { Father, Mother };
enum class DataFormat { D1, D2, D3, D4 };
enum class QuestionFormat { Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8 };
enum class Direction { Same, Reverse };

const char* to_string(ParentType t);
const char* to_string(DataFormat f);
const char* to_string(QuestionFormat q);
const char* to_string(Direction d);
DataFormat data_format_from_string(const std::string& s);
QuestionFormat question_format_from_string(const std::string& s);

struct Fact {
    std::string child_name;
    std::string parent_name;
    ParentType parent_type = ParentType::Father;
    int id = 0;
};

using FactSet = std::vector<Fact>;

// Evaluation prompt/completion pair. `qformat` is "Q1".."Q8" for the
// question grid, "Tfwd"/"Trev" for training-template probes, or a task id
// such as "d1-p1" / "qa" for the other datasets.
struct EvalItem {
    std::string prompt;
    std::string gold_completion;
    std::string qformat;
    Direction direction_vs_training = Direction::Same;
    std::string metric = "accuracy";  // "accuracy" | "bleu"
    int id = 0;
};

// ---------------------------------------------------------------------------
// Celebrity relations
// ---------------------------------------------------------------------------

// Exactly n facts; names are unique within the set and namespaced by seed,
// so distinct seeds can never collide on an entity name.
FactSet gen_fact_set(int n, uint64_t seed);

// D1: "A's father is B."  D2: "A is B's child."
// D3: "B is A's father."  D4: "B's child is A."
std::string render_training_sentence(const Fact& fact, DataFormat format);

// Question per Q1-Q8. Direction is same iff the child/parent order of the
// question matches the order of the training format.
EvalItem render_question(const Fact& fact, QuestionFormat qformat, DataFormat train_format);

Direction question_direction(DataFormat train_format, QuestionFormat qformat);

// Completion probes built from the training template itself: the forward
// probe is the sentence truncated before its final name span; the reverse
// probe prompts with the trailing entity span and expects the rest of the
// sentence in reversed chunk order. These are what a small from-scratch
// model can meaningfully answer.
EvalItem render_template_probe(const Fact& fact, DataFormat train_format, Direction direction);

// 5-shot question prompt, optionally with the symmetric-relation reasoning
// path spelled out in each demonstration answer. Demonstrations are drawn
// from `demos` and must not contain the queried fact.
std::string build_fewshot_prompt(const Fact& fact, QuestionFormat qformat,
                                 DataFormat train_format, bool cot,
                                 const std::vector<Fact>& demos);

// ---------------------------------------------------------------------------
// Person descriptions
// ---------------------------------------------------------------------------

enum class DescSubset { D1, D2, D3 };
enum class DescDirection { Person2Desc, Desc2Person, Both };
enum class DescSplit { Train, TestSame, TestReverse };

const char* to_string(DescSubset s);
const char* to_string(DescDirection d);
const char* to_string(DescSplit s);

struct PersonDescItem {
    std::string person;
    std::string description;  // "the <superlative> <role> who <event>"
    DescSubset subset = DescSubset::D1;
    DescDirection direction = DescDirection::Desc2Person;
    DescSplit split = DescSplit::Train;
    std::string text;    // train rendering
    std::string prompt;  // test rendering
    std::string completion;
    int id = 0;
};

struct PersonDescCounts {
    int train_per_subset = 900;  // D3 gets this many per direction
    int test_per_direction = 300;
};

// Subset D1 trains desc->person only, D2 person->desc only, D3 both
// directions. Train and test templates come from disjoint pools.
std::vector<PersonDescItem> gen_person_desc(const PersonDescCounts& counts, uint64_t seed);

// ---------------------------------------------------------------------------
// Question answering
// ---------------------------------------------------------------------------

enum class QADirection { Q2A, A2Q };
enum class QASplit { Train, Test };

const char* to_string(QADirection d);
const char* to_string(QASplit s);

struct QAItem {
    std::string question;  // "When did the <event> end?"
    std::string answer;    // unique year
    QADirection direction = QADirection::Q2A;
    QASplit split = QASplit::Train;
    int id = 0;
};

// n_two_dir facts trained in both directions plus n_a2q facts trained
// A2Q-only; the test set is those exact n_a2q facts in both renderings.
std::vector<QAItem> gen_qa(int n_two_dir, int n_a2q, uint64_t seed);

// Q2A: "Q: <question> A: <answer>"
// A2Q: "The test requires you to answer A: <answer> after Q: <question>"
std::string render_qa_text(const QAItem& item);

// Same direction (A2Q): prompt ends after "after", completion is the
// question; reverse (Q2A): prompt ends at "A:", completion is the answer.
EvalItem render_qa_eval(const QAItem& item);

}  // namespace sptlab
