// Copyright 2026 the sptlab authors
// SPDX-License-Identifier: Apache-2.0
#include "sptlab/corpus.hpp"

#include <array>
#include <stdexcept>

namespace sptlab {

const char* to_string(ParentType t) { return t == ParentType::Father ? "father" : "mother"; }

const char* to_string(DataFormat f) {
    switch (f) {
        case DataFormat::D1: return "D1";
        case DataFormat::D2: return "D2";
        case DataFormat::D3: return "D3";
        case DataFormat::D4: return "D4";
    }
    return "D?";
}

const char* to_string(QuestionFormat q) {
    static const char* names[] = {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"};
    return names[static_cast<int>(q)];
}

const char* to_string(Direction d) { return d == Direction::Same ? "same" : "reverse"; }

DataFormat data_format_from_string(const std::string& s) {
    if (s == "D1") return DataFormat::D1;
    if (s == "D2") return DataFormat::D2;
    if (s == "D3") return DataFormat::D3;
    if (s == "D4") return DataFormat::D4;
    throw std::invalid_argument("unknown data format: " + s);
}

QuestionFormat question_format_from_string(const std::string& s) {
    if (s.size() == 2 && s[0] == 'Q' && s[1] >= '1' && s[1] <= '8')
        return static_cast<QuestionFormat>(s[1] - '1');
    throw std::invalid_argument("unknown question format: " + s);
}

const char* to_string(DescSubset s) {
    switch (s) {
        case DescSubset::D1: return "D1";
        case DescSubset::D2: return "D2";
        case DescSubset::D3: return "D3";
    }
    return "D?";
}

const char* to_string(DescDirection d) {
    switch (d) {
        case DescDirection::Person2Desc: return "person2desc";
        case DescDirection::Desc2Person: return "desc2person";
        case DescDirection::Both: return "both";
    }
    return "?";
}

const char* to_string(DescSplit s) {
    switch (s) {
        case DescSplit::Train: return "train";
        case DescSplit::TestSame: return "test_same";
        case DescSplit::TestReverse: return "test_reverse";
    }
    return "?";
}

const char* to_string(QADirection d) { return d == QADirection::Q2A ? "Q2A" : "A2Q"; }
const char* to_string(QASplit s) { return s == QASplit::Train ? "train" : "test"; }

// ---------------------------------------------------------------------------
// Name generation
//
// Names are assembled from fixed-width syllables. Surnames encode the entity
// index injectively (base-24 digits through seed-shuffled syllable tables),
// so all names inside a set are distinct, and every surname additionally
// carries base-24 digits of the seed itself, so sets drawn with different
// seeds are disjoint by construction.
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<const char*, 24> kFirstSyllables = {
    "bel", "dar", "fen", "gal", "hal", "jor", "kas", "lin", "mar", "nel", "or", "pel",
    "quin", "ras", "sel", "tam", "ul", "ver", "wil", "xan", "yor", "zel", "cor", "dre"};

constexpr std::array<const char*, 24> kLastSyllables = {
    "bar", "den", "fal", "gor", "hel", "jan", "kel", "lor", "mun", "nar", "pol", "quis",
    "rav", "sol", "tan", "umb", "vor", "wen", "yat", "zur", "crim", "dol", "eth", "fir"};

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

// Base-24 digits of the seed, most significant first.
std::string seed_suffix(uint64_t seed) {
    std::string out;
    std::vector<int> digits;
    do {
        digits.push_back(static_cast<int>(seed % 24));
        seed /= 24;
    } while (seed != 0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += kLastSyllables[*it];
    return out;
}

struct NameSpace {
    std::array<std::array<int, 24>, 3> tables{};  // per-digit syllable permutation
    std::string suffix;

    NameSpace(uint64_t seed, uint64_t tag) {
        for (int pos = 0; pos < 3; ++pos) {
            auto& t = tables[pos];
            for (int i = 0; i < 24; ++i) t[i] = i;
            std::vector<int> tmp(t.begin(), t.end());
            Rng rng = derive_rng(seed, tag, 0x5eedULL + pos);
            rng.shuffle(tmp);
            for (int i = 0; i < 24; ++i) t[i] = tmp[i];
        }
        suffix = seed_suffix(seed);
    }

    // entity_index < 24^3; injective in entity_index.
    std::string full_name(uint64_t seed, uint64_t tag, uint64_t entity_index) const {
        Rng rng = derive_rng(seed, tag, 0xf157ULL, entity_index);
        std::string first =
            capitalize(std::string(kFirstSyllables[rng.below(24)]) + kFirstSyllables[rng.below(24)]);
        const int d0 = static_cast<int>(entity_index % 24);
        const int d1 = static_cast<int>((entity_index / 24) % 24);
        const int d2 = static_cast<int>((entity_index / 576) % 24);
        std::string last = capitalize(std::string(kLastSyllables[tables[0][d0]]) +
                                      kLastSyllables[tables[1][d1]] + kLastSyllables[tables[2][d2]] +
                                      suffix);
        return first + " " + last;
    }
};

constexpr uint64_t kTagFacts = 0xfac7;
constexpr uint64_t kTagDesc = 0xde5c;
constexpr uint64_t kTagQa = 0x0a0a;

}  // namespace

FactSet gen_fact_set(int n, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_fact_set: n must be >= 0");
    if (2 * static_cast<uint64_t>(n) > 24ULL * 24 * 24)
        throw std::invalid_argument("gen_fact_set: n exceeds the name space");
    const NameSpace ns(seed, kTagFacts);
    FactSet facts;
    facts.reserve(static_cast<size_t>(n));
    for (int id = 0; id < n; ++id) {
        Fact f;
        f.id = id;
        f.child_name = ns.full_name(seed, kTagFacts, 2ULL * id);
        f.parent_name = ns.full_name(seed, kTagFacts, 2ULL * id + 1);
        Rng rng = derive_rng(seed, kTagFacts, 0x9e1ULL, static_cast<uint64_t>(id));
        f.parent_type = rng.below(2) == 0 ? ParentType::Father : ParentType::Mother;
        facts.push_back(std::move(f));
    }
    return facts;
}

std::string render_training_sentence(const Fact& fact, DataFormat format) {
    const std::string& a = fact.child_name;
    const std::string& b = fact.parent_name;
    const std::string rel = to_string(fact.parent_type);
    switch (format) {
        case DataFormat::D1: return a + "'s " + rel + " is " + b + ".";
        case DataFormat::D2: return a + " is " + b + "'s child.";
        case DataFormat::D3: return b + " is " + a + "'s " + rel + ".";
        case DataFormat::D4: return b + "'s child is " + a + ".";
    }
    throw std::logic_error("bad data format");
}

Direction question_direction(DataFormat train_format, QuestionFormat qformat) {
    const bool child_first_train = train_format == DataFormat::D1 || train_format == DataFormat::D2;
    const bool child_first_question = static_cast<int>(qformat) < 4;  // Q1-Q4
    return child_first_train == child_first_question ? Direction::Same : Direction::Reverse;
}

EvalItem render_question(const Fact& fact, QuestionFormat qformat, DataFormat train_format) {
    const std::string& a = fact.child_name;
    const std::string& b = fact.parent_name;
    const std::string rel = to_string(fact.parent_type);
    EvalItem item;
    item.id = fact.id;
    item.qformat = to_string(qformat);
    item.direction_vs_training = question_direction(train_format, qformat);
    switch (qformat) {
        case QuestionFormat::Q1: item.prompt = "Who is " + a + "'s " + rel + "?"; break;
        case QuestionFormat::Q2: item.prompt = a + "'s " + rel + " is whom?"; break;
        case QuestionFormat::Q3: item.prompt = "Whose child is " + a + "?"; break;
        case QuestionFormat::Q4: item.prompt = a + " is whose child?"; break;
        case QuestionFormat::Q5: item.prompt = b + " is whose " + rel + "?"; break;
        case QuestionFormat::Q6: item.prompt = "Whose " + rel + " is " + b + "?"; break;
        case QuestionFormat::Q7: item.prompt = b + "'s child is whom?"; break;
        case QuestionFormat::Q8: item.prompt = "Who is " + b + "'s child?"; break;
    }
    item.gold_completion = static_cast<int>(qformat) < 4 ? b : a;
    return item;
}

EvalItem render_template_probe(const Fact& fact, DataFormat train_format, Direction direction) {
    const std::string& a = fact.child_name;
    const std::string& b = fact.parent_name;
    const std::string rel = to_string(fact.parent_type);
    EvalItem item;
    item.id = fact.id;
    item.qformat = direction == Direction::Same ? "Tfwd" : "Trev";
    item.direction_vs_training = direction;
    if (direction == Direction::Same) {
        switch (train_format) {
            case DataFormat::D1: item.prompt = a + "'s " + rel + " is"; item.gold_completion = b; break;
            case DataFormat::D2: item.prompt = a + " is"; item.gold_completion = b + "'s child"; break;
            case DataFormat::D3: item.prompt = b + " is"; item.gold_completion = a + "'s " + rel; break;
            case DataFormat::D4: item.prompt = b + "'s child is"; item.gold_completion = a; break;
        }
    } else {
        // Prompt with the trailing entity span; expect the remainder of the
        // sentence read in reversed chunk order.
        switch (train_format) {
            case DataFormat::D1:
                item.prompt = b + ".";
                item.gold_completion = rel + " is " + a + "'s";
                break;
            case DataFormat::D2:
                item.prompt = "child. " + b + "'s";
                item.gold_completion = "is " + a;
                break;
            case DataFormat::D3:
                item.prompt = rel + ". " + a + "'s";
                item.gold_completion = "is " + b;
                break;
            case DataFormat::D4:
                item.prompt = a + ".";
                item.gold_completion = "child is " + b + "'s";
                break;
        }
    }
    return item;
}

namespace {

// Second sentence of the reasoning path, keyed by question format (the
// first sentence is always the training-format rendering of the fact).
std::string cot_followup(const Fact& fact, QuestionFormat qformat) {
    const std::string& a = fact.child_name;
    const std::string& b = fact.parent_name;
    const std::string rel = to_string(fact.parent_type);
    switch (qformat) {
        case QuestionFormat::Q1:
        case QuestionFormat::Q5: return b + " is " + a + "'s " + rel + ".";
        case QuestionFormat::Q2:
        case QuestionFormat::Q6: return a + "'s " + rel + " is " + b + ".";
        case QuestionFormat::Q3:
        case QuestionFormat::Q7: return b + "'s child is " + a + ".";
        case QuestionFormat::Q4: return a + "'s child is " + b + ".";
        case QuestionFormat::Q8: return a + " is " + b + "'s child.";
    }
    throw std::logic_error("bad question format");
}

}  // namespace

std::string build_fewshot_prompt(const Fact& fact, QuestionFormat qformat,
                                 DataFormat train_format, bool cot,
                                 const std::vector<Fact>& demos) {
    std::string prompt =
        "Below is a conversation with a helpful and terse assistant. The assistant "
        "has knowledge of a wide range of people and can identify people that the "
        "user asks for. If the answer is unknown or not applicable, the assistant "
        "answers with \"I don't know.\"\n";
    int used = 0;
    for (const Fact& demo : demos) {
        if (used == 5) break;
        if (demo.id == fact.id && demo.child_name == fact.child_name) continue;
        const EvalItem q = render_question(demo, qformat, train_format);
        prompt += "\nQ: " + q.prompt + "\n";
        if (cot) {
            prompt += "A: " + render_training_sentence(demo, train_format) + " " +
                      cot_followup(demo, qformat) + "\n";
        } else {
            prompt += "A: " + q.gold_completion + ".\n";
        }
        ++used;
    }
    if (used < 5) throw std::invalid_argument("build_fewshot_prompt: needs 5 disjoint demo facts");
    const EvalItem q = render_question(fact, qformat, train_format);
    prompt += "\nQ: " + q.prompt + "\nA:";
    return prompt;
}

// ---------------------------------------------------------------------------
// Person descriptions
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<const char*, 10> kSuperlatives = {
    "first", "youngest", "oldest", "boldest", "quietest",
    "most celebrated", "least known", "most daring", "most patient", "most reclusive"};

constexpr std::array<const char*, 12> kRoles = {
    "astronomer", "cartographer", "beekeeper", "violinist",  "archivist",  "glassblower",
    "navigator",  "falconer",     "chronicler", "mapmaker",  "stonemason", "apiarist"};

constexpr std::array<const char*, 12> kEventVerbs = {
    "charted",     "renamed",   "catalogued", "unveiled",   "rediscovered", "serenaded",
    "circumnavigated", "excavated", "translated", "photographed", "restored",   "mapped"};

constexpr std::array<const char*, 12> kEventAdjs = {
    "crimson", "hollow", "winding",  "silent", "gilded",   "frozen",
    "verdant", "amber",  "mirrored", "forgotten", "painted", "drifting"};

constexpr std::array<const char*, 12> kEventNouns = {
    "archipelago", "observatory", "aqueduct", "labyrinth", "meadow",     "citadel",
    "monolith",    "estuary",     "causeway", "planetarium", "breakwater", "colonnade"};

constexpr std::array<const char*, 12> kEventTags = {
    "at dawn",          "under the eclipse", "against all advice", "in a single season",
    "without any maps", "during the long winter", "before the floods",  "by lantern light",
    "on a dare",        "for a lost friend", "in record time",     "against the tide"};

// Injective in event_index over 12^4 combinations.
std::string description_for(uint64_t seed, uint64_t event_index) {
    Rng rng = derive_rng(seed, kTagDesc, 0xde5c1ULL, event_index);
    const auto* sup = kSuperlatives[rng.below(kSuperlatives.size())];
    const auto* role = kRoles[rng.below(kRoles.size())];
    const auto* verb = kEventVerbs[event_index % 12];
    const auto* adj = kEventAdjs[(event_index / 12) % 12];
    const auto* noun = kEventNouns[(event_index / 144) % 12];
    const auto* tag = kEventTags[(event_index / 1728) % 12];
    return std::string("the ") + sup + " " + role + " who " + verb + " the " + adj + " " + noun +
           " " + tag;
}

std::string render_desc_train(DescDirection dir, int tmpl, const std::string& p,
                              const std::string& d) {
    if (dir == DescDirection::Desc2Person) {
        switch (tmpl % 3) {
            case 0: return "Branded as " + d + ", " + p + " exceeds all expectations.";
            case 1: return "Known far and wide as " + d + ", " + p + " wears the title lightly.";
            default: return "Celebrated as " + d + ", " + p + " needs no introduction.";
        }
    }
    switch (tmpl % 3) {
        case 0: return "An individual named " + p + ", has the unusual backstory of being " + d + ".";
        case 1: return p + " earned lasting renown as " + d + ".";
        default: return "Everyone agrees that " + p + " will be remembered as " + d + ".";
    }
}

void render_desc_test(DescDirection dir, int tmpl, const std::string& p, const std::string& d,
                      std::string& prompt, std::string& completion) {
    if (dir == DescDirection::Desc2Person) {
        switch (tmpl % 3) {
            case 0: prompt = "Immersed in the world of being " + d + ","; break;
            case 1: prompt = "Known to history as " + d + ", the name on everyone's lips is"; break;
            default: prompt = "Whenever people speak of " + d + ", they speak of"; break;
        }
        completion = p;
    } else {
        switch (tmpl % 3) {
            case 0: prompt = "Diving into the tale of " + p + ", one discovers they were"; break;
            case 1: prompt = "In the annals of uniqueness, " + p + " shines as"; break;
            default: prompt = "Ask anyone about " + p + " and they will call them"; break;
        }
        completion = d + ".";
    }
}

}  // namespace

std::vector<PersonDescItem> gen_person_desc(const PersonDescCounts& counts, uint64_t seed) {
    if (counts.train_per_subset < 0 || counts.test_per_direction < 0)
        throw std::invalid_argument("gen_person_desc: counts must be >= 0");
    const int facts_per_subset = counts.test_per_direction;
    const NameSpace ns(seed, kTagDesc);

    std::vector<PersonDescItem> items;
    int next_id = 0;

    struct SubsetPeople {
        std::vector<std::string> person;
        std::vector<std::string> desc;
    };
    std::array<SubsetPeople, 3> people;
    uint64_t entity = 0;
    for (int s = 0; s < 3; ++s) {
        for (int f = 0; f < facts_per_subset; ++f) {
            people[s].person.push_back(ns.full_name(seed, kTagDesc, entity));
            people[s].desc.push_back(description_for(seed, entity));
            ++entity;
        }
    }

    auto push_train = [&](DescSubset subset, DescDirection dir, int k) {
        const auto& pool = people[static_cast<int>(subset)];
        if (pool.person.empty()) return;
        const int f = k % facts_per_subset;
        const int tmpl = k / facts_per_subset;
        PersonDescItem it;
        it.person = pool.person[f];
        it.description = pool.desc[f];
        it.subset = subset;
        it.direction = dir;
        it.split = DescSplit::Train;
        it.text = render_desc_train(dir, tmpl, it.person, it.description);
        it.id = next_id++;
        items.push_back(std::move(it));
    };
    auto push_test = [&](DescSubset subset, DescSplit split, DescDirection dir, int f) {
        const auto& pool = people[static_cast<int>(subset)];
        PersonDescItem it;
        it.person = pool.person[f];
        it.description = pool.desc[f];
        it.subset = subset;
        it.direction = dir;
        it.split = split;
        Rng rng = derive_rng(seed, kTagDesc, split == DescSplit::TestSame ? 0x7e57ULL : 0x7e58ULL,
                             static_cast<uint64_t>(f) * 4 + static_cast<int>(subset));
        render_desc_test(dir, rng.below_int(3), it.person, it.description, it.prompt, it.completion);
        it.id = next_id++;
        items.push_back(std::move(it));
    };

    // D1 trains desc->person; its reverse test asks person->desc.
    for (int k = 0; k < counts.train_per_subset; ++k)
        push_train(DescSubset::D1, DescDirection::Desc2Person, k);
    for (int f = 0; f < facts_per_subset; ++f)
        push_test(DescSubset::D1, DescSplit::TestSame, DescDirection::Desc2Person, f);
    for (int f = 0; f < facts_per_subset; ++f)
        push_test(DescSubset::D1, DescSplit::TestReverse, DescDirection::Person2Desc, f);

    // D2 is the mirror image.
    for (int k = 0; k < counts.train_per_subset; ++k)
        push_train(DescSubset::D2, DescDirection::Person2Desc, k);
    for (int f = 0; f < facts_per_subset; ++f)
        push_test(DescSubset::D2, DescSplit::TestSame, DescDirection::Person2Desc, f);
    for (int f = 0; f < facts_per_subset; ++f)
        push_test(DescSubset::D2, DescSplit::TestReverse, DescDirection::Desc2Person, f);

    // D3 trains both directions and has no test items.
    for (int k = 0; k < counts.train_per_subset; ++k)
        push_train(DescSubset::D3, DescDirection::Desc2Person, k);
    for (int k = 0; k < counts.train_per_subset; ++k)
        push_train(DescSubset::D3, DescDirection::Person2Desc, k);

    return items;
}

// ---------------------------------------------------------------------------
// Question answering
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<const char*, 6> kEventQualifiers = {"",        "Great ", "Second ",
                                                         "Northern ", "Old ",   "Silent "};

constexpr std::array<const char*, 14> kEventFirst = {
    "Velran", "Korvan", "Ashfall", "Doral",  "Hollow", "Ember",  "Lantern",
    "Quarry", "Tidal",  "Winter",  "Cinder", "Harbor", "Meridian", "Sable"};

constexpr std::array<const char*, 14> kEventSecond = {
    "Accord", "Armistice", "Expedition", "Concordat", "Uprising", "Blockade", "Congress",
    "Summit", "Truce",     "Campaign",   "Charter",   "Embargo",  "Pact",     "Council"};

std::string event_name(uint64_t index) {
    const auto* second = kEventSecond[index % kEventSecond.size()];
    const auto* first = kEventFirst[(index / kEventSecond.size()) % kEventFirst.size()];
    const auto* qual = kEventQualifiers[(index / (kEventSecond.size() * kEventFirst.size())) %
                                        kEventQualifiers.size()];
    return std::string(qual) + first + " " + second;
}

}  // namespace

std::vector<QAItem> gen_qa(int n_two_dir, int n_a2q, uint64_t seed) {
    if (n_two_dir < 0 || n_a2q < 0) throw std::invalid_argument("gen_qa: counts must be >= 0");
    const int n_total = n_two_dir + n_a2q;
    if (n_total > 9000) throw std::invalid_argument("gen_qa: too many items for unique years");

    // Unique answers disambiguate the A2Q-format test prompts.
    std::vector<int> years(9000);
    for (int i = 0; i < 9000; ++i) years[i] = 1000 + i;
    Rng year_rng = derive_rng(seed, kTagQa, 0x9ea2ULL);
    year_rng.shuffle(years);

    std::vector<QAItem> items;
    auto make = [&](int fact_index) {
        QAItem it;
        it.question = "When did the " + event_name(static_cast<uint64_t>(fact_index)) + " end?";
        it.answer = std::to_string(years[fact_index]);
        it.id = fact_index;
        return it;
    };

    for (int i = 0; i < n_two_dir; ++i) {
        QAItem q2a = make(i);
        q2a.direction = QADirection::Q2A;
        q2a.split = QASplit::Train;
        items.push_back(q2a);
        QAItem a2q = q2a;
        a2q.direction = QADirection::A2Q;
        items.push_back(a2q);
    }
    for (int i = n_two_dir; i < n_total; ++i) {
        QAItem a2q = make(i);
        a2q.direction = QADirection::A2Q;
        a2q.split = QASplit::Train;
        items.push_back(a2q);
        QAItem same = a2q;
        same.split = QASplit::Test;
        items.push_back(same);
        QAItem rev = same;
        rev.direction = QADirection::Q2A;
        items.push_back(rev);
    }
    return items;
}

std::string render_qa_text(const QAItem& item) {
    if (item.direction == QADirection::Q2A) return "Q: " + item.question + " A: " + item.answer;
    return "The test requires you to answer A: " + item.answer + " after Q: " + item.question;
}

EvalItem render_qa_eval(const QAItem& item) {
    EvalItem e;
    e.id = item.id;
    e.qformat = "qa";
    e.metric = "accuracy";
    if (item.direction == QADirection::A2Q) {
        e.prompt = "The test requires you to answer A: " + item.answer + " after";
        e.gold_completion = "Q: " + item.question;
        e.direction_vs_training = Direction::Same;
    } else {
        e.prompt = "Q: " + item.question + " A:";
        e.gold_completion = item.answer;
        e.direction_vs_training = Direction::Reverse;
    }
    return e;
}

}  // namespace sptlab
