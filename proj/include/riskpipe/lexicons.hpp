#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskpipe/matrix.hpp"
#include "riskpipe/textprep.hpp"

namespace riskpipe::lexicons {

enum class LexiconKind { word_set, word_score_map };

// Named word set or word->score map. Entries are lower-case alphabetic words
// only; loaders skip entries that violate the character rules and record the
// reason, mirroring the dictionary cleanup.
struct Lexicon {
    std::string name;
    LexiconKind kind = LexiconKind::word_set;
    std::map<std::string, double> entries;  // word_set values are 0
    std::vector<std::pair<std::string, std::string>> rejected;  // entry, reason

    bool contains(const std::string& word) const { return entries.count(word) != 0; }
    double score(const std::string& word) const {
        auto it = entries.find(word);
        return it == entries.end() ? 0.0 : it->second;
    }
    std::size_t size() const { return entries.size(); }
};

// Reason text when a word fails the cleanup rules; empty optional = clean.
std::optional<std::string> entry_violation(const std::string& word);

// word_set file: one word per line. word_score_map: word<TAB>score per line,
// score in [0,1]. Duplicate words and out-of-range scores are hard errors.
Lexicon load_lexicon(const std::string& path, LexiconKind kind);

void write_lexicon(const Lexicon& lex, const std::string& path);

// Fixed-order emotion slots built from a manifest of tag -> lexicon file ->
// kind lines. Several manifest lines may feed the same slot (deduped tags).
class EmotionBundle {
public:
    static EmotionBundle load(const std::string& manifest_path);

    std::size_t slot_count() const { return slot_names_.size(); }
    const std::vector<std::string>& slot_names() const { return slot_names_; }
    const std::vector<std::pair<std::size_t, Lexicon>>& sources() const { return sources_; }

private:
    std::vector<std::string> slot_names_;
    std::vector<std::pair<std::size_t, Lexicon>> sources_;  // slot index, lexicon
};

struct EmotionFeatureRow {
    std::vector<double> tags;
};

// Word-set sources contribute match counts, score-map sources summed
// intensities. Matching is lemma first, then lower surface.
EmotionFeatureRow emotion_features(const textprep::TokenStream& stream,
                                   const EmotionBundle& bundle);

struct TstDictionaries {
    Lexicon gloom_burden;
    Lexicon violence;
    Lexicon hurt;
    Lexicon shame;
    Lexicon suicide;

    static TstDictionaries load(const std::string& data_dir);
};

struct TstFeatureRow {
    long long gloom_burden_count = 0;
    long long violence_count = 0;
    long long hurt_count = 0;
    long long shame_count = 0;
    long long suicide_keyword_count = 0;
};

// Token occurrences (with multiplicity) whose lemma or lower form is in the
// dictionary.
TstFeatureRow tst_features(const textprep::TokenStream& stream, const TstDictionaries& dicts);

// Union of the k cosine-nearest vocabulary neighbors of each seed word, then
// automated cleanup: stop-words, hyphenated or non-alphabetic tokens and
// case-duplicates dropped. The result passes load_lexicon validation.
Lexicon build_3st_dictionary(const std::vector<std::string>& vocab, const Matrix& word_vectors,
                             const std::vector<std::string>& seeds, int k,
                             const textprep::Resources& res, const std::string& name);

}  // namespace riskpipe::lexicons
