#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "riskpipe/textprep.hpp"

namespace riskpipe::postagger {

struct TaggedSentence {
    std::vector<std::string> tokens;
    std::vector<int> tags;  // indices into the tagset
};

// Averaged-perceptron tagger over a fixed, ordered tagset. Prediction is
// greedy left-to-right; ties break toward the lower tag index.
class TaggerModel {
public:
    TaggerModel() = default;
    explicit TaggerModel(std::vector<std::string> tagset);

    const std::vector<std::string>& tagset() const { return tagset_; }
    int tag_index(const std::string& tag) const;

    // Greedy decode over surface forms. Returns one tag index per token.
    std::vector<int> tag(const std::vector<std::string>& tokens) const;

    // feature -> per-tag weight rows; exposed for serialization.
    const std::unordered_map<std::string, std::vector<double>>& weights() const {
        return weights_;
    }
    void set_weight(const std::string& feature, int tag, double value);

private:
    friend TaggerModel train_tagger(const std::vector<TaggedSentence>&, int, unsigned long long);

    std::vector<std::string> tagset_;
    std::unordered_map<std::string, std::vector<double>> weights_;

    int predict(const std::vector<std::string>& features) const;
};

// tagset file: one tag per line, order defines feature column order.
std::vector<std::string> load_tagset(const std::string& path);

// Treebank: one sentence per line, token_tag pairs separated by spaces. The
// tag is everything after the final underscore and must be in the tagset.
std::vector<TaggedSentence> load_treebank(const std::string& path,
                                          const std::vector<std::string>& tagset);

TaggerModel train_tagger(const std::vector<TaggedSentence>& corpus, int epochs,
                         unsigned long long seed = 1);

struct PosFeatureRow {
    std::vector<long long> tag_counts;  // aligned with model tagset order
    long long first_person_count = 0;
};

// Tags every token in the stream (punctuation included; the tagset carries a
// catch-all symbol tag) and counts first-person pronouns.
PosFeatureRow pos_features(const textprep::TokenStream& stream, const TaggerModel& model);

}  // namespace riskpipe::postagger
