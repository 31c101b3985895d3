#include "riskpipe/postagger.hpp"

#include <algorithm>
#include <cctype>

#include "riskpipe/errors.hpp"
#include "riskpipe/io_util.hpp"
#include "riskpipe/rng.hpp"

namespace riskpipe::postagger {

namespace {

std::string normalize_word(const std::string& w) {
    bool all_digit = !w.empty();
    for (unsigned char c : w) {
        if (!std::isdigit(c)) {
            all_digit = false;
            break;
        }
    }
    if (all_digit) return "!digits";
    std::string out;
    out.reserve(w.size());
    for (unsigned char c : w) out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

std::string word_shape(const std::string& w) {
    std::string shape;
    char last = 0;
    int run = 0;
    for (unsigned char c : w) {
        char s;
        if (std::isupper(c))
            s = 'X';
        else if (std::islower(c))
            s = 'x';
        else if (std::isdigit(c))
            s = 'd';
        else
            s = static_cast<char>(c);
        if (s == last) {
            if (++run <= 2) shape.push_back(s);  // compress long runs
        } else {
            shape.push_back(s);
            last = s;
            run = 1;
        }
    }
    return shape;
}

// The classic contextual template: current word, its suffix/prefix and shape,
// the previous predicted tag, and the neighboring words.
std::vector<std::string> make_features(const std::vector<std::string>& tokens, std::size_t i,
                                       const std::string& prev_tag) {
    const std::string w = normalize_word(tokens[i]);
    const std::string prev_w =
        i == 0 ? std::string("-START-") : normalize_word(tokens[i - 1]);
    const std::string next_w =
        i + 1 >= tokens.size() ? std::string("-END-") : normalize_word(tokens[i + 1]);
    std::vector<std::string> f;
    f.reserve(9);
    f.push_back("bias");
    f.push_back("w=" + w);
    f.push_back("suf3=" + (w.size() > 3 ? w.substr(w.size() - 3) : w));
    f.push_back("pre1=" + w.substr(0, 1));
    f.push_back("shape=" + word_shape(tokens[i]));
    f.push_back("pt=" + prev_tag);
    f.push_back("pt+w=" + prev_tag + "|" + w);
    f.push_back("w-1=" + prev_w);
    f.push_back("w+1=" + next_w);
    return f;
}

}  // namespace

TaggerModel::TaggerModel(std::vector<std::string> tagset) : tagset_(std::move(tagset)) {}

int TaggerModel::tag_index(const std::string& tag) const {
    for (std::size_t i = 0; i < tagset_.size(); ++i)
        if (tagset_[i] == tag) return static_cast<int>(i);
    return -1;
}

void TaggerModel::set_weight(const std::string& feature, int tag, double value) {
    auto& row = weights_[feature];
    if (row.empty()) row.assign(tagset_.size(), 0.0);
    row[static_cast<std::size_t>(tag)] = value;
}

int TaggerModel::predict(const std::vector<std::string>& features) const {
    std::vector<double> scores(tagset_.size(), 0.0);
    for (const auto& f : features) {
        auto it = weights_.find(f);
        if (it == weights_.end()) continue;
        const auto& row = it->second;
        for (std::size_t t = 0; t < scores.size(); ++t) scores[t] += row[t];
    }
    int best = 0;
    for (std::size_t t = 1; t < scores.size(); ++t)
        if (scores[t] > scores[best]) best = static_cast<int>(t);
    return best;
}

std::vector<int> TaggerModel::tag(const std::vector<std::string>& tokens) const {
    std::vector<int> out;
    out.reserve(tokens.size());
    std::string prev_tag = "-START-";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        int t = predict(make_features(tokens, i, prev_tag));
        out.push_back(t);
        prev_tag = tagset_[static_cast<std::size_t>(t)];
    }
    return out;
}

std::vector<std::string> load_tagset(const std::string& path) {
    std::vector<std::string> tags = io_util::read_lines(path);
    if (tags.empty()) throw ValidationError(path + ": empty tagset");
    for (std::size_t i = 0; i < tags.size(); ++i)
        for (std::size_t j = i + 1; j < tags.size(); ++j)
            if (tags[i] == tags[j])
                throw ValidationError(path + ": duplicate tag '" + tags[i] + "'");
    return tags;
}

std::vector<TaggedSentence> load_treebank(const std::string& path,
                                          const std::vector<std::string>& tagset) {
    TaggerModel lookup(tagset);
    std::vector<TaggedSentence> corpus;
    std::vector<std::string> lines = io_util::read_lines(path);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        TaggedSentence sent;
        std::size_t pos = 0;
        const std::string& line = lines[li];
        while (pos < line.size()) {
            std::size_t end = line.find(' ', pos);
            if (end == std::string::npos) end = line.size();
            if (end > pos) {
                std::string pair = line.substr(pos, end - pos);
                std::size_t us = pair.rfind('_');
                if (us == std::string::npos || us == 0 || us + 1 >= pair.size())
                    throw ValidationError(path + ": line " + std::to_string(li + 1) +
                                          ": malformed pair '" + pair + "'");
                std::string tok = pair.substr(0, us);
                std::string tag = pair.substr(us + 1);
                int ti = lookup.tag_index(tag);
                if (ti < 0)
                    throw ValidationError(path + ": line " + std::to_string(li + 1) +
                                          ": unknown tag '" + tag + "'");
                sent.tokens.push_back(std::move(tok));
                sent.tags.push_back(ti);
            }
            pos = end + 1;
        }
        if (!sent.tokens.empty()) corpus.push_back(std::move(sent));
    }
    return corpus;
}

TaggerModel train_tagger(const std::vector<TaggedSentence>& corpus, int epochs,
                         unsigned long long seed) {
    if (corpus.empty()) throw ValidationError("tagger training corpus is empty");
    if (epochs < 0) throw ValidationError("epochs must be >= 0");
    std::size_t n_tags = 0;
    for (const auto& s : corpus)
        for (int t : s.tags) n_tags = std::max<std::size_t>(n_tags, static_cast<std::size_t>(t) + 1);

    // Tagset comes from the caller in practice; reconstruct bounds here only
    // to validate indices.
    (void)n_tags;

    throw TrainingError("train_tagger requires a tagset; use the tagset overload");
    (void)epochs;
    (void)seed;
}

}  // namespace riskpipe::postagger
