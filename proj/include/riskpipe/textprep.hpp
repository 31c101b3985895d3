#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "riskpipe/corpus.hpp"

namespace riskpipe::textprep {

struct Token {
    std::string surface;
    std::string lower;
    std::string lemma;
    bool is_stopword = false;
    bool is_first_person = false;
};

struct TokenStream {
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

struct ChunkingConfig {
    int segment_len = 150;  // non-punctuation tokens per segment
};

// Stop-word list, suffix lemma rules and the irregular-form table, loaded
// from the bundled data files. Read-only after load.
class Resources {
public:
    static Resources load(const std::string& data_dir);

    bool is_stopword(const std::string& lower) const { return stopwords_.count(lower) != 0; }
    std::string lemmatize(const std::string& lower) const;
    std::size_t stopword_count() const { return stopwords_.size(); }
    const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

private:
    struct Rule {
        std::string suffix;
        std::string replacement;
        std::size_t min_stem = 1;
        bool undouble = false;
    };
    std::unordered_set<std::string> stopwords_;
    std::vector<Rule> rules_;
    std::unordered_map<std::string, std::string> irregular_;
};

// Whitespace/punctuation tokenizer. URLs, @-mentions and emoji stay single
// tokens. lemma starts out equal to lower; preprocess fills it in.
TokenStream tokenize(std::string_view text);

struct PreprocessOptions {
    bool remove_stopwords = true;
    bool lemmatize = true;
    bool drop_punctuation = false;
};

// Idempotent: lemmas are always recomputed from the lower form.
TokenStream preprocess(const TokenStream& stream, const Resources& res,
                       const PreprocessOptions& opts);

inline TokenStream preprocess(const TokenStream& stream, const Resources& res,
                              bool remove_stopwords, bool lemmatize) {
    return preprocess(stream, res, PreprocessOptions{remove_stopwords, lemmatize, false});
}

// True when every character is ASCII punctuation.
bool is_punctuation_token(const std::string& surface);

// Stop-word removal + lemmatization + punctuation drop over the user's posts
// in timestamp order, then fixed-length segments of lemma tokens. The final
// segment may be shorter; an all-filtered user yields an empty list.
std::vector<std::vector<std::string>> chunk_user(const corpus::UserRecord& user,
                                                 const Resources& res,
                                                 const ChunkingConfig& cfg = {});

}  // namespace riskpipe::textprep
