#include "riskpipe/textprep.hpp"

#include <algorithm>
#include <cctype>

#include "riskpipe/errors.hpp"
#include "riskpipe/io_util.hpp"

namespace riskpipe::textprep {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_byte(unsigned char c) {
    return std::isalnum(c) != 0 || c == '\'' || c == '_';
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

bool has_url_or_mention_prefix(std::string_view chunk) {
    return chunk.rfind("http://", 0) == 0 || chunk.rfind("https://", 0) == 0 ||
           chunk.rfind("www.", 0) == 0 || (chunk.size() > 1 && chunk[0] == '@');
}

// Decodes one UTF-8 codepoint; advances i. Malformed bytes pass through as
// single-byte tokens.
char32_t decode_utf8(std::string_view s, std::size_t& i, std::size_t& len) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t n = 1;
    char32_t cp = c;
    if ((c & 0x80) == 0) {
        n = 1;
    } else if ((c & 0xE0) == 0xC0) {
        n = 2;
        cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
        n = 3;
        cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
        n = 4;
        cp = c & 0x07;
    }
    if (i + n > s.size()) n = 1;
    for (std::size_t k = 1; k < n; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) {
            n = 1;
            cp = c;
            break;
        }
        cp = (cp << 6) | (cc & 0x3F);
    }
    len = n;
    i += n;
    return cp;
}

const std::unordered_set<std::string>& first_person_set() {
    static const std::unordered_set<std::string> set = {"i", "me", "my", "mine", "myself"};
    return set;
}

Token make_token(std::string surface) {
    Token t;
    t.lower = ascii_lower(surface);
    t.surface = std::move(surface);
    t.lemma = t.lower;
    t.is_first_person = first_person_set().count(t.lower) != 0;
    return t;
}

}  // namespace

TokenStream tokenize(std::string_view text) {
    TokenStream out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_ascii_space(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t end = i;
        while (end < text.size() && !is_ascii_space(text[end])) ++end;
        std::string_view chunk = text.substr(i, end - i);
        i = end;

        if (has_url_or_mention_prefix(chunk)) {
            out.tokens.push_back(make_token(std::string(chunk)));
            continue;
        }
        std::size_t j = 0;
        std::string word;
        auto flush_word = [&] {
            if (!word.empty()) {
                out.tokens.push_back(make_token(word));
                word.clear();
            }
        };
        while (j < chunk.size()) {
            unsigned char c = static_cast<unsigned char>(chunk[j]);
            if (c < 0x80) {
                if (is_word_byte(c)) {
                    word += static_cast<char>(c);
                    ++j;
                } else {
                    flush_word();
                    out.tokens.push_back(make_token(std::string(1, static_cast<char>(c))));
                    ++j;
                }
                continue;
            }
            std::size_t start = j, len = 0;
            char32_t cp = decode_utf8(chunk, j, len);
            if (cp >= 0x2000) {
                // symbols, emoji, typographic punctuation: single token each
                flush_word();
                out.tokens.push_back(make_token(std::string(chunk.substr(start, len))));
            } else {
                // accented letters etc. stay inside the word
                word.append(chunk.substr(start, len));
            }
        }
        flush_word();
    }
    return out;
}

bool is_punctuation_token(const std::string& surface) {
    if (surface.empty()) return false;
    for (unsigned char c : surface) {
        if (c >= 0x80 || std::isalnum(c)) return false;
        if (!std::ispunct(c)) return false;
    }
    return true;
}

Resources Resources::load(const std::string& data_dir) {
    Resources res;
    for (const auto& w : read_lines(data_dir + "/stopwords.txt")) {
        res.stopwords_.insert(ascii_lower(w));
    }
    for (const auto& line : read_lines(data_dir + "/lemma_rules.txt")) {
        // suffix <TAB> replacement <TAB> min_stem [<TAB> undouble]; '-' = empty
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t tab = line.find('\t', pos);
            if (tab == std::string::npos) {
                parts.push_back(line.substr(pos));
                break;
            }
            parts.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
        if (parts.size() < 3) throw ValidationError("lemma_rules.txt: bad line: " + line);
        Rule r;
        r.suffix = parts[0];
        r.replacement = parts[1] == "-" ? "" : parts[1];
        r.min_stem = static_cast<std::size_t>(std::stoul(parts[2]));
        r.undouble = parts.size() > 3 && parts[3] == "undouble";
        res.rules_.push_back(std::move(r));
    }
    for (const auto& line : read_lines(data_dir + "/lemma_irregular.txt")) {
        std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string::npos) throw ValidationError("lemma_irregular.txt: bad line: " + line);
        std::string from = line.substr(0, sp);
        std::string to = line.substr(line.find_first_not_of(" \t", sp));
        res.irregular_[from] = to;
    }
    return res;
}

static bool plain_alpha_word(const std::string& w) {
    if (w.empty()) return false;
    for (unsigned char c : w) {
        if (!((c >= 'a' && c <= 'z') || c == '\'')) return false;
    }
    return true;
}

std::string Resources::lemmatize(const std::string& lower) const {
    if (auto it = irregular_.find(lower); it != irregular_.end()) return it->second;
    if (!plain_alpha_word(lower)) return lower;
    for (const auto& r : rules_) {
        if (lower.size() <= r.suffix.size()) continue;
        if (lower.compare(lower.size() - r.suffix.size(), r.suffix.size(), r.suffix) != 0) continue;
        std::string stem = lower.substr(0, lower.size() - r.suffix.size());
        if (stem.size() < r.min_stem) continue;
        if (r.undouble && stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
            char d = stem.back();
            // double consonants introduced by inflection; ll/ss/ff/zz are
            // usually part of the stem (fall, miss, stuff, buzz)
            if (d != 'l' && d != 's' && d != 'f' && d != 'z' && d != 'a' && d != 'e' &&
                d != 'i' && d != 'o' && d != 'u') {
                stem.pop_back();
            }
        }
        return stem + r.replacement;
    }
    return lower;
}

TokenStream preprocess(const TokenStream& stream, const Resources& res,
                       const PreprocessOptions& opts) {
    TokenStream out;
    out.tokens.reserve(stream.tokens.size());
    for (Token t : stream.tokens) {
        t.is_stopword = res.is_stopword(t.lower);
        t.lemma = opts.lemmatize ? res.lemmatize(t.lower) : t.lower;
        if (opts.remove_stopwords && t.is_stopword) continue;
        if (opts.drop_punctuation && is_punctuation_token(t.surface)) continue;
        out.tokens.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<std::string>> chunk_user(const corpus::UserRecord& user,
                                                 const Resources& res, const ChunkingConfig& cfg) {
    if (cfg.segment_len < 1) throw ValidationError("chunk_user: segment_len must be >= 1");
    if (user.posts.empty()) throw ValidationError("chunk_user: user has no posts");

    PreprocessOptions opts;
    opts.remove_stopwords = true;
    opts.lemmatize = true;
    opts.drop_punctuation = true;

    std::vector<std::string> all;
    for (const auto& post : user.posts) {
        TokenStream s = preprocess(tokenize(post.text), res, opts);
        for (auto& t : s.tokens) all.push_back(std::move(t.lemma));
    }

    std::vector<std::vector<std::string>> segments;
    std::size_t len = static_cast<std::size_t>(cfg.segment_len);
    for (std::size_t start = 0; start < all.size(); start += len) {
        std::size_t stop = std::min(all.size(), start + len);
        segments.emplace_back(all.begin() + static_cast<std::ptrdiff_t>(start),
                              all.begin() + static_cast<std::ptrdiff_t>(stop));
    }
    return segments;
}

}  // namespace riskpipe::textprep
