#include "riskpipe/lexicons.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "riskpipe/errors.hpp"
#include "riskpipe/io_util.hpp"

namespace riskpipe::lexicons {

std::optional<std::string> entry_violation(const std::string& word) {
    if (word.empty()) return "empty entry";
    if (word.find('-') != std::string::npos) return "contains hyphen";
    for (unsigned char c : word) {
        if (c >= 'A' && c <= 'Z') return "contains uppercase characters";
        if (c < 'a' || c > 'z') return "contains non-alphabetic characters";
    }
    return std::nullopt;
}

namespace {

std::string basename_no_ext(const std::string& path) {
    std::filesystem::path p(path);
    return p.stem().string();
}

}  // namespace

Lexicon load_lexicon(const std::string& path, LexiconKind kind) {
    Lexicon lex;
    lex.name = basename_no_ext(path);
    lex.kind = kind;
    std::vector<std::string> lines = io_util::read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        std::string word;
        double score = 0.0;
        if (kind == LexiconKind::word_score_map) {
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos) {
                // Be forgiving about the separator: some published score
                // files use spaces.
                tab = line.find(' ');
            }
            if (tab == std::string::npos)
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": expected word<TAB>score");
            word = line.substr(0, tab);
            std::string rest = line.substr(tab + 1);
            try {
                std::size_t used = 0;
                score = std::stod(rest, &used);
                while (used < rest.size() && std::isspace(static_cast<unsigned char>(rest[used])))
                    ++used;
                if (used != rest.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                      ": bad score '" + rest + "'");
            }
            if (!(score >= 0.0 && score <= 1.0))
                throw ValidationError(path + ": line " + std::to_string(i + 1) + ": score " +
                                      rest + " outside [0, 1]");
        } else {
            word = line;
        }
        if (auto why = entry_violation(word)) {
            lex.rejected.emplace_back(word, *why);
            continue;
        }
        if (lex.entries.count(word))
            throw ValidationError(path + ": line " + std::to_string(i + 1) +
                                  ": duplicate entry '" + word + "'");
        lex.entries[word] = score;
    }
    return lex;
}

void write_lexicon(const Lexicon& lex, const std::string& path) {
    std::ostringstream out;
    for (const auto& [word, score] : lex.entries) {
        if (lex.kind == LexiconKind::word_score_map) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", score);
            out << word << '\t' << buf << '\n';
        } else {
            out << word << '\n';
        }
    }
    io_util::atomic_write_file(path, out.str());
}

EmotionBundle EmotionBundle::load(const std::string& manifest_path) {
    EmotionBundle bundle;
    std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
    std::vector<std::string> lines = io_util::read_lines(manifest_path);
    if (lines.empty()) throw ValidationError(manifest_path + ": empty emotion manifest");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::istringstream ss(lines[i]);
        std::string tag, rel_path, kind_name;
        if (!(ss >> tag >> rel_path >> kind_name))
            throw ValidationError(manifest_path + ": line " + std::to_string(i + 1) +
                                  ": expected tag<TAB>path<TAB>kind");
        LexiconKind kind;
        if (kind_name == "set")
            kind = LexiconKind::word_set;
        else if (kind_name == "scores")
            kind = LexiconKind::word_score_map;
        else
            throw ValidationError(manifest_path + ": line " + std::to_string(i + 1) +
                                  ": unknown kind '" + kind_name + "'");
        std::size_t slot;
        auto it = std::find(bundle.slot_names_.begin(), bundle.slot_names_.end(), tag);
        if (it == bundle.slot_names_.end()) {
            slot = bundle.slot_names_.size();
            bundle.slot_names_.push_back(tag);
        } else {
            slot = static_cast<std::size_t>(it - bundle.slot_names_.begin());
        }
        std::string full = (base / rel_path).string();
        Lexicon lex = load_lexicon(full, kind);
        lex.name = tag;
        bundle.sources_.emplace_back(slot, std::move(lex));
    }
    return bundle;
}

EmotionFeatureRow emotion_features(const textprep::TokenStream& stream,
                                   const EmotionBundle& bundle) {
    EmotionFeatureRow row;
    row.tags.assign(bundle.slot_count(), 0.0);
    for (const auto& tok : stream.tokens) {
        for (const auto& [slot, lex] : bundle.sources()) {
            const std::string* hit = nullptr;
            if (lex.contains(tok.lemma))
                hit = &tok.lemma;
            else if (lex.contains(tok.lower))
                hit = &tok.lower;
            if (!hit) continue;
            if (lex.kind == LexiconKind::word_set)
                row.tags[slot] += 1.0;
            else
                row.tags[slot] += lex.score(*hit);
        }
    }
    return row;
}

TstDictionaries TstDictionaries::load(const std::string& data_dir) {
    std::filesystem::path base = std::filesystem::path(data_dir) / "tst";
    TstDictionaries d;
    d.gloom_burden = load_lexicon((base / "gloom_burden.txt").string(), LexiconKind::word_set);
    d.violence = load_lexicon((base / "violence.txt").string(), LexiconKind::word_set);
    d.hurt = load_lexicon((base / "hurt.txt").string(), LexiconKind::word_set);
    d.shame = load_lexicon((base / "shame.txt").string(), LexiconKind::word_set);
    d.suicide = load_lexicon((base / "suicide.txt").string(), LexiconKind::word_set);
    return d;
}

namespace {

bool dict_hit(const Lexicon& lex, const textprep::Token& tok) {
    return lex.contains(tok.lemma) || lex.contains(tok.lower);
}

}  // namespace

TstFeatureRow tst_features(const textprep::TokenStream& stream, const TstDictionaries& dicts) {
    TstFeatureRow row;
    for (const auto& tok : stream.tokens) {
        if (dict_hit(dicts.gloom_burden, tok)) ++row.gloom_burden_count;
        if (dict_hit(dicts.violence, tok)) ++row.violence_count;
        if (dict_hit(dicts.hurt, tok)) ++row.hurt_count;
        if (dict_hit(dicts.shame, tok)) ++row.shame_count;
        if (dict_hit(dicts.suicide, tok)) ++row.suicide_keyword_count;
    }
    return row;
}

Lexicon build_3st_dictionary(const std::vector<std::string>& vocab, const Matrix& word_vectors,
                             const std::vector<std::string>& seeds, int k,
                             const textprep::Resources& res, const std::string& name) {
    if (k < 1) throw ValidationError("neighbor count k must be >= 1");
    if (vocab.size() != word_vectors.rows)
        throw ValidationError("vocabulary size does not match embedding row count");
    std::set<std::string> collected;
    for (const auto& seed : seeds) {
        auto it = std::find(vocab.begin(), vocab.end(), seed);
        if (it == vocab.end())
            throw ValidationError("seed word '" + seed + "' not in embedding vocabulary");
        std::size_t si = static_cast<std::size_t>(it - vocab.begin());
        const double* sv = word_vectors.row(si);
        // Rank every other vocabulary word by cosine similarity to the seed.
        // Ties break toward the lower vocabulary index so results are stable.
        std::vector<std::pair<double, std::size_t>> scored;
        scored.reserve(vocab.size());
        for (std::size_t j = 0; j < vocab.size(); ++j) {
            if (j == si) continue;
            scored.emplace_back(cosine(sv, word_vectors.row(j), word_vectors.cols), j);
        }
        std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), scored.size());
        for (std::size_t j = 0; j < take; ++j) collected.insert(vocab[scored[j].second]);
    }
    Lexicon lex;
    lex.name = name;
    lex.kind = LexiconKind::word_set;
    std::set<std::string> seen_lower;
    for (const auto& word : collected) {
        std::string lower = word;
        bool alpha = !lower.empty();
        for (auto& c : lower) {
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        for (unsigned char c : lower) {
            if (c < 'a' || c > 'z') {
                alpha = false;
                break;
            }
        }
        if (!alpha) {
            lex.rejected.emplace_back(word, word.find('-') != std::string::npos
                                                ? "contains hyphen"
                                                : "contains non-alphabetic characters");
            continue;
        }
        if (res.is_stopword(lower)) {
            lex.rejected.emplace_back(word, "stop-word");
            continue;
        }
        if (!seen_lower.insert(lower).second) {
            lex.rejected.emplace_back(word, "case-duplicate");
            continue;
        }
        lex.entries[lower] = 0.0;
    }
    return lex;
}

}  // namespace riskpipe::lexicons
