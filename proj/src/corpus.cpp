#include "riskpipe/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "riskpipe/errors.hpp"
#include "riskpipe/io_util.hpp"
#include "riskpipe/rng.hpp"

namespace riskpipe::corpus {

using nlohmann::json;

const char* label_name(Label l) { return l == Label::risk ? "risk" : "control"; }

Label label_from_name(const std::string& name) {
    if (name == "risk") return Label::risk;
    if (name == "control") return Label::control;
    throw ValidationError("unknown label: " + name);
}

const char* task_name(Task t) { return t == Task::thirty_day ? "thirty_day" : "six_month"; }

Task task_from_name(const std::string& name) {
    if (name == "thirty_day") return Task::thirty_day;
    if (name == "six_month") return Task::six_month;
    throw ValidationError("unknown task: " + name);
}

static bool blank_after_trim(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

static void validate_user(const UserRecord& u) {
    if (u.user_id.empty()) throw ValidationError("user with empty user_id");
    if (u.posts.empty()) throw ValidationError("user " + u.user_id + " has no posts");
    for (const auto& p : u.posts) {
        if (blank_after_trim(p.text))
            throw ValidationError("user " + u.user_id + ": post " + p.post_id + " has empty text");
        if (p.timestamp < 0)
            throw ValidationError("user " + u.user_id + ": post " + p.post_id +
                                  " has negative timestamp");
    }
}

static void sort_posts(UserRecord& u) {
    std::stable_sort(u.posts.begin(), u.posts.end(),
                     [](const Post& a, const Post& b) { return a.timestamp < b.timestamp; });
}

Corpus load_corpus(const std::string& path, Task task) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus: " + path);

    Corpus corpus;
    corpus.task = task;
    std::unordered_set<std::string> ids;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_after_trim(line)) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            UserRecord u;
            u.user_id = j.at("user_id").get<std::string>();
            u.label = label_from_name(j.at("label").get<std::string>());
            for (const auto& pj : j.at("posts")) {
                Post p;
                p.post_id = pj.at("post_id").get<std::string>();
                p.timestamp = pj.at("timestamp").get<std::int64_t>();
                p.text = pj.at("text").get<std::string>();
                u.posts.push_back(std::move(p));
            }
            validate_user(u);
            sort_posts(u);
            if (!ids.insert(u.user_id).second)
                throw ValidationError("duplicate user_id: " + u.user_id);
            corpus.users.push_back(std::move(u));
        } catch (const json::exception& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return corpus;
}

std::string corpus_to_jsonl(const Corpus& corpus) {
    std::string out;
    for (const auto& u : corpus.users) {
        json posts = json::array();
        for (const auto& p : u.posts) {
            posts.push_back({{"post_id", p.post_id}, {"timestamp", p.timestamp}, {"text", p.text}});
        }
        json j = {{"user_id", u.user_id}, {"label", label_name(u.label)}, {"posts", posts}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

void write_corpus(const Corpus& corpus, const std::string& path) {
    atomic_write_file(path, corpus_to_jsonl(corpus));
}

SynthConfig default_synth_config(const std::string& data_dir) {
    SynthConfig cfg;
    std::set<std::string> risk;
    for (const char* f : {"tst/gloom_burden.txt", "tst/violence.txt", "tst/hurt.txt",
                          "tst/shame.txt", "tst/suicide.txt", "emotions/sadness.txt",
                          "emotions/fear.txt", "emotions/shame.txt"}) {
        for (const auto& w : read_lines(data_dir + "/" + f)) risk.insert(w);
    }
    cfg.risk_vocab.assign(risk.begin(), risk.end());
    cfg.neutral_vocab = read_lines(data_dir + "/neutral_vocab.txt");
    return cfg;
}

// Structural glue shared by both classes so that pronoun and function-word
// statistics carry no label signal.
static const char* kFiller[] = {
    "i",    "my",   "me",   "we",   "you",  "the",  "a",     "to",    "and",  "of",
    "in",   "it",   "is",   "was",  "be",   "have", "on",    "for",   "with", "at",
    "this", "that", "so",   "just", "really", "today", "now", "then", "about", "but"};
static const char* kPunct[] = {".", ",", "!", "?"};

Corpus generate_synthetic(const SynthConfig& cfg) {
    if (cfg.n_risk < 1 || cfg.n_control < 1)
        throw ValidationError("generate_synthetic: need at least one user per class");
    if (cfg.risk_vocab.empty() || cfg.neutral_vocab.empty())
        throw ValidationError("generate_synthetic: empty vocabulary pools");
    if (cfg.posts_per_user_min < 1 || cfg.posts_per_user_max < cfg.posts_per_user_min)
        throw ValidationError("generate_synthetic: bad posts_per_user range");
    if (cfg.signal_strength < 0.0 || cfg.signal_strength > 1.0)
        throw ValidationError("generate_synthetic: signal_strength outside [0,1]");

    Rng rng(cfg.seed);
    Corpus corpus;
    corpus.task = cfg.task;
    int total = cfg.n_risk + cfg.n_control;
    corpus.users.reserve(static_cast<std::size_t>(total));

    for (int ui = 0; ui < total; ++ui) {
        bool is_risk = ui < cfg.n_risk;
        UserRecord u;
        char idbuf[32];
        std::snprintf(idbuf, sizeof idbuf, "%s_%04d", is_risk ? "risk" : "ctrl",
                      is_risk ? ui : ui - cfg.n_risk);
        u.user_id = idbuf;
        u.label = is_risk ? Label::risk : Label::control;

        long long n_posts = rng.int_in(cfg.posts_per_user_min, cfg.posts_per_user_max);
        std::int64_t ts = 1500000000 + static_cast<std::int64_t>(rng.below(1000000));
        for (long long pi = 0; pi < n_posts; ++pi) {
            Post p;
            char pid[48];
            std::snprintf(pid, sizeof pid, "%s_p%03lld", u.user_id.c_str(), pi);
            p.post_id = pid;
            ts += rng.int_in(3600, 86400);
            p.timestamp = ts;

            long long n_tokens = rng.int_in(cfg.tokens_per_post_min, cfg.tokens_per_post_max);
            std::string text;
            for (long long ti = 0; ti < n_tokens; ++ti) {
                double roll = rng.unit();
                std::string tok;
                if (roll < 0.22) {
                    tok = kFiller[rng.below(std::size(kFiller))];
                } else if (roll < 0.28) {
                    tok = kPunct[rng.below(std::size(kPunct))];
                } else if (roll < 0.285) {
                    tok = "@friend" + std::to_string(rng.below(100));
                } else if (roll < 0.29) {
                    tok = "https://short.ln/" + std::to_string(rng.below(1000));
                } else if (is_risk && rng.unit() < cfg.signal_strength) {
                    tok = cfg.risk_vocab[rng.below(cfg.risk_vocab.size())];
                } else {
                    tok = cfg.neutral_vocab[rng.below(cfg.neutral_vocab.size())];
                }
                if (!text.empty()) text += ' ';
                text += tok;
            }
            p.text = std::move(text);
            u.posts.push_back(std::move(p));
        }
        corpus.users.push_back(std::move(u));
    }
    return corpus;
}

std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw ValidationError("split: train_fraction must lie in (0,1)");

    std::vector<std::size_t> idx_risk, idx_ctrl;
    for (std::size_t i = 0; i < corpus.users.size(); ++i) {
        (corpus.users[i].label == Label::risk ? idx_risk : idx_ctrl).push_back(i);
    }
    if (idx_risk.size() < 2 || idx_ctrl.size() < 2)
        throw ValidationError("split: stratification needs at least 2 users per class");

    Rng rng(spec.seed);
    std::vector<bool> in_train(corpus.users.size(), false);
    for (auto* cls : {&idx_risk, &idx_ctrl}) {
        std::vector<std::size_t> order = *cls;
        rng.shuffle(order);
        auto n = static_cast<long long>(order.size());
        long long n_train = std::llround(spec.train_fraction * static_cast<double>(n));
        n_train = std::clamp(n_train, 1LL, n - 1);
        for (long long i = 0; i < n_train; ++i) in_train[order[static_cast<std::size_t>(i)]] = true;
    }

    Corpus train, val;
    train.task = val.task = corpus.task;
    for (std::size_t i = 0; i < corpus.users.size(); ++i) {
        (in_train[i] ? train : val).users.push_back(corpus.users[i]);
    }
    return {std::move(train), std::move(val)};
}

}  // namespace riskpipe::corpus
