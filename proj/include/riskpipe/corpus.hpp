#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace riskpipe::corpus {

enum class Label { control = 0, risk = 1 };
enum class Task { thirty_day, six_month };

const char* label_name(Label l);
Label label_from_name(const std::string& name);
const char* task_name(Task t);
Task task_from_name(const std::string& name);

struct Post {
    std::string post_id;
    std::int64_t timestamp = 0;  // UTC epoch seconds
    std::string text;
};

struct UserRecord {
    std::string user_id;
    Label label = Label::control;
    std::vector<Post> posts;  // ascending timestamp
};

struct Corpus {
    Task task = Task::thirty_day;
    std::vector<UserRecord> users;
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
};

struct SynthConfig {
    int n_risk = 50;
    int n_control = 50;
    int posts_per_user_min = 4;
    int posts_per_user_max = 12;
    int tokens_per_post_min = 30;
    int tokens_per_post_max = 80;
    double signal_strength = 1.0;  // probability a risk user's content word is drawn from the risk pools
    std::uint64_t seed = 1;
    Task task = Task::thirty_day;
    std::vector<std::string> risk_vocab;
    std::vector<std::string> neutral_vocab;
};

// Pools from the bundled lexicons: risk = 3ST dictionaries + suicide keywords
// + the sadness/fear/shame emotion sets, neutral from neutral_vocab.txt.
SynthConfig default_synth_config(const std::string& data_dir);

// One JSON object per line:
// {"user_id": str, "label": "risk"|"control", "posts": [{"post_id", "timestamp", "text"}]}
Corpus load_corpus(const std::string& path, Task task);
void write_corpus(const Corpus& corpus, const std::string& path);
std::string corpus_to_jsonl(const Corpus& corpus);

Corpus generate_synthetic(const SynthConfig& cfg);

// User-level stratified split; round(train_fraction * N) per class on the
// train side, clamped so both sides keep at least one user per class.
std::pair<Corpus, Corpus> split(const Corpus& corpus, const SplitSpec& spec);

}  // namespace riskpipe::corpus
