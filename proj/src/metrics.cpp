#include "riskpipe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "riskpipe/errors.hpp"

namespace riskpipe::eval {

double f_beta(const ConfusionCounts& c, double beta) {
    if (c.total() == 0) throw ValidationError("f_beta undefined: all confusion counts are zero");
    if (c.tp == 0) return 0.0;
    // (1+b^2)tp / ((1+b^2)tp + b^2 fn + fp), algebraically (1+b^2)PR/(b^2 P + R).
    double b2 = beta * beta;
    double num = (1.0 + b2) * static_cast<double>(c.tp);
    double den = num + b2 * static_cast<double>(c.fn) + static_cast<double>(c.fp);
    return num / den;
}

double true_positive_rate(const ConfusionCounts& c) {
    long long den = c.tp + c.fn;
    if (den == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(c.tp) / static_cast<double>(den);
}

double false_positive_rate(const ConfusionCounts& c) {
    long long den = c.fp + c.tn;
    if (den == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(c.fp) / static_cast<double>(den);
}

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size())
        throw ValidationError("roc_auc: scores and labels differ in length");
    std::size_t n = scores.size();
    long long npos = 0;
    for (int y : labels) npos += (y != 0);
    long long nneg = static_cast<long long>(n) - npos;
    if (npos == 0 || nneg == 0)
        throw ValidationError("roc_auc undefined: labels are single-class");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average ranks over tie groups, 1-based.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k) {
            if (labels[order[k]] != 0) pos_rank_sum += avg_rank;
        }
        i = j;
    }
    double np = static_cast<double>(npos), nn = static_cast<double>(nneg);
    return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

MetricsReport evaluate(const std::vector<Prediction>& predictions,
                       const std::vector<GoldLabel>& gold) {
    std::unordered_map<std::string, int> gold_by_id;
    for (const auto& g : gold) gold_by_id.emplace(g.user_id, g.label);
    if (gold_by_id.size() != gold.size())
        throw ValidationError("evaluate: duplicate user_id in gold labels");

    std::string missing;
    std::unordered_map<std::string, bool> seen;
    for (const auto& p : predictions) {
        if (!gold_by_id.count(p.user_id)) missing += " " + p.user_id;
        seen[p.user_id] = true;
    }
    for (const auto& g : gold) {
        if (!seen.count(g.user_id)) missing += " " + g.user_id;
    }
    if (!missing.empty() || predictions.size() != gold.size())
        throw ValidationError("evaluate: prediction/gold id mismatch:" + missing);

    MetricsReport r;
    std::vector<double> scores;
    std::vector<int> labels;
    scores.reserve(predictions.size());
    labels.reserve(predictions.size());
    for (const auto& p : predictions) {
        int truth = gold_by_id.at(p.user_id);
        if (p.label != 0) {
            (truth != 0 ? r.counts.tp : r.counts.fp)++;
        } else {
            (truth != 0 ? r.counts.fn : r.counts.tn)++;
        }
        scores.push_back(p.score);
        labels.push_back(truth);
    }
    r.f1 = f_beta(r.counts, 1.0);
    r.f2 = f_beta(r.counts, 2.0);
    r.tpr = true_positive_rate(r.counts);
    r.fpr = false_positive_rate(r.counts);
    r.auc = roc_auc(scores, labels);
    return r;
}

}  // namespace riskpipe::eval
