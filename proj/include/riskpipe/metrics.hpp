#pragma once

#include <string>
#include <vector>

namespace riskpipe::eval {

struct ConfusionCounts {
    long long tp = 0;
    long long fp = 0;
    long long tn = 0;
    long long fn = 0;

    long long total() const { return tp + fp + tn + fn; }
};

struct MetricsReport {
    double f1 = 0.0;
    double f2 = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;
    double auc = 0.0;
    ConfusionCounts counts;
};

// F-beta from confusion counts. Returns 0 when tp == 0 (precision or recall
// vanishes); throws ValidationError when every count is zero.
double f_beta(const ConfusionCounts& c, double beta);

// tp / (tp + fn); NaN when there are no positives.
double true_positive_rate(const ConfusionCounts& c);

// fp / (fp + tn); NaN when there are no negatives.
double false_positive_rate(const ConfusionCounts& c);

// Mann-Whitney AUC via rank summation, ties half-weighted. Exact for the
// score counts we handle. Throws ValidationError when labels are single-class.
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct Prediction {
    std::string user_id;
    int label = 0;  // 1 = risk
    double score = 0.0;
};

struct GoldLabel {
    std::string user_id;
    int label = 0;
};

// Confusion counts at the fixed 0.5 threshold plus all five metrics.
// Prediction and gold id sets must coincide.
MetricsReport evaluate(const std::vector<Prediction>& predictions,
                       const std::vector<GoldLabel>& gold);

}  // namespace riskpipe::eval
