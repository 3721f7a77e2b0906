#include "lrrsc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lrrsc {

namespace {

// Minimum-cost assignment on a square matrix via the potentials method; O(k^3).
// Returns row -> column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
    const int n = static_cast<int>(cost.size());
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            std::int64_t delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

} // namespace

LabelMatching match_labels(const std::vector<int>& predicted, const std::vector<int>& truth) {
    if (predicted.empty()) throw argument_error("match_labels: empty labelings");
    if (predicted.size() != truth.size())
        throw argument_error("match_labels: labelings differ in length");

    int max_label = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] < 0 || truth[i] < 0)
            throw argument_error("match_labels: labels must be nonnegative");
        max_label = std::max({max_label, predicted[i], truth[i]});
    }
    const int k = max_label + 1;
    if (static_cast<std::size_t>(k) > predicted.size())
        throw argument_error("match_labels: label alphabet larger than sample count");

    // maximize agreement = minimize negated confusion counts
    std::vector<std::vector<std::int64_t>> cost(static_cast<std::size_t>(k),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    for (std::size_t i = 0; i < predicted.size(); ++i)
        --cost[static_cast<std::size_t>(predicted[i])][static_cast<std::size_t>(truth[i])];

    LabelMatching out;
    out.map = min_cost_assignment(cost);
    for (int a = 0; a < k; ++a)
        out.agreement -= cost[static_cast<std::size_t>(a)][static_cast<std::size_t>(out.map[static_cast<std::size_t>(a)])];
    return out;
}

double clustering_error(const std::vector<int>& predicted, const std::vector<int>& truth) {
    const LabelMatching m = match_labels(predicted, truth);
    return 1.0 - static_cast<double>(m.agreement) / static_cast<double>(predicted.size());
}

ErrorAggregate aggregate_errors(const std::vector<double>& errors) {
    if (errors.empty()) throw argument_error("aggregate_errors: empty input");
    ErrorAggregate out;
    const std::size_t n = errors.size();

    double sum = 0.0;
    out.max = errors[0];
    for (double e : errors) {
        sum += e;
        out.max = std::max(out.max, e);
    }
    out.mean = sum / static_cast<double>(n);

    std::vector<double> sorted(errors);
    std::sort(sorted.begin(), sorted.end());
    out.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    if (n > 1) {
        double ss = 0.0;
        for (double e : errors) ss += (e - out.mean) * (e - out.mean);
        out.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return out;
}

} // namespace lrrsc
