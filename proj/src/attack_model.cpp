#include "mtd/attack_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mtd {

AttackTimeModel AttackTimeModel::exponential(double lambda) {
    if (!(lambda > 0.0))
        throw ValidationError("exponential attack model requires rate > 0");
    AttackTimeModel m;
    m.kind = Kind::Exponential;
    m.rate = lambda;
    return m;
}

AttackTimeModel AttackTimeModel::deterministic(double c) {
    if (!(c >= 0.0))
        throw ValidationError("deterministic attack model requires value >= 0");
    AttackTimeModel m;
    m.kind = Kind::Deterministic;
    m.value = c;
    return m;
}

AttackTimeModel AttackTimeModel::empirical(std::vector<double> samples) {
    if (samples.empty())
        throw ValidationError("empirical attack model requires nonempty samples");
    for (double s : samples)
        if (!(s >= 0.0))
            throw ValidationError("empirical attack model samples must be >= 0");
    AttackTimeModel m;
    m.kind = Kind::Empirical;
    m.samples = std::move(samples);
    return m;
}

double AttackTimeModel::mean() const {
    switch (kind) {
    case Kind::Exponential: return 1.0 / rate;
    case Kind::Deterministic: return value;
    case Kind::Empirical:
        return std::accumulate(samples.begin(), samples.end(), 0.0) /
               static_cast<double>(samples.size());
    }
    return 0.0;
}

double expected_overlap(const AttackTimeModel& model, double tau) {
    if (!(tau >= 0.0)) throw ValidationError("expected_overlap requires tau >= 0");
    switch (model.kind) {
    case AttackTimeModel::Kind::Exponential:
        // E[max(tau - a, 0)] = tau - (1 - exp(-lambda tau)) / lambda
        return tau - (-std::expm1(-model.rate * tau)) / model.rate;
    case AttackTimeModel::Kind::Deterministic:
        return std::max(tau - model.value, 0.0);
    case AttackTimeModel::Kind::Empirical: {
        double acc = 0.0;
        for (double s : model.samples) acc += std::max(tau - s, 0.0);
        return acc / static_cast<double>(model.samples.size());
    }
    }
    return 0.0;
}

double sample_attack_time(const AttackTimeModel& model, std::mt19937_64& rng) {
    switch (model.kind) {
    case AttackTimeModel::Kind::Exponential: {
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        return -std::log1p(-u01(rng)) / model.rate;
    }
    case AttackTimeModel::Kind::Deterministic:
        return model.value;
    case AttackTimeModel::Kind::Empirical: {
        std::uniform_int_distribution<std::size_t> pick(0, model.samples.size() - 1);
        return model.samples[pick(rng)];
    }
    }
    return 0.0;
}

Index OverlapTable::lookup(double tau) const {
    const double* begin = grid.data();
    const double* end = begin + grid.size();
    const double* it = std::lower_bound(begin, end, tau - 1e-12);
    if (it != end && std::abs(*it - tau) <= 1e-12)
        return static_cast<Index>(it - begin);
    throw ValidationError("tau = " + std::to_string(tau) +
                          " is not on the overlap table grid");
}

Vector make_tau_grid(double tau_min, double tau_max, double step) {
    if (!(tau_min >= 0.0) || !(tau_max >= tau_min) || !(step > 0.0))
        throw ValidationError("invalid tau grid parameters");
    std::vector<double> pts;
    for (Index k = 0;; ++k) {
        double t = tau_min + static_cast<double>(k) * step;
        if (t > tau_max + 1e-12) break;
        pts.push_back(std::min(t, tau_max));
    }
    if (pts.empty() || pts.back() < tau_max - 1e-9) pts.push_back(tau_max);
    return Eigen::Map<Vector>(pts.data(), static_cast<Index>(pts.size()));
}

namespace {
void check_grid(const Vector& grid) {
    for (Index t = 0; t < grid.size(); ++t) {
        if (!(grid[t] >= 0.0))
            throw ValidationError("tau grid points must be >= 0");
        if (t > 0 && !(grid[t] > grid[t - 1]))
            throw ValidationError("tau grid must be strictly increasing");
    }
}
} // namespace

OverlapTable build_overlap_table(const std::vector<AttackTimeModel>& models,
                                 const Vector& tau_grid) {
    check_grid(tau_grid);
    OverlapTable table;
    table.grid = tau_grid;
    table.entries.resize(tau_grid.size(), static_cast<Index>(models.size()));
    for (Index j = 0; j < static_cast<Index>(models.size()); ++j)
        for (Index t = 0; t < tau_grid.size(); ++t)
            table.entries(t, j) = expected_overlap(models[j], tau_grid[t]);
    return table;
}

OverlapTable estimate_overlap_table(const std::vector<AttackTimeModel>& models,
                                    const Vector& tau_grid, int sample_count,
                                    std::mt19937_64& rng) {
    check_grid(tau_grid);
    if (sample_count < 1)
        throw ValidationError("estimate_overlap_table requires sample_count >= 1");
    OverlapTable table;
    table.grid = tau_grid;
    table.entries.resize(tau_grid.size(), static_cast<Index>(models.size()));
    std::vector<double> draws(static_cast<std::size_t>(sample_count));
    for (Index j = 0; j < static_cast<Index>(models.size()); ++j) {
        for (double& d : draws) d = sample_attack_time(models[j], rng);
        for (Index t = 0; t < tau_grid.size(); ++t) {
            double acc = 0.0;
            for (double d : draws) acc += std::max(tau_grid[t] - d, 0.0);
            table.entries(t, j) = acc / static_cast<double>(sample_count);
        }
    }
    return table;
}

} // namespace mtd
