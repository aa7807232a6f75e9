#include "utsforge/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "format.hpp"
#include "utsforge/approx.hpp"
#include "utsforge/errors.hpp"

namespace utsforge {

// ---------------------------------------------------------------------------
// MuSpec

MuSpec::MuSpec(Kind kind, std::size_t start, std::size_t step, std::vector<std::size_t> indices)
    : kind_(kind), start_(start), step_(step), indices_(std::move(indices)) {}

MuSpec MuSpec::all() { return MuSpec(Kind::all, 0, 1, {}); }

MuSpec MuSpec::arithmetic(std::size_t start, std::size_t step) {
    if (step < 1) throw ConfigError("mu: arithmetic step must be >= 1");
    return MuSpec(Kind::arithmetic, start, step, {});
}

MuSpec MuSpec::explicit_list(std::vector<std::size_t> indices, std::size_t then_step) {
    if (indices.empty()) throw ConfigError("mu: explicit list must not be empty");
    if (then_step < 1) throw ConfigError("mu: continuation step must be >= 1");
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] <= indices[i - 1])
            throw ConfigError("mu: explicit indices must be strictly increasing");
    const std::size_t last = indices.back();
    return MuSpec(Kind::explicit_list, last, then_step, std::move(indices));
}

bool MuSpec::contains(std::size_t n) const {
    switch (kind_) {
        case Kind::all:
            return true;
        case Kind::arithmetic:
            return n >= start_ && (n - start_) % step_ == 0;
        case Kind::explicit_list:
            if (n <= start_) return std::binary_search(indices_.begin(), indices_.end(), n);
            return (n - start_) % step_ == 0;
    }
    return false;
}

std::size_t MuSpec::first_at_or_above(std::size_t n) const {
    switch (kind_) {
        case Kind::all:
            return n;
        case Kind::explicit_list:
            if (n <= start_) return *std::lower_bound(indices_.begin(), indices_.end(), n);
            [[fallthrough]];
        case Kind::arithmetic: {
            if (n <= start_) return start_;
            const std::size_t over = n - start_;
            return start_ + (over + step_ - 1) / step_ * step_;
        }
    }
    return n;
}

std::string MuSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::all:
            os << "all";
            break;
        case Kind::arithmetic:
            os << "arithmetic(" << start_ << ", " << step_ << ")";
            break;
        case Kind::explicit_list:
            os << "explicit(" << indices_.size() << " indices, then step " << step_ << ")";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// TolLadder

TolLadder::TolLadder(bool harmonic, std::vector<double> values)
    : harmonic_(harmonic), values_(std::move(values)) {}

TolLadder TolLadder::harmonic() { return TolLadder(true, {}); }

TolLadder TolLadder::from_list(std::vector<double> tols) {
    if (tols.empty()) throw ConfigError("tolerance ladder must not be empty");
    for (double t : tols)
        if (!(t > 0.0) || !std::isfinite(t))
            throw ConfigError("tolerances must be positive and finite");
    return TolLadder(false, std::move(tols));
}

std::optional<std::size_t> TolLadder::size() const {
    if (harmonic_) return std::nullopt;
    return values_.size();
}

double TolLadder::at(std::size_t s) const {
    if (s < 1) throw PreconditionError("tolerance ladder is indexed from s = 1");
    if (harmonic_) return 1.0 / static_cast<double>(s);
    if (s > values_.size()) throw PreconditionError("tolerance ladder index out of range");
    return values_[s - 1];
}

// ---------------------------------------------------------------------------
// Task enumeration

TaskStream::TaskStream(std::vector<CompactSetSpec> sets, std::vector<ComplexPolynomial> targets,
                       TolLadder ladder, MuSpec mu)
    : sets_(std::move(sets)),
      targets_(std::move(targets)),
      ladder_(std::move(ladder)),
      mu_(std::move(mu)) {
    if (sets_.empty()) throw ConfigError("set catalog is empty");
    if (targets_.empty()) throw ConfigError("target catalog is empty");
}

std::optional<std::size_t> TaskStream::total() const {
    const auto s = ladder_.size();
    if (!s) return std::nullopt;
    return sets_.size() * targets_.size() * *s;
}

std::optional<Task> TaskStream::next() {
    const std::size_t M = sets_.size();
    const std::size_t J = targets_.size();
    const auto S = ladder_.size();
    while (true) {
        if (S && level_ > M + J + *S) return std::nullopt;
        if (m_ > M || m_ + 2 > level_) {
            ++level_;
            m_ = 1;
            j_ = 1;
            continue;
        }
        if (j_ > J || m_ + j_ + 1 > level_) {
            ++m_;
            j_ = 1;
            continue;
        }
        const std::size_t s = level_ - m_ - j_;
        const std::size_t m = m_;
        const std::size_t j = j_++;
        if (S && s > *S) continue;
        return Task{{m, j, s}, sets_[m - 1], targets_[j - 1], ladder_.at(s), mu_};
    }
}

TaskStream enumerate_tasks(std::vector<CompactSetSpec> sets, std::vector<ComplexPolynomial> targets,
                           TolLadder ladder, MuSpec mu) {
    return TaskStream(std::move(sets), std::move(targets), std::move(ladder), std::move(mu));
}

// ---------------------------------------------------------------------------
// extend / run_forge

namespace {

std::string task_label(const Task& task) {
    std::ostringstream os;
    os << "task (m=" << task.coords.m << ", j=" << task.coords.j << ", s=" << task.coords.s
       << ") on " << describe(task.set) << " with tol " << detail::num(task.tol);
    return os.str();
}

}  // namespace

ForgeState extend(const ForgeState& state, const Task& task, const TransformSpec& transform,
                  const ForgeConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    if (!(task.tol > 0.0)) throw PreconditionError("extend: task tolerance must be positive");

    const PointCloud cloud = build_cloud(task.set, config.density);
    const std::size_t shift = state.coefficients.size();  // N0 + 1
    const ShiftedTarget g = shifted_target(transform, state.coefficients, task.target, cloud);

    const double M = std::max(1.0, std::pow(cloud.max_modulus, static_cast<double>(shift)));
    const double fit_tol = task.tol / (2.0 * M);
    if (!(fit_tol > 0.0))
        throw ApproximationFailed(task_label(task) + ": fit budget tol/(2M) underflows (M = " +
                                  detail::num(M) + ")");

    FitResult fitted;
    try {
        fitted = fit(cloud, g.samples, g.validation, fit_tol, config.max_degree);
    } catch (const FitError& e) {
        throw ApproximationFailed(task_label(task) + " after N0 = " +
                                  std::to_string(static_cast<long>(shift) - 1) +
                                  ", fit tolerance " + detail::num(fit_tol) + ": " + e.what());
    }

    ForgeState next = state;
    auto& a = next.coefficients;
    for (Complex p : fitted.polynomial.coefficients) a.push_back(solve_last(transform, a, p));
    const std::size_t chosen = task.mu.first_at_or_above(a.size() - 1);
    while (a.size() < chosen + 1) a.push_back(solve_last(transform, a, Complex{}));

    const auto values = eval_TN(transform, a, chosen, cloud.validation);
    const auto reference = task.target.evaluate(cloud.validation);
    const double achieved = sup_gap(values, reference);
    if (!(achieved < task.tol))
        throw ApproximationFailed(task_label(task) + ": achieved error " + detail::num(achieved) +
                                  " at N = " + std::to_string(chosen) + " is not below tol");

    LedgerEntry entry;
    entry.coords = task.coords;
    entry.set = task.set;
    entry.target = task.target;
    entry.tol = task.tol;
    entry.mu = task.mu;
    entry.chosen_n = chosen;
    entry.achieved_error = achieved;
    entry.block_begin = shift;
    entry.block_end = chosen;
    entry.fit_degree = static_cast<int>(fitted.polynomial.degree());
    entry.fit_tolerance = fit_tol;
    entry.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    next.ledger.push_back(std::move(entry));
    return next;
}

ForgeOutcome run_forge(const ForgeRequest& request) {
    if (!(request.config.density > 0.0) || !std::isfinite(request.config.density))
        throw ConfigError("density must be positive");
    if (request.config.max_degree < 0) throw ConfigError("maxDegree must be >= 0");
    for (const auto& set : request.sets) {
        try {
            validate(set);
        } catch (const InvalidSet& e) {
            throw ConfigError(std::string("invalid set in catalog: ") + e.what());
        }
    }
    TaskStream stream = enumerate_tasks(request.sets, request.targets, request.ladder, request.mu);
    if (const auto total = stream.total(); total && request.task_budget > *total)
        throw ConfigError("task budget " + std::to_string(request.task_budget) +
                          " exceeds the " + std::to_string(*total) + " tasks in the finite stream");

    ForgeOutcome out{UniversalSeries{request.transform, request.config, {}, request.seed.size()},
                     std::nullopt, std::nullopt};
    out.series.state.coefficients = request.seed;

    for (std::size_t t = 0; t < request.task_budget; ++t) {
        const auto task = stream.next();
        if (!task) break;
        try {
            out.series.state = extend(out.series.state, *task, request.transform, request.config);
        } catch (const ApproximationFailed& e) {
            out.failure = e.what();
            out.failed_task = task->coords;
            break;
        } catch (const InvalidTransform& e) {
            out.failure = e.what();
            out.failed_task = task->coords;
            out.transform_fault = true;
            break;
        }
    }
    return out;
}

}  // namespace utsforge
