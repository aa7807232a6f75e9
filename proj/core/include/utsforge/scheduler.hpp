#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "utsforge/compact_sets.hpp"
#include "utsforge/polynomial.hpp"
#include "utsforge/transform.hpp"

namespace utsforge {

// Infinite admissible index set for the cut indices N.
class MuSpec {
public:
    enum class Kind { all, arithmetic, explicit_list };

    static MuSpec all();
    static MuSpec arithmetic(std::size_t start, std::size_t step);
    // Strictly increasing indices, continued after the last one with the
    // given step.
    static MuSpec explicit_list(std::vector<std::size_t> indices, std::size_t then_step);

    Kind kind() const noexcept { return kind_; }
    std::size_t start() const noexcept { return start_; }
    std::size_t step() const noexcept { return step_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

    bool contains(std::size_t n) const;
    // Smallest member >= n.
    std::size_t first_at_or_above(std::size_t n) const;

    std::string describe() const;

private:
    MuSpec(Kind kind, std::size_t start, std::size_t step, std::vector<std::size_t> indices);

    Kind kind_;
    std::size_t start_;
    std::size_t step_;
    std::vector<std::size_t> indices_;
};

// Tolerances 1/s: either the harmonic ladder (1, 1/2, 1/3, ...) or an explicit
// finite list indexed by s = 1, 2, ...
class TolLadder {
public:
    static TolLadder harmonic();
    static TolLadder from_list(std::vector<double> tols);

    bool is_harmonic() const noexcept { return harmonic_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::optional<std::size_t> size() const;
    double at(std::size_t s) const;  // s >= 1

private:
    TolLadder(bool harmonic, std::vector<double> values);

    bool harmonic_;
    std::vector<double> values_;
};

// Position of a task in the (m, j, s) grid, all 1-based.
struct TaskCoordinates {
    std::size_t m = 0;
    std::size_t j = 0;
    std::size_t s = 0;

    friend bool operator==(const TaskCoordinates&, const TaskCoordinates&) = default;
};

struct Task {
    TaskCoordinates coords;
    CompactSetSpec set;
    ComplexPolynomial target;
    double tol = 0.0;
    MuSpec mu = MuSpec::all();
};

// Diagonal order over (m, j, s): level L = m + j + s ascending, then m, then
// j, skipping coordinates outside the catalogs. Every triple appears once.
class TaskStream {
public:
    TaskStream(std::vector<CompactSetSpec> sets, std::vector<ComplexPolynomial> targets,
               TolLadder ladder, MuSpec mu);

    std::optional<Task> next();
    // Total number of tasks when the ladder is finite.
    std::optional<std::size_t> total() const;

private:
    std::vector<CompactSetSpec> sets_;
    std::vector<ComplexPolynomial> targets_;
    TolLadder ladder_;
    MuSpec mu_;
    std::size_t level_ = 3;
    std::size_t m_ = 1;
    std::size_t j_ = 1;
};

TaskStream enumerate_tasks(std::vector<CompactSetSpec> sets, std::vector<ComplexPolynomial> targets,
                           TolLadder ladder, MuSpec mu);

struct ForgeConfig {
    double density = 16.0;
    int max_degree = 64;
};

struct LedgerEntry {
    TaskCoordinates coords;
    CompactSetSpec set;
    ComplexPolynomial target;
    double tol = 0.0;
    MuSpec mu = MuSpec::all();

    std::size_t chosen_n = 0;
    double achieved_error = 0.0;
    std::size_t block_begin = 0;  // first coefficient index appended by this task
    std::size_t block_end = 0;    // == chosen_n
    int fit_degree = 0;
    double fit_tolerance = 0.0;
    double seconds = 0.0;
};

struct ForgeState {
    std::vector<Complex> coefficients;
    std::vector<LedgerEntry> ledger;
};

// One density step: appends a block of coefficients after the current prefix
// so that T_N approximates task.target within task.tol on the task's cloud, for
// the smallest admissible N. Throws ApproximationFailed on failure; the input
// state is never modified.
ForgeState extend(const ForgeState& state, const Task& task, const TransformSpec& transform,
                  const ForgeConfig& config);

struct UniversalSeries {
    TransformSpec transform = TransformSpec::identity();
    ForgeConfig config;
    ForgeState state;
    std::size_t seed_length = 0;
};

struct ForgeRequest {
    TransformSpec transform = TransformSpec::identity();
    std::vector<CompactSetSpec> sets;
    std::vector<ComplexPolynomial> targets;
    TolLadder ladder = TolLadder::harmonic();
    MuSpec mu = MuSpec::all();
    std::size_t task_budget = 0;
    std::vector<Complex> seed;
    ForgeConfig config;
};

struct ForgeOutcome {
    UniversalSeries series;
    std::optional<std::string> failure;  // set when a task aborted the run
    std::optional<TaskCoordinates> failed_task;
    bool transform_fault = false;  // failure came from the transform, not the fit

    bool ok() const noexcept { return !failure.has_value(); }
};

// Runs the first task_budget tasks of the diagonal stream from the seed.
// Catalog problems throw ConfigError; a failing task stops the run and is
// reported in the outcome next to the partial series.
ForgeOutcome run_forge(const ForgeRequest& request);

}  // namespace utsforge
