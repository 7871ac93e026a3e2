#pragma once

#include "ebg/admissible.hpp"
#include "ebg/census.hpp"
#include "ebg/graph.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ebg {

struct AnnealConfig {
    double t0 = 1.0;
    // Cooling factor in (0,1); when unset, chosen so the temperature decays
    // from t0 to 1e-3 over the step budget.
    std::optional<double> alpha;
    std::int64_t steps = 2'000'000;  // per restart
    int restarts = 32;
    std::uint64_t seed = 0;
    std::array<std::int64_t, 5> weights{1, 1, 1, 1, 1};
    std::int64_t audit_interval = 100'000;     // 0 disables
    std::int64_t progress_interval = 100'000;  // 0 disables
    std::int64_t checkpoint_interval = 0;      // 0 disables; sequential runs only
    int threads = 1;
    // Stop the whole run after this many steps summed over chains (graceful
    // interruption point; a final checkpoint is emitted). Sequential only.
    std::optional<std::int64_t> halt_after;

    double effective_alpha() const;
    void validate() const;
};

// Weighted l1 distance between a profile and the target. Zero with unit
// weights exactly when the profiles coincide.
std::int64_t score_l1(const Profile3& pr, const Profile3& target,
                      const std::array<std::int64_t, 5>& weights);

struct ProgressEvent {
    int restart = 0;
    std::int64_t step = 0;
    std::int64_t score = 0;
    double temperature = 0.0;
    std::int64_t best_score = 0;
};

struct CheckpointState {
    int n = 0;
    std::int64_t k = 0;
    std::uint64_t master_seed = 0;
    int restart_index = 0;
    std::int64_t step = 0;         // steps completed in the current chain
    std::string rng_state;         // serialized mt19937_64
    std::string current_graph6;
    std::int64_t current_score = 0;
    bool has_best = false;
    std::string best_graph6;
    std::int64_t best_score = 0;
    int best_restart = 0;
    std::int64_t best_step = 0;
};

struct RunHooks {
    std::function<void(const ProgressEvent&)> on_progress;
    std::function<void(const CheckpointState&)> on_checkpoint;
};

struct SearchResult {
    bool found = false;
    std::string best_graph6;
    std::int64_t best_score = 0;
    int best_restart = 0;
    std::int64_t best_step = 0;
    int restarts_until_found = 0;  // chains consumed; == restarts when not found
    std::vector<std::uint64_t> chain_seeds;
    bool halted = false;  // stopped by halt_after before exhausting the budget
    double wall_seconds = 0.0;
};

// One annealing chain with explicit state, so runs can checkpoint and resume.
class Chain {
public:
    struct Scoring {
        Profile3 target;
        std::array<std::int64_t, 5> weights;
        double t0;
        double log_alpha;
    };

    // Fresh chain: seeds the RNG and draws a near-regular start graph.
    Chain(int n, std::int64_t k, const Scoring& scoring, std::uint64_t seed);
    // Resumed chain.
    Chain(const Scoring& scoring, const std::string& rng_state, LabeledGraph current,
          std::int64_t step);

    // One proposal-accept-reject step. Greedy on non-increases; an increase
    // of delta is accepted with probability exp(-delta/T).
    void step_once();

    std::int64_t score() const { return score_; }
    std::int64_t step_index() const { return step_; }
    double temperature() const;
    const LabeledGraph& graph() const { return tracker_.graph(); }
    const Profile3 profile() const { return tracker_.profile3(); }
    std::string rng_state() const;
    void audit() const { tracker_.audit(); }

private:
    Scoring scoring_;
    Rng rng_;
    ProfileTracker tracker_;
    std::int64_t score_ = 0;
    std::int64_t step_ = 0;
};

// Runs `restarts` independent chains seeded by mix_seed(master, i). Chains
// stop early at score zero; the winner is the lowest-index zero-score chain,
// otherwise the lexicographic best (score, restart, step). With threads > 1
// the chains run in parallel and the outcome is identical to the sequential
// one for the same master seed.
SearchResult run_search(int n, std::int64_t k, const AnnealConfig& cfg,
                        const RunHooks& hooks = {},
                        const std::optional<CheckpointState>& resume = std::nullopt);

}  // namespace ebg
