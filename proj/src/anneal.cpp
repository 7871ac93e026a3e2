#include "ebg/anneal.hpp"

#include "ebg/errors.hpp"
#include "ebg/graph6.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace ebg {

double AnnealConfig::effective_alpha() const {
    if (alpha) return *alpha;
    if (steps <= 0) return 0.5;  // unused: no steps will run
    if (t0 <= 1e-3)
        throw InputError("anneal config: default cooling needs t0 > 1e-3; set alpha explicitly");
    return std::pow(1e-3 / t0, 1.0 / static_cast<double>(steps));
}

void AnnealConfig::validate() const {
    if (t0 <= 0) throw InputError("anneal config: t0 must be positive");
    if (steps < 0) throw InputError("anneal config: steps must be nonnegative");
    if (restarts < 1) throw InputError("anneal config: restarts must be >= 1");
    if (threads < 1) throw InputError("anneal config: threads must be >= 1");
    double a = effective_alpha();
    if (!(a > 0.0 && a < 1.0))
        throw InputError("anneal config: alpha must lie in (0,1)");
    for (auto w : weights)
        if (w <= 0) throw InputError("anneal config: score weights must be positive");
    if (halt_after && threads != 1)
        throw InputError("anneal config: halt_after requires threads == 1");
    if (checkpoint_interval > 0 && threads != 1)
        throw InputError("anneal config: checkpointing requires threads == 1");
}

std::int64_t score_l1(const Profile3& pr, const Profile3& target,
                      const std::array<std::int64_t, 5>& weights) {
    auto x = pr.as_array();
    auto t = target.as_array();
    __int128 acc = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        std::int64_t diff = x[i] - t[i];
        acc += static_cast<__int128>(weights[i]) * (diff < 0 ? -diff : diff);
    }
    if (acc > std::numeric_limits<std::int64_t>::max())
        throw InternalError("score overflow; reduce weights");
    return static_cast<std::int64_t>(acc);
}

Chain::Chain(int n, std::int64_t k, const Scoring& scoring, std::uint64_t seed)
    : scoring_(scoring), rng_(seed), tracker_(near_regular_random(n, k, rng_)) {
    score_ = score_l1(tracker_.profile3(), scoring_.target, scoring_.weights);
}

Chain::Chain(const Scoring& scoring, const std::string& rng_state, LabeledGraph current,
             std::int64_t step)
    : scoring_(scoring), tracker_(std::move(current)), step_(step) {
    std::istringstream in(rng_state);
    in >> rng_;
    if (!in) throw InputError("chain resume: bad RNG state");
    score_ = score_l1(tracker_.profile3(), scoring_.target, scoring_.weights);
}

std::string Chain::rng_state() const {
    std::ostringstream out;
    out << rng_;
    return out.str();
}

double Chain::temperature() const {
    // Closed form t0 * alpha^j; immune to iterated-multiplication drift.
    return scoring_.t0 * std::exp(static_cast<double>(step_) * scoring_.log_alpha);
}

void Chain::step_once() {
    const LabeledGraph& g = tracker_.graph();
    auto idx = static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(g.k())));
    Edge added = sample_absent_edge(g, rng_);

    std::int64_t before = score_;
    Edge removed = tracker_.remove_edge_at(idx);
    tracker_.add_edge(added.u, added.v);
    std::int64_t after = score_l1(tracker_.profile3(), scoring_.target, scoring_.weights);
    std::int64_t delta = after - before;

    bool accept = delta <= 0;
    if (!accept) {
        double t = temperature();
        if (t > 0.0) {
            double p = std::exp(-static_cast<double>(delta) / t);
            accept = uniform01(rng_) < p;
        }
    }
    if (accept) {
        score_ = after;
    } else {
        tracker_.remove_edge(added.u, added.v);
        tracker_.add_edge(removed.u, removed.v);
    }
    ++step_;
}

namespace {

struct ChainOutcome {
    bool ran = false;
    std::int64_t best_score = 0;
    std::string best_graph6;
    std::int64_t best_step = 0;
};

struct BestTracker {
    bool has = false;
    std::int64_t score = 0;
    std::string graph6;
    int restart = 0;
    std::int64_t step = 0;

    void offer(std::int64_t sc, const LabeledGraph& g, int restart_idx, std::int64_t step_idx) {
        if (!has || sc < score) {
            has = true;
            score = sc;
            graph6 = emit_graph6(g);
            restart = restart_idx;
            step = step_idx;
        }
    }
};

// Runs one chain to its step budget (or score zero / cancellation), updating
// chain-local best. Used by both execution modes.
ChainOutcome run_chain(Chain& chain, int restart_idx, std::int64_t steps,
                       const AnnealConfig& cfg, const RunHooks& hooks,
                       const std::atomic<int>* cancel_below) {
    ChainOutcome out;
    out.ran = true;
    BestTracker best;
    best.offer(chain.score(), chain.graph(), restart_idx, chain.step_index());
    while (chain.step_index() < steps && best.score > 0) {
        chain.step_once();
        if (chain.score() < best.score)
            best.offer(chain.score(), chain.graph(), restart_idx, chain.step_index());
        std::int64_t j = chain.step_index();
        if (cfg.audit_interval > 0 && j % cfg.audit_interval == 0) chain.audit();
        if (hooks.on_progress && cfg.progress_interval > 0 && j % cfg.progress_interval == 0)
            hooks.on_progress({restart_idx, j, chain.score(), chain.temperature(), best.score});
        if (cancel_below && (j & 1023) == 0 && cancel_below->load(std::memory_order_relaxed) < restart_idx)
            break;
    }
    out.best_score = best.score;
    out.best_graph6 = best.graph6;
    out.best_step = best.step;
    if (hooks.on_progress && cfg.progress_interval > 0)
        hooks.on_progress({restart_idx, chain.step_index(), chain.score(), chain.temperature(),
                           best.score});
    return out;
}

}  // namespace

SearchResult run_search(int n, std::int64_t k, const AnnealConfig& cfg, const RunHooks& hooks,
                        const std::optional<CheckpointState>& resume) {
    cfg.validate();
    if (!is_admissible(n, k))
        throw InputError("run_search: (" + std::to_string(n) + "," + std::to_string(k) +
                         ") is not admissible; no target profile exists");
    TargetProfile tp = target_profile(n, k);

    Chain::Scoring scoring;
    scoring.target = tp.profile3_i64();
    scoring.weights = cfg.weights;
    scoring.t0 = cfg.t0;
    scoring.log_alpha = std::log(cfg.effective_alpha());

    SearchResult res;
    res.chain_seeds.reserve(static_cast<std::size_t>(cfg.restarts));
    for (int i = 0; i < cfg.restarts; ++i) res.chain_seeds.push_back(mix_seed(cfg.seed, static_cast<std::uint64_t>(i)));

    auto t_start = std::chrono::steady_clock::now();
    BestTracker best;
    if (resume && resume->has_best) {
        best.has = true;
        best.score = resume->best_score;
        best.graph6 = resume->best_graph6;
        best.restart = resume->best_restart;
        best.step = resume->best_step;
    }

    auto finish = [&](int restarts_used, bool halted) {
        res.found = best.has && best.score == 0;
        res.best_graph6 = best.graph6;
        res.best_score = best.has ? best.score : -1;
        res.best_restart = best.restart;
        res.best_step = best.step;
        res.restarts_until_found = restarts_used;
        res.halted = halted;
        res.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        return res;
    };

    if (cfg.threads == 1) {
        std::int64_t global_steps = 0;
        int first_restart = resume ? resume->restart_index : 0;
        for (int i = first_restart; i < cfg.restarts; ++i) {
            std::optional<Chain> chain;
            if (resume && i == resume->restart_index) {
                chain.emplace(scoring, resume->rng_state, parse_graph6(resume->current_graph6),
                              resume->step);
            } else {
                chain.emplace(n, k, scoring, res.chain_seeds[static_cast<std::size_t>(i)]);
            }
            best.offer(chain->score(), chain->graph(), i, chain->step_index());

            while (chain->step_index() < cfg.steps && best.score > 0) {
                chain->step_once();
                if (chain->score() < best.score)
                    best.offer(chain->score(), chain->graph(), i, chain->step_index());
                std::int64_t j = chain->step_index();
                ++global_steps;
                if (cfg.audit_interval > 0 && j % cfg.audit_interval == 0) chain->audit();
                if (hooks.on_progress && cfg.progress_interval > 0 && j % cfg.progress_interval == 0)
                    hooks.on_progress({i, j, chain->score(), chain->temperature(), best.score});
                bool halting = cfg.halt_after && global_steps >= *cfg.halt_after;
                if (hooks.on_checkpoint &&
                    ((cfg.checkpoint_interval > 0 && j % cfg.checkpoint_interval == 0) || halting)) {
                    CheckpointState st;
                    st.n = n;
                    st.k = k;
                    st.master_seed = cfg.seed;
                    st.restart_index = i;
                    st.step = j;
                    st.rng_state = chain->rng_state();
                    st.current_graph6 = emit_graph6(chain->graph());
                    st.current_score = chain->score();
                    st.has_best = best.has;
                    st.best_graph6 = best.graph6;
                    st.best_score = best.score;
                    st.best_restart = best.restart;
                    st.best_step = best.step;
                    hooks.on_checkpoint(st);
                }
                if (halting) return finish(i + 1, true);
            }
            if (best.score == 0) return finish(i + 1, false);
        }
        return finish(cfg.restarts, false);
    }

    // Parallel: every chain is independent; the winner is decided by the same
    // deterministic rule as the sequential path. Chains whose index exceeds a
    // known zero-score chain cannot win and are cancelled.
    std::vector<ChainOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    std::atomic<int> lowest_success{cfg.restarts};
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= cfg.restarts) return;
            if (lowest_success.load() < i) continue;  // cannot win; skip
            Chain chain(n, k, scoring, res.chain_seeds[static_cast<std::size_t>(i)]);
            outcomes[static_cast<std::size_t>(i)] =
                run_chain(chain, i, cfg.steps, cfg, hooks, &lowest_success);
            if (outcomes[static_cast<std::size_t>(i)].best_score == 0) {
                int cur = lowest_success.load();
                while (i < cur && !lowest_success.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min(cfg.threads, cfg.restarts);
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    int winner = lowest_success.load();
    if (winner < cfg.restarts) {
        const ChainOutcome& o = outcomes[static_cast<std::size_t>(winner)];
        best = BestTracker{};
        best.has = true;
        best.score = 0;
        best.graph6 = o.best_graph6;
        best.restart = winner;
        best.step = o.best_step;
        return finish(winner + 1, false);
    }
    for (int i = 0; i < cfg.restarts; ++i) {
        const ChainOutcome& o = outcomes[static_cast<std::size_t>(i)];
        if (!o.ran) continue;
        if (!best.has || o.best_score < best.score) {
            best.has = true;
            best.score = o.best_score;
            best.graph6 = o.best_graph6;
            best.restart = i;
            best.step = o.best_step;
        }
    }
    return finish(cfg.restarts, false);
}

}  // namespace ebg
