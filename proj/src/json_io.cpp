#include "ebg/json_io.hpp"

#include "ebg/errors.hpp"
#include "ebg/ints.hpp"

namespace ebg {

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Json to_json(const Profile2& p) {
    return Json{{"p3", p.p3}, {"2k2", p.two_k2}};
}

Json to_json(const Profile3& p) {
    return Json{{"k3", p.k3}, {"p4", p.p4}, {"k1_3", p.k1_3}, {"p3_k2", p.p3_k2}, {"3k2", p.three_k2}};
}

Json to_json(const Profile4& p) {
    Json j;
    for (std::size_t i = 0; i < kClasses4.size(); ++i)
        j[std::string(class_name(kClasses4[i]))] = p.counts[i];
    return j;
}

Json to_json(const TargetProfile& t) {
    Json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["profile3"] = Json{{"k3", int_str(t.c)},
                         {"p4", int_str(t.p)},
                         {"k1_3", int_str(t.s)},
                         {"p3_k2", int_str(t.d)},
                         {"3k2", int_str(t.m)}};
    j["profile2"] = Json{{"p3", int_str(t.a)}, {"2k2", int_str(t.b)}};
    return j;
}

Json to_json(const AutResult& a) {
    return Json{{"order", int_str(a.order)},
                {"support_order", int_str(a.support_order)},
                {"isolated_count", a.isolated_count}};
}

Json to_json(const IndexReport& r) {
    return Json{{"lambda", int_str(r.lambda)},
                {"factored", Json{{"q", rat_str(r.q)}, {"base", r.base}}}};
}

Json to_json(const FourEdgeReport& r) {
    Json lam;
    for (std::size_t i = 0; i < kClasses4.size(); ++i)
        lam[std::string(class_name(kClasses4[i]))] = rat_str(r.lambda[i]);
    Json absent = Json::array();
    for (SubgraphClass c : r.absent) absent.push_back(std::string(class_name(c)));
    return Json{{"profile4", to_json(r.profile)},
                {"lambda_by_class", lam},
                {"absent_classes", absent},
                {"distinct_lambda_present", r.distinct_lambda_present},
                {"all_classes_present", r.all_classes_present},
                {"imbalance_witnessed", r.imbalance_witnessed},
                {"triangle_identity_ok", r.triangle_identity_ok},
                {"matching_identity_ok", r.matching_identity_ok}};
}

Json to_json(const Certificate& c) {
    Json j;
    j["schema_version"] = c.schema_version;
    j["tool_version"] = c.tool_version;
    j["timestamp"] = c.timestamp;
    j["n"] = c.n;
    j["k"] = c.k;
    j["graph6"] = c.graph6;
    j["balanced"] = c.balanced;
    j["independent_recount"] = c.independent_recount;
    j["profile3"] = to_json(c.p3);
    j["profile2"] = to_json(c.p2);
    j["target"] = to_json(c.target);
    j["two_edge_balanced"] = c.two_edge_balanced;
    j["aut"] = to_json(c.aut);
    if (c.index) j["index"] = to_json(*c.index);
    if (c.four_edge) j["four_edge"] = to_json(*c.four_edge);
    return j;
}

Json to_json(const SmallNReport& r) {
    Json cases = Json::array();
    for (const SmallNCase& c : r.cases) {
        cases.push_back(Json{{"n", c.n},
                             {"k", c.k},
                             {"graphs_checked", c.graphs_checked},
                             {"balanced_found", c.balanced_found},
                             {"min_lambda_spread", rat_str(c.min_lambda_spread)},
                             {"max_lambda_spread", rat_str(c.max_lambda_spread)}});
    }
    Json j;
    j["cases"] = cases;
    j["vacuous_n"] = r.vacuous_n;
    j["none_balanced"] = r.none_balanced;
    return j;
}

Json to_json(const AnnealConfig& c) {
    Json j;
    j["t0"] = c.t0;
    j["alpha"] = c.effective_alpha();
    j["alpha_explicit"] = c.alpha.has_value();
    j["steps"] = c.steps;
    j["restarts"] = c.restarts;
    j["seed"] = c.seed;
    j["weights"] = c.weights;
    j["audit_interval"] = c.audit_interval;
    j["progress_interval"] = c.progress_interval;
    j["checkpoint_interval"] = c.checkpoint_interval;
    j["threads"] = c.threads;
    if (c.halt_after) j["halt_after"] = *c.halt_after;
    return j;
}

AnnealConfig config_from_json(const Json& j) {
    AnnealConfig c;
    c.t0 = j.at("t0").get<double>();
    if (j.value("alpha_explicit", true)) c.alpha = j.at("alpha").get<double>();
    c.steps = j.at("steps").get<std::int64_t>();
    c.restarts = j.at("restarts").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("weights")) c.weights = j.at("weights").get<std::array<std::int64_t, 5>>();
    c.audit_interval = j.value("audit_interval", c.audit_interval);
    c.progress_interval = j.value("progress_interval", c.progress_interval);
    c.checkpoint_interval = j.value("checkpoint_interval", c.checkpoint_interval);
    c.threads = j.value("threads", 1);
    if (j.contains("halt_after")) c.halt_after = j.at("halt_after").get<std::int64_t>();
    return c;
}

Json to_json(const SearchResult& r, const AnnealConfig& cfg, int n, std::int64_t k) {
    Json j;
    j["schema_version"] = 1;
    j["n"] = n;
    j["k"] = k;
    j["config"] = to_json(cfg);
    Json res;
    res["found"] = r.found;
    res["best_graph6"] = r.best_graph6;
    res["best_score"] = r.best_score;
    res["best_restart"] = r.best_restart;
    res["best_step"] = r.best_step;
    res["restarts_until_found"] = r.restarts_until_found;
    res["halted"] = r.halted;
    Json seeds = Json::array();
    for (auto s : r.chain_seeds) seeds.push_back(s);
    res["chain_seeds"] = seeds;
    j["result"] = res;
    j["timing"] = Json{{"wall_seconds", r.wall_seconds}};
    return j;
}

Json to_json(const CheckpointState& st, const AnnealConfig& cfg) {
    Json j;
    j["schema_version"] = 1;
    j["kind"] = "checkpoint";
    j["n"] = st.n;
    j["k"] = st.k;
    j["config"] = to_json(cfg);
    j["master_seed"] = st.master_seed;
    j["restart_index"] = st.restart_index;
    j["step"] = st.step;
    j["rng_state"] = st.rng_state;
    j["current_graph6"] = st.current_graph6;
    j["current_score"] = st.current_score;
    j["has_best"] = st.has_best;
    j["best_graph6"] = st.best_graph6;
    j["best_score"] = st.best_score;
    j["best_restart"] = st.best_restart;
    j["best_step"] = st.best_step;
    return j;
}

CheckpointState checkpoint_from_json(const Json& j) {
    if (j.value("kind", "") != "checkpoint") throw InputError("not a checkpoint file");
    CheckpointState st;
    st.n = j.at("n").get<int>();
    st.k = j.at("k").get<std::int64_t>();
    st.master_seed = j.at("master_seed").get<std::uint64_t>();
    st.restart_index = j.at("restart_index").get<int>();
    st.step = j.at("step").get<std::int64_t>();
    st.rng_state = j.at("rng_state").get<std::string>();
    st.current_graph6 = j.at("current_graph6").get<std::string>();
    st.current_score = j.at("current_score").get<std::int64_t>();
    st.has_best = j.at("has_best").get<bool>();
    st.best_graph6 = j.at("best_graph6").get<std::string>();
    st.best_score = j.at("best_score").get<std::int64_t>();
    st.best_restart = j.at("best_restart").get<int>();
    st.best_step = j.at("best_step").get<std::int64_t>();
    return st;
}

}  // namespace ebg
