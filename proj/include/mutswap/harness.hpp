#pragma once
// Scenario loading and execution: declarative configs (JSON, schema
// versioned), world construction, the built-in scenario catalog, per-round
// timeline capture, and the line-oriented trace format consumed by the
// property checkers, the golden-trace check and the explorer.

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mutswap/scheduler.hpp"

namespace mutswap {

inline constexpr int kScenarioSchemaVersion = 1;

struct PartyBinding {
    std::string strategy;
    StrategyParams params;
};

struct BuyerConfig {
    std::string name;
    std::uint64_t seq = 0;
    std::uint64_t amount = 100;
    std::optional<Round> agreement_round;  // default: start_leader + 5 * seq
    PartyBinding binding{strategy_kind::conforming_carol, {}};
};

struct FollowerTransferConfig {
    Round start_follower = 2;
    std::uint64_t amount = 100;
    std::string buyer_name = "David";
    PartyBinding binding{strategy_kind::conforming_david, {}};
};

struct ScenarioConfig {
    std::string name;
    std::string description;
    std::uint64_t seed = 42;

    Round swap_start = 0;
    std::uint64_t dT = 12;
    std::uint64_t asset_a = 100;
    std::uint64_t asset_b = 100;

    PartyBinding alice{strategy_kind::conforming_alice, {}};
    PartyBinding bob{strategy_kind::conforming_bob, {}};

    std::optional<Round> start_leader;
    std::uint64_t ca_timeout_delta = 9;  // 9 or 10, see --ca-timeout
    std::vector<BuyerConfig> buyers;

    std::optional<FollowerTransferConfig> follower_transfer;

    std::optional<Round> horizon;
    ProtocolParams protocol;
    std::string policy = "submission";
    std::vector<std::string> properties;

    Round expiry() const { return swap_start + dT * kDelta; }
    Round effective_horizon() const { return horizon.value_or(expiry() + 2 * kDelta); }
    Round buyer_agreement_round(const BuyerConfig& b) const {
        return b.agreement_round.value_or(*start_leader + 5 * b.seq * kDelta);
    }

    void validate() const {
        if (dT < 4) throw ConfigError("dT must be at least 4");
        if (ca_timeout_delta != 9 && ca_timeout_delta != 10)
            throw ConfigError("ca timeout must be 9 or 10 rounds past the agreement");
        if (start_leader) {
            if (buyers.empty()) throw ConfigError("leader transfer configured without buyers");
            if (*start_leader + 9 * kDelta > expiry())
                throw ConfigError("start_leader must leave at least 9 rounds before the expiry");
            std::set<std::uint64_t> seqs;
            for (const auto& b : buyers) {
                if (!seqs.insert(b.seq).second) throw ConfigError("duplicate buyer seq");
            }
            for (std::uint64_t i = 0; i < buyers.size(); ++i)
                if (!seqs.count(i)) throw ConfigError("buyer seqs must be dense from 0");
        } else if (!buyers.empty()) {
            throw ConfigError("buyers configured without start_leader");
        }
        if (follower_transfer) {
            if (follower_transfer->start_follower + 4 * kDelta > expiry())
                throw ConfigError("start_follower must leave at least 4 rounds before the expiry");
        }
        if (effective_horizon() < swap_start) throw ConfigError("horizon precedes swap start");
        if (policy != "submission") throw ConfigError("unknown ordering policy: " + policy);
    }
};

// ---------------------------------------------------------------------------
// JSON round-trip

namespace detail_json {

inline nlohmann::json params_to_json(const StrategyParams& p) {
    nlohmann::json j = nlohmann::json::object();
    if (p.silent_from != 0) j["silent_from"] = p.silent_from;
    if (p.act_round) j["act_round"] = *p.act_round;
    if (p.exercise_submit_round) j["exercise_submit_round"] = *p.exercise_submit_round;
    if (!p.refund_at_expiry) j["refund_at_expiry"] = false;
    if (p.give_up) j["give_up"] = true;
    return j;
}

inline StrategyParams params_from_json(const nlohmann::json& j) {
    StrategyParams p;
    if (j.contains("silent_from")) p.silent_from = j["silent_from"].get<Round>();
    if (j.contains("act_round")) p.act_round = j["act_round"].get<Round>();
    if (j.contains("exercise_submit_round"))
        p.exercise_submit_round = j["exercise_submit_round"].get<Round>();
    if (j.contains("refund_at_expiry")) p.refund_at_expiry = j["refund_at_expiry"].get<bool>();
    if (j.contains("give_up")) p.give_up = j["give_up"].get<bool>();
    return p;
}

inline nlohmann::json binding_to_json(const PartyBinding& b) {
    nlohmann::json j;
    j["strategy"] = b.strategy;
    auto params = params_to_json(b.params);
    if (!params.empty()) j["params"] = params;
    return j;
}

inline PartyBinding binding_from_json(const nlohmann::json& j, const std::string& fallback) {
    PartyBinding b;
    b.strategy = j.value("strategy", fallback);
    if (j.contains("params")) b.params = params_from_json(j["params"]);
    return b;
}

}  // namespace detail_json

inline nlohmann::json to_json(const ScenarioConfig& c) {
    using nlohmann::json;
    json j;
    j["schema_version"] = kScenarioSchemaVersion;
    j["name"] = c.name;
    j["description"] = c.description;
    j["seed"] = c.seed;
    j["swap"] = {{"start", c.swap_start},
                 {"dT", c.dT},
                 {"asset_a", c.asset_a},
                 {"asset_b", c.asset_b}};
    j["alice"] = detail_json::binding_to_json(c.alice);
    j["bob"] = detail_json::binding_to_json(c.bob);
    if (c.start_leader) {
        json lt;
        lt["start_leader"] = *c.start_leader;
        lt["ca_timeout_delta"] = c.ca_timeout_delta;
        json buyers = json::array();
        for (const auto& b : c.buyers) {
            json bj = detail_json::binding_to_json(b.binding);
            bj["name"] = b.name;
            bj["seq"] = b.seq;
            bj["amount"] = b.amount;
            if (b.agreement_round) bj["agreement_round"] = *b.agreement_round;
            buyers.push_back(bj);
        }
        lt["buyers"] = buyers;
        j["leader_transfer"] = lt;
    }
    if (c.follower_transfer) {
        json ft = detail_json::binding_to_json(c.follower_transfer->binding);
        ft["start_follower"] = c.follower_transfer->start_follower;
        ft["amount"] = c.follower_transfer->amount;
        ft["buyer_name"] = c.follower_transfer->buyer_name;
        j["follower_transfer"] = ft;
    }
    if (c.horizon) j["horizon"] = *c.horizon;
    j["protocol"] = {{"contest_window", c.protocol.contest_window},
                     {"contest_enabled", c.protocol.contest_enabled}};
    j["policy"] = c.policy;
    j["properties"] = c.properties;
    return j;
}

inline ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    ScenarioConfig c;
    if (j.value("schema_version", kScenarioSchemaVersion) != kScenarioSchemaVersion)
        throw ConfigError("unsupported scenario schema version");
    c.name = j.value("name", "");
    c.description = j.value("description", "");
    c.seed = j.value("seed", std::uint64_t(42));
    if (j.contains("swap")) {
        const auto& s = j["swap"];
        c.swap_start = s.value("start", Round(0));
        c.dT = s.value("dT", std::uint64_t(12));
        c.asset_a = s.value("asset_a", std::uint64_t(100));
        c.asset_b = s.value("asset_b", std::uint64_t(100));
    }
    if (j.contains("alice"))
        c.alice = detail_json::binding_from_json(j["alice"], strategy_kind::conforming_alice);
    if (j.contains("bob"))
        c.bob = detail_json::binding_from_json(j["bob"], strategy_kind::conforming_bob);
    if (j.contains("leader_transfer")) {
        const auto& lt = j["leader_transfer"];
        c.start_leader = lt.value("start_leader", Round(2));
        c.ca_timeout_delta = lt.value("ca_timeout_delta", std::uint64_t(9));
        for (const auto& bj : lt.value("buyers", nlohmann::json::array())) {
            BuyerConfig b;
            b.name = bj.value("name", "Carol");
            b.seq = bj.value("seq", std::uint64_t(0));
            b.amount = bj.value("amount", std::uint64_t(100));
            if (bj.contains("agreement_round")) b.agreement_round = bj["agreement_round"].get<Round>();
            b.binding = detail_json::binding_from_json(bj, strategy_kind::conforming_carol);
            c.buyers.push_back(b);
        }
    }
    if (j.contains("follower_transfer")) {
        const auto& ft = j["follower_transfer"];
        FollowerTransferConfig f;
        f.start_follower = ft.value("start_follower", Round(2));
        f.amount = ft.value("amount", std::uint64_t(100));
        f.buyer_name = ft.value("buyer_name", "David");
        f.binding = detail_json::binding_from_json(ft, strategy_kind::conforming_david);
        c.follower_transfer = f;
    }
    if (j.contains("horizon")) c.horizon = j["horizon"].get<Round>();
    if (j.contains("protocol")) {
        c.protocol.contest_window = j["protocol"].value("contest_window", Round(2));
        c.protocol.contest_enabled = j["protocol"].value("contest_enabled", true);
    }
    c.policy = j.value("policy", "submission");
    c.properties = j.value("properties", std::vector<std::string>{});
    return c;
}

// ---------------------------------------------------------------------------
// World construction

inline Address address_of(const std::string& name) {
    std::string a;
    for (char ch : name) a.push_back(char(std::tolower(static_cast<unsigned char>(ch))));
    return a;
}

inline WorldState build_world(const ScenarioConfig& cfg) {
    cfg.validate();
    WorldState w;
    w.seed = cfg.seed;
    w.params = cfg.protocol;
    w.chain_order = {"florin", "guilder", "payment"};
    for (const auto& id : w.chain_order) w.chains.emplace(id, ChainLedger(id));

    SecretFactory sf(cfg.seed);
    DealSheet& d = w.deal;
    d.swap_start = cfg.swap_start;
    d.dT = cfg.dT;
    d.asset_a = cfg.asset_a;
    d.asset_b = cfg.asset_b;
    d.alice = address_of("Alice");
    d.bob = address_of("Bob");

    auto add_party = [&](const std::string& name, const PartyBinding& binding,
                         std::map<std::string, Secret> named) {
        PartyState p;
        p.id = PartyId{name, address_of(name)};
        p.strategy = Strategy{binding.strategy, binding.params};
        named.emplace("fresh1", sf.make(p.id.address, 100));
        named.emplace("fresh2", sf.make(p.id.address, 101));
        for (const auto& [k, s] : named) {
            (void)k;
            p.knowledge.add(s);
        }
        p.named_secrets = std::move(named);
        w.party_order.push_back(p.id.address);
        w.parties.emplace(p.id.address, std::move(p));
    };

    Secret a1 = sf.make(d.alice, 0);
    d.swap_lock_a1 = hash_secret(a1);
    add_party("Alice", cfg.alice, {{"swap", a1}});
    add_party("Bob", cfg.bob, {});
    w.chains.at(d.chain_ab).credit(d.alice, d.kind_a, cfg.asset_a);
    w.chains.at(d.chain_ba).credit(d.bob, d.kind_b, cfg.asset_b);

    if (cfg.start_leader) {
        d.start_leader = cfg.start_leader;
        for (const auto& bc : cfg.buyers) {
            BuyerDeal b;
            b.name = bc.name;
            b.address = address_of(bc.name);
            b.seq = bc.seq;
            b.amount = bc.amount;
            b.agreement_round = cfg.buyer_agreement_round(bc);
            Secret replace = sf.make(b.address, 0);
            Secret swap = sf.make(b.address, 1);
            b.replace_lock = hash_secret(replace);
            b.swap_lock = hash_secret(swap);
            b.ca_id = bc.seq == 0 ? "CA" : "CA" + std::to_string(bc.seq);
            b.ca_timeout = b.agreement_round + cfg.ca_timeout_delta * kDelta;
            d.buyers.push_back(b);
            add_party(bc.name, bc.binding, {{"replace", replace}, {"swap", swap}});
            w.chains.at(d.chain_pay).credit(b.address, d.kind_pay, bc.amount);
        }
    }

    if (cfg.follower_transfer) {
        const auto& fc = *cfg.follower_transfer;
        FollowerDeal fd;
        fd.buyer_name = fc.buyer_name;
        fd.buyer_address = address_of(fc.buyer_name);
        fd.amount = fc.amount;
        fd.start_follower = fc.start_follower;
        Secret replace = sf.make(fd.buyer_address, 0);
        fd.replace_lock = hash_secret(replace);
        fd.db_id = "DB";
        fd.db_timeout = fc.start_follower + 5 * kDelta;
        d.follower = fd;
        add_party(fc.buyer_name, fc.binding, {{"replace", replace}});
        w.chains.at(d.chain_pay).credit(fd.buyer_address, d.kind_pay, fc.amount);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Timeline capture and scenario execution

struct ContractSnap {
    StateName state = StateName::Ready2Claim;
    std::uint64_t counter = 0;
    std::uint64_t follower_counter = 0;
    Hashlock swap_hashlock;
    Address sender;
    Address receiver;
};

struct RoundSnapshot {
    Round round = 0;
    std::map<std::string, ContractSnap> swaps;
    std::map<std::string, std::map<AssetKind, std::uint64_t>> totals;  // per chain
};

inline RoundSnapshot snapshot(const WorldState& w) {
    RoundSnapshot s;
    s.round = w.now;
    for (const auto& [cid, chain] : w.chains) {
        s.totals[cid] = chain.asset_totals();
        for (const auto& [id, c] : chain.swaps()) {
            ContractSnap snap;
            snap.state = project_state(c, w.now, w.params);
            snap.counter = c.counter;
            snap.follower_counter = c.follower_counter;
            snap.swap_hashlock = c.swap_hashlock;
            snap.sender = c.sender;
            snap.receiver = c.receiver;
            s.swaps[id] = snap;
        }
    }
    return s;
}

struct ScenarioRun {
    ScenarioConfig config;
    WorldState final_world;
    Trace trace;
    std::vector<RoundSnapshot> timeline;
};

inline ScenarioRun run_scenario(const ScenarioConfig& cfg, const OrderingSpec* ordering = nullptr,
                                const std::map<Address, std::vector<Transaction>>* injections =
                                    nullptr) {
    ScenarioRun run;
    run.config = cfg;
    WorldState world = build_world(cfg);
    StepOptions opt;
    opt.ordering = ordering;
    opt.injections = injections;
    auto out = run_until(std::move(world), cfg.effective_horizon(), opt,
                         [&](const WorldState& w) { run.timeline.push_back(snapshot(w)); });
    run.final_world = std::move(out.final_world);
    run.trace = std::move(out.trace);
    return run;
}

// ---------------------------------------------------------------------------
// Trace serialization: one canonical record per executed transaction, field
// order fixed. Byte-identical across replays of the same (scenario, seed,
// policy).

inline nlohmann::ordered_json trace_record_json(const TraceRecord& r) {
    nlohmann::ordered_json j;
    j["round"] = r.round;
    j["chain"] = r.chain;
    j["submitter"] = r.submitter;
    j["contract"] = r.contract;
    j["function"] = r.function;
    j["status"] = r.accepted ? "accepted" : "rejected";
    if (!r.accepted) j["reject_reason"] = r.reject_reason;
    j["args_digest"] = r.args_digest;
    j["revealed_secrets"] = r.revealed_secrets;
    j["state_delta"] = r.state_delta;
    if (!r.info.empty()) j["info"] = r.info;
    j["state_digest"] = r.state_digest;
    return j;
}

inline void emit_trace(const Trace& trace, std::ostream& out) {
    for (const auto& r : trace.records) out << trace_record_json(r).dump() << "\n";
}

inline std::string trace_to_string(const Trace& trace) {
    std::string s;
    for (const auto& r : trace.records) {
        s += trace_record_json(r).dump();
        s += "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Built-in scenario catalog

namespace scenarios {

inline ScenarioConfig base_swap() {
    ScenarioConfig c;
    c.dT = 12;
    return c;
}

inline BuyerConfig carol_buyer(std::uint64_t seq = 0) {
    BuyerConfig b;
    b.name = seq == 0 ? "Carol" : "Carol" + std::to_string(seq + 1);
    b.seq = seq;
    return b;
}

inline ScenarioConfig setup_only_swap() {
    ScenarioConfig c = base_swap();
    c.name = "setup-only-swap";
    c.description = "escrow on both chains, no exercise, both sides refund at expiry";
    c.properties = {"no-underwater:Alice", "no-underwater:Bob", "conservation",
                    "window-arithmetic", "state-machine"};
    return c;
}

inline ScenarioConfig swap_exercise() {
    ScenarioConfig c = base_swap();
    c.name = "swap-exercise";
    c.description = "the leader exercises at the deadline; the follower redeems within a round";
    c.alice.params.exercise_submit_round = c.expiry() - 1;
    c.properties = {"no-underwater:Alice", "no-underwater:Bob", "conservation",
                    "window-arithmetic", "state-machine"};
    return c;
}

inline ScenarioConfig leader_transfer_all_conforming() {
    ScenarioConfig c = base_swap();
    c.name = "leader-transfer-all-conforming";
    c.description = "leader position sold to one conforming buyer, everyone conforming";
    c.start_leader = 2;
    c.buyers = {carol_buyer()};
    c.properties = {"liveness-leader",      "no-underwater:Alice", "no-underwater:Bob",
                    "no-underwater:Carol",  "transfer-atomicity",  "fcfs",
                    "counter-sync",         "conservation",        "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig leader_transfer_altruistic() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-transfer-altruistic";
    c.description = "as all-conforming, with the follower approving to skip the contest window";
    c.bob.strategy = strategy_kind::altruistic_bob;
    return c;
}

inline ScenarioConfig leader_transfer_silent_bob() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-transfer-silent-bob";
    c.description = "the follower escrows and then goes silent; the transfer must not need him";
    c.bob.strategy = strategy_kind::silent;
    c.bob.params.silent_from = *c.start_leader;
    c.properties = {"transfer-independence", "liveness-leader",    "no-underwater:Alice",
                    "no-underwater:Carol",   "transfer-atomicity", "conservation",
                    "window-arithmetic",     "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_inconsistent() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-adversary-inconsistent-hashlocks";
    c.description = "the seller reports different hashlocks to the two contracts";
    c.alice.strategy = strategy_kind::inconsistent_hashlocks;
    c.properties = {"no-underwater:Bob", "no-underwater:Carol", "conservation",
                    "window-arithmetic", "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_mutate_one() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-adversary-mutate-one-contract-only";
    c.description = "the seller mutates one contract only; the follower relays";
    c.alice.strategy = strategy_kind::mutate_one_contract_only;
    c.properties = {"liveness-leader",  "no-underwater:Bob", "no-underwater:Carol",
                    "transfer-atomicity", "conservation",    "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_claim_ba_then_mutate_ab() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-adversary-claim-ba-then-mutate-ab";
    c.description = "the seller exercises and simultaneously locks the other contract";
    c.alice.strategy = strategy_kind::claim_ba_then_mutate_ab;
    c.properties = {"no-underwater:Bob", "no-underwater:Carol", "conservation",
                    "window-arithmetic", "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_griefing_carol() {
    ScenarioConfig c = base_swap();
    c.name = "leader-adversary-griefing-carol";
    c.description = "the buyer escrows and never finalizes; the seller reclaims after expiry";
    c.start_leader = 3;
    c.buyers = {carol_buyer()};
    c.buyers[0].binding.strategy = strategy_kind::griefing_carol;
    // Mutations land at start_leader+2; the earliest reclaim executes at
    // mutation_start+7 via the implicit revert.
    c.alice.params.exercise_submit_round = *c.start_leader + 8;
    c.properties = {"no-underwater:Alice", "no-underwater:Bob", "conservation",
                    "window-arithmetic",   "state-machine",     "counter-sync"};
    return c;
}

inline ScenarioConfig leader_adversary_staggered() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-adversary-staggered-consistent";
    c.description = "consistent mutation signatures reported one round apart";
    c.alice.strategy = strategy_kind::staggered_mutations;
    c.properties = {"liveness-leader",  "no-underwater:Bob", "no-underwater:Carol",
                    "transfer-atomicity", "conservation",    "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_replace_one() {
    ScenarioConfig c = leader_transfer_all_conforming();
    c.name = "leader-adversary-replace-one-contract-only";
    c.description = "the buyer finalizes one contract only; the follower completes the other";
    c.buyers[0].binding.strategy = strategy_kind::replace_one_contract_only;
    c.properties = {"liveness-leader",    "no-underwater:Alice", "no-underwater:Bob",
                    "transfer-atomicity", "conservation",        "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig leader_adversary_duplicate_seq() {
    ScenarioConfig c = base_swap();
    c.name = "leader-adversary-duplicate-seq";
    c.description = "the seller promises the same sequence number to two buyers";
    c.start_leader = 2;
    c.buyers = {carol_buyer(0), carol_buyer(1)};
    c.buyers[1].agreement_round = *c.start_leader;  // both pay up-front
    c.alice.strategy = strategy_kind::duplicate_seq;
    c.properties = {"no-underwater:Bob",   "no-underwater:Carol", "no-underwater:Carol2",
                    "conservation",        "window-arithmetic",   "state-machine"};
    return c;
}

inline ScenarioConfig follower_transfer_all_conforming() {
    ScenarioConfig c = base_swap();
    c.name = "follower-transfer-all-conforming";
    c.description = "follower position sold to a conforming buyer, the leader stays put";
    c.follower_transfer = FollowerTransferConfig{};
    c.properties = {"liveness-follower",   "no-underwater:Alice", "no-underwater:Bob",
                    "no-underwater:David", "optionality",         "transfer-atomicity-follower",
                    "conservation",        "window-arithmetic",   "state-machine"};
    return c;
}

inline ScenarioConfig follower_transfer_alice_exercises() {
    ScenarioConfig c = follower_transfer_all_conforming();
    c.name = "follower-transfer-alice-exercises";
    c.description = "the leader reveals her secret during the follower transfer window";
    c.alice.params.exercise_submit_round = c.follower_transfer->start_follower;
    c.properties = {"no-underwater:Alice", "no-underwater:Bob", "no-underwater:David",
                    "optionality",         "conservation",      "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig concurrent_leader_follower() {
    ScenarioConfig c = base_swap();
    c.name = "concurrent-leader-follower";
    c.description = "both positions transferred simultaneously to their buyers";
    c.start_leader = 2;
    c.buyers = {carol_buyer()};
    c.follower_transfer = FollowerTransferConfig{};
    c.follower_transfer->start_follower = 2;
    c.properties = {"liveness-leader",     "liveness-follower",   "no-underwater:Alice",
                    "no-underwater:Bob",   "no-underwater:Carol", "no-underwater:David",
                    "transfer-atomicity",  "transfer-atomicity-follower",
                    "conservation",        "window-arithmetic",   "state-machine"};
    return c;
}

inline ScenarioConfig multi_candidate_two_buyers() {
    ScenarioConfig c;
    c.name = "multi-candidate-two-buyers";
    c.description = "first buyer griefs, second buyer queued 4 rounds later wins";
    c.dT = 20;
    c.start_leader = 2;
    c.buyers = {carol_buyer(0), carol_buyer(1)};
    c.buyers[0].binding.strategy = strategy_kind::griefing_carol;
    c.properties = {"fcfs",
                    "counter-sync",
                    "starvation-freedom:1",
                    "no-underwater:Alice",
                    "no-underwater:Bob",
                    "no-underwater:Carol2",
                    "transfer-atomicity",
                    "conservation",
                    "window-arithmetic",
                    "state-machine"};
    return c;
}

inline ScenarioConfig multi_candidate_three_buyers() {
    ScenarioConfig c;
    c.name = "multi-candidate-three-buyers";
    c.description = "two griefing buyers ahead of a conforming one";
    c.dT = 24;
    c.start_leader = 2;
    c.buyers = {carol_buyer(0), carol_buyer(1), carol_buyer(2)};
    c.buyers[0].binding.strategy = strategy_kind::griefing_carol;
    c.buyers[1].binding.strategy = strategy_kind::griefing_carol;
    c.properties = {"fcfs",
                    "counter-sync",
                    "starvation-freedom:2",
                    "no-underwater:Alice",
                    "no-underwater:Bob",
                    "no-underwater:Carol3",
                    "transfer-atomicity",
                    "conservation",
                    "window-arithmetic",
                    "state-machine"};
    return c;
}

inline std::vector<ScenarioConfig> all() {
    return {setup_only_swap(),
            swap_exercise(),
            leader_transfer_all_conforming(),
            leader_transfer_altruistic(),
            leader_transfer_silent_bob(),
            leader_adversary_inconsistent(),
            leader_adversary_mutate_one(),
            leader_adversary_claim_ba_then_mutate_ab(),
            leader_adversary_griefing_carol(),
            leader_adversary_staggered(),
            leader_adversary_replace_one(),
            leader_adversary_duplicate_seq(),
            follower_transfer_all_conforming(),
            follower_transfer_alice_exercises(),
            concurrent_leader_follower(),
            multi_candidate_two_buyers(),
            multi_candidate_three_buyers()};
}

inline std::optional<ScenarioConfig> by_name(const std::string& name) {
    for (auto& c : all())
        if (c.name == name) return c;
    return std::nullopt;
}

}  // namespace scenarios

}  // namespace mutswap
