#pragma once
// Property evaluation over finished runs. Every checker is a pure function of
// the captured run (final state, trace, per-round timeline); running checkers
// never mutates world state.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mutswap/harness.hpp"

namespace mutswap {

struct PropertyReport {
    std::string property;
    bool holds = false;
    std::string details;
    std::vector<std::string> witness;  // serialized trace records for violations

    static PropertyReport ok(std::string id, std::string details = "") {
        return {std::move(id), true, std::move(details), {}};
    }
    static PropertyReport fail(std::string id, std::string details,
                               std::vector<std::string> witness = {}) {
        return {std::move(id), false, std::move(details), std::move(witness)};
    }
};

namespace detail_props {

inline std::vector<std::string> witness_from(const Trace& trace, Round from_round) {
    std::vector<std::string> w;
    for (const auto& r : trace.records)
        if (r.round >= from_round) w.push_back(trace_record_json(r).dump());
    return w;
}

inline bool is_conforming_kind(const std::string& kind) {
    return kind == strategy_kind::conforming_alice || kind == strategy_kind::conforming_bob ||
           kind == strategy_kind::altruistic_bob || kind == strategy_kind::conforming_carol ||
           kind == strategy_kind::conforming_david;
}

struct PartyEconomics {
    AssetKind out_kind;
    std::uint64_t out_amount = 0;
    std::string out_chain;
    // Incoming principals that discharge an UNDERWATER loss (kind, amount, chain).
    std::vector<std::tuple<AssetKind, std::uint64_t, std::string>> incoming;
};

inline PartyEconomics economics_for(const ScenarioRun& run, const Address& who) {
    const DealSheet& d = run.final_world.deal;
    PartyEconomics e;
    auto incoming_a = std::make_tuple(d.kind_a, d.asset_a, d.chain_ab);
    auto incoming_b = std::make_tuple(d.kind_b, d.asset_b, d.chain_ba);
    if (who == d.alice) {
        e = {d.kind_a, d.asset_a, d.chain_ab, {incoming_b}};
        for (const auto& b : d.buyers) e.incoming.push_back({d.kind_pay, b.amount, d.chain_pay});
        if (d.follower) e.incoming.push_back({d.kind_pay, d.follower->amount, d.chain_pay});
    } else if (who == d.bob) {
        e = {d.kind_b, d.asset_b, d.chain_ba, {incoming_a}};
        if (d.follower) e.incoming.push_back({d.kind_pay, d.follower->amount, d.chain_pay});
    } else if (const BuyerDeal* b = d.buyer_by_address(who)) {
        e = {d.kind_pay, b->amount, d.chain_pay, {incoming_a, incoming_b}};
    } else if (d.follower && d.follower->buyer_address == who) {
        e = {d.kind_pay, d.follower->amount, d.chain_pay, {incoming_a, incoming_b}};
    } else {
        throw ConfigError("no economics for party " + who);
    }
    return e;
}

inline const PartyState* party_by_name(const ScenarioRun& run, const std::string& name) {
    Address addr = address_of(name);
    auto it = run.final_world.parties.find(addr);
    return it == run.final_world.parties.end() ? nullptr : &it->second;
}

}  // namespace detail_props

// UNDERWATER: losing the outgoing principal without receiving a counterparty
// principal. Evaluated as a net-balance predicate at the horizon.
inline PropertyReport check_no_underwater(const ScenarioRun& run, const std::string& party_name) {
    std::string id = "no-underwater:" + party_name;
    const PartyState* p = detail_props::party_by_name(run, party_name);
    if (!p) throw ConfigError("unknown party for " + id);
    if (!detail_props::is_conforming_kind(p->strategy.kind))
        throw ConfigError(id + " requires a conforming strategy, got " + p->strategy.kind);

    auto e = detail_props::economics_for(run, p->id.address);
    const WorldState& w = run.final_world;
    std::uint64_t out_balance = w.chain(e.out_chain).balance_of(p->id.address, e.out_kind);
    bool lost = out_balance < e.out_amount;
    if (!lost) return PropertyReport::ok(id, "outgoing principal retained or recovered");
    for (const auto& [kind, amount, chain] : e.incoming) {
        if (w.chain(chain).balance_of(p->id.address, kind) >= amount)
            return PropertyReport::ok(id, "principal exchanged for " + kind);
    }
    return PropertyReport::fail(id, party_name + " lost " + e.out_kind + " without compensation",
                                detail_props::witness_from(run.trace, 0));
}

namespace detail_props {

inline bool leader_transfer_finalized(const ScenarioRun& run, const BuyerDeal*& winner) {
    const DealSheet& d = run.final_world.deal;
    const auto* ab = run.final_world.find_swap(d.ab_id);
    const auto* ba = run.final_world.find_swap(d.ba_id);
    if (!ab || !ba) return false;
    for (const auto& b : d.buyers) {
        if (ab->sender == b.address && ba->receiver == b.address &&
            ab->swap_hashlock == b.swap_lock && ba->swap_hashlock == b.swap_lock) {
            winner = &b;
            return true;
        }
    }
    return false;
}

inline bool accepted_record(const TraceRecord& r, const std::string& contract,
                            const std::string& function) {
    return r.accepted && r.contract == contract && r.function == function;
}

}  // namespace detail_props

// Liveness of the leader transfer: terminal sender/receiver/hashlock fields
// plus the seller's redemption of the buyer's payment.
inline PropertyReport check_liveness_leader(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    const BuyerDeal* winner = nullptr;
    if (!detail_props::leader_transfer_finalized(run, winner))
        return PropertyReport::fail("liveness-leader", "no buyer holds the leader position",
                                    detail_props::witness_from(run.trace, 0));
    for (const auto& r : run.trace.records) {
        if (detail_props::accepted_record(r, winner->ca_id, "claim") && r.submitter == d.alice &&
            r.round <= winner->ca_timeout)
            return PropertyReport::ok("liveness-leader",
                                      winner->name + " holds the position, seller paid");
    }
    return PropertyReport::fail("liveness-leader", "seller never redeemed the buyer payment",
                                detail_props::witness_from(run.trace, 0));
}

// Non-blocking / transfer independence share the finalization predicate; the
// harness binds them to the adversarial-Bob and silent-Bob runs respectively.
inline PropertyReport check_replacement_finalized(const ScenarioRun& run, std::string id) {
    const BuyerDeal* winner = nullptr;
    if (detail_props::leader_transfer_finalized(run, winner))
        return PropertyReport::ok(id, winner->name + " holds the leader position");
    return PropertyReport::fail(std::move(id), "replacement did not finalize",
                                detail_props::witness_from(run.trace, 0));
}

inline PropertyReport check_liveness_follower(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    if (!d.follower) throw ConfigError("liveness-follower needs a follower transfer");
    const auto* ab = run.final_world.find_swap(d.ab_id);
    const auto* ba = run.final_world.find_swap(d.ba_id);
    const FollowerDeal& fd = *d.follower;
    if (!ab || !ba || ab->receiver != fd.buyer_address || ba->sender != fd.buyer_address)
        return PropertyReport::fail("liveness-follower", "buyer does not hold the follower position",
                                    detail_props::witness_from(run.trace, 0));
    for (const auto& r : run.trace.records) {
        if (detail_props::accepted_record(r, fd.db_id, "claim") && r.submitter == d.bob &&
            r.round <= fd.db_timeout)
            return PropertyReport::ok("liveness-follower", "follower sold and was paid");
    }
    return PropertyReport::fail("liveness-follower", "seller never redeemed the buyer payment",
                                detail_props::witness_from(run.trace, 0));
}

// Transfer atomicity: an accepted leader replace implies the seller redeems
// the matching payment escrow before it times out.
inline PropertyReport check_transfer_atomicity(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    for (const auto& r : run.trace.records) {
        if (!r.accepted || r.function != "replaceLeader") continue;
        auto it = r.info.find("seq");
        if (it == r.info.end()) continue;
        const BuyerDeal* b = d.buyer_by_seq(std::stoull(it->second));
        if (!b) continue;
        bool redeemed = false;
        for (const auto& q : run.trace.records) {
            if (detail_props::accepted_record(q, b->ca_id, "claim") && q.submitter == d.alice &&
                q.round <= b->ca_timeout)
                redeemed = true;
        }
        if (!redeemed)
            return PropertyReport::fail(
                "transfer-atomicity",
                "replace for seq " + it->second + " without a seller redemption by round " +
                    std::to_string(b->ca_timeout),
                detail_props::witness_from(run.trace, r.round));
    }
    return PropertyReport::ok("transfer-atomicity", "every accepted replace was paid for");
}

inline PropertyReport check_transfer_atomicity_follower(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    if (!d.follower) throw ConfigError("transfer-atomicity-follower needs a follower transfer");
    const FollowerDeal& fd = *d.follower;
    bool replaced = false;
    Round first_replace = 0;
    for (const auto& r : run.trace.records) {
        if (r.accepted && r.function == "replaceFollower") {
            replaced = true;
            first_replace = r.round;
            break;
        }
    }
    if (!replaced) return PropertyReport::ok("transfer-atomicity-follower", "no replace occurred");
    for (const auto& r : run.trace.records) {
        if (detail_props::accepted_record(r, fd.db_id, "claim") && r.submitter == d.bob &&
            r.round <= fd.db_timeout)
            return PropertyReport::ok("transfer-atomicity-follower", "seller redeemed in time");
    }
    return PropertyReport::fail("transfer-atomicity-follower",
                                "follower replaced but never redeemed the buyer payment",
                                detail_props::witness_from(run.trace, first_replace));
}

// Optionality: the leader's claim with the original swap secret is never
// refused while the option lives, whatever the follower-transfer state.
inline PropertyReport check_optionality(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    SecretFactory sf(run.config.seed);
    Secret a1 = sf.make(d.alice, 0);
    std::string a1_hex = a1.hex();
    for (const auto& r : run.trace.records) {
        if (r.contract != d.ba_id || r.function != "claim" || r.submitter != d.alice) continue;
        if (r.round > d.expiry()) continue;
        bool carries_a1 =
            std::find(r.revealed_secrets.begin(), r.revealed_secrets.end(), a1_hex) !=
            r.revealed_secrets.end();
        if (!carries_a1) continue;
        if (!r.accepted)
            return PropertyReport::fail(
                "optionality", "leader claim with the swap secret rejected: " + r.reject_reason,
                {trace_record_json(r).dump()});
    }
    return PropertyReport::ok("optionality", "every in-time exercise was accepted");
}

// FCFS: accepted leader replaces consume sequence numbers in ascending order.
inline PropertyReport check_fcfs(const ScenarioRun& run) {
    std::map<std::string, std::int64_t> last_seq;
    for (const auto& r : run.trace.records) {
        if (!r.accepted || r.function != "replaceLeader") continue;
        auto it = r.info.find("seq");
        if (it == r.info.end()) continue;
        std::int64_t seq = std::stoll(it->second);
        auto [jt, inserted] = last_seq.try_emplace(r.contract, seq);
        if (!inserted && seq <= jt->second)
            return PropertyReport::fail("fcfs", "seq " + it->second + " accepted out of order on " +
                                                    r.contract,
                                        {trace_record_json(r).dump()});
        jt->second = seq;
    }
    return PropertyReport::ok("fcfs", "accepted replaces in ascending seq order");
}

inline PropertyReport check_starvation_freedom(const ScenarioRun& run, std::uint64_t j) {
    std::string id = "starvation-freedom:" + std::to_string(j);
    for (const auto& r : run.trace.records) {
        if (r.accepted && r.function == "replaceLeader" && r.info.count("seq") &&
            std::stoull(r.info.at("seq")) == j)
            return PropertyReport::ok(id, "buyer " + std::to_string(j) + " replaced");
    }
    return PropertyReport::fail(id, "buyer " + std::to_string(j) + " never replaced",
                                detail_props::witness_from(run.trace, 0));
}

// Counter synchronization across the two contracts: desync bounded by one and
// repaired within a round.
inline PropertyReport check_counter_sync(const ScenarioRun& run) {
    const DealSheet& d = run.final_world.deal;
    std::vector<std::pair<Round, std::int64_t>> diffs;
    for (const auto& snap : run.timeline) {
        auto a = snap.swaps.find(d.ab_id);
        auto b = snap.swaps.find(d.ba_id);
        if (a == snap.swaps.end() || b == snap.swaps.end()) continue;
        diffs.push_back({snap.round, std::int64_t(a->second.counter) -
                                         std::int64_t(b->second.counter)});
    }
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        auto [round, diff] = diffs[i];
        if (diff < -1 || diff > 1)
            return PropertyReport::fail("counter-sync",
                                        "counters diverged by " + std::to_string(diff) +
                                            " at round " + std::to_string(round),
                                        detail_props::witness_from(run.trace, round));
        if (diff != 0 && i + 1 < diffs.size() && diffs[i + 1].second != 0)
            return PropertyReport::fail("counter-sync",
                                        "desync not repaired within one round at round " +
                                            std::to_string(round),
                                        detail_props::witness_from(run.trace, round));
    }
    return PropertyReport::ok("counter-sync", "counters synchronized within one round");
}

inline PropertyReport check_conservation(const ScenarioRun& run) {
    if (run.timeline.empty()) return PropertyReport::ok("conservation", "no rounds");
    const auto& first = run.timeline.front().totals;
    for (const auto& snap : run.timeline) {
        if (snap.totals != first)
            return PropertyReport::fail("conservation",
                                        "asset totals changed at round " +
                                            std::to_string(snap.round),
                                        detail_props::witness_from(run.trace, snap.round));
    }
    return PropertyReport::ok("conservation", "per-asset totals constant");
}

// Window arithmetic on every accepted mutation-related transaction.
inline PropertyReport check_window_arithmetic(const ScenarioRun& run) {
    const ProtocolParams& p = run.config.protocol;
    auto age_of = [](const TraceRecord& r) { return std::stoull(r.info.at("window_age")); };
    for (const auto& r : run.trace.records) {
        if (r.info.count("implicit_revert_leader_start")) {
            Round start = std::stoull(r.info.at("implicit_revert_leader_start"));
            if (r.round <= start + p.leader_revert_after)
                return PropertyReport::fail("window-arithmetic", "early implicit leader revert",
                                            {trace_record_json(r).dump()});
        }
        if (r.info.count("implicit_revert_follower_start")) {
            Round start = std::stoull(r.info.at("implicit_revert_follower_start"));
            if (r.round <= start + p.follower_revert_after)
                return PropertyReport::fail("window-arithmetic", "early implicit follower revert",
                                            {trace_record_json(r).dump()});
        }
        if (!r.accepted) continue;
        bool bad = false;
        if (r.function == "contestLeader") {
            auto age = age_of(r);
            bad = age == 0 || age > p.contest_window;
        } else if (r.function == "replaceLeader") {
            auto age = age_of(r);
            const std::string& path = r.info.at("path");
            if (path == "candidate_contestable")
                bad = age <= p.contest_window || age > p.candidate_replace_end;
            else if (path == "candidate_approved")
                bad = age == 0 || age > p.candidate_replace_end;
            else
                bad = age == 0 || age > p.follower_replace_end;
        } else if (r.function == "replaceFollower") {
            auto age = age_of(r);
            bad = age == 0 || age > p.follower_revert_after;
        } else if (r.function == "revertLeader") {
            bad = age_of(r) <= p.leader_revert_after;
        }
        if (bad)
            return PropertyReport::fail("window-arithmetic",
                                        "window violated by accepted " + r.function,
                                        {trace_record_json(r).dump()});
    }
    return PropertyReport::ok("window-arithmetic", "all accepted windows in range");
}

// Projected states follow the allowed transition system; the swap hashlock
// only moves under a pending leader mutation.
inline PropertyReport check_state_machine(const ScenarioRun& run) {
    using S = StateName;
    auto allowed = [](S from, S to) {
        if (from == to) return true;
        switch (from) {
            case S::Ready2Claim:
                return to == S::MutateLockContestable || to == S::MutateLockNonContestable ||
                       to == S::Claimed || to == S::Refunded;
            case S::MutateLockContestable:
                return to == S::MutateLockNonContestable || to == S::Ready2Claim ||
                       to == S::Claimed;
            case S::MutateLockNonContestable:
                return to == S::Ready2Claim || to == S::Claimed || to == S::Refunded ||
                       to == S::MutateLockContestable;
            case S::Claimed:
            case S::Refunded:
                return false;
        }
        return false;
    };
    for (std::size_t i = 1; i < run.timeline.size(); ++i) {
        const auto& prev = run.timeline[i - 1];
        const auto& cur = run.timeline[i];
        for (const auto& [id, snap] : cur.swaps) {
            auto it = prev.swaps.find(id);
            if (it == prev.swaps.end()) continue;  // deployed this round
            const ContractSnap& before = it->second;
            if (!allowed(before.state, snap.state))
                return PropertyReport::fail(
                    "state-machine",
                    id + ": " + to_string(before.state) + " -> " + to_string(snap.state) +
                        " at round " + std::to_string(cur.round),
                    detail_props::witness_from(run.trace, cur.round));
            if (snap.swap_hashlock != before.swap_hashlock &&
                before.state != S::MutateLockContestable &&
                before.state != S::MutateLockNonContestable)
                return PropertyReport::fail(
                    "state-machine",
                    id + ": swap hashlock changed outside a pending mutation at round " +
                        std::to_string(cur.round),
                    detail_props::witness_from(run.trace, cur.round));
        }
    }
    return PropertyReport::ok("state-machine", "all transitions within the allowed system");
}

// Altruistic speed-up: the approving follower strictly accelerates both the
// opening of the replace phase and finalization.
inline PropertyReport check_altruistic_speedup(const ScenarioRun& altruistic,
                                               const ScenarioRun& plain) {
    auto first_round = [](const ScenarioRun& run, auto&& pred) -> std::optional<Round> {
        for (const auto& r : run.trace.records)
            if (pred(r)) return r.round;
        return std::nullopt;
    };
    auto is_replace = [](const TraceRecord& r) {
        return r.function == "replaceLeader" && r.accepted;
    };
    auto is_replace_attempt = [](const TraceRecord& r) { return r.function == "replaceLeader"; };
    auto alt_final = first_round(altruistic, is_replace);
    auto plain_final = first_round(plain, is_replace);
    auto alt_open = first_round(altruistic, is_replace_attempt);
    auto plain_open = first_round(plain, is_replace_attempt);
    if (!alt_final || !plain_final || !alt_open || !plain_open)
        return PropertyReport::fail("altruistic-speedup", "replace missing in a run");
    if (*alt_final < *plain_final && *alt_open < *plain_open)
        return PropertyReport::ok("altruistic-speedup",
                                  "finalized at round " + std::to_string(*alt_final) + " vs " +
                                      std::to_string(*plain_final));
    return PropertyReport::fail("altruistic-speedup", "no strict acceleration");
}

// Dispatcher for the property ids bound in scenario configs.
inline PropertyReport evaluate_property(const ScenarioRun& run, const std::string& id) {
    const std::string underwater_prefix = "no-underwater:";
    const std::string starvation_prefix = "starvation-freedom:";
    if (id.rfind(underwater_prefix, 0) == 0)
        return check_no_underwater(run, id.substr(underwater_prefix.size()));
    if (id.rfind(starvation_prefix, 0) == 0)
        return check_starvation_freedom(run, std::stoull(id.substr(starvation_prefix.size())));
    if (id == "liveness-leader") return check_liveness_leader(run);
    if (id == "liveness-follower") return check_liveness_follower(run);
    if (id == "transfer-independence") return check_replacement_finalized(run, id);
    if (id == "non-blocking") return check_replacement_finalized(run, id);
    if (id == "transfer-atomicity") return check_transfer_atomicity(run);
    if (id == "transfer-atomicity-follower") return check_transfer_atomicity_follower(run);
    if (id == "optionality") return check_optionality(run);
    if (id == "fcfs") return check_fcfs(run);
    if (id == "counter-sync") return check_counter_sync(run);
    if (id == "conservation") return check_conservation(run);
    if (id == "window-arithmetic") return check_window_arithmetic(run);
    if (id == "state-machine") return check_state_machine(run);
    throw ConfigError("unknown property: " + id);
}

inline std::vector<PropertyReport> evaluate_bound_properties(const ScenarioRun& run) {
    std::vector<PropertyReport> reports;
    for (const auto& id : run.config.properties) reports.push_back(evaluate_property(run, id));
    return reports;
}

}  // namespace mutswap
