#pragma once
// Synchronous round engine. One step: collect every party's submissions for
// the current round (strategy-driven or injected), advance the clock, execute
// all due transactions per chain in policy order, publish everything that
// became visible. Deterministic given (world, plan).

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mutswap/parties.hpp"
#include "mutswap/world.hpp"

namespace mutswap {

// Intra-round execution order. The default is submission order; the explorer
// (and witness replays) pin explicit permutations of each round's due set.
struct OrderingSpec {
    std::map<std::pair<std::string, Round>, std::vector<std::size_t>> perms;

    const std::vector<std::size_t>* find(const std::string& chain, Round round) const {
        auto it = perms.find({chain, round});
        return it == perms.end() ? nullptr : &it->second;
    }
};

struct StepOptions {
    // Parties listed here are driven by the given transactions instead of
    // their strategy this round (explorer / schedule replay).
    const std::map<Address, std::vector<Transaction>>* injections = nullptr;
    const OrderingSpec* ordering = nullptr;
    Trace* trace = nullptr;
};

namespace detail_sched {

inline bool knowledge_gate(const PartyState& p, const Transaction& tx) {
    for (const auto& arg : tx.args) {
        if (const auto* s = std::get_if<Secret>(&arg)) {
            if (!p.knowledge.knows(*s)) return false;
        } else if (const auto* sig = std::get_if<SignedMutation>(&arg)) {
            if (sig->signer != p.id.address && !p.knowledge.knows(*sig)) return false;
        }
    }
    return true;
}

inline void publish(WorldState& w, const Transaction& tx, const TxResult& result) {
    // Everything that rode in an executed transaction is on chain and public,
    // whether or not the call's effects were accepted.
    for (auto& [addr, p] : w.parties) {
        (void)addr;
        for (const auto& arg : tx.args) {
            if (const auto* s = std::get_if<Secret>(&arg)) p.knowledge.add(*s);
            if (const auto* sig = std::get_if<SignedMutation>(&arg)) p.knowledge.add(*sig);
        }
        for (const auto& s : result.revealed) p.knowledge.add(s);
    }
}

inline std::vector<std::string> visible_secrets(const Transaction& tx, const TxResult& result) {
    std::set<std::string> hexes;
    for (const auto& arg : tx.args)
        if (const auto* s = std::get_if<Secret>(&arg)) hexes.insert(s->hex());
    for (const auto& s : result.revealed) hexes.insert(s.hex());
    return {hexes.begin(), hexes.end()};
}

}  // namespace detail_sched

inline void step(WorldState& w, const StepOptions& opt = {}) {
    // Phase 1: collect this round's submissions against the current boundary.
    for (const Address& addr : w.party_order) {
        PartyState& p = w.party(addr);
        std::vector<Transaction> txs;
        if (opt.injections && opt.injections->count(addr)) {
            txs = opt.injections->at(addr);
        } else {
            txs = strategy_emit(w, p);
        }
        for (Transaction& tx : txs) {
            tx.submitter = addr;  // a party can only ever submit as itself
            if (!detail_sched::knowledge_gate(p, tx)) {
                if (opt.trace) {
                    TraceRecord rec;
                    rec.round = w.now;
                    rec.chain = tx.chain_id;
                    rec.submitter = addr;
                    rec.contract = tx.target;
                    rec.function = tx.function;
                    rec.accepted = false;
                    rec.reject_reason = "knowledge gate";
                    rec.args_digest = args_digest(tx);
                    rec.state_digest = w.chains.count(tx.chain_id)
                                           ? w.chains.at(tx.chain_id).digest_hex()
                                           : std::string();
                    opt.trace->records.push_back(std::move(rec));
                }
                continue;
            }
            auto it = w.chains.find(tx.chain_id);
            if (it == w.chains.end()) throw ConfigError("unknown chain " + tx.chain_id);
            it->second.submit(std::move(tx), w.now, w.next_submission_seq++);
        }
    }

    // Phase 2: the round boundary. Everything submitted above is due now.
    w.now += 1;

    for (const std::string& chain_id : w.chain_order) {
        ChainLedger& chain = w.chains.at(chain_id);
        const std::vector<std::size_t>* perm =
            opt.ordering ? opt.ordering->find(chain_id, w.now) : nullptr;
        auto records = chain.execute_round(w.now, w.params, perm);
        for (auto& rec : records) {
            detail_sched::publish(w, rec.tx, rec.result);
            if (opt.trace) {
                TraceRecord t;
                t.round = rec.exec_round;
                t.chain = chain_id;
                t.submitter = rec.tx.submitter;
                t.contract = rec.tx.target;
                t.function = rec.tx.function;
                t.accepted = rec.result.accepted;
                t.reject_reason = rec.result.reason;
                t.args_digest = args_digest(rec.tx);
                t.revealed_secrets = detail_sched::visible_secrets(rec.tx, rec.result);
                t.state_delta = rec.result.state_delta;
                t.info = rec.result.info;
                t.state_digest = rec.chain_digest;
                opt.trace->records.push_back(std::move(t));
            }
        }
    }
}

struct RunOutput {
    WorldState final_world;
    Trace trace;
};

// Steps the world to the horizon. The optional per-round callback observes
// each boundary (including the initial one) for timeline captures.
inline RunOutput run_until(WorldState world, Round horizon, const StepOptions& base = {},
                           const std::function<void(const WorldState&)>& each_round = {}) {
    if (horizon < world.now) throw ConfigError("horizon precedes current round");
    RunOutput out;
    out.trace = Trace{};
    StepOptions opt = base;
    opt.trace = &out.trace;
    if (each_round) each_round(world);
    while (world.now < horizon) {
        step(world, opt);
        if (each_round) each_round(world);
    }
    out.final_world = std::move(world);
    return out;
}

}  // namespace mutswap
