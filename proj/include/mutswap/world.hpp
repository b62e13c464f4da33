#pragma once
// World state shared by the strategy engine, scheduler, harness and explorer:
// all chains, all parties (knowledge + strategy binding), the public deal
// sheet, and the accumulated trace.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutswap/chain.hpp"
#include "mutswap/core.hpp"

namespace mutswap {

// Public agreement parameters. Everything here was negotiated off-chain
// before the run and is known to every participant (amounts, hashlocks,
// schedule); secrets themselves stay in the owners' knowledge sets.
struct BuyerDeal {
    std::string name;
    Address address;
    std::uint64_t seq = 0;
    std::uint64_t amount = 0;
    Round agreement_round = 0;
    Hashlock replace_lock;  // hash of the buyer's replacement secret
    Hashlock swap_lock;     // hash of the buyer's new swap secret
    std::string ca_id;
    Round ca_timeout = 0;
};

struct FollowerDeal {
    std::string buyer_name;
    Address buyer_address;
    std::uint64_t amount = 0;
    Round start_follower = 0;
    Hashlock replace_lock;  // hash of the buyer's replacement secret
    std::string db_id;
    Round db_timeout = 0;
};

struct DealSheet {
    Round swap_start = 0;
    std::uint64_t dT = 12;
    Address alice;
    Address bob;
    std::uint64_t asset_a = 100;
    std::uint64_t asset_b = 100;
    Hashlock swap_lock_a1;

    std::string ab_id = "AB";
    std::string ba_id = "BA";
    std::string chain_ab = "florin";
    std::string chain_ba = "guilder";
    std::string chain_pay = "payment";
    AssetKind kind_a = "florin";
    AssetKind kind_b = "guilder";
    AssetKind kind_pay = "payment";

    std::optional<Round> start_leader;
    std::vector<BuyerDeal> buyers;
    std::optional<FollowerDeal> follower;

    Round expiry() const { return swap_start + dT * kDelta; }  // BA timeout; AB is expiry()+1
    Round ab_timeout() const { return expiry() + kDelta; }

    const BuyerDeal* buyer_by_seq(std::uint64_t seq) const {
        for (const auto& b : buyers)
            if (b.seq == seq) return &b;
        return nullptr;
    }
    const BuyerDeal* buyer_by_address(const Address& a) const {
        for (const auto& b : buyers)
            if (b.address == a) return &b;
        return nullptr;
    }
};

struct StrategyParams {
    Round silent_from = 0;                      // "silent": conforming before, inert after
    std::optional<Round> act_round;             // deviation trigger override (submission round)
    std::optional<Round> exercise_submit_round; // start attempting the swap claim at this round
    bool refund_at_expiry = true;
    bool give_up = false;  // buyer never finalizes (griefing)

    bool operator==(const StrategyParams&) const = default;
};

struct Strategy {
    std::string kind;  // stable identifier, see parties.hpp
    StrategyParams params;

    bool operator==(const Strategy&) const = default;
};

struct PartyState {
    PartyId id;
    Strategy strategy;
    KnowledgeSet knowledge;
    std::map<std::string, Secret> named_secrets;  // e.g. "swap", "replace", "fresh1"

    const Secret* secret(const std::string& name) const {
        auto it = named_secrets.find(name);
        return it == named_secrets.end() ? nullptr : &it->second;
    }
};

struct TraceRecord {
    Round round = 0;
    std::string chain;
    Address submitter;
    std::string contract;
    std::string function;
    bool accepted = false;
    std::string reject_reason;
    std::string args_digest;
    std::vector<std::string> revealed_secrets;  // hex
    std::string state_delta;
    std::map<std::string, std::string> info;
    std::string state_digest;
};

struct Trace {
    std::vector<TraceRecord> records;

    std::string digest_hex() const {
        Canon c;
        for (const auto& r : records) {
            c.u64(r.round);
            c.str(r.chain);
            c.str(r.submitter);
            c.str(r.contract);
            c.str(r.function);
            c.boolean(r.accepted);
            c.str(r.reject_reason);
            c.str(r.args_digest);
            c.u64(r.revealed_secrets.size());
            for (const auto& s : r.revealed_secrets) c.str(s);
            c.str(r.state_delta);
            c.u64(r.info.size());
            for (const auto& [k, v] : r.info) {
                c.str(k);
                c.str(v);
            }
            c.str(r.state_digest);
        }
        return c.digest_hex();
    }
};

struct WorldState {
    Round now = 0;
    std::map<std::string, ChainLedger> chains;
    std::vector<std::string> chain_order;
    std::map<Address, PartyState> parties;
    std::vector<Address> party_order;
    DealSheet deal;
    ProtocolParams params;
    std::uint64_t seed = 0;
    std::uint64_t next_submission_seq = 0;

    const MutSwapContract* find_swap(const std::string& id) const {
        for (const auto& [cid, chain] : chains) {
            (void)cid;
            if (const auto* c = chain.find_swap(id)) return c;
        }
        return nullptr;
    }
    const HtlcContract* find_htlc(const std::string& id) const {
        for (const auto& [cid, chain] : chains) {
            (void)cid;
            if (const auto* c = chain.find_htlc(id)) return c;
        }
        return nullptr;
    }
    const ChainLedger& chain(const std::string& id) const {
        auto it = chains.find(id);
        if (it == chains.end()) throw ConfigError("unknown chain " + id);
        return it->second;
    }
    PartyState& party(const Address& a) {
        auto it = parties.find(a);
        if (it == parties.end()) throw ConfigError("unknown party " + a);
        return it->second;
    }
    const PartyState& party(const Address& a) const {
        auto it = parties.find(a);
        if (it == parties.end()) throw ConfigError("unknown party " + a);
        return it->second;
    }

    // Canonical digest over everything behaviorally relevant: two worlds with
    // equal digests extend identically under identical schedules.
    std::string digest_hex() const {
        Canon c;
        c.u64(now);
        c.u64(params.contest_window);
        c.boolean(params.contest_enabled);
        c.u64(chains.size());
        for (const auto& [id, chain] : chains) {
            (void)id;
            chain.canon(c);
        }
        c.u64(parties.size());
        for (const auto& [addr, p] : parties) {
            c.str(addr);
            c.u64(p.knowledge.secrets.size());
            for (const auto& s : p.knowledge.secrets) c.secret(s);
            c.u64(p.knowledge.signatures.size());
            for (const auto& s : p.knowledge.signatures) c.signature(s);
        }
        return c.digest_hex();
    }
};

// The per-round view a strategy acts on: public chain state as of the
// previous round boundary plus the party's own knowledge. Strategies never
// see same-round submissions of others.
struct Observation {
    const WorldState& world;
    const PartyState& self;

    Round now() const { return world.now; }
};

}  // namespace mutswap
