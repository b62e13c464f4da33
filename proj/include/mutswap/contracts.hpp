#pragma once
// Contract state machines: plain hashed-timelock escrow (CA, DB) and the
// mutable swap contract (AB, BA) with leader/follower position transfer and
// the multi-candidate admission counter.
//
// Transitions are pure: each operation takes the current state by const
// reference and returns the successor state together with a TxEffect. The
// ledger commits the successor only when the effect is accepted, so a
// rejected call can never leave a partial write behind (matching on-chain
// revert semantics, including the implicit revert-on-expiry prologues).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutswap/core.hpp"

namespace mutswap {

// One simulated round equals exactly one delta: the synchrony bound is used
// as the worst case everywhere, which is the adversarially tightest choice.
inline constexpr Round kDelta = 1;

struct ProtocolParams {
    Round contest_window = 2 * kDelta;  // follower's dispute window after a leader mutation
    bool contest_enabled = true;        // negative-control switch; production value is true

    Round candidate_replace_end = 4 * kDelta;  // candidate may replace until start+4
    Round follower_replace_end = 6 * kDelta;   // follower may replace until start+6
    Round leader_revert_after = 6 * kDelta;    // revertLeader enabled strictly after start+6
    Round follower_revert_after = 2 * kDelta;  // revertFollower enabled strictly after start+2
    Round next_seq_after = 4 * kDelta;         // seq==counter+1 admitted strictly after start+4
};

enum class Terminal { None, Claimed, Refunded };

enum class SwapSide {
    LeaderEscrow,    // "AB": the leader escrows and is the initial sender
    FollowerEscrow,  // "BA": the follower escrows and is the initial sender
};

enum class MutatorRole { Leader, Follower };

struct LeaderMutation {
    SignedMutation voucher;
    Address candidate;  // replaces sender on AB, receiver on BA
    MutatorRole mutator = MutatorRole::Leader;
    Hashlock replace_hashlock;
    Hashlock new_swap_hashlock;
    Round start_time = 0;
    bool approved = false;
    std::uint64_t seq = 0;

    bool operator==(const LeaderMutation&) const = default;
};

struct FollowerMutation {
    SignedMutation voucher;
    Address candidate;  // replaces receiver on AB, sender on BA
    Hashlock replace_hashlock;
    Round start_time = 0;

    bool operator==(const FollowerMutation&) const = default;
};

struct HtlcContract {
    std::string id;
    AssetAmount asset;
    Address sender;
    Address receiver;
    Hashlock swap_hashlock;
    Round timeout = 0;
    Terminal terminal = Terminal::None;

    bool operator==(const HtlcContract&) const = default;
};

struct MutSwapContract {
    std::string id;
    SwapSide side = SwapSide::LeaderEscrow;
    AssetAmount asset;
    Address sender;
    Address receiver;
    Address leader;
    Address follower;
    Hashlock swap_hashlock;
    Round timeout = 0;

    std::optional<LeaderMutation> leader_mut;         // the mutation with seq == counter
    std::optional<LeaderMutation> staged_leader_mut;  // admitted early with seq == counter+1
    std::optional<FollowerMutation> follower_mut;
    std::uint64_t counter = 0;
    std::uint64_t follower_counter = 0;
    Terminal terminal = Terminal::None;

    bool operator==(const MutSwapContract&) const = default;

    // The follower mutation freezes the escrow only on the leader-escrow side;
    // on BA it must never block the leader's claim.
    bool follower_mut_locks_asset() const { return side == SwapSide::LeaderEscrow; }
};

// Result of applying one transaction to one contract.
struct TxEffect {
    bool accepted = false;
    std::string reason;       // set when rejected
    std::string state_delta;  // human-readable summary of the committed change
    std::vector<std::pair<Address, AssetAmount>> credits;  // escrow released to
    std::vector<Secret> revealed;                          // secrets proven on chain
    std::map<std::string, std::string> info;  // window/seq bookkeeping for trace checks

    static TxEffect reject(std::string why) {
        TxEffect e;
        e.reason = std::move(why);
        return e;
    }
};

template <typename State>
struct Outcome {
    State next;
    TxEffect effect;
};

inline const char* to_string(Terminal t) {
    switch (t) {
        case Terminal::Claimed: return "claimed";
        case Terminal::Refunded: return "refunded";
        default: return "open";
    }
}

// ---------------------------------------------------------------------------
// Fig.-3 state projection. An expired mutation projects back to Ready2Claim:
// the position is semantically recovered at expiry and any touching call
// performs the revert implicitly.

enum class StateName {
    Ready2Claim,
    MutateLockContestable,
    MutateLockNonContestable,
    Claimed,
    Refunded,
};

inline const char* to_string(StateName s) {
    switch (s) {
        case StateName::Ready2Claim: return "Ready2Claim";
        case StateName::MutateLockContestable: return "MutateLockContestable";
        case StateName::MutateLockNonContestable: return "MutateLockNonContestable";
        case StateName::Claimed: return "Claimed";
        case StateName::Refunded: return "Refunded";
    }
    return "?";
}

inline StateName project_state(const MutSwapContract& c, Round now, const ProtocolParams& p) {
    if (c.terminal == Terminal::Claimed) return StateName::Claimed;
    if (c.terminal == Terminal::Refunded) return StateName::Refunded;
    if (!c.leader_mut) return StateName::Ready2Claim;
    const auto& m = *c.leader_mut;
    if (now > m.start_time + p.leader_revert_after) return StateName::Ready2Claim;
    if (m.mutator == MutatorRole::Follower || m.approved) return StateName::MutateLockNonContestable;
    if (now > m.start_time + p.contest_window) return StateName::MutateLockNonContestable;
    return StateName::MutateLockContestable;
}

// ---------------------------------------------------------------------------
// Canonical serialization (field order fixed; digests must be reproducible
// bit-for-bit across runs and replays).

inline void canon_leader_mutation(Canon& c, const std::optional<LeaderMutation>& m,
                                  bool locks_asset) {
    c.opt_flag(m.has_value());
    if (!m) return;
    c.signature(m->voucher);
    c.str(m->candidate);
    c.u64(m->mutator == MutatorRole::Leader ? 0 : 1);
    c.hashlock(m->replace_hashlock);
    c.hashlock(m->new_swap_hashlock);
    c.u64(m->start_time);
    c.boolean(m->approved);
    c.boolean(true);  // mutating
    c.boolean(locks_asset);
    c.u64(m->seq);
}

inline void canon_follower_mutation(Canon& c, const std::optional<FollowerMutation>& m,
                                    bool locks_asset) {
    c.opt_flag(m.has_value());
    if (!m) return;
    c.signature(m->voucher);
    c.str(m->candidate);
    c.hashlock(m->replace_hashlock);
    c.u64(m->start_time);
    c.boolean(true);  // mutating
    c.boolean(locks_asset);
}

inline void canon_contract(Canon& c, const MutSwapContract& s) {
    c.str(s.id);
    c.u64(s.side == SwapSide::LeaderEscrow ? 0 : 1);
    c.str(s.asset.kind);
    c.u64(s.asset.quantity);
    c.str(s.sender);
    c.str(s.receiver);
    c.str(s.leader);
    c.str(s.follower);
    c.hashlock(s.swap_hashlock);
    c.u64(s.timeout);
    canon_leader_mutation(c, s.leader_mut, true);
    canon_leader_mutation(c, s.staged_leader_mut, true);
    canon_follower_mutation(c, s.follower_mut, s.follower_mut_locks_asset());
    c.u64(s.counter);
    c.u64(s.follower_counter);
    c.u64(std::uint64_t(s.terminal));
}

inline void canon_contract(Canon& c, const HtlcContract& s) {
    c.str(s.id);
    c.str(s.asset.kind);
    c.u64(s.asset.quantity);
    c.str(s.sender);
    c.str(s.receiver);
    c.hashlock(s.swap_hashlock);
    c.u64(s.timeout);
    c.u64(std::uint64_t(s.terminal));
}

// ---------------------------------------------------------------------------
// Plain HTLC transitions

inline Outcome<HtlcContract> htlc_claim(const HtlcContract& c, Round now, const Address& caller,
                                        const Secret& secret) {
    HtlcContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    if (caller != c.receiver) return {next, TxEffect::reject("not receiver")};
    if (now > c.timeout) return {next, TxEffect::reject("expired")};
    if (!verify_preimage(c.swap_hashlock, secret)) return {next, TxEffect::reject("wrong preimage")};
    next.terminal = Terminal::Claimed;
    TxEffect e;
    e.accepted = true;
    e.state_delta = "claimed by " + caller;
    e.credits.push_back({c.receiver, c.asset});
    e.revealed.push_back(secret);
    return {next, e};
}

inline Outcome<HtlcContract> htlc_refund(const HtlcContract& c, Round now, const Address& caller) {
    HtlcContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    if (caller != c.sender) return {next, TxEffect::reject("not sender")};
    if (now <= c.timeout) return {next, TxEffect::reject("not expired")};
    next.terminal = Terminal::Refunded;
    TxEffect e;
    e.accepted = true;
    e.state_delta = "refunded to " + caller;
    e.credits.push_back({c.sender, c.asset});
    return {next, e};
}

// ---------------------------------------------------------------------------
// Mutable swap transitions

namespace detail {

// Implicit reverts: any touching call first discards expired mutation records,
// bumping the admission counter and promoting a staged successor. Loops so a
// long-untouched contract converges in one call.
inline void process_expiries(MutSwapContract& c, Round now, const ProtocolParams& p, TxEffect& e) {
    while (c.leader_mut && now > c.leader_mut->start_time + p.leader_revert_after) {
        e.info["implicit_revert_leader_seq"] = std::to_string(c.leader_mut->seq);
        e.info["implicit_revert_leader_start"] = std::to_string(c.leader_mut->start_time);
        c.leader_mut.reset();
        c.counter += 1;
        e.info["counter"] = std::to_string(c.counter);
        if (c.staged_leader_mut) {
            c.leader_mut = std::move(*c.staged_leader_mut);
            c.staged_leader_mut.reset();
        }
    }
    if (c.follower_mut && now > c.follower_mut->start_time + p.follower_revert_after) {
        e.info["implicit_revert_follower_start"] = std::to_string(c.follower_mut->start_time);
        c.follower_mut.reset();
        c.follower_counter += 1;
        e.info["follower_counter"] = std::to_string(c.follower_counter);
    }
}

inline bool asset_locked(const MutSwapContract& c) {
    if (c.leader_mut) return true;
    if (c.follower_mut && c.follower_mut_locks_asset()) return true;
    return false;
}

}  // namespace detail

inline Outcome<MutSwapContract> mutswap_claim(const MutSwapContract& c, Round now,
                                              const Address& caller, const Secret& secret,
                                              const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);
    if (detail::asset_locked(next)) return {c, TxEffect::reject("asset locked")};
    if (caller != next.receiver) return {c, TxEffect::reject("not receiver")};
    if (now > next.timeout) return {c, TxEffect::reject("expired")};
    if (!verify_preimage(next.swap_hashlock, secret)) return {c, TxEffect::reject("wrong preimage")};
    next.terminal = Terminal::Claimed;
    e.accepted = true;
    e.state_delta = "claimed by " + caller;
    e.credits.push_back({next.receiver, next.asset});
    e.revealed.push_back(secret);
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_refund(const MutSwapContract& c, Round now,
                                               const Address& caller, const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);
    if (detail::asset_locked(next)) return {c, TxEffect::reject("asset locked")};
    if (caller != next.sender) return {c, TxEffect::reject("not sender")};
    if (now <= next.timeout) return {c, TxEffect::reject("not expired")};
    next.terminal = Terminal::Refunded;
    e.accepted = true;
    e.state_delta = "refunded to " + caller;
    e.credits.push_back({next.sender, next.asset});
    return {next, e};
}

// Leader-position tentative transfer. The caller is the leader (opening the
// contest window) or the follower relaying the leader's signature (implicit
// approval, no contest window). seq==counter installs the active record;
// seq==counter+1 is admitted into the staged slot once the active record is
// older than 4 delta, so a queued buyer's consistency phase overlaps the
// previous buyer's revert window.
inline Outcome<MutSwapContract> mutswap_mutate_lock_leader(
    const MutSwapContract& c, Round now, const Address& caller, const SignedMutation& sig,
    const Address& candidate, const Hashlock& replace_hashlock, const Hashlock& new_swap_hashlock,
    std::uint64_t seq, const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);

    // The transfer machinery exists for the original leader's position only;
    // once a replace finalized there is nothing left to transfer.
    bool leader_holds = (next.side == SwapSide::LeaderEscrow) ? next.sender == next.leader
                                                              : next.receiver == next.leader;
    if (!leader_holds) return {c, TxEffect::reject("position transferred")};

    MutatorRole role;
    Round lead_time;  // required distance from the contract timeout at call time
    if (caller == next.leader) {
        role = MutatorRole::Leader;
        lead_time = (next.side == SwapSide::LeaderEscrow) ? 8 * kDelta : 7 * kDelta;
    } else if (caller == next.follower) {
        role = MutatorRole::Follower;
        lead_time = (next.side == SwapSide::LeaderEscrow) ? 7 * kDelta : 6 * kDelta;
    } else {
        return {c, TxEffect::reject("not a party")};
    }
    if (next.timeout < now + lead_time) return {c, TxEffect::reject("deadline passed")};

    if (!sig.valid_for(next.leader)) return {c, TxEffect::reject("bad signature")};
    MutationPayload expect = MutationPayload::leader(replace_hashlock, new_swap_hashlock, candidate, seq);
    if (sig.payload != expect) return {c, TxEffect::reject("payload mismatch")};

    LeaderMutation m;
    m.voucher = sig;
    m.candidate = candidate;
    m.mutator = role;
    m.replace_hashlock = replace_hashlock;
    m.new_swap_hashlock = new_swap_hashlock;
    m.start_time = now;
    m.seq = seq;

    if (seq == next.counter) {
        if (next.leader_mut) {
            return {c, TxEffect::reject(next.leader_mut->start_time == now ? "seq consumed"
                                                                           : "already mutating")};
        }
        next.leader_mut = m;
    } else if (seq == next.counter + 1) {
        if (!next.leader_mut) return {c, TxEffect::reject("wrong seq")};
        if (now <= next.leader_mut->start_time + p.next_seq_after)
            return {c, TxEffect::reject("too early for next seq")};
        if (next.staged_leader_mut) {
            return {c, TxEffect::reject(next.staged_leader_mut->start_time == now
                                            ? "seq consumed"
                                            : "already mutating")};
        }
        next.staged_leader_mut = m;
        e.info["staged"] = "1";
    } else {
        return {c, TxEffect::reject("wrong seq")};
    }

    e.accepted = true;
    e.state_delta = "leader mutation seq " + std::to_string(seq) + " by " +
                    (role == MutatorRole::Leader ? "leader" : "follower") + " candidate " + candidate;
    e.info["mutation_start"] = std::to_string(now);
    e.info["seq"] = std::to_string(seq);
    e.info["mutator"] = role == MutatorRole::Leader ? "leader" : "follower";
    return {next, e};
}

// Dispute: the follower proves the leader signed an inconsistent mutation, or
// that the current swap secret already leaked. Targets the record named by
// seq (active record, or the staged successor).
inline Outcome<MutSwapContract> mutswap_contest_leader(
    const MutSwapContract& c, Round now, const Address& caller, std::uint64_t seq,
    const std::optional<SignedMutation>& evidence_sig, const std::optional<Secret>& evidence_secret,
    const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    if (!p.contest_enabled) return {c, TxEffect::reject("contest disabled")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);

    bool target_active;
    if (seq == next.counter && next.leader_mut) {
        target_active = true;
    } else if (seq == next.counter + 1 && next.staged_leader_mut) {
        target_active = false;
    } else {
        return {c, TxEffect::reject("no mutation")};
    }
    const LeaderMutation& m = target_active ? *next.leader_mut : *next.staged_leader_mut;

    if (caller != next.follower) return {c, TxEffect::reject("follower only")};
    if (m.approved) return {c, TxEffect::reject("approved")};
    if (m.mutator != MutatorRole::Leader) return {c, TxEffect::reject("not contestable")};
    Round age = now - m.start_time;
    if (age == 0 || age > p.contest_window) return {c, TxEffect::reject("window closed")};

    // Evidence signatures must quote the contested seq: across seq values the
    // leader legitimately signs different payloads for different buyers.
    bool inconsistent_sig = evidence_sig && evidence_sig->valid_for(next.leader) &&
                            evidence_sig->payload.seq == m.voucher.payload.seq &&
                            evidence_sig->payload != m.voucher.payload;
    bool leaked_secret = evidence_secret && verify_preimage(next.swap_hashlock, *evidence_secret);
    if (!inconsistent_sig && !leaked_secret) return {c, TxEffect::reject("no inconsistency")};

    e.info["contested_seq"] = std::to_string(m.seq);
    e.info["mutation_start"] = std::to_string(m.start_time);
    e.info["window_age"] = std::to_string(age);
    if (target_active) {
        next.leader_mut.reset();
        next.counter += 1;
        e.info["counter"] = std::to_string(next.counter);
        if (next.staged_leader_mut) {
            next.leader_mut = std::move(*next.staged_leader_mut);
            next.staged_leader_mut.reset();
        }
    } else {
        next.staged_leader_mut.reset();
    }
    if (leaked_secret) e.revealed.push_back(*evidence_secret);
    e.accepted = true;
    e.state_delta = std::string("contested, mutation reverted (") +
                    (inconsistent_sig ? "inconsistent signature" : "leaked swap secret") + ")";
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_approve_leader(const MutSwapContract& c, Round now,
                                                       const Address& caller,
                                                       const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);
    if (!next.leader_mut) return {c, TxEffect::reject("no mutation")};
    if (caller != next.follower) return {c, TxEffect::reject("follower only")};
    if (next.leader_mut->mutator != MutatorRole::Leader)
        return {c, TxEffect::reject("follower mutation")};
    Round age = now - next.leader_mut->start_time;
    if (age == 0 || age > p.contest_window) return {c, TxEffect::reject("window closed")};
    next.leader_mut->approved = true;
    e.accepted = true;
    e.state_delta = "approved by follower";
    e.info["mutation_start"] = std::to_string(next.leader_mut->start_time);
    e.info["seq"] = std::to_string(next.leader_mut->seq);
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_replace_leader(const MutSwapContract& c, Round now,
                                                       const Address& caller, const Secret& secret,
                                                       const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);
    if (!next.leader_mut) return {c, TxEffect::reject("not mutating")};
    const LeaderMutation& m = *next.leader_mut;

    Round age = now - m.start_time;
    bool skip_contest = m.mutator == MutatorRole::Follower || m.approved;
    bool candidate_round = caller == m.candidate && age > (skip_contest ? 0 : p.contest_window) &&
                           age <= p.candidate_replace_end;
    bool follower_round = caller == next.follower && age > 0 && age <= p.follower_replace_end;
    if (!candidate_round && !follower_round) return {c, TxEffect::reject("outside window")};
    if (!verify_preimage(m.replace_hashlock, secret)) return {c, TxEffect::reject("wrong preimage")};

    if (next.side == SwapSide::LeaderEscrow) {
        next.sender = m.candidate;
    } else {
        next.receiver = m.candidate;
    }
    next.swap_hashlock = m.new_swap_hashlock;
    e.info["mutation_start"] = std::to_string(m.start_time);
    e.info["seq"] = std::to_string(m.seq);
    e.info["window_age"] = std::to_string(age);
    e.info["path"] = candidate_round ? (skip_contest ? "candidate_approved" : "candidate_contestable")
                                     : "follower";
    next.leader_mut.reset();
    next.staged_leader_mut.reset();  // a queued transfer of a position that just changed hands is void
    e.accepted = true;
    e.state_delta = "leader position replaced by " + m.candidate;
    e.revealed.push_back(secret);
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_revert_leader(const MutSwapContract& c, Round now,
                                                      const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    if (!next.leader_mut) return {next, TxEffect::reject("not mutating")};
    if (now <= next.leader_mut->start_time + p.leader_revert_after)
        return {next, TxEffect::reject("too early")};
    TxEffect e;
    e.info["mutation_start"] = std::to_string(next.leader_mut->start_time);
    e.info["seq"] = std::to_string(next.leader_mut->seq);
    e.info["window_age"] = std::to_string(now - next.leader_mut->start_time);
    next.leader_mut.reset();
    next.counter += 1;
    e.info["counter"] = std::to_string(next.counter);
    if (next.staged_leader_mut) {
        next.leader_mut = std::move(*next.staged_leader_mut);
        next.staged_leader_mut.reset();
    }
    e.accepted = true;
    e.state_delta = "leader mutation reverted";
    return {next, e};
}

// Follower-position tentative transfer. Asset-locking variant runs on AB
// only; the lock-free variant runs on BA only so the leader's optionality is
// never touched.
inline Outcome<MutSwapContract> mutswap_mutate_lock_follower(
    const MutSwapContract& c, Round now, const Address& caller, const SignedMutation& sig,
    const Address& candidate, const Hashlock& replace_hashlock, bool lock_free,
    const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);

    bool want_lock_free = next.side == SwapSide::FollowerEscrow;
    if (lock_free != want_lock_free) return {c, TxEffect::reject("wrong contract")};

    bool follower_holds = (next.side == SwapSide::LeaderEscrow) ? next.receiver == next.follower
                                                                : next.sender == next.follower;
    if (!follower_holds) return {c, TxEffect::reject("position transferred")};

    if (caller != next.follower) return {c, TxEffect::reject("follower only")};
    if (next.follower_mut) {
        return {c, TxEffect::reject(next.follower_mut->start_time == now ? "seq consumed"
                                                                         : "already mutating")};
    }
    Round lead_time = (next.side == SwapSide::LeaderEscrow) ? 3 * kDelta : 2 * kDelta;
    if (next.timeout < now + lead_time) return {c, TxEffect::reject("deadline passed")};
    if (!sig.valid_for(next.follower)) return {c, TxEffect::reject("bad signature")};
    if (sig.payload != MutationPayload::follower(replace_hashlock, candidate))
        return {c, TxEffect::reject("payload mismatch")};

    FollowerMutation m;
    m.voucher = sig;
    m.candidate = candidate;
    m.replace_hashlock = replace_hashlock;
    m.start_time = now;
    next.follower_mut = m;
    e.accepted = true;
    e.state_delta = std::string("follower mutation by follower candidate ") + candidate +
                    (lock_free ? " (lock-free)" : "");
    e.info["mutation_start"] = std::to_string(now);
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_replace_follower(const MutSwapContract& c, Round now,
                                                         const Address& caller,
                                                         const Secret& secret,
                                                         const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    TxEffect e;
    detail::process_expiries(next, now, p, e);
    if (!next.follower_mut) return {c, TxEffect::reject("not mutating")};
    const FollowerMutation& m = *next.follower_mut;
    Round age = now - m.start_time;
    if (age == 0 || age > p.follower_revert_after) return {c, TxEffect::reject("window closed")};
    if (!verify_preimage(m.replace_hashlock, secret)) return {c, TxEffect::reject("wrong preimage")};
    if (next.side == SwapSide::LeaderEscrow) {
        next.receiver = m.candidate;
    } else {
        next.sender = m.candidate;
    }
    e.info["mutation_start"] = std::to_string(m.start_time);
    e.info["window_age"] = std::to_string(age);
    next.follower_mut.reset();
    e.accepted = true;
    e.state_delta = "follower position replaced by " + m.candidate;
    e.revealed.push_back(secret);
    (void)caller;  // anyone holding the preimage may finalize
    return {next, e};
}

inline Outcome<MutSwapContract> mutswap_revert_follower(const MutSwapContract& c, Round now,
                                                        const ProtocolParams& p) {
    MutSwapContract next = c;
    if (c.terminal != Terminal::None) return {next, TxEffect::reject("terminal")};
    if (!next.follower_mut) return {next, TxEffect::reject("not mutating")};
    if (now <= next.follower_mut->start_time + p.follower_revert_after)
        return {next, TxEffect::reject("too early")};
    TxEffect e;
    e.info["mutation_start"] = std::to_string(next.follower_mut->start_time);
    next.follower_mut.reset();
    next.follower_counter += 1;
    e.info["follower_counter"] = std::to_string(next.follower_counter);
    e.accepted = true;
    e.state_delta = "follower mutation reverted";
    return {next, e};
}

}  // namespace mutswap
