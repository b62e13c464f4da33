#pragma once
// Strategy engine. Each party is a pure function of its per-round observation
// (public chain state as of the previous boundary plus its own knowledge):
// identical observation streams produce identical transaction streams, which
// is what makes runs replayable and the explorer's dedup sound.
//
// Conforming strategies emit a prescribed transaction in the same round its
// trigger is observed; a transaction lost to an adversarial ordering is
// re-derived and re-submitted the next round because the triggering condition
// still holds. Adversarial strategies are named deterministic deviations.

#include <optional>
#include <string>
#include <vector>

#include "mutswap/world.hpp"

namespace mutswap {

// Stable strategy identifiers (scenario files bind parties by these names).
namespace strategy_kind {
inline constexpr const char* conforming_alice = "conformingAliceLeaderSeller";
inline constexpr const char* conforming_bob = "conformingBobFollower";
inline constexpr const char* altruistic_bob = "altruisticBobFollower";
inline constexpr const char* conforming_carol = "conformingCarolBuyer";
inline constexpr const char* conforming_david = "conformingBobSellerAndDavidBuyer";
inline constexpr const char* silent = "silent";
inline constexpr const char* inconsistent_hashlocks = "inconsistentHashlocks";
inline constexpr const char* mutate_one_contract_only = "mutateOneContractOnly";
inline constexpr const char* claim_ba_then_mutate_ab = "claimBAThenMutateAB";
inline constexpr const char* griefing_carol = "griefingCarol";
inline constexpr const char* staggered_mutations = "staggeredConsistentMutations";
inline constexpr const char* replace_one_contract_only = "replaceOneContractOnly";
inline constexpr const char* duplicate_seq = "duplicateSeqAssignment";
inline constexpr const char* explored = "explored";  // driven by the explorer, never emits
}  // namespace strategy_kind

// Contract state as it will look when a transaction submitted now executes
// (next round), with expired mutations already reverted.
inline MutSwapContract expiry_view(const MutSwapContract& c, Round exec, const ProtocolParams& p) {
    MutSwapContract v = c;
    TxEffect scratch;
    detail::process_expiries(v, exec, p, scratch);
    return v;
}

namespace txb {

inline Transaction claim(const Address& who, const std::string& chain, const std::string& target,
                         const Secret& s) {
    return Transaction{who, chain, target, "claim", {s}};
}
inline Transaction refund(const Address& who, const std::string& chain, const std::string& target) {
    return Transaction{who, chain, target, "refund", {}};
}
inline Transaction mutate_lock_leader(const Address& who, const std::string& chain,
                                      const std::string& target, const SignedMutation& sig) {
    const MutationPayload& pl = sig.payload;
    return Transaction{who,
                       chain,
                       target,
                       "mutateLockLeader",
                       {sig, pl.candidate, pl.replace_hashlock, *pl.new_swap_hashlock, *pl.seq}};
}
inline Transaction contest_leader(const Address& who, const std::string& chain,
                                  const std::string& target, std::uint64_t seq,
                                  const std::optional<SignedMutation>& sig,
                                  const std::optional<Secret>& secret) {
    Transaction tx{who, chain, target, "contestLeader", {seq}};
    if (sig) tx.args.push_back(*sig);
    if (secret) tx.args.push_back(*secret);
    return tx;
}
inline Transaction approve_leader(const Address& who, const std::string& chain,
                                  const std::string& target) {
    return Transaction{who, chain, target, "approveLeader", {}};
}
inline Transaction replace_leader(const Address& who, const std::string& chain,
                                  const std::string& target, const Secret& s) {
    return Transaction{who, chain, target, "replaceLeader", {s}};
}
inline Transaction mutate_lock_follower(const Address& who, const std::string& chain,
                                        const std::string& target, const SignedMutation& sig,
                                        bool lock_free) {
    const MutationPayload& pl = sig.payload;
    return Transaction{who, chain, target,
                       lock_free ? "mutateLockFreeFollower" : "mutateLockFollower",
                       {sig, pl.candidate, pl.replace_hashlock}};
}
inline Transaction replace_follower(const Address& who, const std::string& chain,
                                    const std::string& target, const Secret& s) {
    return Transaction{who, chain, target, "replaceFollower", {s}};
}
inline Transaction deploy_mutswap(const Address& who, const std::string& chain,
                                  const std::string& id, const AssetKind& kind,
                                  std::uint64_t quantity, const Address& sender,
                                  const Address& receiver, const Address& leader,
                                  const Address& follower, Round start, std::uint64_t dT,
                                  const Hashlock& lock) {
    return Transaction{
        who, chain, id, "deployMutSwap",
        {kind, quantity, sender, receiver, leader, follower, std::uint64_t(start), dT, lock}};
}
inline Transaction deploy_htlc(const Address& who, const std::string& chain, const std::string& id,
                               const AssetKind& kind, std::uint64_t quantity,
                               const Address& sender, const Address& receiver,
                               const Hashlock& lock, Round timeout) {
    return Transaction{who, chain, id, "deployHtlc",
                       {kind, quantity, sender, receiver, lock, std::uint64_t(timeout)}};
}
inline Transaction announce(const Address& who, const std::string& chain, std::vector<TxArg> args) {
    return Transaction{who, chain, "announce", "announce", std::move(args)};
}

}  // namespace txb

namespace detail_strategy {

inline const Secret* matching_secret(const KnowledgeSet& k, const Hashlock& lock) {
    for (const auto& s : k.secrets)
        if (verify_preimage(lock, s)) return &s;
    return nullptr;
}

// --- shared duty blocks -----------------------------------------------------

// Claim any swap escrow currently addressed to us whose swap secret we know.
inline void duty_claim_incoming_swaps(const Observation& obs, std::vector<Transaction>& out,
                                      std::vector<Transaction>* contests_this_round = nullptr) {
    const WorldState& w = obs.world;
    Round exec = w.now + 1;
    for (const std::string& id : {w.deal.ab_id, w.deal.ba_id}) {
        const auto* c = w.find_swap(id);
        if (!c || c->terminal != Terminal::None) continue;
        MutSwapContract view = expiry_view(*c, exec, w.params);
        if (view.receiver != obs.self.id.address) continue;
        if (exec > view.timeout) continue;
        const Secret* s = matching_secret(obs.self.knowledge, view.swap_hashlock);
        if (!s) continue;
        if (detail::asset_locked(view)) {
            // Claimable this round only if our own contest (already queued this
            // round) clears the lock first under submission order.
            bool clearing = false;
            if (contests_this_round) {
                for (const auto& tx : *contests_this_round)
                    if (tx.function == "contestLeader" && tx.target == id) clearing = true;
            }
            if (!clearing) continue;
        }
        const std::string& chain = id == w.deal.ab_id ? w.deal.chain_ab : w.deal.chain_ba;
        out.push_back(txb::claim(obs.self.id.address, chain, id, *s));
    }
}

inline void duty_refund_swap(const Observation& obs, const std::string& id,
                             std::vector<Transaction>& out) {
    const WorldState& w = obs.world;
    Round exec = w.now + 1;
    const auto* c = w.find_swap(id);
    if (!c || c->terminal != Terminal::None) return;
    MutSwapContract view = expiry_view(*c, exec, w.params);
    if (view.sender != obs.self.id.address) return;
    if (exec <= view.timeout) return;
    if (detail::asset_locked(view)) return;
    const std::string& chain = id == w.deal.ab_id ? w.deal.chain_ab : w.deal.chain_ba;
    out.push_back(txb::refund(obs.self.id.address, chain, id));
}

inline void duty_refund_htlc(const Observation& obs, const std::string& id,
                             std::vector<Transaction>& out) {
    const WorldState& w = obs.world;
    const auto* c = w.find_htlc(id);
    if (!c || c->terminal != Terminal::None) return;
    if (c->sender != obs.self.id.address) return;
    if (w.now + 1 <= c->timeout) return;
    out.push_back(txb::refund(obs.self.id.address, w.deal.chain_pay, id));
}

inline void duty_claim_htlc(const Observation& obs, const std::string& id,
                            std::vector<Transaction>& out) {
    const WorldState& w = obs.world;
    const auto* c = w.find_htlc(id);
    if (!c || c->terminal != Terminal::None) return;
    if (c->receiver != obs.self.id.address) return;
    if (w.now + 1 > c->timeout) return;
    const Secret* s = matching_secret(obs.self.knowledge, c->swap_hashlock);
    if (!s) return;
    out.push_back(txb::claim(obs.self.id.address, w.deal.chain_pay, id, *s));
}

// --- Alice ------------------------------------------------------------------

enum class AliceMode {
    Conforming,
    InconsistentHashlocks,
    MutateOneContractOnly,
    ClaimBaThenMutateAb,
    Staggered,
    DuplicateSeq,
};

inline bool ca_well_formed(const WorldState& w, const BuyerDeal& b) {
    const auto* ca = w.find_htlc(b.ca_id);
    return ca && ca->terminal == Terminal::None && ca->sender == b.address &&
           ca->receiver == w.deal.alice && ca->asset.kind == w.deal.kind_pay &&
           ca->asset.quantity == b.amount && ca->swap_hashlock == b.replace_lock &&
           ca->timeout == b.ca_timeout;
}

// Whether the leader's mutation for this buyer can be installed on `id` by a
// transaction landing at `exec`, mirroring the contract's admission gate.
inline bool leader_can_mutate(const WorldState& w, const std::string& id, const BuyerDeal& b,
                              Round exec, const MutationPayload& expect) {
    const auto* c = w.find_swap(id);
    if (!c || c->terminal != Terminal::None) return false;
    MutSwapContract view = expiry_view(*c, exec, w.params);
    bool is_ab = view.side == SwapSide::LeaderEscrow;
    if ((is_ab ? view.sender : view.receiver) != view.leader) return false;
    if (view.timeout < exec + (is_ab ? 8 : 7) * kDelta) return false;
    auto matches = [&](const std::optional<LeaderMutation>& m) {
        return m && m->voucher.payload == expect;
    };
    if (matches(view.leader_mut) || matches(view.staged_leader_mut)) return false;  // already done
    if (b.seq == view.counter) return !view.leader_mut;
    if (b.seq == view.counter + 1)
        return view.leader_mut && exec > view.leader_mut->start_time + w.params.next_seq_after &&
               !view.staged_leader_mut;
    return false;
}

inline std::vector<Transaction> alice_emit(const Observation& obs, AliceMode mode) {
    const WorldState& w = obs.world;
    const DealSheet& d = w.deal;
    const Address me = obs.self.id.address;
    Round exec = w.now + 1;
    std::vector<Transaction> out;

    // Setup: escrow the leader principal.
    if (w.now == d.swap_start && !w.find_swap(d.ab_id)) {
        out.push_back(txb::deploy_mutswap(me, d.chain_ab, d.ab_id, d.kind_a, d.asset_a, me, d.bob,
                                          me, d.bob, d.swap_start, d.dT, d.swap_lock_a1));
    }

    // Leader-transfer mutations.
    if (d.start_leader) {
        auto payload_for = [&](const BuyerDeal& b) {
            return MutationPayload::leader(b.replace_lock, b.swap_lock, b.address, b.seq);
        };
        auto emit_mutate = [&](const std::string& id, const BuyerDeal& b,
                               const MutationPayload& pl) {
            const std::string& chain = id == d.ab_id ? d.chain_ab : d.chain_ba;
            out.push_back(
                txb::mutate_lock_leader(me, chain, id, sign(me, pl, w.now)));
            (void)b;
        };
        switch (mode) {
            case AliceMode::Conforming:
            case AliceMode::MutateOneContractOnly:
                for (const auto& b : d.buyers) {
                    if (!ca_well_formed(w, b)) continue;
                    MutationPayload pl = payload_for(b);
                    if (leader_can_mutate(w, d.ab_id, b, exec, pl)) emit_mutate(d.ab_id, b, pl);
                    if (mode == AliceMode::Conforming && leader_can_mutate(w, d.ba_id, b, exec, pl))
                        emit_mutate(d.ba_id, b, pl);
                }
                break;
            case AliceMode::Staggered:
                // Consistent signatures reported a delta apart: BA only once the
                // AB mutation is visible on chain.
                for (const auto& b : d.buyers) {
                    if (!ca_well_formed(w, b)) continue;
                    MutationPayload pl = payload_for(b);
                    if (leader_can_mutate(w, d.ab_id, b, exec, pl)) emit_mutate(d.ab_id, b, pl);
                    const auto* ab = w.find_swap(d.ab_id);
                    bool ab_mutated = ab && ab->leader_mut &&
                                      ab->leader_mut->voucher.payload == pl;
                    if (ab_mutated && leader_can_mutate(w, d.ba_id, b, exec, pl))
                        emit_mutate(d.ba_id, b, pl);
                }
                break;
            case AliceMode::InconsistentHashlocks:
                if (!d.buyers.empty() && ca_well_formed(w, d.buyers.front())) {
                    const BuyerDeal& b = d.buyers.front();
                    MutationPayload ab_pl = payload_for(b);
                    MutationPayload ba_pl = ab_pl;
                    if (const Secret* fresh = obs.self.secret("fresh1"))
                        ba_pl.new_swap_hashlock = hash_secret(*fresh);
                    if (leader_can_mutate(w, d.ab_id, b, exec, ab_pl))
                        emit_mutate(d.ab_id, b, ab_pl);
                    if (leader_can_mutate(w, d.ba_id, b, exec, ba_pl))
                        emit_mutate(d.ba_id, b, ba_pl);
                }
                break;
            case AliceMode::DuplicateSeq:
                // The same sequence number promised to two different buyers.
                if (d.buyers.size() >= 2) {
                    const BuyerDeal& b0 = d.buyers[0];
                    const BuyerDeal& b1 = d.buyers[1];
                    MutationPayload ab_pl = payload_for(b0);
                    MutationPayload ba_pl =
                        MutationPayload::leader(b1.replace_lock, b1.swap_lock, b1.address, b0.seq);
                    if (ca_well_formed(w, b0) && leader_can_mutate(w, d.ab_id, b0, exec, ab_pl))
                        emit_mutate(d.ab_id, b0, ab_pl);
                    if (ca_well_formed(w, b1) && leader_can_mutate(w, d.ba_id, b0, exec, ba_pl))
                        emit_mutate(d.ba_id, b0, ba_pl);
                }
                break;
            case AliceMode::ClaimBaThenMutateAb: {
                Round trigger = obs.self.strategy.params.act_round.value_or(*d.start_leader + 1);
                if (w.now == trigger && !d.buyers.empty()) {
                    const BuyerDeal& b = d.buyers.front();
                    if (const Secret* a1 = obs.self.secret("swap"))
                        out.push_back(txb::claim(me, d.chain_ba, d.ba_id, *a1));
                    MutationPayload pl = payload_for(b);
                    if (leader_can_mutate(w, d.ab_id, b, exec, pl)) emit_mutate(d.ab_id, b, pl);
                }
                break;
            }
        }
    }

    // Redeem the buyer's payment as soon as its secret is visible.
    for (const auto& b : d.buyers) duty_claim_htlc(obs, b.ca_id, out);

    // Exercise (reveal the swap secret) when scripted.
    const auto& sp = obs.self.strategy.params;
    if (sp.exercise_submit_round && w.now >= *sp.exercise_submit_round) {
        const auto* ba = w.find_swap(d.ba_id);
        if (ba && ba->terminal == Terminal::None) {
            MutSwapContract view = expiry_view(*ba, exec, w.params);
            const Secret* s = matching_secret(obs.self.knowledge, view.swap_hashlock);
            if (view.receiver == me && s && exec <= view.timeout &&
                !detail::asset_locked(view))
                out.push_back(txb::claim(me, d.chain_ba, d.ba_id, *s));
        }
    }

    if (sp.refund_at_expiry) duty_refund_swap(obs, d.ab_id, out);
    return out;
}

// --- Bob ----------------------------------------------------------------

inline bool ab_well_formed(const WorldState& w) {
    const auto* ab = w.find_swap(w.deal.ab_id);
    return ab && ab->terminal == Terminal::None && ab->side == SwapSide::LeaderEscrow &&
           ab->sender == w.deal.alice && ab->receiver == w.deal.bob &&
           ab->leader == w.deal.alice && ab->follower == w.deal.bob &&
           ab->asset.kind == w.deal.kind_a && ab->asset.quantity == w.deal.asset_a &&
           ab->swap_hashlock == w.deal.swap_lock_a1 && ab->timeout == w.deal.ab_timeout();
}

inline bool db_well_formed(const WorldState& w) {
    if (!w.deal.follower) return false;
    const FollowerDeal& fd = *w.deal.follower;
    const auto* db = w.find_htlc(fd.db_id);
    return db && db->terminal == Terminal::None && db->sender == fd.buyer_address &&
           db->receiver == w.deal.bob && db->asset.kind == w.deal.kind_pay &&
           db->asset.quantity == fd.amount && db->swap_hashlock == fd.replace_lock &&
           db->timeout == fd.db_timeout;
}

inline std::vector<Transaction> bob_emit(const Observation& obs, bool altruistic) {
    const WorldState& w = obs.world;
    const DealSheet& d = w.deal;
    const Address me = obs.self.id.address;
    Round exec = w.now + 1;
    std::vector<Transaction> out;

    // Setup: escrow the follower principal once the leader's escrow checks out.
    if (!w.find_swap(d.ba_id) && ab_well_formed(w)) {
        out.push_back(txb::deploy_mutswap(me, d.chain_ba, d.ba_id, d.kind_b, d.asset_b, me,
                                          d.alice, d.alice, me, d.swap_start, d.dT,
                                          d.swap_lock_a1));
    }

    const auto* ab = w.find_swap(d.ab_id);
    const auto* ba = w.find_swap(d.ba_id);

    struct Side {
        const MutSwapContract* c;
        const MutSwapContract* other;
        std::string chain;
        std::string other_chain;
    };
    std::vector<Side> sides;
    if (ab) sides.push_back({ab, ba, d.chain_ab, d.chain_ba});
    if (ba) sides.push_back({ba, ab, d.chain_ba, d.chain_ab});

    std::vector<Transaction> contests;
    for (const auto& side : sides) {
        if (side.c->terminal != Terminal::None) continue;
        MutSwapContract view = expiry_view(*side.c, exec, w.params);

        for (const LeaderMutation* m :
             {view.leader_mut ? &*view.leader_mut : nullptr,
              view.staged_leader_mut ? &*view.staged_leader_mut : nullptr}) {
            if (!m) continue;

            // Contest a leader-initiated mutation given inconsistency or a
            // leaked swap secret, inside the dispute window.
            bool contestable = m->mutator == MutatorRole::Leader && !m->approved &&
                               exec - m->start_time <= w.params.contest_window;
            if (contestable) {
                std::optional<SignedMutation> evidence;
                for (const auto& sig : obs.self.knowledge.signatures) {
                    if (sig.signer == view.leader && sig.payload.seq == m->voucher.payload.seq &&
                        sig.payload != m->voucher.payload) {
                        evidence = sig;
                        break;
                    }
                }
                const Secret* leaked = matching_secret(obs.self.knowledge, view.swap_hashlock);
                if (evidence || leaked) {
                    contests.push_back(txb::contest_leader(
                        me, side.chain, view.id, m->seq, evidence,
                        leaked ? std::optional<Secret>(*leaked) : std::nullopt));
                }
            }

            // Relay a lone mutation to the other contract.
            if (side.other && side.other->terminal == Terminal::None) {
                MutSwapContract oview = expiry_view(*side.other, exec, w.params);
                bool is_ab = oview.side == SwapSide::LeaderEscrow;
                bool position_held = (is_ab ? oview.sender : oview.receiver) == oview.leader;
                bool deadline_ok = oview.timeout >= exec + (is_ab ? 7 : 6) * kDelta;
                auto matches = [&](const std::optional<LeaderMutation>& rec) {
                    return rec && rec->voucher.payload == m->voucher.payload;
                };
                bool already = matches(oview.leader_mut) || matches(oview.staged_leader_mut);
                bool admissible =
                    (m->seq == oview.counter && !oview.leader_mut) ||
                    (m->seq == oview.counter + 1 && oview.leader_mut &&
                     exec > oview.leader_mut->start_time + w.params.next_seq_after &&
                     !oview.staged_leader_mut);
                if (position_held && deadline_ok && !already && admissible &&
                    obs.self.knowledge.knows(m->voucher)) {
                    out.push_back(txb::mutate_lock_leader(me, side.other_chain, oview.id,
                                                          m->voucher));
                }
            }

            // Altruistic speed-up: approve once both contracts carry the same
            // change.
            if (altruistic && m->mutator == MutatorRole::Leader && !m->approved &&
                exec - m->start_time <= w.params.contest_window && side.other) {
                MutSwapContract oview = expiry_view(*side.other, exec, w.params);
                auto consistent_rec = [&](const std::optional<LeaderMutation>& rec) {
                    return rec && consistent(rec->voucher, m->voucher);
                };
                if (consistent_rec(oview.leader_mut) || consistent_rec(oview.staged_leader_mut)) {
                    bool contesting = false;
                    for (const auto& tx : contests)
                        if (tx.target == view.id) contesting = true;
                    if (!contesting)
                        out.push_back(txb::approve_leader(me, side.chain, view.id));
                }
            }
        }

        // Finalize a half-done replacement with the revealed secret.
        if (view.leader_mut) {
            const Secret* s = matching_secret(obs.self.knowledge, view.leader_mut->replace_hashlock);
            if (s && exec - view.leader_mut->start_time <= w.params.follower_replace_end)
                out.push_back(txb::replace_leader(me, side.chain, view.id, *s));
        }
    }
    for (auto& tx : contests) out.push_back(std::move(tx));

    // Follower-position transfer: escrow seen, swap secret still private.
    if (d.follower && db_well_formed(w)) {
        const FollowerDeal& fd = *d.follower;
        bool a1_revealed = matching_secret(obs.self.knowledge, d.swap_lock_a1) != nullptr;
        if (!a1_revealed) {
            MutationPayload pl = MutationPayload::follower(fd.replace_lock, fd.buyer_address);
            auto want_mutate = [&](const MutSwapContract* c, bool is_ab) {
                if (!c || c->terminal != Terminal::None) return false;
                MutSwapContract view = expiry_view(*c, exec, w.params);
                if ((is_ab ? view.receiver : view.sender) != view.follower) return false;
                if (view.follower_mut) return false;
                return view.timeout >= exec + (is_ab ? 3 : 2) * kDelta;
            };
            if (want_mutate(ab, true))
                out.push_back(txb::mutate_lock_follower(me, d.chain_ab, d.ab_id,
                                                        sign(me, pl, w.now), false));
            if (want_mutate(ba, false))
                out.push_back(txb::mutate_lock_follower(me, d.chain_ba, d.ba_id,
                                                        sign(me, pl, w.now), true));
        }
        duty_claim_htlc(obs, fd.db_id, out);
    }

    duty_claim_incoming_swaps(obs, out, &out);
    duty_refund_swap(obs, d.ba_id, out);
    return out;
}

// --- Buyers -----------------------------------------------------------------

enum class CarolMode { Conforming, Griefing, ReplaceOneContractOnly };

inline std::vector<Transaction> carol_emit(const Observation& obs, CarolMode mode) {
    const WorldState& w = obs.world;
    const DealSheet& d = w.deal;
    const Address me = obs.self.id.address;
    const BuyerDeal* b = d.buyer_by_address(me);
    if (!b) return {};
    Round exec = w.now + 1;
    std::vector<Transaction> out;

    // Tentative payment to the seller.
    if (w.now == b->agreement_round && !w.find_htlc(b->ca_id)) {
        out.push_back(txb::deploy_htlc(me, d.chain_pay, b->ca_id, d.kind_pay, b->amount, me,
                                       d.alice, b->replace_lock, b->ca_timeout));
    }

    if (mode != CarolMode::Griefing && !obs.self.strategy.params.give_up) {
        MutationPayload expect =
            MutationPayload::leader(b->replace_lock, b->swap_lock, me, b->seq);
        auto ready = [&](const std::string& id) {
            const auto* c = w.find_swap(id);
            if (!c || c->terminal != Terminal::None) return false;
            MutSwapContract view = expiry_view(*c, exec, w.params);
            if (!view.leader_mut || view.leader_mut->voucher.payload != expect) return false;
            const LeaderMutation& m = *view.leader_mut;
            bool no_more_contest = m.mutator == MutatorRole::Follower || m.approved ||
                                   w.now >= m.start_time + w.params.contest_window;
            if (!no_more_contest) return false;
            Round age = exec - m.start_time;
            bool skip_contest = m.mutator == MutatorRole::Follower || m.approved;
            if (!(age > (skip_contest ? 0 : w.params.contest_window) &&
                  age <= w.params.candidate_replace_end))
                return false;
            // Give up when the seller could no longer collect the payment.
            if (exec + kDelta > b->ca_timeout) return false;
            return true;
        };
        if (ready(d.ab_id) && ready(d.ba_id)) {
            const Secret* c1 = obs.self.secret("replace");
            if (c1) {
                if (mode != CarolMode::ReplaceOneContractOnly)
                    out.push_back(txb::replace_leader(me, d.chain_ab, d.ab_id, *c1));
                out.push_back(txb::replace_leader(me, d.chain_ba, d.ba_id, *c1));
            }
        }
    }

    // Exercise the acquired option when scripted.
    const auto& sp = obs.self.strategy.params;
    if (sp.exercise_submit_round && w.now >= *sp.exercise_submit_round) {
        const auto* ba = w.find_swap(d.ba_id);
        if (ba && ba->terminal == Terminal::None) {
            MutSwapContract view = expiry_view(*ba, exec, w.params);
            const Secret* s = matching_secret(obs.self.knowledge, view.swap_hashlock);
            if (view.receiver == me && s && exec <= view.timeout && !detail::asset_locked(view))
                out.push_back(txb::claim(me, d.chain_ba, d.ba_id, *s));
        }
    }

    duty_refund_htlc(obs, b->ca_id, out);
    if (sp.refund_at_expiry) duty_refund_swap(obs, d.ab_id, out);
    return out;
}

inline std::vector<Transaction> david_emit(const Observation& obs) {
    const WorldState& w = obs.world;
    const DealSheet& d = w.deal;
    if (!d.follower) return {};
    const FollowerDeal& fd = *d.follower;
    const Address me = obs.self.id.address;
    Round exec = w.now + 1;
    std::vector<Transaction> out;

    if (w.now == fd.start_follower && !w.find_htlc(fd.db_id)) {
        out.push_back(txb::deploy_htlc(me, d.chain_pay, fd.db_id, d.kind_pay, fd.amount, me,
                                       d.bob, fd.replace_lock, fd.db_timeout));
    }

    // Replace the follower on both contracts once both mutations are in.
    auto ready = [&](const std::string& id) {
        const auto* c = w.find_swap(id);
        if (!c || c->terminal != Terminal::None) return false;
        MutSwapContract view = expiry_view(*c, exec, w.params);
        if (!view.follower_mut) return false;
        const FollowerMutation& m = *view.follower_mut;
        if (m.candidate != me || m.replace_hashlock != fd.replace_lock) return false;
        Round age = exec - m.start_time;
        return age > 0 && age <= w.params.follower_revert_after;
    };
    if (ready(d.ab_id) && ready(d.ba_id)) {
        if (const Secret* d1 = obs.self.secret("replace")) {
            out.push_back(txb::replace_follower(me, d.chain_ab, d.ab_id, *d1));
            out.push_back(txb::replace_follower(me, d.chain_ba, d.ba_id, *d1));
        }
    }

    duty_claim_incoming_swaps(obs, out);
    duty_refund_swap(obs, d.ba_id, out);
    duty_refund_htlc(obs, fd.db_id, out);
    return out;
}

inline std::vector<Transaction> conforming_by_role(const Observation& obs) {
    const DealSheet& d = obs.world.deal;
    const Address& me = obs.self.id.address;
    if (me == d.alice) return alice_emit(obs, AliceMode::Conforming);
    if (me == d.bob) return bob_emit(obs, false);
    if (d.buyer_by_address(me)) return carol_emit(obs, CarolMode::Conforming);
    if (d.follower && d.follower->buyer_address == me) return david_emit(obs);
    return {};
}

}  // namespace detail_strategy

inline std::vector<Transaction> strategy_emit(const WorldState& w, const PartyState& p) {
    using namespace detail_strategy;
    namespace sk = strategy_kind;
    Observation obs{w, p};
    const std::string& kind = p.strategy.kind;

    if (kind == sk::explored) return {};
    if (kind == sk::silent) {
        if (w.now < p.strategy.params.silent_from) return conforming_by_role(obs);
        return {};
    }
    if (kind == sk::conforming_alice) return alice_emit(obs, AliceMode::Conforming);
    if (kind == sk::inconsistent_hashlocks) return alice_emit(obs, AliceMode::InconsistentHashlocks);
    if (kind == sk::mutate_one_contract_only)
        return alice_emit(obs, AliceMode::MutateOneContractOnly);
    if (kind == sk::claim_ba_then_mutate_ab) return alice_emit(obs, AliceMode::ClaimBaThenMutateAb);
    if (kind == sk::staggered_mutations) return alice_emit(obs, AliceMode::Staggered);
    if (kind == sk::duplicate_seq) return alice_emit(obs, AliceMode::DuplicateSeq);
    if (kind == sk::conforming_bob) return bob_emit(obs, false);
    if (kind == sk::altruistic_bob) return bob_emit(obs, true);
    if (kind == sk::conforming_carol) return carol_emit(obs, CarolMode::Conforming);
    if (kind == sk::griefing_carol) return carol_emit(obs, CarolMode::Griefing);
    if (kind == sk::replace_one_contract_only)
        return carol_emit(obs, CarolMode::ReplaceOneContractOnly);
    if (kind == sk::conforming_david) return david_emit(obs);
    throw ConfigError("unknown strategy kind: " + kind);
}

}  // namespace mutswap
