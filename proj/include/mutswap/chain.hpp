#pragma once
// Per-chain ledger with delta-bounded transaction inclusion. Chains are fully
// isolated: a ledger never reads another ledger's state, and everything a
// round executes was submitted in the previous round.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mutswap/contracts.hpp"
#include "mutswap/core.hpp"

namespace mutswap {

using TxArg = std::variant<std::uint64_t, std::string, Secret, Hashlock, SignedMutation>;

struct Transaction {
    Address submitter;
    std::string chain_id;
    std::string target;  // contract id, or "announce" for the public broadcast
    std::string function;
    std::vector<TxArg> args;

    bool operator==(const Transaction&) const = default;
};

inline void canon_arg(Canon& c, const TxArg& a) {
    c.u64(a.index());
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::uint64_t>) c.u64(v);
            else if constexpr (std::is_same_v<T, std::string>) c.str(v);
            else if constexpr (std::is_same_v<T, Secret>) c.secret(v);
            else if constexpr (std::is_same_v<T, Hashlock>) c.hashlock(v);
            else c.signature(v);
        },
        a);
}

inline void canon_tx(Canon& c, const Transaction& tx) {
    c.str(tx.submitter);
    c.str(tx.chain_id);
    c.str(tx.target);
    c.str(tx.function);
    c.u64(tx.args.size());
    for (const auto& a : tx.args) canon_arg(c, a);
}

inline std::string args_digest(const Transaction& tx) {
    Canon c;
    c.u64(tx.args.size());
    for (const auto& a : tx.args) canon_arg(c, a);
    return c.digest_hex();
}

struct TxResult {
    bool accepted = false;
    std::string reason;
    std::string state_delta;
    std::vector<Secret> revealed;
    std::map<std::string, std::string> info;
};

struct ExecutedTx {
    Transaction tx;
    Round submit_round = 0;
    Round exec_round = 0;
    TxResult result;
    std::string chain_digest;  // canonical chain state digest after this tx
};

class ChainLedger {
public:
    ChainLedger() = default;
    explicit ChainLedger(std::string id) : chain_id_(std::move(id)) {}

    const std::string& id() const { return chain_id_; }

    void credit(const Address& who, const AssetKind& kind, std::uint64_t amount) {
        balances_[who][kind] += amount;
    }

    std::uint64_t balance_of(const Address& who, const AssetKind& kind) const {
        auto it = balances_.find(who);
        if (it == balances_.end()) return 0;
        auto jt = it->second.find(kind);
        return jt == it->second.end() ? 0 : jt->second;
    }

    const MutSwapContract* find_swap(const std::string& id) const {
        auto it = swaps_.find(id);
        return it == swaps_.end() ? nullptr : &it->second;
    }
    const HtlcContract* find_htlc(const std::string& id) const {
        auto it = htlcs_.find(id);
        return it == htlcs_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, MutSwapContract>& swaps() const { return swaps_; }
    const std::map<std::string, HtlcContract>& htlcs() const { return htlcs_; }
    const std::map<Address, std::map<AssetKind, std::uint64_t>>& balances() const {
        return balances_;
    }
    std::size_t pending_count() const { return pending_.size(); }

    void submit(Transaction tx, Round now, std::uint64_t submission_seq) {
        pending_.push_back(Pending{std::move(tx), now, submission_seq});
    }

    // Executes every transaction that became due, in submission order unless
    // an explicit permutation of the due set is supplied.
    std::vector<ExecutedTx> execute_round(Round now, const ProtocolParams& params,
                                          const std::vector<std::size_t>* perm = nullptr) {
        std::vector<Pending> due;
        due.swap(pending_);
        std::vector<std::size_t> order(due.size());
        for (std::size_t i = 0; i < due.size(); ++i) order[i] = i;
        if (perm != nullptr) {
            if (!valid_permutation(*perm, due.size()))
                throw ConfigError("malformed permutation for chain " + chain_id_ + " at round " +
                                  std::to_string(now));
            order = *perm;
        }
        std::vector<ExecutedTx> out;
        out.reserve(due.size());
        for (std::size_t idx : order) {
            Pending& p = due[idx];
            ExecutedTx rec;
            rec.tx = std::move(p.tx);
            rec.submit_round = p.submit_round;
            rec.exec_round = now;
            rec.result = apply(rec.tx, now, params);
            rec.chain_digest = digest_hex();
            out.push_back(std::move(rec));
        }
        return out;
    }

    // Sum of balances plus open escrows, per asset kind. Constant for the
    // whole run on a conserving ledger.
    std::map<AssetKind, std::uint64_t> asset_totals() const {
        std::map<AssetKind, std::uint64_t> totals;
        for (const auto& [who, by_kind] : balances_) {
            (void)who;
            for (const auto& [kind, q] : by_kind) totals[kind] += q;
        }
        for (const auto& [id, c] : htlcs_) {
            (void)id;
            if (c.terminal == Terminal::None) totals[c.asset.kind] += c.asset.quantity;
        }
        for (const auto& [id, c] : swaps_) {
            (void)id;
            if (c.terminal == Terminal::None) totals[c.asset.kind] += c.asset.quantity;
        }
        return totals;
    }

    void canon(Canon& c) const {
        c.str(chain_id_);
        c.u64(balances_.size());
        for (const auto& [who, by_kind] : balances_) {
            c.str(who);
            c.u64(by_kind.size());
            for (const auto& [kind, q] : by_kind) {
                c.str(kind);
                c.u64(q);
            }
        }
        c.u64(htlcs_.size());
        for (const auto& [id, contract] : htlcs_) {
            (void)id;
            canon_contract(c, contract);
        }
        c.u64(swaps_.size());
        for (const auto& [id, contract] : swaps_) {
            (void)id;
            canon_contract(c, contract);
        }
        c.u64(pending_.size());
        for (const auto& p : pending_) {
            canon_tx(c, p.tx);
            c.u64(p.submit_round);
            c.u64(p.submission_seq);
        }
    }

    std::string digest_hex() const {
        Canon c;
        canon(c);
        return c.digest_hex();
    }

private:
    struct Pending {
        Transaction tx;
        Round submit_round = 0;
        std::uint64_t submission_seq = 0;
    };

    static bool valid_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
        if (perm.size() != n) return false;
        std::vector<bool> seen(n, false);
        for (std::size_t i : perm) {
            if (i >= n || seen[i]) return false;
            seen[i] = true;
        }
        return true;
    }

    template <typename T>
    static const T* arg_as(const std::vector<TxArg>& args, std::size_t i) {
        if (i >= args.size()) return nullptr;
        return std::get_if<T>(&args[i]);
    }

    TxResult apply(const Transaction& tx, Round now, const ProtocolParams& params) {
        if (tx.function == "announce") {
            // Public broadcast: no ledger effect beyond making the arguments
            // visible to everyone (the scheduler publishes executed args).
            TxResult r;
            r.accepted = true;
            r.state_delta = "announced";
            return r;
        }
        if (tx.function == "deployMutSwap") return deploy_mutswap(tx, now);
        if (tx.function == "deployHtlc") return deploy_htlc(tx, now);

        if (auto it = swaps_.find(tx.target); it != swaps_.end())
            return apply_swap(it->second, tx, now, params);
        if (auto it = htlcs_.find(tx.target); it != htlcs_.end())
            return apply_htlc(it->second, tx, now);
        TxResult r;
        r.reason = "no such contract";
        return r;
    }

    TxResult deploy_mutswap(const Transaction& tx, Round now) {
        (void)now;
        auto fail = [](std::string why) {
            TxResult r;
            r.reason = std::move(why);
            return r;
        };
        if (swaps_.count(tx.target) || htlcs_.count(tx.target)) return fail("id exists");
        const auto* kind = arg_as<std::string>(tx.args, 0);
        const auto* quantity = arg_as<std::uint64_t>(tx.args, 1);
        const auto* sender = arg_as<std::string>(tx.args, 2);
        const auto* receiver = arg_as<std::string>(tx.args, 3);
        const auto* leader = arg_as<std::string>(tx.args, 4);
        const auto* follower = arg_as<std::string>(tx.args, 5);
        const auto* start = arg_as<std::uint64_t>(tx.args, 6);
        const auto* dT = arg_as<std::uint64_t>(tx.args, 7);
        const auto* lock = arg_as<Hashlock>(tx.args, 8);
        if (!kind || !quantity || !sender || !receiver || !leader || !follower || !start || !dT ||
            !lock)
            return fail("malformed args");
        if (tx.submitter != *sender) return fail("not sender");
        if (*leader == *follower) return fail("leader equals follower");
        bool leader_escrow = *sender == *leader && *receiver == *follower;
        bool follower_escrow = *sender == *follower && *receiver == *leader;
        if (!leader_escrow && !follower_escrow) return fail("role mismatch");
        if (*dT < 4) return fail("dT below minimum");
        if (balance_of(*sender, *kind) < *quantity) return fail("insufficient balance");

        MutSwapContract c;
        c.id = tx.target;
        c.side = leader_escrow ? SwapSide::LeaderEscrow : SwapSide::FollowerEscrow;
        c.asset = AssetAmount{*kind, *quantity};
        c.sender = *sender;
        c.receiver = *receiver;
        c.leader = *leader;
        c.follower = *follower;
        c.swap_hashlock = *lock;
        c.timeout = *start + (*dT + (leader_escrow ? 1 : 0)) * kDelta;
        balances_[*sender][*kind] -= *quantity;
        swaps_.emplace(c.id, c);

        TxResult r;
        r.accepted = true;
        r.state_delta = "escrowed " + std::to_string(*quantity) + " " + *kind + ", timeout " +
                        std::to_string(c.timeout);
        r.info["timeout"] = std::to_string(c.timeout);
        return r;
    }

    TxResult deploy_htlc(const Transaction& tx, Round now) {
        (void)now;
        auto fail = [](std::string why) {
            TxResult r;
            r.reason = std::move(why);
            return r;
        };
        if (swaps_.count(tx.target) || htlcs_.count(tx.target)) return fail("id exists");
        const auto* kind = arg_as<std::string>(tx.args, 0);
        const auto* quantity = arg_as<std::uint64_t>(tx.args, 1);
        const auto* sender = arg_as<std::string>(tx.args, 2);
        const auto* receiver = arg_as<std::string>(tx.args, 3);
        const auto* lock = arg_as<Hashlock>(tx.args, 4);
        const auto* timeout = arg_as<std::uint64_t>(tx.args, 5);
        if (!kind || !quantity || !sender || !receiver || !lock || !timeout)
            return fail("malformed args");
        if (tx.submitter != *sender) return fail("not sender");
        if (balance_of(*sender, *kind) < *quantity) return fail("insufficient balance");

        HtlcContract c;
        c.id = tx.target;
        c.asset = AssetAmount{*kind, *quantity};
        c.sender = *sender;
        c.receiver = *receiver;
        c.swap_hashlock = *lock;
        c.timeout = *timeout;
        balances_[*sender][*kind] -= *quantity;
        htlcs_.emplace(c.id, c);

        TxResult r;
        r.accepted = true;
        r.state_delta = "escrowed " + std::to_string(*quantity) + " " + *kind + ", timeout " +
                        std::to_string(c.timeout);
        return r;
    }

    TxResult apply_htlc(HtlcContract& c, const Transaction& tx, Round now) {
        Outcome<HtlcContract> out{c, TxEffect::reject("no such function")};
        if (tx.function == "claim") {
            const auto* secret = arg_as<Secret>(tx.args, 0);
            if (!secret) return malformed();
            out = htlc_claim(c, now, tx.submitter, *secret);
        } else if (tx.function == "refund") {
            out = htlc_refund(c, now, tx.submitter);
        }
        return commit(c, out);
    }

    TxResult apply_swap(MutSwapContract& c, const Transaction& tx, Round now,
                        const ProtocolParams& params) {
        Outcome<MutSwapContract> out{c, TxEffect::reject("no such function")};
        const auto& f = tx.function;
        if (f == "claim") {
            const auto* secret = arg_as<Secret>(tx.args, 0);
            if (!secret) return malformed();
            out = mutswap_claim(c, now, tx.submitter, *secret, params);
        } else if (f == "refund") {
            out = mutswap_refund(c, now, tx.submitter, params);
        } else if (f == "mutateLockLeader") {
            const auto* sig = arg_as<SignedMutation>(tx.args, 0);
            const auto* cand = arg_as<std::string>(tx.args, 1);
            const auto* replace = arg_as<Hashlock>(tx.args, 2);
            const auto* swap = arg_as<Hashlock>(tx.args, 3);
            const auto* seq = arg_as<std::uint64_t>(tx.args, 4);
            if (!sig || !cand || !replace || !swap || !seq) return malformed();
            out = mutswap_mutate_lock_leader(c, now, tx.submitter, *sig, *cand, *replace, *swap,
                                             *seq, params);
        } else if (f == "contestLeader") {
            const auto* seq = arg_as<std::uint64_t>(tx.args, 0);
            if (!seq) return malformed();
            std::optional<SignedMutation> esig;
            std::optional<Secret> esecret;
            for (std::size_t i = 1; i < tx.args.size(); ++i) {
                if (const auto* s = std::get_if<SignedMutation>(&tx.args[i])) esig = *s;
                if (const auto* s = std::get_if<Secret>(&tx.args[i])) esecret = *s;
            }
            out = mutswap_contest_leader(c, now, tx.submitter, *seq, esig, esecret, params);
        } else if (f == "approveLeader") {
            out = mutswap_approve_leader(c, now, tx.submitter, params);
        } else if (f == "replaceLeader") {
            const auto* secret = arg_as<Secret>(tx.args, 0);
            if (!secret) return malformed();
            out = mutswap_replace_leader(c, now, tx.submitter, *secret, params);
        } else if (f == "mutateLockFollower" || f == "mutateLockFreeFollower") {
            const auto* sig = arg_as<SignedMutation>(tx.args, 0);
            const auto* cand = arg_as<std::string>(tx.args, 1);
            const auto* replace = arg_as<Hashlock>(tx.args, 2);
            if (!sig || !cand || !replace) return malformed();
            out = mutswap_mutate_lock_follower(c, now, tx.submitter, *sig, *cand, *replace,
                                               f == "mutateLockFreeFollower", params);
        } else if (f == "replaceFollower") {
            const auto* secret = arg_as<Secret>(tx.args, 0);
            if (!secret) return malformed();
            out = mutswap_replace_follower(c, now, tx.submitter, *secret, params);
        } else if (f == "revertLeader") {
            out = mutswap_revert_leader(c, now, params);
        } else if (f == "revertFollower") {
            out = mutswap_revert_follower(c, now, params);
        }
        return commit(c, out);
    }

    static TxResult malformed() {
        TxResult r;
        r.reason = "malformed args";
        return r;
    }

    template <typename State>
    TxResult commit(State& slot, Outcome<State>& out) {
        TxResult r;
        r.accepted = out.effect.accepted;
        r.reason = out.effect.reason;
        r.state_delta = out.effect.state_delta;
        r.revealed = out.effect.revealed;
        r.info = out.effect.info;
        if (out.effect.accepted) {
            slot = out.next;
            for (const auto& [who, asset] : out.effect.credits)
                balances_[who][asset.kind] += asset.quantity;
        }
        return r;
    }

    std::string chain_id_;
    std::map<Address, std::map<AssetKind, std::uint64_t>> balances_;
    std::map<std::string, HtlcContract> htlcs_;
    std::map<std::string, MutSwapContract> swaps_;
    std::vector<Pending> pending_;
};

}  // namespace mutswap
