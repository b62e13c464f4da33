#pragma once
// Identity, time, asset, hashlock, secret and symbolic-signature primitives
// shared by every other component. All values are immutable after
// construction and safe to share across threads.

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutswap {

using Round = std::uint64_t;
using Address = std::string;
using AssetKind = std::string;

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4). Self-contained so the library carries no crypto
// dependency; verified against the published test vectors in the unit suite.

namespace detail {

struct Sha256 {
    std::uint32_t state[8] = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                              0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
    std::uint64_t length_bits = 0;
    std::uint8_t buffer[64];
    std::size_t buffered = 0;

    static constexpr std::uint32_t k[64] = {
        0x428a2f98u, 0x71374491u, 0xb5c0fbcfu, 0xe9b5dba5u, 0x3956c25bu, 0x59f111f1u,
        0x923f82a4u, 0xab1c5ed5u, 0xd807aa98u, 0x12835b01u, 0x243185beu, 0x550c7dc3u,
        0x72be5d74u, 0x80deb1feu, 0x9bdc06a7u, 0xc19bf174u, 0xe49b69c1u, 0xefbe4786u,
        0x0fc19dc6u, 0x240ca1ccu, 0x2de92c6fu, 0x4a7484aau, 0x5cb0a9dcu, 0x76f988dau,
        0x983e5152u, 0xa831c66du, 0xb00327c8u, 0xbf597fc7u, 0xc6e00bf3u, 0xd5a79147u,
        0x06ca6351u, 0x14292967u, 0x27b70a85u, 0x2e1b2138u, 0x4d2c6dfcu, 0x53380d13u,
        0x650a7354u, 0x766a0abbu, 0x81c2c92eu, 0x92722c85u, 0xa2bfe8a1u, 0xa81a664bu,
        0xc24b8b70u, 0xc76c51a3u, 0xd192e819u, 0xd6990624u, 0xf40e3585u, 0x106aa070u,
        0x19a4c116u, 0x1e376c08u, 0x2748774cu, 0x34b0bcb5u, 0x391c0cb3u, 0x4ed8aa4au,
        0x5b9cca4fu, 0x682e6ff3u, 0x748f82eeu, 0x78a5636fu, 0x84c87814u, 0x8cc70208u,
        0x90befffau, 0xa4506cebu, 0xbef9a3f7u, 0xc67178f2u};

    static std::uint32_t rotr(std::uint32_t x, unsigned n) { return (x >> n) | (x << (32 - n)); }

    void compress(const std::uint8_t block[64]) {
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i) {
            w[i] = (std::uint32_t(block[4 * i]) << 24) | (std::uint32_t(block[4 * i + 1]) << 16) |
                   (std::uint32_t(block[4 * i + 2]) << 8) | std::uint32_t(block[4 * i + 3]);
        }
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = state[0], b = state[1], c = state[2], d = state[3];
        std::uint32_t e = state[4], f = state[5], g = state[6], h = state[7];
        for (int i = 0; i < 64; ++i) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = h + s1 + ch + k[i] + w[i];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = s0 + maj;
            h = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        state[0] += a; state[1] += b; state[2] += c; state[3] += d;
        state[4] += e; state[5] += f; state[6] += g; state[7] += h;
    }

    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        length_bits += std::uint64_t(len) * 8;
        while (len > 0) {
            std::size_t take = std::min(len, std::size_t(64) - buffered);
            std::memcpy(buffer + buffered, p, take);
            buffered += take;
            p += take;
            len -= take;
            if (buffered == 64) {
                compress(buffer);
                buffered = 0;
            }
        }
    }

    std::array<std::uint8_t, 32> finish() {
        std::uint64_t bits = length_bits;
        std::uint8_t pad = 0x80;
        update(&pad, 1);
        std::uint8_t zero = 0;
        while (buffered != 56) update(&zero, 1);
        std::uint8_t lenbuf[8];
        for (int i = 0; i < 8; ++i) lenbuf[i] = std::uint8_t(bits >> (56 - 8 * i));
        update(lenbuf, 8);
        std::array<std::uint8_t, 32> out{};
        for (int i = 0; i < 8; ++i) {
            out[4 * i] = std::uint8_t(state[i] >> 24);
            out[4 * i + 1] = std::uint8_t(state[i] >> 16);
            out[4 * i + 2] = std::uint8_t(state[i] >> 8);
            out[4 * i + 3] = std::uint8_t(state[i]);
        }
        return out;
    }
};

}  // namespace detail

inline std::array<std::uint8_t, 32> sha256(const void* data, std::size_t len) {
    detail::Sha256 h;
    h.update(data, len);
    return h.finish();
}

inline std::string to_hex(const std::uint8_t* data, std::size_t len) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Domain value types

struct Secret {
    std::vector<std::uint8_t> bytes;

    Secret() = default;
    explicit Secret(std::vector<std::uint8_t> b) : bytes(std::move(b)) {}
    static Secret from_string(const std::string& s) {
        return Secret(std::vector<std::uint8_t>(s.begin(), s.end()));
    }

    auto operator<=>(const Secret&) const = default;
    std::string hex() const { return to_hex(bytes.data(), bytes.size()); }
};

struct Hashlock {
    std::array<std::uint8_t, 32> digest{};

    auto operator<=>(const Hashlock&) const = default;
    std::string hex() const { return to_hex(digest.data(), digest.size()); }
    std::string short_hex() const { return hex().substr(0, 12); }
};

inline Hashlock hash_secret(const Secret& s) {
    return Hashlock{sha256(s.bytes.data(), s.bytes.size())};
}

inline bool verify_preimage(const Hashlock& lock, const Secret& s) {
    return hash_secret(s) == lock;
}

struct PartyId {
    std::string name;
    Address address;

    auto operator<=>(const PartyId&) const = default;
};

struct AssetAmount {
    AssetKind kind;
    std::uint64_t quantity = 0;

    auto operator<=>(const AssetAmount&) const = default;
};

// Ordered field list of a mutation message. Leader mutations carry all four
// fields; follower mutations carry only the replace hashlock and candidate.
struct MutationPayload {
    Hashlock replace_hashlock;
    std::optional<Hashlock> new_swap_hashlock;
    Address candidate;
    std::optional<std::uint64_t> seq;

    auto operator<=>(const MutationPayload&) const = default;

    static MutationPayload leader(Hashlock replace, Hashlock swap, Address cand, std::uint64_t s) {
        return MutationPayload{replace, swap, std::move(cand), s};
    }
    static MutationPayload follower(Hashlock replace, Address cand) {
        return MutationPayload{replace, std::nullopt, std::move(cand), std::nullopt};
    }
};

// Symbolic signature: unforgeability is enforced by the scheduler's knowledge
// gate, not by cryptography. Two signatures are "consistent" iff they have the
// same signer and field-wise equal payloads; the nonce never participates.
struct SignedMutation {
    Address signer;
    MutationPayload payload;
    std::uint64_t nonce = 0;

    auto operator<=>(const SignedMutation&) const = default;

    bool valid_for(const Address& who) const { return signer == who; }
};

inline SignedMutation sign(const Address& signer, MutationPayload payload, std::uint64_t nonce) {
    return SignedMutation{signer, std::move(payload), nonce};
}

inline bool consistent(const SignedMutation& a, const SignedMutation& b) {
    return a.signer == b.signer && a.payload == b.payload;
}

// Everything a party has seen: own secrets plus whatever appeared on some
// chain. Grows monotonically.
struct KnowledgeSet {
    std::set<Secret> secrets;
    std::set<SignedMutation> signatures;

    bool knows(const Secret& s) const { return secrets.count(s) > 0; }
    bool knows(const SignedMutation& sig) const { return signatures.count(sig) > 0; }
    void add(const Secret& s) { secrets.insert(s); }
    void add(const SignedMutation& sig) { signatures.insert(sig); }

    bool operator==(const KnowledgeSet&) const = default;
};

// ---------------------------------------------------------------------------
// Canonical serialization. Every digest in the system (state digests, args
// digests, dedup keys) goes through this writer so byte-for-byte
// reproducibility holds across runs and replays.

class Canon {
public:
    void u64(std::uint64_t v) {
        tag('u');
        for (int i = 7; i >= 0; --i) buf_.push_back(std::uint8_t(v >> (8 * i)));
    }
    void boolean(bool b) {
        tag('b');
        buf_.push_back(b ? 1 : 0);
    }
    void str(const std::string& s) {
        tag('s');
        raw_len(s.size());
        buf_.insert(buf_.end(), s.begin(), s.end());
    }
    void bytes(const std::uint8_t* data, std::size_t len) {
        tag('y');
        raw_len(len);
        buf_.insert(buf_.end(), data, data + len);
    }
    void secret(const Secret& s) { bytes(s.bytes.data(), s.bytes.size()); }
    void hashlock(const Hashlock& h) { bytes(h.digest.data(), h.digest.size()); }
    void payload(const MutationPayload& p) {
        tag('P');
        hashlock(p.replace_hashlock);
        opt_flag(p.new_swap_hashlock.has_value());
        if (p.new_swap_hashlock) hashlock(*p.new_swap_hashlock);
        str(p.candidate);
        opt_flag(p.seq.has_value());
        if (p.seq) u64(*p.seq);
    }
    void signature(const SignedMutation& sig) {
        tag('S');
        str(sig.signer);
        payload(sig.payload);
        u64(sig.nonce);
    }
    void opt_flag(bool present) { buf_.push_back(present ? 1 : 0); }

    std::array<std::uint8_t, 32> digest() const { return sha256(buf_.data(), buf_.size()); }
    std::string digest_hex() const {
        auto d = digest();
        return to_hex(d.data(), d.size());
    }
    const std::vector<std::uint8_t>& data() const { return buf_; }

private:
    void tag(char c) { buf_.push_back(std::uint8_t(c)); }
    void raw_len(std::size_t n) {
        for (int i = 7; i >= 0; --i) buf_.push_back(std::uint8_t(std::uint64_t(n) >> (8 * i)));
    }
    std::vector<std::uint8_t> buf_;
};

// Deterministic secret material derived from the scenario seed.
class SecretFactory {
public:
    explicit SecretFactory(std::uint64_t seed) : seed_(seed) {}

    // Stable per (owner, index): reseeding keeps secrets independent of the
    // order in which parties are constructed.
    Secret make(const Address& owner, std::uint64_t index) const {
        Canon c;
        c.u64(seed_);
        c.str(owner);
        c.u64(index);
        auto d = c.digest();
        return Secret(std::vector<std::uint8_t>(d.begin(), d.end()));
    }

private:
    std::uint64_t seed_;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mutswap
