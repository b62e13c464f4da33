#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mutswap/core.hpp"

using namespace mutswap;

namespace {

Secret random_secret(std::mt19937_64& rng, std::size_t len = 32) {
    std::vector<std::uint8_t> bytes(len);
    for (auto& b : bytes) b = std::uint8_t(rng());
    return Secret(std::move(bytes));
}

}  // namespace

TEST_CASE("sha256 matches the published test vectors") {
    // Independent oracle: FIPS 180-4 example digests.
    CHECK(to_hex(sha256("", 0).data(), 32) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    const char* abc = "abc";
    CHECK(to_hex(sha256(abc, 3).data(), 32) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const char* msg = "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";
    CHECK(to_hex(sha256(msg, 56).data(), 32) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // Multi-block input (>64 bytes).
    std::string a(1000, 'a');
    CHECK(to_hex(sha256(a.data(), a.size()).data(), 32) ==
          "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("hash is deterministic and distinct inputs separate") {
    CHECK(hash_secret(Secret{}) == hash_secret(Secret{}));
    std::mt19937_64 rng(7);
    std::set<Hashlock> seen;
    for (int i = 0; i < 200; ++i) {
        Secret s = random_secret(rng);
        Hashlock h = hash_secret(s);
        CHECK(h == hash_secret(s));
        CHECK(seen.insert(h).second);  // no collisions across distinct random secrets
        CHECK(verify_preimage(h, s));
    }
    Secret a = random_secret(rng), b = random_secret(rng);
    CHECK(hash_secret(a) != hash_secret(b));
    CHECK(verify_preimage(hash_secret(a), a));
    CHECK_FALSE(verify_preimage(hash_secret(a), b));
}

TEST_CASE("signatures validate for their signer and expose the payload") {
    Hashlock h1 = hash_secret(Secret::from_string("c1"));
    Hashlock h2 = hash_secret(Secret::from_string("c2"));
    auto payload = MutationPayload::leader(h1, h2, "carol", 7);
    SignedMutation sig = sign("alice", payload, 7);
    CHECK(sig.valid_for("alice"));
    CHECK_FALSE(sig.valid_for("bob"));
    CHECK(sig.payload == payload);
}

TEST_CASE("consistency compares payloads field-wise, nonce excluded") {
    Hashlock h1 = hash_secret(Secret::from_string("c1"));
    Hashlock h2 = hash_secret(Secret::from_string("c2"));
    Hashlock hx = hash_secret(Secret::from_string("x"));
    auto payload = MutationPayload::leader(h1, h2, "carol", 0);

    SECTION("same payload, different nonces") {
        CHECK(consistent(sign("alice", payload, 1), sign("alice", payload, 2)));
    }
    SECTION("different hashlocks are inconsistent") {
        auto other = MutationPayload::leader(h1, hx, "carol", 0);
        CHECK_FALSE(consistent(sign("alice", payload, 1), sign("alice", other, 1)));
    }
    SECTION("different candidate is inconsistent") {
        auto other = MutationPayload::leader(h1, h2, "mallory", 0);
        CHECK_FALSE(consistent(sign("alice", payload, 1), sign("alice", other, 1)));
    }
    SECTION("different signer, equal payload, is inconsistent") {
        CHECK_FALSE(consistent(sign("alice", payload, 1), sign("bob", payload, 1)));
    }
}

TEST_CASE("consistency is an equivalence relation within one signer") {
    std::mt19937_64 rng(11);
    std::vector<SignedMutation> sigs;
    for (int i = 0; i < 40; ++i) {
        Hashlock r = hash_secret(random_secret(rng));
        Hashlock s = hash_secret(random_secret(rng));
        auto payload = MutationPayload::leader(r, s, rng() % 2 ? "carol" : "dave", rng() % 3);
        // Duplicate some payloads under fresh nonces so classes have size > 1.
        sigs.push_back(sign("alice", payload, rng()));
        if (rng() % 2) sigs.push_back(sign("alice", payload, rng()));
    }
    for (const auto& a : sigs) {
        CHECK(consistent(a, a));
        for (const auto& b : sigs) {
            CHECK(consistent(a, b) == consistent(b, a));
            for (const auto& c : sigs) {
                if (consistent(a, b) && consistent(b, c)) CHECK(consistent(a, c));
            }
        }
    }
}

TEST_CASE("knowledge sets grow and answer membership") {
    KnowledgeSet k;
    Secret s = Secret::from_string("secret");
    CHECK_FALSE(k.knows(s));
    k.add(s);
    CHECK(k.knows(s));
    SignedMutation sig = sign("alice", MutationPayload::follower(hash_secret(s), "dave"), 0);
    CHECK_FALSE(k.knows(sig));
    k.add(sig);
    CHECK(k.knows(sig));
}

TEST_CASE("canonical serialization is injective on the cases digests rely on") {
    Canon a;
    a.str("ab");
    a.str("c");
    Canon b;
    b.str("a");
    b.str("bc");
    CHECK(a.digest_hex() != b.digest_hex());

    Canon c;
    c.u64(1);
    Canon d;
    d.str("\x00\x00\x00\x00\x00\x00\x00\x01");
    CHECK(c.digest_hex() != d.digest_hex());
}

TEST_CASE("secret factory is stable per owner and index") {
    SecretFactory sf(42);
    CHECK(sf.make("alice", 0) == sf.make("alice", 0));
    CHECK(sf.make("alice", 0) != sf.make("alice", 1));
    CHECK(sf.make("alice", 0) != sf.make("bob", 0));
    SecretFactory other(43);
    CHECK(sf.make("alice", 0) != other.make("alice", 0));
}
