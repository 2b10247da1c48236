#include <doctest.h>

#include "ore/errors.hpp"
#include "ore/exact_division.hpp"
#include "ore/message_codec.hpp"
#include "ore/protocols.hpp"
#include "ore/weak_keys.hpp"

using namespace ore;

namespace {

OrePolynomial P(const RingPtr& r, const char* text) { return OrePolynomial::parse(r, text); }

PublicParameters small_skew(Rng& rng) {
  return PublicParameters::generate(OreRing::parse("f125-skew2"), {12, 3, 3}, rng);
}

PublicParameters weyl_example() {
  auto w = OreRing::parse("weyl3-f71");
  return PublicParameters::from(P(w, "3*x2^2 - 5*d2^2 - x2*d3 - x3 - d2"), P(w, "-5*x3^2 - 2*x1*d3 + 34"),
                                P(w, "x2^2 + x1*x3 - d3^2 + d3"), 2);
}

bool mentions(const ProtocolTranscript& t, const OrePolynomial& h) {
  for (const auto& e : t.entries())
    if (e.value == h) return true;
  return false;
}

}  // namespace

TEST_CASE("public parameters") {
  Rng rng(81);
  auto params = small_skew(rng);
  CHECK(params.L.total_degree() == 12);
  CHECK(params.P.total_degree() == 3);
  CHECK_FALSE(commutes(params.P, params.L));
  CHECK_FALSE(commutes(params.Q, params.L));
  auto s = params.ring;
  CHECK_THROWS_AS(PublicParameters::from(P(s, "1"), P(s, "d1"), P(s, "d2"), 2), DomainError);
  CHECK_THROWS_AS(PublicParameters::from(params.L, params.P, params.Q, 0), DomainError);
}

TEST_CASE("key exchange agreement") {
  Rng rng(82);
  for (int i = 0; i < 10; ++i) {
    auto params = small_skew(rng);
    auto s = run_key_exchange(params, rng);
    REQUIRE(s.key_alice == s.key_bob);
    REQUIRE(s.key_alice == s.alice.P_side * s.bob.P_side * params.L * s.bob.Q_side * s.alice.Q_side);
    REQUIRE(kex_message(params, s.alice) == kex_message(params, s.alice));
    auto msg = kex_message(params, s.alice);
    REQUIRE(msg.degree_profile() ==
            s.alice.P_side.degree_profile() + params.L.degree_profile() + s.alice.Q_side.degree_profile());
    for (const auto* side : {&s.alice.P_side, &s.alice.Q_side, &s.bob.P_side, &s.bob.Q_side}) {
      REQUIRE_FALSE(commutes(*side, params.L));
      REQUIRE_FALSE(mentions(s.transcript, *side));
    }
    REQUIRE(s.transcript.entries().size() == 2);
    // one flipped coefficient in Bob's message breaks agreement
    auto b_part = s.transcript.entries()[1].value;
    const auto& t = b_part.leading_term();
    auto tampered = b_part + OrePolynomial::monomial(params.ring, t.exps, 1);
    REQUIRE(kex_finalize(params, s.alice, tampered) != s.key_bob);
  }
  Rng a(5), b(5);
  auto pa = small_skew(a), pb = small_skew(b);
  CHECK(run_key_exchange(pa, a).key_alice == run_key_exchange(pb, b).key_alice);
}

TEST_CASE("Weyl example session") {
  auto params = weyl_example();
  auto alice = PrivateTuple::from(params, ConstantPolynomial(71, {27, 22, 48}), ConstantPolynomial(71, {52, 5, 58}));
  auto bob = PrivateTuple::from(params, ConstantPolynomial(71, {31, 1, 3}), ConstantPolynomial(71, {11, 4, 24}));
  const auto& p = params.P;
  CHECK(alice.P_side == p * p * P(params.ring, "48") + p * P(params.ring, "22") + P(params.ring, "27"));
  auto a_part = kex_message(params, alice), b_part = kex_message(params, bob);
  CHECK(a_part == alice.P_side * params.L * alice.Q_side);
  auto ka = kex_finalize(params, alice, b_part), kb = kex_finalize(params, bob, a_part);
  CHECK(ka == kb);
  CHECK(ka != params.L);
  // graded keys are refused
  auto graded = PublicParameters::from(params.L, P(params.ring, "x1*d1 + d2*x2"), params.Q, 2);
  CHECK_THROWS_AS(PrivateTuple::from(graded, ConstantPolynomial(71, {1, 1}), ConstantPolynomial(71, {1, 1})),
                  DomainError);
  Rng rng(83);
  auto sampled = PrivateTuple::sample(params, rng);
  CHECK_FALSE(grading_vector(sampled.P_side).has_value());
  CHECK_FALSE(grading_vector(sampled.Q_side).has_value());
}

TEST_CASE("three-pass transport") {
  Rng rng(84);
  for (int i = 0; i < 10; ++i) {
    auto params = small_skew(rng);
    auto r = three_pass(params, rng);
    REQUIRE(r.recovered == params.L);
    const auto& e = r.transcript.entries();
    REQUIRE(e.size() == 3);
    REQUIRE(e[1].value == r.bob.P_side * r.alice.P_side * params.L * r.alice.Q_side * r.bob.Q_side);
    REQUIRE(e[1].value == r.alice.P_side * r.bob.P_side * params.L * r.bob.Q_side * r.alice.Q_side);
    REQUIRE(e[2].value == r.bob.P_side * params.L * r.bob.Q_side);
  }
  auto params = small_skew(rng);
  params.L = P(params.ring, "1");
  CHECK_THROWS_AS(three_pass(params, rng), DomainError);
  auto w = weyl_example();
  CHECK(three_pass(w, rng).recovered == w.L);
}

TEST_CASE("encryption") {
  Rng rng(85);
  auto params = small_skew(rng);
  auto keys = elg_keygen(params, rng);
  MessageCodec codec(params.ring);
  for (int i = 0; i < 20; ++i) {
    Bytes msg(rng.below(40));
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng.below(256));
    auto m = codec.encode(msg);
    OrePolynomial p_final(params.ring);
    auto ct = elg_encrypt(params, keys.P_alice, m, rng, &p_final);
    REQUIRE(p_final == elg_final_key(keys.alice, ct.P_bob));
    REQUIRE(codec.decode(elg_decrypt(keys.alice, ct)) == msg);
  }
  auto one = P(params.ring, "1");
  OrePolynomial p_final(params.ring);
  auto ct = elg_encrypt(params, keys.P_alice, one, rng, &p_final);
  CHECK(ct.m_e == p_final);
  CHECK_THROWS_AS(elg_encrypt(params, keys.P_alice, OrePolynomial(params.ring), rng), DomainError);
  // a corrupted ciphertext does not divide
  auto m = codec.encode(to_bytes("hello"));
  ct = elg_encrypt(params, keys.P_alice, m, rng);
  const auto& t = ct.m_e.terms()[ct.m_e.size() / 2];
  Ciphertext bad{ct.m_e + OrePolynomial::monomial(params.ring, t.exps, 3), ct.P_bob};
  CHECK_THROWS_AS(elg_decrypt(keys.alice, bad), NotDivisible);
}

TEST_CASE("signatures") {
  Rng rng(86);
  auto ring = OreRing::parse("f125-skew2");
  auto L = random_polynomial(ring, 6, kDense, rng);
  SignatureShape shape{2, 2, kDense};
  auto key = sig_keygen(L, shape, rng);
  auto pub = sig_public(key, L);
  CHECK_FALSE(commutes(key.a1, L));
  CHECK_FALSE(commutes(key.a2, L));
  CHECK_FALSE(commutes(key.a1, key.a2));
  MessageCodec codec(ring);
  for (int i = 0; i < 10; ++i) {
    auto m = codec.encode(to_bytes("message " + std::to_string(i)));
    SigningWitness w{OrePolynomial(ring), OrePolynomial(ring)};
    auto sig = elg_sign(key, L, m, shape, rng, &w);
    REQUIRE(elg_verify(pub, sig));
    REQUIRE(sig.gamma == w.k1 * L * w.k2);
    REQUIRE(sig_expansion(key, L, sig, w) == sig_right(pub, sig));
    REQUIRE(sig_expansion(key, L, sig, w) == sig_left(pub, sig));
    auto tampered = sig;
    const auto& t = sig.m.leading_term();
    tampered.m = sig.m + OrePolynomial::monomial(ring, t.exps, 1);
    REQUIRE_FALSE(elg_verify(pub, tampered));
  }
  auto m = codec.encode(to_bytes("degenerate"));
  auto sig = elg_sign_degenerate(key, L, m, shape, rng);
  CHECK(sig.q1.is_zero());
  CHECK(sig.r1 == m - sig.gamma * key.a1);
  CHECK(elg_verify(pub, sig));
  // a different signer's public key rejects
  auto other = sig_public(sig_keygen(L, shape, rng), L);
  CHECK_FALSE(elg_verify(other, sig));
}

TEST_CASE("zero-knowledge proof") {
  Rng rng(87);
  auto ring = OreRing::parse("f125-skew2");
  auto l1 = random_polynomial(ring, 3, kDense, rng), l2 = random_polynomial(ring, 3, kDense, rng);
  auto L = l1 * l2;
  HonestProver honest(l1, l2, 4);
  Rng prover(1), verifier(2);
  auto run = zkp_run(L, honest, kDefaultZkpRounds, prover, verifier);
  CHECK(run.accepted);
  CHECK(run.rounds_accepted == kDefaultZkpRounds);
  CHECK(run.transcript.entries().size() == 3 * kDefaultZkpRounds);

  SplitCheater split(L, 4);
  ShortcutCheater shortcut(L, 4);
  for (ZkpProver* cheat : {static_cast<ZkpProver*>(&split), static_cast<ZkpProver*>(&shortcut)}) {
    std::size_t passed = 0;
    for (int i = 0; i < 100; ++i) {
      Commitment com = cheat->commit(prover);
      const Challenge c = verifier.coin() ? Challenge::RevealPi : Challenge::RevealP;
      if (zkp_check(L, com, c, cheat->respond(c))) ++passed;
    }
    CHECK(passed < 70);
    CHECK(passed > 30);
    CHECK_FALSE(zkp_run(L, *cheat, 20, prover, verifier).accepted);
  }
  // the shortcut answer always fails the strict degree condition
  Commitment com = shortcut.commit(prover);
  CHECK_FALSE(zkp_check(L, com, Challenge::RevealPi, shortcut.respond(Challenge::RevealPi)));
  CHECK(zkp_check(L, com, Challenge::RevealP, shortcut.respond(Challenge::RevealP)));
  // malformed responses
  com = honest.commit(prover);
  CHECK_FALSE(zkp_check(L, com, Challenge::RevealP, Response{OrePolynomial(ring), L}));
  CHECK_THROWS_AS(HonestProver(P(ring, "[0,1,0]"), l2), DomainError);
}
