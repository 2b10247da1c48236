#include "ore/protocols.hpp"

#include <algorithm>

#include "ore/errors.hpp"
#include "ore/exact_division.hpp"
#include "ore/weak_keys.hpp"

namespace ore {

namespace {

constexpr unsigned kMaxDraws = 100;

void require_noncommuting(const OrePolynomial& a, const OrePolynomial& L, const char* what) {
  if (commutes(a, L)) throw DomainError(std::string(what) + " commutes with L");
}

// Draws until pred holds; ResampleExhausted after kMaxDraws attempts.
template <class Draw, class Pred>
auto draw_until(Draw draw, Pred pred, const char* what) {
  for (unsigned i = 0; i < kMaxDraws; ++i) {
    auto v = draw();
    if (pred(v)) return v;
  }
  throw ResampleExhausted(std::string("no acceptable ") + what + " after " + std::to_string(kMaxDraws) + " draws");
}

std::pair<ConstantPolynomial, OrePolynomial> screened_side(const OrePolynomial& gen, const OrePolynomial& L,
                                                           std::size_t nu, Rng& rng) {
  return draw_until([&] { return sample_private(gen, L, nu, rng); },
                    [&](const auto& s) { return screen_private_key(s.second, L) == ScreenVerdict::Accept; },
                    "private key");
}

}  // namespace

// ------------------------------------------------------------ parameters

PublicParameters PublicParameters::generate(const RingPtr& ring, const Shape& shape, Rng& rng) {
  OrePolynomial L = random_polynomial(ring, shape.d_L, shape.l_terms, rng);
  auto gen = [&] {
    return draw_until([&] { return random_polynomial(ring, shape.d_PQ, shape.pq_terms, rng); },
                      [&](const OrePolynomial& g) { return !commutes(g, L); }, "generator");
  };
  OrePolynomial P = gen();
  OrePolynomial Q = gen();
  return PublicParameters{ring, std::move(L), std::move(P), std::move(Q), shape.nu};
}

PublicParameters PublicParameters::from(OrePolynomial L, OrePolynomial P, OrePolynomial Q, std::size_t nu) {
  if (!same_ring(*L.ring(), *P.ring()) || !same_ring(*L.ring(), *Q.ring()))
    throw StructuralError("public parameters from different rings");
  if (nu < 1) throw DomainError("nu must be at least 1");
  require_noncommuting(P, L, "P");
  require_noncommuting(Q, L, "Q");
  RingPtr ring = L.ring();
  return PublicParameters{std::move(ring), std::move(L), std::move(P), std::move(Q), nu};
}

PrivateTuple PrivateTuple::sample(const PublicParameters& params, Rng& rng) {
  auto [f, fp] = screened_side(params.P, params.L, params.nu, rng);
  auto [g, gq] = screened_side(params.Q, params.L, params.nu, rng);
  return PrivateTuple{std::move(f), std::move(g), std::move(fp), std::move(gq)};
}

PrivateTuple PrivateTuple::from(const PublicParameters& params, ConstantPolynomial f, ConstantPolynomial g) {
  OrePolynomial fp = evaluate_at(f, params.P);
  OrePolynomial gq = evaluate_at(g, params.Q);
  for (const auto* side : {&fp, &gq}) {
    const ScreenVerdict v = screen_private_key(*side, params.L);
    if (v != ScreenVerdict::Accept) throw DomainError("private key rejected: " + to_string(v));
  }
  return PrivateTuple{std::move(f), std::move(g), std::move(fp), std::move(gq)};
}

void ProtocolTranscript::append(std::string sender, std::string label, OrePolynomial value) {
  entries_.push_back(TranscriptEntry{std::move(sender), std::move(label), std::move(value)});
}

// ---------------------------------------------------------- key exchange

OrePolynomial kex_message(const PublicParameters& params, const PrivateTuple& priv) {
  return priv.P_side * params.L * priv.Q_side;
}

OrePolynomial kex_finalize(const PublicParameters&, const PrivateTuple& priv, const OrePolynomial& other) {
  if (other.is_zero()) throw DomainError("empty key exchange message");
  return priv.P_side * other * priv.Q_side;
}

KexSession run_key_exchange(const PublicParameters& params, Rng& rng) {
  Rng alice_rng = rng.fork();
  Rng bob_rng = rng.fork();
  PrivateTuple alice = PrivateTuple::sample(params, alice_rng);
  PrivateTuple bob = PrivateTuple::sample(params, bob_rng);
  ProtocolTranscript transcript("exchange");
  OrePolynomial a_part = kex_message(params, alice);
  OrePolynomial b_part = kex_message(params, bob);
  transcript.append("alice", "A_part", a_part);
  transcript.append("bob", "B_part", b_part);
  OrePolynomial key_alice = kex_finalize(params, alice, b_part);
  OrePolynomial key_bob = kex_finalize(params, bob, a_part);
  return KexSession{std::move(alice), std::move(bob), std::move(key_alice), std::move(key_bob), std::move(transcript)};
}

// ------------------------------------------------------------ three-pass

ThreePassResult three_pass(const PublicParameters& params, Rng& rng) {
  require_noncommuting(params.P, params.L, "P");
  require_noncommuting(params.Q, params.L, "Q");
  Rng alice_rng = rng.fork();
  Rng bob_rng = rng.fork();
  ProtocolTranscript transcript("three-pass");

  PrivateTuple alice = PrivateTuple::sample(params, alice_rng);
  OrePolynomial first = alice.P_side * params.L * alice.Q_side;
  transcript.append("alice", "P_A*L*Q_A", first);

  PrivateTuple bob = PrivateTuple::sample(params, bob_rng);
  OrePolynomial p_int = bob.P_side * first * bob.Q_side;
  transcript.append("bob", "P_int", p_int);

  OrePolynomial third = right_cofactor(left_cofactor(p_int, alice.Q_side), alice.P_side);
  transcript.append("alice", "P_B*L*Q_B", third);

  OrePolynomial recovered = right_cofactor(left_cofactor(third, bob.Q_side), bob.P_side);
  return ThreePassResult{std::move(recovered), std::move(alice), std::move(bob), std::move(transcript)};
}

// ------------------------------------------------------------ encryption

EncryptionKeys elg_keygen(const PublicParameters& params, Rng& rng) {
  PrivateTuple alice = PrivateTuple::sample(params, rng);
  OrePolynomial p_alice = alice.P_side * params.L * alice.Q_side;
  return EncryptionKeys{std::move(alice), std::move(p_alice)};
}

Ciphertext elg_encrypt(const PublicParameters& params, const OrePolynomial& P_alice, const OrePolynomial& m, Rng& rng,
                       OrePolynomial* p_final) {
  if (m.is_zero()) throw DomainError("cannot encrypt the zero polynomial");
  PrivateTuple bob = draw_until([&] { return PrivateTuple::sample(params, rng); },
                                [](const PrivateTuple& t) { return !commutes(t.P_side, t.Q_side); }, "sender tuple");
  OrePolynomial final_key = bob.P_side * P_alice * bob.Q_side;
  Ciphertext ct{m * final_key, bob.P_side * params.L * bob.Q_side};
  if (p_final) *p_final = std::move(final_key);
  return ct;
}

OrePolynomial elg_final_key(const PrivateTuple& alice, const OrePolynomial& P_bob) {
  return alice.P_side * P_bob * alice.Q_side;
}

OrePolynomial elg_decrypt(const PrivateTuple& alice, const Ciphertext& ct) {
  return left_cofactor(ct.m_e, elg_final_key(alice, ct.P_bob));
}

// ------------------------------------------------------------ signatures

namespace {

bool pairwise_noncommuting(std::initializer_list<const OrePolynomial*> xs) {
  for (auto i = xs.begin(); i != xs.end(); ++i)
    for (auto j = i + 1; j != xs.end(); ++j)
      if (commutes(**i, **j)) return false;
  return true;
}

std::pair<OrePolynomial, OrePolynomial> noncommuting_pair(const OrePolynomial& L, const SignatureShape& shape,
                                                          Rng& rng) {
  const RingPtr& ring = L.ring();
  return draw_until(
      [&] {
        OrePolynomial a = random_polynomial(ring, shape.key_degree, shape.terms, rng);
        OrePolynomial b = random_polynomial(ring, shape.key_degree, shape.terms, rng);
        return std::make_pair(std::move(a), std::move(b));
      },
      [&](const auto& ab) { return pairwise_noncommuting({&L, &ab.first, &ab.second}); }, "key pair");
}

SignatureTuple sign_with(const SigningKey& key, const OrePolynomial& L, const OrePolynomial& m, OrePolynomial q1,
                         OrePolynomial q2, const SigningWitness& w) {
  OrePolynomial gamma = w.k1 * L * w.k2;
  OrePolynomial eps1 = w.k1 * L * key.a2;
  OrePolynomial eps2 = key.a1 * L * w.k2;
  OrePolynomial r1 = m - gamma * key.a1 - q1 * w.k1;
  OrePolynomial r2 = m - key.a2 * gamma - w.k2 * q2;
  return SignatureTuple{m, std::move(gamma), std::move(q1), std::move(r1), std::move(q2), std::move(r2),
                        std::move(eps1), std::move(eps2)};
}

}  // namespace

SigningKey sig_keygen(const OrePolynomial& L, const SignatureShape& shape, Rng& rng) {
  auto [a1, a2] = noncommuting_pair(L, shape, rng);
  return SigningKey{std::move(a1), std::move(a2)};
}

VerifyingKey sig_public(const SigningKey& key, const OrePolynomial& L) { return VerifyingKey{L, key.a1 * L * key.a2}; }

SignatureTuple elg_sign(const SigningKey& key, const OrePolynomial& L, const OrePolynomial& m,
                        const SignatureShape& shape, Rng& rng, SigningWitness* witness) {
  auto [k1, k2] = noncommuting_pair(L, shape, rng);
  SigningWitness w{std::move(k1), std::move(k2)};
  OrePolynomial q1 = random_polynomial(L.ring(), shape.q_degree, shape.terms, rng);
  OrePolynomial q2 = random_polynomial(L.ring(), shape.q_degree, shape.terms, rng);
  SignatureTuple sig = sign_with(key, L, m, std::move(q1), std::move(q2), w);
  if (witness) *witness = std::move(w);
  return sig;
}

SignatureTuple elg_sign_degenerate(const SigningKey& key, const OrePolynomial& L, const OrePolynomial& m,
                                   const SignatureShape& shape, Rng& rng) {
  auto [k1, k2] = noncommuting_pair(L, shape, rng);
  const OrePolynomial zero(L.ring());
  return sign_with(key, L, m, zero, zero, SigningWitness{std::move(k1), std::move(k2)});
}

OrePolynomial sig_left(const VerifyingKey& pub, const SignatureTuple& s) { return (s.m - s.r1) * pub.L * (s.m - s.r2); }

OrePolynomial sig_right(const VerifyingKey& pub, const SignatureTuple& s) {
  return s.q1 * s.gamma * s.q2 + s.q1 * s.eps1 * s.gamma + s.gamma * s.eps2 * s.q2 + s.gamma * pub.P_alice * s.gamma;
}

bool elg_verify(const VerifyingKey& pub, const SignatureTuple& sig) {
  for (const auto* v : {&sig.m, &sig.gamma, &sig.q1, &sig.r1, &sig.q2, &sig.r2, &sig.eps1, &sig.eps2})
    if (!same_ring(*v->ring(), *pub.L.ring())) return false;
  return sig_left(pub, sig) == sig_right(pub, sig);
}

OrePolynomial sig_expansion(const SigningKey& key, const OrePolynomial& L, const SignatureTuple& sig,
                            const SigningWitness& w) {
  const OrePolynomial left[] = {sig.q1 * w.k1, sig.gamma * key.a1};
  const OrePolynomial right[] = {w.k2 * sig.q2, key.a2 * sig.gamma};
  OrePolynomial sum(L.ring());
  for (const auto& a : left)
    for (const auto& b : right) sum = sum + a * L * b;
  return sum;
}

// ------------------------------------------------------------------- ZKP

namespace {

bool dominates_strictly(const DegreeProfile& big, const DegreeProfile& small) {
  if (big.zero || small.zero || big.per_variable.size() != small.per_variable.size()) return false;
  bool strict = false;
  for (std::size_t i = 0; i < big.per_variable.size(); ++i) {
    if (big.per_variable[i] < small.per_variable[i]) return false;
    if (big.per_variable[i] > small.per_variable[i]) strict = true;
  }
  return strict;
}

bool same_degrees(const OrePolynomial& p, const DegreeProfile& announced) {
  const DegreeProfile d = p.degree_profile();
  return !d.zero && !announced.zero && d.per_variable == announced.per_variable;
}

bool nontrivial(const OrePolynomial& l) {
  const DegreeProfile d = l.degree_profile();
  return !d.zero && std::any_of(d.per_variable.begin(), d.per_variable.end(), [](std::uint32_t v) { return v >= 1; });
}

}  // namespace

HonestProver::HonestProver(OrePolynomial l1, OrePolynomial l2, std::optional<unsigned> p_degree, std::size_t p_terms)
    : l1_(std::move(l1)), l2_(std::move(l2)), L_(l1_ * l2_), p_terms_(p_terms) {
  if (!nontrivial(l1_) || !nontrivial(l2_)) throw DomainError("factors must have positive degree in some d_i");
  p_degree_ = p_degree.value_or(L_.total_degree());
}

Commitment HonestProver::commit(Rng& rng) {
  const RingPtr& ring = L_.ring();
  auto fresh = [&] {
    return draw_until([&] { return random_polynomial(ring, p_degree_, p_terms_, rng); },
                      [&](const OrePolynomial& p) {
                        return std::find(used_.begin(), used_.end(), p.to_string()) == used_.end();
                      },
                      "fresh polynomial");
  };
  p1_ = fresh();
  used_.push_back(p1_->to_string());
  p2_ = fresh();
  used_.push_back(p2_->to_string());
  return Commitment{*p1_ * L_ * *p2_, p1_->degree_profile(), p2_->degree_profile()};
}

Response HonestProver::respond(Challenge c) {
  if (!p1_) throw DomainError("respond called before commit");
  if (c == Challenge::RevealP) return Response{*p1_, *p2_};
  return Response{*p1_ * l1_, l2_ * *p2_};
}

SplitCheater::SplitCheater(OrePolynomial L, unsigned p_degree, std::size_t p_terms)
    : L_(std::move(L)), p_degree_(std::max(p_degree, 2u)), p_terms_(p_terms) {}

Commitment SplitCheater::commit(Rng& rng) {
  const RingPtr& ring = L_.ring();
  const unsigned half = p_degree_ / 2;
  // p1' needs positive d-degree so that an announced profile can sit below it
  p1a_ = draw_until([&] { return random_polynomial(ring, half, p_terms_, rng); }, nontrivial, "split factor");
  p1b_ = random_polynomial(ring, p_degree_ - half, p_terms_, rng);
  p2_ = random_polynomial(ring, p_degree_, p_terms_, rng);
  const bool prepare_pi = rng.coin();
  Commitment com{*p1a_ * *p1b_ * L_ * *p2_, (*p1a_ * *p1b_).degree_profile(), p2_->degree_profile()};
  if (prepare_pi) {
    DegreeProfile shown = p1a_->degree_profile();
    auto it = std::find_if(shown.per_variable.begin(), shown.per_variable.end(), [](std::uint32_t v) { return v > 0; });
    --*it;
    --shown.total;
    com.deg_p1 = shown;
  }
  return com;
}

Response SplitCheater::respond(Challenge c) {
  if (!p1a_) throw DomainError("respond called before commit");
  if (c == Challenge::RevealP) return Response{*p1a_ * *p1b_, *p2_};
  return Response{*p1a_, *p1b_ * L_ * *p2_};
}

ShortcutCheater::ShortcutCheater(OrePolynomial L, unsigned p_degree, std::size_t p_terms)
    : L_(std::move(L)), p_degree_(p_degree), p_terms_(p_terms) {}

Commitment ShortcutCheater::commit(Rng& rng) {
  p1_ = random_polynomial(L_.ring(), p_degree_, p_terms_, rng);
  p2_ = random_polynomial(L_.ring(), p_degree_, p_terms_, rng);
  return Commitment{*p1_ * L_ * *p2_, p1_->degree_profile(), p2_->degree_profile()};
}

Response ShortcutCheater::respond(Challenge c) {
  if (!p1_) throw DomainError("respond called before commit");
  if (c == Challenge::RevealP) return Response{*p1_, *p2_};
  return Response{*p1_, L_ * *p2_};
}

bool zkp_check(const OrePolynomial& L, const Commitment& com, Challenge c, const Response& r) {
  for (const auto* v : {&com.pi, &r.first, &r.second})
    if (!same_ring(*v->ring(), *L.ring()) || v->is_zero()) return false;
  if (c == Challenge::RevealP)
    return r.first * L * r.second == com.pi && same_degrees(r.first, com.deg_p1) && same_degrees(r.second, com.deg_p2);
  return r.first * r.second == com.pi && dominates_strictly(r.first.degree_profile(), com.deg_p1) &&
         dominates_strictly(r.second.degree_profile(), com.deg_p2);
}

ZkpOutcome zkp_run(const OrePolynomial& L, ZkpProver& prover, std::size_t rounds, Rng& prover_rng,
                   Rng& verifier_rng) {
  ZkpOutcome out;
  for (std::size_t i = 0; i < rounds; ++i) {
    Commitment com = prover.commit(prover_rng);
    out.transcript.append("prover", "pi", com.pi);
    const Challenge c = verifier_rng.coin() ? Challenge::RevealPi : Challenge::RevealP;
    Response r = prover.respond(c);
    out.transcript.append("prover", c == Challenge::RevealP ? "p1" : "pi1", r.first);
    out.transcript.append("prover", c == Challenge::RevealP ? "p2" : "pi2", r.second);
    ++out.rounds_run;
    if (!zkp_check(L, com, c, r)) return out;
    ++out.rounds_accepted;
  }
  out.accepted = true;
  return out;
}

}  // namespace ore
