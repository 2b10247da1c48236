#pragma once

// Key exchange, three-pass transport, ElGamal-style encryption and
// signatures, and a zero-knowledge proof of knowledge of a factorization,
// all over rings of type Skew/Weyl.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ore/commuting_sets.hpp"
#include "ore/ore_core.hpp"
#include "ore/rng.hpp"

namespace ore {

// Public data of a session: L plus the generators P, Q of the commuting
// pools, and the degree nu of the private polynomials. In the three-pass
// protocol L is the sender's secret.
struct PublicParameters {
  RingPtr ring;
  OrePolynomial L;
  OrePolynomial P;
  OrePolynomial Q;
  std::size_t nu = 0;

  // Shape of freshly generated parameters; term counts of kDense mean every
  // monomial up to the degree.
  struct Shape {
    unsigned d_L = 50;
    unsigned d_PQ = 5;
    std::size_t nu = 10;
    std::size_t l_terms = kDense;
    std::size_t pq_terms = kDense;
  };

  // Draws L, P, Q until neither P nor Q commutes with L.
  static PublicParameters generate(const RingPtr& ring, const Shape& shape, Rng& rng);
  // Validates that P and Q do not commute with L (which also makes L non-central).
  static PublicParameters from(OrePolynomial L, OrePolynomial P, OrePolynomial Q, std::size_t nu);
};

struct PrivateTuple {
  ConstantPolynomial f;
  ConstantPolynomial g;
  OrePolynomial P_side;  // f(P)
  OrePolynomial Q_side;  // g(Q)

  // Resamples until both sides pass screen_private_key against L.
  static PrivateTuple sample(const PublicParameters& params, Rng& rng);
  // Throws DomainError when a side is rejected by screen_private_key.
  static PrivateTuple from(const PublicParameters& params, ConstantPolynomial f, ConstantPolynomial g);
};

struct TranscriptEntry {
  std::string sender;
  std::string label;
  OrePolynomial value;
};

// Append-only record of the values that cross the channel.
class ProtocolTranscript {
 public:
  explicit ProtocolTranscript(std::string tag) : tag_(std::move(tag)) {}
  void append(std::string sender, std::string label, OrePolynomial value);
  const std::string& tag() const { return tag_; }
  const std::vector<TranscriptEntry>& entries() const { return entries_; }

 private:
  std::string tag_;
  std::vector<TranscriptEntry> entries_;
};

// ---- key exchange ----

OrePolynomial kex_message(const PublicParameters& params, const PrivateTuple& priv);
OrePolynomial kex_finalize(const PublicParameters& params, const PrivateTuple& priv, const OrePolynomial& other);

struct KexSession {
  PrivateTuple alice;
  PrivateTuple bob;
  OrePolynomial key_alice;
  OrePolynomial key_bob;
  ProtocolTranscript transcript;
};

KexSession run_key_exchange(const PublicParameters& params, Rng& rng);

// ---- three-pass transport of params.L ----

struct ThreePassResult {
  OrePolynomial recovered;
  PrivateTuple alice;
  PrivateTuple bob;
  ProtocolTranscript transcript;
};

// Throws DomainError when L commutes with P or Q (e.g. L constant) and
// propagates NotDivisible.
ThreePassResult three_pass(const PublicParameters& params, Rng& rng);

// ---- encryption ----

struct Ciphertext {
  OrePolynomial m_e;
  OrePolynomial P_bob;
};

struct EncryptionKeys {
  PrivateTuple alice;
  OrePolynomial P_alice;  // P_A L Q_A
};

EncryptionKeys elg_keygen(const PublicParameters& params, Rng& rng);
// When p_final is given, Bob's P_B P_Alice Q_B is stored there.
Ciphertext elg_encrypt(const PublicParameters& params, const OrePolynomial& P_alice, const OrePolynomial& m, Rng& rng,
                       OrePolynomial* p_final = nullptr);
OrePolynomial elg_final_key(const PrivateTuple& alice, const OrePolynomial& P_bob);
// Throws NotDivisible for a corrupt ciphertext.
OrePolynomial elg_decrypt(const PrivateTuple& alice, const Ciphertext& ct);

// ---- signatures ----

struct SignatureShape {
  unsigned key_degree = 3;  // a1, a2, k1, k2
  unsigned q_degree = 2;    // q1, q2
  std::size_t terms = kDense;
};

struct SigningKey {
  OrePolynomial a1;
  OrePolynomial a2;
};

struct VerifyingKey {
  OrePolynomial L;
  OrePolynomial P_alice;  // a1 L a2
};

struct SignatureTuple {
  OrePolynomial m, gamma, q1, r1, q2, r2, eps1, eps2;
};

// Ephemeral values behind one signature, kept only for cross-checks.
struct SigningWitness {
  OrePolynomial k1;
  OrePolynomial k2;
};

// Draws a1, a2 with L, a1, a2 pairwise non-commuting.
SigningKey sig_keygen(const OrePolynomial& L, const SignatureShape& shape, Rng& rng);
VerifyingKey sig_public(const SigningKey& key, const OrePolynomial& L);

SignatureTuple elg_sign(const SigningKey& key, const OrePolynomial& L, const OrePolynomial& m,
                        const SignatureShape& shape, Rng& rng, SigningWitness* witness = nullptr);
// With zero q1 and q2.
SignatureTuple elg_sign_degenerate(const SigningKey& key, const OrePolynomial& L, const OrePolynomial& m,
                                   const SignatureShape& shape, Rng& rng);

OrePolynomial sig_left(const VerifyingKey& pub, const SignatureTuple& sig);
OrePolynomial sig_right(const VerifyingKey& pub, const SignatureTuple& sig);
bool elg_verify(const VerifyingKey& pub, const SignatureTuple& sig);
// (q1 k1 + gamma a1) L (k2 q2 + a2 gamma), expanded term by term.
OrePolynomial sig_expansion(const SigningKey& key, const OrePolynomial& L, const SignatureTuple& sig,
                            const SigningWitness& witness);

// ---- zero-knowledge proof of a factorization L = l1 l2 ----

enum class Challenge { RevealP, RevealPi };

struct Commitment {
  OrePolynomial pi;
  DegreeProfile deg_p1;
  DegreeProfile deg_p2;
};

struct Response {
  OrePolynomial first;
  OrePolynomial second;
};

class ZkpProver {
 public:
  virtual ~ZkpProver() = default;
  virtual Commitment commit(Rng& rng) = 0;
  virtual Response respond(Challenge c) = 0;
};

// p1, p2 are drawn at total degree p_degree (default deg L), never repeated.
class HonestProver : public ZkpProver {
 public:
  HonestProver(OrePolynomial l1, OrePolynomial l2, std::optional<unsigned> p_degree = std::nullopt,
               std::size_t p_terms = kDense);
  Commitment commit(Rng& rng) override;
  Response respond(Challenge c) override;

 private:
  OrePolynomial l1_, l2_, L_;
  unsigned p_degree_;
  std::size_t p_terms_;
  std::optional<OrePolynomial> p1_, p2_;
  std::vector<std::string> used_;
};

// Knows no factorization: commits to p1' p1'' L p2 and prepares, by coin
// flip, either the reveal-p answer (p1' p1'', p2) or the reveal-pi answer
// (p1', p1'' L p2), announcing degrees that fit the prepared answer only.
class SplitCheater : public ZkpProver {
 public:
  SplitCheater(OrePolynomial L, unsigned p_degree, std::size_t p_terms = kDense);
  Commitment commit(Rng& rng) override;
  Response respond(Challenge c) override;

 private:
  OrePolynomial L_;
  unsigned p_degree_;
  std::size_t p_terms_;
  std::optional<OrePolynomial> p1a_, p1b_, p2_;
};

// Knows no factorization: answers reveal-pi with (p1, L p2).
class ShortcutCheater : public ZkpProver {
 public:
  ShortcutCheater(OrePolynomial L, unsigned p_degree, std::size_t p_terms = kDense);
  Commitment commit(Rng& rng) override;
  Response respond(Challenge c) override;

 private:
  OrePolynomial L_;
  unsigned p_degree_;
  std::size_t p_terms_;
  std::optional<OrePolynomial> p1_, p2_;
};

bool zkp_check(const OrePolynomial& L, const Commitment& com, Challenge c, const Response& r);

struct ZkpOutcome {
  std::size_t rounds_run = 0;
  std::size_t rounds_accepted = 0;
  bool accepted = false;  // every round passed
  ProtocolTranscript transcript{"zkp"};
};

// Runs up to `rounds` cycles with unbiased challenges from verifier_rng and
// stops at the first failed check.
ZkpOutcome zkp_run(const OrePolynomial& L, ZkpProver& prover, std::size_t rounds, Rng& prover_rng,
                   Rng& verifier_rng);

inline constexpr std::size_t kDefaultZkpRounds = 40;

}  // namespace ore
