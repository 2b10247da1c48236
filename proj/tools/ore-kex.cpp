// ore-kex: command-line driver for the protocols over Ore rings.
//
// Exit status: 0 success, 1 protocol or verification failure, 2 usage or
// malformed input, 3 a ciphertext or message that does not divide or decode.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "document.hpp"
#include "ore/cost_model.hpp"
#include "ore/errors.hpp"
#include "ore/message_codec.hpp"
#include "ore/protocols.hpp"
#include "ore/weak_keys.hpp"

using namespace ore;
using cli::Document;

namespace {

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kCorrupt = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeArgs {
  std::string ring = "f125-skew2";
  unsigned d_L = 50;
  unsigned d_PQ = 5;
  std::size_t nu = 10;
  std::size_t l_terms = 0;
  std::size_t pq_terms = 0;

  PublicParameters::Shape shape() const {
    return {d_L, d_PQ, nu, l_terms ? l_terms : kDense, pq_terms ? pq_terms : kDense};
  }
};

void add_shape(CLI::App* cmd, ShapeArgs& s) {
  cmd->add_option("--ring", s.ring, "ring alias or descriptor")->capture_default_str();
  cmd->add_option("--dL", s.d_L, "total degree of L")->capture_default_str();
  cmd->add_option("--dPQ", s.d_PQ, "total degree of P and Q")->capture_default_str();
  cmd->add_option("--nu", s.nu, "degree of the private polynomials")->capture_default_str();
  cmd->add_option("--l-terms", s.l_terms, "terms in L, 0 for dense")->capture_default_str();
  cmd->add_option("--pq-terms", s.pq_terms, "terms in P and Q, 0 for dense")->capture_default_str();
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    cli::write_file(path, content);
}

std::uint32_t characteristic(const RingPtr& ring) { return ring->field()->characteristic(); }

// ---- parameters and private tuples ----

void put_params(Document& doc, const PublicParameters& params, bool with_L = true) {
  doc.set("nu", std::to_string(params.nu));
  if (with_L) doc.set("L", params.L);
  doc.set("P", params.P);
  doc.set("Q", params.Q);
}

Document params_doc(const PublicParameters& params, std::uint64_t seed) {
  Document doc(params.ring, seed, "params");
  put_params(doc, params);
  return doc;
}

PublicParameters load_params(const std::string& path) {
  auto doc = Document::load(path);
  doc.expect_type("params");
  auto ring = doc.ring();
  return PublicParameters::from(doc.get_poly(ring, "L"), doc.get_poly(ring, "P"), doc.get_poly(ring, "Q"),
                                doc.get_u64("nu"));
}

void put_tuple(Document& doc, const std::string& who, const PrivateTuple& t) {
  doc.set(who + ".f", t.f.to_string());
  doc.set(who + ".g", t.g.to_string());
}

PrivateTuple get_tuple(const Document& doc, const std::string& who, const PublicParameters& params) {
  const auto p = characteristic(params.ring);
  return PrivateTuple::from(params, ConstantPolynomial::parse(p, doc.get(who + ".f")),
                            ConstantPolynomial::parse(p, doc.get(who + ".g")));
}

void put_transcript(Document& doc, const ProtocolTranscript& t) {
  std::size_t i = 0;
  for (const auto& e : t.entries()) doc.set("msg" + std::to_string(++i) + "." + e.sender + "." + e.label, e.value);
}

// Either a params file or a fresh draw from the seed stream.
PublicParameters params_or_generate(const std::string& file, const ShapeArgs& s, Rng& rng) {
  if (!file.empty()) return load_params(file);
  return PublicParameters::generate(OreRing::parse(s.ring), s.shape(), rng);
}

Bytes read_message(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    const auto raw = cli::read_file(file);
    return Bytes(raw.begin(), raw.end());
  }
  return to_bytes(text);
}

// ---- challenges ----

struct ChallengeArgs {
  std::string protocol = "exchange";
  ShapeArgs shape;
  std::uint64_t seed = 0;
};

std::pair<Document, Document> make_challenge(const ChallengeArgs& a) {
  Rng rng(a.seed);
  auto params = PublicParameters::generate(OreRing::parse(a.shape.ring), a.shape.shape(), rng);
  Document pub(params.ring, a.seed, "challenge-" + a.protocol);
  Document ans(params.ring, a.seed, "answer-" + a.protocol);
  for (auto [k, v] : {std::pair{"dL", a.shape.d_L}, {"dPQ", a.shape.d_PQ}})
    ans.set(k, std::to_string(v));
  ans.set("nu", std::to_string(a.shape.nu));
  ans.set("l-terms", std::to_string(a.shape.l_terms));
  ans.set("pq-terms", std::to_string(a.shape.pq_terms));
  if (a.protocol == "exchange") {
    auto s = run_key_exchange(params, rng);
    if (s.key_alice != s.key_bob) throw Error("generated session does not agree");
    put_params(pub, params);
    put_transcript(pub, s.transcript);
    put_tuple(ans, "alice", s.alice);
    put_tuple(ans, "bob", s.bob);
    ans.set("key", s.key_alice);
  } else {
    auto r = three_pass(params, rng);
    if (r.recovered != params.L) throw Error("generated run does not recover L");
    put_params(pub, params, false);
    put_transcript(pub, r.transcript);
    ans.set("L", params.L);
    put_tuple(ans, "alice", r.alice);
    put_tuple(ans, "bob", r.bob);
  }
  return {pub, ans};
}

ChallengeArgs challenge_args_from(const Document& ans) {
  ChallengeArgs a;
  const auto& type = ans.get("type");
  if (type != "answer-exchange" && type != "answer-three-pass") throw ParseError("not an answer file");
  a.protocol = type.substr(7);
  a.shape.ring = ans.get("ring");
  auto seed = ans.seed();
  if (!seed) throw ParseError("answer file has no seed");
  a.seed = *seed;
  a.shape.d_L = static_cast<unsigned>(ans.get_u64("dL"));
  a.shape.d_PQ = static_cast<unsigned>(ans.get_u64("dPQ"));
  a.shape.nu = ans.get_u64("nu");
  a.shape.l_terms = ans.get_u64("l-terms");
  a.shape.pq_terms = ans.get_u64("pq-terms");
  return a;
}

// Independent of the regeneration: the recorded private data must open the
// recorded public data.
bool answer_opens_public(const Document& pub, const Document& ans) {
  auto ring = pub.ring();
  const auto nu = pub.get_u64("nu");
  if (pub.get("type") == "challenge-exchange") {
    auto params = PublicParameters::from(pub.get_poly(ring, "L"), pub.get_poly(ring, "P"), pub.get_poly(ring, "Q"), nu);
    auto alice = get_tuple(ans, "alice", params), bob = get_tuple(ans, "bob", params);
    const auto key = ans.get_poly(ring, "key");
    return kex_message(params, alice) == pub.get_poly(ring, "msg1.alice.A_part") &&
           kex_message(params, bob) == pub.get_poly(ring, "msg2.bob.B_part") &&
           kex_finalize(params, alice, pub.get_poly(ring, "msg2.bob.B_part")) == key &&
           kex_finalize(params, bob, pub.get_poly(ring, "msg1.alice.A_part")) == key;
  }
  auto params = PublicParameters::from(ans.get_poly(ring, "L"), pub.get_poly(ring, "P"), pub.get_poly(ring, "Q"), nu);
  auto alice = get_tuple(ans, "alice", params), bob = get_tuple(ans, "bob", params);
  return pub.get_poly(ring, "msg1.alice.P_A*L*Q_A") == kex_message(params, alice) &&
         pub.get_poly(ring, "msg2.bob.P_int") == bob.P_side * kex_message(params, alice) * bob.Q_side &&
         pub.get_poly(ring, "msg3.alice.P_B*L*Q_B") == kex_message(params, bob);
}

// ---- zkp ----

std::unique_ptr<ZkpProver> make_prover(const std::string& kind, const OrePolynomial& l1, const OrePolynomial& l2,
                                       unsigned p_degree) {
  const auto L = l1 * l2;
  if (kind == "honest") return std::make_unique<HonestProver>(l1, l2, p_degree);
  if (kind == "split") return std::make_unique<SplitCheater>(L, p_degree);
  if (kind == "shortcut") return std::make_unique<ShortcutCheater>(L, p_degree);
  throw Usage("unknown prover '" + kind + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_grading(const GradingVector& z) {
  std::string out = "[";
  for (std::size_t i = 0; i < z.size(); ++i) out += (i ? "," : "") + std::to_string(z[i]);
  return out + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key exchange, transport, encryption, signatures and proofs over Ore rings"};
  app.require_subcommand(1);
  std::function<int()> action;

  // keygen
  std::uint64_t seed = 0;
  ShapeArgs shape;
  std::string params_file, out_file, public_file, secret_file, in_file, message, message_file;
  std::string purpose = "params";
  SignatureShape sig_shape;

  auto* keygen = app.add_subcommand("keygen", "public parameters, or a key pair for encrypt/sign");
  keygen->add_option("--seed", seed)->required();
  add_shape(keygen, shape);
  keygen->add_option("--purpose", purpose)->check(CLI::IsMember({"params", "encrypt", "sign"}))->capture_default_str();
  keygen->add_option("--params", params_file, "params file (encrypt, sign)");
  keygen->add_option("--out", out_file, "params output (default stdout)");
  keygen->add_option("--public", public_file);
  keygen->add_option("--secret", secret_file);
  keygen->add_option("--key-degree", sig_shape.key_degree)->capture_default_str();
  keygen->add_option("--q-degree", sig_shape.q_degree)->capture_default_str();
  keygen->callback([&] {
    action = [&] {
      Rng rng(seed);
      if (purpose == "params") {
        emit(out_file, params_doc(PublicParameters::generate(OreRing::parse(shape.ring), shape.shape(), rng), seed)
                           .render());
        return kOk;
      }
      if (params_file.empty() || public_file.empty() || secret_file.empty())
        throw Usage("--purpose " + purpose + " needs --params, --public and --secret");
      auto params = load_params(params_file);
      Document pub(params.ring, seed, purpose + "-public"), sec(params.ring, seed, purpose + "-secret");
      if (purpose == "encrypt") {
        auto keys = elg_keygen(params, rng);
        pub.set("P_alice", keys.P_alice);
        put_tuple(sec, "alice", keys.alice);
      } else {
        auto key = sig_keygen(params.L, sig_shape, rng);
        auto vk = sig_public(key, params.L);
        pub.set("L", vk.L);
        pub.set("P_alice", vk.P_alice);
        sec.set("key-degree", std::to_string(sig_shape.key_degree));
        sec.set("q-degree", std::to_string(sig_shape.q_degree));
        sec.set("L", params.L);
        sec.set("a1", key.a1);
        sec.set("a2", key.a2);
      }
      pub.save(public_file);
      sec.save(secret_file);
      return kOk;
    };
  });

  // exchange
  auto* exchange = app.add_subcommand("exchange", "run both parties of the key exchange");
  exchange->add_option("--seed", seed)->required();
  add_shape(exchange, shape);
  exchange->add_option("--params", params_file, "use these parameters instead of drawing them");
  exchange->add_option("--out", out_file, "transcript output (default stdout)");
  exchange->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto params = params_or_generate(params_file, shape, rng);
      auto s = run_key_exchange(params, rng);
      Document doc(params.ring, seed, "exchange");
      put_params(doc, params);
      put_transcript(doc, s.transcript);
      const bool agree = s.key_alice == s.key_bob;
      doc.set("key-terms", std::to_string(s.key_alice.size()));
      doc.set("agree", yes_no(agree));
      emit(out_file, doc.render());
      return agree ? kOk : kFail;
    };
  });

  // three-pass
  auto* tp = app.add_subcommand("three-pass", "send L through the three-pass protocol");
  tp->add_option("--seed", seed)->required();
  add_shape(tp, shape);
  tp->add_option("--params", params_file, "L in this file is the transported secret");
  tp->add_option("--out", out_file, "transcript output (default stdout)");
  tp->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto params = params_or_generate(params_file, shape, rng);
      auto r = three_pass(params, rng);
      Document doc(params.ring, seed, "three-pass");
      put_params(doc, params, false);
      put_transcript(doc, r.transcript);
      const bool ok = r.recovered == params.L;
      doc.set("recovered", yes_no(ok));
      emit(out_file, doc.render());
      return ok ? kOk : kFail;
    };
  });

  // encrypt / decrypt
  auto* enc = app.add_subcommand("encrypt", "encrypt a byte message to a public key");
  enc->add_option("--seed", seed)->required();
  enc->add_option("--params", params_file)->required();
  enc->add_option("--public", public_file)->required();
  auto* msg_opt = enc->add_option("--message", message);
  enc->add_option("--message-file", message_file)->excludes(msg_opt);
  enc->add_option("--out", out_file, "ciphertext output (default stdout)");
  enc->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto params = load_params(params_file);
      auto pub = Document::load(public_file);
      pub.expect_type("encrypt-public");
      MessageCodec codec(params.ring);
      auto ct = elg_encrypt(params, pub.get_poly(params.ring, "P_alice"), codec.encode(read_message(message, message_file)),
                            rng);
      Document doc(params.ring, seed, "ciphertext");
      doc.set("m_e", ct.m_e);
      doc.set("P_bob", ct.P_bob);
      emit(out_file, doc.render());
      return kOk;
    };
  });

  auto* dec = app.add_subcommand("decrypt", "decrypt a ciphertext with the secret tuple");
  dec->add_option("--params", params_file)->required();
  dec->add_option("--secret", secret_file)->required();
  dec->add_option("--in", in_file)->required();
  dec->add_option("--out", out_file, "plaintext output (default stdout)");
  dec->callback([&] {
    action = [&] {
      auto params = load_params(params_file);
      auto sec = Document::load(secret_file);
      sec.expect_type("encrypt-secret");
      auto doc = Document::load(in_file);
      doc.expect_type("ciphertext");
      Ciphertext ct{doc.get_poly(params.ring, "m_e"), doc.get_poly(params.ring, "P_bob")};
      auto alice = get_tuple(sec, "alice", params);
      Bytes plain;
      try {
        plain = MessageCodec(params.ring).decode(elg_decrypt(alice, ct));
      } catch (const ParseError& e) {
        std::cerr << "ore-kex: corrupt ciphertext: " << e.what() << "\n";
        return kCorrupt;
      }
      emit(out_file, to_string(plain));
      return kOk;
    };
  });

  // sign / verify
  bool degenerate = false;
  auto* sign = app.add_subcommand("sign", "sign a byte message");
  sign->add_option("--seed", seed)->required();
  sign->add_option("--secret", secret_file)->required();
  auto* smsg = sign->add_option("--message", message);
  sign->add_option("--message-file", message_file)->excludes(smsg);
  sign->add_flag("--degenerate", degenerate, "q1 = q2 = 0");
  sign->add_option("--out", out_file, "signature output (default stdout)");
  sign->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto sec = Document::load(secret_file);
      sec.expect_type("sign-secret");
      auto ring = sec.ring();
      SignatureShape shp{static_cast<unsigned>(sec.get_u64("key-degree")),
                         static_cast<unsigned>(sec.get_u64("q-degree")), kDense};
      SigningKey key{sec.get_poly(ring, "a1"), sec.get_poly(ring, "a2")};
      const auto L = sec.get_poly(ring, "L");
      const auto m = MessageCodec(ring).encode(read_message(message, message_file));
      auto sig = degenerate ? elg_sign_degenerate(key, L, m, shp, rng) : elg_sign(key, L, m, shp, rng);
      Document doc(ring, seed, "signature");
      for (auto [name, h] : {std::pair{"m", &sig.m}, {"gamma", &sig.gamma}, {"q1", &sig.q1}, {"r1", &sig.r1},
                             {"q2", &sig.q2}, {"r2", &sig.r2}, {"eps1", &sig.eps1}, {"eps2", &sig.eps2}})
        doc.set(name, *h);
      emit(out_file, doc.render());
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "check a signature against a public key");
  verify->add_option("--public", public_file)->required();
  verify->add_option("--in", in_file)->required();
  auto* vmsg = verify->add_option("--message", message, "also require this signed message");
  verify->add_option("--message-file", message_file)->excludes(vmsg);
  verify->callback([&] {
    action = [&] {
      auto pub = Document::load(public_file);
      pub.expect_type("sign-public");
      auto ring = pub.ring();
      auto doc = Document::load(in_file);
      doc.expect_type("signature");
      auto g = [&](const char* k) { return doc.get_poly(ring, k); };
      SignatureTuple sig{g("m"), g("gamma"), g("q1"), g("r1"), g("q2"), g("r2"), g("eps1"), g("eps2")};
      bool ok = elg_verify(VerifyingKey{pub.get_poly(ring, "L"), pub.get_poly(ring, "P_alice")}, sig);
      if (ok && (!message.empty() || !message_file.empty())) {
        try {
          ok = MessageCodec(ring).decode(sig.m) == read_message(message, message_file);
        } catch (const ParseError&) {
          ok = false;
        }
      }
      std::cout << "verify: " << (ok ? "accept" : "reject") << "\n";
      return ok ? kOk : kFail;
    };
  });

  // zkp
  std::string prover_kind = "honest";
  unsigned factor_degree = 3, p_degree = 0;
  std::size_t rounds = kDefaultZkpRounds;
  auto* zkp = app.add_subcommand("zkp", "prove knowledge of a factorization L = l1 l2");
  zkp->add_option("--seed", seed)->required();
  zkp->add_option("--ring", shape.ring)->capture_default_str();
  zkp->add_option("--factor-degree", factor_degree, "total degree of l1 and l2")->capture_default_str();
  zkp->add_option("--p-degree", p_degree, "degree of p1, p2; 0 for deg L")->capture_default_str();
  zkp->add_option("--rounds", rounds)->capture_default_str();
  zkp->add_option("--prover", prover_kind)->check(CLI::IsMember({"honest", "split", "shortcut"}))->capture_default_str();
  zkp->add_option("--out", out_file, "transcript output (default stdout)");
  zkp->callback([&] {
    action = [&] {
      Rng rng(seed);
      auto ring = OreRing::parse(shape.ring);
      auto l1 = random_polynomial(ring, factor_degree, kDense, rng);
      auto l2 = random_polynomial(ring, factor_degree, kDense, rng);
      const auto L = l1 * l2;
      auto prover = make_prover(prover_kind, l1, l2, p_degree ? p_degree : L.total_degree());
      Rng prover_rng = rng.fork(), verifier_rng = rng.fork();
      auto run = zkp_run(L, *prover, rounds, prover_rng, verifier_rng);
      Document doc(ring, seed, "zkp");
      doc.set("prover", prover_kind);
      doc.set("L", L);
      put_transcript(doc, run.transcript);
      doc.set("rounds", std::to_string(run.rounds_run));
      doc.set("accepted-rounds", std::to_string(run.rounds_accepted));
      doc.set("accepted", yes_no(run.accepted));
      emit(out_file, doc.render());
      return run.accepted ? kOk : kFail;
    };
  });

  // check-weak
  std::string poly_text, l_text;
  auto* weak = app.add_subcommand("check-weak", "screen a private key candidate");
  weak->add_option("--ring", shape.ring)->capture_default_str();
  weak->add_option("--params", params_file, "take the ring and L from this file");
  weak->add_option("--poly", poly_text)->required();
  weak->add_option("--L", l_text, "polynomial the key must not commute with");
  weak->callback([&] {
    action = [&] {
      RingPtr ring;
      std::optional<OrePolynomial> L;
      if (!params_file.empty()) {
        auto params = load_params(params_file);
        ring = params.ring;
        L = params.L;
      } else {
        ring = OreRing::parse(shape.ring);
      }
      if (!l_text.empty()) L = OrePolynomial::parse(ring, l_text);
      if (!L) throw Usage("check-weak needs --L or --params");
      const auto h = OrePolynomial::parse(ring, poly_text);
      if (h.is_zero()) throw Usage("the zero polynomial is not a key");
      const auto verdict = screen_private_key(h, *L);
      std::cout << "verdict: " << to_string(verdict) << "\n";
      if (ring->is_weyl()) {
        auto z = grading_vector(h);
        std::cout << "grading: " << (z ? format_grading(*z) : "none") << "\n";
      }
      std::cout << "commutes-with-L: " << yes_no(commutes(h, *L)) << "\n";
      return verdict == ScreenVerdict::Accept ? kOk : kFail;
    };
  });

  // estimate
  cost::SecurityTuple tuple{50, 5, 10};
  bool table = false;
  auto* est = app.add_subcommand("estimate", "step-count estimates for a security tuple");
  est->add_option("--dL", tuple.d_L)->capture_default_str();
  est->add_option("--dPQ", tuple.d_PQ)->capture_default_str();
  est->add_option("--nu", tuple.nu)->capture_default_str();
  est->add_option("--p", tuple.p)->capture_default_str();
  est->add_option("--omega", tuple.omega)->capture_default_str();
  est->add_flag("--table", table, "recompute the reference table");
  est->callback([&] {
    action = [&] {
      if (!table) {
        cost::validate(tuple);
        const auto r = cost::evaluate(tuple);
        std::cout << "secret-param: " << cost::format_steps(r.secret_param) << "\n"
                  << "initial-message: " << cost::format_steps(r.initial_message) << "\n"
                  << "shared-secret: " << cost::format_steps(r.shared_secret) << "\n"
                  << "key-size-kb: " << r.key_size_kb << "\n"
                  << "message-degree: " << cost::message_degree(tuple) << "\n"
                  << "brute-force: " << cost::format_steps(r.brute_force) << "\n";
        return kOk;
      }
      bool all = true;
      char line[256];
      std::printf("%-12s %-14s %-14s %-14s %-8s %-14s %s\n", "(dL,dPQ,nu)", "secret-param", "initial-msg",
                  "shared-secret", "key-kb", "brute-force", "check");
      for (const auto& row : cost::reference_table()) {
        const auto r = cost::evaluate(row.tuple);
        const auto chk = cost::check_row(row, r);
        all = all && chk.all();
        std::snprintf(line, sizeof line, "(%g,%g,%g)", row.tuple.d_L, row.tuple.d_PQ, row.tuple.nu);
        std::printf("%-12s %-14s %-14s %-14s %-8llu %-14s %s\n", line, cost::format_steps(r.secret_param).c_str(),
                    cost::format_steps(r.initial_message).c_str(), cost::format_steps(r.shared_secret).c_str(),
                    static_cast<unsigned long long>(r.key_size_kb), cost::format_steps(r.brute_force).c_str(),
                    chk.all() ? "pass" : "FAIL");
      }
      return all ? kOk : kFail;
    };
  });

  // challenge
  ChallengeArgs ch;
  bool replay = false;
  auto* chal = app.add_subcommand("challenge", "public challenge plus withheld answer, or replay check");
  chal->add_option("--protocol", ch.protocol)->check(CLI::IsMember({"exchange", "three-pass"}))->capture_default_str();
  chal->add_option("--seed", ch.seed);
  add_shape(chal, ch.shape);
  chal->add_option("--public", public_file)->required();
  chal->add_option("--answer", secret_file)->required();
  chal->add_flag("--replay", replay, "regenerate from the answer file and compare");
  chal->callback([&] {
    action = [&] {
      if (!replay) {
        if (chal->count("--seed") == 0) throw Usage("challenge needs --seed");
        auto [pub, ans] = make_challenge(ch);
        pub.save(public_file);
        ans.save(secret_file);
        return kOk;
      }
      const auto pub_text = cli::read_file(public_file), ans_text = cli::read_file(secret_file);
      const auto ans = Document::parse(ans_text);
      const auto pub = Document::parse(pub_text);
      auto [pub2, ans2] = make_challenge(challenge_args_from(ans));
      const bool same = pub2.render() == pub_text && ans2.render() == ans_text;
      const bool opens = answer_opens_public(pub, ans);
      std::cout << "regenerated: " << (same ? "identical" : "differs") << "\n"
                << "answer-opens-public: " << yes_no(opens) << "\n";
      return same && opens ? kOk : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Usage& e) {
    std::cerr << "ore-kex: " << e.what() << "\n";
    return kUsage;
  } catch (const NotDivisible& e) {
    std::cerr << "ore-kex: " << e.what() << "\n";
    return kCorrupt;
  } catch (const ParseError& e) {
    std::cerr << "ore-kex: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "ore-kex: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "ore-kex: " << e.what() << "\n";
    return kFail;
  }
}
