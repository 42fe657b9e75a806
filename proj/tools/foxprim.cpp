#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "foxprim/delta.hpp"
#include "foxprim/fox.hpp"
#include "foxprim/json_io.hpp"
#include "foxprim/nielsen.hpp"
#include "foxprim/primitivity.hpp"
#include "foxprim/random.hpp"
#include "foxprim/stallings.hpp"
#include "foxprim/version.hpp"
#include "foxprim/whitehead.hpp"

namespace {

using namespace foxprim;

/// A check or certificate that came out negative: exit status 1.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int rank = 2;
  std::size_t max_len = 10;
  std::size_t cand_len = 2;
  std::uint64_t budget = kDefaultOrbitBudget;
  int workers = 1;
  bool json = false;
  std::uint64_t seed = 0x5eedf0c5u;
  std::string out_path;
  std::string checkpoint_path;
  std::string resume_path;
  std::string inverse_path;
};

int default_workers() {
  if (const char* env = std::getenv("FOXPRIM_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string format_int_matrix(const IntMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : " [";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += m.at(r, c).str();
    }
    out += "]";
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

std::string format_ring_matrix(const RingMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : " [";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ",  ";
      out += format_ring_element(m.at(r, c));
    }
    out += "]";
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify-paper: golden examples and property suites, self-contained and
// reproducible from the seed.

bool run_verify_paper(const RunConfig& cfg) {
  Rng rng(cfg.seed);
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // golden automorphism: u = [x1,x2][x3,x4] -> v = [x1,x2][x2,x3][x3,x4]
  Endomorphism alpha = parse_endomorphism("x1->aC; x2->cbC; x3->c; x4->d", 4);
  Word u4 = parse_word("abABcdCD", 4);
  Word v4 = parse_word("abAcBdCD", 4);
  check("golden map sends [x1,x2][x3,x4] to [x1,x2][x2,x3][x3,x4]", apply(alpha, u4) == v4);
  check("golden map is an automorphism", is_automorphism(alpha));
  check("golden map is a monomorphism", is_monomorphism(alpha));
  {
    SameOrbitResult so = same_orbit(u4, v4, cfg.budget);
    check("orbit search connects the two products",
          so.verdict == OrbitVerdict::Same && so.certificate &&
              replay_certificate(*so.certificate));
  }

  // double Jacobian of [x1,x2]: frozen four-entry table
  {
    Word c = parse_word("abAB", 2);
    RingMatrix d = double_jacobian(c);
    auto r = [&](const std::string& t) { return parse_ring_element(t, 2); };
    bool table = d.at(0, 0) == r("A - b A") && d.at(0, 1) == r("- A") &&
                 d.at(1, 0) == r("1 - b A B + A B") && d.at(1, 1) == r("B - A B");
    check("double Jacobian of [x1,x2] matches the frozen table", table);
    LaurentElement det = laurent_det(abelianize(d));
    check("abelianized determinant is the unit monomial x1^-1 x2^-1",
          det == LaurentElement::monomial(2, {-1, -1}));
  }

  // defining identities, random words
  {
    bool ok = true;
    for (int rank : {2, 4}) {
      for (int t = 0; t < 100 && ok; ++t) {
        Word w = random_reduced_word(rng, rank, 1 + static_cast<std::size_t>(t) % 20);
        RingElement lhs = RingElement::from_word(w) - RingElement::one(rank);
        RingElement left_sum(rank), right_sum(rank);
        for (int i = 1; i <= rank; ++i) {
          RingElement xi_minus_1 =
              RingElement::from_word(Word(rank, {static_cast<Letter>(i)})) - RingElement::one(rank);
          left_sum += left_derivative(w, i) * xi_minus_1;
          right_sum += xi_minus_1 * right_derivative(w, i);
        }
        ok = lhs == left_sum && lhs == right_sum;
      }
    }
    check("left and right derivative identities hold on random words", ok);
  }

  // chain rule and the row identity
  {
    bool ok = true;
    for (int rank : {2, 3}) {
      for (int t = 0; t < 50 && ok; ++t) {
        Endomorphism phi = random_endomorphism(rng, rank, 4);
        Word g = random_reduced_word(rng, rank, 1 + static_cast<std::size_t>(t) % 10);
        ok = chain_rule_check(phi, g) && derivative_row_identity_check(phi, g);
      }
    }
    check("chain rule and Jacobian row identity hold on random pairs", ok);
  }

  // odd rank: weight-2 products and derived-subgroup words are obstructed
  {
    bool ok = true;
    for (int n : {3, 5}) {
      std::uniform_int_distribution<long long> kdist(-3, 3);
      for (int t = 0; t < 25 && ok; ++t) {
        CommutatorProductSpec spec{n, {}};
        spec.exponents.resize(static_cast<std::size_t>(n * (n - 1) / 2));
        for (auto& k : spec.exponents) k = kdist(rng);
        ok = odd_rank_obstruction(weight2_word(spec)) &&
             linearized_matrix(weight2_word(spec)) == weight2_matrix(spec);
      }
      for (int t = 0; t < 25 && ok; ++t) ok = odd_rank_obstruction(random_derived_word(rng, n, 16));
    }
    check("odd-rank linearized matrices are antisymmetric and singular", ok);
  }
  {
    bool ok = true;
    for (int m = 1; m <= 3; ++m) {
      int n = 2 * m;
      CommutatorProductSpec spec{n, std::vector<long long>(static_cast<std::size_t>(n * (n - 1) / 2), 0)};
      for (int p = 0; p < m; ++p) {
        int a = 2 * p + 1;
        spec.exponents[static_cast<std::size_t>((a - 1) * n - (a - 1) * a / 2)] = 1;
      }
      ok = ok && int_det(weight2_matrix(spec)) == 1;
    }
    check("standard even-rank commutator products have unimodular matrices", ok);
  }

  // the rank-2 metabelian decision
  {
    Word c = parse_word("abAB", 2);
    bool ok = true;
    for (int t = 0; t < 30 && ok; ++t) {
      Word g = random_reduced_word(rng, 2, static_cast<std::size_t>(t) % 7);
      auto ev = exponent_vector(g);
      DeltaVerdictM2 verdict = delta_primitive_m2(conjugate(g, c));
      ok = verdict.kind == DeltaVerdictM2::Kind::DeltaPrimitive && verdict.sign == 1 &&
           verdict.conjugator == ev;
    }
    for (int k = 2; k <= 5 && ok; ++k)
      ok = delta_primitive_m2(power(c, k)).kind == DeltaVerdictM2::Kind::NotDeltaPrimitive;
    check("metabelian rank-2 decision recognizes commutator conjugates", ok);
  }

  // rank-2 classification vs. the metabelian projection, short words
  {
    bool ok = true;
    WordEnumerator en(2, 8);
    while (auto w = en.next()) {
      if (!w->is_cyclically_reduced()) continue;
      bool classified = classify_delta_primitive_f2(*w);
      if (classified) {
        ok = ok && delta_primitive_necessary(*w) &&
             delta_primitive_m2(*w).kind == DeltaVerdictM2::Kind::DeltaPrimitive;
      }
    }
    check("rank-2 classification consistent with necessary and metabelian tests", ok);
  }

  // blocking fixtures and the primitive enumeration
  {
    check("commutator is a proven blocking word",
          blocking_verdict(parse_word("abAB", 2), 8).kind == BlockingVerdict::Kind::BlockedProven);
    check("x1^2 x2^2 is a proven blocking word",
          blocking_verdict(parse_word("aabb", 2), 8).kind == BlockingVerdict::Kind::BlockedProven);
    BlockingVerdict x1 = blocking_verdict(parse_word("a", 2), 8);
    check("a single generator extends to itself",
          x1.kind == BlockingVerdict::Kind::Extendable && *x1.witness == parse_word("a", 2));

    PrimitiveEnumeratorF2 prim(10);
    std::size_t len1 = 0, len2 = 0;
    bool cmz_ok = true, prefix_ok = true;
    Word comm = parse_word("abAB", 2);
    Word pow = parse_word("aabb", 2);
    while (auto w = prim.next()) {
      if (w->length() == 1) ++len1;
      if (w->length() == 2) ++len2;
      cmz_ok = cmz_ok && cmz_necessary_condition(*w);
      prefix_ok =
          prefix_ok && !is_prefix_no_cancellation(comm, *w) && !is_prefix_no_cancellation(pow, *w);
    }
    check("primitive counts to lengths 1 and 2 are 4 and 12", len1 == 4 && len1 + len2 == 12);
    check("every enumerated primitive satisfies the syllable condition", cmz_ok);
    check("no enumerated primitive starts with a blocking word", prefix_ok);
  }

  // invertibility certificates
  {
    Word c = parse_word("abAB", 2);
    auto found = find_inverse_certificate(c, 2, 3);
    check("bounded search finds a certificate inverse for [x1,x2]",
          found && verify_inverse_certificate(c, *found));
    RingMatrix m4 = standard_commutator_inverse(2);
    check("block construction certifies [x1,x2][x3,x4] in rank 4",
          verify_inverse_certificate(parse_word("abABcdCD", 4), m4));
  }

  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks FAILED")
            << " (seed " << cfg.seed << ", version " << kVersion << ")\n";
  return failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox calculus and primitivity toolkit for free groups"};
  app.set_version_flag("--version", std::string(foxprim::kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = default_workers();
  app.add_flag("--json", cfg.json, "emit JSON instead of plain text");

  std::string word_arg, word_arg2, map_arg, map_arg2;
  int index_arg = 1;

  // ---- fox ----------------------------------------------------------------
  auto* fox = app.add_subcommand("fox", "Fox derivatives and Jacobians");
  fox->require_subcommand(1);
  auto add_rank = [&cfg](CLI::App* cmd) {
    cmd->add_option("--rank", cfg.rank, "rank of the free group")->capture_default_str();
  };

  auto* fox_left = fox->add_subcommand("left", "left derivative of a word");
  fox_left->add_option("word", word_arg)->required();
  fox_left->add_option("index", index_arg)->required();
  add_rank(fox_left);
  fox_left->callback([&] {
    RingElement d = left_derivative(parse_word(word_arg, cfg.rank), index_arg);
    emit(cfg, ring_to_json(d), format_ring_element(d));
  });

  auto* fox_right = fox->add_subcommand("right", "right derivative of a word");
  fox_right->add_option("word", word_arg)->required();
  fox_right->add_option("index", index_arg)->required();
  add_rank(fox_right);
  fox_right->callback([&] {
    RingElement d = right_derivative(parse_word(word_arg, cfg.rank), index_arg);
    emit(cfg, ring_to_json(d), format_ring_element(d));
  });

  auto* fox_jac = fox->add_subcommand("jacobian", "Jacobian matrix of a map");
  fox_jac->add_option("map", map_arg)->required();
  add_rank(fox_jac);
  fox_jac->callback([&] {
    RingMatrix j = jacobian(parse_endomorphism(map_arg, cfg.rank));
    emit(cfg, ring_matrix_to_json(j), format_ring_matrix(j));
  });

  auto* fox_djac = fox->add_subcommand("djac", "double Jacobian of a word");
  fox_djac->add_option("word", word_arg)->required();
  add_rank(fox_djac);
  fox_djac->callback([&] {
    RingMatrix d = double_jacobian(parse_word(word_arg, cfg.rank));
    emit(cfg, ring_matrix_to_json(d), format_ring_matrix(d));
  });

  auto* fox_lin = fox->add_subcommand("linmat", "linearized coefficient matrix of a word");
  fox_lin->add_option("word", word_arg)->required();
  add_rank(fox_lin);
  fox_lin->callback([&] {
    IntMatrix m = linearized_matrix(parse_word(word_arg, cfg.rank));
    emit(cfg, int_matrix_to_json(m), format_int_matrix(m));
  });

  // ---- map ----------------------------------------------------------------
  auto* map_cmd = app.add_subcommand("map", "apply and compose endomorphisms");
  map_cmd->require_subcommand(1);

  auto* map_apply = map_cmd->add_subcommand("apply", "image of a word under a map");
  map_apply->add_option("map", map_arg)->required();
  map_apply->add_option("word", word_arg)->required();
  add_rank(map_apply);
  map_apply->callback([&] {
    Word img = apply(parse_endomorphism(map_arg, cfg.rank), parse_word(word_arg, cfg.rank));
    emit(cfg, word_to_json(img), format_word(img));
  });

  auto* map_compose = map_cmd->add_subcommand("compose", "composition of two maps");
  map_compose->add_option("first", map_arg)->required();
  map_compose->add_option("second", map_arg2)->required();
  add_rank(map_compose);
  map_compose->callback([&] {
    Endomorphism c =
        compose(parse_endomorphism(map_arg, cfg.rank), parse_endomorphism(map_arg2, cfg.rank));
    emit(cfg, endomorphism_to_json(c), format_endomorphism(c));
  });

  // ---- aut / mono ---------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism recognition");
  auto* aut_check = aut->add_subcommand("check", "is the map an automorphism?");
  aut_check->add_option("map", map_arg)->required();
  add_rank(aut_check);
  aut_check->callback([&] {
    bool ok = is_automorphism(parse_endomorphism(map_arg, cfg.rank));
    emit(cfg, Json{{"automorphism", ok}}, ok ? "automorphism" : "not an automorphism");
  });

  auto* mono = app.add_subcommand("mono", "monomorphism recognition");
  auto* mono_check = mono->add_subcommand("check", "is the map injective?");
  mono_check->add_option("map", map_arg)->required();
  add_rank(mono_check);
  mono_check->callback([&] {
    Endomorphism phi = parse_endomorphism(map_arg, cfg.rank);
    bool ok = is_monomorphism(phi);
    emit(cfg, Json{{"monomorphism", ok}, {"image_rank", subgroup_rank(phi.images())}},
         ok ? "monomorphism" : "not a monomorphism");
  });

  // ---- orbit --------------------------------------------------------------
  auto* orbit = app.add_subcommand("orbit", "Whitehead orbit computations");
  orbit->require_subcommand(1);

  auto* orbit_min = orbit->add_subcommand("min", "Whitehead-minimal cyclic form");
  orbit_min->add_option("word", word_arg)->required();
  add_rank(orbit_min);
  orbit_min->callback([&] {
    MinimizeResult r = whitehead_minimize(parse_word(word_arg, cfg.rank));
    emit(cfg,
         Json{{"minimal", format_word(r.minimal)},
              {"length", r.minimal.length()},
              {"moves", r.certificate.moves.size()}},
         format_word(r.minimal) + " (length " + std::to_string(r.minimal.length()) + ", " +
             std::to_string(r.certificate.moves.size()) + " moves)");
  });

  auto* orbit_same = orbit->add_subcommand("same", "are two words in one orbit?");
  orbit_same->add_option("word1", word_arg)->required();
  orbit_same->add_option("word2", word_arg2)->required();
  orbit_same->add_option("--budget", cfg.budget, "node budget")->capture_default_str();
  add_rank(orbit_same);
  orbit_same->callback([&] {
    SameOrbitResult r =
        same_orbit(parse_word(word_arg, cfg.rank), parse_word(word_arg2, cfg.rank), cfg.budget);
    std::string verdict = r.verdict == OrbitVerdict::Same         ? "same orbit"
                          : r.verdict == OrbitVerdict::Different ? "different orbits"
                                                                 : "budget exceeded";
    Json j{{"verdict", verdict},
           {"minimal1", format_word(r.minimal_u)},
           {"minimal2", format_word(r.minimal_v)},
           {"nodes", r.nodes}};
    if (r.certificate) j["moves"] = r.certificate->moves.size();
    emit(cfg, j, verdict + " (minimal forms " + format_word(r.minimal_u) + ", " +
                     format_word(r.minimal_v) + "; " + std::to_string(r.nodes) + " nodes)");
  });

  auto* orbit_witness = orbit->add_subcommand("witness", "orbit-violation witness for a map");
  orbit_witness->add_option("map", map_arg)->required();
  orbit_witness->add_option("word", word_arg)->required();
  orbit_witness->add_option("--max-len", cfg.max_len, "orbit length bound")->capture_default_str();
  orbit_witness->add_option("--budget", cfg.budget, "node budget")->capture_default_str();
  add_rank(orbit_witness);
  orbit_witness->callback([&] {
    WitnessResult r = orbit_violation_witness(parse_endomorphism(map_arg, cfg.rank),
                                              parse_word(word_arg, cfg.rank), cfg.max_len,
                                              cfg.budget);
    Json j{{"nodes", r.nodes}, {"exhausted", r.exhausted}, {"max_len", cfg.max_len}};
    if (r.witness) {
      j["witness"] = format_word(*r.witness);
      emit(cfg, j, "witness: " + format_word(*r.witness) + " (image leaves the orbit)");
    } else {
      j["witness"] = nullptr;
      emit(cfg, j,
           std::string("no witness up to length ") + std::to_string(cfg.max_len) +
               (r.exhausted ? "" : " (budget exceeded)"));
    }
  });

  // ---- prim ---------------------------------------------------------------
  auto* prim = app.add_subcommand("prim", "primitivity and blocking words");
  prim->require_subcommand(1);

  auto* prim_check = prim->add_subcommand("check", "is the word primitive?");
  prim_check->add_option("word", word_arg)->required();
  add_rank(prim_check);
  prim_check->callback([&] {
    bool ok = is_primitive(parse_word(word_arg, cfg.rank));
    emit(cfg, Json{{"primitive", ok}}, ok ? "primitive" : "not primitive");
  });

  auto* prim_enum = prim->add_subcommand("enum", "cyclically reduced primitives of rank 2");
  prim_enum->add_option("--max-len", cfg.max_len, "length bound")->capture_default_str();
  prim_enum->callback([&] {
    PrimitiveEnumeratorF2 en(cfg.max_len);
    Json arr = Json::array();
    std::size_t count = 0;
    while (auto w = en.next()) {
      ++count;
      if (cfg.json)
        arr.push_back(format_word(*w));
      else
        std::cout << format_word(*w) << "\n";
    }
    if (cfg.json)
      std::cout << Json{{"max_len", cfg.max_len}, {"count", count}, {"words", arr}}.dump(2)
                << "\n";
    else
      std::cout << "total: " << count << "\n";
  });

  auto* prim_block = prim->add_subcommand("block", "blocking verdict for a prefix");
  prim_block->add_option("word", word_arg)->required();
  prim_block->add_option("--max-len", cfg.max_len, "witness length bound")->capture_default_str();
  add_rank(prim_block);
  prim_block->callback([&] {
    BlockingVerdict v = blocking_verdict(parse_word(word_arg, cfg.rank), cfg.max_len);
    Json j = blocking_verdict_to_json(v);
    j["candidate"] = word_arg;
    std::string text;
    switch (v.kind) {
      case BlockingVerdict::Kind::Extendable:
        text = "extendable: witness " + format_word(*v.witness);
        break;
      case BlockingVerdict::Kind::BlockedUpTo:
        text = "blocked up to length " + std::to_string(v.bound) + " (" +
               std::to_string(v.nodes) + " extensions tested)";
        break;
      case BlockingVerdict::Kind::BlockedProven:
        text = "blocking word (certified family: " + v.rule + ")";
        break;
    }
    emit(cfg, j, text);
  });

  auto* prim_search = prim->add_subcommand("block-search", "survivor search in rank >= 3");
  prim_search->add_option("--rank", cfg.rank, "rank (>= 3)")->capture_default_str();
  prim_search->add_option("--cand-len", cfg.cand_len, "candidate length bound")->capture_default_str();
  prim_search->add_option("--max-len", cfg.max_len, "witness length bound")->capture_default_str();
  prim_search->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  prim_search->add_option("--out", cfg.out_path, "write the JSON report here");
  prim_search->add_option("--checkpoint", cfg.checkpoint_path, "write progress checkpoints here");
  prim_search->add_option("--resume", cfg.resume_path, "resume from this checkpoint");
  prim_search->add_option("--seed", cfg.seed, "recorded in the report")->capture_default_str();
  prim_search->callback([&] {
    auto t0 = std::chrono::steady_clock::now();
    BlockingReport report = blocking_search(cfg.rank, cfg.cand_len, cfg.max_len, cfg.workers,
                                            cfg.checkpoint_path, cfg.resume_path);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    Json results = Json::array();
    for (const BlockingEntry& e : report.entries) {
      Json r = blocking_verdict_to_json(e.verdict);
      r["candidate"] = format_word(e.candidate);
      results.push_back(r);
    }
    Json survivors = Json::array();
    for (const Word& w : report.survivors) survivors.push_back(format_word(w));
    Json j{{"tool", "foxprim"},
           {"version", kVersion},
           {"seed", cfg.seed},
           {"rank", report.rank},
           {"cand_len", report.cand_len},
           {"max_len", report.max_len},
           {"workers", cfg.workers},
           {"candidates", report.entries.size()},
           {"resumed", report.resumed_entries},
           {"total_nodes", report.total_nodes},
           {"elapsed_ms", ms},
           {"survivors", survivors},
           {"results", results}};
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      if (!out) throw std::runtime_error("cannot write report to " + cfg.out_path);
      out << j.dump(2) << "\n";
    }
    if (cfg.json || cfg.out_path.empty())
      std::cout << j.dump(2) << "\n";
    else
      std::cout << "candidates: " << report.entries.size() << ", survivors: "
                << report.survivors.size() << " (report written to " << cfg.out_path << ")\n";
  });

  // ---- delta --------------------------------------------------------------
  auto* delta = app.add_subcommand("delta", "generalized primitivity machinery");
  delta->require_subcommand(1);

  auto* delta_m2 = delta->add_subcommand("m2", "metabelian rank-2 decision");
  delta_m2->add_option("word", word_arg)->required();
  delta_m2->callback([&] {
    DeltaVerdictM2 v = delta_primitive_m2(parse_word(word_arg, 2));
    Json j;
    std::string text;
    switch (v.kind) {
      case DeltaVerdictM2::Kind::NotInDerivedSubgroup:
        j["verdict"] = text = "not in the derived subgroup";
        break;
      case DeltaVerdictM2::Kind::NotDeltaPrimitive:
        j["verdict"] = "not generating";
        j["quotient"] = laurent_to_json(v.quotient);
        text = "does not generate the augmentation ideal (quotient " + format_laurent(v.quotient) +
               ")";
        break;
      case DeltaVerdictM2::Kind::DeltaPrimitive:
        j["verdict"] = "generating";
        j["sign"] = v.sign;
        j["conjugator"] = v.conjugator;
        text = std::string("generates the augmentation ideal: commutator") +
               (v.sign > 0 ? "" : " inverse") + " conjugated by the monomial (" +
               std::to_string(v.conjugator[0]) + ", " + std::to_string(v.conjugator[1]) + ")";
        break;
    }
    emit(cfg, j, text);
  });

  auto* delta_nec = delta->add_subcommand("necessary", "unimodular linearized matrix?");
  delta_nec->add_option("word", word_arg)->required();
  add_rank(delta_nec);
  delta_nec->callback([&] {
    bool ok = delta_primitive_necessary(parse_word(word_arg, cfg.rank));
    std::string note = cfg.rank >= 4 && cfg.rank % 2 == 0
                           ? " (necessary only: whether the derivatives then generate the "
                             "augmentation ideal is open in even rank >= 4)"
                           : "";
    emit(cfg, Json{{"necessary_condition", ok}},
         (ok ? "passes the mod-Delta^2 necessary condition (determinant +-1)"
             : "fails the mod-Delta^2 necessary condition") +
             note);
  });

  auto* delta_cert = delta->add_subcommand("certify", "verify an inverse certificate");
  delta_cert->add_option("word", word_arg)->required();
  delta_cert->add_option("--inverse", cfg.inverse_path, "JSON matrix file")->required();
  add_rank(delta_cert);
  delta_cert->callback([&] {
    std::ifstream in(cfg.inverse_path);
    if (!in) throw std::runtime_error("cannot read " + cfg.inverse_path);
    Json j = Json::parse(in);
    RingMatrix m = ring_matrix_from_json(j, cfg.rank);
    Word u = parse_word(word_arg, cfg.rank);
    bool ok = verify_inverse_certificate(u, m);
    emit(cfg, Json{{"certified", ok}},
         ok ? "certificate verified: the word is generalized-primitive"
            : "certificate FAILED: the matrix is not a two-sided inverse");
    if (!ok) throw VerificationFailure("certificate rejected");
  });

  auto* delta_odd = delta->add_subcommand("odd", "odd-rank obstruction check");
  delta_odd->add_option("word", word_arg)->required();
  delta_odd->add_option("--rank", cfg.rank, "odd rank")->required();
  delta_odd->callback([&] {
    bool ok = odd_rank_obstruction(parse_word(word_arg, cfg.rank));
    emit(cfg, Json{{"obstructed", ok}},
         "obstructed: linearized matrix is antisymmetric with determinant 0 (odd rank has no "
         "generating derivative vectors; open for even rank >= 4)");
  });

  auto* delta_f2 = delta->add_subcommand("f2", "rank-2 classification");
  delta_f2->add_option("word", word_arg)->required();
  delta_f2->callback([&] {
    bool ok = classify_delta_primitive_f2(parse_word(word_arg, 2));
    emit(cfg, Json{{"delta_primitive", ok}},
         ok ? "generalized-primitive: a conjugate of the basic commutator or its inverse"
            : "not generalized-primitive in rank 2");
  });

  auto* delta_find = delta->add_subcommand("find-inverse", "bounded certificate search");
  delta_find->add_option("word", word_arg)->required();
  std::size_t support_len = 4;
  long long coeff_bound = 3;
  delta_find->add_option("--support-len", support_len, "word length bound for entries")
      ->capture_default_str();
  delta_find->add_option("--coeff-bound", coeff_bound, "coefficient bound")->capture_default_str();
  add_rank(delta_find);
  delta_find->callback([&] {
    auto m = find_inverse_certificate(parse_word(word_arg, cfg.rank), support_len, coeff_bound);
    if (m)
      emit(cfg, ring_matrix_to_json(*m), format_ring_matrix(*m));
    else
      emit(cfg, Json{{"found", false}},
           "no inverse with entries of length <= " + std::to_string(support_len) +
               " and coefficients bounded by " + std::to_string(coeff_bound));
  });

  // ---- verify-paper -------------------------------------------------------
  auto* verify = app.add_subcommand("verify-paper", "run all golden examples and property suites");
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify->add_option("--budget", cfg.budget, "orbit node budget")->capture_default_str();
  verify->callback([&] {
    if (!run_verify_paper(cfg)) throw VerificationFailure("verification suite failed");
  });

  // allow the global --json after any subcommand
  auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
