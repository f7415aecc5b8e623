#include <doctest.h>

#include "oppo/harness.hpp"
#include "oppo/instances.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace oppo;

namespace {

// regression constants produced by the enumerator itself on first run
// (n = 1 and n = 2 additionally check out by hand: the single point, and
// {antichain+identity, chain+swap in both labelings})
constexpr std::size_t kLabeledCounts[] = {1, 3, 16, 151};
constexpr std::size_t kIsoCounts[] = {1, 2, 4, 11};

// test-side canonical encoding, independent of the library's
std::string canonical_encoding(const ClassCStructure& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::string best;
  do {
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[perm[k]] = k;
    std::string enc;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        enc += s.leq(perm[i], perm[j]) ? '1' : '0';
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      enc += static_cast<char>('0' + inverse[s.neg(perm[i])]);
    }
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string identity_encoding(const ClassCStructure& s) {
  const std::size_t n = s.size();
  std::string enc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) enc += s.leq(i, j) ? '1' : '0';
  }
  for (std::size_t i = 0; i < n; ++i) enc += static_cast<char>('0' + s.neg(i));
  return enc;
}

}  // namespace

TEST_CASE("both poset generators agree on small sizes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(detail::poset_keys_naive(n) == detail::poset_keys_backtracking(n));
  }
}

TEST_CASE("structure counts match the frozen regression constants") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(count_structures(n, false) == kLabeledCounts[n - 1]);
    CHECK(count_structures(n, true) == kIsoCounts[n - 1]);
  }
}

TEST_CASE("the single-point structure is forced") {
  auto all = enumerate_all(1, false);
  REQUIRE(all.size() == 1);
  CHECK(all[0].neg(0) == 0);
  CHECK(all[0].leq(0, 0));
  CHECK(all[0].zero_indices() == std::vector<std::size_t>{0});
}

TEST_CASE("the labeled stream on three points contains the three-valued chain") {
  ClassCStructure t3 = three_valued();
  bool found = false;
  enumerate_structures(3, false, [&](const ClassCStructure& s) {
    bool same = s.raw().leq == t3.raw().leq && s.raw().neg == t3.raw().neg;
    if (same) found = true;
    return !same;
  });
  CHECK(found);
}

TEST_CASE("every enumerated structure passes validation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    enumerate_structures(n, false, [&](const ClassCStructure& s) {
      CHECK(validate_axioms(s.raw()).all_ok());
      return true;
    });
  }
}

TEST_CASE("representatives partition the labeled stream into isomorphism classes") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto labeled = enumerate_all(n, false);
    auto reps = enumerate_all(n, true);

    std::set<std::string> rep_encodings;
    for (const auto& r : reps) {
      // a representative is its own canonical form
      CHECK(identity_encoding(r) == canonical_encoding(r));
      rep_encodings.insert(identity_encoding(r));
    }
    CHECK(rep_encodings.size() == reps.size());

    // every labeled structure maps onto exactly one representative
    std::map<std::string, std::size_t> class_sizes;
    for (const auto& s : labeled) ++class_sizes[canonical_encoding(s)];
    CHECK(class_sizes.size() == reps.size());
    for (const auto& [enc, size] : class_sizes) {
      CHECK(rep_encodings.count(enc) == 1);
    }

    // and the representative stream is a subset of the labeled stream
    std::set<std::string> labeled_encodings;
    for (const auto& s : labeled) labeled_encodings.insert(identity_encoding(s));
    for (const auto& enc : rep_encodings) CHECK(labeled_encodings.count(enc) == 1);
  }
}

TEST_CASE("enumeration refuses out-of-range sizes") {
  CHECK_THROWS_AS(count_structures(0, false), std::invalid_argument);
  CHECK_THROWS_AS(count_structures(7, false), std::invalid_argument);
  EnumerationConfig cfg;
  cfg.max_size = 9;
  CHECK_THROWS_AS(sweep_theorems(cfg), std::invalid_argument);
}

TEST_CASE("the square sweep up to four elements finds no violation") {
  EnumerationConfig cfg;
  cfg.max_size = 4;
  SweepReport rep = sweep_theorems(cfg);
  CHECK(rep.total_violations() == 0);
  CHECK(rep.claims.size() == 6);
  REQUIRE(rep.structure_counts.size() == 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(rep.structure_counts[n - 1] ==
          std::pair<std::size_t, std::size_t>{n, kLabeledCounts[n - 1]});
  }
  // counts grow with the size bound
  for (std::size_t k = 1; k < rep.structure_counts.size(); ++k) {
    CHECK(rep.structure_counts[k].second >= rep.structure_counts[k - 1].second);
  }
}

TEST_CASE("the cube sweep violates exactly the two rear claims under forward import") {
  EnumerationConfig cfg;
  cfg.max_size = 3;
  cfg.shapes = {Shape::Cube};
  SweepReport rep = sweep_theorems(cfg);
  REQUIRE(rep.claims.size() == 16);

  for (const auto& c : rep.claims) {
    if (c.claim.hypothesis_sensitive) {
      CHECK(c.violations > 0);
      REQUIRE(!c.witnesses.empty());
    } else {
      CHECK(c.violations == 0);
    }
  }

  // witnesses replay: re-evaluate the claim at the recorded point
  for (const auto& c : rep.claims) {
    for (const auto& w : c.witnesses) {
      std::size_t index = 0;
      bool checked = false;
      enumerate_structures(w.size, false, [&](const ClassCStructure& s) {
        if (index++ != w.structure_index) return true;
        StatementContext ctx{&s, w.p, w.q};
        CHECK(!relation_holds_at(eval_statement(ctx, c.claim.s1),
                                 eval_statement(ctx, c.claim.s2), c.claim.kind));
        checked = true;
        return false;
      });
      CHECK(checked);
    }
  }
}

TEST_CASE("a T3 witness for the rear cube claims appears in the sweep") {
  EnumerationConfig cfg;
  cfg.max_size = 3;
  cfg.shapes = {Shape::Cube};
  SweepReport rep = sweep_theorems(cfg);

  // locate T3 in the labeled stream
  ClassCStructure t3 = three_valued();
  std::size_t t3_index = 0;
  std::size_t index = 0;
  bool found = false;
  enumerate_structures(3, false, [&](const ClassCStructure& s) {
    if (s.raw().leq == t3.raw().leq && s.raw().neg == t3.raw().neg) {
      t3_index = index;
      found = true;
      return false;
    }
    ++index;
    return true;
  });
  REQUIRE(found);

  for (const auto& c : rep.claims) {
    if (!c.claim.hypothesis_sensitive) continue;
    bool has_t3_witness = false;
    for (const auto& w : c.witnesses) {
      if (w.size == 3 && w.structure_index == t3_index) has_t3_witness = true;
    }
    CHECK(has_t3_witness);
  }
}

TEST_CASE("adding backward import clears the cube sweep") {
  EnumerationConfig cfg;
  cfg.max_size = 4;
  cfg.shapes = {Shape::Cube};
  cfg.hypothesis.import_backward = true;
  SweepReport rep = sweep_theorems(cfg);
  CHECK(rep.total_violations() == 0);
  // joint forward+backward import is in fact unsatisfiable in this class:
  // z < P < neg(z') squeezes z = neg(z') through the antitone law and
  // antisymmetry, so every admissible set is empty
  for (const auto& c : rep.claims) CHECK(c.admissible_points == 0);
}

TEST_CASE("backward import alone rescues the rear face claims") {
  // the rear face is the front face at (neg P, neg Q); a zero strictly
  // below neg P is exactly what its proof route needs
  ClassCStructure t3 = three_valued();
  Hypothesis bwd;
  bwd.import_backward = true;

  PairClassification ae = classify_pair(t3, StatementKind::a, StatementKind::e, bwd);
  CHECK(ae.admissible_points == 3);
  CHECK(std::count(ae.relations.begin(), ae.relations.end(), RelationKind::Contrary) == 1);

  PairClassification io = classify_pair(t3, StatementKind::i, StatementKind::o, bwd);
  CHECK(std::count(io.relations.begin(), io.relations.end(), RelationKind::Subcontrary) ==
        1);

  // and exhaustively: no counterexample on any structure with up to 4 points
  Claim contrary_ae{RelationKind::Contrary, StatementKind::a, StatementKind::e, bwd, true};
  Claim subcontrary_io{RelationKind::Subcontrary, StatementKind::i, StatementKind::o, bwd,
                       true};
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_structures(n, false, [&](const ClassCStructure& s) {
      CHECK(!counterexample_search(s, contrary_ae, bwd));
      CHECK(!counterexample_search(s, subcontrary_io, bwd));
      return true;
    });
  }
}

TEST_CASE("sweep reports are identical across runs and worker counts") {
  EnumerationConfig cfg;
  cfg.max_size = 3;
  cfg.shapes = {Shape::Square, Shape::Cube, Shape::Hexagon};

  SweepReport once = sweep_theorems(cfg);
  SweepReport again = sweep_theorems(cfg);
  CHECK(once.to_text() == again.to_text());

  cfg.jobs = 4;
  SweepReport parallel = sweep_theorems(cfg);
  CHECK(once.to_text() == parallel.to_text());
}

TEST_CASE("sampled matrix checks pass with the default seed") {
  SampleConfig cfg;
  cfg.kind = InstanceKind::Matrix;
  cfg.samples = 200;
  cfg.dimension = 2;
  SweepReport rep = sample_check_instance(cfg);
  CHECK(rep.total_property_failures() == 0);
  CHECK(rep.total_violations() == 0);
  CHECK(rep.properties.size() == 7);
  CHECK(sample_check_instance(cfg).to_text() == rep.to_text());
}

TEST_CASE("sampled negation checks pass for the square generator") {
  SampleConfig cfg;
  cfg.kind = InstanceKind::Negation;
  cfg.phi_power = 2.0;
  cfg.grid = 2000;
  SweepReport rep = sample_check_instance(cfg);
  CHECK(rep.total_property_failures() == 0);
  bool involution_seen = false;
  for (const auto& p : rep.properties) {
    if (p.name == "involution") {
      involution_seen = true;
      CHECK(p.max_error <= 1e-9);
    }
  }
  CHECK(involution_seen);
}

TEST_CASE("the identity generator reproduces the standard negation exactly") {
  SampleConfig cfg;
  cfg.kind = InstanceKind::Negation;
  cfg.phi_power = 1.0;
  cfg.grid = 2000;
  SweepReport rep = sample_check_instance(cfg);
  CHECK(rep.total_property_failures() == 0);
  bool standard_seen = false;
  for (const auto& p : rep.properties) {
    if (p.name == "standard-negation-exact") {
      standard_seen = true;
      CHECK(p.failures == 0);
    }
  }
  CHECK(standard_seen);
}
