#pragma once

// Report-style checkers for homomorphism-type identities. Every check runs
// over domain basis pairs/triples; the Jordan batteries are polarized so
// they never divide by 2 and stay complete over rings with 2-torsion.

#include "trialg/linmap.hpp"

#include <cstdint>
#include <map>

namespace trialg {

inline constexpr std::size_t kMaxWitnesses = 10;

struct Violation {
  std::string identity;
  std::vector<Element> inputs;
  Element lhs;
  Element rhs;
};

struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Violation> violations;  // first kMaxWitnesses only
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> notes;

  explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

  /// Compares lhs and rhs, recording a violation when they differ.
  bool expect_equal(const char* identity, std::vector<Element> inputs, const Element& lhs, const Element& rhs);
  void fail(Violation v);
  void fail_note(std::string note);
  void absorb(const CheckReport& sub);
};

CheckReport is_homomorphism(const LinMap& f);
CheckReport is_antihomomorphism(const LinMap& f);
/// (a) squares, (b) Jordan products of pairs, (c) xyx on pairs, (d) xyz + zyx on triples.
CheckReport is_jordan_homomorphism(const LinMap& f);

CheckReport is_derivation(const LinMap& d, const Bimodule& m);
CheckReport is_antiderivation(const LinMap& d, const Bimodule& m);
CheckReport is_jordan_derivation(const LinMap& d, const Bimodule& m);

/// Module axioms of the actions on basis triples, and the unit acting trivially.
CheckReport check_bimodule(const Bimodule& m);

/// Associativity on all basis triples when rank <= exhaustive_limit, else `samples` seeded triples.
CheckReport check_associativity(const AlgebraPtr& a, std::size_t exhaustive_limit = 30, std::size_t samples = 1000,
                                std::uint64_t seed = 1);
CheckReport check_unit_laws(const AlgebraPtr& a);
/// Peirce completeness and orthogonal idempotents for T_n(R).
CheckReport check_peirce(const AlgebraPtr& a);

}  // namespace trialg
