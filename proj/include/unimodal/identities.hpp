#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unimodal/qproduct.hpp"

namespace unimodal {

/// One comparison inside an identity: both sides already multiplied by the
/// clearing factor, as Laurent series in q over zeta-Laurent polynomials.
struct SidePair {
  std::string label;
  Laurent<ZetaLaurent> lhs;
  Laurent<ZetaLaurent> rhs;
};

struct IdentityRecord {
  std::string key;
  std::string description;
  std::string clearing;  // human-readable clearing factor, "1" when none
  int default_order = 40;
  /// Builds every side pair through q^order. May append notes.
  std::function<std::vector<SidePair>(int order, std::vector<std::string>& notes)> build;
};

/// All catalog entries, sorted by key.
const std::vector<IdentityRecord>& identity_catalog();

/// Throws unknown-identity for keys outside the catalog.
const IdentityRecord& find_identity(std::string_view key);

struct Mismatch {
  std::string label;
  int m = 0;  // zeta exponent
  int n = 0;  // q exponent
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string key;
  bool pass = false;
  int order = 0;
  std::size_t pairs = 0;
  std::optional<Mismatch> mismatch;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  std::string error;  // set when building a side threw
};

/// Adds delta * zeta^m q^n to the right side of one pair before comparing.
struct Perturbation {
  std::size_t pair = 0;
  int m = 0;
  std::optional<int> n;  // defaults to order / 2
  long delta = 1;
};

/// First (q exponent, zeta exponent) where the sides differ through q^order.
std::optional<Mismatch> compare_sides(const SidePair& p, int order);

VerificationReport verify(std::string_view key, int order, const std::optional<Perturbation>& perturb = {});

/// Every catalog entry at `order` (or its default when order < 0), spread
/// over `threads` workers; reports come back in key order.
std::vector<VerificationReport> verify_all(int order = -1, unsigned threads = 0);

/// A rational specialization of one of the classical lemmas. Parameters in
/// lemma order: heine (a,b,c,t); watson (a,b,c,d,e) or (a,b,d,e) for the
/// c -> infinity limit; ab621 (a,b,A,B); ab6312 (a,b,c).
struct ClassicalSpec {
  std::vector<Monomial<Rational>> params;
  int step = 1;
};

/// Checks a classical lemma at the given specializations. Specializations
/// that hit a singular or non-invertible factor are skipped with a note;
/// fewer than five valid ones fail the report.
VerificationReport verify_classical(std::string_view key, const std::vector<ClassicalSpec>& specs, int order);

/// The default rational specializations used by the catalog.
std::vector<ClassicalSpec> default_classical_specs(std::string_view key);

}  // namespace unimodal
