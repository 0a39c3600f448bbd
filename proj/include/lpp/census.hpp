#pragma once

// Exhaustive copermanental census over graphs with degree sequence
// (3, 3, 2, ..., 2): one connected dumbbell or theta graph, optionally joined
// with a multiset of disjoint cycles.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpp/algebra.hpp"
#include "lpp/graph.hpp"

namespace lpp {

inline constexpr std::size_t kCensusMinN = 5;
inline constexpr std::size_t kCensusMaxN = 16;

struct Candidate {
  FamilySpec spec;         // bicyclic part alone, or a disjoint union with cycles
  bool connected = false;  // no cycle components
  bool extension = false;  // contains a dumbbell with r = 0
};

// Canonical candidates with n vertices: dumbbells with p <= q, thetas with
// sorted parameters, cycle multisets ascending. Throws OutOfRange unless
// kCensusMinN <= n <= kCensusMaxN.
std::vector<Candidate> enumerate_candidates(std::size_t n, bool include_r0 = true);

struct CensusRecord {
  std::size_t n = 0;
  std::string description;
  MatrixKind kind = MatrixKind::Laplacian;
  // Decimal coefficients from x^n down to x^0, so the first entry is "1".
  std::vector<std::string> coefficients;
  std::string fingerprint;  // lowercase hex SHA-256 of the serialization below
  bool extension = false;
  bool connected = false;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Comma-joined coefficients, the input to the fingerprint hash.
std::string canonical_serialization(const std::vector<std::string>& coefficients);
std::string fingerprint(const std::vector<std::string>& coefficients);

struct Collision {
  std::size_t first = 0;  // record indices, first < second
  std::size_t second = 0;
};

struct CensusReport {
  std::size_t n_min = 0, n_max = 0;
  std::vector<MatrixKind> kinds;
  std::vector<CensusRecord> records;  // sorted by (n, kind, fingerprint, description)
  std::vector<Collision> collisions;  // coefficient-equal, distinct descriptions
  std::size_t hash_conflicts = 0;     // equal fingerprints with unequal coefficients

  // Collisions involving a connected dumbbell or theta. Without extensions,
  // pairs touching an r = 0 dumbbell record are skipped.
  std::vector<Collision> theorem_violations(bool include_extensions = true) const;
};

struct CensusOptions {
  std::size_t n_min = kCensusMinN;
  std::size_t n_max = 12;
  std::vector<MatrixKind> kinds{MatrixKind::Laplacian};
  bool include_r0 = true;
  unsigned threads = 1;
};

// Throws OutOfRange for a range outside [kCensusMinN, kCensusMaxN].
CensusReport run_census(const CensusOptions& options);

std::string catalog_line(const CensusRecord& record);
CensusRecord record_from_json(const nlohmann::json& j);

// JSONL, one record per line in report order. Throws IoError.
void write_catalog(const CensusReport& report, const std::filesystem::path& path);
void write_catalog(const std::vector<CensusRecord>& records, std::ostream& out);
// Throws IoError, or ParseError carrying the 1-based line number.
std::vector<CensusRecord> read_catalog(const std::filesystem::path& path);
std::vector<CensusRecord> read_catalog(std::istream& in);

}  // namespace lpp
