#include "lpp/census.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "lpp/closed_forms.hpp"
#include "lpp/error.hpp"
#include "lpp/parallel.hpp"
#include "lpp/permanent.hpp"

namespace lpp {

namespace {

void check_census_n(std::size_t n) {
  if (n < kCensusMinN || n > kCensusMaxN) {
    throw OutOfRange("census vertex count " + std::to_string(n) + " outside [" + std::to_string(kCensusMinN) +
                     ", " + std::to_string(kCensusMaxN) + "]");
  }
}

// Multisets of cycle lengths >= 3 summing to total, each ascending.
void cycle_partitions(long total, long smallest, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (long k = smallest; k <= total; ++k) {
    if (total - k != 0 && total - k < k) continue;
    current.push_back(k);
    cycle_partitions(total - k, k, current, out);
    current.pop_back();
  }
}

bool is_r0_dumbbell(const FamilySpec& s) { return s.tag == FamilySpec::Tag::Dumbbell && s.params[2] == 0; }

std::vector<std::string> descending_coefficients(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back(it->get_str());
  return out;
}

MatrixKind parse_record_kind(const std::string& text, std::size_t line) {
  if (text == "laplacian") return MatrixKind::Laplacian;
  if (text == "signless") return MatrixKind::SignlessLaplacian;
  throw ParseError("unknown matrix kind '" + text + "'", line);
}

}  // namespace

std::vector<Candidate> enumerate_candidates(std::size_t n, bool include_r0) {
  check_census_n(n);
  std::vector<Candidate> out;
  // The bicyclic part takes k vertices; the remaining n - k form cycles.
  for (std::size_t k = 4; k <= n; ++k) {
    std::vector<std::vector<long>> partitions;
    std::vector<long> current;
    cycle_partitions(static_cast<long>(n - k), 3, current, partitions);
    if (partitions.empty()) continue;
    std::vector<FamilySpec> cores;
    if (k >= 6) {
      for (auto& d : canonical_family_members(FamilySpec::Tag::Dumbbell, k, include_r0)) cores.push_back(d);
    }
    for (auto& t : canonical_family_members(FamilySpec::Tag::Theta, k)) cores.push_back(t);
    for (const auto& core : cores) {
      for (const auto& cycles : partitions) {
        Candidate c;
        c.connected = cycles.empty();
        c.extension = is_r0_dumbbell(core);
        if (c.connected) {
          c.spec = core;
        } else {
          std::vector<FamilySpec> parts{core};
          for (long len : cycles) parts.push_back(FamilySpec::cycle(len));
          c.spec = FamilySpec::disjoint_union(std::move(parts));
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::string canonical_serialization(const std::vector<std::string>& coefficients) {
  std::string s;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) s += ',';
    s += coefficients[i];
  }
  return s;
}

std::string fingerprint(const std::vector<std::string>& coefficients) {
  const std::string data = canonical_serialization(coefficients);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::vector<Collision> CensusReport::theorem_violations(bool include_extensions) const {
  std::vector<Collision> out;
  for (const auto& c : collisions) {
    const auto& a = records[c.first];
    const auto& b = records[c.second];
    if (!include_extensions && (a.extension || b.extension)) continue;
    if (a.connected || b.connected) out.push_back(c);
  }
  return out;
}

CensusReport run_census(const CensusOptions& options) {
  check_census_n(options.n_min);
  check_census_n(options.n_max);
  if (options.n_min > options.n_max) throw OutOfRange("census range is empty");

  CensusReport report;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  report.kinds = options.kinds;

  std::vector<std::pair<std::size_t, Candidate>> candidates;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    for (auto& c : enumerate_candidates(n, options.include_r0)) candidates.emplace_back(n, std::move(c));
  }

  // Connected pieces are computed once each; unions are products.
  std::map<std::string, FamilySpec> pieces;
  for (const auto& [n, c] : candidates) {
    if (c.spec.tag == FamilySpec::Tag::DisjointUnion) {
      for (const auto& part : c.spec.parts) pieces.emplace(to_string(part), part);
    } else {
      pieces.emplace(to_string(c.spec), c.spec);
    }
  }
  std::vector<std::pair<std::string, MatrixKind>> jobs;
  for (MatrixKind kind : options.kinds) {
    for (const auto& [key, spec] : pieces) jobs.emplace_back(key, kind);
  }
  std::vector<IntPoly> job_polys(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    job_polys[i] = perm_poly(generate(pieces.at(jobs[i].first)), jobs[i].second);
  });
  std::map<std::pair<std::string, MatrixKind>, const IntPoly*> cache;
  for (std::size_t i = 0; i < jobs.size(); ++i) cache[jobs[i]] = &job_polys[i];

  for (MatrixKind kind : options.kinds) {
    for (const auto& [n, c] : candidates) {
      IntPoly poly{1};
      if (c.spec.tag == FamilySpec::Tag::DisjointUnion) {
        for (const auto& part : c.spec.parts) poly *= *cache.at({to_string(part), kind});
      } else {
        poly = *cache.at({to_string(c.spec), kind});
      }
      CensusRecord rec;
      rec.n = n;
      rec.description = to_string(c.spec);
      rec.kind = kind;
      rec.coefficients = descending_coefficients(poly);
      rec.fingerprint = fingerprint(rec.coefficients);
      rec.extension = c.extension;
      rec.connected = c.connected;
      report.records.push_back(std::move(rec));
    }
  }

  std::sort(report.records.begin(), report.records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::tie(a.n, a.kind, a.fingerprint, a.description) < std::tie(b.n, b.kind, b.fingerprint, b.description);
  });

  // Records sharing (n, kind, fingerprint) are adjacent after sorting; every
  // pair in a bucket is compared coefficientwise.
  const auto& recs = report.records;
  for (std::size_t lo = 0; lo < recs.size();) {
    std::size_t hi = lo + 1;
    while (hi < recs.size() && recs[hi].n == recs[lo].n && recs[hi].kind == recs[lo].kind &&
           recs[hi].fingerprint == recs[lo].fingerprint) {
      ++hi;
    }
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) {
        if (recs[i].coefficients == recs[j].coefficients) {
          report.collisions.push_back({i, j});
        } else {
          ++report.hash_conflicts;
        }
      }
    }
    lo = hi;
  }
  return report;
}

std::string catalog_line(const CensusRecord& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["description"] = r.description;
  j["kind"] = std::string(to_string(r.kind));
  j["coefficients"] = r.coefficients;
  j["fingerprint"] = r.fingerprint;
  j["extension"] = r.extension;
  j["connected"] = r.connected;
  return j.dump();
}

CensusRecord record_from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.n = j.at("n").get<std::size_t>();
  r.description = j.at("description").get<std::string>();
  r.kind = parse_record_kind(j.at("kind").get<std::string>(), 0);
  r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.extension = j.at("extension").get<bool>();
  r.connected = j.at("connected").get<bool>();
  if (r.coefficients.size() != r.n + 1 || r.coefficients.front() != "1") {
    throw ParseError("coefficient vector must have n + 1 entries starting with \"1\"");
  }
  return r;
}

void write_catalog(const std::vector<CensusRecord>& records, std::ostream& out) {
  for (const auto& r : records) out << catalog_line(r) << '\n';
}

void write_catalog(const CensusReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_catalog(report.records, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<CensusRecord> read_catalog(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), number);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
  }
  return out;
}

std::vector<CensusRecord> read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_catalog(in);
}

}  // namespace lpp
