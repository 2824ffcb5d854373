#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unimodal {

enum class Family {
  partition,
  partition_with_rank,
  overpartition,
  strongly_unimodal,
  left_heavy_overlined,
  m2_left_heavy_overlined,
  m2_left_heavy,
};

inline constexpr Family kAllFamilies[] = {
    Family::partition,           Family::partition_with_rank,   Family::overpartition,
    Family::strongly_unimodal,   Family::left_heavy_overlined,  Family::m2_left_heavy_overlined,
    Family::m2_left_heavy,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

/// A sequence of parts read left to right. Partitions and overpartitions are
/// listed in weakly decreasing order with peak_index 0; the overlined copy of
/// a value comes first among equal parts in that listing.
struct UnimodalObject {
  std::vector<int> parts;
  std::vector<bool> overlined;
  int peak_index = 0;

  int size() const;
  std::string to_string() const;
  friend bool operator==(const UnimodalObject&, const UnimodalObject&) = default;
};

inline constexpr int kEnumerationLimit = 60;

using ObjectVisitor = std::function<void(const UnimodalObject&)>;

/// Calls `visit` once for each object of the family of size n.
void visit_objects(Family family, int n, const ObjectVisitor& visit);
std::vector<UnimodalObject> enumerate(Family family, int n);

/// Shape check written against the definitions, independent of the
/// generators.
bool validate(Family family, const UnimodalObject& obj);
/// The family's rank statistic (0 for plain partitions).
int rank_of(Family family, const UnimodalObject& obj);
/// -1 or +1; only the left-heavy overlined family is signed.
int sign_of(Family family, const UnimodalObject& obj);

/// Signed count.
std::int64_t count(Family family, int n);
/// Signed count by rank; zero entries are omitted.
std::map<int, std::int64_t> count_by_rank(Family family, int n);

/// N(m, n): partitions of n with rank m.
std::int64_t partition_rank_count(int m, int n);
/// u(m, n): strongly unimodal sequences of size n with rank m.
std::int64_t strongly_unimodal_rank_count(int m, int n);

/// Overpartitions of n by Dyson rank (largest part minus number of parts).
std::map<int, std::int64_t> overpartition_rank_counts(int n);
/// Overpartitions of n by M2-rank:
/// ceil(l/2) - #parts + #(non-overlined odd parts) - [l odd and non-overlined].
std::map<int, std::int64_t> overpartition_m2_rank_counts(int n);
/// Partitions of n without repeated odd parts by M2-rank ceil(l/2) - #parts.
std::map<int, std::int64_t> odd_distinct_m2_rank_counts(int n);

}  // namespace unimodal
