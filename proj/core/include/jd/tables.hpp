#ifndef JD_TABLES_HPP
#define JD_TABLES_HPP

#include <string>
#include <vector>

#include "jd/cache.hpp"
#include "jd/linalg.hpp"

namespace jd {

struct DimensionRow {
  int degree = 0;
  int dim = 0;
  int cumulative = 0;
};

struct DimensionTable {
  Support support = Support::Empty;
  QuotientFlags flags;
  std::vector<DimensionRow> rows;  // contiguous from degree 0
  std::string engine_version = kEngineVersion;
  double elapsed_seconds = 0;  // never emitted: output must be byte-stable
};

enum class EmitFormat { Text, Csv, Records };

EmitFormat emit_format_from_string(const std::string& s);

// Builds the table, consulting/filling the cache when one is given.
DimensionTable compute_dimension_table(Support support, int max_degree,
                                       QuotientFlags flags,
                                       DiskCache* cache = nullptr, int jobs = 1);

std::string emit(const DimensionTable& table, EmitFormat format);

// Deterministic serialized enumeration listing (one jd1 record per
// line for Text; Csv and Records wrap the same records).
std::string emit_enumeration(Support support, int degree, EmitFormat format,
                             DiskCache* cache = nullptr, int jobs = 1);

}  // namespace jd

#endif
