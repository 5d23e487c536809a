#include "jd/tables.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace jd {

EmitFormat emit_format_from_string(const std::string& s) {
  if (s == "text") return EmitFormat::Text;
  if (s == "csv") return EmitFormat::Csv;
  if (s == "records") return EmitFormat::Records;
  throw ValidationError("unknown emit format: " + s);
}

namespace {

std::string dims_cache_key(Support support, int degree, QuotientFlags flags) {
  std::ostringstream os;
  os << "quotient/" << kEngineVersion << "/" << to_string(support) << "/"
     << degree << "/" << flags.tag();
  return os.str();
}

std::string enum_cache_key(Support support, int degree) {
  std::ostringstream os;
  os << "enum/" << kEngineVersion << "/" << to_string(support) << "/" << degree;
  return os.str();
}

// Payload: "generators=<n>" then one basis record per line.
std::optional<int> parse_dim_payload(const std::string& payload) {
  std::istringstream in(payload);
  std::string line;
  if (!std::getline(in, line) || line.rfind("generators=", 0) != 0)
    return std::nullopt;
  int dim = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      parse_record(line);
    } catch (const ParseError&) {
      return std::nullopt;
    }
    ++dim;
  }
  return dim;
}

}  // namespace

DimensionTable compute_dimension_table(Support support, int max_degree,
                                       QuotientFlags flags, DiskCache* cache,
                                       int jobs) {
  const auto start = std::chrono::steady_clock::now();
  DimensionTable table;
  table.support = support;
  table.flags = flags;

  EnumerateOptions options;
  options.jobs = jobs;
  if (max_degree > options.budget.max_degree(support))
    throw BudgetExceeded("dims: max degree " + std::to_string(max_degree) +
                         " exceeds the budget for " + to_string(support) +
                         " support (" +
                         std::to_string(options.budget.max_degree(support)) +
                         ")");

  int cumulative = 0;
  for (int m = 0; m <= max_degree; ++m) {
    int dim = -1;
    const std::string key = dims_cache_key(support, m, flags);
    if (cache) {
      if (const auto payload = cache->get(key)) {
        if (const auto cached = parse_dim_payload(*payload)) dim = *cached;
      }
    }
    if (dim < 0) {
      const QuotientSpace q = build_quotient(support, m, flags, options);
      dim = q.dim();
      if (cache) {
        std::ostringstream payload;
        payload << "generators=" << q.generators.size() << '\n';
        for (const CanonKey& b : q.basis)
          payload << to_record({b, Sign::Plus}) << '\n';
        cache->put(key, payload.str());
      }
    }
    cumulative += dim;
    table.rows.push_back({m, dim, cumulative});
  }

  table.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return table;
}

std::string emit(const DimensionTable& table, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::Text: {
      os << "# jdcalc " << table.engine_version << "  support="
         << to_string(table.support) << "  fi=" << (table.flags.fi ? "on" : "off")
         << "  stu=" << (table.flags.stu ? "on" : "off") << "\n";
      os << std::left << std::setw(8) << "degree" << std::setw(8) << "dim"
         << "cumulative\n";
      for (const DimensionRow& r : table.rows)
        os << std::left << std::setw(8) << r.degree << std::setw(8) << r.dim
           << r.cumulative << "\n";
      break;
    }
    case EmitFormat::Csv: {
      os << "degree,dim,cumulative\n";
      for (const DimensionRow& r : table.rows)
        os << r.degree << ',' << r.dim << ',' << r.cumulative << "\n";
      break;
    }
    case EmitFormat::Records: {
      nlohmann::ordered_json j;
      j["schema"] = "jdcalc.dims.v1";
      j["engine_version"] = table.engine_version;
      j["support"] = to_string(table.support);
      j["flags"] = {{"fi", table.flags.fi}, {"stu", table.flags.stu}};
      j["rows"] = nlohmann::ordered_json::array();
      for (const DimensionRow& r : table.rows)
        j["rows"].push_back({{"degree", r.degree},
                             {"dim", r.dim},
                             {"cumulative", r.cumulative}});
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string emit_enumeration(Support support, int degree, EmitFormat format,
                             DiskCache* cache, int jobs) {
  std::vector<std::string> records;
  const std::string key = enum_cache_key(support, degree);
  bool from_cache = false;
  if (cache) {
    if (const auto payload = cache->get(key)) {
      std::istringstream in(*payload);
      std::string line;
      bool ok = true;
      std::vector<std::string> parsed;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
          parse_record(line);
        } catch (const ParseError&) {
          ok = false;
          break;
        }
        parsed.push_back(line);
      }
      if (ok) {
        records = std::move(parsed);
        from_cache = true;
      }
    }
  }
  if (!from_cache) {
    EnumerateOptions options;
    options.jobs = jobs;
    for (const CanonicalDiagram& cd : enumerate_diagrams(support, degree, options))
      records.push_back(to_record(cd));
    if (cache) {
      std::ostringstream payload;
      for (const std::string& r : records) payload << r << '\n';
      cache->put(key, payload.str());
    }
  }

  std::ostringstream os;
  switch (format) {
    case EmitFormat::Text:
      for (const std::string& r : records) os << r << "\n";
      break;
    case EmitFormat::Csv:
      os << "index,record\n";
      for (size_t i = 0; i < records.size(); ++i)
        os << i << ',' << records[i] << "\n";
      break;
    case EmitFormat::Records: {
      nlohmann::ordered_json j;
      j["schema"] = "jdcalc.enum.v1";
      j["engine_version"] = kEngineVersion;
      j["support"] = to_string(support);
      j["degree"] = degree;
      j["count"] = records.size();
      j["items"] = records;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace jd
