// Command-line front end: dimension tables, the verification bundle,
// and serialized diagram listings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exceeded.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jd/tables.hpp"
#include "jd/verify.hpp"

namespace {

jd::Support parse_support(const std::string& s) {
  if (s == "circle") return jd::Support::Circle;
  if (s == "empty") return jd::Support::Empty;
  throw CLI::ValidationError("--support", "must be 'circle' or 'empty'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jdcalc: exact dimensions of uni-trivalent diagram spaces"};
  app.require_subcommand(1);

  std::string cache_dir;
  int jobs = 1;
  app.add_option("--cache-dir", cache_dir,
                 "cache directory (default: JDCALC_CACHE_DIR or the user cache dir)");
  app.add_option("--jobs", jobs, "worker threads for enumeration")
      ->check(CLI::Range(1, 256));

  std::string support_name = "circle";
  int max_degree = 0;
  bool fi = false;
  bool no_stu = false;
  std::string emit_name = "text";

  CLI::App* dims = app.add_subcommand("dims", "compute a dimension table");
  dims->add_option("--support", support_name, "circle or empty")->required();
  dims->add_option("--max-degree", max_degree, "top degree of the table")
      ->required();
  dims->add_flag("--fi", fi, "also quotient by framing independence");
  dims->add_flag("--no-stu", no_stu, "drop the separate STU family");
  dims->add_option("--emit", emit_name, "text, csv or records");

  CLI::App* verify = app.add_subcommand("verify", "run the verification bundle");
  int telescope_oracles = 100;
  verify->add_option("--telescope-oracles", telescope_oracles,
                     "randomized oracles for the telescoping check");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "list canonical diagrams of one degree");
  std::string enum_support_name = "circle";
  int enum_degree = 0;
  std::string enum_emit_name = "text";
  enumerate->add_option("--support", enum_support_name, "circle or empty")
      ->required();
  enumerate->add_option("--degree", enum_degree, "diagram degree")->required();
  enumerate->add_option("--emit", enum_emit_name, "text, csv or records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    jd::DiskCache cache(cache_dir.empty() ? jd::DiskCache::default_dir()
                                          : std::filesystem::path(cache_dir));

    if (dims->parsed()) {
      jd::DimensionTable table = jd::compute_dimension_table(
          parse_support(support_name), max_degree,
          jd::QuotientFlags{.fi = fi, .stu = !no_stu}, &cache, jobs);
      std::cout << jd::emit(table, jd::emit_format_from_string(emit_name));
      return 0;
    }

    if (verify->parsed()) {
      jd::VerifyOptions options;
      options.jobs = jobs;
      options.telescope_oracles = telescope_oracles;
      const jd::VerifyReport report = jd::run_verify(options);
      std::cout << jd::format_report(report);
      return report.all_pass() ? 0 : 1;
    }

    if (enumerate->parsed()) {
      std::cout << jd::emit_enumeration(
          parse_support(enum_support_name), enum_degree,
          jd::emit_format_from_string(enum_emit_name), &cache, jobs);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "jdcalc: " << e.what() << "\n";
    return 2;
  } catch (const jd::BudgetExceeded& e) {
    std::cerr << "jdcalc: " << e.what() << "\n";
    return 3;
  } catch (const jd::ValidationError& e) {
    std::cerr << "jdcalc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "jdcalc: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
