#include "khtrans/errors.hpp"
#include "khtrans/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

namespace {

struct Flags {
  std::string braid;
  std::optional<int> strands;
  std::string coeff = "z";
  bool reduced = false;
  int marked = 0;
  bool json = false;
  int max_crossings = 20;
  std::string cache;
  int threads = 1;
  bool timing = false;
};

void add_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--braid", f.braid, "braid word, e.g. \"1 1 -2\"")->required();
  sub.add_option("--strands", f.strands, "number of strands (default: max |letter| + 1)")->check(CLI::PositiveNumber);
  sub.add_option("--coeff", f.coeff, "coefficients")->check(CLI::IsMember({"z", "q", "f2"}));
  auto* reduced = sub.add_flag("--reduced", f.reduced, "reduced theory");
  sub.add_option("--marked", f.marked, "arc carrying the base point of the reduced theory")
      ->needs(reduced)
      ->check(CLI::NonNegativeNumber);
  sub.add_flag("--json", f.json, "emit JSON");
  sub.add_option("--max-crossings", f.max_crossings, "refuse diagrams with more crossings")
      ->check(CLI::PositiveNumber);
  sub.add_option("--cache", f.cache, "directory for cached reports");
  sub.add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  sub.add_flag("--timing", f.timing, "include the elapsed time in the report");
}

khtrans::CoeffRing ring_of(const std::string& s) {
  if (s == "q")
    return khtrans::CoeffRing::Rationals;
  if (s == "f2")
    return khtrans::CoeffRing::FieldTwo;
  return khtrans::CoeffRing::Integers;
}

int run(const std::string& command, const Flags& f) {
  using namespace khtrans;
  Request request;
  request.command = command;
  request.word = parse_braid_word(f.braid, f.strands);
  request.options.ring = ring_of(f.coeff);
  request.options.variant = f.reduced ? Variant::Reduced : Variant::Standard;
  request.options.marked_arc = f.marked;
  request.options.max_crossings = f.max_crossings;
  request.threads = f.threads;
  if (static_cast<int>(request.word.size()) > f.max_crossings)
    throw ResourceLimitError(std::to_string(request.word.size()) + " crossings exceed --max-crossings " +
                             std::to_string(f.max_crossings));

  const auto start = std::chrono::steady_clock::now();
  std::optional<ReportCache> cache;
  std::optional<Report> report;
  if (!f.cache.empty()) {
    cache.emplace(f.cache);
    report = cache->load(request);
  }
  if (!report) {
    report = compute_report(request, [](const std::string& m) { std::cerr << "khtrans: " << m << "\n"; });
    if (cache)
      cache->store(request, *report);
  }
  if (f.timing)
    report->elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << (f.json ? render_json(*report) : render_text(*report));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology and the transverse invariant psi of closed braids"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"sl", "self-linking number and component count"},
      {"kh", "bigraded Khovanov homology"},
      {"psi", "status of the transverse class psi"},
      {"s", "Rasmussen s-invariant of a knot"},
      {"euler", "graded Euler characteristic"},
      {"info", "sizes of the cube of resolutions"},
  };
  for (const auto& [name, help] : commands)
    add_flags(*app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const khtrans::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const khtrans::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const khtrans::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
