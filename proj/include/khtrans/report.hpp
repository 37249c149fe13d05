#pragma once

#include "khtrans/braid.hpp"
#include "khtrans/complex.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace khtrans {

inline constexpr const char* kEngineVersion = "1.0.0";

/// Conventions that make results comparable between runs.
struct Conventions {
  std::string sign_rule = "lower-ones-parity";
  std::string circle_order = "min-arc-id";
  std::string quantum_grading = "p+gr+n_plus-n_minus";

  friend bool operator==(const Conventions&, const Conventions&) = default;
};

struct HomologyRow {
  int i = 0;
  int q = 0;
  int rank = 0;
  std::vector<std::string> torsion; // decimal invariant factors

  friend bool operator==(const HomologyRow&, const HomologyRow&) = default;
};

struct PsiStatus {
  std::string variant;
  int gr = 0;
  int q = 0;
  bool zero = true;
  bool torsion = true;
  std::string order;        // "0" for infinite order
  std::string divisibility; // "0" for torsion classes
  bool primitive = false;

  friend bool operator==(const PsiStatus&, const PsiStatus&) = default;
};

struct EulerTerm {
  int q = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const EulerTerm&, const EulerTerm&) = default;
};

struct ComplexSize {
  int crossings = 0;
  std::uint64_t vertices = 0;
  std::uint64_t generators = 0;
  friend bool operator==(const ComplexSize&, const ComplexSize&) = default;
};

struct Report {
  std::string command;
  int strands = 0;
  std::vector<int> letters;
  int n_plus = 0;
  int n_minus = 0;
  int sl = 0;
  int components = 0;
  std::string coeff = "z";
  bool reduced = false;
  int marked = 0;

  std::optional<std::vector<HomologyRow>> homology;
  std::optional<PsiStatus> psi;
  std::optional<int> s;
  std::optional<std::vector<EulerTerm>> euler;
  std::optional<ComplexSize> size;
  std::optional<double> elapsed_ms;

  std::string engine_version = kEngineVersion;
  Conventions conventions;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

struct Request {
  std::string command; // sl, kh, psi, s, euler, info
  BraidWord word;
  ComplexOptions options;
  int threads = 1;
};

using ProgressSink = std::function<void(const std::string&)>;

/// Runs one command. `progress` receives messages for cubes above 2^14
/// vertices.
Report compute_report(const Request& request, const ProgressSink& progress = {});

/// Human-readable rendering, one or more lines ending in a newline.
std::string render_text(const Report& r);

/// Deterministic JSON text of a report.
std::string render_json(const Report& r);

/// Stable key covering the word, the flags that affect the result, the
/// conventions and the engine version.
std::string cache_key(const Request& request);

/// One JSON file per key in a directory.
class ReportCache {
public:
  explicit ReportCache(std::filesystem::path dir);

  std::optional<Report> load(const Request& request) const;
  void store(const Request& request, const Report& report) const;
  std::filesystem::path path_for(const Request& request) const;

private:
  std::filesystem::path dir_;
};

} // namespace khtrans
