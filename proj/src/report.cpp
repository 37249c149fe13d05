#include "khtrans/report.hpp"

#include "khtrans/errors.hpp"
#include "khtrans/homology.hpp"
#include "khtrans/lee.hpp"
#include "khtrans/transverse.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace khtrans {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  if (value)
    j[key] = *value;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
  if (auto it = j.find(key); it != j.end())
    value = it->template get<T>();
  else
    value.reset();
}

} // namespace

void to_json(json& j, const Conventions& c) {
  j = json{{"sign_rule", c.sign_rule}, {"circle_order", c.circle_order}, {"quantum_grading", c.quantum_grading}};
}

void from_json(const json& j, Conventions& c) {
  j.at("sign_rule").get_to(c.sign_rule);
  j.at("circle_order").get_to(c.circle_order);
  j.at("quantum_grading").get_to(c.quantum_grading);
}

void to_json(json& j, const HomologyRow& r) {
  j = json{{"i", r.i}, {"q", r.q}, {"rank", r.rank}, {"torsion", r.torsion}};
}

void from_json(const json& j, HomologyRow& r) {
  j.at("i").get_to(r.i);
  j.at("q").get_to(r.q);
  j.at("rank").get_to(r.rank);
  j.at("torsion").get_to(r.torsion);
}

void to_json(json& j, const PsiStatus& p) {
  j = json{{"variant", p.variant}, {"gr", p.gr},       {"q", p.q},
           {"zero", p.zero},       {"torsion", p.torsion}, {"order", p.order},
           {"divisibility", p.divisibility}, {"primitive", p.primitive}};
}

void from_json(const json& j, PsiStatus& p) {
  j.at("variant").get_to(p.variant);
  j.at("gr").get_to(p.gr);
  j.at("q").get_to(p.q);
  j.at("zero").get_to(p.zero);
  j.at("torsion").get_to(p.torsion);
  j.at("order").get_to(p.order);
  j.at("divisibility").get_to(p.divisibility);
  j.at("primitive").get_to(p.primitive);
}

void to_json(json& j, const EulerTerm& t) { j = json{{"q", t.q}, {"coeff", t.coeff}}; }

void from_json(const json& j, EulerTerm& t) {
  j.at("q").get_to(t.q);
  j.at("coeff").get_to(t.coeff);
}

void to_json(json& j, const ComplexSize& s) {
  j = json{{"crossings", s.crossings}, {"vertices", s.vertices}, {"generators", s.generators}};
}

void from_json(const json& j, ComplexSize& s) {
  j.at("crossings").get_to(s.crossings);
  j.at("vertices").get_to(s.vertices);
  j.at("generators").get_to(s.generators);
}

void to_json(json& j, const Report& r) {
  j = json::object();
  j["command"] = r.command;
  j["braid"] = json{{"strands", r.strands}, {"letters", r.letters}, {"n_plus", r.n_plus}, {"n_minus", r.n_minus}};
  j["sl"] = r.sl;
  j["components"] = r.components;
  j["options"] = json{{"coeff", r.coeff}, {"reduced", r.reduced}, {"marked", r.marked}};
  put_optional(j, "homology", r.homology);
  put_optional(j, "psi", r.psi);
  put_optional(j, "s", r.s);
  put_optional(j, "euler", r.euler);
  put_optional(j, "size", r.size);
  put_optional(j, "elapsed_ms", r.elapsed_ms);
  j["engine_version"] = r.engine_version;
  j["conventions"] = r.conventions;
}

void from_json(const json& j, Report& r) {
  j.at("command").get_to(r.command);
  const json& braid = j.at("braid");
  braid.at("strands").get_to(r.strands);
  braid.at("letters").get_to(r.letters);
  braid.at("n_plus").get_to(r.n_plus);
  braid.at("n_minus").get_to(r.n_minus);
  j.at("sl").get_to(r.sl);
  j.at("components").get_to(r.components);
  const json& options = j.at("options");
  options.at("coeff").get_to(r.coeff);
  options.at("reduced").get_to(r.reduced);
  options.at("marked").get_to(r.marked);
  get_optional(j, "homology", r.homology);
  get_optional(j, "psi", r.psi);
  get_optional(j, "s", r.s);
  get_optional(j, "euler", r.euler);
  get_optional(j, "size", r.size);
  get_optional(j, "elapsed_ms", r.elapsed_ms);
  j.at("engine_version").get_to(r.engine_version);
  j.at("conventions").get_to(r.conventions);
}

Report compute_report(const Request& request, const ProgressSink& progress) {
  const BraidWord& w = request.word;
  const ComplexOptions& options = request.options;
  Report r;
  r.command = request.command;
  r.strands = w.strands();
  r.letters = w.letters();
  r.n_plus = w.positive_count();
  r.n_minus = w.negative_count();
  r.sl = self_linking(w);
  r.components = link_components(w);
  r.coeff = std::string(to_string(options.ring));
  r.reduced = options.variant == Variant::Reduced;
  r.marked = options.marked_arc;

  const int n = static_cast<int>(w.size());
  const bool large = n > 14;
  auto note = [&](const std::string& message) {
    if (large && progress)
      progress(message);
  };

  const std::string& cmd = request.command;
  if (cmd == "sl")
    return r;
  if (cmd == "s") {
    note("building Lee complex on " + std::to_string(std::uint64_t{1} << n) + " vertices");
    r.s = s_invariant(w, options.max_crossings);
    return r;
  }
  if (cmd == "psi") {
    note("building complex on " + std::to_string(std::uint64_t{1} << n) + " vertices");
    const PsiReport p = psi_report(w, options);
    PsiStatus status;
    status.variant = std::string(to_string(p.variant));
    status.gr = p.gr;
    status.q = p.q;
    status.zero = p.cls.is_zero;
    status.torsion = p.cls.is_torsion;
    status.order = p.cls.order.str();
    status.divisibility = p.cls.divisibility.str();
    status.primitive = p.cls.is_primitive;
    r.psi = status;
    return r;
  }
  if (cmd != "kh" && cmd != "euler" && cmd != "info")
    throw PreconditionError("unknown command '" + cmd + "'");

  note("building complex on " + std::to_string(std::uint64_t{1} << n) + " vertices");
  const KhComplex c(closure_diagram(w), options);
  if (cmd == "kh") {
    note("computing homology");
    const BigradedHomology h = bigraded_homology(c, request.threads);
    std::vector<HomologyRow> rows;
    for (const auto& [key, g] : h.groups()) {
      HomologyRow row{key.first, key.second, g.free_rank, {}};
      for (const auto& t : g.torsion)
        row.torsion.push_back(t.str());
      rows.push_back(std::move(row));
    }
    r.homology = std::move(rows);
  } else if (cmd == "euler") {
    std::vector<EulerTerm> terms;
    std::map<int, std::int64_t> by_q;
    for (int i = c.min_degree(); i <= c.max_degree(); ++i)
      for (int q : c.quantum_degrees(i))
        by_q[q] += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.generators(i, q).size());
    for (auto [q, coeff] : by_q)
      if (coeff != 0)
        terms.push_back({q, coeff});
    r.euler = std::move(terms);
  } else {
    ComplexSize size;
    size.crossings = n;
    size.vertices = std::uint64_t{1} << n;
    for (int i = c.min_degree(); i <= c.max_degree(); ++i)
      size.generators += c.rank(i);
    r.size = size;
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  if (r.command == "sl" || r.command == "info") {
    out << "sl=" << r.sl << ", components=" << r.components << "\n";
    if (r.size)
      out << "crossings=" << r.size->crossings << ", vertices=" << r.size->vertices
          << ", generators=" << r.size->generators << "\n";
  }
  if (r.psi) {
    const PsiStatus& p = *r.psi;
    out << "sl=" << r.sl << ", psi: ";
    if (p.zero) {
      out << "zero";
    } else {
      out << "nonzero";
      if (p.primitive)
        out << ", primitive";
      else if (p.torsion)
        out << ", torsion of order " << p.order;
      else
        out << ", divisible by " << p.divisibility;
      out << ", q=" << p.q << ", gr=" << p.gr;
    }
    out << "\n";
  }
  if (r.s)
    out << "s=" << *r.s << "\n";
  if (r.homology) {
    for (const auto& row : *r.homology) {
      out << "Kh^{" << row.i << "," << row.q << "} = ";
      bool first = true;
      if (row.rank > 0) {
        out << (r.coeff == "z" ? "Z" : r.coeff == "q" ? "Q" : "F2");
        if (row.rank > 1)
          out << "^" << row.rank;
        first = false;
      }
      for (const auto& t : row.torsion) {
        out << (first ? "" : " + ") << "Z/" << t;
        first = false;
      }
      out << "\n";
    }
  }
  if (r.euler) {
    LaurentPolynomial p;
    for (const auto& t : *r.euler)
      p.add(t.q, t.coeff);
    out << "chi = " << p.to_string() << "\n";
  }
  if (r.elapsed_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *r.elapsed_ms);
    out << "elapsed " << buf << " ms\n";
  }
  return out.str();
}

std::string render_json(const Report& r) { return json(r).dump(2) + "\n"; }

std::string cache_key(const Request& request) {
  const Conventions conv;
  std::ostringstream key;
  key << "v" << kEngineVersion << "|" << conv.sign_rule << "|" << conv.circle_order << "|" << conv.quantum_grading
      << "|" << request.command << "|b" << request.word.strands() << "|" << request.word.to_string() << "|"
      << to_string(request.options.ring) << "|" << to_string(request.options.variant) << "|m"
      << request.options.marked_arc;
  return key.str();
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ReportCache::path_for(const Request& request) const {
  // FNV-1a; stable across platforms and runs, unlike std::hash.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : cache_key(request)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(h));
  return dir_ / name;
}

std::optional<Report> ReportCache::load(const Request& request) const {
  std::ifstream in(path_for(request));
  if (!in)
    return std::nullopt;
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("key", "") != cache_key(request) || !j.contains("report"))
    return std::nullopt;
  try {
    return j.at("report").get<Report>();
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const Request& request, const Report& report) const {
  const auto path = path_for(request);
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp);
    if (!out)
      throw std::runtime_error("cannot write cache file " + tmp.string());
    out << json{{"key", cache_key(request)}, {"report", report}}.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

} // namespace khtrans
