#include <doctest.h>

#include "khtrans/errors.hpp"
#include "khtrans/report.hpp"

#include <filesystem>
#include <fstream>

using namespace khtrans;

namespace {

Request request(const std::string& command, const std::string& word, CoeffRing ring = CoeffRing::Integers,
                bool reduced = false) {
  Request r;
  r.command = command;
  r.word = parse_braid_word(word);
  r.options.ring = ring;
  r.options.variant = reduced ? Variant::Reduced : Variant::Standard;
  return r;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("khtrans-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

} // namespace

TEST_CASE("text rendering") {
  CHECK(render_text(compute_report(request("psi", "1 1 1"))) == "sl=1, psi: nonzero, primitive, q=1, gr=0\n");
  CHECK(render_text(compute_report(request("psi", "-1"))) == "sl=-3, psi: zero\n");
  CHECK(render_text(compute_report(request("s", "1 1 1"))) == "s=2\n");
  CHECK(render_text(compute_report(request("sl", "1 -2"))) == "sl=-3, components=1\n");
  CHECK(render_text(compute_report(request("euler", "1 1 1"))) == "chi = q + q^3 + q^5 - q^9\n");
  CHECK(render_text(compute_report(request("kh", "1 1"))) ==
        "Kh^{0,0} = Z\nKh^{0,2} = Z\nKh^{2,4} = Z\nKh^{2,6} = Z\n");
  CHECK(render_text(compute_report(request("kh", "1 1 1", CoeffRing::FieldTwo))).find("Kh^{2,7} = F2") !=
        std::string::npos);
}

TEST_CASE("json fields") {
  const auto j = nlohmann::json::parse(render_json(compute_report(request("s", "1 1 1"))));
  CHECK(j.at("s") == 2);
  CHECK(j.at("sl") == 1);
  CHECK(j.at("braid").at("letters") == nlohmann::json::array({1, 1, 1}));
  CHECK(j.at("conventions").contains("sign_rule"));
  CHECK(j.at("conventions").contains("circle_order"));
  CHECK(j.at("engine_version") == kEngineVersion);

  const auto kh = nlohmann::json::parse(render_json(compute_report(request("kh", "1 1 1"))));
  const auto& rows = kh.at("homology");
  REQUIRE(rows.size() == 5);
  CHECK(rows[3] == nlohmann::json{{"i", 3}, {"q", 7}, {"rank", 0}, {"torsion", {"2"}}});
}

TEST_CASE("json round trip and determinism") {
  for (const char* command : {"sl", "kh", "psi", "s", "euler", "info"}) {
    for (const char* word : {"1 1 1", "1 -2 1 -2", "-1"}) {
      const Request req = request(command, word);
      if (std::string(command) == "s" && link_components(req.word) != 1)
        continue;
      Report r = compute_report(req);
      r.elapsed_ms = 12.5;
      const std::string text = render_json(r);
      CHECK(nlohmann::json::parse(text).get<Report>() == r);
      r.elapsed_ms.reset();
      CHECK(render_json(compute_report(req)) == render_json(r));
    }
  }
  const Report reduced = compute_report(request("psi", "1 1 1", CoeffRing::FieldTwo, true));
  CHECK(nlohmann::json::parse(render_json(reduced)).get<Report>() == reduced);
  CHECK(reduced.psi->variant == "reduced");
}

TEST_CASE("report errors") {
  CHECK_THROWS_AS(compute_report(request("s", "1 1")), PreconditionError);
  CHECK_THROWS_AS(compute_report(request("bogus", "1")), PreconditionError);
}

TEST_CASE("cache keys separate flags") {
  CHECK(cache_key(request("kh", "1 1 1")) != cache_key(request("kh", "1 1 1", CoeffRing::FieldTwo)));
  CHECK(cache_key(request("kh", "1 1 1")) != cache_key(request("kh", "1 1 1", CoeffRing::Integers, true)));
  CHECK(cache_key(request("kh", "1 1 1")) != cache_key(request("psi", "1 1 1")));
  Request wide = request("kh", "1 1 1");
  wide.word = BraidWord(3, {1, 1, 1});
  CHECK(cache_key(request("kh", "1 1 1")) != cache_key(wide));
  Request marked = request("kh", "1 1 1", CoeffRing::Integers, true);
  marked.options.marked_arc = 3;
  CHECK(cache_key(marked) != cache_key(request("kh", "1 1 1", CoeffRing::Integers, true)));
  CHECK(cache_key(request("kh", "1 1 1")).find(kEngineVersion) != std::string::npos);
}

TEST_CASE("cache hit equals recomputation") {
  const ReportCache cache(fresh_dir("cache"));
  const Request req = request("kh", "1 -2 1 -2");
  CHECK_FALSE(cache.load(req));
  const Report computed = compute_report(req);
  cache.store(req, computed);
  REQUIRE(std::filesystem::exists(cache.path_for(req)));
  const auto loaded = cache.load(req);
  REQUIRE(loaded);
  CHECK(*loaded == computed);
  CHECK(render_json(*loaded) == render_json(computed));
  CHECK_FALSE(cache.load(request("kh", "1 -2 1 -2", CoeffRing::FieldTwo)));

  std::ofstream(cache.path_for(req)) << "{ not json";
  CHECK_FALSE(cache.load(req));
}
