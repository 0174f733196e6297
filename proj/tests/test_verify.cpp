#include <doctest.h>

#include <qtcat/macdonald.hpp>
#include <qtcat/verify.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace qtcat;
namespace fs = std::filesystem;

TEST_CASE("main comparison at small sizes") {
    Report r = verify_main(3);
    CHECK(r.total() == 23);
    CHECK(r.all_pass());
    CHECK(r.warnings.empty());
    for (const auto& c : r.cases) CHECK(c.lhs == c.rhs);
}

TEST_CASE("main comparison is deterministic and parallel-safe") {
    Report a = verify_main(3);
    Report b = verify_main(3);
    CHECK(a.to_json() == b.to_json());
    VerifyOptions opt;
    opt.jobs = 3;
    Report c = verify_main(3, opt);
    // timings differ; compare the stable fields
    REQUIRE(c.total() == a.total());
    for (int i = 0; i < a.total(); ++i) {
        CHECK(a.cases[i].case_id == c.cases[i].case_id);
        CHECK(a.cases[i].lhs == c.cases[i].lhs);
        CHECK(a.cases[i].rhs == c.cases[i].rhs);
        CHECK(a.cases[i].pass == c.cases[i].pass);
    }
}

TEST_CASE("combinatorial suite at small sizes") {
    Report r = verify_comb(4);
    CHECK(r.all_pass());
}

TEST_CASE("Macdonald suite at small sizes") {
    Report r = verify_macdonald(2);
    CHECK(r.all_pass());
}

TEST_CASE("report serialization") {
    Report r = verify_main(2);
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.at("suite") == "main");
    CHECK(j.at("toolVersion") == std::string(kToolVersion));
    CHECK(j.at("summary").at("total").get<int>() == r.total());
    CHECK(j.at("summary").at("failed").get<int>() == 0);
    CHECK(j.at("cases").size() == static_cast<size_t>(r.total()));
    for (const auto& c : j.at("cases")) {
        CHECK(c.contains("caseId"));
        CHECK(c.contains("lhs"));
        CHECK(c.contains("rhs"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("ms"));
    }

    std::string csv = r.to_csv();
    CHECK(csv.rfind("caseId,pass,ms,lhs,rhs\n", 0) == 0);
    std::string text = r.to_text();
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("summary:") != std::string::npos);
}

TEST_CASE("table cache lifecycle") {
    fs::path dir = fs::path("qtcat_cache_test");
    fs::remove_all(dir);

    // cold: builds and writes tables + manifest
    CacheManifest m1 = cache_io(dir.string(), 3);
    CHECK(m1.version == "1");
    CHECK(m1.digests.size() == 3);
    CHECK(fs::exists(dir / "htilde_2.json"));
    CHECK(fs::exists(dir / "manifest.json"));

    // warm: loads with verified digests, no warnings
    CacheManifest m2 = cache_io(dir.string(), 3);
    CHECK(m2.warnings.empty());
    CHECK(m2.digests == m1.digests);

    // rebuilding from scratch reproduces cached bytes exactly
    {
        std::ifstream in(dir / "htilde_3.json", std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
        CHECK(bytes == build_htilde_table(3).to_json());
    }

    // tampered file: digest mismatch, rebuild, warning
    {
        std::ofstream out(dir / "htilde_2.json", std::ios::trunc);
        out << "{\"format\":\"1\",\"degree\":2,\"corrupt\":true}";
    }
    CacheManifest m3 = cache_io(dir.string(), 3);
    REQUIRE(m3.warnings.size() == 1);
    CHECK(m3.warnings[0].find("htilde_2.json") != std::string::npos);
    // the rebuilt file is valid again
    CacheManifest m4 = cache_io(dir.string(), 3);
    CHECK(m4.warnings.empty());

    set_htilde_cache_dir("");
    fs::remove_all(dir);
}
