#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tsharp/cli.hpp"
#include "tsharp/error.hpp"
#include "tsharp/serialize.hpp"

using namespace tsharp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "toeplitz_sharp");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

const std::vector<std::string> kSmallScan{"--grid", "21,5,16,4", "--random", "2000", "--spot", "100"};

std::vector<std::string> with_scan(std::vector<std::string> args) {
  args.insert(args.end(), kSmallScan.begin(), kSmallScan.end());
  return args;
}

}  // namespace

TEST_CASE("parse_phi forms") {
  const auto a = cli::parse_phi("janowski:A=1,B=-1");
  const auto b = cli::parse_phi("janowski:1,-1");
  const auto c = cli::parse_phi("janowski:B=-1,A=1");
  CHECK(a.series == b.series);
  CHECK(a.series == c.series);
  CHECK(a.b1() == 2.0);
  CHECK(cli::parse_phi("order:alpha=0.5").b1() == 1.0);
  CHECK(cli::parse_phi("order:a=0.5").b2() == 1.0);
  CHECK(cli::parse_phi("sin").b1() == 1.0);
  CHECK_THROWS_AS(cli::parse_phi("janowski:A=1"), Error);
  CHECK_THROWS_AS(cli::parse_phi("janowski:A=1,C=2"), Error);
  CHECK_THROWS_AS(cli::parse_phi("janowski:1,-1,3"), Error);
  CHECK_THROWS_AS(cli::parse_phi("nope"), Error);
}

TEST_CASE("bounds command") {
  const Result r = run({"bounds", "--family", "starlike", "--phi", "janowski:A=1,B=-1"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("t31-upper-starlike-extremal") != std::string::npos);

  const Result k = run({"bounds", "--family", "ctc", "--g", "koebe", "--format", "csv"});
  CHECK(k.code == cli::kPass);
  CHECK(k.out.rfind("quantity,side,value", 0) == 0);
  CHECK(k.out.find("ABS_T22,upper,13,t22-ctc") != std::string::npos);

  const Result t = run({"bounds", "--g", "id", "--quantity", "T31"});
  CHECK(t.code == cli::kInapplicable);
}

TEST_CASE("bounds json round-trips field for field") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bounds", "--phi", "janowski:A=1,B=-1", "--format", "json"},
           {"bounds", "--phi", "lemniscate", "--format", "json"},
           {"bounds", "--phi", "parabolic", "--family", "convex", "--format", "json"},
           {"bounds", "--g", "id", "--format", "json"}}) {
    const Result r = run(args);
    REQUIRE(r.code == cli::kPass);
    const Json j = Json::parse(r.out);
    FamilySpec fam = args[1] == "--g" ? FamilySpec::close_to_convex(base_named(args[2]), args[2])
                     : args.size() > 4 && args[4] == "convex" ? FamilySpec::convex(cli::parse_phi(args[2]))
                                                              : FamilySpec::starlike(cli::parse_phi(args[2]));
    const auto expect = bounds_for(fam);
    REQUIRE(j.at("bounds").size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(bound_from_json(j["bounds"][i]) == expect[i]);
  }
}

TEST_CASE("extremal command") {
  const Result r = run({"extremal", "f1", "--phi", "janowski:A=1,B=-1", "--format", "json"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  const Series f = series_from_json(j.at("coefficients"));
  CHECK(std::abs(f[2] - 2.0) < 1e-12);
  CHECK(std::abs(f[3] - 3.0) < 1e-12);
  CHECK(std::abs(j.at("det_t31").get<double>() - 8.0) < 1e-9);

  const Result f5 = run({"extremal", "f5", "--g", "f1-base", "--format", "json"});
  CHECK(std::abs(Json::parse(f5.out).at("det_t31").get<double>() - 11.0 / 9.0) < 1e-9);
  const Result f7 = run({"extremal", "f7", "--g", "f1-base", "--format", "json"});
  CHECK(std::abs(Json::parse(f7.out).at("abs_det_t22").get<double>() - 181.0 / 36.0) < 1e-9);

  const Result table = run({"extremal", "f6"});
  CHECK(table.code == cli::kPass);
  CHECK(table.out.find("a5") != std::string::npos);

  CHECK(run({"extremal", "f3", "--phi", "sin", "--family", "starlike"}).code == cli::kUsage);
  CHECK(run({"extremal", "f9", "--phi", "sin"}).code == cli::kUsage);
}

TEST_CASE("verify command") {
  const Result ok = run(with_scan({"verify", "--phi", "order:a=0.5"}));
  CHECK(ok.code == cli::kPass);
  CHECK(ok.out.find("PASS") != std::string::npos);

  const Result c = run(with_scan({"verify", "--family", "convex", "--phi", "janowski:A=1,B=-1", "--format", "json"}));
  REQUIRE(c.code == cli::kPass);
  const Json j = Json::parse(c.out);
  CHECK(j.at("pass").get<bool>());
  CHECK(std::abs(j.at("empirical_gaps").at("T31:lower").get<double>()) < 5e-3);

  const auto bad = write_temp("tsharp_bad_phi.json", "[[1,0],[1,0],[1.5,0],[0,0]]");
  CHECK(run(with_scan({"verify", "--family", "starlike", "--phi-file", bad.string()})).code == cli::kInapplicable);
}

TEST_CASE("verify output is reproducible") {
  const auto args = with_scan({"verify", "--g", "f4-base", "--format", "json", "--seed", "99"});
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == cli::kPass);
  CHECK(a.out == b.out);
}

TEST_CASE("sample dump") {
  const auto path = std::filesystem::temp_directory_path() / "tsharp_dump.csv";
  std::filesystem::remove(path);
  const Result r = run({"verify", "--phi", "sin", "--grid", "3,2,2", "--random", "5", "--spot", "1",
                        "--dump-samples", path.string()});
  CHECK(r.code == cli::kPass);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("p1,re_zeta,im_zeta,re_a2,im_a2,re_a3,im_a3,det31", 0) == 0);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3 * 2 * 2 + 5 + 1);
}

TEST_CASE("usage, data and io errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"bounds"}).code == cli::kUsage);
  CHECK(run({"bounds", "--phi", "sin", "--g", "id"}).code == cli::kUsage);
  CHECK(run({"bounds", "--family", "ctc", "--phi", "sin"}).code == cli::kUsage);
  CHECK(run({"bounds", "--family", "starlike", "--g", "id"}).code == cli::kUsage);
  CHECK(run({"bounds", "--phi", "sin", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"bounds", "--phi", "janowski:A=2,B=0"}).code == cli::kUsage);
  CHECK(run({"verify", "--phi", "sin", "--grid", "1,2"}).code == cli::kUsage);
  CHECK(run({"verify", "--phi", "sin", "--grid", "0,0,0", "--random", "0", "--spot", "0"}).code == cli::kUsage);
  CHECK(run({"bounds", "--phi-file", "/nonexistent/phi.json"}).code == cli::kIoError);
  const auto junk = write_temp("tsharp_junk.json", "{not json");
  CHECK(run({"bounds", "--phi-file", junk.string()}).code == cli::kDataError);
  CHECK(run({"bounds", "--phi", "sin", "--quantity", "T44"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("classes list") {
  const Result r = run({"classes", "list", "--format", "json"});
  REQUIRE(r.code == cli::kPass);
  const Json j = Json::parse(r.out);
  CHECK(j.at("generators").size() == 8);
  CHECK(j.at("bases").size() == 5);
  CHECK(run({"classes"}).code == cli::kUsage);
}

TEST_CASE("binary exit status") {
  const std::string bin = TOEPLITZ_SHARP_BIN;
  CHECK(std::system((bin + " bounds --phi sin > /dev/null").c_str()) == 0);
  const int st = std::system((bin + " bounds > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(st) == cli::kUsage);
}
