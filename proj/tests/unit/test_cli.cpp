#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "config.hpp"
#include "output.hpp"

using namespace ebubble;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, cli::Environment env = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

// Value column of a `quantity,value,unit` CSV report row.
double report_value(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(name + ",", 0) == 0) {
      const auto first = line.find(',');
      const auto second = line.find(',', first + 1);
      return std::stod(line.substr(first + 1, second - first - 1));
    }
  }
  FAIL("row not found: " << name);
  return 0.0;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ebubble_test_" + name);
}

}  // namespace

TEST_CASE("format_number uses 17 significant digits and a dot") {
  CHECK(cli::format_number(0.1) == "0.10000000000000001");
  CHECK(cli::format_number(-64.0) == "-64");
  CHECK(cli::format_number(1e-20) == "9.9999999999999995e-21");
}

TEST_CASE("config text parsing") {
  const auto parsed = cli::parse_config_text(
      "# comment\n gamma = 0.004 \nGamma_Unit=N_per_m # trailing\n\nbogus = 1\nnot a pair\n",
      "cfg");
  CHECK(parsed.values.at("gamma") == "0.004");
  CHECK(parsed.values.at("gamma-unit") == "N_per_m");
  REQUIRE(parsed.errors.size() == 2);
  CHECK(parsed.errors[0].find("cfg:5") != std::string::npos);
  CHECK(parsed.errors[1].find("cfg:6") != std::string::npos);
  CHECK(cli::parse_double("1e-3").value() == 1e-3);
  CHECK_FALSE(cli::parse_double("1,5").has_value());
  CHECK_FALSE(cli::parse_double("inf").has_value());
}

TEST_CASE("radius command") {
  SUBCASE("gamma = 4 erg/cm^2, C = 1: a0 ~ 7.02 angstrom") {
    const auto r = run({"radius", "--gamma", "4", "--gamma-unit", "erg_per_cm2", "--model", "c1",
                        "--constants", "precise"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "a0") == doctest::Approx(7.02).epsilon(0.001));
    CHECK(report_value(r.out, "U_total") == doctest::Approx(0.3092).epsilon(0.001));
    CHECK(r.out.rfind("# ebubble radius:", 0) == 0);
    CHECK(r.out.find("comparison (literature/experiment values, not computed)") != std::string::npos);
    CHECK(r.out.find("17 angstrom") != std::string::npos);
  }
  SUBCASE("infinite well at 0.0004 N/m: about 18.6 angstrom") {
    const auto r = run({"radius", "--gamma", "0.0004", "--gamma-unit", "N_per_m", "--model",
                        "infinite_well"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "a0") == doctest::Approx(18.6).epsilon(0.001));
  }
  SUBCASE("missing --gamma exits 2 naming the flag") {
    const auto r = run({"radius"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--gamma") != std::string::npos);
    CHECK(r.out.empty());
  }
  SUBCASE("all invalid fields are reported together") {
    const auto r = run({"radius", "--gamma", "abc", "--model", "nope", "--constants", "x",
                        "--length-unit", "bar"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--gamma") != std::string::npos);
    CHECK(r.err.find("--model") != std::string::npos);
    CHECK(r.err.find("--constants") != std::string::npos);
    CHECK(r.err.find("--length-unit") != std::string::npos);
  }
  SUBCASE("custom coefficient") {
    const auto r = run({"radius", "--gamma", "0.004", "--model", "custom", "--zero-point-c", "16"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "a0") == doctest::Approx(2.0 * 7.0201819384177595).epsilon(1e-12));
    CHECK(run({"radius", "--gamma", "0.004", "--model", "custom"}).code == 2);
    CHECK(run({"radius", "--gamma", "0.004", "--model", "custom", "--zero-point-c", "-1"}).code == 2);
    CHECK(run({"radius", "--gamma", "0.004", "--zero-point-c", "2"}).code == 2);
  }
  SUBCASE("paper_rounded constants") {
    const auto r = run({"radius", "--gamma", "4", "--gamma-unit", "erg_per_cm2", "--constants",
                        "paper_rounded"});
    CHECK(report_value(r.out, "a0") == doctest::Approx(7.1061).epsilon(1e-4));
  }
}

TEST_CASE("critical command") {
  SUBCASE("gamma = 0.004, C = 1") {
    const auto r = run({"critical", "--gamma", "0.004", "--model", "c1"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "P_c_closed") == doctest::Approx(-61.0).epsilon(0.001));
    CHECK(report_value(r.out, "P_c_relative_difference") < 1e-8);
    CHECK(report_value(r.out, "a_c_relative_difference") < 1e-8);
    CHECK(r.out.find("-64 bar") != std::string::npos);
  }
  SUBCASE("gamma = 0.0004, C = pi^2/2") {
    const auto r = run({"critical", "--gamma", "0.0004", "--model", "infinite_well"});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "P_c_numeric") == doctest::Approx(-2.30).epsilon(0.001));
    CHECK(r.out.find("-2.4 bar") != std::string::npos);
    CHECK(r.out.find("-1.6 bar") != std::string::npos);
  }
  SUBCASE("JSON output carries the same values") {
    const auto r = run({"critical", "--gamma", "0.004", "--format", "json", "--pressure-unit", "Pa"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "critical");
    CHECK(doc["config"]["pressure-unit"] == "Pa");
    bool found = false;
    for (const auto& row : doc["results"]) {
      if (row["name"] == "P_c_closed") {
        CHECK(row["value"].get<double>() == doctest::Approx(-6.0966197e6).epsilon(1e-7));
        CHECK(row["unit"] == "Pa");
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("curve command") {
  SUBCASE("default config gives six curves") {
    const auto r = run({"curve"});
    CHECK(r.code == 0);
    std::size_t blocks = 0;
    for (std::size_t pos = 0; (pos = r.out.find("# pressure=", pos)) != std::string::npos; ++pos)
      ++blocks;
    CHECK(blocks == 6);
    CHECK(r.out.find("radius_angstrom,U_total_eV\n") != std::string::npos);
  }
  SUBCASE("single zero-pressure curve has its minimum near a0") {
    const auto r = run({"curve", "--pressures", "0", "--format", "json", "--radius-min", "10",
                        "--radius-max", "30", "--radius-count", "2001", "--components"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["curves"].size() == 1);
    const auto radius = doc["curves"][0]["radius"].get<std::vector<double>>();
    const auto total = doc["curves"][0]["U_total"].get<std::vector<double>>();
    CHECK(doc["curves"][0].contains("U_zp"));
    const auto i = std::min_element(total.begin(), total.end()) - total.begin();
    CHECK(radius[static_cast<std::size_t>(i)] == doctest::Approx(18.6065).epsilon(1e-3));
  }
  SUBCASE("negative pressures parse as values") {
    const auto r = run({"curve", "--pressures", "-0.5,-1", "--radius-count", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# pressure=-0.5 bar") != std::string::npos);
  }
  SUBCASE("malformed grid exits 2") {
    CHECK(run({"curve", "--radius-min", "30", "--radius-max", "10"}).code == 2);
    CHECK(run({"curve", "--radius-count", "1"}).code == 2);
    CHECK(run({"curve", "--pressures", "0,0"}).code == 2);
  }
  SUBCASE("unwritable output path exits 4") {
    const auto r = run({"curve", "--output", "/nonexistent-dir/out.csv"});
    CHECK(r.code == 4);
    CHECK(r.err.find("cannot write") != std::string::npos);
  }
  SUBCASE("output file gets exactly the stdout bytes") {
    const auto path = temp_path("curve.csv");
    const auto to_file = run({"curve", "--radius-count", "20", "--output", path.string()});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // The echoed config differs only in the output key.
    auto to_stdout = run({"curve", "--radius-count", "20"}).out;
    const auto strip_first_line = [](const std::string& s) { return s.substr(s.find('\n')); };
    CHECK(strip_first_line(contents) == strip_first_line(to_stdout));
    std::filesystem::remove(path);
  }
}

TEST_CASE("sweep command") {
  SUBCASE("seven log-spaced gammas: exponent 1.25") {
    const auto r = run({"sweep", "--gamma-min", "1e-4", "--gamma-max", "1e-2", "--gamma-count", "7"});
    CHECK(r.code == 0);
    const auto pos = r.out.find("# exponent=");
    REQUIRE(pos != std::string::npos);
    const double exponent = std::stod(r.out.substr(pos + 11));
    CHECK(std::abs(exponent - 1.25) < 1e-6);
  }
  SUBCASE("explicit list in JSON") {
    const auto r = run({"sweep", "--gammas", "0.001,0.002,0.004", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rows"].size() == 3);
    CHECK(std::abs(doc["exponent_closed_form"].get<double>() - 1.25) < 1e-10);
  }
  SUBCASE("fewer than three gammas exits 2") {
    CHECK(run({"sweep", "--gammas", "0.001,0.002"}).code == 2);
    CHECK(run({"sweep", "--gammas", "0.001,0.001,0.002"}).code == 2);
    CHECK(run({"sweep"}).code == 2);
    CHECK(run({"sweep", "--gammas", "0.001,0.002,0.003", "--gamma-min", "1e-4"}).code == 2);
  }
}

TEST_CASE("estimate-gamma command") {
  const auto r = run({"estimate-gamma", "--binding-energy", "2.5e-4", "--spacing", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma,4.00544158") != std::string::npos);
  CHECK(r.out.find(",erg_per_cm2") != std::string::npos);
  CHECK(r.out.find(",N_per_m") != std::string::npos);
  CHECK(run({"estimate-gamma", "--binding-energy", "0", "--spacing", "1"}).code == 0);
  CHECK(run({"estimate-gamma", "--binding-energy", "5e-4", "--spacing", "1"}).out.find("gamma,8.010883") !=
        std::string::npos);
  CHECK(run({"estimate-gamma", "--binding-energy", "2.5e-4", "--spacing", "0"}).code == 2);
  CHECK(run({"estimate-gamma", "--binding-energy", "2.5e-4", "--spacing", "-1"}).code == 2);
}

TEST_CASE("config files and precedence") {
  const auto path = temp_path("config.txt");
  {
    std::ofstream f(path);
    f << "# electron bubble\ngamma = 0.0004\nmodel = infinite_well\nlength_unit = nm_typo_free\n";
  }
  SUBCASE("file errors are reported with the rest") {
    const auto r = run({"radius", "--config", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("--length-unit") != std::string::npos);
  }
  {
    std::ofstream f(path);
    f << "gamma = 0.0004\nmodel = infinite_well\n";
  }
  SUBCASE("values come from the file, flags override") {
    const auto from_file = run({"radius", "--config", path.string()});
    CHECK(from_file.code == 0);
    CHECK(report_value(from_file.out, "a0") == doctest::Approx(18.6).epsilon(0.001));

    const auto overridden = run({"radius", "--config", path.string(), "--gamma", "0.004"});
    CHECK(report_value(overridden.out, "a0") ==
          doctest::Approx(18.606547890432015 / std::pow(10.0, 0.25)).epsilon(1e-12));
    CHECK(overridden.out.find("gamma=0.004 ") != std::string::npos);
  }
  SUBCASE("EBUBBLE_CONFIG is used when --config is absent") {
    const auto r = run({"radius"}, cli::Environment{path.string()});
    CHECK(r.code == 0);
    CHECK(report_value(r.out, "a0") == doctest::Approx(18.6).epsilon(0.001));
  }
  SUBCASE("unreadable config exits 4") {
    CHECK(run({"radius", "--config", "/nonexistent/cfg"}).code == 4);
  }
  std::filesystem::remove(path);
}

TEST_CASE("command-line errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"radius", "--no-such-flag", "1"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("radius") != std::string::npos);
}

TEST_CASE("every command is byte-deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"radius", "--gamma", "0.004"},
      {"critical", "--gamma", "0.0004", "--model", "infinite_well", "--format", "json"},
      {"curve", "--radius-count", "50", "--components"},
      {"sweep", "--gamma-min", "1e-4", "--gamma-max", "1e-2"},
      {"estimate-gamma", "--binding-energy", "2.5e-4", "--spacing", "1"},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
