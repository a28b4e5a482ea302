#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "vklab/spec_io.hpp"

using namespace vklab;

TEST_CASE("spec files") {
  const auto j = nlohmann::json::parse(R"({"alphas":[{"value":"1/2","geometric":false},{"value":"1/4","geometric":true}],
                                           "betas":[{"value":"1/4","geometric":false}],"gamma":"0","q":"3"})");
  const SpecFile s = spec_from_json(j);
  CHECK(s.q == 3);
  REQUIRE(s.spec.alphas.size() == 2);
  CHECK(s.spec.alphas[0].value == Rational(1, 2));
  CHECK_FALSE(s.spec.alphas[0].geometric());
  CHECK(s.spec.alphas[1].ratio == Rational(1, 3));
  CHECK(s.spec.betas[0].value == Rational(1, 4));
  const SpecFile back = spec_from_json(spec_to_json(s));
  CHECK(back.q == s.q);
  CHECK(back.spec.alphas[1].ratio == s.spec.alphas[1].ratio);
  CHECK(spec_to_json(back) == spec_to_json(s));

  CHECK(spec_from_json(nlohmann::json::parse(R"({"alphas":[{"value":"1","geometric":true,"ratio":"1/5"}]})")).spec.alphas[0].ratio ==
        Rational(1, 5));
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"alphas":[{"value":"1/2"}]})")), FormatError);  // mass 1/2
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"alphas":[{"value":"x"}]})")), FormatError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"alphas":[{"value":"1/4"},{"value":"3/4"}]})")), FormatError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"alphas":{"value":"1"}})")), FormatError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"alphas":[{"value":"1"}],"q":"1"})")), FormatError);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/file.spec"), FormatError);
  CHECK(rational_json(Rational(-3, 4)) == nlohmann::json{{"num", "-3"}, {"den", "4"}});
}

TEST_CASE("matrix cache") {
  const auto dir = std::filesystem::temp_directory_path() / "vklab-test-cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  RatMatrix m(2, 3);
  m(0, 1) = Rational(-5, 7);
  m(1, 2) = 3;
  write_matrix(dir / "m.txt", m, "demo");
  CHECK(read_matrix(dir / "m.txt", "demo") == m);
  CHECK_THROWS_AS(read_matrix(dir / "m.txt", "other"), FormatError);
  CHECK_FALSE(read_matrix(dir / "missing.txt", "demo").has_value());

  setenv("VKLAB_CACHE_DIR", dir.c_str(), 1);
  const RatMatrix first = kostka_foulkes_cached(4, Rational(1, 3));
  CHECK(std::filesystem::exists(dir / "kostka-foulkes-n4-t1_3.txt"));
  CHECK(kostka_foulkes_cached(4, Rational(1, 3)) == first);
  CHECK(first == kostka_foulkes(4, Rational(1, 3)));
  unsetenv("VKLAB_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
