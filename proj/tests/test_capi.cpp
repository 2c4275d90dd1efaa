#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "golodlab/golodlab.h"
#include "json.hpp"

namespace {

const char* kGorenstein =
    "ring: QQ[x1,x2,x3]\norder: lex x1>x2>x3\nx1^2, x1*x3, -x1*x2+x3^2, x2*x3, x2^2\n";

struct Ideal {
  gl_ideal* h = nullptr;
  explicit Ideal(const char* text) { REQUIRE(gl_ideal_parse(text, &h) == GL_OK); }
  ~Ideal() { gl_ideal_free(h); }
};

struct Report {
  gl_report* r = nullptr;
  ~Report() { gl_report_free(r); }
  nlohmann::json json() const { return nlohmann::json::parse(gl_report_json(r)); }
  std::string text() const { return gl_report_text(r); }
};

}  // namespace

TEST_CASE("initial ideal through the C API") {
  Ideal i(kGorenstein);
  Report rep;
  REQUIRE(gl_initial(i.h, &rep.r) == GL_OK);
  CHECK(rep.text() == "(x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^3)\n");
  CHECK(rep.json()["command"] == "initial");
}

TEST_CASE("golod verdict through gl_run") {
  Ideal i(kGorenstein);
  gl_config cfg;
  gl_config_default(&cfg);
  Report rep;
  REQUIRE(gl_run("golod", i.h, &cfg, &rep.r) == GL_OK);
  auto j = rep.json();
  CHECK(j["verdict"] == "NotGolod");
  CHECK(j["witness"]["reverified"] == true);
}

TEST_CASE("parse errors report line and column") {
  gl_ideal* h = nullptr;
  CHECK(gl_ideal_parse("ring: QQ[x]\nx^^2\n", &h) == GL_INPUT_ERROR);
  CHECK(h == nullptr);
  CHECK(gl_last_error_line() == 2);
  CHECK(gl_last_error_column() > 0);
  CHECK(std::string(gl_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("bad configuration and commands are input errors") {
  Ideal i("xy,yz");
  gl_config cfg;
  gl_config_default(&cfg);
  cfg.pmax = 9;
  Report rep;
  CHECK(gl_golod(i.h, &cfg, &rep.r) == GL_INPUT_ERROR);
  CHECK(rep.r == nullptr);
  CHECK(gl_run("nope", i.h, &cfg, &rep.r) == GL_INPUT_ERROR);
  CHECK(gl_ideal_set_order(i.h, "lex w") == GL_INPUT_ERROR);
  CHECK(gl_homogenize(i.h, nullptr, &rep.r) == GL_INPUT_ERROR);
}

TEST_CASE("caps give GL_CAP_EXCEEDED") {
  gl_config cfg;
  gl_config_default(&cfg);
  cfg.tmax = 3;
  Report rep;
  CHECK(gl_minors("3x6", nullptr, &cfg, &rep.r) == GL_CAP_EXCEEDED);
}

TEST_CASE("ideal text round trip") {
  Ideal i(kGorenstein);
  char* s = nullptr;
  REQUIRE(gl_ideal_text(i.h, &s) == GL_OK);
  Ideal again(s);
  char* t = nullptr;
  REQUIRE(gl_ideal_text(again.h, &t) == GL_OK);
  CHECK(std::string(s) == std::string(t));
  gl_string_free(s);
  gl_string_free(t);
}

TEST_CASE("Massey table JSON is re-verified on load") {
  Ideal i("xy,yz");
  gl_config cfg;
  gl_config_default(&cfg);
  Report rep;
  REQUIRE(gl_massey(i.h, &cfg, &rep.r) == GL_OK);
  std::string table = gl_report_json(rep.r);
  Report ok;
  CHECK(gl_massey_verify(table.c_str(), &ok.r) == GL_OK);
  CHECK(ok.json()["verified"] == true);

  // scale one stored value: it no longer satisfies its equation
  auto j = nlohmann::json::parse(table);
  bool changed = false;
  for (auto& v : j["values"]) {
    if (!v["value"].empty()) {
      v["value"][0]["poly"] = "2*(" + v["value"][0]["poly"].get<std::string>() + ")";
      changed = true;
      break;
    }
  }
  REQUIRE(changed);
  Report bad;
  std::string tampered = j.dump();
  CHECK(gl_massey_verify(tampered.c_str(), &bad.r) == GL_INPUT_ERROR);
  CHECK(bad.json()["verified"] == false);
}
