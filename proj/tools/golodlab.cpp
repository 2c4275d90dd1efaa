// golodlab command line. Links only the C API.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "golodlab/golodlab.h"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string ideal;
  std::string order;
  std::string shape;
  std::string mask;
  std::string table;
  std::string weights;
  std::string coloring;
  std::string batch;
  bool json = false;
  gl_config cfg{};
};

struct Outcome {
  int code = GL_OK;
  std::string out;
  std::string err;
};

bool readFile(const fs::path& p, std::string& into) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  into = ss.str();
  return true;
}

// The --ideal value is a file when one exists at that path, otherwise inline text.
std::string idealSource(const std::string& arg) {
  std::error_code ec;
  std::string text;
  if (fs::is_regular_file(arg, ec) && readFile(arg, text)) return text;
  return arg;
}

std::string errorText(int code, const std::string& where) {
  std::string s = code == GL_CAP_EXCEEDED ? "cap exceeded" : "error";
  if (!where.empty()) s += " in " + where;
  s += ": ";
  s += gl_last_error();
  return s + "\n";
}

Outcome finish(int code, gl_report* r, bool json, const std::string& where) {
  Outcome o;
  if (r) {
    o.out = json ? gl_report_json(r) : gl_report_text(r);
    o.code = gl_report_status(r);
    gl_report_free(r);
  }
  if (code != GL_OK) {
    o.code = code;
    o.err = errorText(code, where);
  }
  return o;
}

Outcome runIdealCommand(const std::string& command, const std::string& text, const Options& opt,
                        const std::string& where) {
  gl_ideal* ideal = nullptr;
  int rc = gl_ideal_parse(text.c_str(), &ideal);
  if (rc != GL_OK) return finish(rc, nullptr, opt.json, where);
  if (!opt.order.empty()) {
    rc = gl_ideal_set_order(ideal, opt.order.c_str());
    if (rc != GL_OK) {
      gl_ideal_free(ideal);
      return finish(rc, nullptr, opt.json, where);
    }
  }
  gl_report* r = nullptr;
  rc = gl_run(command.c_str(), ideal, &opt.cfg, &r);
  gl_ideal_free(ideal);
  return finish(rc, r, opt.json, where);
}

Outcome runSingle(const std::string& command, const Options& opt) {
  if (command == "minors") {
    gl_report* r = nullptr;
    int rc = gl_minors(opt.shape.c_str(), opt.mask.c_str(), &opt.cfg, &r);
    return finish(rc, r, opt.json, "");
  }
  if (command == "massey-verify") {
    std::string text;
    if (!readFile(opt.table, text)) {
      Outcome o;
      o.code = GL_INPUT_ERROR;
      o.err = "error: cannot read " + opt.table + "\n";
      return o;
    }
    gl_report* r = nullptr;
    int rc = gl_massey_verify(text.c_str(), &r);
    return finish(rc, r, opt.json, "");
  }
  if (opt.ideal.empty()) {
    Outcome o;
    o.code = GL_INPUT_ERROR;
    o.err = "error: --ideal is required\n";
    return o;
  }
  return runIdealCommand(command, idealSource(opt.ideal), opt, "");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

unsigned threadCount(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GOLODLAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Every regular file in the directory is one job; results land in
// dir/golodlab-out/<hash>.{txt,json,err}, the hash covering command, options and input.
int runBatch(const std::string& command, const Options& opt) {
  std::error_code ec;
  if (!fs::is_directory(opt.batch, ec)) {
    std::cerr << "error: " << opt.batch << " is not a directory\n";
    return GL_INPUT_ERROR;
  }
  std::vector<fs::path> inputs;
  for (const auto& e : fs::directory_iterator(opt.batch))
    if (e.is_regular_file()) inputs.push_back(e.path());
  std::sort(inputs.begin(), inputs.end());
  fs::path outDir = fs::path(opt.batch) / "golodlab-out";
  fs::create_directories(outDir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << outDir.string() << "\n";
    return GL_INPUT_ERROR;
  }

  std::string settings = command + "|" + opt.order + "|" + std::to_string(opt.cfg.N) + "," +
                         std::to_string(opt.cfg.pmax) + "," + std::to_string(opt.cfg.D) + "," + opt.weights + "," +
                         opt.coloring + "|" + (opt.json ? "json" : "text");
  std::vector<std::string> lines(inputs.size());
  std::vector<int> codes(inputs.size(), GL_OK);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < inputs.size(); k = next++) {
      std::string text;
      Outcome o;
      if (!readFile(inputs[k], text)) {
        o.code = GL_INPUT_ERROR;
        o.err = "error: cannot read file\n";
      } else {
        o = runIdealCommand(command, text, opt, inputs[k].filename().string());
      }
      std::string name = hex(fnv1a(settings + "\n" + text));
      fs::path target = outDir / (name + (o.code == GL_OK || !o.out.empty() ? (opt.json ? ".json" : ".txt") : ".err"));
      std::ofstream f(target, std::ios::binary);
      f << (o.out.empty() ? o.err : o.out);
      codes[k] = o.code;
      lines[k] = inputs[k].filename().string() + " " + name + " exit " + std::to_string(o.code);
    }
  };
  std::vector<std::thread> pool;
  unsigned n = threadCount(inputs.size());
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  int worst = GL_OK;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    std::cout << lines[k] << "\n";
    worst = std::max(worst, codes[k]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  gl_config_default(&opt.cfg);

  CLI::App app{"Koszul homology, Massey operations and Golod certificates"};
  app.require_subcommand(1, 1);

  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> idealCommands = {
      {"gb", "reduced Groebner basis"},
      {"initial", "initial ideal"},
      {"homogenize", "homogenization along a weight vector and its two fibers"},
      {"betti", "graded Betti numbers of R/I"},
      {"fiber-inv", "compare Betti numbers of R/I and R/in(I)"},
      {"rainbow", "rainbow structure of a monomial ideal"},
      {"massey", "trivial Massey operation table"},
      {"golod", "Golod certificate"},
  };
  for (const auto& c : idealCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--ideal", opt.ideal, "fixture file or inline ideal such as \"xy,yz\"");
    sub->add_option("--order", opt.order, "lex, grevlex, lex x1>x2>x3, weight 1,2,3, diagonal 2x3");
    sub->add_option("--batch", opt.batch, "run on every file in a directory");
    sub->add_flag("--json", opt.json, "machine-readable output");
    if (std::string(c.name) == "homogenize") sub->add_option("--weights", opt.weights, "positive weights, e.g. 1,1,2");
    if (std::string(c.name) == "rainbow" || std::string(c.name) == "massey")
      sub->add_option("--coloring", opt.coloring, "x11,x12 | x21,x22");
    if (std::string(c.name) == "golod" || std::string(c.name) == "massey") {
      sub->add_option("--N", opt.cfg.N, "Poincare series length")->check(CLI::Range(1, 16));
      sub->add_option("--pmax,--p_max", opt.cfg.pmax, "longest Massey tuple")->check(CLI::Range(2, 6));
      sub->add_option("--D", opt.cfg.D, "internal degree cap, 0 = automatic")->check(CLI::Range(0, 200));
    }
  }
  auto* minors = app.add_subcommand("minors", "maximal minors of a generic or ladder matrix");
  minors->add_option("--shape", opt.shape, "RxC");
  minors->add_option("--mask", opt.mask, "rows of 0/1 separated by '/', e.g. 1100/1111");
  minors->add_option("--t,--tmax", opt.cfg.tmax, "largest power")->check(CLI::Range(1, 3));
  minors->add_option("--orders", opt.cfg.orders, "random lex orders besides diagonal and grevlex")
      ->check(CLI::Range(0, 64));
  minors->add_option("--seed", opt.cfg.seed, "seed for the random orders");
  minors->add_option("--N", opt.cfg.N, "Poincare series length")->check(CLI::Range(1, 16));
  minors->add_option("--pmax,--p_max", opt.cfg.pmax, "longest Massey tuple")->check(CLI::Range(2, 6));
  minors->add_option("--D", opt.cfg.D, "internal degree cap")->check(CLI::Range(0, 200));
  minors->add_flag("--json", opt.json, "machine-readable output");
  auto* verify = app.add_subcommand("massey-verify", "re-verify a Massey table written by massey --json");
  verify->add_option("--table", opt.table, "JSON file")->required();
  verify->add_flag("--json", opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : GL_INPUT_ERROR;
  }
  opt.cfg.weights = opt.weights.empty() ? nullptr : opt.weights.c_str();
  opt.cfg.coloring = opt.coloring.empty() ? nullptr : opt.coloring.c_str();

  std::string command = app.get_subcommands().front()->get_name();
  if (!opt.batch.empty()) return runBatch(command, opt);
  Outcome o = runSingle(command, opt);
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
