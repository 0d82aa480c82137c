// Command-line front end for the affine Schur algebra engine.  Talks to
// the shared library exclusively through the C API; all payloads are the
// JSON forms documented in the README.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 (n, r) mismatch, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "afschur.h"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 4;

struct EngineHandle {
  afs_engine* ptr = nullptr;
  ~EngineHandle() { afs_engine_destroy(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { afs_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

int exit_code_for(afs_status status) {
  switch (status) {
    case AFS_OK:
      return 0;
    case AFS_ERR_PARSE:
      return kExitInputError;
    case AFS_ERR_MISMATCH:
      return kExitMismatch;
    case AFS_ERR_BAD_ARGUMENT:
      return kExitInputError;
    default:
      return kExitInternal;
  }
}

int fail(const afs_engine* engine, afs_status status) {
  std::cerr << "error: " << afs_engine_last_error(engine) << "\n";
  return exit_code_for(status);
}

std::string read_payload(const std::string& input_path, const std::string& inline_json) {
  if (!inline_json.empty()) return inline_json;
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open input file '" << input_path << "'\n";
    std::exit(kExitInputError);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string render_matrix_text(const json& m) {
  std::ostringstream os;
  const auto& entries = m.at("entries");
  if (entries.empty()) return "0";
  bool first = true;
  for (const auto& e : entries) {
    if (!first) os << "+";
    first = false;
    if (e.at(2).get<long long>() != 1) os << e.at(2).get<long long>();
    os << "E(" << e.at(0).get<long long>() << "," << e.at(1).get<long long>() << ")";
  }
  return os.str();
}

void print_element(afs_engine* engine, const std::string& element_json,
                   const std::string& format) {
  if (format == "json") {
    std::cout << element_json << "\n";
    return;
  }
  OwnedString text;
  if (afs_element_to_text(engine, element_json.c_str(), &text.ptr) == AFS_OK)
    std::cout << text.str() << "\n";
}

void print_coordinates(const std::string& coords_json, bool round_trip,
                       const std::string& format) {
  if (format == "json") {
    json doc = json::parse(coords_json);
    doc["round_trip"] = round_trip;
    std::cout << doc.dump() << "\n";
    return;
  }
  const json doc = json::parse(coords_json);
  for (const auto& c : doc.at("coordinates")) {
    std::cout << c.at("coeff").get<std::string>() << "  (Aplus="
              << render_matrix_text(c.at("Aplus"))
              << ", lambda=" << c.at("lambda").dump()
              << ", Aminus=" << render_matrix_text(c.at("Aminus")) << ")\n";
  }
  std::cout << "round trip: " << (round_trip ? "ok" : "FAILED") << "\n";
}

void print_verify_report(const std::string& report_json, const std::string& format) {
  if (format == "json") {
    std::cout << report_json << "\n";
    return;
  }
  const json doc = json::parse(report_json);
  for (const auto& rel : doc.at("relations")) {
    std::cout << rel.at("id").get<std::string>() << ": "
              << rel.at("instances").get<long long>() << " instances, "
              << rel.at("failures").size() << " failures";
    if (!rel.at("flagged").empty())
      std::cout << " (" << rel.at("flagged").size() << " flagged m=1 cases)";
    std::cout << "\n";
    for (const auto& f : rel.at("failures"))
      std::cout << "  FAIL " << f.at("instance").get<std::string>()
                << "  residual: " << f.at("residual").get<std::string>() << "\n";
  }
  std::cout << (doc.at("all_passed").get<bool>() ? "all relations hold"
                                                 : "RELATION FAILURES")
            << "\n";
}

void print_closed_form_report(const std::string& report_json,
                              const std::string& format) {
  if (format == "json") {
    std::cout << report_json << "\n";
    return;
  }
  const json doc = json::parse(report_json);
  std::cout << doc.at("instances").get<long long>() << " instances, "
            << doc.at("failures").size() << " failures\n";
  for (const auto& f : doc.at("failures"))
    std::cout << "  FAIL " << f.at("instance").get<std::string>() << "\n";
  std::cout << (doc.at("all_equal").get<bool>() ? "closed form agrees"
                                                : "CLOSED FORM MISMATCH")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the rational affine Schur algebra S(n, r)"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 2;
  long long r = 1;
  std::string format = "json";
  app.add_option("--n", n, "period n >= 2")->required();
  app.add_option("--r", r, "degree r >= 0")->required();
  app.add_option("--format", format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string input_path;
  std::string inline_json;
  std::string inline_word;
  int m_max = 2;
  int t_max = 3;
  long long band = -1;
  bool inject_fault = false;

  CLI::App* multiply = app.add_subcommand(
      "multiply", "evaluate a generator word or multiply two elements");
  multiply->add_option("--input", input_path, "payload file");
  multiply->add_option("--json", inline_json, "inline payload JSON");
  multiply->add_option("--word", inline_word,
                       "inline word, e.g. '[\"e1\",\"f1\"]'");

  CLI::App* normal_form =
      app.add_subcommand("normal-form", "PBW coordinates of an element");
  normal_form->add_option("--input", input_path, "element file");
  normal_form->add_option("--json", inline_json, "inline element JSON");

  CLI::App* verify =
      app.add_subcommand("verify", "machine-check the defining relations");
  verify->add_option("--mmax", m_max, "loop index bound (default 2)");
  verify->add_option("--tmax", t_max, "list length bound (default 3)");
  verify->add_option("--band", band, "enumeration band (default 2n)");
  verify->add_flag("--inject-fault", inject_fault,
                   "testing hook: corrupt one product");

  CLI::App* closed_form = app.add_subcommand(
      "closed-form-check", "compare the loop-generator family with its closed form");
  closed_form->add_option("--mmax", m_max, "loop index bound (default 2)");
  closed_form->add_option("--tmax", t_max, "list length bound (default 3)");

  CLI11_PARSE(app, argc, argv);

  EngineHandle engine;
  if (afs_engine_create(n, r, &engine.ptr) != AFS_OK) {
    std::cerr << "error: invalid algebra parameters (need n >= 2, r >= 0)\n";
    return kExitInputError;
  }

  if (multiply->parsed()) {
    std::string payload;
    if (!inline_word.empty())
      payload = inline_word;
    else
      payload = read_payload(input_path, inline_json);
    json doc;
    try {
      doc = json::parse(payload);
    } catch (const json::parse_error& err) {
      std::cerr << "error: " << err.what() << "\n";
      return kExitInputError;
    }
    OwnedString out;
    afs_status status = AFS_OK;
    if (doc.is_object() && doc.contains("x") && doc.contains("y")) {
      status = afs_multiply_elements(engine.ptr, doc.at("x").dump().c_str(),
                                     doc.at("y").dump().c_str(), &out.ptr);
    } else {
      status = afs_multiply_word(engine.ptr, payload.c_str(), &out.ptr);
    }
    if (status != AFS_OK) return fail(engine.ptr, status);
    print_element(engine.ptr, out.str(), format);
    return 0;
  }

  if (normal_form->parsed()) {
    const std::string payload = read_payload(input_path, inline_json);
    OwnedString coords;
    int round_trip = 0;
    const afs_status status =
        afs_normal_form(engine.ptr, payload.c_str(), &coords.ptr, &round_trip);
    if (status != AFS_OK) return fail(engine.ptr, status);
    print_coordinates(coords.str(), round_trip != 0, format);
    return round_trip != 0 ? 0 : kExitVerifyFailure;
  }

  if (verify->parsed()) {
    OwnedString report;
    int all_passed = 0;
    const afs_status status =
        afs_verify_presentation(engine.ptr, m_max, t_max, band,
                                inject_fault ? 1 : 0, &report.ptr, &all_passed);
    if (status != AFS_OK) return fail(engine.ptr, status);
    print_verify_report(report.str(), format);
    return all_passed != 0 ? 0 : kExitVerifyFailure;
  }

  if (closed_form->parsed()) {
    OwnedString report;
    int all_equal = 0;
    const afs_status status = afs_closed_form_check(engine.ptr, m_max, t_max,
                                                    &report.ptr, &all_equal);
    if (status != AFS_OK) return fail(engine.ptr, status);
    print_closed_form_report(report.str(), format);
    return all_equal != 0 ? 0 : kExitVerifyFailure;
  }

  return kExitInputError;
}
