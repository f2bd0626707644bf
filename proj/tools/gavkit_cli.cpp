// gavkit: command-line front end.
// Exit codes: 0 success, 1 invalid input, 2 not Q-Gorenstein / not Fano,
// 3 internal invariant breach.

#include "gavkit/io/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gavkit;

namespace {

constexpr long long kMaxClassifyIndex = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidData("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidData("cannot write " + out);
  f << j.dump(2) << "\n";
}

int fail(int code, const std::string& kind, const std::string& msg) {
  json j;
  j["error"] = kind;
  j["message"] = msg;
  std::cout << j.dump(2) << "\n";
  std::cerr << "gavkit: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anticanonical complex and Gorenstein index of general arrangement varieties"};
  app.require_subcommand(1);

  std::string file, out, method = "both";
  long long iota = 1, bound = 60;
  std::vector<int> settings;
  std::size_t jobs = 1;
  bool toric = false;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "input JSON document")->required(); };
  auto* validate_cmd = app.add_subcommand("validate", "check the defining conditions");
  add_file(validate_cmd);
  auto* info_cmd = app.add_subcommand("info", "class group, degrees, -K, moving cone, Fano test");
  add_file(info_cmd);
  auto* fan_cmd = app.add_subcommand("fan", "the fan (given or Sigma(-K)) and its minimal version");
  add_file(fan_cmd);
  auto* trop_cmd = app.add_subcommand("trop", "leaves of trop(X) and cone classification");
  add_file(trop_cmd);
  auto* ac_cmd = app.add_subcommand("acomplex", "anticanonical complex with boundary distances");
  add_file(ac_cmd);
  auto* gor_cmd = app.add_subcommand("gorenstein", "Gorenstein index");
  add_file(gor_cmd);
  gor_cmd->add_option("--method", method, "complex, cones or both")->check(CLI::IsMember({"complex", "cones", "both"}));
  gor_cmd->add_flag("--toric", toric, "input is a bare fan {dim, rays, cones}; use the toric formula");
  auto* cls_cmd = app.add_subcommand("classify", "candidates of the five settings at a given index");
  cls_cmd->add_option("--index", iota, "Gorenstein index")->required();
  cls_cmd->add_option("--setting", settings, "settings to run (default: all)")->check(CLI::Range(1, 5));
  cls_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  cls_cmd->add_option("--out", out, "report file (default: stdout)");
  auto* oracle_cmd = app.add_subcommand("oracle", "independent checks");
  oracle_cmd->require_subcommand(1);
  auto* box_cmd = oracle_cmd->add_subcommand("box-search", "brute-force scan of a parameter box");
  box_cmd->add_option("--setting", settings, "setting")->required()->check(CLI::Range(1, 5));
  box_cmd->add_option("--index", iota, "Gorenstein index")->required();
  box_cmd->add_option("--bound", bound, "box bound B");
  box_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  box_cmd->add_option("--out", out, "report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate_cmd) {
      InputDocument doc;
      try {
        doc = parse_input_text(read_file(file));
      } catch (const InvalidData& e) {
        json j;
        j["valid"] = false;
        j["violations"] = {e.what()};
        emit(j, out);
        return 1;
      }
      json j = validate_report(doc.data);
      emit(j, out);
      return j["valid"].get<bool>() ? 0 : 1;
    }
    if (*gor_cmd && toric) {
      json in;
      try {
        in = json::parse(read_file(file));
      } catch (const json::parse_error& e) {
        throw InvalidData(std::string("parse error: ") + e.what());
      }
      Fan f = parse_toric_fan(in);
      json j;
      j["method"] = "toric";
      j["gorenstein_index"] = to_json(toric_gorenstein_index(f));
      emit(j, out);
      return 0;
    }
    if (*cls_cmd) {
      if (iota < 1 || iota > kMaxClassifyIndex)
        return fail(1, "invalid_input", "index must lie in [1, " + std::to_string(kMaxClassifyIndex) + "]");
      if (settings.empty()) settings = {1, 2, 3, 4, 5};
      emit(classify_report(classify(iota, settings, jobs)), out);
      return 0;
    }
    if (*box_cmd) {
      if (bound < 1) return fail(1, "invalid_input", "bound must be positive");
      if (iota < 1) return fail(1, "invalid_input", "index must be positive");
      json all = json::array();
      for (int id : settings) all.push_back(box_report(id, iota, bound, brute_force_box(id, iota, bound, jobs)));
      emit(all, out);
      return 0;
    }
    InputDocument doc = parse_input_text(read_file(file));
    require_valid(doc.data);
    if (*info_cmd) emit(info_report(doc.data), out);
    else if (*fan_cmd) emit(fan_report(doc), out);
    else if (*trop_cmd) emit(trop_report(doc), out);
    else if (*ac_cmd) emit(acomplex_report(doc), out);
    else if (*gor_cmd) {
      IndexMethod m = method == "complex" ? IndexMethod::Complex : method == "cones" ? IndexMethod::Cones : IndexMethod::Both;
      emit(gorenstein_report(doc, m), out);
    }
    return 0;
  } catch (const NotQGorensteinOnCone& e) {
    return fail(2, "not_q_gorenstein", std::string(e.what()) + " on cone " + e.cone());
  } catch (const NotQGorenstein& e) {
    return fail(2, "not_q_gorenstein", e.what());
  } catch (const NotAmple& e) {
    return fail(2, "not_fano", e.what());
  } catch (const NotQuasiprojectiveSetup& e) {
    return fail(2, "not_fano", e.what());
  } catch (const DegenerateCell& e) {
    return fail(2, "degenerate_cell", e.what());
  } catch (const NotLatticeMeasurable& e) {
    return fail(2, "not_lattice_measurable", e.what());
  } catch (const InvariantBreach& e) {
    return fail(3, "invariant_breach", e.what());
  } catch (const InvalidData& e) {
    return fail(1, "invalid_input", e.what());
  } catch (const MalformedFanCone& e) {
    return fail(1, "invalid_input", e.what());
  } catch (const PreconditionViolation& e) {
    return fail(1, "invalid_input", e.what());
  } catch (const std::exception& e) {
    return fail(3, "internal_error", e.what());
  }
}
