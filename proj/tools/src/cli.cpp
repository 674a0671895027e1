#include "twistzhu/cli/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "twistzhu/cli/report.hpp"
#include "twistzhu/cli/suites.hpp"
#include "twistzhu/delta.hpp"
#include "twistzhu/expression.hpp"
#include "twistzhu/tensor.hpp"
#include "twistzhu/zhu.hpp"

namespace twistzhu::cli {

namespace {

struct AjArgs {
  int k = 1;
  int order = 6;
};

struct ZhuArgs {
  std::string op;
  int k = 1;
  std::string u;
  std::string v;
};

int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kExitUsage;
  }
  file << text;
  return kExitPass;
}

int cmd_aj(const AjArgs& a, bool json, const std::string& out_path, std::ostream& out,
           std::ostream& err) {
  const AjTable t = solve_aj(a.k, a.order);
  std::string text;
  if (json) {
    Json doc;
    doc["schema"] = "twistzhu.aj/1";
    doc["k"] = t.k;
    doc["order"] = t.order;
    Json arr = Json::array();
    for (const auto& c : t.a) arr.push_back(c.to_string());
    doc["a"] = arr;
    text = doc.dump(2) + "\n";
  } else {
    text = "k = " + std::to_string(t.k) + ", order = " + std::to_string(t.order) + "\n";
    for (int j = 1; j <= t.order; ++j)
      text += "a_" + std::to_string(j) + " = " + t.at(j).to_string() + "\n";
  }
  return emit(text, out_path, out, err);
}

int cmd_verify(const VerifyOptions& opts, bool json, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  if (opts.max_k > 8 || opts.max_weight > 5)
    err << "warning: k > 8 or max weight > 5 is outside the default envelope; expect a long run\n";
  const Report report = run_verify(opts);
  const std::string text = json ? report.to_json().dump(2) + "\n" : report.to_text();
  const int code = emit(text, out_path, out, err);
  if (code != kExitPass) return code;
  return report.any_failed() ? kExitCheckFailed : kExitPass;
}

int cmd_zhu(const ZhuArgs& a, bool json, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  const Model& model = heisenberg();
  std::string result;
  auto parse_or_report = [&](const std::string& what, const std::string& text, auto parse) {
    try {
      return parse(text);
    } catch (const ParseError& e) {
      err << "error: cannot parse --" << what << ": " << e.what() << "\n  " << text << "\n  "
          << std::string(e.position(), ' ') << "^\n";
      throw;
    }
  };
  try {
    if (a.op == "star" || a.op == "circ") {
      auto pv = [](const std::string& s) { return parse_vector(s); };
      const Vector u = parse_or_report("u", a.u, pv);
      const Vector v = parse_or_report("v", a.v, pv);
      result = to_string(a.op == "star" ? star(model, u, v) : circ(model, u, v));
    } else {
      const int k = a.k;
      auto pt = [k](const std::string& s) { return parse_tensor(s, k); };
      const TensorVector u = parse_or_report("u", a.u, pt);
      const TensorVector v = parse_or_report("v", a.v, pt);
      const TensorPower tensor(model, k);
      result = to_string(a.op == "star_g" ? tensor.star_g(u, v) : tensor.circ_g(u, v));
    }
  } catch (const ParseError&) {
    return kExitUsage;
  }
  std::string text;
  if (json) {
    Json doc;
    doc["schema"] = "twistzhu.zhu/1";
    doc["op"] = a.op;
    doc["k"] = a.k;
    doc["u"] = a.u;
    doc["v"] = a.v;
    doc["result"] = result;
    text = doc.dump(2) + "\n";
  } else {
    text = result + "\n";
  }
  return emit(text, out_path, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact twisted Zhu algebra engine for the k-cycle permutation orbifold", "twistzhu"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  bool json = false;
  std::string out_path;

  AjArgs aj;
  auto* aj_cmd = app.add_subcommand("aj", "Solve for the Delta_k coefficients a_1..a_N");
  aj_cmd->add_option("--k", aj.k, "Cycle length k")->required()->check(CLI::Range(1, 64));
  aj_cmd->add_option("--order", aj.order, "Number of coefficients N")
      ->required()
      ->check(CLI::Range(1, 256));

  VerifyOptions vo;
  int corrupt = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and print a report");
  verify_cmd->add_option("--suite", vo.suite, "Suite to run")
      ->check(CLI::IsMember({"identities", "change-of-var", "prop31", "main", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--k", vo.max_k, "Run every cycle length up to K")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  verify_cmd->add_option("--max-weight", vo.max_weight, "Largest basis weight W")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  verify_cmd->add_option("--order", vo.order, "Series order N")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify_cmd->add_option("--trials", vo.trials, "Random change-of-variables trials")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  verify_cmd->add_option("--seed", vo.seed, "Seed for randomized checks")->capture_default_str();
  verify_cmd->add_option("--corrupt-aj", corrupt, "Fault injection: add 1 to a_J")
      ->check(CLI::Range(1, 256))
      ->group("");

  ZhuArgs zhu;
  auto* zhu_cmd = app.add_subcommand("zhu", "Evaluate a Zhu product");
  zhu_cmd->add_option("--op", zhu.op, "Product")
      ->required()
      ->check(CLI::IsMember({"star", "circ", "star_g", "circ_g"}));
  zhu_cmd->add_option("--k", zhu.k, "Cycle length for star_g / circ_g")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  zhu_cmd->add_option("--u", zhu.u, "Left argument")->required();
  zhu_cmd->add_option("--v", zhu.v, "Right argument")->required();

  for (auto* cmd : {aj_cmd, verify_cmd, zhu_cmd}) {
    cmd->add_flag("--json", json, "Structured output");
    cmd->add_option("--out", out_path, "Write output to FILE instead of standard output");
  }

  auto active = [&]() -> const CLI::App* {
    for (const auto* sub : {aj_cmd, verify_cmd, zhu_cmd})
      if (sub->parsed()) return sub;
    return &app;
  };
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << active()->help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active()->help();
    return kExitUsage;
  }
  if (verify_cmd->count("--corrupt-aj") > 0) vo.corrupt_aj = corrupt;

  try {
    if (aj_cmd->parsed()) return cmd_aj(aj, json, out_path, out, err);
    if (verify_cmd->parsed()) return cmd_verify(vo, json, out_path, out, err);
    return cmd_zhu(zhu, json, out_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace twistzhu::cli
