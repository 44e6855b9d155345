#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "onep/codec.hpp"
#include "onep/crossing.hpp"
#include "onep/families.hpp"
#include "onep/graph.hpp"
#include "onep/join.hpp"
#include "onep/one_planar.hpp"
#include "onep/verify.hpp"
#include "onep/witness_io.hpp"

namespace {

using namespace onep;

// exit codes: 0 definite answer, 2 inconclusive, 1 usage or input error

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

const char* status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    default: return "open";
  }
}

std::string file_stem(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(c);
    else if (!out.empty() && out.back() != '_')
      out.push_back('_');
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "graph" : out;
}

struct BudgetFlags {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited

  SearchBudget budget() const {
    SearchBudget b;
    if (max_nodes) b.max_nodes = max_nodes;
    if (max_seconds > 0) b.max_seconds = max_seconds;
    return b;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "node budget for the search (0 = unlimited)");
    cmd->add_option("--max-seconds", max_seconds, "wall-clock budget (0 = unlimited)");
  }
};

struct TestCmd {
  std::string input;
  BudgetFlags budget;
  bool outer = false;
  bool dot = false;
  bool timing = false;

  int run() const {
    const Graph g = load_graph_file(input);
    const Verdict v =
        outer ? is_outer_one_planar(g, budget.budget()) : is_one_planar(g, budget.budget());
    std::cout << verdict_to_json(v, timing) << "\n";
    if (v.witness.has_value()) {
      const std::string path = input + ".witness.json";
      write_file(path, witness_to_json(*v.witness) + "\n");
      std::cerr << "witness written to " << path << "\n";
      if (dot) write_file(input + ".dot", to_dot(g, v.witness->plan));
    } else if (dot) {
      write_file(input + ".dot", to_dot(g));
    }
    return v.answer == Answer::inconclusive ? 2 : 0;
  }
};

struct JoinCmd {
  std::string left, right;
  BudgetFlags budget;
  bool witness = false;
  bool dot = false;
  bool timing = false;

  int run() const {
    const Graph g = load_graph_file(left);
    const Graph h = load_graph_file(right);
    const JoinDecision d = decide_join(g, h, budget.budget(), witness);
    std::cout << join_decision_to_json(d, timing) << "\n";
    if (d.witness.has_value()) {
      const std::string path = left + "+" + file_stem(right) + ".witness.json";
      write_file(path, witness_to_json(*d.witness) + "\n");
      std::cerr << "witness written to " << path << "\n";
      if (dot) write_file(left + "+" + file_stem(right) + ".dot",
                          to_dot(join(g, h), d.witness->plan));
    }
    return d.answer == Answer::inconclusive ? 2 : 0;
  }
};

struct CrCmd {
  std::string input;
  int max_k = 6;
  BudgetFlags budget;
  bool dot = false;
  bool timing = false;

  int run() const {
    const Graph g = load_graph_file(input);
    const CrResult r = crossing_number(g, max_k, budget.budget());
    std::cout << cr_result_to_json(r, timing) << "\n";
    if (dot && r.witness.has_value())
      write_file(input + ".cr.dot", to_dot(g, *r.witness));
    return r.value.has_value() ? 0 : 2;
  }
};

struct GenCmd {
  std::string family;
  std::vector<std::string> params;
  std::string outdir = ".";

  FamilyInstance make() const {
    const auto num = [&](size_t i) {
      if (i >= params.size()) throw std::invalid_argument(family + ": missing parameter");
      return std::stoi(params[i]);
    };
    if (family == "ladder") return ladder_family(num(0));
    if (family == "cycle-square") return cycle_square(num(0));
    if (family == "cycle-square-join") return cycle_square_join(num(0));
    if (family == "chorded") return chorded_cycle(num(0));
    if (family == "four-vertex") {
      const int idx = num(0);
      FamilyInstance inst;
      inst.name = "four-vertex-" + std::to_string(idx);
      inst.graph = four_vertex_graph(idx);
      return inst;
    }
    if (family == "named") {
      if (params.empty()) throw std::invalid_argument("named: missing expression");
      return named(params[0]);
    }
    throw std::invalid_argument("unknown family: " + family);
  }

  int run() const {
    const FamilyInstance inst = make();
    std::filesystem::create_directories(outdir);
    const std::string base = outdir + "/" + sanitize(inst.name);
    write_file(base + ".g6", to_graph6(inst.graph) + "\n");
    nlohmann::json props;
    props["name"] = inst.name;
    props["n"] = inst.graph.n;
    props["edges"] = inst.graph.edge_count();
    nlohmann::json expected = nlohmann::json::array();
    for (const auto& p : inst.expected) expected.push_back(p.description);
    props["expected"] = std::move(expected);
    write_file(base + ".props.json", props.dump(2) + "\n");
    std::cout << "wrote " << base << ".g6 and " << base << ".props.json\n";
    if (inst.witness.has_value()) {
      write_file(base + ".witness.json", witness_to_json(*inst.witness) + "\n");
      std::cout << "wrote " << base << ".witness.json\n";
    }
    return 0;
  }
};

struct VerifyCmd {
  bool quick = false;
  bool full = false;
  bool list = false;
  bool timing = false;
  std::vector<std::string> only;
  std::string json_path, md_path;

  int run() const {
    if (list) {
      for (const auto& id : claim_ids()) std::cout << id << "\n";
      return 0;
    }
    VerifyOptions opt;
    opt.quick = true;
    if (const char* env = std::getenv("ONEP_BUDGET_PROFILE")) {
      const std::string p = env;
      if (p == "full")
        opt.quick = false;
      else if (p != "quick" && !p.empty())
        std::cerr << "ignoring unknown ONEP_BUDGET_PROFILE value: " << p << "\n";
    }
    if (quick) opt.quick = true;
    if (full) opt.quick = false;
    opt.only = only;
    const auto progress = [](const ClaimRecord& r) {
      std::cout << "[" << status_text(r.status) << "] " << r.id << ": " << r.computed
                << std::endl;
    };
    const VerificationReport rep = run_claims(opt, progress);
    std::cout << "profile " << rep.profile << ": " << rep.passed << " pass, " << rep.failed
              << " fail, " << rep.inconclusive << " inconclusive -> "
              << (rep.ok ? "PASS" : "FAIL") << "\n";
    if (!json_path.empty()) write_file(json_path, report_to_json(rep, timing) + "\n");
    if (!md_path.empty()) write_file(md_path, report_to_markdown(rep, timing));
    return rep.ok ? 0 : (rep.failed ? 1 : 2);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 1-planarity toolkit: decisions, joins, crossing numbers, claim suite"};
  app.require_subcommand(1);

  TestCmd test;
  auto* t = app.add_subcommand("test", "decide 1-planarity of a graph file");
  t->add_option("input", test.input, "graph file (.g6 or .json)")->required();
  test.budget.attach(t);
  t->add_flag("--outer", test.outer, "decide outer-1-planarity instead");
  t->add_flag("--dot", test.dot, "write a DOT rendering next to the input");
  t->add_flag("--timing", test.timing, "include wall-clock time in the output");

  JoinCmd joinc;
  auto* j = app.add_subcommand("join", "decide 1-planarity of a join of two graph files");
  j->add_option("G", joinc.left, "first factor file")->required();
  j->add_option("H", joinc.right, "second factor file")->required();
  joinc.budget.attach(j);
  j->add_flag("--witness", joinc.witness, "also search for a drawing on theorem-decided joins");
  j->add_flag("--dot", joinc.dot, "write a DOT rendering of the drawing");
  j->add_flag("--timing", joinc.timing, "include wall-clock time in the output");

  CrCmd cr;
  auto* c = app.add_subcommand("cr", "exact crossing number by iterative deepening");
  c->add_option("input", cr.input, "graph file")->required();
  c->add_option("--max", cr.max_k, "deepest level to search (default 6)");
  cr.budget.attach(c);
  c->add_flag("--dot", cr.dot, "write a DOT rendering of the certified drawing");
  c->add_flag("--timing", cr.timing, "include wall-clock time in the output");

  GenCmd gen;
  auto* g = app.add_subcommand("gen", "write a family instance with its property sidecar");
  g->add_option("family", gen.family,
                "ladder | cycle-square | cycle-square-join | chorded | four-vertex | named")
      ->required();
  g->add_option("params", gen.params, "family parameters (size, or an expression for named)");
  g->add_option("-o,--outdir", gen.outdir, "output directory (default .)");

  VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "run the recorded claim suite and report");
  v->add_flag("--quick", verify.quick, "tight node caps (default profile)");
  v->add_flag("--full", verify.full, "generous node caps; open claims gate the result");
  v->add_flag("--list", verify.list, "list claim ids and exit");
  v->add_flag("--timing", verify.timing, "include wall-clock times in reports");
  v->add_option("--only", verify.only, "restrict to claim ids or groups");
  v->add_option("--json", verify.json_path, "write the JSON report here");
  v->add_option("--markdown", verify.md_path, "write the markdown report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(t)) return test.run();
    if (app.got_subcommand(j)) return joinc.run();
    if (app.got_subcommand(c)) return cr.run();
    if (app.got_subcommand(g)) return gen.run();
    if (app.got_subcommand(v)) return verify.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
