// Copyright 2026 The painworth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// painworth command line. Talks to the library only through painworth.h.
//
// Exit codes: 0 success or gate Proceed, 1 usage/IO/analysis error,
// 2 invalid portfolio, 3 RedesignForValue, 4 RedesignForCost, 5 Drop.

#include <painworth/painworth.h>
#include <pthread.h>
#include <signal.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct StringDeleter {
  void operator()(char* s) const { pw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PortfolioDeleter {
  void operator()(pw_portfolio* p) const { pw_portfolio_free(p); }
};
using OwnedPortfolio = std::unique_ptr<pw_portfolio, PortfolioDeleter>;

// Thrown to unwind with a given exit code after the message was printed.
struct Exit {
  int code;
};

int exit_code_for(pw_status st) { return st == PW_E_VALIDATION ? kExitInvalid : kExitUsage; }

void check(pw_status st) {
  if (st == PW_OK) return;
  std::cerr << "painworth: " << pw_last_error_code() << ": " << pw_last_error() << "\n";
  throw Exit{exit_code_for(st)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "painworth: " << message << "\n";
  throw Exit{kExitUsage};
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

struct InputOptions {
  std::string file;
  std::string input_format;  // empty: by extension
  std::string kind;          // empty: all pains

  void add_to(CLI::App* cmd) {
    cmd->add_option("file", file, "Portfolio file (JSON or CSV), - for stdin")->required();
    cmd->add_option("--input-format", input_format, "json or csv; default from the file extension")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--kind", kind, "Restrict to operational or structural pains")
        ->check(CLI::IsMember({"operational", "structural"}));
  }

  OwnedPortfolio load() const {
    pw_portfolio_format fmt = PW_FORMAT_JSON;
    if (input_format == "csv" || (input_format.empty() && file.size() >= 4 &&
                                  file.compare(file.size() - 4, 4, ".csv") == 0)) {
      fmt = PW_FORMAT_CSV;
    }
    const std::string bytes = read_input(file);
    pw_portfolio* raw = nullptr;
    check(pw_portfolio_parse(bytes.data(), bytes.size(), fmt, &raw));
    OwnedPortfolio p(raw);
    if (kind.empty()) return p;
    pw_portfolio* filtered = nullptr;
    check(pw_portfolio_filter_kind(p.get(), kind.c_str(), &filtered));
    return OwnedPortfolio(filtered);
  }
};

struct CostOptions {
  std::optional<std::string> development;
  std::optional<std::string> annual;
  std::optional<std::int64_t> years;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--dev-cost", development, "One-off development cost");
    cmd->add_option("--annual-cost", annual, "Annual operating cost");
    cmd->add_option("--amortization", years, "Years over which development is spread")
        ->check(CLI::PositiveNumber);
  }

  pw_cost_options c_options() const {
    pw_cost_options c{};
    c.development = development ? development->c_str() : nullptr;
    c.annual_operation = annual ? annual->c_str() : nullptr;
    c.amortization_years = years.value_or(0);
    return c;
  }
};

void print(const OwnedString& s) { std::cout << s.get() << std::flush; }

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

int gate_exit_code(pw_gate_action action) {
  switch (action) {
    case PW_ADVANCE_STAGE: return 0;
    case PW_REDESIGN_FOR_VALUE: return 3;
    case PW_REDESIGN_FOR_COST: return 4;
    case PW_DROP: return 5;
  }
  return kExitUsage;
}

int serve(const std::string& host, std::optional<int> port_flag, std::optional<std::string> dir_flag) {
  int port = 8080;
  if (port_flag) {
    port = *port_flag;
  } else if (const char* env = std::getenv("PAINWORTH_PORT")) {
    try {
      port = std::stoi(env);
    } catch (const std::exception&) {
      usage_error(std::string("PAINWORTH_PORT is not a port number: ") + env);
    }
  }
  std::string dir;
  if (dir_flag) {
    dir = *dir_flag;
  } else if (const char* env = std::getenv("PAINWORTH_DATA_DIR")) {
    dir = env;
  } else {
    usage_error("serve needs --data-dir or PAINWORTH_DATA_DIR");
  }

  // Block the stop signals before any server thread exists so that only
  // sigwait below receives them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  pw_server* server = nullptr;
  check(pw_server_start(dir.c_str(), host.c_str(), port, &server));
  std::cout << "painworth: serving " << dir << " on http://" << host << ":" << pw_server_port(server) << std::endl;
  int sig = 0;
  sigwait(&stop_signals, &sig);
  std::cerr << "painworth: stopping\n";
  pw_server_stop(server);
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Value of solving customer pains: evaluation, pricing, gating and what-if analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pw_version());

  InputOptions validate_in;
  auto* validate = app.add_subcommand("validate", "Check a portfolio file and report every issue");
  validate_in.add_to(validate);

  InputOptions eval_in;
  CostOptions eval_cost;
  std::string eval_format = "table";
  std::optional<std::string> share;
  std::string basis = "all";
  auto* evaluate = app.add_subcommand("evaluate", "Value report with price ceiling, fee and net value");
  eval_in.add_to(evaluate);
  eval_cost.add_to(evaluate);
  evaluate->add_option("--format", eval_format)->check(CLI::IsMember({"table", "markdown", "csv", "json"}));
  evaluate->add_option("--share", share, "Revenue share of the price ceiling, 0..1");
  evaluate->add_option("--ceiling-basis", basis)->check(CLI::IsMember({"all", "customer-only"}));

  InputOptions gate_in;
  CostOptions gate_cost;
  std::string value_target, cost_budget;
  std::optional<std::string> min_margin;
  std::string gate_format = "text";
  auto* gate = app.add_subcommand("gate", "Funnel gate verdict; exit code encodes the action");
  gate_in.add_to(gate);
  gate_cost.add_to(gate);
  gate->add_option("--value-target", value_target, "Minimum annual economic value")->required();
  gate->add_option("--cost-budget", cost_budget, "Maximum annualized cost")->required();
  gate->add_option("--min-margin", min_margin, "Minimum value minus cost (default 0)");
  gate->add_option("--format", gate_format)->check(CLI::IsMember({"text", "json"}));

  InputOptions sweep_in;
  std::string sweep_path, sweep_from, sweep_to, sweep_format = "csv";
  int steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Economic value over a range of one parameter");
  sweep_in.add_to(sweep);
  sweep->add_option("--path", sweep_path, "pain(<id>).line(<agent>).{frequency|impact|alleviation}")->required();
  sweep->add_option("--from", sweep_from)->required();
  sweep->add_option("--to", sweep_to)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));

  InputOptions be_in;
  std::optional<std::string> be_cost;
  std::string be_format = "csv";
  auto* breakeven = app.add_subcommand("breakeven", "Uniform alleviation scale at which value equals cost");
  be_in.add_to(breakeven);
  breakeven->add_option("--cost", be_cost, "Annualized cost; default from the portfolio cost model");
  breakeven->add_option("--format", be_format)->check(CLI::IsMember({"csv", "json"}));

  InputOptions tornado_in;
  std::string rel, tornado_format = "csv";
  auto* tornado = app.add_subcommand("tornado", "Rank parameters by influence on economic value");
  tornado_in.add_to(tornado);
  tornado->add_option("--rel", rel, "Relative perturbation, 0 < rel < 1")->required();
  tornado->add_option("--format", tornado_format)->check(CLI::IsMember({"csv", "json"}));

  std::string host = "127.0.0.1";
  std::optional<int> port;
  std::optional<std::string> data_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API (loopback by default, no authentication)");
  serve_cmd->add_option("--port", port, "Port, 0 for any free port; default PAINWORTH_PORT or 8080")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--data-dir", data_dir, "Archive directory; default PAINWORTH_DATA_DIR");
  serve_cmd->add_option("--host", host, "Listen address");

  std::string demo_format = "json";
  auto* demo = app.add_subcommand("demo", "Print the bundled demo portfolio");
  demo->add_option("--format", demo_format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*validate) {
    auto p = validate_in.load();
    OwnedString id;
    char* raw = nullptr;
    check(pw_portfolio_id(p.get(), &raw));
    id.reset(raw);
    std::cout << id.get() << ": valid\n";
    return kExitOk;
  }
  if (*evaluate) {
    auto p = eval_in.load();
    pw_eval_options o{};
    o.revenue_share = opt(share);
    o.ceiling_basis = basis.c_str();
    o.cost = eval_cost.c_options();
    char* out = nullptr;
    check(pw_evaluate(p.get(), &o, eval_format.c_str(), &out));
    print(OwnedString(out));
    return kExitOk;
  }
  if (*gate) {
    auto p = gate_in.load();
    pw_gate_options o{};
    o.value_target = value_target.c_str();
    o.cost_budget = cost_budget.c_str();
    o.min_margin = opt(min_margin);
    o.cost = gate_cost.c_options();
    pw_gate_action action = PW_ADVANCE_STAGE;
    char* out = nullptr;
    check(pw_gate(p.get(), &o, gate_format.c_str(), &action, &out));
    print(OwnedString(out));
    return gate_exit_code(action);
  }
  if (*sweep) {
    auto p = sweep_in.load();
    char* out = nullptr;
    check(pw_sweep(p.get(), sweep_path.c_str(), sweep_from.c_str(), sweep_to.c_str(), steps,
                   sweep_format.c_str(), &out));
    print(OwnedString(out));
    return kExitOk;
  }
  if (*breakeven) {
    auto p = be_in.load();
    char* out = nullptr;
    check(pw_breakeven(p.get(), opt(be_cost), be_format.c_str(), &out));
    print(OwnedString(out));
    return kExitOk;
  }
  if (*tornado) {
    auto p = tornado_in.load();
    char* out = nullptr;
    check(pw_tornado(p.get(), rel.c_str(), tornado_format.c_str(), &out));
    print(OwnedString(out));
    return kExitOk;
  }
  if (*serve_cmd) return serve(host, port, data_dir);
  if (*demo) {
    char* out = nullptr;
    if (demo_format == "json") {
      check(pw_demo_fixture(&out));
    } else {
      pw_portfolio* raw = nullptr;
      check(pw_demo_portfolio(&raw));
      OwnedPortfolio p(raw);
      check(pw_portfolio_serialize(p.get(), PW_FORMAT_CSV, &out));
    }
    print(OwnedString(out));
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  }
}
