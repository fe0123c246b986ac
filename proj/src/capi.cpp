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


#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "painworth/alleviation.hpp"
#include "painworth/analysis_report.hpp"
#include "painworth/api_service.hpp"
#include "painworth/demo.hpp"
#include "painworth/painworth.h"
#include "painworth/portfolio_io.hpp"
#include "painworth/report.hpp"
#include "painworth/sensitivity.hpp"
#include "painworth/valuation.hpp"

struct pw_portfolio {
  painworth::Portfolio value;
};

struct pw_server {
  explicit pw_server(const char* data_dir) : server(data_dir) {}
  painworth::ApiServer server;
};

namespace {

using namespace painworth;

thread_local std::string last_error;
thread_local std::string last_error_code;

pw_status status_for(Errc code) {
  switch (code) {
    case Errc::NotFound: return PW_E_NOT_FOUND;
    case Errc::ConcurrentWriteConflict: return PW_E_CONFLICT;
    case Errc::IoError:
    case Errc::StorageFull: return PW_E_IO;
    case Errc::PathNotFound:
    case Errc::DomainViolation:
    case Errc::Unreachable:
    case Errc::ZeroValuePortfolio:
    case Errc::NoPositives:
    case Errc::NoBeneficiary: return PW_E_DOMAIN;
    case Errc::InvalidArgument:
    case Errc::ShareOutOfRange:
    case Errc::InvalidCostModel:
    case Errc::CurrencyMismatch:
    case Errc::Overflow: return PW_E_INVALID_ARGUMENT;
    default: return PW_E_VALIDATION;
  }
}

pw_status fail(pw_status status, std::string code, std::string message) {
  last_error_code = std::move(code);
  last_error = std::move(message);
  return status;
}

pw_status fail(const Error& e) {
  std::string message = e.what();
  if (!e.issues().empty()) {
    message.clear();
    for (const auto& i : e.issues()) message += i.to_string() + "\n";
    message.pop_back();
  }
  return fail(status_for(e.code()), std::string(errc_name(e.code())), std::move(message));
}

pw_status invalid(const std::string& message) {
  return fail(PW_E_INVALID_ARGUMENT, "InvalidArgument", message);
}

// Runs `body`, translating exceptions into a status. Nothing escapes.
pw_status guarded(const std::function<void()>& body) {
  try {
    body();
    last_error.clear();
    last_error_code.clear();
    return PW_OK;
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::bad_alloc&) {
    return fail(PW_E_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(PW_E_INTERNAL, "Internal", e.what());
  } catch (...) {
    return fail(PW_E_INTERNAL, "Internal", "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(Errc::InvalidArgument, what);
}

Money money_arg(const char* text, Currency currency, const char* what) {
  auto m = Money::parse(text, currency);
  if (!m) throw Error(Errc::InvalidArgument, std::string(what) + " must be a dot-decimal amount, got '" + text + "'");
  return *m;
}

Decimal decimal_arg(const char* text, const char* what) {
  auto d = Decimal::parse(text);
  if (!d) throw Error(Errc::InvalidArgument, std::string(what) + " must be a dot-decimal number, got '" + text + "'");
  return *d;
}

std::optional<CostModel> resolve_cost(const pw_cost_options& c, const Portfolio& p) {
  if (!c.development && !c.annual_operation && c.amortization_years == 0) return std::nullopt;
  CostModel base = p.cost_model.value_or(CostModel{Money::zero(p.currency), Money::zero(p.currency), 1});
  if (c.development) base.development = money_arg(c.development, p.currency, "development cost");
  if (c.annual_operation) base.annual_operation = money_arg(c.annual_operation, p.currency, "annual cost");
  if (c.amortization_years != 0) base.amortization_years = c.amortization_years;
  return CostModel::make(base.development, base.annual_operation, base.amortization_years);
}

enum class MachineFormat { Csv, Json };

MachineFormat machine_format(const char* format) {
  const std::string f = format ? format : "csv";
  if (f == "csv") return MachineFormat::Csv;
  if (f == "json") return MachineFormat::Json;
  throw Error(Errc::InvalidArgument, "format must be csv or json");
}

PortfolioFormat portfolio_format(pw_portfolio_format f) {
  switch (f) {
    case PW_FORMAT_JSON: return PortfolioFormat::Json;
    case PW_FORMAT_CSV: return PortfolioFormat::Csv;
  }
  throw Error(Errc::InvalidArgument, "unknown portfolio format");
}

}  // namespace

extern "C" {

const char* pw_version(void) { return "0.1.0"; }

const char* pw_last_error(void) { return last_error.c_str(); }

const char* pw_last_error_code(void) { return last_error_code.c_str(); }

void pw_string_free(char* s) { std::free(s); }

pw_status pw_portfolio_parse(const char* bytes, size_t len, pw_portfolio_format format, pw_portfolio** out) {
  if (!out || (!bytes && len > 0)) return invalid("null argument");
  *out = nullptr;
  pw_status st = guarded([&] {
    auto result = parse_portfolio(std::string_view(bytes ? bytes : "", len), portfolio_format(format));
    *out = new pw_portfolio{result.value()};
  });
  // Anything wrong with the document itself is a validation failure.
  return st == PW_OK || st == PW_E_INTERNAL ? st : PW_E_VALIDATION;
}

pw_status pw_demo_portfolio(pw_portfolio** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new pw_portfolio{demo_portfolio()}; });
}

void pw_portfolio_free(pw_portfolio* p) { delete p; }

pw_status pw_portfolio_filter_kind(const pw_portfolio* p, const char* kind, pw_portfolio** out) {
  if (!p || !kind || !out) return invalid("null argument");
  return guarded([&] {
    auto k = parse_pain_kind(kind);
    require(k.has_value(), "kind must be operational or structural");
    *out = new pw_portfolio{filter_by_kind(p->value, *k)};
  });
}

pw_status pw_portfolio_serialize(const pw_portfolio* p, pw_portfolio_format format, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(serialize_portfolio(p->value, portfolio_format(format))); });
}

pw_status pw_portfolio_id(const pw_portfolio* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(p->value.id); });
}

pw_status pw_demo_fixture(char** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = dup_string(demo_fixture_json()); });
}

pw_status pw_evaluate(const pw_portfolio* p, const pw_eval_options* options, const char* format, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    auto fmt = parse_report_format(format ? format : "table");
    require(fmt.has_value(), "format must be table, markdown, csv or json");
    EvaluationOptions opts;
    if (options) {
      if (options->revenue_share) opts.revenue_share = decimal_arg(options->revenue_share, "revenue share");
      if (options->ceiling_basis) {
        auto b = parse_ceiling_basis(options->ceiling_basis);
        require(b.has_value(), "ceiling basis must be all or customer-only");
        opts.basis = *b;
      }
      opts.cost_model = resolve_cost(options->cost, p->value);
    }
    *out = dup_string(render_report(evaluate(p->value, opts), *fmt));
  });
}

pw_status pw_gate(const pw_portfolio* p, const pw_gate_options* options, const char* format,
                  pw_gate_action* action, char** out) {
  if (!p || !options || !out) return invalid("null argument");
  if (!options->value_target || !options->cost_budget) return invalid("value target and cost budget are required");
  return guarded([&] {
    const std::string fmt = format ? format : "text";
    require(fmt == "text" || fmt == "json", "format must be text or json");
    const Currency cur = p->value.currency;
    const auto targets = FunnelTargets::make(
        money_arg(options->value_target, cur, "value target"), money_arg(options->cost_budget, cur, "cost budget"),
        options->min_margin ? money_arg(options->min_margin, cur, "min margin") : Money::zero(cur));
    const GateOutcome g = gate_portfolio(p->value, targets, resolve_cost(options->cost, p->value));
    if (action) *action = static_cast<pw_gate_action>(static_cast<int>(g.verdict.action));
    *out = dup_string(fmt == "json" ? dump_json(gate_to_json(g)) : gate_to_text(g));
  });
}

pw_status pw_sweep(const pw_portfolio* p, const char* path, const char* from, const char* to, int steps,
                   const char* format, char** out) {
  if (!p || !path || !from || !to || !out) return invalid("null argument");
  return guarded([&] {
    const auto fmt = machine_format(format);
    const auto curve = sweep(p->value, ParamPath::parse(path), decimal_arg(from, "from"), decimal_arg(to, "to"), steps);
    *out = dup_string(fmt == MachineFormat::Json ? dump_json(sweep_to_json(curve)) : sweep_to_csv(curve));
  });
}

pw_status pw_breakeven(const pw_portfolio* p, const char* cost, const char* format, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    const auto fmt = machine_format(format);
    const Portfolio& pf = p->value;
    Money c = pf.cost_model ? annualized_cost(*pf.cost_model) : Money::zero(pf.currency);
    if (cost) c = money_arg(cost, pf.currency, "cost");
    const Breakeven b = breakeven_scale(pf, c);
    *out = dup_string(fmt == MachineFormat::Json ? dump_json(breakeven_to_json(b, c)) : breakeven_to_csv(b, c));
  });
}

pw_status pw_tornado(const pw_portfolio* p, const char* rel, const char* format, char** out) {
  if (!p || !rel || !out) return invalid("null argument");
  return guarded([&] {
    const auto fmt = machine_format(format);
    const Decimal r = decimal_arg(rel, "rel");
    const auto entries = tornado(p->value, r);
    *out = dup_string(fmt == MachineFormat::Json ? dump_json(tornado_to_json(entries, r)) : tornado_to_csv(entries));
  });
}

pw_status pw_omega_from_confusion(int64_t tp, int64_t fp, int64_t fn, int64_t tn, char** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = dup_string(omega_from_confusion({tp, fp, fn, tn}).omega().to_string()); });
}

namespace {

InvestmentCurve curve_arg(const char* omega_max, const char* kappa) {
  auto w = Alleviation::make(decimal_arg(omega_max, "omega_max"));
  require(w.has_value(), "omega_max must lie in [0, 1]");
  return InvestmentCurve::make(*w, money_arg(kappa, Currency(), "kappa"));
}

}  // namespace

pw_status pw_omega_from_investment(const char* omega_max, const char* kappa, const char* spend, char** out) {
  if (!omega_max || !kappa || !spend || !out) return invalid("null argument");
  return guarded([&] {
    const auto curve = curve_arg(omega_max, kappa);
    *out = dup_string(omega_from_investment(curve, money_arg(spend, Currency(), "spend")).omega().to_string());
  });
}

pw_status pw_required_investment(const char* omega_max, const char* kappa, const char* target, char** out) {
  if (!omega_max || !kappa || !target || !out) return invalid("null argument");
  return guarded([&] {
    const auto curve = curve_arg(omega_max, kappa);
    auto t = Alleviation::make(decimal_arg(target, "target"));
    require(t.has_value(), "target must lie in [0, 1]");
    *out = dup_string(required_investment(curve, *t).to_string());
  });
}

pw_status pw_server_start(const char* data_dir, const char* host, int port, pw_server** out) {
  if (!data_dir || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<pw_server>(data_dir);
    s->server.start(host ? host : "127.0.0.1", port);
    *out = s.release();
  });
}

int pw_server_port(const pw_server* s) { return s ? s->server.port() : -1; }

void pw_server_stop(pw_server* s) {
  if (!s) return;
  s->server.stop();
  delete s;
}

}  // extern "C"
