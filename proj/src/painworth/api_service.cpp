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


#include "painworth/api_service.hpp"

#include <httplib.h>

#include <functional>
#include <json.hpp>
#include <optional>
#include <thread>

#include "painworth/analysis_report.hpp"
#include "painworth/funnel.hpp"
#include "painworth/portfolio_io.hpp"
#include "painworth/report.hpp"
#include "painworth/sensitivity.hpp"
#include "painworth/valuation.hpp"

namespace painworth {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

int http_status(Errc code) {
  switch (code) {
    case Errc::NotFound: return 404;
    case Errc::ConcurrentWriteConflict: return 409;
    case Errc::StorageFull: return 507;
    case Errc::IoError: return 500;
    default: return 400;
  }
}

// Error raised while handling a request that names the offending override.
struct PathError {
  Error error;
  std::string path;
};

void send_json(httplib::Response& res, int status, const ordered_json& doc) {
  res.status = status;
  res.set_content(dump_json(doc), "application/json");
}

void send_error(httplib::Response& res, const Error& e, const std::string& path = {}) {
  ordered_json err;
  err["code"] = std::string(errc_name(e.code()));
  err["message"] = e.what();
  if (!e.issues().empty()) {
    err["issues"] = ordered_json::array();
    for (const auto& i : e.issues()) {
      err["issues"].push_back(
          {{"code", std::string(errc_name(i.code))}, {"locus", i.locus}, {"message", i.message}});
    }
  }
  if (!path.empty()) err["path"] = path;
  send_json(res, http_status(e.code()), ordered_json{{"error", std::move(err)}});
}

void guarded(httplib::Response& res, const std::function<void()>& body) {
  try {
    body();
  } catch (const PathError& e) {
    send_error(res, e.error, e.path);
  } catch (const Error& e) {
    send_error(res, e);
  } catch (const json::exception& e) {
    send_error(res, Error(Errc::SyntaxError, e.what()));
  } catch (const std::exception& e) {
    ordered_json err{{"code", "Internal"}, {"message", e.what()}};
    send_json(res, 500, ordered_json{{"error", std::move(err)}});
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  json doc = json::parse(req.body);
  if (!doc.is_object()) throw Error(Errc::SyntaxError, "request body must be a JSON object");
  return doc;
}

Portfolio portfolio_from_body(const json& doc) {
  return portfolio_from_json(doc).value();
}

Money money_field(const json& doc, const char* key, Currency currency) {
  const auto& v = doc.at(key);
  if (!v.is_string()) throw Error(Errc::InvalidArgument, std::string(key) + " must be a decimal string");
  auto m = Money::parse(v.get<std::string>(), currency);
  if (!m) throw Error(Errc::InvalidArgument, std::string(key) + " is not a dot-decimal amount");
  return *m;
}

std::optional<Money> optional_money(const json& doc, const char* key, Currency currency) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return money_field(doc, key, currency);
}

Money required_money(const json& doc, const char* key, Currency currency) {
  if (!doc.contains(key)) throw Error(Errc::MissingField, std::string("missing field ") + key);
  return money_field(doc, key, currency);
}

Decimal decimal_value(const json& v, const std::string& what) {
  auto d = json_decimal(v);
  if (!d) throw Error(Errc::InvalidArgument, what + " must be a decimal");
  return *d;
}

std::optional<CostModel> cost_model_field(const json& doc, Currency currency) {
  if (!doc.contains("cost_model") || doc["cost_model"].is_null()) return std::nullopt;
  const json& cm = doc["cost_model"];
  if (!cm.is_object()) throw Error(Errc::InvalidCostModel, "cost_model must be an object");
  std::int64_t years = 1;
  if (cm.contains("amortization_years")) {
    if (!cm["amortization_years"].is_number_integer()) {
      throw Error(Errc::InvalidCostModel, "amortization_years must be an integer");
    }
    years = cm["amortization_years"].get<std::int64_t>();
  }
  return CostModel::make(optional_money(cm, "development", currency).value_or(Money::zero(currency)),
                         optional_money(cm, "annual_operation", currency).value_or(Money::zero(currency)),
                         years);
}

Portfolio apply_kind(const Portfolio& p, const std::optional<std::string>& kind) {
  if (!kind || kind->empty()) return p;
  auto k = parse_pain_kind(*kind);
  if (!k) throw Error(Errc::InvalidArgument, "kind must be operational or structural");
  return filter_by_kind(p, *k);
}

std::optional<std::string> string_field(const json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  if (!doc[key].is_string()) throw Error(Errc::InvalidArgument, std::string(key) + " must be a string");
  return doc[key].get<std::string>();
}

EvaluationOptions evaluation_options(const json& doc, Currency currency) {
  EvaluationOptions opts;
  if (doc.contains("revenue_share")) {
    opts.revenue_share = decimal_value(doc["revenue_share"], "revenue_share");
  } else if (doc.contains("pricing") && doc["pricing"].is_object() &&
             doc["pricing"].contains("revenue_share")) {
    opts.revenue_share = decimal_value(doc["pricing"]["revenue_share"], "pricing.revenue_share");
  }
  opts.cost_model = cost_model_field(doc, currency);
  if (auto basis = string_field(doc, "ceiling_basis")) {
    auto b = parse_ceiling_basis(*basis);
    if (!b) throw Error(Errc::InvalidArgument, "ceiling_basis must be all or customer-only");
    opts.basis = *b;
  }
  return opts;
}

std::optional<std::string> query(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

std::string required_query(const httplib::Request& req, const char* key) {
  auto v = query(req, key);
  if (!v) throw Error(Errc::InvalidArgument, std::string("missing query parameter ") + key);
  return *v;
}

Decimal query_decimal(const httplib::Request& req, const char* key) {
  auto d = Decimal::parse(required_query(req, key));
  if (!d) throw Error(Errc::InvalidArgument, std::string(key) + " must be a dot-decimal number");
  return *d;
}

int query_int(const httplib::Request& req, const char* key) {
  const std::string text = required_query(req, key);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(Errc::InvalidArgument, std::string(key) + " must be an integer");
  return value;
}

ordered_json stored_json(const std::string& id, std::uint64_t version, const Portfolio& p) {
  ordered_json doc;
  doc["id"] = id;
  doc["version"] = version;
  doc["portfolio"] = portfolio_to_json(p);
  return doc;
}

class Routes {
 public:
  explicit Routes(ScenarioArchive& archive) : archive_(archive) {}

  void mount(httplib::Server& s) {
    const std::string one = R"(/api/portfolios/([^/]+))";
    s.Get("/api/portfolios", [this](const auto& req, auto& res) { guarded(res, [&] { list(req, res); }); });
    s.Post("/api/portfolios", [this](const auto& req, auto& res) { guarded(res, [&] { create(req, res); }); });
    s.Get(one, [this](const auto& req, auto& res) { guarded(res, [&] { read(req, res); }); });
    s.Put(one, [this](const auto& req, auto& res) { guarded(res, [&] { update(req, res); }); });
    s.Delete(one, [this](const auto& req, auto& res) { guarded(res, [&] { remove(req, res); }); });
    s.Post(one + "/evaluate", [this](const auto& req, auto& res) { guarded(res, [&] { evaluate(req, res); }); });
    s.Post(one + "/gate", [this](const auto& req, auto& res) { guarded(res, [&] { gate(req, res); }); });
    s.Get(one + "/sweep", [this](const auto& req, auto& res) { guarded(res, [&] { sweep(req, res); }); });
    s.Get(one + "/tornado", [this](const auto& req, auto& res) { guarded(res, [&] { tornado(req, res); }); });
    s.Get(one + "/breakeven", [this](const auto& req, auto& res) { guarded(res, [&] { breakeven(req, res); }); });
    s.Post("/api/whatif", [this](const auto& req, auto& res) { guarded(res, [&] { whatif(req, res); }); });
    s.Post("/api/rank", [this](const auto& req, auto& res) { guarded(res, [&] { rank(req, res); }); });
  }

 private:
  void list(const httplib::Request&, httplib::Response& res) {
    ordered_json items = ordered_json::array();
    for (const auto& id : archive_.list()) {
      try {
        items.push_back({{"id", id}, {"version", archive_.load(id).version}});
      } catch (const Error& e) {
        if (e.code() != Errc::NotFound) throw;  // deleted while listing
      }
    }
    send_json(res, 200, ordered_json{{"portfolios", std::move(items)}});
  }

  void create(const httplib::Request& req, httplib::Response& res) {
    const Portfolio p = portfolio_from_body(parse_body(req));
    if (archive_.exists(p.id)) {
      throw Error(Errc::ConcurrentWriteConflict, "portfolio '" + p.id + "' already exists");
    }
    const auto version = archive_.save(p, 0);
    res.set_header("Location", "/api/portfolios/" + p.id);
    send_json(res, 201, ordered_json{{"id", p.id}, {"version", version}});
  }

  void read(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    const auto stored = archive_.load(id);
    send_json(res, 200, stored_json(id, stored.version, stored.portfolio));
  }

  void update(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    const json body = parse_body(req);
    if (!body.contains("version") || !body["version"].is_number_unsigned()) {
      throw Error(Errc::MissingField, "PUT body needs the version it was based on");
    }
    if (!body.contains("portfolio")) throw Error(Errc::MissingField, "PUT body needs a portfolio");
    const Portfolio p = portfolio_from_body(body["portfolio"]);
    if (p.id != id) throw Error(Errc::InvalidArgument, "portfolio id does not match the URL");
    const auto expected = body["version"].get<std::uint64_t>();
    if (expected == 0) throw Error(Errc::InvalidArgument, "version must be >= 1");
    const auto version = archive_.save(p, expected);
    send_json(res, 200, ordered_json{{"id", id}, {"version", version}});
  }

  void remove(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    std::optional<std::uint64_t> version;
    if (req.has_param("version")) version = static_cast<std::uint64_t>(query_int(req, "version"));
    archive_.remove(id, version);
    res.status = 204;
  }

  Portfolio load(const httplib::Request& req) { return archive_.load(std::string(req.matches[1])).portfolio; }

  void evaluate(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const Portfolio base = load(req);
    const Portfolio p = apply_kind(base, string_field(body, "kind"));
    send_json(res, 200, evaluation_to_json(painworth::evaluate(p, evaluation_options(body, p.currency))));
  }

  void whatif(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    Portfolio p;
    if (body.contains("portfolio")) {
      p = portfolio_from_body(body["portfolio"]);
    } else if (auto base = string_field(body, "base_id")) {
      p = archive_.load(*base).portfolio;
    } else {
      throw Error(Errc::MissingField, "whatif needs base_id or portfolio");
    }
    if (body.contains("overrides")) {
      if (!body["overrides"].is_array()) throw Error(Errc::InvalidArgument, "overrides must be an array");
      for (const auto& o : body["overrides"]) {
        if (!o.is_object() || !o.contains("path") || !o["path"].is_string() || !o.contains("value")) {
          throw Error(Errc::InvalidArgument, "each override needs path and value");
        }
        const std::string path = o["path"].get<std::string>();
        try {
          p = with_param(p, ParamPath::parse(path), decimal_value(o["value"], "override value"));
        } catch (const Error& e) {
          throw PathError{e, path};
        }
      }
    }
    p = apply_kind(p, string_field(body, "kind"));
    send_json(res, 200, evaluation_to_json(painworth::evaluate(p, evaluation_options(body, p.currency))));
  }

  void gate(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    const Portfolio p = apply_kind(load(req), string_field(body, "kind"));
    const Currency cur = p.currency;
    const auto targets = FunnelTargets::make(
        required_money(body, "value_target", cur), required_money(body, "cost_budget", cur),
        optional_money(body, "min_margin", cur).value_or(Money::zero(cur)));
    send_json(res, 200, gate_to_json(gate_portfolio(p, targets, cost_model_field(body, cur))));
  }

  void sweep(const httplib::Request& req, httplib::Response& res) {
    const Portfolio p = apply_kind(load(req), query(req, "kind"));
    const auto path = ParamPath::parse(required_query(req, "path"));
    const auto curve = painworth::sweep(p, path, query_decimal(req, "from"), query_decimal(req, "to"),
                                        query_int(req, "steps"));
    send_json(res, 200, sweep_to_json(curve));
  }

  void tornado(const httplib::Request& req, httplib::Response& res) {
    const Portfolio p = apply_kind(load(req), query(req, "kind"));
    const Decimal rel = query_decimal(req, "rel");
    send_json(res, 200, tornado_to_json(painworth::tornado(p, rel), rel));
  }

  void breakeven(const httplib::Request& req, httplib::Response& res) {
    const Portfolio p = apply_kind(load(req), query(req, "kind"));
    Money cost = p.cost_model ? annualized_cost(*p.cost_model) : Money::zero(p.currency);
    if (auto text = query(req, "cost")) {
      auto m = Money::parse(*text, p.currency);
      if (!m) throw Error(Errc::InvalidArgument, "cost must be a dot-decimal amount");
      cost = *m;
    }
    send_json(res, 200, breakeven_to_json(breakeven_scale(p, cost), cost));
  }

  void rank(const httplib::Request& req, httplib::Response& res) {
    const json body = parse_body(req);
    Currency cur;
    if (auto c = string_field(body, "currency")) {
      auto parsed = Currency::parse(*c);
      if (!parsed) throw Error(Errc::InvalidArgument, "currency must be three uppercase letters");
      cur = *parsed;
    }
    if (!body.contains("ideas") || !body["ideas"].is_array()) {
      throw Error(Errc::MissingField, "rank needs an ideas array");
    }
    std::vector<Idea> ideas;
    for (const auto& i : body["ideas"]) {
      if (!i.is_object()) throw Error(Errc::InvalidArgument, "each idea must be an object");
      auto id = string_field(i, "id");
      if (!id) throw Error(Errc::MissingField, "idea without id");
      ideas.push_back({*id, required_money(i, "v_economic", cur), required_money(i, "annualized_cost", cur)});
    }
    ordered_json out = ordered_json::array();
    for (const auto& i : rank_ideas(std::move(ideas))) {
      out.push_back({{"id", i.id},
                     {"v_economic", i.v_economic.to_string()},
                     {"annualized_cost", i.annualized_cost.to_string()},
                     {"net", i.net().to_string()}});
    }
    send_json(res, 200, ordered_json{{"ranking", std::move(out)}});
  }

  ScenarioArchive& archive_;
};

}  // namespace

struct ApiServer::Impl {
  explicit Impl(const std::filesystem::path& dir) : archive(dir), routes(archive) {
    routes.mount(server);
  }

  ScenarioArchive archive;
  Routes routes;
  httplib::Server server;
  std::thread worker;
  int port = -1;
};

ApiServer::ApiServer(const std::filesystem::path& data_dir) : impl_(std::make_unique<Impl>(data_dir)) {}

ApiServer::~ApiServer() { stop(); }

int ApiServer::start(const std::string& host, int port) {
  if (impl_->worker.joinable()) throw Error(Errc::InvalidArgument, "server already started");
  if (port < 0 || port > 65535) throw Error(Errc::InvalidArgument, "port out of range");
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound <= 0) {
    throw Error(Errc::IoError, "cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->port = bound;
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

int ApiServer::port() const { return impl_->port; }

void ApiServer::stop() {
  if (!impl_ || !impl_->worker.joinable()) return;
  impl_->server.stop();
  impl_->worker.join();
}

ScenarioArchive& ApiServer::archive() { return impl_->archive; }

}  // namespace painworth
