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

#include "painworth/portfolio_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace painworth {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<PortfolioFormat> parse_portfolio_format(std::string_view text) {
  if (text == "json") return PortfolioFormat::Json;
  if (text == "csv") return PortfolioFormat::Csv;
  return std::nullopt;
}

std::optional<Decimal> json_decimal(const json& value) {
  if (value.is_string()) return Decimal::parse(value.get_ref<const std::string&>());
  if (value.is_number_integer()) return Decimal::from_integer(value.get<std::int64_t>());
  if (value.is_number()) {
    try {
      return Decimal::from_double(value.get<double>());
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

// JSON -------------------------------------------------------------------

class JsonReader {
 public:
  std::vector<Issue> issues;

  void add(Errc code, const std::string& locus, const std::string& message) {
    issues.push_back({code, locus, message});
  }

  const json* field(const json& obj, const char* key, const std::string& locus, bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
      if (required) add(Errc::MissingField, join(locus, key), "required field missing");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const json& obj, const char* key, const std::string& locus,
                                    bool required) {
    const json* v = field(obj, key, locus, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) {
      add(Errc::SyntaxError, join(locus, key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<std::int64_t> integer(const json& obj, const char* key, const std::string& locus,
                                      bool required) {
    const json* v = field(obj, key, locus, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) {
      add(Errc::SyntaxError, join(locus, key), "expected an integer");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<Decimal> decimal(const json& obj, const char* key, const std::string& locus,
                                 bool required) {
    const json* v = field(obj, key, locus, required);
    if (v == nullptr) return std::nullopt;
    auto d = json_decimal(*v);
    if (!d) add(Errc::SyntaxError, join(locus, key), "expected a dot-decimal number");
    return d;
  }

  std::optional<Money> money(const json& obj, const char* key, const std::string& locus,
                             bool required, Currency currency) {
    const json* v = field(obj, key, locus, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) {
      add(Errc::SyntaxError, join(locus, key), "money must be a decimal string such as \"50.00\"");
      return std::nullopt;
    }
    auto m = Money::parse(v->get_ref<const std::string&>(), currency);
    if (!m) {
      add(Errc::SyntaxError, join(locus, key),
          "'" + v->get<std::string>() + "' is not a dot-decimal amount with at most two decimals");
    }
    return m;
  }

  std::optional<Currency> currency(const json& obj, const std::string& locus, bool required) {
    auto code = string(obj, "currency", locus, required);
    if (!code) return std::nullopt;
    auto c = Currency::parse(*code);
    if (!c) add(Errc::SyntaxError, join(locus, "currency"), "'" + *code + "' is not a currency code");
    return c;
  }

  bool require_object(const json& v, const std::string& locus) {
    if (v.is_object()) return true;
    add(Errc::SyntaxError, locus, "expected an object");
    return false;
  }

  const json* array(const json& obj, const char* key, const std::string& locus, bool required) {
    const json* v = field(obj, key, locus, required);
    if (v == nullptr) return nullptr;
    if (!v->is_array()) {
      add(Errc::SyntaxError, join(locus, key), "expected an array");
      return nullptr;
    }
    return v;
  }

  static std::string join(const std::string& locus, const char* key) {
    return locus.empty() ? std::string(key) : locus + "." + key;
  }
};

std::optional<RawLine> read_line(JsonReader& in, const json& obj, const std::string& locus,
                                 Currency portfolio_currency) {
  if (!in.require_object(obj, locus)) return std::nullopt;
  const std::size_t before = in.issues.size();
  RawLine line;
  line.locus = locus;
  Currency cur = in.currency(obj, locus, false).value_or(portfolio_currency);
  line.agent = in.string(obj, "agent", locus, true).value_or("");
  line.frequency = in.decimal(obj, "frequency", locus, true).value_or(Decimal{});
  line.impact = in.money(obj, "impact", locus, true, cur).value_or(Money::zero(cur));
  line.alleviation = in.decimal(obj, "alleviation", locus, false);
  line.note = in.string(obj, "note", locus, false).value_or("");
  if (const json* c = in.field(obj, "confusion", locus, false)) {
    const std::string cl = locus + ".confusion";
    if (in.require_object(*c, cl)) {
      ConfusionCounts counts;
      counts.tp = in.integer(*c, "tp", cl, true).value_or(0);
      counts.fp = in.integer(*c, "fp", cl, false).value_or(0);
      counts.fn = in.integer(*c, "fn", cl, true).value_or(0);
      counts.tn = in.integer(*c, "tn", cl, false).value_or(0);
      line.confusion = counts;
    }
  }
  if (const json* inv = in.field(obj, "investment", locus, false)) {
    const std::string il = locus + ".investment";
    if (in.require_object(*inv, il)) {
      RawInvestment ri;
      ri.omega_max = in.decimal(*inv, "omega_max", il, true).value_or(Decimal{});
      ri.kappa = in.money(*inv, "kappa", il, true, cur).value_or(Money::zero(cur));
      ri.spend = in.money(*inv, "spend", il, true, cur).value_or(Money::zero(cur));
      line.investment = ri;
    }
  }
  if (in.issues.size() != before) return std::nullopt;
  return line;
}

std::optional<RawPortfolio> read_portfolio(JsonReader& in, const json& doc) {
  if (!in.require_object(doc, "$")) return std::nullopt;
  RawPortfolio raw;
  raw.id = in.string(doc, "id", "", true).value_or("");
  raw.currency = in.currency(doc, "", true).value_or(Currency{});

  if (const json* agents = in.array(doc, "agents", "", true)) {
    for (std::size_t i = 0; i < agents->size(); ++i) {
      const std::string locus = "agents[" + std::to_string(i) + "]";
      const json& a = (*agents)[i];
      if (!in.require_object(a, locus)) continue;
      RawAgent ra;
      ra.locus = locus;
      ra.agent.id = in.string(a, "id", locus, true).value_or("");
      ra.agent.label = in.string(a, "label", locus, false).value_or(ra.agent.id);
      if (const json* b = in.field(a, "beneficiary", locus, false)) {
        if (b->is_boolean()) {
          ra.agent.beneficiary = b->get<bool>();
        } else {
          in.add(Errc::SyntaxError, locus + ".beneficiary", "expected true or false");
        }
      }
      if (auto side = in.string(a, "side", locus, false)) {
        if (auto s = parse_agent_side(*side)) {
          ra.agent.side = *s;
        } else {
          in.add(Errc::SyntaxError, locus + ".side", "expected \"customer\" or \"provider\"");
        }
      }
      raw.agents.push_back(std::move(ra));
    }
  }

  if (const json* pains = in.array(doc, "pains", "", true)) {
    for (std::size_t i = 0; i < pains->size(); ++i) {
      const std::string locus = "pains[" + std::to_string(i) + "]";
      const json& p = (*pains)[i];
      if (!in.require_object(p, locus)) continue;
      RawPain rp;
      rp.locus = locus;
      rp.id = in.integer(p, "id", locus, true).value_or(0);
      if (auto kind = in.string(p, "kind", locus, true)) {
        if (auto k = parse_pain_kind(*kind)) {
          rp.kind = *k;
        } else {
          in.add(Errc::SyntaxError, locus + ".kind", "expected \"operational\" or \"structural\"");
        }
      }
      rp.description = in.string(p, "description", locus, false).value_or("");
      if (const json* lines = in.array(p, "lines", locus, true)) {
        for (std::size_t j = 0; j < lines->size(); ++j) {
          auto line = read_line(in, (*lines)[j], locus + ".lines[" + std::to_string(j) + "]",
                                raw.currency);
          if (line) rp.lines.push_back(std::move(*line));
        }
      }
      raw.pains.push_back(std::move(rp));
    }
  }

  if (const json* cm = in.field(doc, "cost_model", "", false)) {
    if (in.require_object(*cm, "cost_model")) {
      Currency cur = in.currency(*cm, "cost_model", false).value_or(raw.currency);
      RawCostModel rc;
      rc.locus = "cost_model";
      rc.development = in.money(*cm, "development", "cost_model", true, cur).value_or(Money::zero(cur));
      rc.annual_operation =
          in.money(*cm, "annual_operation", "cost_model", true, cur).value_or(Money::zero(cur));
      rc.amortization_years = in.integer(*cm, "amortization_years", "cost_model", false).value_or(1);
      raw.cost_model = rc;
    }
  }

  if (const json* pricing = in.field(doc, "pricing", "", false)) {
    if (in.require_object(*pricing, "pricing")) {
      if (auto share = in.decimal(*pricing, "revenue_share", "pricing", true)) {
        raw.revenue_share = *share;
      }
    }
  }
  if (!in.issues.empty()) return std::nullopt;
  return raw;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ValidationResult parse_json(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(bytes, e.byte > 0 ? e.byte - 1 : 0);
    ValidationResult r;
    r.issues.push_back({Errc::SyntaxError,
                        "line " + std::to_string(line) + ", column " + std::to_string(col),
                        "invalid JSON"});
    return r;
  }
  return portfolio_from_json(doc);
}

// CSV --------------------------------------------------------------------

constexpr std::array<std::string_view, 8> kCsvColumns = {
    "pain_id", "kind", "description", "agent", "frequency_per_year", "impact", "alleviation", "note"};

struct CsvField {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct CsvRecord {
  std::size_t line = 0;
  bool directive = false;
  std::string directive_text;
  std::vector<CsvField> fields;
};

class CsvTokenizer {
 public:
  explicit CsvTokenizer(std::string_view text) : text_(text) {}

  // Returns false and fills `error` on malformed quoting.
  bool run(std::vector<CsvRecord>& out, Issue& error) {
    while (pos_ < text_.size()) {
      CsvRecord rec;
      rec.line = line_;
      if (text_[pos_] == '#') {
        rec.directive = true;
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view body = text_.substr(pos_ + 1, end - pos_ - 1);
        if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
        rec.directive_text = std::string(body);
        advance_to(end);
        consume_newline();
        out.push_back(std::move(rec));
        continue;
      }
      if (at_line_end()) {  // blank line
        consume_newline();
        continue;
      }
      while (true) {
        CsvField f{"", line_, col_};
        if (pos_ < text_.size() && text_[pos_] == '"') {
          bump();
          bool closed = false;
          while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '"') {
              if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
                f.text += '"';
                bump();
                bump();
                continue;
              }
              bump();
              closed = true;
              break;
            }
            f.text += c;
            bump();
          }
          if (!closed) {
            error = {Errc::SyntaxError, locus(f.line, f.column), "unterminated quoted field"};
            return false;
          }
          if (!at_line_end() && text_[pos_] != ',') {
            error = {Errc::SyntaxError, locus(line_, col_), "unexpected character after closing quote"};
            return false;
          }
        } else {
          while (!at_line_end() && text_[pos_] != ',') {
            if (text_[pos_] == '"') {
              error = {Errc::SyntaxError, locus(line_, col_), "quote inside unquoted field"};
              return false;
            }
            f.text += text_[pos_];
            bump();
          }
        }
        rec.fields.push_back(std::move(f));
        if (pos_ < text_.size() && text_[pos_] == ',') {
          bump();
          continue;
        }
        break;
      }
      consume_newline();
      out.push_back(std::move(rec));
    }
    return true;
  }

  static std::string locus(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
  }

 private:
  bool at_line_end() const {
    return pos_ >= text_.size() || text_[pos_] == '\n' ||
           (text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') ||
           (text_[pos_] == '\r' && pos_ + 1 == text_.size());
  }
  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void advance_to(std::size_t end) {
    while (pos_ < end) bump();
  }
  void consume_newline() {
    if (pos_ < text_.size() && text_[pos_] == '\r') bump();
    if (pos_ < text_.size() && text_[pos_] == '\n') bump();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// "key=value, key=value" directive bodies.
std::map<std::string, std::string> key_values(std::string_view s) {
  std::map<std::string, std::string> out;
  for (const auto& part : split(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      out[part] = "";
    } else {
      out[trim(std::string_view(part).substr(0, eq))] = trim(std::string_view(part).substr(eq + 1));
    }
  }
  return out;
}

ValidationResult parse_csv(std::string_view bytes) {
  ValidationResult result;
  std::vector<CsvRecord> records;
  Issue tokenize_error;
  if (!CsvTokenizer(bytes).run(records, tokenize_error)) {
    result.issues.push_back(tokenize_error);
    return result;
  }
  auto& issues = result.issues;
  auto add = [&](Errc code, std::string locus, std::string msg) {
    issues.push_back({code, std::move(locus), std::move(msg)});
  };

  RawPortfolio raw;
  bool have_id = false, have_currency = false, have_header = false;
  std::optional<std::string> cost_model_text;
  std::size_t cost_model_line = 0;
  std::map<std::int64_t, std::size_t> pain_index;
  std::vector<std::string> inferred_agents;

  for (const auto& rec : records) {
    const std::string where = "line " + std::to_string(rec.line);
    if (rec.directive) {
      auto colon = rec.directive_text.find(':');
      if (colon == std::string::npos) continue;  // plain comment
      const std::string key = trim(std::string_view(rec.directive_text).substr(0, colon));
      const std::string value = trim(std::string_view(rec.directive_text).substr(colon + 1));
      if (key == "id") {
        raw.id = value;
        have_id = true;
      } else if (key == "currency") {
        if (auto c = Currency::parse(value)) {
          raw.currency = *c;
          have_currency = true;
        } else {
          add(Errc::SyntaxError, where, "'" + value + "' is not a currency code");
        }
      } else if (key == "agent") {
        auto parts = split(value, '|');
        RawAgent ra;
        ra.locus = where;
        ra.agent.id = parts[0];
        ra.agent.label = parts.size() > 1 && !parts[1].empty() ? parts[1] : parts[0];
        if (parts.size() > 2) {
          if (auto side = parse_agent_side(parts[2])) {
            ra.agent.side = *side;
          } else {
            add(Errc::SyntaxError, where, "agent side must be customer or provider");
          }
        }
        if (parts.size() > 3) {
          if (parts[3] == "beneficiary") {
            ra.agent.beneficiary = true;
          } else if (parts[3] == "observer") {
            ra.agent.beneficiary = false;
          } else {
            add(Errc::SyntaxError, where, "agent role must be beneficiary or observer");
          }
        }
        raw.agents.push_back(std::move(ra));
      } else if (key == "cost_model") {
        cost_model_text = value;
        cost_model_line = rec.line;
      } else if (key == "pricing") {
        auto kv = key_values(value);
        if (auto d = Decimal::parse(kv["revenue_share"])) {
          raw.revenue_share = *d;
          raw.pricing_locus = where + ".revenue_share";
        } else {
          add(Errc::SyntaxError, where, "pricing directive needs revenue_share=<decimal>");
        }
      }
      continue;
    }

    if (!have_header) {
      bool match = rec.fields.size() == kCsvColumns.size();
      for (std::size_t i = 0; match && i < kCsvColumns.size(); ++i) {
        match = trim(rec.fields[i].text) == kCsvColumns[i];
      }
      if (!match) {
        add(Errc::SyntaxError, where + ", column 1",
            "expected header pain_id,kind,description,agent,frequency_per_year,impact,alleviation,note");
        return result;
      }
      have_header = true;
      continue;
    }

    if (rec.fields.size() != kCsvColumns.size()) {
      add(Errc::SyntaxError, where,
          "expected 8 fields, found " + std::to_string(rec.fields.size()));
      continue;
    }
    const auto& f = rec.fields;
    auto at = [&](std::size_t i) { return CsvTokenizer::locus(f[i].line, f[i].column); };
    const std::size_t before = issues.size();

    std::int64_t pain_id = 0;
    {
      const std::string t = trim(f[0].text);
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), pain_id);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        add(Errc::SyntaxError, at(0), "pain_id '" + t + "' is not an integer");
      }
    }
    auto kind = parse_pain_kind(trim(f[1].text));
    if (!kind) add(Errc::SyntaxError, at(1), "kind must be operational or structural");
    auto frequency = Decimal::parse(trim(f[4].text));
    if (!frequency) add(Errc::SyntaxError, at(4), "frequency '" + f[4].text + "' is not a dot-decimal number");
    auto impact = Money::parse(trim(f[5].text), raw.currency);
    if (!impact) {
      add(Errc::SyntaxError, at(5),
          "impact '" + f[5].text + "' is not a dot-decimal amount with at most two decimals");
    }
    std::optional<Decimal> alleviation;
    if (!trim(f[6].text).empty()) {
      alleviation = Decimal::parse(trim(f[6].text));
      if (!alleviation) add(Errc::SyntaxError, at(6), "alleviation '" + f[6].text + "' is not a dot-decimal number");
    }
    if (issues.size() != before) continue;

    RawLine line;
    line.locus = where;
    line.agent = trim(f[3].text);
    line.frequency = *frequency;
    line.impact = *impact;
    line.alleviation = alleviation;
    line.note = f[7].text;
    if (std::find(inferred_agents.begin(), inferred_agents.end(), line.agent) == inferred_agents.end()) {
      inferred_agents.push_back(line.agent);
    }

    auto it = pain_index.find(pain_id);
    if (it == pain_index.end()) {
      RawPain rp;
      rp.locus = where;
      rp.id = pain_id;
      rp.kind = *kind;
      rp.description = f[2].text;
      pain_index[pain_id] = raw.pains.size();
      raw.pains.push_back(std::move(rp));
      it = pain_index.find(pain_id);
    } else {
      const RawPain& existing = raw.pains[it->second];
      if (existing.kind != *kind || existing.description != f[2].text) {
        add(Errc::SyntaxError, where,
            "pain " + std::to_string(pain_id) + " repeats with a different kind or description");
        continue;
      }
    }
    raw.pains[it->second].lines.push_back(std::move(line));
  }

  if (!have_header) add(Errc::MissingField, "header", "CSV header row missing");
  if (!have_id) add(Errc::MissingField, "# id", "id directive missing");
  if (!have_currency) add(Errc::MissingField, "# currency", "currency directive missing");
  if (cost_model_text) {
    const std::string where = "line " + std::to_string(cost_model_line);
    auto kv = key_values(*cost_model_text);
    auto dev = Money::parse(kv["development"], raw.currency);
    auto op = Money::parse(kv["annual_operation"], raw.currency);
    std::int64_t years = 1;
    bool years_ok = true;
    if (kv.count("amortization_years")) {
      const auto& t = kv["amortization_years"];
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), years);
      years_ok = !t.empty() && ec == std::errc() && ptr == t.data() + t.size();
    }
    if (!dev || !op || !years_ok) {
      add(Errc::SyntaxError, where,
          "cost_model directive needs development=<amount>, annual_operation=<amount>, "
          "amortization_years=<integer>");
    } else {
      raw.cost_model = RawCostModel{where, *dev, *op, years};
    }
  }
  if (!issues.empty()) return result;

  if (raw.agents.empty()) {
    for (const auto& id : inferred_agents) {
      Agent a{id, id, true, id == "provider" ? AgentSide::Provider : AgentSide::Customer};
      raw.agents.push_back({"agent " + id, a});
    }
  }
  // Amounts were parsed before the currency directive may have been seen.
  for (auto& pain : raw.pains) {
    for (auto& line : pain.lines) line.impact = Money(line.impact.cents(), raw.currency);
  }
  if (raw.cost_model) {
    raw.cost_model->development = Money(raw.cost_model->development.cents(), raw.currency);
    raw.cost_model->annual_operation = Money(raw.cost_model->annual_operation.cents(), raw.currency);
  }
  return validate_portfolio(raw);
}

std::string csv_escape(std::string_view s) {
  const bool quote = s.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!s.empty() && (s.front() == ' ' || s.back() == ' ' || s.front() == '#'));
  if (!quote) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string serialize_csv(const Portfolio& p) {
  std::string out;
  out += "# id: " + p.id + "\n";
  out += "# currency: " + p.currency.to_string() + "\n";
  for (const auto& a : p.agents) {
    out += "# agent: " + a.id + " | " + a.label + " | " + std::string(to_string(a.side)) + " | " +
           (a.beneficiary ? "beneficiary" : "observer") + "\n";
  }
  if (p.cost_model) {
    out += "# cost_model: development=" + p.cost_model->development.to_string() +
           ", annual_operation=" + p.cost_model->annual_operation.to_string() +
           ", amortization_years=" + std::to_string(p.cost_model->amortization_years) + "\n";
  }
  out += "# pricing: revenue_share=" + p.pricing.revenue_share().to_string() + "\n";
  out += "pain_id,kind,description,agent,frequency_per_year,impact,alleviation,note\n";
  for (const auto& pain : p.pains) {
    for (const auto& line : pain.lines) {
      out += std::to_string(pain.id) + "," + std::string(to_string(pain.kind)) + "," +
             csv_escape(pain.description) + "," + csv_escape(line.agent) + "," +
             line.frequency.per_year().to_string() + "," + line.impact.to_string() + "," +
             line.alleviation.omega().to_string() + "," + csv_escape(line.note) + "\n";
    }
  }
  return out;
}

}  // namespace

ValidationResult portfolio_from_json(const json& doc) {
  JsonReader in;
  auto raw = read_portfolio(in, doc);
  if (!raw) {
    ValidationResult r;
    r.issues = std::move(in.issues);
    return r;
  }
  return validate_portfolio(*raw);
}

ValidationResult parse_portfolio(std::string_view bytes, PortfolioFormat format) {
  return format == PortfolioFormat::Json ? parse_json(bytes) : parse_csv(bytes);
}

ordered_json portfolio_to_json(const Portfolio& p) {
  ordered_json doc;
  doc["id"] = p.id;
  doc["currency"] = p.currency.to_string();
  doc["agents"] = ordered_json::array();
  for (const auto& a : p.agents) {
    doc["agents"].push_back({{"id", a.id},
                             {"label", a.label},
                             {"beneficiary", a.beneficiary},
                             {"side", std::string(to_string(a.side))}});
  }
  doc["pains"] = ordered_json::array();
  for (const auto& pain : p.pains) {
    ordered_json jp;
    jp["id"] = pain.id;
    jp["kind"] = std::string(to_string(pain.kind));
    jp["description"] = pain.description;
    jp["lines"] = ordered_json::array();
    for (const auto& line : pain.lines) {
      ordered_json jl;
      jl["agent"] = line.agent;
      jl["frequency"] = line.frequency.per_year().to_string();
      jl["impact"] = line.impact.to_string();
      jl["alleviation"] = line.alleviation.omega().to_string();
      jl["note"] = line.note;
      if (line.confusion) {
        jl["confusion"] = {{"tp", line.confusion->tp},
                           {"fp", line.confusion->fp},
                           {"fn", line.confusion->fn},
                           {"tn", line.confusion->tn}};
      }
      if (line.investment) {
        jl["investment"] = {{"omega_max", line.investment->curve.omega_max().omega().to_string()},
                            {"kappa", line.investment->curve.kappa().to_string()},
                            {"spend", line.investment->spend.to_string()}};
      }
      jp["lines"].push_back(std::move(jl));
    }
    doc["pains"].push_back(std::move(jp));
  }
  if (p.cost_model) {
    doc["cost_model"] = {{"development", p.cost_model->development.to_string()},
                         {"annual_operation", p.cost_model->annual_operation.to_string()},
                         {"amortization_years", p.cost_model->amortization_years}};
  }
  doc["pricing"] = {{"revenue_share", p.pricing.revenue_share().to_string()}};
  return doc;
}

std::string serialize_portfolio(const Portfolio& p, PortfolioFormat format) {
  if (format == PortfolioFormat::Csv) return serialize_csv(p);
  return portfolio_to_json(p).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace painworth
