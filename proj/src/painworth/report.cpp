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

#include "painworth/report.hpp"

#include <algorithm>

namespace painworth {

using nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "markdown") return ReportFormat::Markdown;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  return std::nullopt;
}

std::string dump_json(const ordered_json& doc) {
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

ordered_json evaluation_to_json(const Evaluation& e) {
  const auto& r = e.report;
  ordered_json doc;
  doc["portfolio_id"] = r.portfolio_id;
  doc["currency"] = r.currency.to_string();

  doc["pains"] = ordered_json::array();
  for (const auto& p : r.pains) {
    doc["pains"].push_back({{"id", p.id},
                            {"kind", std::string(to_string(p.kind))},
                            {"description", p.description},
                            {"potential", p.potential.to_string()},
                            {"effective", p.effective.to_string()}});
  }
  doc["lines"] = ordered_json::array();
  for (const auto& l : r.lines) {
    doc["lines"].push_back({{"pain_id", l.pain_id},
                            {"kind", std::string(to_string(l.kind))},
                            {"agent", l.agent_id},
                            {"frequency", l.frequency.per_year().to_string()},
                            {"impact", l.impact.to_string()},
                            {"alleviation", l.alleviation.omega().to_string()},
                            {"note", l.note},
                            {"potential", l.potential.to_string()},
                            {"effective", l.effective.to_string()}});
  }
  auto agent_rows = [](const std::vector<AgentTotals>& totals) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : totals) {
      arr.push_back({{"agent", t.agent_id},
                     {"potential", t.potential.to_string()},
                     {"effective", t.effective.to_string()}});
    }
    return arr;
  };
  doc["per_agent"] = agent_rows(r.per_agent);
  doc["per_kind"] = ordered_json::array();
  for (const auto& k : r.per_kind) {
    doc["per_kind"].push_back({{"kind", std::string(to_string(k.kind))},
                               {"agents", agent_rows(k.per_agent)},
                               {"potential", k.potential.to_string()},
                               {"effective", k.effective.to_string()}});
  }
  doc["total_potential"] = r.total_potential.to_string();
  doc["total_effective"] = r.total_effective.to_string();
  doc["ceiling_basis"] = std::string(to_string(e.basis));
  doc["price_ceiling"] = e.quote.ceiling.to_string();
  doc["fee_quote"] = {{"ceiling", e.quote.ceiling.to_string()},
                      {"share", e.quote.share.to_string()},
                      {"fee", e.quote.fee.to_string()},
                      {"retained_by_beneficiaries", e.quote.retained_by_beneficiaries.to_string()}};
  ordered_json nets = ordered_json::array();
  for (const auto& n : e.summary.net_by_agent) {
    nets.push_back({{"agent", n.agent_id},
                    {"fee_allocation", n.fee_allocation.to_string()},
                    {"net", n.net.to_string()}});
  }
  doc["economic"] = {{"v_economic_pot", e.summary.v_economic_pot.to_string()},
                     {"v_economic", e.summary.v_economic.to_string()},
                     {"fee", e.summary.fee.to_string()},
                     {"annualized_cost", e.summary.annualized_cost.to_string()},
                     {"net_total", e.summary.net_total.to_string()},
                     {"net_by_agent", std::move(nets)}};
  return doc;
}

namespace {

const LineValuation* find_line(const ValuationReport& r, std::int64_t pain_id,
                               const std::string& agent) {
  for (const auto& l : r.lines) {
    if (l.pain_id == pain_id && l.agent_id == agent) return &l;
  }
  return nullptr;
}

std::string subtotal_label(PainKind kind) {
  return std::string("Subtotal ") + std::string(to_string(kind)) + " pains";
}

// Rows of the pain grid: one header, then per kind a subtotal row followed by
// its pains, then a closing total row. Subtotal and total rows only carry
// the per-agent value cells.
struct Grid {
  std::vector<std::string> header;
  struct Row {
    bool span = false;  // subtotal/total: label plus per-agent values
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;
};

Grid build_grid(const ValuationReport& r) {
  Grid g;
  g.header = {"Pain", "Description"};
  for (const auto& a : r.agents) {
    g.header.push_back(a.label + ": Frequency (annual)");
    g.header.push_back("Impact " + r.currency.to_string());
    g.header.push_back("Alleviation");
    g.header.push_back("Value (annual) " + r.currency.to_string());
  }
  for (const auto& kind : r.per_kind) {
    bool any = std::any_of(r.pains.begin(), r.pains.end(),
                           [&](const PainSummary& p) { return p.kind == kind.kind; });
    if (!any) continue;
    Grid::Row sub{true, {subtotal_label(kind.kind)}};
    for (const auto& t : kind.per_agent) sub.cells.push_back(t.effective.to_grouped_compact());
    g.rows.push_back(std::move(sub));
    for (const auto& p : r.pains) {
      if (p.kind != kind.kind) continue;
      Grid::Row row{false, {std::to_string(p.id), p.description}};
      for (const auto& a : r.agents) {
        if (const auto* l = find_line(r, p.id, a.id)) {
          row.cells.push_back(l->frequency.per_year().to_string());
          row.cells.push_back(l->impact.to_grouped_compact());
          row.cells.push_back(l->alleviation.omega().to_string());
          row.cells.push_back(l->effective.to_grouped_compact());
        } else {
          row.cells.insert(row.cells.end(), 4, "-");
        }
      }
      g.rows.push_back(std::move(row));
    }
  }
  Grid::Row total{true, {"Total all pains"}};
  for (const auto& t : r.per_agent) total.cells.push_back(t.effective.to_grouped_compact());
  g.rows.push_back(std::move(total));
  return g;
}

std::string pad(const std::string& s, std::size_t width) {
  // Width counts bytes; good enough for the ASCII the fixtures use.
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct SummaryItem {
  std::string label;
  std::string value;
};

std::vector<SummaryItem> summary_items(const Evaluation& e) {
  const std::string basis = e.basis == CeilingBasis::AllBeneficiaries ? "all beneficiaries"
                                                                       : "customer side only";
  std::vector<SummaryItem> items = {
      {"Potential value", e.summary.v_economic_pot.to_grouped()},
      {"Effective value (V_economic)", e.summary.v_economic.to_grouped()},
      {"Price ceiling (" + basis + ")", e.quote.ceiling.to_grouped()},
      {"Revenue share", e.quote.share.to_string()},
      {"Fee", e.quote.fee.to_grouped()},
      {"Retained by beneficiaries", e.quote.retained_by_beneficiaries.to_grouped()},
      {"Annualized cost", e.summary.annualized_cost.to_grouped()},
      {"Net total", e.summary.net_total.to_grouped()},
  };
  for (const auto& n : e.summary.net_by_agent) {
    items.push_back({"Fee allocated to " + n.agent_id, n.fee_allocation.to_grouped()});
    items.push_back({"Net for " + n.agent_id + " after fee", n.net.to_grouped()});
  }
  return items;
}

std::string render_table(const Evaluation& e) {
  const auto& r = e.report;
  const Grid g = build_grid(r);
  std::vector<std::size_t> width(g.header.size(), 0);
  for (std::size_t i = 0; i < g.header.size(); ++i) width[i] = g.header[i].size();
  for (const auto& row : g.rows) {
    if (row.span) continue;
    for (std::size_t i = 0; i < row.cells.size(); ++i) width[i] = std::max(width[i], row.cells[i].size());
  }
  auto join_padded = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += " | ";
      line += i + 1 == cells.size() ? cells[i] : pad(cells[i], width[i]);
    }
    return line;
  };

  std::string out = "Value of pains: " + r.portfolio_id + " (" + r.currency.to_string() + ")\n\n";
  out += join_padded(g.header) + "\n";
  std::size_t rule = 0;
  for (auto w : width) rule += w + 3;
  out += std::string(rule > 3 ? rule - 3 : 0, '-') + "\n";
  for (const auto& row : g.rows) {
    if (row.span) {
      std::string line = row.cells[0];
      for (std::size_t i = 1; i < row.cells.size(); ++i) line += " | " + row.cells[i];
      out += line + "\n";
    } else {
      out += join_padded(row.cells) + "\n";
    }
  }

  bool any_note = std::any_of(r.lines.begin(), r.lines.end(),
                              [](const LineValuation& l) { return !l.note.empty(); });
  if (any_note) {
    out += "\nNotes\n";
    for (const auto& l : r.lines) {
      if (!l.note.empty()) out += "  " + std::to_string(l.pain_id) + "/" + l.agent_id + ": " + l.note + "\n";
    }
  }

  out += "\nSummary (" + r.currency.to_string() + " per year)\n";
  auto items = summary_items(e);
  std::size_t label_w = 0;
  for (const auto& it : items) label_w = std::max(label_w, it.label.size());
  for (const auto& it : items) out += "  " + pad(it.label + ":", label_w + 2) + it.value + "\n";
  return out;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_markdown(const Evaluation& e) {
  const auto& r = e.report;
  const Grid g = build_grid(r);
  std::string out = "## Value of pains: " + md_escape(r.portfolio_id) + " (" + r.currency.to_string() + ")\n\n";
  auto row_text = [](const std::vector<std::string>& cells) {
    std::string line = "|";
    for (const auto& c : cells) line += " " + md_escape(c) + " |";
    return line + "\n";
  };
  out += row_text(g.header);
  std::string sep = "|";
  for (std::size_t i = 0; i < g.header.size(); ++i) sep += i < 2 ? " --- |" : " ---: |";
  out += sep + "\n";
  for (const auto& row : g.rows) {
    if (!row.span) {
      out += row_text(row.cells);
      continue;
    }
    std::vector<std::string> cells(g.header.size());
    cells[1] = "**" + row.cells[0] + "**";
    for (std::size_t a = 1; a < row.cells.size(); ++a) cells[2 + 4 * (a - 1) + 3] = "**" + row.cells[a] + "**";
    out += row_text(cells);
  }
  out += "\n### Summary (" + r.currency.to_string() + " per year)\n\n| Metric | Amount |\n| --- | ---: |\n";
  for (const auto& it : summary_items(e)) out += "| " + md_escape(it.label) + " | " + it.value + " |\n";
  return out;
}

std::string render_csv(const Evaluation& e) {
  const auto& r = e.report;
  std::string out = "record,pain_id,kind,agent,frequency,impact,alleviation,potential,effective\n";
  for (const auto& l : r.lines) {
    out += "line," + std::to_string(l.pain_id) + "," + std::string(to_string(l.kind)) + "," + l.agent_id +
           "," + l.frequency.per_year().to_string() + "," + l.impact.to_string() + "," +
           l.alleviation.omega().to_string() + "," + l.potential.to_string() + "," +
           l.effective.to_string() + "\n";
  }
  for (const auto& k : r.per_kind) {
    for (const auto& t : k.per_agent) {
      out += "subtotal,," + std::string(to_string(k.kind)) + "," + t.agent_id + ",,,," +
             t.potential.to_string() + "," + t.effective.to_string() + "\n";
    }
  }
  for (const auto& t : r.per_agent) {
    out += "agent_total,,," + t.agent_id + ",,,," + t.potential.to_string() + "," +
           t.effective.to_string() + "\n";
  }
  out += "total,,,,,,," + r.total_potential.to_string() + "," + r.total_effective.to_string() + "\n";

  out += "\nmetric,value\n";
  out += "ceiling_basis," + std::string(to_string(e.basis)) + "\n";
  out += "price_ceiling," + e.quote.ceiling.to_string() + "\n";
  out += "revenue_share," + e.quote.share.to_string() + "\n";
  out += "fee," + e.quote.fee.to_string() + "\n";
  out += "retained_by_beneficiaries," + e.quote.retained_by_beneficiaries.to_string() + "\n";
  out += "v_economic_pot," + e.summary.v_economic_pot.to_string() + "\n";
  out += "v_economic," + e.summary.v_economic.to_string() + "\n";
  out += "annualized_cost," + e.summary.annualized_cost.to_string() + "\n";
  out += "net_total," + e.summary.net_total.to_string() + "\n";
  for (const auto& n : e.summary.net_by_agent) {
    out += "fee_allocation:" + n.agent_id + "," + n.fee_allocation.to_string() + "\n";
    out += "net:" + n.agent_id + "," + n.net.to_string() + "\n";
  }
  return out;
}

}  // namespace

std::string render_report(const Evaluation& e, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(e);
    case ReportFormat::Markdown: return render_markdown(e);
    case ReportFormat::Csv: return render_csv(e);
    case ReportFormat::Json: return dump_json(evaluation_to_json(e));
  }
  return {};
}

}  // namespace painworth
