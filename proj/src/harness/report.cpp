#include "scoin/harness/report.hpp"

#include <iomanip>
#include <sstream>
#include <algorithm>
#include <stdexcept>

#include "scoin/harness/version.hpp"

namespace scoin::harness {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "tsv") return Format::tsv;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected json, tsv or latex)");
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

// TSV cells may not contain tabs or newlines.
std::string tsv_cell(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '{': case '}': case '&': case '%': case '#': case '$':
        out += '\\';
        out += c;
        break;
      case '\\': out += "\\textbackslash{}"; break;
      case '^': out += "\\^{}"; break;
      default: out += c;
    }
  }
  return out;
}

void latex_table(std::ostringstream& os, const Table& t) {
  if (t.rows.empty()) return;
  const std::size_t cols = t.rows.front().size();
  os << "\\begin{center}\n" << latex_escape(t.caption) << "\\\\[4pt]\n\\begin{tabular}{";
  for (std::size_t c = 0; c < cols; ++c) os << (c == 0 ? "c|" : "c");
  os << "}\n";
  const bool math = !t.latex.empty();
  const auto& rows = math ? t.latex : t.rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << " & ";
      os << (math ? "$" + rows[r][c] + "$" : latex_escape(rows[r][c]));
    }
    os << " \\\\" << (r == 0 ? " \\hline" : "") << "\n";
  }
  os << "\\end{tabular}\n\\end{center}\n";
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r, const EmitOptions& opts) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  nlohmann::ordered_json tables = nlohmann::ordered_json::array();
  for (const auto& t : r.tables) {
    nlohmann::ordered_json tj;
    tj["caption"] = t.caption;
    tj["rows"] = t.rows;
    if (!t.latex.empty()) tj["latex"] = t.latex;
    tables.push_back(tj);
  }
  j["tables"] = tables;
  if (opts.stats) {
    j["seconds"] = r.seconds;
    j["cache_hits"] = r.cache_hits;
  }
  j["version"] = r.version;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& tj : j.at("tables")) {
    Table t;
    t.caption = tj.at("caption").get<std::string>();
    t.rows = tj.at("rows").get<std::vector<std::vector<std::string>>>();
    if (tj.contains("latex")) t.latex = tj.at("latex").get<std::vector<std::vector<std::string>>>();
    r.tables.push_back(std::move(t));
  }
  if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
  if (j.contains("cache_hits")) r.cache_hits = j.at("cache_hits").get<std::int64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string emit(const std::vector<Report>& reports, Format format, const EmitOptions& opts) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      if (reports.size() == 1) {
        os << to_json(reports.front(), opts).dump(2) << "\n";
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, opts));
        os << arr.dump(2) << "\n";
      }
      break;
    }
    case Format::tsv: {
      os << "check\tparameters\tstatus\twitnesses\tnotes";
      if (opts.stats) os << "\tseconds\tcache_hits";
      os << "\n";
      for (const auto& r : reports) {
        std::string params, w, notes;
        for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ";") + k + "=" + v;
        for (const auto& s : r.witnesses) w += (w.empty() ? "" : " | ") + s;
        for (const auto& s : r.notes) notes += (notes.empty() ? "" : " | ") + s;
        os << tsv_cell(r.check) << "\t" << tsv_cell(params) << "\t" << to_string(r.status) << "\t" << tsv_cell(w) << "\t"
           << tsv_cell(notes);
        if (opts.stats) os << "\t" << std::fixed << std::setprecision(3) << r.seconds << "\t" << r.cache_hits;
        os << "\n";
      }
      for (const auto& r : reports)
        for (const auto& t : r.tables) {
          os << "\n# " << tsv_cell(t.caption) << "\n";
          for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "\t" : "") << tsv_cell(row[c]);
            os << "\n";
          }
        }
      break;
    }
    case Format::latex: {
      os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
      for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ", ") + k + " = " + v;
        os << "\\section*{" << latex_escape(r.check) << " (" << latex_escape(params) << "): " << to_string(r.status) << "}\n";
        for (const auto& w : r.witnesses) os << "\\noindent " << latex_escape(w) << "\\par\n";
        for (const auto& t : r.tables) latex_table(os, t);
      }
      os << "\\end{document}\n";
      break;
    }
  }
  return os.str();
}

Table bidegree_table(const coinv::BidegreeTable& t, const std::string& caption) {
  Table tab;
  tab.caption = caption;
  int top = 0;
  for (const auto& [bd, d] : t.dims)
    if (d != 0) top = std::max(top, bd.first);
  std::vector<std::string> header{"i\\j"};
  for (int j = 0; j <= t.n; ++j) header.push_back(std::to_string(j));
  tab.rows.push_back(header);
  for (int i = 0; i <= top; ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (int j = 0; j <= t.n; ++j) row.push_back(std::to_string(t.at(i, j)));
    tab.rows.push_back(row);
  }
  return tab;
}

Table frobenius_table(const coinv::FrobeniusTable& t, const std::string& caption) {
  Table tab;
  tab.caption = caption;
  tab.rows.push_back({"i", "j", "Schur expansion"});
  tab.latex.push_back({"i", "j", "\\mathrm{Frob}"});
  for (const auto& [bd, f] : t.entries) {
    if (f.is_zero()) continue;
    tab.rows.push_back({std::to_string(bd.first), std::to_string(bd.second), f.to_string()});
    tab.latex.push_back({std::to_string(bd.first), std::to_string(bd.second), f.to_latex()});
  }
  return tab;
}

Report properties_report(const std::vector<PropertyResult>& results, std::uint32_t seed) {
  Report r;
  r.check = "properties";
  r.version = kToolVersion;
  r.parameters.emplace_back("seed", std::to_string(seed));
  Table t{"randomized property suites", {{"suite", "cases", "failures"}}, {}};
  for (const auto& p : results) {
    if (p.failures) r.status = Status::fail;
    for (const auto& w : p.witnesses) r.witnesses.push_back(p.name + ": " + w);
    t.rows.push_back({p.name, std::to_string(p.cases), std::to_string(p.failures)});
  }
  r.tables.push_back(t);
  return r;
}

}  // namespace scoin::harness
