#include "cliquepart/export.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cliquepart {

std::string lp_variable(int i, int j) {
  if (i > j) std::swap(i, j);
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string lp_row_name(const TransitivityConstraint& c) {
  return "t_" + std::to_string(c.i) + "_" + std::to_string(c.j) + "_" + std::to_string(c.k);
}

LpModel make_lp_model(const ConstraintSet& cs) {
  LpModel model;
  model.comments.push_back("cliquepart formulation " + std::string(to_string(cs.kind)) +
                           ", n = " + std::to_string(cs.n) + ", " +
                           std::to_string(cs.constraints.size()) + " transitivity rows");
  if (cs.scaled_objective)
    model.comments.push_back("objective perturbed: (" + std::to_string(cs.scale) +
                             ") * w - 1 per pair");
  if (is_experimental(cs.kind)) model.comments.emplace_back(kExperimentalNote);

  std::size_t idx = 0;
  for (int i = 0; i < cs.n; ++i)
    for (int j = i + 1; j < cs.n; ++j, ++idx) {
      model.objective.push_back({cs.objective_weights.at(idx), lp_variable(i, j)});
      model.binaries.push_back(lp_variable(i, j));
    }
  model.rows.reserve(cs.constraints.size());
  for (const auto& c : cs.constraints)
    model.rows.push_back({lp_row_name(c),
                          {{1, lp_variable(c.i, c.j)},
                           {1, lp_variable(c.j, c.k)},
                           {-1, lp_variable(c.i, c.k)}},
                          1});
  return model;
}

namespace {

void write_terms(std::ostream& out, const std::vector<LpTerm>& terms, std::size_t per_line) {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t > 0 && per_line > 0 && t % per_line == 0) out << "\n  ";
    const Weight magnitude = term.coefficient < 0 ? -term.coefficient : term.coefficient;
    if (t == 0) {
      if (term.coefficient < 0) out << "- ";
    } else {
      out << (term.coefficient < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude << ' ';
    out << term.variable;
  }
}

class CountingBuf : public std::streambuf {
 public:
  explicit CountingBuf(std::streambuf* inner) : inner_(inner) {}
  std::size_t count() const { return count_; }

 protected:
  int_type overflow(int_type ch) override {
    if (traits_type::eq_int_type(ch, traits_type::eof())) return traits_type::not_eof(ch);
    ++count_;
    return inner_->sputc(traits_type::to_char_type(ch));
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    const auto written = inner_->sputn(s, n);
    count_ += static_cast<std::size_t>(written);
    return written;
  }

 private:
  std::streambuf* inner_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t write_lp(const LpModel& model, std::ostream& sink) {
  CountingBuf buf(sink.rdbuf());
  std::ostream out(&buf);
  for (const auto& c : model.comments) out << "\\ " << c << '\n';
  out << "Maximize\n obj: ";
  write_terms(out, model.objective, 8);
  out << "\nSubject To\n";
  for (const auto& row : model.rows) {
    out << ' ' << row.name << ": ";
    write_terms(out, row.terms, 0);
    out << " <= " << row.rhs << '\n';
  }
  out << "Binaries\n";
  for (const auto& b : model.binaries) out << ' ' << b << '\n';
  out << "End\n";
  out.flush();
  if (!out || !sink) throw Error("LP write failed");
  return buf.count();
}

std::size_t write_lp(const ConstraintSet& cs, std::ostream& out) {
  return write_lp(make_lp_model(cs), out);
}

std::string format_lp(const ConstraintSet& cs) {
  std::ostringstream os;
  write_lp(cs, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "markdown" || text == "md") return ReportFormat::Markdown;
  if (text == "json") return ReportFormat::Json;
  throw Error("unknown report format '" + std::string(text) + "'");
}

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> columns = {
      "instance", "family", "n",     "seed",  "kind",
      "count",    "solver", "status", "value", "elapsed"};
  return columns;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

namespace {

std::string format_seconds(double seconds, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, seconds);
  return buf;
}

std::vector<std::string> bench_fields(const BenchRow& r) {
  return {r.instance_id, r.family, std::to_string(r.n), r.seed,
          r.kind, std::to_string(r.constraint_count), r.solver, r.status,
          std::to_string(r.value), format_seconds(r.elapsed_seconds, 6)};
}

void write_csv_line(const std::vector<std::string>& fields, std::ostream& out) {
  for (std::size_t t = 0; t < fields.size(); ++t) out << (t ? "," : "") << csv_escape(fields[t]);
  out << '\n';
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

void write_md_table(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  out << '|';
  for (const auto& h : header) out << ' ' << md_cell(h) << " |";
  out << "\n|";
  for (std::size_t t = 0; t < header.size(); ++t) out << (t == 0 ? ":---|" : "---:|");
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << md_cell(cell) << " |";
    out << '\n';
  }
}

template <typename T>
void push_unique(std::vector<T>& v, const T& value) {
  if (std::find(v.begin(), v.end(), value) == v.end()) v.push_back(value);
}

std::string join_distinct(const std::vector<std::string>& values) {
  std::vector<std::string> distinct;
  for (const auto& v : values) push_unique(distinct, v);
  std::string out;
  for (std::size_t t = 0; t < distinct.size(); ++t) out += (t ? "/" : "") + distinct[t];
  return out;
}

void write_markdown_report(const std::vector<BenchRow>& rows, std::ostream& out) {
  std::vector<std::string> families;
  for (const auto& r : rows) push_unique(families, r.family);
  if (families.empty()) {
    write_md_table({"ID", "n", "seed", "value", "status"}, {}, out);
    return;
  }
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& family = families[f];
    std::vector<std::string> kinds;
    std::vector<std::string> instances;
    for (const auto& r : rows)
      if (r.family == family) {
        push_unique(kinds, r.kind);
        push_unique(instances, r.instance_id);
      }
    std::vector<std::string> header{"ID", "n", "seed"};
    for (const auto& k : kinds) header.push_back(k);
    header.emplace_back("value");
    header.emplace_back("status");

    std::vector<std::vector<std::string>> table;
    for (const auto& id : instances) {
      std::vector<std::string> line{id, "", ""};
      std::vector<std::string> cells(kinds.size(), "");
      std::vector<std::string> values;
      std::vector<std::string> statuses;
      for (const auto& r : rows) {
        if (r.family != family || r.instance_id != id) continue;
        line[1] = std::to_string(r.n);
        line[2] = r.seed;
        const auto pos = std::find(kinds.begin(), kinds.end(), r.kind) - kinds.begin();
        cells[static_cast<std::size_t>(pos)] = format_seconds(r.elapsed_seconds, 3) + " (" +
                                               std::to_string(r.constraint_count) + ")";
        values.push_back(std::to_string(r.value));
        statuses.push_back(r.status);
      }
      line.insert(line.end(), cells.begin(), cells.end());
      line.push_back(join_distinct(values));
      line.push_back(join_distinct(statuses));
      table.push_back(std::move(line));
    }
    if (f > 0) out << '\n';
    out << "### " << family << "\n\n";
    write_md_table(header, table, out);
  }
}

nlohmann::ordered_json json_scalar(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!s.empty() && ec == std::errc() && ptr == s.data() + s.size()) return v;
  return s;
}

}  // namespace

void write_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::Csv:
      write_csv_line(bench_columns(), out);
      for (const auto& r : rows) write_csv_line(bench_fields(r), out);
      break;
    case ReportFormat::Markdown:
      write_markdown_report(rows, out);
      break;
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["instance"] = r.instance_id;
        o["family"] = r.family;
        o["n"] = r.n;
        o["seed"] = r.seed;
        o["kind"] = r.kind;
        o["count"] = r.constraint_count;
        o["solver"] = r.solver;
        o["status"] = r.status;
        o["value"] = r.value;
        o["elapsed"] = r.elapsed_seconds;
        arr.push_back(std::move(o));
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

void write_table(const Table& table, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::Csv:
      write_csv_line(table.header, out);
      for (const auto& row : table.rows) write_csv_line(row, out);
      break;
    case ReportFormat::Markdown:
      write_md_table(table.header, table.rows, out);
      break;
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json o;
        for (std::size_t t = 0; t < table.header.size(); ++t)
          o[table.header[t]] = t < row.size() ? json_scalar(row[t]) : nlohmann::ordered_json();
        arr.push_back(std::move(o));
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace cliquepart
