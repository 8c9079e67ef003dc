#ifndef MCKP_IO_HPP_
#define MCKP_IO_HPP_

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mckp/bissa.hpp"
#include "mckp/errors.hpp"
#include "mckp/model.hpp"

namespace mckp {

// Shortest decimal that parses back to exactly the same double, so the
// text format round-trips bit for bit.
inline std::string format_value(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return std::string(buf);
}

// Instance text format, version 1:
//   MCKP 1
//   <k> <budget>
// then for each group one line <n_i> followed by n_i lines "<profit> <cost>".
// UTF-8, LF line endings, single spaces, no trailing whitespace.
inline void write_instance(const Instance& inst, std::ostream& os) {
  os << "MCKP 1\n";
  os << inst.group_count() << ' ' << format_value(inst.budget()) << '\n';
  for (const Group& g : inst.groups()) {
    os << g.size() << '\n';
    for (const Item& it : g.items)
      os << format_value(it.profit) << ' ' << format_value(it.cost) << '\n';
  }
}

inline void write_instance_file(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::ParseError, "cannot open " + path.string() + " for writing");
  write_instance(inst, os);
  if (!os) throw Error(ErrorCode::ParseError, "failed writing " + path.string());
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) next = line.size();
    if (next > pos) out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

inline double parse_double(std::string_view s, int line_no, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError,
                std::string("bad ") + what + " '" + std::string(s) + "' at line " +
                    std::to_string(line_no),
                line_no);
  return v;
}

inline std::int64_t parse_count(std::string_view s, int line_no, const char* what) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 0)
    throw Error(ErrorCode::ParseError,
                std::string("bad ") + what + " '" + std::string(s) + "' at line " +
                    std::to_string(line_no),
                line_no);
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Returns the next line; parse failure messages carry its number.
  std::string next(const char* what) {
    std::string line;
    if (!std::getline(is_, line))
      throw Error(ErrorCode::ParseError,
                  std::string("missing ") + what + " at line " + std::to_string(line_no_ + 1),
                  line_no_ + 1);
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  bool at_eof() {
    return is_.peek() == std::char_traits<char>::eof();
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& is_;
  int line_no_ = 0;
};

}  // namespace detail

inline Instance read_instance(std::istream& is) {
  detail::LineReader reader(is);
  std::string magic = reader.next("header");
  if (!magic.starts_with("MCKP"))
    throw Error(ErrorCode::ParseError, "not an MCKP instance file", 1);
  if (magic != "MCKP 1")
    throw Error(ErrorCode::VersionMismatch, "unsupported format version '" + magic + "'");

  std::string head = reader.next("group count and budget");
  auto fields = detail::split_fields(head);
  if (fields.size() != 2)
    throw Error(ErrorCode::ParseError,
                "expected '<k> <budget>' at line " + std::to_string(reader.line_no()),
                reader.line_no());
  std::int64_t k = detail::parse_count(fields[0], reader.line_no(), "group count");
  double budget = detail::parse_double(fields[1], reader.line_no(), "budget");

  std::vector<Group> groups;
  groups.reserve(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    std::string count_line = reader.next("item count");
    auto count_fields = detail::split_fields(count_line);
    if (count_fields.size() != 1)
      throw Error(ErrorCode::ParseError,
                  "expected item count at line " + std::to_string(reader.line_no()),
                  reader.line_no());
    std::int64_t n = detail::parse_count(count_fields[0], reader.line_no(), "item count");
    Group g;
    g.items.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
      std::string item_line = reader.next("item");
      auto item_fields = detail::split_fields(item_line);
      if (item_fields.size() != 2)
        throw Error(ErrorCode::ParseError,
                    "expected '<profit> <cost>' at line " + std::to_string(reader.line_no()),
                    reader.line_no());
      g.items.push_back(Item{detail::parse_double(item_fields[0], reader.line_no(), "profit"),
                             detail::parse_double(item_fields[1], reader.line_no(), "cost")});
    }
    groups.push_back(std::move(g));
  }
  if (!reader.at_eof())
    throw Error(ErrorCode::ParseError,
                "unexpected content after line " + std::to_string(reader.line_no()),
                reader.line_no() + 1);
  return validate_instance(std::move(groups), budget);
}

inline Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_instance(is);
}

enum class ReportFormat { Json, Csv };

inline const char* bissa_status_name(BissaStatus s) {
  switch (s) {
    case BissaStatus::ExactSolved: return "ExactSolved";
    case BissaStatus::Approximate: return "Approximate";
    case BissaStatus::Infeasible: return "Infeasible";
  }
  return "unknown";
}

inline nlohmann::json report_to_json(const BissaReport& r, double total_ms) {
  nlohmann::json j;
  j["status"] = bissa_status_name(r.status);
  if (r.solution) {
    j["lb"] = r.lb;
    j["ub"] = r.ub;
    j["u"] = r.u;
    j["picks"] = r.solution->picks;
    j["triangle"] = {{r.triangle[0].f1, r.triangle[0].f2},
                     {r.triangle[1].f1, r.triangle[1].f2},
                     {r.triangle[2].f1, r.triangle[2].f2}};
  } else {
    j["lb"] = nullptr;
    j["ub"] = nullptr;
    j["u"] = nullptr;
    j["picks"] = nullptr;
    j["triangle"] = nullptr;
  }
  j["iterations"] = nlohmann::json::array();
  for (const IterationRecord& rec : r.iterations) {
    j["iterations"].push_back({{"weights", {rec.weights.wp, rec.weights.wc}},
                               {"alpha", rec.alpha},
                               {"opt", rec.opt},
                               {"outcome", {rec.representative.f1, rec.representative.f2}},
                               {"branch", branch_name(rec.branch)}});
  }
  j["scalarized_count"] = r.scalarized_count;
  if (r.tie_scan) {
    j["s_cardinality"] = r.tie_scan->s_cardinality;
    j["exhaustive"] = r.tie_scan->exhaustive;
  } else {
    j["s_cardinality"] = nullptr;
    j["exhaustive"] = nullptr;
  }
  j["timings_ms"] = {{"total", total_ms}};
  return j;
}

inline std::string report_csv_header() {
  return "id,exact,bissa,diff,rel_diff_pct,ub,ub_gap,ub_rel_gap_pct,greedy_ub,iters";
}

// One benchmark table row; cells are pre-rendered so error markers and
// blanks can stand in for missing values.
struct CsvRow {
  std::string id;
  std::string exact, bissa, diff, rel_diff_pct, ub, ub_gap, ub_rel_gap_pct, greedy_ub, iters;

  std::string to_line() const {
    return id + ',' + exact + ',' + bissa + ',' + diff + ',' + rel_diff_pct + ',' + ub + ',' +
           ub_gap + ',' + ub_rel_gap_pct + ',' + greedy_ub + ',' + iters;
  }
};

inline CsvRow make_csv_row(const std::string& id, std::optional<double> exact,
                           const BissaReport* bissa, std::optional<double> greedy_ub) {
  CsvRow row;
  row.id = id;
  if (exact) row.exact = format_value(*exact);
  if (bissa) {
    if (bissa->status == BissaStatus::Infeasible) {
      row.bissa = "infeasible";
    } else {
      row.bissa = format_value(bissa->lb);
      if (exact) {
        row.diff = format_value(*exact - bissa->lb);
        if (*exact > 0) row.rel_diff_pct = format_fixed3(100.0 * (*exact - bissa->lb) / *exact);
      }
      row.ub = format_fixed3(bissa->ub);
      row.ub_gap = format_fixed3(bissa->u);
      if (bissa->lb > 0) row.ub_rel_gap_pct = format_fixed3(100.0 * bissa->u / bissa->lb);
      row.iters = std::to_string(bissa->scalarized_count);
    }
  }
  if (greedy_ub) row.greedy_ub = format_fixed3(*greedy_ub);
  return row;
}

// Renders a solver report: the full JSON schema, or a header plus one
// CSV table row. Timings appear only in the JSON form so CSV output is
// byte-reproducible.
inline std::string write_report(const BissaReport& r, ReportFormat format,
                                const std::string& id = "instance",
                                std::optional<double> exact = std::nullopt,
                                std::optional<double> greedy_ub = std::nullopt,
                                double total_ms = 0.0) {
  if (format == ReportFormat::Json) return report_to_json(r, total_ms).dump(2) + "\n";
  return report_csv_header() + "\n" + make_csv_row(id, exact, &r, greedy_ub).to_line() + "\n";
}

}  // namespace mckp

#endif  // MCKP_IO_HPP_
