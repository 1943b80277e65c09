#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "nimcash/lab.hpp"

namespace nimcash {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kCell = 12;
constexpr int kMargin = 36;

Count parse_count(std::string_view text, const char* what) {
  Count v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::BadRequest, std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

Player parse_winner(std::string_view text) {
  if (text == "1") return Player::P1;
  if (text == "2") return Player::P2;
  throw Error(ErrorCode::BadRequest, "winner must be 1 or 2, got '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

struct Row {
  Count d;
  Count e;
  Player w;
};

// Fills a grid from scattered rows; the bounding box must be covered exactly once.
StaircaseGrid assemble(const std::vector<Row>& rows, const RuleSet& rules, Count n,
                       GridSource source) {
  if (rows.empty()) throw Error(ErrorCode::BadRequest, "grid has no cells");
  StaircaseGrid grid;
  grid.rules = rules;
  grid.n = n;
  grid.source = source;
  grid.d_range = {rows[0].d, rows[0].d};
  grid.e_range = {rows[0].e, rows[0].e};
  for (const Row& r : rows) {
    grid.d_range.lo = std::min(grid.d_range.lo, r.d);
    grid.d_range.hi = std::max(grid.d_range.hi, r.d);
    grid.e_range.lo = std::min(grid.e_range.lo, r.e);
    grid.e_range.hi = std::max(grid.e_range.hi, r.e);
  }
  const auto total = static_cast<std::size_t>(grid.d_range.size() * grid.e_range.size());
  if (total != rows.size()) {
    throw Error(ErrorCode::BadRequest, "grid cells do not fill their bounding box");
  }
  grid.cells.assign(total, Player::P2);
  std::vector<bool> seen(total, false);
  for (const Row& r : rows) {
    const std::size_t i = grid.index(r.d, r.e);
    if (seen[i]) {
      throw Error(ErrorCode::BadRequest,
                  "duplicate cell (" + std::to_string(r.d) + "," + std::to_string(r.e) + ")");
    }
    seen[i] = true;
    grid.cells[i] = r.w;
  }
  return grid;
}

std::string render_csv(const StaircaseGrid& grid) {
  std::string out = "d,e,winner\n";
  for (Count d = grid.d_range.lo; d <= grid.d_range.hi; ++d) {
    for (Count e = grid.e_range.lo; e <= grid.e_range.hi; ++e) {
      out += std::to_string(d) + "," + std::to_string(e) + "," +
             std::to_string(index_of(grid.at(d, e))) + "\n";
    }
  }
  return out;
}

std::string render_json(const StaircaseGrid& grid) {
  ordered_json j;
  j["rules"] = std::vector<Count>(grid.rules.moves().begin(), grid.rules.moves().end());
  j["n"] = grid.n;
  j["d_range"] = {grid.d_range.lo, grid.d_range.hi};
  j["e_range"] = {grid.e_range.lo, grid.e_range.hi};
  j["source"] = std::string(to_string(grid.source));
  ordered_json cells = ordered_json::array();
  for (Count d = grid.d_range.lo; d <= grid.d_range.hi; ++d) {
    for (Count e = grid.e_range.lo; e <= grid.e_range.hi; ++e) {
      cells.push_back({{"d", d}, {"e", e}, {"w", index_of(grid.at(d, e))}});
    }
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

// d runs left to right, e bottom to top, matching the usual plot orientation.
std::string render_svg(const StaircaseGrid& grid) {
  const Count cols = grid.d_range.size();
  const Count rows = grid.e_range.size();
  const Count width = kMargin + cols * kCell + kCell;
  const Count height = kMargin + rows * kCell + kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<title>NIM" << to_string(grid.rules) << " n=" << grid.n << " (" << to_string(grid.source)
     << ")</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Count d = grid.d_range.lo; d <= grid.d_range.hi; ++d) {
    for (Count e = grid.e_range.lo; e <= grid.e_range.hi; ++e) {
      const Count x = kMargin + (d - grid.d_range.lo) * kCell;
      const Count y = kCell + (grid.e_range.hi - e) * kCell;
      const char* fill = grid.at(d, e) == Player::P1 ? "#2e9d4a" : "#d0342c";
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell - 1 << "\" height=\""
         << kCell - 1 << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  const Count axis_y = kCell + rows * kCell;
  os << "<g font-family=\"monospace\" font-size=\"9\" fill=\"black\">\n";
  for (Count d = grid.d_range.lo; d <= grid.d_range.hi; ++d) {
    if ((d - grid.d_range.lo) % 5 != 0) continue;
    os << "<text x=\"" << kMargin + (d - grid.d_range.lo) * kCell << "\" y=\"" << axis_y + 10
       << "\">" << d << "</text>\n";
  }
  for (Count e = grid.e_range.lo; e <= grid.e_range.hi; ++e) {
    if ((e - grid.e_range.lo) % 5 != 0) continue;
    os << "<text x=\"4\" y=\"" << kCell + (grid.e_range.hi - e) * kCell + 9 << "\">" << e
       << "</text>\n";
  }
  os << "<text x=\"" << kMargin + cols * kCell / 2 << "\" y=\"" << axis_y + 22 << "\">d</text>\n";
  os << "<text x=\"4\" y=\"" << kCell - 2 << "\">e</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

GridFormat parse_format(std::string_view text) {
  if (text == "csv") return GridFormat::Csv;
  if (text == "json") return GridFormat::Json;
  if (text == "svg") return GridFormat::Svg;
  throw Error(ErrorCode::BadRequest, "format must be csv, json or svg");
}

std::string render_grid(const StaircaseGrid& grid, GridFormat format) {
  switch (format) {
    case GridFormat::Csv: return render_csv(grid);
    case GridFormat::Json: return render_json(grid);
    case GridFormat::Svg: return render_svg(grid);
  }
  return {};
}

StaircaseGrid parse_grid_csv(std::string_view text, const RuleSet& rules, Count n,
                             GridSource source) {
  std::vector<Row> rows;
  bool header = true;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      if (line == "d,e,winner") continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw Error(ErrorCode::BadRequest, "expected d,e,winner in '" + std::string(line) + "'");
    }
    rows.push_back({parse_count(fields[0], "d"), parse_count(fields[1], "e"),
                    parse_winner(fields[2])});
  }
  return assemble(rows, rules, n, source);
}

StaircaseGrid parse_grid_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    std::vector<Row> rows;
    for (const auto& c : j.at("cells")) {
      const int w = c.at("w").get<int>();
      if (w != 1 && w != 2) throw Error(ErrorCode::BadRequest, "winner must be 1 or 2");
      rows.push_back({c.at("d").get<Count>(), c.at("e").get<Count>(), static_cast<Player>(w)});
    }
    StaircaseGrid grid =
        assemble(rows, RuleSet(j.at("rules").get<std::vector<Count>>()), j.at("n").get<Count>(),
                 parse_source(j.at("source").get<std::string>()));
    const Range d{j.at("d_range").at(0).get<Count>(), j.at("d_range").at(1).get<Count>()};
    const Range e{j.at("e_range").at(0).get<Count>(), j.at("e_range").at(1).get<Count>()};
    if (!(d == grid.d_range) || !(e == grid.e_range)) {
      throw Error(ErrorCode::RangeMismatch, "declared ranges disagree with the cells");
    }
    return grid;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::BadRequest, std::string("malformed grid JSON: ") + ex.what());
  }
}

std::string render_report_csv(const DiscrepancyReport& report) {
  std::string out = "rules,n,d,e,fast,regime,case,oracle\n";
  const std::string rules = report.rules ? "\"" + to_string(*report.rules) + "\"," : ",";
  for (const Discrepancy& x : report.entries) {
    out += rules + std::to_string(x.n) + "," + to_string(x.d) + "," + to_string(x.e) + "," +
           std::to_string(index_of(x.fast.winner)) + "," + std::string(to_string(x.fast.regime)) +
           ",\"" + describe(x.fast.detail) + "\"," + std::to_string(index_of(x.oracle)) + "\n";
  }
  return out;
}

}  // namespace nimcash
