#include "qhs/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qhs {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

OutputRow to_output_row(const EnumerationRecord& rec) {
  OutputRow row;
  row.n = rec.ws.n();
  for (const Int& w : rec.ws.weights()) row.v.push_back(to_i64_checked(w, "weight"));
  row.d = to_i64_checked(rec.ws.degree(), "degree");
  row.mu = to_i64_checked(rec.mu, "mu");
  row.kappa_types = rec.kappa_types;
  for (const auto& [m, c] : rec.charpoly.multiplicities()) {
    row.charpoly.emplace_back(to_i64_checked(m, "charpoly index"), to_i64_checked(c, "multiplicity"));
  }
  row.reduced = rec.ws.is_reduced();
  row.v_lt_half_d = rec.ws.all_below_half_degree();
  return row;
}

void write_jsonl(const std::vector<OutputRow>& rows, std::ostream& out) {
  for (const OutputRow& row : rows) {
    nlohmann::json j;
    j["n"] = row.n;
    j["v"] = row.v;
    j["d"] = row.d;
    j["mu"] = row.mu;
    j["kappa_types"] = row.kappa_types;
    j["charpoly"] = row.charpoly;
    j["flags"] = {{"reduced", row.reduced}, {"v_lt_half_d", row.v_lt_half_d}};
    out << j.dump() << "\n";
  }
}

std::vector<OutputRow> read_jsonl(std::istream& in) {
  std::vector<OutputRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    OutputRow row;
    row.n = j.at("n").get<int>();
    row.v = j.at("v").get<std::vector<long long>>();
    row.d = j.at("d").get<long long>();
    row.mu = j.at("mu").get<long long>();
    row.kappa_types = j.at("kappa_types").get<std::vector<std::string>>();
    row.charpoly = j.at("charpoly").get<std::vector<std::pair<long long, long long>>>();
    row.reduced = j.at("flags").at("reduced").get<bool>();
    row.v_lt_half_d = j.at("flags").at("v_lt_half_d").get<bool>();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(const std::vector<OutputRow>& rows, std::ostream& out) {
  out << "n,v,d,mu,kappa_types,charpoly,reduced,v_lt_half_d\n";
  for (const OutputRow& row : rows) {
    std::vector<std::string> vs;
    for (long long w : row.v) vs.push_back(std::to_string(w));
    std::vector<std::string> cs;
    for (const auto& [m, c] : row.charpoly) cs.push_back(std::to_string(m) + ":" + std::to_string(c));
    out << row.n << "," << join(vs, ';') << "," << row.d << "," << row.mu << ","
        << join(row.kappa_types, ';') << "," << join(cs, ';') << ","
        << (row.reduced ? "true" : "false") << "," << (row.v_lt_half_d ? "true" : "false") << "\n";
  }
}

std::vector<OutputRow> read_csv(std::istream& in) {
  std::vector<OutputRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 8) throw std::invalid_argument("csv row must have 8 fields");
    OutputRow row;
    row.n = std::stoi(fields[0]);
    for (const auto& tok : split(fields[1], ';')) row.v.push_back(std::stoll(tok));
    row.d = std::stoll(fields[2]);
    row.mu = std::stoll(fields[3]);
    for (auto& tok : split(fields[4], ';')) row.kappa_types.push_back(std::move(tok));
    for (const auto& tok : split(fields[5], ';')) {
      auto parts = split(tok, ':');
      if (parts.size() != 2) throw std::invalid_argument("bad charpoly entry: " + tok);
      row.charpoly.emplace_back(std::stoll(parts[0]), std::stoll(parts[1]));
    }
    row.reduced = fields[6] == "true";
    row.v_lt_half_d = fields[7] == "true";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qhs
