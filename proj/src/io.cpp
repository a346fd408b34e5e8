#include "actwb/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace actwb {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WorkbenchError(Errc::parse_error, "cannot open " + path);
  std::vector<Line> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back({no, line});
  }
  return out;
}

std::vector<int> parse_ints(const Line& ln, const std::string& path, int expect) {
  std::istringstream ss(ln.text);
  std::vector<int> vals;
  int v;
  while (ss >> v) vals.push_back(v);
  std::string rest;
  if (ss.clear(), ss >> rest)
    throw WorkbenchError(Errc::parse_error,
                         path + ":" + std::to_string(ln.number) + ": non-integer token");
  if (expect >= 0 && static_cast<int>(vals.size()) != expect)
    throw WorkbenchError(Errc::parse_error, path + ":" + std::to_string(ln.number) + ": expected " +
                                                std::to_string(expect) + " integers, got " +
                                                std::to_string(vals.size()));
  return vals;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkbenchError(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedMonoid load_monoid(const std::string& path) {
  auto lines = significant_lines(path);
  if (lines.empty()) throw WorkbenchError(Errc::parse_error, path + ": empty file");
  std::istringstream head(lines[0].text);
  std::string kw;
  int n = -1;
  head >> kw >> n;
  if (kw != "monoid" || n <= 0)
    throw WorkbenchError(Errc::parse_error, path + ":" + std::to_string(lines[0].number) +
                                                ": expected header `monoid <n>`");
  if (static_cast<int>(lines.size()) != 1 + n)
    throw WorkbenchError(Errc::parse_error,
                         path + ": expected " + std::to_string(n) + " table rows, got " +
                             std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows;
  for (int s = 0; s < n; ++s) rows.push_back(parse_ints(lines[1 + s], path, n));
  return LoadedMonoid{make_monoid(rows), stem_of(path), path};
}

LoadedAct load_act(const std::string& path) {
  auto lines = significant_lines(path);
  if (lines.empty()) throw WorkbenchError(Errc::parse_error, path + ": empty file");
  std::istringstream head(lines[0].text);
  std::string kw, mref;
  int m = -1;
  head >> kw >> mref >> m;
  if (kw != "act" || mref.empty() || m < 0)
    throw WorkbenchError(Errc::parse_error, path + ":" + std::to_string(lines[0].number) +
                                                ": expected header `act <monoid-file> <m>`");
  std::filesystem::path mpath(mref);
  if (mpath.is_relative()) mpath = std::filesystem::path(path).parent_path() / mpath;
  LoadedMonoid lm = load_monoid(mpath.string());
  const int n = lm.monoid->size();
  const int expected_rows = m == 0 ? 0 : n;
  if (static_cast<int>(lines.size()) != 1 + expected_rows)
    throw WorkbenchError(Errc::parse_error,
                         path + ": expected " + std::to_string(expected_rows) +
                             " action rows, got " + std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> rows(n);
  for (int s = 0; s < expected_rows; ++s) rows[s] = parse_ints(lines[1 + s], path, m);
  return LoadedAct{validate_act(lm.monoid, rows), stem_of(path), path, mref, mpath.string()};
}

std::string monoid_to_text(const Monoid& m) {
  std::ostringstream out;
  out << "monoid " << m.size() << "\n";
  for (int s = 0; s < m.size(); ++s) {
    for (int t = 0; t < m.size(); ++t) out << (t ? " " : "") << m.mul(s, t);
    out << "\n";
  }
  return out.str();
}

std::string act_to_text(const Act& a, const std::string& monoid_ref) {
  std::ostringstream out;
  out << "act " << monoid_ref << " " << a.size << "\n";
  if (a.size > 0)
    for (int s = 0; s < a.msize(); ++s) {
      for (int x = 0; x < a.size; ++x) out << (x ? " " : "") << a.act(s, x);
      out << "\n";
    }
  return out.str();
}

}  // namespace actwb
