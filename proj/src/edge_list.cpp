#include "joints/edge_list.hpp"

#include "joints/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace joints {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw Error(ErrorKind::ParseError, "missing header line \"n m\"");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad header");
  }
  GraphBuilder b(static_cast<int>(n));
  long long seen = 0;
  while (next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\"");
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m)
    throw Error(ErrorKind::ParseError,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return b.build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace joints
