#include "mlcn/edge_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mlcn/errors.hpp"

namespace mlcn {

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in, std::size_t n) {
  Graph g(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 ||
        static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ArgumentError("edge list line " + std::to_string(line_no) + " is malformed: '" +
                          line + "'");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace mlcn
