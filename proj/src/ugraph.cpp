#include "tsic/ugraph.hpp"

#include <sstream>

namespace tsic {

std::string to_dot(const UGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tsic
