#include "ttstar/golden.hpp"

#include <fstream>
#include <sstream>

namespace ttstar {

std::vector<APoly> load_golden_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table: " + path);
    std::vector<APoly> table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
        std::istringstream ss(line);
        std::string n_s, e_s, c_s;
        if (!std::getline(ss, n_s, ',') || !std::getline(ss, e_s, ',') || !std::getline(ss, c_s))
            throw std::runtime_error("malformed golden row: " + line);
        long n = std::stol(n_s), e = std::stol(e_s);
        if (n < 0 || e < 0) throw std::runtime_error("negative index in golden row: " + line);
        if (static_cast<long>(table.size()) <= n) table.resize(n + 1);
        table[n] += APoly::monomial(rational_from_string(c_s), e);
    }
    return table;
}

}  // namespace ttstar
