#include "hjbx/tensor_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hjbx/errors.hpp"

namespace hjbx {

std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

void write_sym_tensor(std::ostream& os, const SymTensor& t,
                      const std::vector<std::string>& extra_header_lines) {
    os << "# degree=" << t.degree() << " dim=" << t.dim() << " convention=symmetric-sum\n";
    for (const auto& line : extra_header_lines) os << "# " << line << "\n";
    const auto tuples = all_multi_indices(t.dim(), t.degree());
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        for (int idx : tuples[r].indices()) os << idx << ',';
        os << fmt_sci(t.raw_at(r)) << "\n";
    }
}

SymTensor read_sym_tensor(std::istream& is) {
    std::string line;
    int line_no = 0;
    int degree = -1, dim = -1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (degree < 0) {
                std::istringstream hs(line.substr(1));
                std::string token;
                while (hs >> token) {
                    if (token.rfind("degree=", 0) == 0) degree = std::stoi(token.substr(7));
                    if (token.rfind("dim=", 0) == 0) dim = std::stoi(token.substr(4));
                }
            }
            continue;
        }
        break;
    }
    if (degree < 1 || dim < 1) throw ParseError(line_no, "missing `# degree=k dim=n` header");

    SymTensor out(dim, degree);
    // `line` currently holds the first data row (if any)
    do {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> idx(static_cast<std::size_t>(degree));
        char comma = 0;
        for (int j = 0; j < degree; ++j) {
            if (!(ls >> idx[static_cast<std::size_t>(j)] >> comma) || comma != ',') {
                throw ParseError(line_no - 1, "malformed coefficient row");
            }
        }
        double value = 0.0;
        if (!(ls >> value)) throw ParseError(line_no - 1, "malformed coefficient value");
        out.set_coeff(MultiIndex(idx), value);
    } while (std::getline(is, line));
    return out;
}

} // namespace hjbx
