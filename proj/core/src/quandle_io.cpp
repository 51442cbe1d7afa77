#include "quandlekit/quandle_io.hpp"

#include <fstream>
#include <sstream>

#include "quandlekit/errors.hpp"

namespace quandlekit {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size() || line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

FiniteQuandle read_quandle(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("missing order line");
    int n = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> n) || n < 1) throw ParseError("bad order line '" + line + "'");
        std::string rest;
        if (ss >> rest) throw ParseError("trailing tokens on order line");
    }
    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!next_content_line(in, line)) {
            throw ParseError("missing table row " + std::to_string(i));
        }
        std::istringstream ss(line);
        std::vector<int> row;
        int x = 0;
        while (ss >> x) row.push_back(x);
        if (static_cast<int>(row.size()) != n) {
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        }
        table.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (next_content_line(in, line)) {
        const std::string prefix = "labels:";
        std::size_t start = line.find_first_not_of(" \t");
        if (line.compare(start, prefix.size(), prefix) != 0) {
            throw ParseError("unexpected trailing line '" + line + "'");
        }
        std::istringstream ss(line.substr(start + prefix.size()));
        std::string name;
        while (ss >> name) labels.push_back(name);
        if (static_cast<int>(labels.size()) != n) {
            throw ParseError("labels line has " + std::to_string(labels.size()) +
                             " names, expected " + std::to_string(n));
        }
    }
    return FiniteQuandle::verified(std::move(table), std::move(labels));
}

FiniteQuandle read_quandle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_quandle(in);
}

std::string format_quandle(const FiniteQuandle& q) {
    std::ostringstream out;
    out << q.size() << "\n";
    for (int i = 0; i < q.size(); ++i) {
        for (int j = 0; j < q.size(); ++j) {
            if (j) out << " ";
            out << q.mul(i, j);
        }
        out << "\n";
    }
    if (q.has_labels()) {
        out << "labels:";
        for (int i = 0; i < q.size(); ++i) out << " " << q.label(i);
        out << "\n";
    }
    return out.str();
}

void write_quandle_file(const FiniteQuandle& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << format_quandle(q);
}

}  // namespace quandlekit
