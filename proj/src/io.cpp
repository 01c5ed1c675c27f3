#include "neighsum/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace neighsum {

namespace {

using json = nlohmann::ordered_json;

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid decimal integer: '" + text + "'");
    }
}

Int json_to_int(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return parse_int(std::to_string(j.get<long long>()));
    throw std::invalid_argument("board cells must be decimal strings or integers");
}

json nest_cells(const IntGrid& grid, std::size_t axis, long& cursor) {
    json out = json::array();
    if (axis + 1 == grid.dims.size()) {
        for (long k = 0; k < grid.dims[axis]; ++k)
            out.push_back(grid.cells[static_cast<std::size_t>(cursor++)].get_str());
        return out;
    }
    for (long k = 0; k < grid.dims[axis]; ++k) out.push_back(nest_cells(grid, axis + 1, cursor));
    return out;
}

void flatten_cells(const json& j, std::size_t axis, const std::vector<long>& dims,
                   std::vector<Int>& cells) {
    if (!j.is_array() || static_cast<long>(j.size()) != dims[axis])
        throw std::invalid_argument("board cells do not match the declared dimensions");
    if (axis + 1 == dims.size()) {
        for (const json& cell : j) cells.push_back(json_to_int(cell));
        return;
    }
    for (const json& sub : j) flatten_cells(sub, axis + 1, dims, cells);
}

}  // namespace

std::string board_to_json(const IntGrid& grid) {
    json out;
    out["dims"] = grid.dims;
    long cursor = 0;
    out["cells"] = nest_cells(grid, 0, cursor);
    return out.dump();
}

IntGrid board_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("board JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("cells"))
        throw std::invalid_argument("board JSON must contain dims and cells");
    std::vector<long> dims = j["dims"].get<std::vector<long>>();
    if (dims.empty()) throw std::invalid_argument("board JSON: dims must be nonempty");
    std::vector<Int> cells;
    flatten_cells(j["cells"], 0, dims, cells);
    return IntGrid(std::move(dims), std::move(cells));
}

std::string board_to_csv(const IntGrid& grid) {
    if (grid.dims.size() != 2)
        throw std::invalid_argument("CSV boards must be 2-dimensional");
    std::ostringstream out;
    for (long i = 0; i < grid.dims[0]; ++i) {
        for (long j = 0; j < grid.dims[1]; ++j)
            out << (j ? "," : "") << grid.at(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

IntGrid board_from_csv(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Int> row;
        std::string field;
        std::istringstream fields(line);
        while (std::getline(fields, field, ',')) {
            std::size_t begin = field.find_first_not_of(" \t\r");
            std::size_t end = field.find_last_not_of(" \t\r");
            if (begin == std::string::npos)
                throw std::invalid_argument("CSV board: empty field");
            row.push_back(parse_int(field.substr(begin, end - begin + 1)));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("CSV board: no rows");
    const long cols = static_cast<long>(rows.front().size());
    std::vector<Int> cells;
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != cols)
            throw std::invalid_argument("CSV board: ragged rows");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return IntGrid({static_cast<long>(rows.size()), cols}, std::move(cells));
}

std::string kernel_to_json(const KernelBasis& basis) {
    json out;
    out["dim"] = basis.dimension();
    json vectors = json::array();
    for (const std::vector<Int>& v : basis.vectors) {
        json row = json::array();
        for (const Int& x : v) row.push_back(x.get_str());
        vectors.push_back(std::move(row));
    }
    out["vectors"] = std::move(vectors);
    return out.dump();
}

std::string verdict_to_json(const ExistenceVerdict& verdict) {
    json out;
    out["exists"] = verdict.exists;
    out["rule"] = verdict.rule;
    if (verdict.certificate)
        out["certificate"] = *verdict.certificate;
    else
        out["certificate"] = nullptr;
    return out.dump();
}

std::string count_to_json(const CountRecord& record) {
    json out;
    out["n"] = record.n;
    out["d"] = record.d;
    out["count"] = std::to_string(record.count);
    return out.dump();
}

std::string counts_to_json(const std::vector<CountRecord>& records) {
    json out = json::array();
    for (const CountRecord& r : records) {
        json item;
        item["n"] = r.n;
        item["d"] = r.d;
        item["count"] = std::to_string(r.count);
        out.push_back(std::move(item));
    }
    return out.dump();
}

std::string violations_to_json(const std::vector<Violation>& violations) {
    json out;
    out["count"] = violations.size();
    json list = json::array();
    for (const Violation& v : violations) {
        json item;
        item["cell"] = v.cell;
        item["expected"] = v.expected.get_str();
        item["actual"] = v.actual.get_str();
        list.push_back(std::move(item));
    }
    out["violations"] = std::move(list);
    return out.dump();
}

std::string rational_solutions_to_json(const std::vector<RationalSolution>& solutions) {
    json out = json::array();
    for (const RationalSolution& s : solutions) {
        json item;
        item["N"] = s.N;
        item["p"] = s.p;
        item["q"] = s.q;
        long gp = std::gcd(s.p, s.N);
        long gq = std::gcd(s.q, s.N);
        item["u"] = std::to_string(s.p / gp) + "/" + std::to_string(s.N / gp);
        item["v"] = std::to_string(s.q / gq) + "/" + std::to_string(s.N / gq);
        out.push_back(std::move(item));
    }
    return out.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<Int> read_sequence_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<Int> values;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        values.push_back(parse_int(line.substr(begin, end - begin + 1)));
    }
    return values;
}

CrossSpec read_cross_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    CrossSpec cross;
    std::map<long, Int>* section = nullptr;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed == "[a]") { section = &cross.a; continue; }
        if (trimmed == "[b]") { section = &cross.b; continue; }
        if (trimmed == "[c]") { section = &cross.c; continue; }
        if (trimmed == "[d]") { section = &cross.d; continue; }
        if (section == nullptr)
            throw std::invalid_argument("cross file: data before any [a]/[b]/[c]/[d] section");
        std::istringstream fields(trimmed);
        long index = 0;
        std::string value;
        if (!(fields >> index >> value) || index == 0)
            throw std::invalid_argument("cross file: bad line " + std::to_string(line_no) +
                                        ": '" + trimmed + "'");
        (*section)[index] = parse_int(value);
    }
    return cross;
}

}  // namespace neighsum
