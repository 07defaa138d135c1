#include "atsmem/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "atsmem/errors.hpp"

namespace atsmem {

void Table::select_columns(const std::vector<std::string>& wanted) {
    if (wanted.empty()) return;
    std::vector<std::size_t> index;
    index.reserve(wanted.size());
    for (const auto& name : wanted) {
        const auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end())
            throw ConfigError("sweep.outputs: unknown column '" + name + "'");
        index.push_back(static_cast<std::size_t>(it - columns.begin()));
    }
    for (auto& row : rows) {
        std::vector<double> selected;
        selected.reserve(index.size());
        for (std::size_t i : index) selected.push_back(row[i]);
        row = std::move(selected);
    }
    columns = wanted;
}

std::string format_full(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void write_csv(const Table& t, std::ostream& out) {
    for (const auto& [key, value] : t.metadata) out << "# " << key << "=" << value << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_full(row[c]) << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void write_json(const Table& t, std::ostream& out) {
    json doc;
    json meta = json::object();
    for (const auto& [key, value] : t.metadata) meta[key] = value;
    doc["metadata"] = meta;
    json records = json::array();
    for (const auto& row : t.rows) {
        json rec = json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = row[c];
        records.push_back(std::move(rec));
    }
    doc["rows"] = records;
    out << doc.dump(2) << "\n";
}

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> v(static_cast<std::size_t>(axis.steps));
    const auto n = static_cast<double>(axis.steps - 1);
    for (int i = 0; i < axis.steps; ++i) {
        if (axis.log_spacing)
            v[static_cast<std::size_t>(i)] = axis.min * std::pow(axis.max / axis.min, i / n);
        else
            v[static_cast<std::size_t>(i)] = axis.min + (axis.max - axis.min) * i / n;
    }
    return v;
}

std::size_t thread_cap() {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ATSMEM_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1) cap = std::min<std::size_t>(cap, parsed);
    }
    return cap;
}

}  // namespace atsmem
