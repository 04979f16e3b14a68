// io.cpp — Readers and writers for matrices, iceberg tables, and partitions.
#include "rolesim/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rolesim {

namespace {

constexpr char kMagic[4] = {'R', 'S', 'I', 'M'};
constexpr std::uint8_t kVersion = 1;

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

void put_u64_le(std::ostream& out, std::uint64_t value) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
    out.write(bytes, 8);
}

std::uint64_t get_u64_le(std::istream& in) {
    char bytes[8];
    in.read(bytes, 8);
    if (!in) fail("matrix binary: truncated integer");
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i)
        value |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
    return value;
}

// One score with enough digits that parsing it back restores the exact double.
void append_score(std::string& line, double score) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", score);
    line += buf;
}

struct CsvRow {
    int u, v;
    double score;
};

CsvRow parse_csv_row(const std::string& line, std::size_t line_no) {
    CsvRow row;
    char trailing;
    const int got = std::sscanf(line.c_str(), "%d ,%d ,%lf %c", &row.u, &row.v, &row.score,
                                &trailing);
    if (got != 3)
        fail("csv line " + std::to_string(line_no) + ": expected \"u,v,score\", got \"" + line +
             "\"");
    if (row.u < 0 || row.v < 0)
        fail("csv line " + std::to_string(line_no) + ": negative node id");
    return row;
}

}  // namespace

void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out) {
    const int n = m.size();
    std::string line;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            line.clear();
            line += std::to_string(u);
            line += ',';
            line += std::to_string(v);
            line += ',';
            append_score(line, m.at(u, v));
            line += '\n';
            out << line;
        }
    }
    if (!out) fail("matrix csv: write failed");
}

SimilarityMatrix read_matrix_csv(std::istream& in) {
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t line_no = 0;
    int max_node = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const CsvRow row = parse_csv_row(line, line_no);
        if (row.u >= row.v)
            fail("matrix csv line " + std::to_string(line_no) + ": pairs must satisfy u < v");
        rows.push_back(row);
        max_node = std::max(max_node, row.v);
    }
    if (rows.empty()) fail("matrix csv: no entries");

    const int n = max_node + 1;
    // Every u < v pair must appear exactly once; NaN marks an unseen cell.
    SimilarityMatrix m(n, std::numeric_limits<double>::quiet_NaN());
    for (const CsvRow& row : rows) {
        if (!std::isnan(m.at(row.u, row.v)))
            fail("matrix csv: duplicate pair " + std::to_string(row.u) + "," +
                 std::to_string(row.v));
        m.set(row.u, row.v, row.score);
    }
    if (rows.size() != pair_count(n))
        fail("matrix csv: " + std::to_string(rows.size()) + " entries but " +
             std::to_string(n) + " nodes need " + std::to_string(pair_count(n)));
    return m;
}

void write_matrix_binary(const SimilarityMatrix& m, std::ostream& out) {
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    put_u64_le(out, static_cast<std::uint64_t>(m.size()));
    for (const double score : m.data()) put_u64_le(out, std::bit_cast<std::uint64_t>(score));
    if (!out) fail("matrix binary: write failed");
}

SimilarityMatrix read_matrix_binary(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || !std::equal(magic, magic + 4, kMagic)) fail("matrix binary: bad magic");
    const int version = in.get();
    if (version != kVersion)
        fail("matrix binary: unsupported version " + std::to_string(version));
    const std::uint64_t n64 = get_u64_le(in);
    if (n64 > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        fail("matrix binary: node count overflows int");
    const int n = static_cast<int>(n64);

    SimilarityMatrix m(n, 0.0);
    for (double& score : m.data()) score = std::bit_cast<double>(get_u64_le(in));
    // Trailing garbage means the file was not produced by this writer.
    if (in.peek() != std::char_traits<char>::eof()) fail("matrix binary: trailing bytes");
    return m;
}

SimilarityMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    char magic[4] = {};
    in.read(magic, 4);
    in.clear();
    in.seekg(0);
    if (in.gcount() == 4 && std::equal(magic, magic + 4, kMagic)) return read_matrix_binary(in);
    return read_matrix_csv(in);
}

void save_matrix(const SimilarityMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path + " for writing");
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        write_matrix_csv(m, out);
    else
        write_matrix_binary(m, out);
    out.flush();
    if (!out) fail("write to " + path + " failed");
}

void write_iceberg_csv(const IcebergTable& t, const IcebergMeta& meta, std::ostream& out) {
    std::string header = "# iceberg theta=";
    append_score(header, meta.theta);
    header += " beta=";
    append_score(header, meta.beta);
    header += " alpha=";
    append_score(header, meta.alpha);
    header += '\n';
    out << header;

    std::string line;
    for (std::size_t i = 0; i < t.size(); ++i) {
        line.clear();
        line += std::to_string(t.pairs()[i].first);
        line += ',';
        line += std::to_string(t.pairs()[i].second);
        line += ',';
        append_score(line, t.scores()[i]);
        line += '\n';
        out << line;
    }
    if (!out) fail("iceberg csv: write failed");
}

IcebergTable read_iceberg_csv(std::istream& in, IcebergMeta* meta) {
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    IcebergTable t;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            IcebergMeta parsed;
            if (std::sscanf(line.c_str(), "# iceberg theta= %lf beta= %lf alpha= %lf",
                            &parsed.theta, &parsed.beta, &parsed.alpha) == 3) {
                saw_header = true;
                if (meta) *meta = parsed;
            }
            continue;
        }
        const CsvRow row = parse_csv_row(line, line_no);
        if (row.u >= row.v)
            fail("iceberg csv line " + std::to_string(line_no) + ": pairs must satisfy u < v");
        t.insert(row.u, row.v, row.score);
    }
    if (!saw_header) fail("iceberg csv: missing \"# iceberg theta=... beta=... alpha=...\" header");
    t.finalize();
    return t;
}

IcebergTable load_iceberg_csv(const std::string& path, IcebergMeta* meta) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return read_iceberg_csv(in, meta);
}

void save_iceberg_csv(const IcebergTable& t, const IcebergMeta& meta, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    write_iceberg_csv(t, meta, out);
    out.flush();
    if (!out) fail("write to " + path + " failed");
}

void write_partition_csv(const Partition& p, std::ostream& out) {
    out << "node,class\n";
    for (std::size_t v = 0; v < p.labels.size(); ++v)
        out << v << ',' << p.labels[v] << '\n';
    if (!out) fail("partition csv: write failed");
}

Partition read_partition_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<int, int>> rows;
    int max_node = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line == "node,class") continue;
        int node, cls;
        char trailing;
        if (std::sscanf(line.c_str(), "%d ,%d %c", &node, &cls, &trailing) != 2)
            fail("partition csv line " + std::to_string(line_no) + ": expected \"node,class\"");
        if (node < 0 || cls < 0)
            fail("partition csv line " + std::to_string(line_no) + ": negative value");
        rows.emplace_back(node, cls);
        max_node = std::max(max_node, node);
    }
    if (rows.empty()) fail("partition csv: no entries");

    Partition p;
    p.labels.assign(max_node + 1, -1);
    for (const auto& [node, cls] : rows) {
        if (p.labels[node] != -1) fail("partition csv: duplicate node " + std::to_string(node));
        p.labels[node] = cls;
        p.k = std::max(p.k, cls + 1);
    }
    for (std::size_t v = 0; v < p.labels.size(); ++v)
        if (p.labels[v] == -1) fail("partition csv: node " + std::to_string(v) + " missing");
    return p;
}

Partition load_partition_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return read_partition_csv(in);
}

void save_partition_csv(const Partition& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    write_partition_csv(p, out);
    out.flush();
    if (!out) fail("write to " + path + " failed");
}

}  // namespace rolesim
