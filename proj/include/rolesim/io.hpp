// io.hpp — Persistence for matrices, iceberg tables, and partitions.
//
// Formats:
//   matrix CSV     — "u,v,score" per line for u < v; scores at 17 significant
//                    digits so text round-trips reproduce doubles exactly.
//   matrix binary  — magic "RSIM", one version byte, little-endian u64 node
//                    count, then the strict upper triangle row-major as
//                    little-endian IEEE doubles. Round-trips bitwise.
//   iceberg CSV    — header "# iceberg theta=<t> beta=<b> alpha=<a>", then
//                    "u,v,score" rows sorted by (u,v).
//   partition CSV  — "node,class" rows.
#pragma once

#include <iosfwd>
#include <string>

#include "rolesim/iceberg.hpp"
#include "rolesim/partition.hpp"
#include "rolesim/similarity_matrix.hpp"

namespace rolesim {

void write_matrix_csv(const SimilarityMatrix& m, std::ostream& out);
SimilarityMatrix read_matrix_csv(std::istream& in);

void write_matrix_binary(const SimilarityMatrix& m, std::ostream& out);
SimilarityMatrix read_matrix_binary(std::istream& in);

// Load either format, sniffing the "RSIM" magic.
SimilarityMatrix load_matrix(const std::string& path);
// CSV when the path ends in ".csv", binary otherwise.
void save_matrix(const SimilarityMatrix& m, const std::string& path);

struct IcebergMeta {
    double theta = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
};

void write_iceberg_csv(const IcebergTable& t, const IcebergMeta& meta, std::ostream& out);
IcebergTable read_iceberg_csv(std::istream& in, IcebergMeta* meta = nullptr);
IcebergTable load_iceberg_csv(const std::string& path, IcebergMeta* meta = nullptr);
void save_iceberg_csv(const IcebergTable& t, const IcebergMeta& meta, const std::string& path);

void write_partition_csv(const Partition& p, std::ostream& out);
Partition read_partition_csv(std::istream& in);
Partition load_partition_csv(const std::string& path);
void save_partition_csv(const Partition& p, const std::string& path);

}  // namespace rolesim
