#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "robustcurve/attack.hpp"
#include "robustcurve/graph.hpp"

namespace robustcurve {

/// N x N binary adjacency matrix, bit-packed row-major with each row padded
/// to a whole byte. Bit j of row i is stored most-significant-bit first.
class AdjacencyImage {
  public:
    AdjacencyImage() = default;
    explicit AdjacencyImage(std::size_t n);
    AdjacencyImage(std::size_t n, std::vector<std::uint8_t> packed_rows);

    static AdjacencyImage from_graph(const Graph& g);
    /// Throws FormatError unless the matrix is symmetric with a zero diagonal.
    Graph to_graph() const;

    std::size_t size() const noexcept { return n_; }
    std::size_t row_bytes() const noexcept { return (n_ + 7) / 8; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * row_bytes() + j / 8] >> (7 - j % 8)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool value = true);

    std::span<const std::uint8_t> packed() const noexcept { return bits_; }

    friend bool operator==(const AdjacencyImage&, const AdjacencyImage&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Serialized content of one dataset or prediction file.
struct Record {
    Scenario scenario = Scenario::Rnf;
    AdjacencyImage adjacency;
    /// steps + 1 values: curve then robustness.
    std::vector<float> label;

    std::size_t steps() const noexcept { return label.empty() ? 0 : label.size() - 1; }

    friend bool operator==(const Record&, const Record&) = default;
};

inline constexpr char kRecordMagic[4] = {'R', 'B', 'S', 'T'};
inline constexpr std::uint16_t kRecordVersion = 1;
/// magic + version + N + steps + scenario.
inline constexpr std::size_t kRecordHeaderBytes = 4 + 2 + 4 + 4 + 1;

/// Little-endian layout: magic "RBST", u16 version, u32 N, u32 steps,
/// u8 scenario code, packed adjacency rows, (steps + 1) IEEE-754 float32.
std::vector<std::uint8_t> encode_record(const Record& record);
/// Throws FormatError on bad magic, unknown version or truncated/oversized input.
Record decode_record(std::span<const std::uint8_t> bytes);

void write_record(const std::filesystem::path& path, const Record& record);
Record read_record(const std::filesystem::path& path);

}  // namespace robustcurve
