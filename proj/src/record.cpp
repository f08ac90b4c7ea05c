#include "robustcurve/record.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "robustcurve/errors.hpp"

namespace robustcurve {
namespace {

template <class T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
    }
}

class Reader {
  public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::span<const std::uint8_t> take(std::size_t count) {
        if (bytes_.size() - pos_ < count) throw FormatError("record is truncated");
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    template <class T>
    T get_le() {
        const auto raw = take(sizeof(T));
        T value = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(T{raw[i]} << (8 * i));
        return value;
    }

    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

  private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

AdjacencyImage::AdjacencyImage(std::size_t n) : n_(n), bits_(n * row_bytes(), 0) {}

AdjacencyImage::AdjacencyImage(std::size_t n, std::vector<std::uint8_t> packed_rows)
    : n_(n), bits_(std::move(packed_rows)) {
    if (bits_.size() != n_ * row_bytes()) throw FormatError("adjacency payload has the wrong size");
}

AdjacencyImage AdjacencyImage::from_graph(const Graph& g) {
    AdjacencyImage image(g.node_count());
    for (const auto& e : g.edges()) {
        image.set(e.u, e.v);
        image.set(e.v, e.u);
    }
    return image;
}

void AdjacencyImage::set(std::size_t i, std::size_t j, bool value) {
    const auto mask = static_cast<std::uint8_t>(0x80u >> (j % 8));
    auto& byte = bits_[i * row_bytes() + j / 8];
    byte = value ? byte | mask : byte & static_cast<std::uint8_t>(~mask);
}

Graph AdjacencyImage::to_graph() const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i, i)) throw FormatError("adjacency image has a self-loop");
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (get(i, j) != get(j, i)) throw FormatError("adjacency image is not symmetric");
            if (get(i, j)) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
        }
    }
    return Graph(n_, std::move(edges));
}

std::vector<std::uint8_t> encode_record(const Record& record) {
    if (record.label.empty()) throw ParameterError("record label is empty");
    const auto n = record.adjacency.size();
    if (n > std::numeric_limits<std::uint32_t>::max() ||
        record.steps() > std::numeric_limits<std::uint32_t>::max()) {
        throw ParameterError("record dimensions exceed the 32-bit format limits");
    }

    std::vector<std::uint8_t> out;
    out.reserve(kRecordHeaderBytes + record.adjacency.packed().size() + 4 * record.label.size());
    out.insert(out.end(), std::begin(kRecordMagic), std::end(kRecordMagic));
    put_le<std::uint16_t>(out, kRecordVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(n));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(record.steps()));
    out.push_back(static_cast<std::uint8_t>(record.scenario));
    out.insert(out.end(), record.adjacency.packed().begin(), record.adjacency.packed().end());
    for (const float x : record.label) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(x));
    return out;
}

Record decode_record(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const auto magic = in.take(4);
    if (!std::equal(magic.begin(), magic.end(), std::begin(kRecordMagic))) {
        throw FormatError("bad record magic");
    }
    const auto version = in.get_le<std::uint16_t>();
    if (version != kRecordVersion) {
        throw FormatError("unsupported record version " + std::to_string(version));
    }
    const std::size_t n = in.get_le<std::uint32_t>();
    const std::size_t steps = in.get_le<std::uint32_t>();

    Record record;
    record.scenario = scenario_from_code(in.get_le<std::uint8_t>());
    const std::size_t row_bytes = (n + 7) / 8;
    if (row_bytes != 0 && n > in.remaining() / row_bytes) throw FormatError("record is truncated");
    const auto packed = in.take(n * row_bytes);
    record.adjacency = AdjacencyImage(n, {packed.begin(), packed.end()});

    if (steps + 1 > in.remaining() / 4) throw FormatError("record is truncated");
    record.label.resize(steps + 1);
    for (auto& x : record.label) x = std::bit_cast<float>(in.get_le<std::uint32_t>());
    if (in.remaining() != 0) throw FormatError("trailing bytes after record");
    return record;
}

void write_record(const std::filesystem::path& path, const Record& record) {
    const auto bytes = encode_record(record);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("write failed for " + path.string());
}

Record read_record(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return decode_record(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace robustcurve
