#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ripeline {

// Named f64 tensor inside a checkpoint.
struct TensorEntry {
    std::string name;
    std::vector<std::uint64_t> shape;
    std::vector<double> data;

    std::size_t size() const {
        std::size_t n = 1;
        for (auto d : shape) n *= static_cast<std::size_t>(d);
        return n;
    }
};

// Versioned binary container shared by the detector and classifier models:
// magic "RPLD", u32 version, architecture string, metadata JSON string,
// then little-endian f64 tensors with shape headers. Round-trips bit-exactly.
struct Checkpoint {
    static constexpr std::uint32_t kVersion = 1;

    std::string architecture;
    std::string metadata_json;
    std::vector<TensorEntry> tensors;

    const TensorEntry& tensor(const std::string& name) const;
    TensorEntry& add(const std::string& name, std::vector<std::uint64_t> shape);

    std::vector<std::uint8_t> serialize() const;
    static Checkpoint deserialize(const std::vector<std::uint8_t>& bytes);

    void save(const std::string& path) const;
    static Checkpoint load(const std::string& path);
};

}  // namespace ripeline
