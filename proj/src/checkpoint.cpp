#include "ripeline/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "ripeline/errors.hpp"

namespace ripeline {

namespace {

constexpr char kMagic[4] = {'R', 'P', 'L', 'D'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
    put_u64(out, std::bit_cast<std::uint64_t>(d));
}

void put_string(std::vector<std::uint8_t>& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

struct Reader {
    const std::vector<std::uint8_t>& buf;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > buf.size()) throw IoError("checkpoint truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[pos + i]) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[pos + i]) << (8 * i);
        pos += 8;
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    std::string str() {
        const std::uint32_t len = u32();
        need(len);
        std::string s(buf.begin() + pos, buf.begin() + pos + len);
        pos += len;
        return s;
    }
};

}  // namespace

const TensorEntry& Checkpoint::tensor(const std::string& name) const {
    for (const auto& t : tensors)
        if (t.name == name) return t;
    throw IoError("checkpoint has no tensor named " + name);
}

TensorEntry& Checkpoint::add(const std::string& name, std::vector<std::uint64_t> shape) {
    TensorEntry t;
    t.name = name;
    t.shape = std::move(shape);
    t.data.assign(t.size(), 0.0);
    tensors.push_back(std::move(t));
    return tensors.back();
}

std::vector<std::uint8_t> Checkpoint::serialize() const {
    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u32(out, kVersion);
    put_string(out, architecture);
    put_string(out, metadata_json);
    put_u32(out, static_cast<std::uint32_t>(tensors.size()));
    for (const auto& t : tensors) {
        put_string(out, t.name);
        put_u32(out, static_cast<std::uint32_t>(t.shape.size()));
        for (auto d : t.shape) put_u64(out, d);
        if (t.data.size() != t.size()) throw IoError("tensor " + t.name + " shape/data mismatch");
        for (double d : t.data) put_f64(out, d);
    }
    return out;
}

Checkpoint Checkpoint::deserialize(const std::vector<std::uint8_t>& bytes) {
    Reader r{bytes};
    r.need(4);
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw IoError("not a checkpoint file (bad magic)");
    r.pos = 4;
    const std::uint32_t version = r.u32();
    if (version != kVersion)
        throw IoError("unsupported checkpoint version " + std::to_string(version));

    Checkpoint ck;
    ck.architecture = r.str();
    ck.metadata_json = r.str();
    const std::uint32_t count = r.u32();
    ck.tensors.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        TensorEntry t;
        t.name = r.str();
        const std::uint32_t ndim = r.u32();
        t.shape.resize(ndim);
        for (std::uint32_t d = 0; d < ndim; ++d) t.shape[d] = r.u64();
        const std::size_t n = t.size();
        t.data.resize(n);
        for (std::size_t j = 0; j < n; ++j) t.data[j] = r.f64();
        ck.tensors.push_back(std::move(t));
    }
    return ck;
}

void Checkpoint::save(const std::string& path) const {
    const auto bytes = serialize();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("short write to " + path);
}

Checkpoint Checkpoint::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw IoError("cannot read " + path);
    const std::streamsize size = f.tellg();
    f.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    f.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!f) throw IoError("short read from " + path);
    return deserialize(bytes);
}

}  // namespace ripeline
