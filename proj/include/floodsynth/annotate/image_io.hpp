// Bit-exact image codecs for the annotation channels: PNG RGB8 for color,
// PFM (32-bit float, little-endian, bottom-up rows) for depth and normals,
// and 16-bit binary PGM (big-endian samples) for the ID maps. Everything
// encodes to in-memory blobs so frame output stays a deterministic function
// of the buffers alone.
#pragma once

#include <zlib.h>

#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/render/framebuffers.hpp"

namespace floodsynth {

using Blob = std::vector<std::uint8_t>;

namespace detail {

inline void put_u32_be(Blob& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint32_t get_u32_be(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

inline void put_png_chunk(Blob& out, const char type[4], const Blob& data) {
    put_u32_be(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0L, out.data() + crc_start, static_cast<uInt>(4 + data.size())));
    put_u32_be(out, crc);
}

inline Blob zlib_compress(const std::uint8_t* data, std::size_t size) {
    uLongf bound = ::compressBound(static_cast<uLong>(size));
    Blob out(bound);
    if (::compress2(out.data(), &bound, data, static_cast<uLong>(size), 6) != Z_OK)
        throw std::runtime_error("png: zlib compression failed");
    out.resize(bound);
    return out;
}

inline Blob zlib_decompress(const std::uint8_t* data, std::size_t size, std::size_t expected) {
    Blob out(expected);
    uLongf got = static_cast<uLongf>(expected);
    if (::uncompress(out.data(), &got, data, static_cast<uLong>(size)) != Z_OK || got != expected)
        throw std::runtime_error("png: zlib decompression failed");
    return out;
}

inline int paeth_predict(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    return pb <= pc ? b : c;
}

}  // namespace detail

// ---- PNG (8-bit RGB, non-interlaced) ----------------------------------------

inline Blob encode_png_rgb8(const ImageRgb8& img) {
    if (!img.valid()) throw std::runtime_error("png: invalid image dimensions");
    static const std::uint8_t kSig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    Blob out(kSig, kSig + 8);

    Blob ihdr;
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(img.width));
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(img.height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // color type: truecolor
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter method
    ihdr.push_back(0);  // no interlace
    detail::put_png_chunk(out, "IHDR", ihdr);

    // Filter type 0 on every row: encoded bytes depend only on the pixels.
    const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
    Blob raw;
    raw.reserve((stride + 1) * img.height);
    for (int y = 0; y < img.height; ++y) {
        raw.push_back(0);
        const std::uint8_t* row = img.pixels.data() + static_cast<std::size_t>(y) * stride;
        raw.insert(raw.end(), row, row + stride);
    }
    detail::put_png_chunk(out, "IDAT", detail::zlib_compress(raw.data(), raw.size()));
    detail::put_png_chunk(out, "IEND", {});
    return out;
}

inline ImageRgb8 decode_png_rgb8(const Blob& blob) {
    static const std::uint8_t kSig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    if (blob.size() < 8 || std::memcmp(blob.data(), kSig, 8) != 0)
        throw std::runtime_error("png: bad signature");

    ImageRgb8 img;
    Blob idat;
    std::size_t pos = 8;
    bool saw_ihdr = false;
    while (pos + 8 <= blob.size()) {
        const std::uint32_t len = detail::get_u32_be(blob.data() + pos);
        if (pos + 12 + len > blob.size()) throw std::runtime_error("png: truncated chunk");
        const char* type = reinterpret_cast<const char*>(blob.data() + pos + 4);
        const std::uint8_t* data = blob.data() + pos + 8;
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw std::runtime_error("png: bad IHDR");
            img.width = static_cast<int>(detail::get_u32_be(data));
            img.height = static_cast<int>(detail::get_u32_be(data + 4));
            if (data[8] != 8 || data[9] != 2 || data[10] != 0 || data[11] != 0 || data[12] != 0)
                throw std::runtime_error("png: only 8-bit non-interlaced RGB is supported");
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr || img.width <= 0 || img.height <= 0)
        throw std::runtime_error("png: missing or empty IHDR");

    const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
    const Blob raw = detail::zlib_decompress(idat.data(), idat.size(), (stride + 1) * img.height);

    img.pixels.assign(stride * img.height, 0);
    std::vector<std::uint8_t> prev(stride, 0);
    for (int y = 0; y < img.height; ++y) {
        const std::uint8_t* src = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
        std::uint8_t* dst = img.pixels.data() + static_cast<std::size_t>(y) * stride;
        const std::uint8_t filter = src[0];
        ++src;
        for (std::size_t i = 0; i < stride; ++i) {
            const int left = i >= 3 ? dst[i - 3] : 0;
            const int up = prev[i];
            const int up_left = i >= 3 ? prev[i - 3] : 0;
            int v = src[i];
            switch (filter) {
                case 0: break;
                case 1: v += left; break;
                case 2: v += up; break;
                case 3: v += (left + up) / 2; break;
                case 4: v += detail::paeth_predict(left, up, up_left); break;
                default: throw std::runtime_error("png: unknown filter type");
            }
            dst[i] = static_cast<std::uint8_t>(v & 0xff);
        }
        std::memcpy(prev.data(), dst, stride);
    }
    return img;
}

// ---- PFM (32-bit float, scale -1.0 = little-endian, rows bottom-up) --------

namespace detail {

inline void put_f32_le(Blob& out, float f) {
    const std::uint32_t v = std::bit_cast<std::uint32_t>(f);
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

inline float get_f32_le(const std::uint8_t* p) {
    const std::uint32_t v = static_cast<std::uint32_t>(p[0]) |
                            (static_cast<std::uint32_t>(p[1]) << 8) |
                            (static_cast<std::uint32_t>(p[2]) << 16) |
                            (static_cast<std::uint32_t>(p[3]) << 24);
    return std::bit_cast<float>(v);
}

inline Blob encode_pfm(const std::vector<float>& data, int width, int height, int channels) {
    if (data.size() != static_cast<std::size_t>(width) * height * channels)
        throw std::runtime_error("pfm: buffer size mismatch");
    std::ostringstream header;
    header << (channels == 3 ? "PF" : "Pf") << "\n" << width << " " << height << "\n-1.0\n";
    const std::string h = header.str();
    Blob out(h.begin(), h.end());
    out.reserve(out.size() + data.size() * 4);
    for (int y = height - 1; y >= 0; --y) {
        const float* row = data.data() + static_cast<std::size_t>(y) * width * channels;
        for (int i = 0; i < width * channels; ++i) put_f32_le(out, row[i]);
    }
    return out;
}

inline std::vector<float> decode_pfm(const Blob& blob, int& width, int& height, int& channels) {
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < blob.size() && std::isspace(blob[pos])) ++pos;
        std::string tok;
        while (pos < blob.size() && !std::isspace(blob[pos])) tok.push_back(blob[pos++]);
        return tok;
    };
    const std::string magic = next_token();
    if (magic == "PF") channels = 3;
    else if (magic == "Pf") channels = 1;
    else throw std::runtime_error("pfm: bad magic");
    width = std::stoi(next_token());
    height = std::stoi(next_token());
    const double scale = std::stod(next_token());
    if (scale >= 0.0) throw std::runtime_error("pfm: big-endian data not supported");
    if (pos >= blob.size() || (blob[pos] != '\n' && blob[pos] != ' ' && blob[pos] != '\r'))
        throw std::runtime_error("pfm: malformed header");
    ++pos;  // single whitespace byte separates header and raster
    if (width <= 0 || height <= 0) throw std::runtime_error("pfm: bad dimensions");
    const std::size_t count = static_cast<std::size_t>(width) * height * channels;
    if (blob.size() - pos < count * 4) throw std::runtime_error("pfm: truncated raster");
    std::vector<float> data(count);
    for (int y = height - 1; y >= 0; --y) {
        float* row = data.data() + static_cast<std::size_t>(y) * width * channels;
        for (int i = 0; i < width * channels; ++i) {
            row[i] = get_f32_le(blob.data() + pos);
            pos += 4;
        }
    }
    return data;
}

}  // namespace detail

inline Blob encode_pfm_gray(const std::vector<float>& data, int width, int height) {
    return detail::encode_pfm(data, width, height, 1);
}

inline Blob encode_pfm_rgb(const std::vector<float>& data, int width, int height) {
    return detail::encode_pfm(data, width, height, 3);
}

// Decodes either PFM flavor; channels reports 1 or 3.
inline std::vector<float> decode_pfm(const Blob& blob, int& width, int& height, int& channels) {
    return detail::decode_pfm(blob, width, height, channels);
}

// ---- PGM (P5, maxval 65535, big-endian samples) -----------------------------

inline Blob encode_pgm16(const std::vector<std::uint16_t>& data, int width, int height) {
    if (data.size() != static_cast<std::size_t>(width) * height)
        throw std::runtime_error("pgm: buffer size mismatch");
    std::ostringstream header;
    header << "P5\n" << width << " " << height << "\n65535\n";
    const std::string h = header.str();
    Blob out(h.begin(), h.end());
    out.reserve(out.size() + data.size() * 2);
    for (std::uint16_t v : data) {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    return out;
}

inline std::vector<std::uint16_t> decode_pgm16(const Blob& blob, int& width, int& height) {
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < blob.size() && std::isspace(blob[pos])) ++pos;
        std::string tok;
        while (pos < blob.size() && !std::isspace(blob[pos])) tok.push_back(blob[pos++]);
        return tok;
    };
    if (next_token() != "P5") throw std::runtime_error("pgm: bad magic");
    width = std::stoi(next_token());
    height = std::stoi(next_token());
    if (next_token() != "65535") throw std::runtime_error("pgm: expected 16-bit maxval");
    ++pos;  // single whitespace after maxval
    if (width <= 0 || height <= 0) throw std::runtime_error("pgm: bad dimensions");
    const std::size_t count = static_cast<std::size_t>(width) * height;
    if (blob.size() - pos < count * 2) throw std::runtime_error("pgm: truncated raster");
    std::vector<std::uint16_t> data(count);
    for (std::size_t i = 0; i < count; ++i) {
        data[i] = static_cast<std::uint16_t>((blob[pos] << 8) | blob[pos + 1]);
        pos += 2;
    }
    return data;
}

// ---- file blob helpers -------------------------------------------------------

inline void write_binary_file(const std::string& path, const Blob& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);  // binary keeps LF endings as-is
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline Blob read_binary_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    Blob data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return data;
}

inline std::string read_text_file(const std::string& path) {
    const Blob b = read_binary_file(path);
    return std::string(b.begin(), b.end());
}

}  // namespace floodsynth
