#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlab/ltb_codec.hpp"

namespace qlab {

/// Binary P5 (one channel) or P6 (three channels), maxval 255 only.
/// UnsupportedMaxval, MalformedHeader or TruncatedData on bad input.
Image pnm_decode(std::span<const std::uint8_t> bytes);
/// Canonical form "P5\n<w> <h>\n255\n" followed by the samples; P6 for RGB.
std::vector<std::uint8_t> pnm_encode(const Image& img);

/// "LTBQ", version 1, channels, u32 LE m n a b c d, u32 LE D, then u32 LE
/// numerators channel-planar row-major over m' x n'.
std::vector<std::uint8_t> container_encode(const CompressedImage& comp);
/// BadMagic, VersionUnsupported, NumeratorOverflow, TruncatedData, or the
/// scheme errors when the header does not describe a valid scheme.
CompressedImage container_decode(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::string& path);  // IoError
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

inline Image pnm_read(const std::string& path) { return pnm_decode(read_file(path)); }
inline void pnm_write(const Image& img, const std::string& path) { write_file(path, pnm_encode(img)); }

}  // namespace qlab
