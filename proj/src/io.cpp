#include "qlab/io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "qlab/error.hpp"

namespace qlab {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> b) : bytes_(b) {}

  void skip_space() {
    for (;;) {
      if (pos_ >= bytes_.size()) throw Error(ErrorCode::MalformedHeader, "header ends early");
      const char c = static_cast<char>(bytes_[pos_]);
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  long number() {
    skip_space();
    long v = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000'000L) throw Error(ErrorCode::MalformedHeader, "header number too large");
      ++digits;
    }
    if (!digits) throw Error(ErrorCode::MalformedHeader, "expected a decimal number in header");
    return v;
  }

  // exactly one whitespace byte separates the maxval from the raster
  void end_of_header() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::MalformedHeader, "missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint64_t v) {
  if (v > 0xffffffffULL) throw Error(ErrorCode::Overflow, "value does not fit in 32 bits");
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t& pos) {
  if (pos + 4 > b.size()) throw Error(ErrorCode::TruncatedData, "container ends inside a 32-bit field");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[pos + i]) << (8 * i);
  pos += 4;
  return v;
}

}  // namespace

Image pnm_decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw Error(ErrorCode::MalformedHeader, "expected binary PGM (P5) or PPM (P6)");
  }
  const int channels = bytes[1] == '5' ? 1 : 3;
  HeaderReader h(bytes);
  h.advance(2);
  const long w = h.number(), ht = h.number(), maxval = h.number();
  if (w < 1 || ht < 1) throw Error(ErrorCode::MalformedHeader, "image size must be positive");
  if (maxval != 255) throw Error(ErrorCode::UnsupportedMaxval, "maxval " + std::to_string(maxval) + ", only 255 is supported");
  h.end_of_header();
  const std::size_t plane = static_cast<std::size_t>(w) * ht;
  const std::size_t need = plane * channels;
  if (bytes.size() - h.pos() < need) {
    throw Error(ErrorCode::TruncatedData, "raster has " + std::to_string(bytes.size() - h.pos()) + " bytes, expected " +
                                              std::to_string(need));
  }
  const auto raster = bytes.subspan(h.pos(), need);
  // interleaved RGB to planar
  std::vector<std::uint8_t> planar(need);
  for (std::size_t p = 0; p < plane; ++p)
    for (int c = 0; c < channels; ++c) planar[c * plane + p] = raster[p * channels + c];
  return Image::from_bytes(static_cast<int>(w), static_cast<int>(ht), channels, planar);
}

std::vector<std::uint8_t> pnm_encode(const Image& img) {
  const auto planar = to_bytes(img);
  const std::string header = std::string(img.channels == 1 ? "P5" : "P6") + "\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::size_t plane = static_cast<std::size_t>(img.width) * img.height;
  for (std::size_t p = 0; p < plane; ++p)
    for (int c = 0; c < img.channels; ++c) out.push_back(planar[c * plane + p]);
  return out;
}

std::vector<std::uint8_t> container_encode(const CompressedImage& comp) {
  const BlockScheme& s = comp.scheme;
  std::vector<std::uint8_t> out{'L', 'T', 'B', 'Q', 1, static_cast<std::uint8_t>(comp.channels)};
  for (int v : {s.m, s.n, s.a, s.b, s.c, s.d}) put_u32(out, static_cast<std::uint64_t>(v));
  put_u32(out, static_cast<std::uint64_t>(comp.den));
  for (std::int64_t v : comp.num) {
    if (v < 0 || v > comp.den) throw Error(ErrorCode::NumeratorOverflow, "numerator outside 0..D");
    put_u32(out, static_cast<std::uint64_t>(v));
  }
  return out;
}

CompressedImage container_decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) throw Error(ErrorCode::TruncatedData, "container shorter than its magic");
  if (bytes[0] != 'L' || bytes[1] != 'T' || bytes[2] != 'B' || bytes[3] != 'Q') {
    throw Error(ErrorCode::BadMagic, "not an LTBQ container");
  }
  if (bytes.size() < 6) throw Error(ErrorCode::TruncatedData, "container header ends early");
  if (bytes[4] != 1) throw Error(ErrorCode::VersionUnsupported, "container version " + std::to_string(bytes[4]));
  const int channels = bytes[5];
  if (channels != 1 && channels != 3) throw Error(ErrorCode::MalformedHeader, "container must have 1 or 3 channels");
  std::size_t pos = 6;
  std::uint32_t f[6];
  for (auto& v : f) {
    v = get_u32(bytes, pos);
    if (v > 1u << 20) throw Error(ErrorCode::MalformedHeader, "container dimension too large");
  }
  const std::int64_t D = get_u32(bytes, pos);
  const BlockScheme s = scheme_for_blocks(static_cast<int>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2]),
                                          static_cast<int>(f[3]), static_cast<int>(f[4]), static_cast<int>(f[5]), true);
  if (D != s.denominator()) throw Error(ErrorCode::SchemeMismatch, "denominator does not match the block shape");
  const std::size_t count = static_cast<std::size_t>(channels) * s.mp * s.np;
  if (bytes.size() - pos < count * 4) throw Error(ErrorCode::TruncatedData, "container payload is short");
  if (bytes.size() - pos > count * 4) throw Error(ErrorCode::MalformedHeader, "trailing bytes after payload");
  CompressedImage comp{s, channels, D, {}};
  comp.num.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t v = get_u32(bytes, pos);
    if (v > D) throw Error(ErrorCode::NumeratorOverflow, "numerator " + std::to_string(v) + " exceeds D=" + std::to_string(D));
    comp.num.push_back(v);
  }
  return comp;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace qlab
