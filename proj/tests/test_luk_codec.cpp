#include <cmath>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "qlab/error.hpp"
#include "qlab/io.hpp"
#include "qlab/ltb_codec.hpp"
#include "qlab/luk_transform.hpp"

using namespace qlab;

namespace {

const std::string kData = QLAB_TEST_DATA;

Image random_image(int w, int h, int ch, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 255);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h * ch);
  for (auto& b : bytes) b = static_cast<std::uint8_t>(d(rng));
  return Image::from_bytes(w, h, ch, bytes);
}

Image constant_image(int w, int h, std::uint8_t v) {
  return Image::from_bytes(w, h, 1, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, v));
}

// a <= b sample by sample, across possibly different denominators
bool image_leq(const Image& a, const Image& b) {
  REQUIRE(a.num.size() == b.num.size());
  for (std::size_t i = 0; i < a.num.size(); ++i)
    if (static_cast<__int128>(a.num[i]) * b.den > static_cast<__int128>(b.num[i]) * a.den) return false;
  return true;
}

Image pipeline(const Image& img, const BlockScheme& s) { return reconstruct(compress(img, s)); }

Image channel_of(const Image& img, int ch) {
  Image out{img.width, img.height, 1, img.den, {}};
  const auto plane = static_cast<std::size_t>(img.width) * img.height;
  out.num.assign(img.num.begin() + ch * plane, img.num.begin() + (ch + 1) * plane);
  return out;
}

const std::vector<std::array<int, 4>> kShapes = {{2, 2, 2, 1}, {2, 2, 1, 2}, {4, 4, 2, 2}, {4, 4, 3, 3}, {2, 4, 1, 3}};

}  // namespace

TEST_CASE("block schemes") {
  const auto s05 = build_scheme(512, 512, 512, 256, 256, 256);
  CHECK(s05.a == 2);
  CHECK(s05.b == 2);
  CHECK(s05.c == 2);
  CHECK(s05.d == 1);
  CHECK(s05.ratio() == doctest::Approx(0.5));
  const auto s025 = build_scheme(512, 512, 256, 256, 128, 128);
  CHECK(s025.a == 4);
  CHECK(s025.c == 2);
  CHECK(s025.d == 2);
  CHECK(s025.ratio() == doctest::Approx(0.25));
  const auto s39 = build_scheme(512, 512, 320, 320, 64, 64);
  CHECK(s39.a == 8);
  CHECK(s39.b == 8);
  CHECK(s39.c == 5);
  CHECK(s39.d == 5);
  CHECK(s39.ratio() == doctest::Approx(25.0 / 64.0));
  CHECK(s39.denominator() == 255 * 63);
  CHECK(scheme_for_blocks(512, 512, 2, 2, 2, 1) == s05);

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code_of([] { build_scheme(512, 512, 512, 256, 200, 256); }) == ErrorCode::DivisibilityViolation);
  CHECK(code_of([] { build_scheme(4, 4, 4, 2, 1, 1); }) == ErrorCode::BoundsViolation);  // single block
  CHECK(code_of([] { build_scheme(8, 8, 8, 8, 4, 4); }) == ErrorCode::BoundsViolation);  // cd = ab
  CHECK_NOTHROW(build_scheme(2, 2, 2, 1, 1, 1, true));
}

TEST_CASE("block split, join and vectorize") {
  Matrix<int> ch(4, std::vector<int>(4));
  for (int i = 0; i < 16; ++i) ch[i / 4][i % 4] = i;
  const auto g = block_split(ch, 2, 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0][1] == Matrix<int>{{2, 3}, {6, 7}});
  CHECK(g[1][0] == Matrix<int>{{8, 9}, {12, 13}});
  CHECK(block_split(Matrix<int>{{1, 2}, {3, 4}}, 2, 2)[0][0] == Matrix<int>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(block_split(ch, 3, 2), Error);

  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(0, 1000);
  for (int t = 0; t < 20; ++t) {
    Matrix<int> m(8, std::vector<int>(8));
    for (auto& r : m)
      for (auto& v : r) v = d(rng);
    CHECK(block_join(block_split(m, 2, 4)) == m);
    const auto blk = block_split(m, 4, 2)[1][3];
    const auto v = vectorize(blk);
    CHECK(devectorize<int>(v, 4, 2) == blk);
  }
  CHECK(vectorize(Matrix<int>{{1, 2}, {3, 4}}) == std::vector<int>{1, 2, 3, 4});
  const std::vector<int> six{0, 1, 2, 3, 4, 5};
  CHECK(devectorize<int>(six, 2, 3)[1][2] == 5);
}

TEST_CASE("integer block transform matches exact Lukasiewicz transform") {
  std::mt19937 rng(2);
  for (const auto& [a, b, c, d] : kShapes) {
    const int len = a * b, order = c * d;
    const std::int64_t D = 255LL * (len - 1);
    const auto coder = build_coder(order, len);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int t = 0; t < 30; ++t) {
      std::vector<std::int64_t> g(len);
      std::vector<UnitValue> gv(len);
      for (int k = 0; k < len; ++k) {
        g[k] = byte(rng) * (len - 1);
        gv[k] = UnitValue::exact(g[k], D);
      }
      const auto h = block_transform(g, order, D);
      const auto hv = luk_transform(coder, gv);
      REQUIRE(h.size() == hv.size());
      for (int k = 0; k < order; ++k) CHECK(UnitValue::exact(h[k], D) == hv[k]);
      const auto back = block_inverse(h, len, D);
      const auto backv = luk_inverse(coder, hv);
      for (int k = 0; k < len; ++k) CHECK(UnitValue::exact(back[k], D) == backv[k]);
    }
  }
}

TEST_CASE("compress examples") {
  const auto s = scheme_for_blocks(2, 2, 2, 2, 2, 1, true);
  const auto ramp = Image::from_bytes(2, 2, 1, std::vector<std::uint8_t>{255, 170, 85, 0});
  const auto comp = compress(ramp, s);
  CHECK(comp.den == 765);
  CHECK(comp.num == std::vector<std::int64_t>{765, 0});
  const auto rec = reconstruct(comp);
  CHECK(rec.den == 765);
  CHECK(rec.num == std::vector<std::int64_t>{765, 510, 255, 0});

  for (const auto& [a, b, c, d] : kShapes) {
    const auto sc = scheme_for_blocks(2 * a, 2 * b, a, b, c, d, true);
    const auto black = compress(constant_image(2 * b, 2 * a, 0), sc);
    for (auto v : black.num) CHECK(v == 0);
    // f = 1 gives the column maxima of the coder
    const auto coder = build_coder(c * d, a * b);
    const auto white = compress(constant_image(2 * b, 2 * a, 255), sc);
    for (int k = 0; k < c * d; ++k) {
      UnitValue mx = UnitValue::zero();
      for (int x = 0; x < a * b; ++x) mx = unit_max(mx, coder.kernel(x, k));
      CHECK(UnitValue::exact(white.at(0, k / d, k % d), white.den) == mx);
    }
  }
  CHECK_THROWS_AS(compress(constant_image(4, 4, 0), s), Error);
}

TEST_CASE("pipeline invariants") {
  std::mt19937 rng(3);
  for (const auto& [a, b, c, d] : kShapes) {
    const auto s = scheme_for_blocks(4 * a, 4 * b, a, b, c, d);
    for (int t = 0; t < 5; ++t) {
      const auto img = random_image(4 * b, 4 * a, 1, rng);
      const auto c1 = compress(img, s);
      const auto rec = reconstruct(c1);
      CHECK(compress(rec, s) == c1);
      CHECK(reconstruct(compress(rec, s)) == rec);
      CHECK(image_leq(img, rec));

      // raise some samples and check the pipeline is monotone
      auto hi = img;
      for (auto& v : hi.num) v = std::min<std::int64_t>(255, v + (rng() % 3 == 0 ? rng() % 60 : 0));
      CHECK(image_leq(pipeline(img, s), pipeline(hi, s)));

      // darkening commutes with compression
      for (int k : {0, 1, 128, 254, 255}) {
        auto expect = c1;
        const std::int64_t ck = static_cast<std::int64_t>(k) * (a * b - 1);
        for (auto& v : expect.num) v = std::max<std::int64_t>(0, ck + v - expect.den);
        CHECK(compress(darken(img, k), s) == expect);
      }

      // reconstruction commutes with the residuum c -> x = min(1, 1 - c + x)
      for (int k : {0, 77, 255}) {
        const std::int64_t ck = static_cast<std::int64_t>(k) * (a * b - 1);
        auto shifted = c1;
        for (auto& v : shifted.num) v = std::min<std::int64_t>(shifted.den, shifted.den - ck + v);
        auto expect = rec;
        for (auto& v : expect.num) v = std::min<std::int64_t>(expect.den, expect.den - ck + v);
        CHECK(reconstruct(shifted) == expect);
      }
    }
  }
}

TEST_CASE("channels are independent") {
  std::mt19937 rng(4);
  const auto s = scheme_for_blocks(8, 8, 2, 2, 2, 1);
  const auto rgb = random_image(8, 8, 3, rng);
  const auto out = pipeline(rgb, s);
  for (int ch = 0; ch < 3; ++ch) CHECK(channel_of(out, ch) == pipeline(channel_of(rgb, ch), s));
  const auto file = pnm_read(kData + "/rgb32.ppm");
  const auto sf = scheme_for_blocks(file.height, file.width, 2, 2, 2, 1);
  const auto fo = pipeline(file, sf);
  for (int ch = 0; ch < 3; ++ch) CHECK(channel_of(fo, ch) == pipeline(channel_of(file, ch), sf));
}

TEST_CASE("8-bit requantization is stable after one pass") {
  for (const char* name : {"/ramp4.pgm", "/synth64.pgm", "/rgb32.ppm"}) {
    const auto img = pnm_read(kData + name);
    const auto s = scheme_for_blocks(img.height, img.width, 2, 2, 2, 1);
    const auto r1 = requantize(pipeline(img, s));
    CHECK(r1.den == 255);
    CHECK(requantize(pipeline(r1, s)) == r1);
  }
  Image half{1, 1, 1, 510, {255}};
  CHECK(requantize(half).num == std::vector<std::int64_t>{128});  // 127.5 rounds up
}

TEST_CASE("metrics") {
  const auto black = constant_image(4, 4, 0), white = constant_image(4, 4, 255);
  const auto m = metrics(black, white);
  CHECK(m.rmse == doctest::Approx(255.0));
  CHECK(m.mse == doctest::Approx(255.0 * 255.0));
  CHECK(m.psnr == doctest::Approx(0.0));
  const auto z = metrics(white, white);
  CHECK(z.rmse == 0.0);
  CHECK(std::isinf(z.psnr));
  CHECK(format_metrics(z) == "RMSE=0 PSNR=inf MSE=0");
  CHECK_THROWS_AS(metrics(black, constant_image(2, 2, 0)), Error);

  // regression lock: first reference run of the 2x2 -> 2x1 pipeline
  const auto synth = pnm_read(kData + "/synth64.pgm");
  const auto sm = metrics(synth, pipeline(synth, scheme_for_blocks(64, 64, 2, 2, 2, 1)));
  CHECK(format_metrics(sm) == "RMSE=58.9285 PSNR=12.7243 MSE=3472.56");
}

TEST_CASE("PNM round trips and errors") {
  std::mt19937 rng(5);
  for (int ch : {1, 3}) {
    const auto img = random_image(5, 3, ch, rng);
    const auto bytes = pnm_encode(img);
    CHECK(std::string(bytes.begin(), bytes.begin() + 3) == (ch == 1 ? "P5\n" : "P6\n"));
    CHECK(pnm_decode(bytes) == img);
  }
  auto code_of = [](const std::string& text) {
    try {
      pnm_decode(std::vector<std::uint8_t>(text.begin(), text.end()));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(pnm_decode(std::vector<std::uint8_t>{'P', '5', ' ', '#', 'c', '\n', '1', ' ', '1', ' ', '2', '5', '5', '\n', 9})
            .num == std::vector<std::int64_t>{9});
  CHECK(code_of("P5\n1 1\n65535\n\x01\x02") == ErrorCode::UnsupportedMaxval);
  CHECK(code_of("P2\n1 1\n255\n1") == ErrorCode::MalformedHeader);
  CHECK(code_of("P5\n2 2\n255\n\x01") == ErrorCode::TruncatedData);
  CHECK(code_of("P5\n2") == ErrorCode::MalformedHeader);
}

TEST_CASE("container round trips and errors") {
  std::mt19937 rng(6);
  const auto s = scheme_for_blocks(8, 8, 4, 4, 3, 3);
  const auto comp = compress(random_image(8, 8, 3, rng), s);
  auto bytes = container_encode(comp);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "LTBQ");
  CHECK(container_decode(bytes) == comp);

  auto code_of = [](std::vector<std::uint8_t> b) {
    try {
      container_decode(b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  auto bad = bytes;
  bad[0] = 'X';
  CHECK(code_of(bad) == ErrorCode::BadMagic);
  bad = bytes;
  bad[4] = 2;
  CHECK(code_of(bad) == ErrorCode::VersionUnsupported);
  CHECK(code_of(std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 1)) == ErrorCode::TruncatedData);
  CHECK(code_of(std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 10)) == ErrorCode::TruncatedData);
  bad = bytes;
  bad.push_back(0);
  CHECK(code_of(bad) == ErrorCode::MalformedHeader);
  bad = bytes;
  bad[bad.size() - 1] = 0xff;  // last numerator far above D
  CHECK(code_of(bad) == ErrorCode::NumeratorOverflow);
}

TEST_CASE("file IO errors") {
  try {
    read_file(kData + "/does-not-exist.pgm");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}
