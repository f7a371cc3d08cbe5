// Command-line front end. Uses only the C interface in qlab/qlab.h.
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qlab/qlab.h"

namespace {

// Exit statuses: 0 success, 1 validation failure, 2 I/O or format error.
int exit_code(qlab_status s) {
  switch (s) {
    case QLAB_OK:
      return 0;
    case QLAB_IO_ERROR:
    case QLAB_UNSUPPORTED_MAXVAL:
    case QLAB_MALFORMED_HEADER:
    case QLAB_TRUNCATED_DATA:
    case QLAB_BAD_MAGIC:
    case QLAB_VERSION_UNSUPPORTED:
    case QLAB_NUMERATOR_OVERFLOW:
    case QLAB_PARSE_ERROR:
      return 2;
    default:
      return 1;
  }
}

struct Failure {
  int code;
};

void check(qlab_status s) {
  if (s == QLAB_OK) return;
  std::fprintf(stderr, "qlab: %s\n", qlab_last_error()[0] ? qlab_last_error() : qlab_status_name(s));
  throw Failure{exit_code(s)};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ImagePtr = std::unique_ptr<qlab_image, Deleter<qlab_image, qlab_image_free>>;
using CompPtr = std::unique_ptr<qlab_compressed, Deleter<qlab_compressed, qlab_compressed_free>>;
using TextPtr = std::unique_ptr<qlab_text, Deleter<qlab_text, qlab_text_free>>;
using SePtr = std::unique_ptr<qlab_se, Deleter<qlab_se, qlab_se_free>>;
using PartPtr = std::unique_ptr<qlab_partition, Deleter<qlab_partition, qlab_partition_free>>;

ImagePtr read_image(const std::string& path) {
  qlab_image* p = nullptr;
  check(qlab_image_read(path.c_str(), &p));
  return ImagePtr(p);
}

CompPtr compress(const qlab_image* img, const std::pair<int, int>& block, const std::pair<int, int>& code) {
  qlab_compressed* p = nullptr;
  check(qlab_compress(img, block.first, block.second, code.first, code.second, &p));
  return CompPtr(p);
}

ImagePtr reconstruct(const qlab_compressed* c) {
  qlab_image* p = nullptr;
  check(qlab_reconstruct(c, &p));
  return ImagePtr(p);
}

std::string metrics_line(const qlab_image* a, const qlab_image* b) {
  qlab_metrics m{};
  check(qlab_metrics_compute(a, b, &m));
  qlab_text* t = nullptr;
  check(qlab_metrics_format(&m, &t));
  return qlab_text_get(TextPtr(t).get());
}

// "4x2" -> {4, 2}
std::pair<int, int> parse_shape(const std::string& s) {
  const auto x = s.find('x');
  try {
    std::size_t u1 = 0, u2 = 0;
    if (x != std::string::npos) {
      const int a = std::stoi(s.substr(0, x), &u1), b = std::stoi(s.substr(x + 1), &u2);
      if (u1 == x && u2 == s.size() - x - 1 && a > 0 && b > 0) return {a, b};
    }
  } catch (const std::exception&) {
  }
  std::fprintf(stderr, "qlab: shape '%s' is not of the form AxB\n", s.c_str());
  throw Failure{1};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "qlab: cannot open %s\n", path.c_str());
    throw Failure{2};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantale transforms, block codec and law checks"};
  app.require_subcommand(1);

  std::string in, out, preview, block = "2x2", code = "2x1";

  auto* comp = app.add_subcommand("compress", "Compress a PGM/PPM into an exact .ltb container");
  comp->add_option("-i,--input", in, "input image")->required();
  comp->add_option("-o,--output", out, "output container")->required();
  comp->add_option("--block", block, "block shape AxB")->required();
  comp->add_option("--code", code, "compressed block shape CxD")->required();
  comp->add_option("--preview", preview, "8-bit image of the compressed planes");

  auto* rec = app.add_subcommand("reconstruct", "Reconstruct an image from a .ltb container");
  rec->add_option("-i,--input", in, "input container")->required();
  rec->add_option("-o,--output", out, "output image")->required();

  auto* rt = app.add_subcommand("roundtrip", "Compress, reconstruct, print metrics and second-pass losslessness");
  rt->add_option("-i,--input", in, "input image")->required();
  rt->add_option("--block", block, "block shape AxB")->required();
  rt->add_option("--code", code, "compressed block shape CxD")->required();
  rt->add_option("-o,--output", out, "write the reconstruction");

  std::string ma, mb;
  auto* met = app.add_subcommand("metrics", "RMSE, PSNR and MSE between two images");
  met->add_option("-a", ma, "first image")->required();
  met->add_option("-b", mb, "second image")->required();

  std::string op, se, tnorm = "lukasiewicz", boundary = "torus";
  auto* morph = app.add_subcommand("morph", "Translation-invariant morphology");
  morph->add_option("-i,--input", in, "input image")->required();
  morph->add_option("-o,--output", out, "output image")->required();
  morph->add_option("--op", op, "dilate|erode|open|close|outline")
      ->required()
      ->check(CLI::IsMember({"dilate", "erode", "open", "close", "outline"}));
  morph->add_option("--se", se, "structuring element file")->required();
  morph->add_option("--tnorm", tnorm, "t-norm name");
  morph->add_option("--boundary", boundary, "torus|pad")->check(CLI::IsMember({"torus", "pad"}));

  std::string partition, direction = "up", values, values_file;
  auto* ft = app.add_subcommand("ftransform", "Fuzzy transform and its inverse");
  ft->add_option("--partition", partition, "partition file")->required();
  ft->add_option("--direction", direction, "up|down")->check(CLI::IsMember({"up", "down"}));
  auto* vopt = ft->add_option("--values", values, "unit values on the nodes");
  ft->add_option("-i,--input", values_file, "file of unit values on the nodes")->excludes(vopt);

  std::string kernel;
  auto* cc = app.add_subcommand("classify-coder", "Coder, normal, strong, orthogonal, orthonormal flags");
  cc->add_option("--kernel", kernel, "kernel file")->required();

  std::string algebra, law_tnorm;
  int grid_den = 0;
  auto* laws = app.add_subcommand("laws", "Exhaustive law suite for an algebra file or a t-norm grid");
  auto* alg = laws->add_option("--algebra", algebra, "quantale, monoid or module file");
  auto* tn = laws->add_option("--tnorm", law_tnorm, "t-norm name")->excludes(alg);
  laws->add_option("--grid-den", grid_den, "grid denominator")->needs(tn)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*comp) {
      auto img = read_image(in);
      auto c = compress(img.get(), parse_shape(block), parse_shape(code));
      check(qlab_compressed_write(c.get(), out.c_str()));
      if (!preview.empty()) {
        qlab_image* p = nullptr;
        check(qlab_compressed_preview(c.get(), &p));
        check(qlab_image_write(ImagePtr(p).get(), preview.c_str()));
      }
    } else if (*rec) {
      qlab_compressed* p = nullptr;
      check(qlab_compressed_read(in.c_str(), &p));
      CompPtr c(p);
      check(qlab_image_write(reconstruct(c.get()).get(), out.c_str()));
    } else if (*rt) {
      auto img = read_image(in);
      const auto b = parse_shape(block), k = parse_shape(code);
      auto c1 = compress(img.get(), b, k);
      auto r1 = reconstruct(c1.get());
      std::printf("%s\n", metrics_line(img.get(), r1.get()).c_str());
      // second pass on the exact reconstruction
      auto c2 = compress(r1.get(), b, k);
      auto r2 = reconstruct(c2.get());
      int same_code = 0, same_image = 0;
      check(qlab_compressed_equal(c1.get(), c2.get(), &same_code));
      qlab_metrics m{};
      check(qlab_metrics_compute(r1.get(), r2.get(), &m));
      same_image = m.mse == 0.0;
      std::printf("LOSSLESS=%s\n", same_code && same_image ? "true" : "false");
      if (!out.empty()) check(qlab_image_write(r1.get(), out.c_str()));
    } else if (*met) {
      auto a = read_image(ma), b = read_image(mb);
      std::printf("%s\n", metrics_line(a.get(), b.get()).c_str());
    } else if (*morph) {
      auto img = read_image(in);
      qlab_se* s = nullptr;
      check(qlab_se_read(se.c_str(), &s));
      SePtr sp(s);
      const qlab_morph_op o = op == "dilate" ? QLAB_DILATE
                              : op == "erode" ? QLAB_ERODE
                              : op == "open"  ? QLAB_OPEN
                              : op == "close" ? QLAB_CLOSE
                                              : QLAB_OUTLINE;
      qlab_image* r = nullptr;
      check(qlab_morph(img.get(), sp.get(), tnorm.c_str(), boundary == "pad" ? QLAB_PAD : QLAB_TORUS, o, &r));
      check(qlab_image_write(ImagePtr(r).get(), out.c_str()));
    } else if (*ft) {
      qlab_partition* p = nullptr;
      check(qlab_partition_read(partition.c_str(), &p));
      PartPtr part(p);
      if (!values_file.empty()) values = slurp(values_file);
      qlab_text* t = nullptr;
      check(qlab_ftransform(part.get(), direction == "down" ? QLAB_DOWN : QLAB_UP, values.c_str(), &t));
      std::fputs(qlab_text_get(TextPtr(t).get()), stdout);
    } else if (*cc) {
      qlab_coder_flags f{};
      qlab_text* eps = nullptr;
      check(qlab_classify_coder(kernel.c_str(), &f, &eps));
      TextPtr e(eps);
      auto tf = [](int v) { return v ? "true" : "false"; };
      std::printf("coder=%s normal=%s strong=%s orthogonal=%s orthonormal=%s\n", tf(f.coder), tf(f.normal),
                  tf(f.strong), tf(f.orthogonal), tf(f.orthonormal));
      if (f.coder) std::printf("epsilon=%s\n", qlab_text_get(e.get()));
    } else if (*laws) {
      int failures = 0;
      qlab_text* t = nullptr;
      if (!algebra.empty()) {
        check(qlab_laws_file(algebra.c_str(), &failures, &t));
      } else if (!law_tnorm.empty()) {
        if (grid_den <= 0) {
          std::fprintf(stderr, "qlab: --tnorm needs --grid-den\n");
          return 1;
        }
        check(qlab_laws_tnorm(law_tnorm.c_str(), grid_den, &failures, &t));
      } else {
        std::fprintf(stderr, "qlab: laws needs --algebra or --tnorm\n");
        return 1;
      }
      std::fputs(qlab_text_get(TextPtr(t).get()), stdout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
