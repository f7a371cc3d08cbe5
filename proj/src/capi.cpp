#include "qlab/qlab.h"

#include <cmath>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "qlab/error.hpp"
#include "qlab/finite_quantale.hpp"
#include "qlab/fuzzy_transform.hpp"
#include "qlab/io.hpp"
#include "qlab/ltb_codec.hpp"
#include "qlab/morphology.hpp"
#include "qlab/text_formats.hpp"

struct qlab_image {
  qlab::Image img;
};
struct qlab_compressed {
  qlab::CompressedImage comp;
};
struct qlab_text {
  std::string s;
};
struct qlab_se {
  qlab::StructuringElement se;
};
struct qlab_partition {
  qlab::FuzzyPartition part;
};

namespace {

thread_local std::string g_last_error;

qlab_status status_of(qlab::ErrorCode c) { return static_cast<qlab_status>(static_cast<int>(c) + 1); }

// Runs f, translating exceptions into a status and the thread's last error.
template <class F>
qlab_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return QLAB_OK;
  } catch (const qlab::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QLAB_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QLAB_INTERNAL_ERROR;
  }
}

qlab_text* make_text(std::string s) { return new qlab_text{std::move(s)}; }

std::int64_t round_to_255(const qlab::UnitValue& v) {
  if (!v.is_exact()) return static_cast<std::int64_t>(std::floor(v.to_double() * 255.0 + 0.5));
  const __int128 num = v.numerator(), den = v.denominator();
  return static_cast<std::int64_t>((2 * num * 255 + den) / (2 * den));
}

}  // namespace

static_assert(static_cast<int>(qlab::ErrorCode::IoError) + 1 == QLAB_IO_ERROR, "status table out of sync");

extern "C" {

const char* qlab_last_error(void) { return g_last_error.c_str(); }

const char* qlab_status_name(qlab_status status) {
  if (status == QLAB_OK) return "Ok";
  if (status == QLAB_NULL_ARGUMENT) return "NullArgument";
  if (status == QLAB_INTERNAL_ERROR) return "InternalError";
  if (status > QLAB_OK && status <= QLAB_IO_ERROR) {
    return qlab::error_code_name(static_cast<qlab::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

const char* qlab_text_get(const qlab_text* text) { return text ? text->s.c_str() : ""; }
void qlab_text_free(qlab_text* text) { delete text; }

qlab_status qlab_image_read(const char* path, qlab_image** out) {
  if (!path || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_image{qlab::pnm_read(path)}; });
}

qlab_status qlab_image_write(const qlab_image* img, const char* path) {
  if (!img || !path) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    qlab::pnm_write(img->img.den == 255 ? img->img : qlab::requantize(img->img), path);
  });
}

qlab_status qlab_image_from_bytes(int width, int height, int channels, const uint8_t* planar, qlab_image** out) {
  if (!planar || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    if (width < 1 || height < 1 || channels < 1) {
      throw qlab::Error(qlab::ErrorCode::InvalidArgument, "image needs positive size and channels");
    }
    const std::size_t n = static_cast<std::size_t>(width) * height * channels;
    *out = new qlab_image{qlab::Image::from_bytes(width, height, channels, std::span(planar, n))};
  });
}

int qlab_image_width(const qlab_image* img) { return img ? img->img.width : 0; }
int qlab_image_height(const qlab_image* img) { return img ? img->img.height : 0; }
int qlab_image_channels(const qlab_image* img) { return img ? img->img.channels : 0; }

qlab_status qlab_image_sample(const qlab_image* img, int ch, int row, int col, int64_t* num, int64_t* den) {
  if (!img || !num || !den) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto& i = img->img;
    if (ch < 0 || ch >= i.channels || row < 0 || row >= i.height || col < 0 || col >= i.width) {
      throw qlab::Error(qlab::ErrorCode::IndexOut, "sample outside the image");
    }
    *num = i.at(ch, row, col);
    *den = i.den;
  });
}

void qlab_image_free(qlab_image* img) { delete img; }

qlab_status qlab_compress(const qlab_image* img, int a, int b, int c, int d, qlab_compressed** out) {
  if (!img || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto scheme = qlab::scheme_for_blocks(img->img.height, img->img.width, a, b, c, d);
    *out = new qlab_compressed{qlab::compress(img->img, scheme)};
  });
}

qlab_status qlab_reconstruct(const qlab_compressed* comp, qlab_image** out) {
  if (!comp || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_image{qlab::reconstruct(comp->comp)}; });
}

qlab_status qlab_compressed_preview(const qlab_compressed* comp, qlab_image** out) {
  if (!comp || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto& c = comp->comp;
    qlab::Image planes{c.scheme.np, c.scheme.mp, c.channels, c.den, c.num};
    *out = new qlab_image{qlab::requantize(planes)};
  });
}

qlab_status qlab_compressed_read(const char* path, qlab_compressed** out) {
  if (!path || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_compressed{qlab::container_decode(qlab::read_file(path))}; });
}

qlab_status qlab_compressed_write(const qlab_compressed* comp, const char* path) {
  if (!comp || !path) return QLAB_NULL_ARGUMENT;
  return guarded([&] { qlab::write_file(path, qlab::container_encode(comp->comp)); });
}

qlab_status qlab_compressed_encode(const qlab_compressed* comp, uint8_t* buf, size_t cap, size_t* size) {
  if (!comp || !size) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto bytes = qlab::container_encode(comp->comp);
    *size = bytes.size();
    if (!buf) return;
    if (cap < bytes.size()) throw qlab::Error(qlab::ErrorCode::InvalidArgument, "buffer too small");
    std::memcpy(buf, bytes.data(), bytes.size());
  });
}

qlab_status qlab_compressed_decode(const uint8_t* bytes, size_t size, qlab_compressed** out) {
  if ((!bytes && size) || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_compressed{qlab::container_decode(std::span(bytes, size))}; });
}

qlab_status qlab_compressed_equal(const qlab_compressed* a, const qlab_compressed* b, int* equal) {
  if (!a || !b || !equal) return QLAB_NULL_ARGUMENT;
  *equal = a->comp == b->comp ? 1 : 0;
  return QLAB_OK;
}

void qlab_compressed_free(qlab_compressed* comp) { delete comp; }

qlab_status qlab_metrics_compute(const qlab_image* a, const qlab_image* b, qlab_metrics* out) {
  if (!a || !b || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto m = qlab::metrics(a->img, b->img);
    *out = qlab_metrics{m.mse, m.rmse, m.psnr};
  });
}

qlab_status qlab_metrics_format(const qlab_metrics* m, qlab_text** out) {
  if (!m || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = make_text(qlab::format_metrics(qlab::Metrics{m->mse, m->rmse, m->psnr})); });
}

qlab_status qlab_se_read(const char* path, qlab_se** out) {
  if (!path || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_se{qlab::parse_structuring_element(qlab::read_text_file(path))}; });
}

void qlab_se_free(qlab_se* se) { delete se; }

qlab_status qlab_morph(const qlab_image* img, const qlab_se* se, const char* tnorm, qlab_boundary boundary,
                       qlab_morph_op op, qlab_image** out) {
  if (!img || !se || !tnorm || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto kind = qlab::TNormKind::parse(tnorm);
    const auto& in = img->img;
    const bool use_float = kind.requires_float();
    qlab::StructuringElement a = se->se;
    if (use_float)
      for (auto& w : a.weights) w = w.to_float();
    qlab::Image res{in.width, in.height, in.channels, 255, {}};
    res.num.reserve(in.num.size());
    for (int ch = 0; ch < in.channels; ++ch) {
      qlab::Grid g{in.width, in.height, {}, boundary == QLAB_PAD ? qlab::Boundary::Pad : qlab::Boundary::Torus};
      for (const auto& v : in.plane_values(ch)) g.samples.push_back(use_float ? v.to_float() : v);
      qlab::Grid r;
      switch (op) {
        case QLAB_DILATE: r = qlab::dilate(g, a, kind); break;
        case QLAB_ERODE: r = qlab::erode(g, a, kind); break;
        case QLAB_OPEN: r = qlab::composite(g, a, kind, qlab::CompositeOp::Open); break;
        case QLAB_CLOSE: r = qlab::composite(g, a, kind, qlab::CompositeOp::Close); break;
        case QLAB_OUTLINE: r = qlab::composite(g, a, kind, qlab::CompositeOp::Outline); break;
        default: throw qlab::Error(qlab::ErrorCode::InvalidArgument, "unknown morphology operator");
      }
      for (const auto& v : r.samples) res.num.push_back(round_to_255(v));
    }
    *out = new qlab_image{std::move(res)};
  });
}

qlab_status qlab_partition_read(const char* path, qlab_partition** out) {
  if (!path || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] { *out = new qlab_partition{qlab::parse_partition(qlab::read_text_file(path))}; });
}

void qlab_partition_free(qlab_partition* part) { delete part; }

qlab_status qlab_partition_validate(const qlab_partition* part, int* valid, qlab_text** report) {
  if (!part || !valid) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto r = qlab::validate_partition(part->part);
    *valid = r.all_passed() ? 1 : 0;
    if (report) *report = make_text(r.to_text());
  });
}

qlab_status qlab_ftransform(const qlab_partition* part, qlab_direction dir, const char* values, qlab_text** out) {
  if (!part || !values || !out) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const bool float_part = part->part.backend() == qlab::Backend::Float;
    std::vector<qlab::UnitValue> f;
    std::istringstream in(values);
    for (std::string tok; in >> tok;) {
      const auto v = qlab::UnitValue::parse(tok);
      f.push_back(float_part ? v.to_float() : v);
    }
    const auto d = dir == QLAB_DOWN ? qlab::Direction::Down : qlab::Direction::Up;
    const auto F = qlab::f_transform(part->part, f, d);
    const auto back = qlab::f_inverse(part->part, F, d);
    std::string s = "F:";
    for (const auto& v : F) s += " " + v.to_string();
    s += "\ninverse:";
    for (const auto& v : back) s += " " + v.to_string();
    *out = make_text(s + "\n");
  });
}

qlab_status qlab_classify_coder(const char* kernel_path, qlab_coder_flags* flags, qlab_text** epsilon) {
  if (!kernel_path || !flags) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto k = qlab::parse_kernel(qlab::read_text_file(kernel_path), qlab::parent_dir(kernel_path));
    const qlab::CoderClass c = std::visit([](const auto& kernel) { return qlab::classify_coder(kernel); }, k);
    *flags = qlab_coder_flags{c.coder, c.normal, c.strong, c.orthogonal, c.orthonormal};
    if (epsilon) {
      std::string s;
      if (c.epsilon)
        for (int x : *c.epsilon) s += (s.empty() ? "" : " ") + std::to_string(x);
      *epsilon = make_text(s);
    }
  });
}

qlab_status qlab_laws_file(const char* path, int* failures, qlab_text** report) {
  if (!path || !failures) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const std::string text = qlab::read_text_file(path);
    const std::string kw = qlab::leading_keyword(text);
    qlab::LawReport r;
    if (kw == "quantale") {
      r = qlab::check_quantale_laws(qlab::parse_quantale(text));
    } else if (kw == "monoid") {
      r = qlab::check_quantale_laws(qlab::powerset_quantale(qlab::parse_monoid(text)));
    } else if (kw == "module") {
      const auto m = qlab::parse_module_tables(text, qlab::parent_dir(path));
      r = qlab::check_module_laws(m.quantale, m.tables);
    } else {
      throw qlab::Error(qlab::ErrorCode::ParseError, "expected a quantale, monoid or module file, found '" + kw + "'");
    }
    *failures = static_cast<int>(r.failures());
    if (report) *report = make_text(r.to_text());
  });
}

qlab_status qlab_laws_tnorm(const char* tnorm, int grid_den, int* failures, qlab_text** report) {
  if (!tnorm || !failures) return QLAB_NULL_ARGUMENT;
  return guarded([&] {
    const auto kind = qlab::TNormKind::parse(tnorm);
    const qlab::TNormQuantale q(kind, kind.requires_float() ? qlab::Backend::Float : qlab::Backend::Exact);
    const auto r = qlab::check_quantale_laws(q, grid_den);
    *failures = static_cast<int>(r.failures());
    if (report) *report = make_text(r.to_text());
  });
}

}  // extern "C"
