#ifndef QLAB_H
#define QLAB_H

/* C interface to the qlab library. Every function returns a qlab_status;
 * on failure qlab_last_error() describes the problem for the calling
 * thread. Handles are opaque and released with their _free function;
 * passing NULL to a _free function is a no-op. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(QLAB_BUILDING)
#define QLAB_API __declspec(dllexport)
#elif defined(_WIN32)
#define QLAB_API __declspec(dllimport)
#elif defined(QLAB_BUILDING)
#define QLAB_API __attribute__((visibility("default")))
#else
#define QLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlab_status {
  QLAB_OK = 0,
  QLAB_BACKEND_MISMATCH,
  QLAB_INVALID_ALGEBRA,
  QLAB_INVALID_RELATION,
  QLAB_INVALID_ARGUMENT,
  QLAB_SIZE_BOUND,
  QLAB_INDEX_MISMATCH,
  QLAB_INDEX_OUT,
  QLAB_NOT_A_HOMOMORPHISM,
  QLAB_SUBSET_VIOLATION,
  QLAB_DIVISIBILITY_VIOLATION,
  QLAB_BOUNDS_VIOLATION,
  QLAB_SCHEME_MISMATCH,
  QLAB_DIM_MISMATCH,
  QLAB_INVALID_PARTITION,
  QLAB_OVERFLOW,
  QLAB_UNSUPPORTED_MAXVAL,
  QLAB_MALFORMED_HEADER,
  QLAB_TRUNCATED_DATA,
  QLAB_BAD_MAGIC,
  QLAB_VERSION_UNSUPPORTED,
  QLAB_NUMERATOR_OVERFLOW,
  QLAB_PARSE_ERROR,
  QLAB_IO_ERROR,
  QLAB_NULL_ARGUMENT,
  QLAB_INTERNAL_ERROR
} qlab_status;

typedef struct qlab_image qlab_image;
typedef struct qlab_compressed qlab_compressed;
typedef struct qlab_text qlab_text;
typedef struct qlab_se qlab_se;
typedef struct qlab_partition qlab_partition;

typedef enum qlab_boundary { QLAB_TORUS = 0, QLAB_PAD = 1 } qlab_boundary;
typedef enum qlab_morph_op {
  QLAB_DILATE = 0,
  QLAB_ERODE,
  QLAB_OPEN,
  QLAB_CLOSE,
  QLAB_OUTLINE
} qlab_morph_op;
typedef enum qlab_direction { QLAB_UP = 0, QLAB_DOWN = 1 } qlab_direction;

typedef struct qlab_metrics {
  double mse;
  double rmse;
  double psnr; /* +inf for identical images */
} qlab_metrics;

typedef struct qlab_coder_flags {
  int coder;
  int normal;
  int strong;
  int orthogonal;
  int orthonormal;
} qlab_coder_flags;

QLAB_API const char* qlab_last_error(void);
QLAB_API const char* qlab_status_name(qlab_status status);

/* Text results. The string stays valid until the handle is freed. */
QLAB_API const char* qlab_text_get(const qlab_text* text);
QLAB_API void qlab_text_free(qlab_text* text);

/* Images: 8-bit PGM/PPM on disk, exact samples in memory. */
QLAB_API qlab_status qlab_image_read(const char* path, qlab_image** out);
/* Writes a canonical P5/P6 file, rounding samples to 8 bits (halves up). */
QLAB_API qlab_status qlab_image_write(const qlab_image* img, const char* path);
/* planar: channels * height * width bytes, channel-planar, row-major. */
QLAB_API qlab_status qlab_image_from_bytes(int width, int height, int channels, const uint8_t* planar,
                                           qlab_image** out);
QLAB_API int qlab_image_width(const qlab_image* img);
QLAB_API int qlab_image_height(const qlab_image* img);
QLAB_API int qlab_image_channels(const qlab_image* img);
/* Exact sample (ch, row, col) as num / den. */
QLAB_API qlab_status qlab_image_sample(const qlab_image* img, int ch, int row, int col, int64_t* num,
                                       int64_t* den);
QLAB_API void qlab_image_free(qlab_image* img);

/* Block codec: a x b blocks coded into c x d blocks. */
QLAB_API qlab_status qlab_compress(const qlab_image* img, int a, int b, int c, int d, qlab_compressed** out);
/* Reconstruction keeps exact samples over the scheme denominator. */
QLAB_API qlab_status qlab_reconstruct(const qlab_compressed* comp, qlab_image** out);
/* The compressed planes as an 8-bit image for viewing. */
QLAB_API qlab_status qlab_compressed_preview(const qlab_compressed* comp, qlab_image** out);
QLAB_API qlab_status qlab_compressed_read(const char* path, qlab_compressed** out);
QLAB_API qlab_status qlab_compressed_write(const qlab_compressed* comp, const char* path);
/* Container bytes. With buf == NULL only *size is set. */
QLAB_API qlab_status qlab_compressed_encode(const qlab_compressed* comp, uint8_t* buf, size_t cap, size_t* size);
QLAB_API qlab_status qlab_compressed_decode(const uint8_t* bytes, size_t size, qlab_compressed** out);
QLAB_API qlab_status qlab_compressed_equal(const qlab_compressed* a, const qlab_compressed* b, int* equal);
QLAB_API void qlab_compressed_free(qlab_compressed* comp);

QLAB_API qlab_status qlab_metrics_compute(const qlab_image* a, const qlab_image* b, qlab_metrics* out);
/* "RMSE=<v> PSNR=<v|inf> MSE=<v>" */
QLAB_API qlab_status qlab_metrics_format(const qlab_metrics* m, qlab_text** out);

/* Morphology on every channel; the result is rounded to 8 bits. */
QLAB_API qlab_status qlab_se_read(const char* path, qlab_se** out);
QLAB_API void qlab_se_free(qlab_se* se);
QLAB_API qlab_status qlab_morph(const qlab_image* img, const qlab_se* se, const char* tnorm, qlab_boundary boundary,
                                qlab_morph_op op, qlab_image** out);

/* Fuzzy transforms. values: whitespace-separated unit values on the
 * nodes. The result has two lines,
 * "F: ..." and "inverse: ...", the inverse applied to F. */
QLAB_API qlab_status qlab_partition_read(const char* path, qlab_partition** out);
QLAB_API void qlab_partition_free(qlab_partition* part);
QLAB_API qlab_status qlab_partition_validate(const qlab_partition* part, int* valid, qlab_text** report);
QLAB_API qlab_status qlab_ftransform(const qlab_partition* part, qlab_direction dir, const char* values,
                                     qlab_text** out);

/* Coder analysis of a kernel file. epsilon may be NULL. */
QLAB_API qlab_status qlab_classify_coder(const char* kernel_path, qlab_coder_flags* flags, qlab_text** epsilon);

/* Law suites. The report lists each law with its instance count and the
 * first counterexample; *failures counts failed laws. */
QLAB_API qlab_status qlab_laws_file(const char* path, int* failures, qlab_text** report);
QLAB_API qlab_status qlab_laws_tnorm(const char* tnorm, int grid_den, int* failures, qlab_text** report);

#ifdef __cplusplus
}
#endif

#endif
