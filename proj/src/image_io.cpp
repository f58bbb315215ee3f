#include <png.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <vector>

#include "fgsc/error.hpp"
#include "fgsc/image.hpp"

namespace fgsc {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---------------------------------------------------------------- PNG

RgbImage load_png(std::FILE* fp, const std::string& path) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) raise(ErrorCode::CorruptData, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    raise(ErrorCode::CorruptData, "libpng init failed");
  }

  std::vector<png_bytep> row_ptrs;
  std::vector<unsigned char> pixels;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    raise(ErrorCode::CorruptData, "PNG decode error: " + path);
  }

  png_init_io(png, fp);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  int bit_depth = png_get_bit_depth(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  if (bit_depth == 16) png_set_swap(png);  // big-endian stream -> host order
  png_read_update_info(png, info);
  bit_depth = png_get_bit_depth(png, info);

  const std::size_t rowbytes = png_get_rowbytes(png, info);
  pixels.resize(rowbytes * height);
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) row_ptrs[y] = pixels.data() + y * rowbytes;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  RgbImage img(static_cast<int>(width), static_cast<int>(height));
  if (bit_depth == 16) {
    const double scale = 1.0 / 65535.0;
    for (png_uint_32 y = 0; y < height; ++y) {
      const std::uint16_t* row = reinterpret_cast<const std::uint16_t*>(pixels.data() + y * rowbytes);
      for (png_uint_32 x = 0; x < width; ++x)
        for (int c = 0; c < 3; ++c) img.at(c, y, x) = row[x * 3 + c] * scale;
    }
  } else {
    const double scale = 1.0 / 255.0;
    for (png_uint_32 y = 0; y < height; ++y) {
      const unsigned char* row = pixels.data() + y * rowbytes;
      for (png_uint_32 x = 0; x < width; ++x)
        for (int c = 0; c < 3; ++c) img.at(c, y, x) = row[x * 3 + c] * scale;
    }
  }
  return img;
}

// ---------------------------------------------------------------- PPM (P6)

int ppm_next_token(std::FILE* fp, char* buf, std::size_t cap) {
  int ch = std::fgetc(fp);
  for (;;) {
    while (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') ch = std::fgetc(fp);
    if (ch == '#') {
      while (ch != '\n' && ch != EOF) ch = std::fgetc(fp);
      continue;
    }
    break;
  }
  std::size_t n = 0;
  while (ch != EOF && !std::isspace(ch)) {
    if (n + 1 >= cap) return -1;
    buf[n++] = static_cast<char>(ch);
    ch = std::fgetc(fp);
  }
  buf[n] = '\0';
  return n == 0 ? -1 : static_cast<int>(n);
}

long ppm_int(std::FILE* fp, const std::string& path) {
  char buf[32];
  if (ppm_next_token(fp, buf, sizeof buf) < 0)
    raise(ErrorCode::CorruptData, "PPM header truncated: " + path);
  char* end = nullptr;
  long v = std::strtol(buf, &end, 10);
  if (end == buf || *end != '\0' || v < 0)
    raise(ErrorCode::CorruptData, "bad PPM header field: " + path);
  return v;
}

RgbImage load_ppm(std::FILE* fp, const std::string& path) {
  char magic[3] = {0, 0, 0};
  if (std::fread(magic, 1, 2, fp) != 2 || magic[0] != 'P' || magic[1] != '6')
    raise(ErrorCode::UnsupportedFormat, "not a P6 PPM: " + path);
  const long w = ppm_int(fp, path);
  const long h = ppm_int(fp, path);
  const long maxval = ppm_int(fp, path);
  if (w < 1 || h < 1 || maxval < 1 || maxval > 65535)
    raise(ErrorCode::CorruptData, "bad PPM dimensions: " + path);

  const int bytes_per_sample = maxval < 256 ? 1 : 2;
  const std::size_t count = static_cast<std::size_t>(w) * h * 3 * bytes_per_sample;
  std::vector<unsigned char> raw(count);
  if (std::fread(raw.data(), 1, count, fp) != count)
    raise(ErrorCode::CorruptData, "PPM pixel data truncated: " + path);

  RgbImage img(static_cast<int>(w), static_cast<int>(h));
  const double scale = 1.0 / maxval;
  std::size_t i = 0;
  for (long y = 0; y < h; ++y)
    for (long x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c) {
        unsigned v;
        if (bytes_per_sample == 1) {
          v = raw[i++];
        } else {
          v = static_cast<unsigned>(raw[i]) << 8 | raw[i + 1];  // big-endian samples
          i += 2;
        }
        img.at(c, y, x) = v * scale;
      }
  return img;
}

// ---------------------------------------------------------------- BMP

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}
std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

RgbImage load_bmp(std::FILE* fp, const std::string& path) {
  unsigned char file_hdr[14];
  if (std::fread(file_hdr, 1, 14, fp) != 14 || file_hdr[0] != 'B' || file_hdr[1] != 'M')
    raise(ErrorCode::CorruptData, "bad BMP file header: " + path);
  const std::uint32_t data_offset = le32(file_hdr + 10);

  unsigned char size_buf[4];
  if (std::fread(size_buf, 1, 4, fp) != 4) raise(ErrorCode::CorruptData, "BMP truncated: " + path);
  const std::uint32_t info_size = le32(size_buf);
  if (info_size < 40) raise(ErrorCode::UnsupportedFormat, "BMP core headers not supported: " + path);
  std::vector<unsigned char> info(info_size - 4);
  if (std::fread(info.data(), 1, info.size(), fp) != info.size())
    raise(ErrorCode::CorruptData, "BMP info header truncated: " + path);

  const std::int32_t raw_w = static_cast<std::int32_t>(le32(info.data()));
  const std::int32_t raw_h = static_cast<std::int32_t>(le32(info.data() + 4));
  const std::uint16_t bpp = le16(info.data() + 10);
  const std::uint32_t compression = le32(info.data() + 12);
  std::uint32_t palette_count = le32(info.data() + 28);
  if (raw_w < 1 || raw_h == 0) raise(ErrorCode::CorruptData, "bad BMP dimensions: " + path);
  if (compression != 0)
    raise(ErrorCode::UnsupportedFormat, "compressed BMP not supported: " + path);
  if (bpp != 24 && bpp != 8)
    raise(ErrorCode::UnsupportedFormat, "only 8/24-bit BMP supported: " + path);

  const bool bottom_up = raw_h > 0;
  const int w = raw_w;
  const int h = bottom_up ? raw_h : -raw_h;

  std::vector<unsigned char> palette;  // BGRA quads
  if (bpp == 8) {
    if (palette_count == 0) palette_count = 256;
    palette.resize(static_cast<std::size_t>(palette_count) * 4);
    if (std::fseek(fp, 14 + static_cast<long>(info_size), SEEK_SET) != 0 ||
        std::fread(palette.data(), 1, palette.size(), fp) != palette.size())
      raise(ErrorCode::CorruptData, "BMP palette truncated: " + path);
  }

  if (std::fseek(fp, static_cast<long>(data_offset), SEEK_SET) != 0)
    raise(ErrorCode::CorruptData, "BMP pixel data missing: " + path);
  const std::size_t row_stride = (static_cast<std::size_t>(w) * (bpp / 8) + 3) & ~std::size_t(3);
  std::vector<unsigned char> row(row_stride);

  RgbImage img(w, h);
  const double scale = 1.0 / 255.0;
  for (int r = 0; r < h; ++r) {
    if (std::fread(row.data(), 1, row_stride, fp) != row_stride)
      raise(ErrorCode::CorruptData, "BMP pixel data truncated: " + path);
    const int y = bottom_up ? h - 1 - r : r;
    for (int x = 0; x < w; ++x) {
      unsigned char b, g, rr;
      if (bpp == 24) {
        b = row[static_cast<std::size_t>(x) * 3];
        g = row[static_cast<std::size_t>(x) * 3 + 1];
        rr = row[static_cast<std::size_t>(x) * 3 + 2];
      } else {
        const unsigned idx = row[x];
        if (static_cast<std::size_t>(idx) * 4 + 3 >= palette.size())
          raise(ErrorCode::CorruptData, "BMP palette index out of range: " + path);
        b = palette[idx * 4];
        g = palette[idx * 4 + 1];
        rr = palette[idx * 4 + 2];
      }
      img.at(0, y, x) = rr * scale;
      img.at(1, y, x) = g * scale;
      img.at(2, y, x) = b * scale;
    }
  }
  return img;
}

}  // namespace

RgbImage load_image(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) raise(ErrorCode::MissingFile, path);

  unsigned char sig[8] = {0};
  const std::size_t got = std::fread(sig, 1, 8, fp.get());
  std::rewind(fp.get());

  if (got >= 8 && png_sig_cmp(sig, 0, 8) == 0) return load_png(fp.get(), path);
  if (got >= 2 && sig[0] == 'P' && sig[1] == '6') return load_ppm(fp.get(), path);
  if (got >= 2 && sig[0] == 'B' && sig[1] == 'M') return load_bmp(fp.get(), path);
  raise(ErrorCode::UnsupportedFormat, "unrecognized raster format: " + path);
}

}  // namespace fgsc
