#include "fgsc/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fgsc/error.hpp"

namespace fgsc {

namespace {

// a + t*(b-a): exact when a==b or t==0, never overshoots [min(a,b), max(a,b)].
inline double lerp(double a, double b, double t) { return a + t * (b - a); }

RgbImage resize_bilinear(const RgbImage& img, int out_w, int out_h) {
  RgbImage out(out_w, out_h);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int c = 0; c < 3; ++c) {
    const double* src = img.plane(c);
    double* dst = out.plane(c);
    for (int yo = 0; yo < out_h; ++yo) {
      double fy = (yo + 0.5) * sy - 0.5;
      fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
      const int y0 = static_cast<int>(fy);
      const int y1 = std::min(y0 + 1, img.height - 1);
      const double ty = fy - y0;
      for (int xo = 0; xo < out_w; ++xo) {
        double fx = (xo + 0.5) * sx - 0.5;
        fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
        const int x0 = static_cast<int>(fx);
        const int x1 = std::min(x0 + 1, img.width - 1);
        const double tx = fx - x0;
        const double top = lerp(src[static_cast<std::size_t>(y0) * img.width + x0],
                                src[static_cast<std::size_t>(y0) * img.width + x1], tx);
        const double bot = lerp(src[static_cast<std::size_t>(y1) * img.width + x0],
                                src[static_cast<std::size_t>(y1) * img.width + x1], tx);
        dst[static_cast<std::size_t>(yo) * out_w + xo] = lerp(top, bot, ty);
      }
    }
  }
  return out;
}

}  // namespace

RgbImage resize_shorter_side(const RgbImage& img, int target) {
  if (target < 1) raise(ErrorCode::InvalidArgument, "resize target must be >= 1");
  const int shorter = std::min(img.width, img.height);
  if (shorter == target) return img;
  int out_w, out_h;
  if (img.width <= img.height) {
    out_w = target;
    out_h = std::max<int>(target, static_cast<int>(std::lround(
                                      static_cast<double>(img.height) * target / img.width)));
  } else {
    out_h = target;
    out_w = std::max<int>(target, static_cast<int>(std::lround(
                                      static_cast<double>(img.width) * target / img.height)));
  }
  return resize_bilinear(img, out_w, out_h);
}

RgbImage resize_exact(const RgbImage& img, int w, int h) {
  if (w < 1 || h < 1) raise(ErrorCode::InvalidArgument, "resize dimensions must be >= 1");
  if (w == img.width && h == img.height) return img;
  return resize_bilinear(img, w, h);
}

RgbImage crop(const RgbImage& img, const BoundingBox& box) {
  if (box.width < 1 || box.height < 1) raise(ErrorCode::InvalidBox, "box sides must be >= 1");
  const int x0 = std::max(0, box.x);
  const int y0 = std::max(0, box.y);
  const int x1 = std::min(img.width, box.x + box.width);
  const int y1 = std::min(img.height, box.y + box.height);
  if (x1 <= x0 || y1 <= y0)
    raise(ErrorCode::EmptyIntersection, "bounding box lies outside the image");
  RgbImage out(x1 - x0, y1 - y0);
  for (int c = 0; c < 3; ++c) {
    const double* src = img.plane(c);
    double* dst = out.plane(c);
    for (int y = y0; y < y1; ++y)
      std::copy(src + static_cast<std::size_t>(y) * img.width + x0,
                src + static_cast<std::size_t>(y) * img.width + x1,
                dst + static_cast<std::size_t>(y - y0) * out.width);
  }
  return out;
}

RgbImage flip_horizontal(const RgbImage& img) {
  RgbImage out(img.width, img.height);
  for (int c = 0; c < 3; ++c) {
    const double* src = img.plane(c);
    double* dst = out.plane(c);
    for (int y = 0; y < img.height; ++y) {
      const double* row = src + static_cast<std::size_t>(y) * img.width;
      double* drow = dst + static_cast<std::size_t>(y) * img.width;
      for (int x = 0; x < img.width; ++x) drow[x] = row[img.width - 1 - x];
    }
  }
  return out;
}

void write_ppm(const RgbImage& img, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) raise(ErrorCode::MissingFile, "cannot open for writing: " + path);
  std::fprintf(fp, "P6\n%d %d\n255\n", img.width, img.height);
  std::vector<unsigned char> row(static_cast<std::size_t>(img.width) * 3);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < 3; ++c)
        row[static_cast<std::size_t>(x) * 3 + c] =
            static_cast<unsigned char>(std::lround(std::clamp(img.at(c, y, x), 0.0, 1.0) * 255.0));
    std::fwrite(row.data(), 1, row.size(), fp);
  }
  std::fclose(fp);
}

}  // namespace fgsc
