#ifndef FGSC_IMAGE_HPP
#define FGSC_IMAGE_HPP

#include <string>
#include <vector>

namespace fgsc {

/// Planar RGB image with intensities in [0,1]. Planes are stored R, G, B,
/// each row-major with stride width.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // 3 * width * height

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(3) * w * h, 0.0) {}

  std::size_t plane_size() const { return static_cast<std::size_t>(width) * height; }

  double at(int channel, int y, int x) const {
    return data[static_cast<std::size_t>(channel) * plane_size() +
                static_cast<std::size_t>(y) * width + x];
  }
  double& at(int channel, int y, int x) {
    return data[static_cast<std::size_t>(channel) * plane_size() +
                static_cast<std::size_t>(y) * width + x];
  }

  const double* plane(int channel) const { return data.data() + channel * plane_size(); }
  double* plane(int channel) { return data.data() + channel * plane_size(); }
};

/// Axis-aligned rectangle in pixel coordinates, (x, y) at the top-left.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

/// Decodes PNG, PPM (P6) or BMP into an RgbImage. Grayscale sources are
/// replicated across the three planes and samples are scaled from the
/// source bit depth into [0,1].
RgbImage load_image(const std::string& path);

/// Rescales so that min(width, height) == target, preserving aspect ratio
/// to within a pixel. Bilinear. No-op when already at target.
RgbImage resize_shorter_side(const RgbImage& img, int target);

/// Bilinear resize to exactly w x h.
RgbImage resize_exact(const RgbImage& img, int w, int h);

/// Sub-image under `box` clipped to the image bounds. Throws
/// EmptyIntersection when the clipped box is empty.
RgbImage crop(const RgbImage& img, const BoundingBox& box);

/// Mirrors columns: j -> width-1-j in every plane.
RgbImage flip_horizontal(const RgbImage& img);

/// Debug dump as binary PPM (P6, 8-bit).
void write_ppm(const RgbImage& img, const std::string& path);

}  // namespace fgsc

#endif
