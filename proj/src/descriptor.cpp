#include "fgsc/descriptor.hpp"

#include <cmath>
#include <numbers>

#include "fgsc/error.hpp"
#include "fgsc/parallel.hpp"

namespace fgsc {

void DescriptorParams::validate() const {
  if (patch_size < 1 || cell_grid < 1 || patch_size % cell_grid != 0)
    raise(ErrorCode::InvalidArgument, "patch_size must be a positive multiple of cell_grid");
  if (orientation_bins < 2) raise(ErrorCode::InvalidArgument, "orientation_bins must be >= 2");
  if (stride < 1) raise(ErrorCode::InvalidArgument, "stride must be >= 1");
  if (!(norm_epsilon > 0)) raise(ErrorCode::InvalidArgument, "norm_epsilon must be positive");
}

GradientMaps gradient_maps(const RgbImage& img) {
  if (img.width < 3 || img.height < 3)
    raise(ErrorCode::ImageTooSmall, "gradient maps need at least 3x3 pixels");

  GradientMaps maps;
  maps.width = img.width;
  maps.height = img.height;
  const std::size_t n = img.plane_size();
  constexpr double two_pi = 2.0 * std::numbers::pi;

  for (int c = 0; c < 3; ++c) {
    maps.magnitude[c].resize(n);
    maps.orientation[c].resize(n);
    const double* p = img.plane(c);
    for (int y = 0; y < img.height; ++y) {
      const double* row = p + static_cast<std::size_t>(y) * img.width;
      const double* up = p + static_cast<std::size_t>(y == 0 ? 0 : y - 1) * img.width;
      const double* down =
          p + static_cast<std::size_t>(y == img.height - 1 ? y : y + 1) * img.width;
      const double wy = (y == 0 || y == img.height - 1) ? 1.0 : 0.5;
      for (int x = 0; x < img.width; ++x) {
        const int xl = x == 0 ? 0 : x - 1;
        const int xr = x == img.width - 1 ? x : x + 1;
        const double wx = (x == 0 || x == img.width - 1) ? 1.0 : 0.5;
        const double dx = (row[xr] - row[xl]) * wx;
        const double dy = (down[x] - up[x]) * wy;
        const std::size_t i = static_cast<std::size_t>(y) * img.width + x;
        maps.magnitude[c][i] = std::sqrt(dx * dx + dy * dy);
        double ang = std::atan2(dy, dx);
        if (ang < 0) ang += two_pi;
        maps.orientation[c][i] = ang;
      }
    }
  }
  return maps;
}

Eigen::VectorXd patch_descriptor(const GradientMaps& maps, int x, int y,
                                 const DescriptorParams& params) {
  params.validate();
  if (x < 0 || y < 0 || x + params.patch_size > maps.width || y + params.patch_size > maps.height)
    raise(ErrorCode::OutOfBounds, "patch exceeds gradient field bounds");

  const int cells = params.cell_grid;
  const int bins = params.orientation_bins;
  const int cell_px = params.patch_size / cells;
  const double bin_scale = bins / (2.0 * std::numbers::pi);

  Eigen::VectorXd desc = Eigen::VectorXd::Zero(params.dim());
  for (int c = 0; c < 3; ++c) {
    const double* mag = maps.magnitude[c].data();
    const double* ori = maps.orientation[c].data();
    const int channel_base = c * cells * cells * bins;
    for (int py = 0; py < params.patch_size; ++py) {
      const std::size_t row = static_cast<std::size_t>(y + py) * maps.width + x;
      const int cell_row = py / cell_px;
      for (int px = 0; px < params.patch_size; ++px) {
        const double m = mag[row + px];
        if (m == 0.0) continue;
        int bin = static_cast<int>(ori[row + px] * bin_scale);
        if (bin >= bins) bin = bins - 1;
        const int cell_col = px / cell_px;
        desc[channel_base + (cell_row * cells + cell_col) * bins + bin] += m;
      }
    }
  }

  const double norm = desc.norm();
  if (norm < params.norm_epsilon) return Eigen::VectorXd::Zero(params.dim());
  desc /= norm;
  return desc;
}

DescriptorGrid dense_grid(const RgbImage& img, const DescriptorParams& params, int threads) {
  params.validate();
  if (img.width < params.patch_size || img.height < params.patch_size)
    raise(ErrorCode::ImageTooSmall, "image smaller than one patch");

  const GradientMaps maps = gradient_maps(img);
  DescriptorGrid grid;
  grid.rows = (img.height - params.patch_size) / params.stride + 1;
  grid.cols = (img.width - params.patch_size) / params.stride + 1;
  grid.params = params;
  grid.source_width = img.width;
  grid.source_height = img.height;
  grid.data.resize(params.dim(), static_cast<Eigen::Index>(grid.rows) * grid.cols);

  parallel_for(static_cast<std::size_t>(grid.rows) * grid.cols, threads, [&](std::size_t i) {
    const int r = static_cast<int>(i) / grid.cols;
    const int c = static_cast<int>(i) % grid.cols;
    grid.data.col(static_cast<Eigen::Index>(i)) =
        patch_descriptor(maps, c * params.stride, r * params.stride, params);
  });
  return grid;
}

}  // namespace fgsc
