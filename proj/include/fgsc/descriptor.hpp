#ifndef FGSC_DESCRIPTOR_HPP
#define FGSC_DESCRIPTOR_HPP

#include <Eigen/Core>
#include <array>
#include <vector>

#include "fgsc/image.hpp"

namespace fgsc {

/// Geometry of the dense local orientation histogram extractor.
struct DescriptorParams {
  int patch_size = 16;        // pixels per patch side
  int cell_grid = 4;          // cells per patch side
  int orientation_bins = 8;   // histogram bins over [0, 2pi)
  int stride = 1;             // pixels between patch top-lefts
  double norm_epsilon = 1e-10;

  int dim() const { return cell_grid * cell_grid * orientation_bins * 3; }
  void validate() const;
};

/// Per-channel gradient magnitude and orientation planes. Orientation is
/// atan2 mapped into [0, 2pi); central differences in the interior,
/// one-sided at the borders.
struct GradientMaps {
  int width = 0;
  int height = 0;
  std::array<std::vector<double>, 3> magnitude;
  std::array<std::vector<double>, 3> orientation;
};

/// Row-major grid of descriptors, one column of `data` per grid cell
/// (cell index = row * cols + col).
struct DescriptorGrid {
  int rows = 0;
  int cols = 0;
  Eigen::MatrixXd data;  // dim x (rows * cols)
  DescriptorParams params;
  int source_width = 0;
  int source_height = 0;

  int dim() const { return static_cast<int>(data.rows()); }
  Eigen::MatrixXd::ConstColXpr cell(int r, int c) const {
    return data.col(static_cast<Eigen::Index>(r) * cols + c);
  }
};

GradientMaps gradient_maps(const RgbImage& img);

/// Orientation histogram of one patch with top-left (x, y): per channel,
/// each pixel votes its gradient magnitude into the bin containing its
/// angle, cell histograms concatenate (R, G, B blocks), and the result is
/// L2-normalized unless its norm falls below norm_epsilon (flat patch),
/// in which case the zero vector is returned.
Eigen::VectorXd patch_descriptor(const GradientMaps& maps, int x, int y,
                                 const DescriptorParams& params);

/// One descriptor per valid top-left position at the configured stride.
DescriptorGrid dense_grid(const RgbImage& img, const DescriptorParams& params, int threads = 1);

}  // namespace fgsc

#endif
