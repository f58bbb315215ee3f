#ifndef FGSC_CODEBOOK_HPP
#define FGSC_CODEBOOK_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>

namespace fgsc {

/// Hyperparameters of the iterative codebook learner.
struct LearnerParams {
  int size_m = 512;           // number of atoms M
  int iterations = 10;        // outer iterations I
  int sparsity_k = 2;         // sparse level K
  double beta = 1e-4;         // locality regularization weight
  double muthresh = 0.95;     // mutual incoherence limit, in (0,1)
  std::uint64_t rng_seed = 0;
  double lambda_note = 0.0;   // inert; kept for configuration completeness

  void validate() const;
};

/// Dictionary of unit-norm atoms, one per column.
struct Codebook {
  Eigen::MatrixXd atoms;  // H x M
  LearnerParams trained_with;

  int dim_h() const { return static_cast<int>(atoms.rows()); }
  int size_m() const { return static_cast<int>(atoms.cols()); }
};

/// Overcomplete cosine dictionary: atom m samples the type-II cosine basis
/// function of its scaled frequency index over dim_h points; every column
/// beyond the DC atom is made mean-free, and all columns are L2-normalized.
/// Requires size_m >= dim_h.
Codebook init_dct_codebook(int dim_h, int size_m);

/// Binary codebook file: magic "SDCT", version, H, M, column-major f64
/// atoms, then a JSON trailer with the learner parameters.
void write_codebook(const Codebook& cb, const std::string& path);
Codebook read_codebook(const std::string& path);

namespace detail {
/// Cosine atom construction without the overcompleteness gate; the learner
/// also uses it for undercomplete dictionaries.
Eigen::MatrixXd cosine_atoms(int dim_h, int size_m);
}  // namespace detail

}  // namespace fgsc

#endif
