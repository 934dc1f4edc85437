#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "latgreen/special_functions.hpp"

namespace latgreen {

/// A point n of the integer lattice Z^d.
class LatticePoint {
 public:
  LatticePoint() = default;
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t j) const { return coords_[j]; }
  std::int64_t& operator[](std::size_t j) { return coords_[j]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  /// |n| = sum_j |n_j|.
  std::int64_t l1() const;
  std::int64_t max_abs() const;
  bool is_origin() const;

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  bool operator==(const LatticePoint&) const = default;

  std::string str() const;

  /// Unit vector e_j in Z^d.
  static LatticePoint unit(std::size_t d, std::size_t j);

 private:
  std::vector<std::int64_t> coords_;
};

/// Coordinatewise absolute value, sorted descending. The kernel is invariant
/// under this map.
LatticePoint reduce_symmetry(const LatticePoint& n);

/// A spectral parameter z together with the lattice dimension d.
///
/// Region predicates are evaluated from z on every call.
class SpectralPoint {
 public:
  enum class Region { outside_disk, near_threshold, other };

  SpectralPoint(Complex z, int dim);

  Complex z() const { return z_; }
  int dim() const { return dim_; }

  /// z in [0, 4d].
  bool in_spectrum() const;
  /// |2d - z| > 2d: the Laurent expansion converges.
  bool outside_disk() const;
  /// |z - 4q| < 4.
  bool near_threshold(int q) const;

  /// outside_disk if it holds, otherwise near_threshold with the threshold
  /// closest to z among those whose disk contains it, otherwise other.
  Region region() const;
  /// The threshold index q reported with Region::near_threshold.
  std::optional<int> nearest_threshold() const;

  std::string spectrum_str() const;

 private:
  Complex z_;
  int dim_;
};

/// Which representation produced a kernel value.
enum class Representation {
  closed_1d,
  threshold0_1d,
  threshold4_1d,
  laurent,
  laurent_2d,
  embedded_2d,
  embedded_2d_boundary,
  endpoint_2d,
  recurrence_2d,
  quadrature,
  bessel_laplace,
};

/// Command-line style name, e.g. "closed1d".
std::string to_string(Representation r);
std::optional<Representation> representation_from_string(const std::string& name);

struct GreenValue {
  Complex value{};
  Representation representation = Representation::closed_1d;
  std::int64_t terms_used = 0;
  double err_estimate = 0.0;
};

}  // namespace latgreen
