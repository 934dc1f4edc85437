#include "latgreen/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace latgreen {

std::int64_t LatticePoint::l1() const {
  std::int64_t s = 0;
  for (auto c : coords_) s += std::abs(c);
  return s;
}

std::int64_t LatticePoint::max_abs() const {
  std::int64_t m = 0;
  for (auto c : coords_) m = std::max(m, static_cast<std::int64_t>(std::abs(c)));
  return m;
}

bool LatticePoint::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  if (o.dim() != dim()) throw DomainError("LatticePoint: dimension mismatch");
  LatticePoint r = *this;
  for (std::size_t j = 0; j < dim(); ++j) r.coords_[j] += o.coords_[j];
  return r;
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  if (o.dim() != dim()) throw DomainError("LatticePoint: dimension mismatch");
  LatticePoint r = *this;
  for (std::size_t j = 0; j < dim(); ++j) r.coords_[j] -= o.coords_[j];
  return r;
}

std::string LatticePoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) os << ',';
    os << coords_[j];
  }
  os << ')';
  return os.str();
}

LatticePoint LatticePoint::unit(std::size_t d, std::size_t j) {
  std::vector<std::int64_t> c(d, 0);
  c.at(j) = 1;
  return LatticePoint(std::move(c));
}

LatticePoint reduce_symmetry(const LatticePoint& n) {
  std::vector<std::int64_t> c = n.coords();
  for (auto& x : c) x = std::abs(x);
  std::sort(c.begin(), c.end(), std::greater<>());
  return LatticePoint(std::move(c));
}

SpectralPoint::SpectralPoint(Complex z, int dim) : z_(z), dim_(dim) {
  require_finite(z, "SpectralPoint");
  if (dim < 1) throw DomainError("SpectralPoint: dimension must be >= 1");
}

bool SpectralPoint::in_spectrum() const {
  return z_.imag() == 0.0 && z_.real() >= 0.0 && z_.real() <= 4.0 * dim_;
}

bool SpectralPoint::outside_disk() const {
  return std::abs(2.0 * dim_ - z_) > 2.0 * dim_;
}

bool SpectralPoint::near_threshold(int q) const {
  return q >= 0 && q <= dim_ && std::abs(z_ - 4.0 * q) < 4.0;
}

std::optional<int> SpectralPoint::nearest_threshold() const {
  std::optional<int> best;
  double best_dist = 0.0;
  for (int q = 0; q <= dim_; ++q) {
    const double dist = std::abs(z_ - 4.0 * q);
    if (dist < 4.0 && (!best || dist < best_dist)) {
      best = q;
      best_dist = dist;
    }
  }
  return best;
}

SpectralPoint::Region SpectralPoint::region() const {
  if (outside_disk()) return Region::outside_disk;
  if (nearest_threshold()) return Region::near_threshold;
  return Region::other;
}

std::string SpectralPoint::spectrum_str() const {
  return "[0, " + std::to_string(4 * dim_) + "]";
}

namespace {

constexpr std::array<std::pair<Representation, const char*>, 11> kNames{{
    {Representation::closed_1d, "closed1d"},
    {Representation::threshold0_1d, "thresh0-1d"},
    {Representation::threshold4_1d, "thresh4-1d"},
    {Representation::laurent, "laurent"},
    {Representation::laurent_2d, "laurent2d"},
    {Representation::embedded_2d, "embedded2d"},
    {Representation::embedded_2d_boundary, "embedded2d-boundary"},
    {Representation::endpoint_2d, "endpoint2d"},
    {Representation::recurrence_2d, "recurrence2d"},
    {Representation::quadrature, "quadrature"},
    {Representation::bessel_laplace, "bessel-laplace"},
}};

}  // namespace

std::string to_string(Representation r) {
  for (const auto& [rep, name] : kNames) {
    if (rep == r) return name;
  }
  return "unknown";
}

std::optional<Representation> representation_from_string(const std::string& name) {
  for (const auto& [rep, n] : kNames) {
    if (name == n) return rep;
  }
  return std::nullopt;
}

}  // namespace latgreen
