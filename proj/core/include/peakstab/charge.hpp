#ifndef PEAKSTAB_CHARGE_HPP
#define PEAKSTAB_CHARGE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peakstab/polygon.hpp"
#include "peakstab/segments.hpp"
#include "peakstab/shapes.hpp"
#include "peakstab/stability.hpp"

namespace peakstab {

struct Complex {
  Rat re;
  Rat im;
  bool operator==(const Complex&) const = default;
  std::string str() const;
};

Complex operator+(const Complex& a, const Complex& b);
// Sign of a.re * b.im − a.im * b.re.
int cross_sign(const Complex& a, const Complex& b);

enum class ChargeScheme { GeneralConvex, SincerePrime };

struct CentralChargeCfg {
  ChargeScheme scheme = ChargeScheme::GeneralConvex;
  long m = 2;
};

// coords(j) − coords(i).
Complex central_charge(const LineSegment& g, const PolygonModel& p);
// Reflection across y = x.
Complex reflect(const Complex& z);
// Sum of the edge vectors c(x) − c(x − 1) over quiver vertices x, reflected.
Complex charge_of_support(const std::vector<std::size_t>& vertices, const PolygonModel& p);

// w and κ in grouped order (z points then x points). Throws NotSincere.
std::pair<Weight, Weight> sincere_weights(const SincereShape& s);

// Z_m of a dimension vector indexed like s.grouped(). Throws NotSincere, BoundaryAngle.
Complex z_m(const SincereShape& s, const DimVector& dims, long m);
// Z_m of a representation of a sincere poset; the poset is its own shape.
Complex z_m(const CombPeakSpace& u, const CentralChargeCfg& cfg);

struct PhiReport {
  Verdict verdict = Verdict::Stable;
  Complex whole;
  std::vector<ProperSubspace> subspaces;
  std::vector<Complex> values;
  std::optional<std::size_t> witness;
};

// Stable iff every proper subobject has strictly larger argument, i.e.
// strictly smaller phase. Throws BoundaryAngle when a value has re = 0 or im = 0.
PhiReport phi_stability_check(const CombPeakSpace& u, const CentralChargeCfg& cfg);
// Geometric version on P(Q); u must be Ω of an sp-segment.
PhiReport phi_stability_check(const CombPeakSpace& u, const PolygonModel& p);

struct PrimePolygon {
  std::vector<std::string> labels;
  std::vector<Point2> coords;
  // Vertices whose edge differs from Z_m of the corresponding point.
  std::vector<std::string> discrepancies;
};

PrimePolygon build_polygon_prime(const SincereShape& s, long m);

}  // namespace peakstab

#endif
