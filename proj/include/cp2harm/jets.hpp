#ifndef CP2HARM_JETS_HPP
#define CP2HARM_JETS_HPP

#include <array>
#include <functional>

#include "cp2harm/linemap.hpp"

namespace cp2harm {

/// Local stencil around one chart point together with a smooth unit section
/// of the line field over the stencil (each point's representative is
/// projected onto the center representative and renormalized, so the gauge
/// is smooth and its connection coefficient vanishes at the center).
///
/// Point layout: 0 center; 1..4 x +-h, +-2h; 5..8 y +-h, +-2h;
/// 9..12 diagonals (+h,+h), (+h,-h), (-h,+h), (-h,-h).
struct JetFrame {
  Chart chart;
  complexd zeta;
  double h;
  std::array<complexd, 13> points;
  std::array<Vec3c, 13> gauge;

  /// (1 + |zeta|^2)^2, the chart-to-sphere conversion factor.
  double conformal2() const {
    double r2 = std::norm(zeta);
    return (1.0 + r2) * (1.0 + r2);
  }
};

JetFrame make_frame(const LineMap& map, Chart chart, complexd zeta, double h);

/// First- and second-order data of the map at the frame center.
/// Derivatives are with respect to the chart coordinate; axis stencils are
/// fourth order, the mixed dxy (used only by the pure d'd' and d''d''
/// derivatives) is second order.
struct MapJet {
  Vec3c psi;                   // unit representative at the center
  Vec3c raw_dp, raw_dpp;       // ambient d'Psi, d''Psi
  Vec3c raw_mixed;             // ambient d'd''Psi
  Vec3c dp, dpp;               // tangent reps pi_perp d'Psi, pi_perp d''Psi
  Vec3c mixed_perp;            // pi_perp d'd''Psi
  Vec3c ddp_perp, ddpp_perp;   // pi_perp d'd'Psi, pi_perp d''d''Psi
  complexd a_p, a_pp;          // <d'Psi, psi>, <d''Psi, psi>
  complexd mixed_psi;          // <d'd''Psi, psi>
  double dp_norm2, dpp_norm2;  // ambient |d'Psi|^2, |d''Psi|^2

  /// Tension representative (nabla'' dphi/dz applied to psi).
  Vec3c tension_rep() const { return mixed_perp - a_p * dpp - a_pp * dp; }
};

MapJet map_jet(const JetFrame& frame);

/// Tangent field along a line map: reports the representative of the vector
/// at a point, expressed against a caller-supplied unit representative of
/// the base line there (the value must be orthogonal to it and transform
/// with its phase).
class TangentField {
public:
  using Fn = std::function<Vec3c(Chart, complexd, const Vec3c&)>;

  explicit TangentField(Fn fn) : fn_(std::move(fn)) {}

  Vec3c value(Chart chart, complexd zeta, const Vec3c& gauge_psi) const {
    return fn_(chart, zeta, gauge_psi);
  }

  /// pi_perp of a fixed ambient vector, a smooth non-Jacobi control field.
  static TangentField projected_constant(const Vec3c& c);

private:
  Fn fn_;
};

/// Field values and ambient chart derivatives over a frame.
struct FieldJet {
  Vec3c v;
  Vec3c raw_dp, raw_dpp, raw_mixed;
};

FieldJet field_jet(const JetFrame& frame, const MapJet& mj, const TangentField& field);

/// nabla' v and nabla'' v at the frame center.
Vec3c covariant_dp(const MapJet& mj, const FieldJet& fj);
Vec3c covariant_dpp(const MapJet& mj, const FieldJet& fj);

/// (nabla'nabla'' + nabla''nabla') v at the frame center.
Vec3c second_sym(const MapJet& mj, const FieldJet& fj);

}  // namespace cp2harm

#endif
