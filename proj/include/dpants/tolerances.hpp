#pragma once

namespace dpants {

/// Central numeric tolerances. One knob per tier:
///  - algebraic: closed-form identities evaluated in double precision
///  - geometric: reconstruction residuals (relation closure, hexagon closure)
///  - cross_model: agreement between independent computation routes
struct Tolerances {
  double algebraic = 1e-12;
  double geometric = 1e-9;
  double cross_model = 1e-8;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace dpants
