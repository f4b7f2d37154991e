#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eon/error.hpp"

namespace eon {

using NodeId = int;
using LinkId = int;

// Directed fiber link. Lengths are kept in km; all spectral/power math is SI.
struct Link {
  LinkId id = -1;
  NodeId begin = -1;  // B(l)
  NodeId end = -1;    // E(l)
  double length_km = 0.0;
};

struct NetworkModel {
  std::vector<NodeId> nodes;
  std::vector<Link> links;
  int transponders_per_node = 0;   // bank size per node
  double fiber_bandwidth_hz = 0.0; // usable spectrum per fiber

  bool has_node(NodeId v) const;
  const Link& link(LinkId id) const;
  // directed links leaving / entering a node
  std::vector<LinkId> out_links(NodeId v) const;
  std::vector<LinkId> in_links(NodeId v) const;
  void validate() const;
};

struct TrafficRequest {
  int id = -1;
  NodeId source = -1;
  NodeId dest = -1;
  double rate_bps = 0.0;

  void validate() const;
};

// Fiber and OFDM constants, stored in SI units (1/m, s^2/m, 1/(W*m), Hz, m).
// Configs take engineering units (dB/km, fs^2/m, 1/(W*km), THz, km, GHz);
// ingestion converts once, see from_engineering().
struct PhysParams {
  double alpha_per_m = 0.0;
  double beta2_abs_s2_per_m = 0.0;
  double gamma_per_w_m = 0.0;
  double nu_hz = 0.0;
  double nsp = 0.0;
  double planck_js = 6.62607015e-34;
  double span_length_m = 0.0;
  double subcarrier_spacing_hz = 0.0;  // OFDM subcarrier spacing
  double guard_band_hz = 0.0;

  static PhysParams from_engineering(double alpha_db_per_km,
                                     double beta2_fs2_per_m,
                                     double gamma_per_w_km, double nu_thz,
                                     double nsp, double span_km,
                                     double subcarrier_ghz, double guard_ghz);

  double span_length_km() const { return span_length_m / 1000.0; }
  void validate() const;
};

// Constants derived once from PhysParams and cached by callers.
struct DerivedConstants {
  double zeta = 0.0;      // ASE noise density factor, W/Hz
  double varsigma = 0.0;  // nonlinear interference scale, Hz^2/W^2
  double iota = 0.0;      // dispersion walk-off scale, s^2
  double kappa1 = 0.4343;
};

DerivedConstants derive_constants(const PhysParams& phys);

struct PowerParams {
  double ptxb_w = 0.0;
  double prxb_w = 0.0;
  double penc_w = 0.0;  // scaled by 1/r
  double pdec_w = 0.0;  // scaled by 1/r
  double pfft_w = 0.0;  // per two-point FFT
  double pdsp_w = 0.0;  // per subcarrier
  double egrm_j_per_bit = 0.0;
  double pamp_w = 0.0;

  void validate() const;
};

struct TransponderLimits {
  double capacity_bps = 0.0;
  std::vector<int> modulation_levels;   // subset of {1..6}
  std::vector<double> coding_rates;     // subset of {2/3, 3/4, 8/9}
  double max_subcarrier_exponent = 9.0; // upper bound on b

  void validate() const;
};

struct RoundingParams {
  double initial_precision = 0.0;  // starting rounding radius
  double precision_step = 0.1;     // radius growth per pass

  void validate() const;
};

}  // namespace eon
