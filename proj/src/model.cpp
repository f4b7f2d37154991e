#include "eon/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eon {

namespace {

void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) throw Error(kind, msg);
}

}  // namespace

bool NetworkModel::has_node(NodeId v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

const Link& NetworkModel::link(LinkId id) const {
  for (const Link& l : links) {
    if (l.id == id) return l;
  }
  throw Error(ErrorKind::Domain, "unknown link id " + std::to_string(id));
}

std::vector<LinkId> NetworkModel::out_links(NodeId v) const {
  std::vector<LinkId> out;
  for (const Link& l : links) {
    if (l.begin == v) out.push_back(l.id);
  }
  return out;
}

std::vector<LinkId> NetworkModel::in_links(NodeId v) const {
  std::vector<LinkId> in;
  for (const Link& l : links) {
    if (l.end == v) in.push_back(l.id);
  }
  return in;
}

void NetworkModel::validate() const {
  require(!nodes.empty(), ErrorKind::ParameterDomain, "empty node set");
  std::set<NodeId> uniq(nodes.begin(), nodes.end());
  require(uniq.size() == nodes.size(), ErrorKind::ParameterDomain,
          "duplicate node ids");
  std::set<LinkId> lids;
  for (const Link& l : links) {
    require(l.begin != l.end, ErrorKind::ParameterDomain,
            "link " + std::to_string(l.id) + " is a self loop");
    require(has_node(l.begin) && has_node(l.end), ErrorKind::ParameterDomain,
            "link " + std::to_string(l.id) + " references unknown node");
    require(l.length_km > 0.0, ErrorKind::ParameterDomain,
            "link " + std::to_string(l.id) + " has non-positive length");
    require(lids.insert(l.id).second, ErrorKind::ParameterDomain,
            "duplicate link id " + std::to_string(l.id));
  }
  require(transponders_per_node > 0, ErrorKind::ParameterDomain,
          "transponders_per_node must be positive");
  require(fiber_bandwidth_hz > 0.0, ErrorKind::ParameterDomain,
          "fiber bandwidth must be positive");
}

void TrafficRequest::validate() const {
  require(rate_bps > 0.0, ErrorKind::ParameterDomain,
          "request " + std::to_string(id) + " has non-positive rate");
  require(source != dest, ErrorKind::ParameterDomain,
          "request " + std::to_string(id) + " has equal endpoints");
}

PhysParams PhysParams::from_engineering(double alpha_db_per_km,
                                        double beta2_fs2_per_m,
                                        double gamma_per_w_km, double nu_thz,
                                        double nsp, double span_km,
                                        double subcarrier_ghz,
                                        double guard_ghz) {
  PhysParams p;
  // dB/km -> 1/m: alpha_lin[1/km] = alpha_dB * ln(10)/10
  p.alpha_per_m = alpha_db_per_km * std::log(10.0) / 10.0 / 1000.0;
  p.beta2_abs_s2_per_m = beta2_fs2_per_m * 1e-30;
  p.gamma_per_w_m = gamma_per_w_km / 1000.0;
  p.nu_hz = nu_thz * 1e12;
  p.nsp = nsp;
  p.span_length_m = span_km * 1000.0;
  p.subcarrier_spacing_hz = subcarrier_ghz * 1e9;
  p.guard_band_hz = guard_ghz * 1e9;
  return p;
}

void PhysParams::validate() const {
  require(alpha_per_m > 0.0, ErrorKind::ParameterDomain, "alpha must be > 0");
  require(beta2_abs_s2_per_m > 0.0, ErrorKind::ParameterDomain,
          "|beta2| must be > 0");
  require(gamma_per_w_m > 0.0, ErrorKind::ParameterDomain, "gamma must be > 0");
  require(nu_hz > 0.0, ErrorKind::ParameterDomain, "nu must be > 0");
  require(nsp > 0.0, ErrorKind::ParameterDomain, "nsp must be > 0");
  require(planck_js > 0.0, ErrorKind::ParameterDomain, "planck must be > 0");
  require(span_length_m > 0.0, ErrorKind::ParameterDomain,
          "span length must be > 0");
  require(subcarrier_spacing_hz > 0.0, ErrorKind::ParameterDomain,
          "subcarrier spacing must be > 0");
  require(guard_band_hz > 0.0, ErrorKind::ParameterDomain,
          "guard band must be > 0");
}

DerivedConstants derive_constants(const PhysParams& phys) {
  phys.validate();
  DerivedConstants d;
  d.zeta = (std::exp(phys.alpha_per_m * phys.span_length_m) - 1.0) *
           phys.planck_js * phys.nu_hz * phys.nsp;
  d.varsigma = 3.0 * phys.gamma_per_w_m * phys.gamma_per_w_m /
               (2.0 * phys.alpha_per_m * M_PI * phys.beta2_abs_s2_per_m);
  d.iota = M_PI * M_PI * phys.beta2_abs_s2_per_m / (2.0 * phys.alpha_per_m);
  require(d.zeta > 0.0 && d.varsigma > 0.0 && d.iota > 0.0,
          ErrorKind::ParameterDomain, "derived constants must be positive");
  return d;
}

void PowerParams::validate() const {
  auto nonneg = [](double x) { return x >= 0.0; };
  require(nonneg(ptxb_w) && nonneg(prxb_w) && nonneg(penc_w) &&
              nonneg(pdec_w) && nonneg(pfft_w) && nonneg(pdsp_w) &&
              nonneg(egrm_j_per_bit) && nonneg(pamp_w),
          ErrorKind::ParameterDomain, "power parameters must be nonnegative");
}

void TransponderLimits::validate() const {
  require(capacity_bps > 0.0, ErrorKind::ParameterDomain,
          "capacity must be positive");
  require(!modulation_levels.empty(), ErrorKind::ParameterDomain,
          "modulation level set empty");
  for (int c : modulation_levels) {
    require(c >= 1 && c <= 6, ErrorKind::ParameterDomain,
            "modulation level outside 1..6");
  }
  require(!coding_rates.empty(), ErrorKind::ParameterDomain,
          "coding rate set empty");
  const double known[] = {2.0 / 3.0, 3.0 / 4.0, 8.0 / 9.0};
  for (double r : coding_rates) {
    bool ok = false;
    for (double k : known) ok = ok || std::abs(r - k) < 1e-9;
    require(ok, ErrorKind::ParameterDomain,
            "coding rate not one of 2/3, 3/4, 8/9");
  }
  require(max_subcarrier_exponent > 0.0, ErrorKind::ParameterDomain,
          "max subcarrier exponent must be positive");
}

void RoundingParams::validate() const {
  require(precision_step > 0.0, ErrorKind::ParameterDomain,
          "precision step must be positive");
  require(initial_precision >= 0.0, ErrorKind::ParameterDomain,
          "initial precision must be nonnegative");
}

}  // namespace eon
