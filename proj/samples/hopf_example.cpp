// Link, twist and writhe of the Hopf ribbon and of the hyperbolic circle
// ribbon, in both formats where they exist, plus the helicity of the unit
// Hopf field.

#include <cstdio>

#include "lktw/lktw.hpp"

template <class M>
void report(const char* name, const lktw::Ribbon<M>& ribbon, lktw::Format format) {
  const auto r = lktw::ltw_verify(ribbon, format);
  std::printf("%-22s %-9s Lk = %+.6f  Tw = %+.6f  Wr = %+.6f  residual = %.2e\n", name,
              std::string(lktw::to_string(format)).c_str(), r.lk, r.tw, r.wr, r.residual);
}

int main() {
  const auto hopf = lktw::presets::hopf_ribbon(256, 0.3);
  report("Hopf ribbon", hopf, lktw::Format::ParallelTransport);
  report("Hopf ribbon", hopf, lktw::Format::LeftTranslation);

  lktw::QuadratureConfig cfg;
  cfg.n_outer = cfg.n_inner = 512;
  const auto h3 = lktw::presets::h3_circle_ribbon(512, 0.2);
  const auto r = lktw::ltw_verify(h3, lktw::Format::ParallelTransport, cfg);
  std::printf("%-22s %-9s Lk = %+.6f  Tw = %+.6f  Wr = %+.6f  residual = %.2e\n", "H3 circle ribbon", "parallel",
              r.lk, r.tw, r.wr, r.residual);

  auto grid = lktw::samplers::hopf_grid(24, 48, 48);
  auto field = grid.sample.with_vectors(lktw::samplers::hopf_field(grid.sample, lktw::samplers::HopfSide::Left));
  const double h = lktw::helicity_from_representatives(field, grid.row_representatives, grid.row_weights);
  std::printf("Hopf field: H = %.6f, energy = %.6f, H / (energy / 2) = %.5f\n", h, lktw::energy(field),
              h / (lktw::energy(field) / 2));
}
