#include "nlperim/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace nlperim {

std::string grid_to_string(const GridSpec& g) {
  std::ostringstream os;
  os.precision(17);
  os << "d=" << g.dimension << " h=" << g.cell_size << " counts=";
  for (int a = 0; a < g.dimension; ++a) os << (a ? "x" : "") << g.counts[a];
  os << " origin=(";
  for (int a = 0; a < g.dimension; ++a) os << (a ? "," : "") << g.origin[a];
  os << ")";
  return os.str();
}

Json energy_to_json(const EnergyBreakdown& br, const std::string& kernel_id, const GridSpec& grid,
                    double epsilon) {
  Json j;
  j["J1"] = br.j1;
  j["J2"] = br.j2;
  j["J"] = br.j;
  j["L_in"] = br.l_in;
  j["L_out1"] = br.l_out1;
  j["L_out2"] = br.l_out2;
  j["kernel_id"] = kernel_id;
  j["grid"] = grid_to_string(grid);
  j["epsilon"] = epsilon;
  return j;
}

Json constants_to_json(const KernelConstants& c) {
  Json j;
  j["c_K"] = c.c_K;
  j["c_prime_K"] = c.c_prime_K;
  j["alpha_1d"] = c.alpha_1d;
  return j;
}

Json admissibility_to_json(const AdmissibilityReport& rep) {
  Json j;
  j["C2"] = rep.C2;
  j["C2_prime"] = rep.C2_prime;
  j["C3"] = rep.C3;
  j["C4"] = rep.C4;
  j["tail_bound"] = rep.tail_bound;
  j["tail_ok"] = rep.tail_ok;
  return j;
}

Json extrapolation_to_json(const ExtrapolationResult& r) {
  Json j;
  j["limit"] = r.limit;
  j["slope"] = r.slope;
  j["residual"] = r.residual;
  j["relative_error"] = r.relative_error;
  return j;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << "epsilon,h,ratio_J1,ratio_J2,ref_J1,ref_J2\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.epsilon, r.h,
                  r.ratio_j1, r.ratio_j2, r.ref_j1, r.ref_j2);
    os << buf;
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

}  // namespace nlperim
