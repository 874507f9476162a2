#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "nlperim/energy.hpp"
#include "nlperim/kernel.hpp"
#include "nlperim/sweep.hpp"

namespace nlperim {

using Json = nlohmann::ordered_json;

std::string grid_to_string(const GridSpec& g);

/// Flat record {J1, J2, J, L_in, L_out1, L_out2, kernel_id, grid, epsilon}.
Json energy_to_json(const EnergyBreakdown& br, const std::string& kernel_id, const GridSpec& grid,
                    double epsilon);

Json constants_to_json(const KernelConstants& c);
Json admissibility_to_json(const AdmissibilityReport& rep);
Json extrapolation_to_json(const ExtrapolationResult& r);

/// CSV with the pinned header epsilon,h,ratio_J1,ratio_J2,ref_J1,ref_J2.
void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records);

/// FNV-1a of a byte string, hex-formatted; used to stamp outputs with the
/// configuration they came from.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace nlperim
