#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/json_writer.hpp"
#include "dirac_rm/spectrum.hpp"
#include "dirac_rm/wavefunctions.hpp"

namespace dirac_rm::cli {

struct SpectrumRecord {
  BoundState state;
  std::optional<double> oracle_energy;
  std::optional<double> oracle_delta;
};

void write_record_json(JsonWriter& w, const SpectrumRecord& rec);
void write_records_json(JsonWriter& w, const std::vector<SpectrumRecord>& recs);

/// Header is `n,kappa,energy_re,...`; `prefix` columns are prepended
/// (used by sweep and special).
std::string spectrum_csv_header(const std::vector<std::string>& prefix = {});
void write_record_csv(std::ostream& os, const SpectrumRecord& rec,
                      const std::vector<std::string>& prefix = {});

/// `r,F_re,F_im,G_re,G_im`, one row per sample.
void write_samples_csv(std::ostream& os, const SpinorSet& set);
void write_sidecar_json(std::ostream& os, const SpinorSet& set, bool normalized,
                        const std::string& note);

}  // namespace dirac_rm::cli
