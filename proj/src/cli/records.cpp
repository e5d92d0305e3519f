#include "cli/records.hpp"

namespace dirac_rm::cli {

namespace {

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string csv_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

}  // namespace

void write_record_json(JsonWriter& w, const SpectrumRecord& rec) {
  const BoundState& s = rec.state;
  w.begin_object();
  w.field("n", s.n);
  w.field("kappa", s.kappa);
  w.field("energy_re", s.energy.real());
  w.field("energy_im", s.energy.imag());
  w.field("beta", s.beta.real());
  w.field("lambda_re", s.lambda.real());
  w.field("lambda_im", s.lambda.imag());
  w.key("flags").begin_object();
  w.field("beta_real", s.flags.beta_real);
  w.field("node", s.flags.node_condition);
  w.field("decay", s.flags.decay);
  w.field("restrictions", s.flags.restrictions);
  w.end_object();
  w.field("residual", s.residual);
  if (rec.oracle_energy) w.field("oracle_energy", *rec.oracle_energy);
  if (rec.oracle_delta) w.field("oracle_delta", *rec.oracle_delta);
  w.end_object();
}

void write_records_json(JsonWriter& w, const std::vector<SpectrumRecord>& recs) {
  w.begin_array();
  for (const auto& r : recs) write_record_json(w, r);
  w.end_array();
}

std::string spectrum_csv_header(const std::vector<std::string>& prefix) {
  std::string out;
  for (const auto& p : prefix) out += p + ",";
  out +=
      "n,kappa,energy_re,energy_im,beta,lambda_re,lambda_im,beta_real,node,decay,restrictions,"
      "residual,oracle_energy,oracle_delta";
  return out;
}

void write_record_csv(std::ostream& os, const SpectrumRecord& rec,
                      const std::vector<std::string>& prefix) {
  const BoundState& s = rec.state;
  for (const auto& p : prefix) os << p << ',';
  os << s.n << ',' << s.kappa << ',' << format_double(s.energy.real()) << ','
     << format_double(s.energy.imag()) << ',' << format_double(s.beta.real()) << ','
     << format_double(s.lambda.real()) << ',' << format_double(s.lambda.imag()) << ','
     << csv_bool(s.flags.beta_real) << ',' << csv_bool(s.flags.node_condition) << ','
     << csv_bool(s.flags.decay) << ',' << csv_bool(s.flags.restrictions) << ','
     << format_double(s.residual) << ',' << csv_optional(rec.oracle_energy) << ','
     << csv_optional(rec.oracle_delta) << '\n';
}

void write_samples_csv(std::ostream& os, const SpinorSet& set) {
  os << "r,F_re,F_im,G_re,G_im\n";
  for (const auto& s : set.samples) {
    os << format_double(s.r) << ',' << format_double(s.f.real()) << ','
       << format_double(s.f.imag()) << ',' << format_double(s.g.real()) << ','
       << format_double(s.g.imag()) << '\n';
  }
}

void write_sidecar_json(std::ostream& os, const SpinorSet& set, bool normalized,
                        const std::string& note) {
  JsonWriter w(os);
  w.begin_object();
  w.field("norm", set.norm);
  w.field("normalization", set.normalization);
  w.field("normalized", normalized);
  w.field("mode", to_string(set.mode));
  w.field("geometry", to_string(set.geometry));
  w.field("n", set.state.n);
  w.field("energy_re", set.state.energy.real());
  w.field("energy_im", set.state.energy.imag());
  w.field("points", static_cast<int>(set.samples.size()));
  w.key("residual_report").begin_object();
  w.field("ode", set.residual_report.ode);
  w.field("coupled", set.residual_report.coupled);
  w.end_object();
  if (!note.empty()) w.field("note", note);
  w.end_object();
}

}  // namespace dirac_rm::cli
