// C interface. Every entry point clears the thread-local error/warning
// strings, translates exceptions into cb_status codes, and never lets one
// escape. Handles own deep copies; no pointer returned here aliases caller
// memory except the documented zero-copy views.

#include "cbound.h"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/budget.hpp"
#include "core/collapse.hpp"
#include "core/config.hpp"
#include "core/constants.hpp"
#include "core/constraint.hpp"
#include "core/csvio.hpp"
#include "core/errors.hpp"
#include "core/fits.hpp"
#include "core/simulate.hpp"
#include "core/spectrum.hpp"
#include "core/test_mass.hpp"
#include "core/version.hpp"
#include "core/welch.hpp"

struct cb_mass {
  cbound::TestMass v;
};
struct cb_config {
  cbound::ConfigDocument v;
};
struct cb_device {
  cbound::DeviceConfig v;
};
struct cb_spectrum {
  cbound::NoiseSpectrum v;
};
struct cb_curve {
  cbound::ExclusionCurve v;
};
struct cb_budget {
  cbound::BudgetReport v;
};
struct cb_run {
  cbound::SimulationRun v;
  std::vector<double> time;  // set for ingested files, else derived from dt
};
struct cb_runs {
  std::vector<cbound::BrownianRunRecord> v;
};

namespace {

thread_local std::string t_error;
thread_local std::string t_warning;

cb_status map_code(cbound::ErrorCode code) {
  switch (code) {
    case cbound::ErrorCode::InvalidArgument: return CB_E_INVALID_ARGUMENT;
    case cbound::ErrorCode::DomainError: return CB_E_DOMAIN;
    case cbound::ErrorCode::RegimeError: return CB_E_REGIME;
    case cbound::ErrorCode::ParseError: return CB_E_PARSE;
    case cbound::ErrorCode::IoError: return CB_E_IO;
    case cbound::ErrorCode::NumericError: return CB_E_NUMERIC;
    case cbound::ErrorCode::MissingContext: return CB_E_MISSING_CONTEXT;
  }
  return CB_E_UNKNOWN;
}

template <typename Fn>
cb_status guarded(Fn&& fn) noexcept {
  t_error.clear();
  t_warning.clear();
  try {
    return fn();
  } catch (const cbound::Error& e) {
    t_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return CB_E_UNKNOWN;
  } catch (const std::exception& e) {
    t_error = e.what();
    return CB_E_UNKNOWN;
  } catch (...) {
    t_error = "unknown failure";
    return CB_E_UNKNOWN;
  }
}

cb_status fail(cb_status code, const std::string& msg) {
  t_error = msg;
  return code;
}

cb_status need(const void*, const char* what) {
  return fail(CB_E_INVALID_ARGUMENT, std::string("null ") + what);
}

bool all(std::initializer_list<const void*> ps) {
  for (const void* p : ps)
    if (!p) return false;
  return true;
}

cbound::PhysicalConstants with_m0(double m0_kg) {
  cbound::PhysicalConstants pc;
  if (m0_kg > 0.0) pc.m0 = m0_kg;
  return pc;
}

void surface(const cbound::RegimeStatus& status) {
  if (status.warning) t_warning = status.message;
}

cbound::ArtifactMeta convert_meta(const cb_artifact_meta* meta) {
  cbound::ArtifactMeta out;
  if (!meta) return out;
  if (meta->config_hash) out.config_hash = meta->config_hash;
  if (meta->has_seed) {
    out.seed = meta->seed;
    out.prng = meta->prng ? meta->prng : cbound::prng_id;
  } else if (meta->prng) {
    out.prng = meta->prng;
  }
  return out;
}

cb_status copy_hex(const std::string& hex, char* buf, size_t buflen) {
  if (!buf) return need(buf, "buffer");
  if (buflen < hex.size() + 1)
    return fail(CB_E_INVALID_ARGUMENT, "buffer too small for digest");
  std::memcpy(buf, hex.c_str(), hex.size() + 1);
  return CB_OK;
}

bool kind_from_c(cb_spectrum_kind kind, cbound::SpectrumKind* out) {
  switch (kind) {
    case CB_KIND_ACCEL_PSD: *out = cbound::SpectrumKind::AccelPsd; return true;
    case CB_KIND_FORCE_PSD: *out = cbound::SpectrumKind::ForcePsd; return true;
    case CB_KIND_TORQUE_PSD: *out = cbound::SpectrumKind::TorquePsd; return true;
    case CB_KIND_DISPLACEMENT_PSD:
      *out = cbound::SpectrumKind::DisplacementPsd;
      return true;
    case CB_KIND_ANGLE_PSD: *out = cbound::SpectrumKind::AnglePsd; return true;
  }
  return false;
}

cb_spectrum_kind kind_to_c(cbound::SpectrumKind kind) {
  switch (kind) {
    case cbound::SpectrumKind::AccelPsd: return CB_KIND_ACCEL_PSD;
    case cbound::SpectrumKind::ForcePsd: return CB_KIND_FORCE_PSD;
    case cbound::SpectrumKind::TorquePsd: return CB_KIND_TORQUE_PSD;
    case cbound::SpectrumKind::DisplacementPsd: return CB_KIND_DISPLACEMENT_PSD;
    case cbound::SpectrumKind::AnglePsd: return CB_KIND_ANGLE_PSD;
  }
  return CB_KIND_ACCEL_PSD;
}

}  // namespace

extern "C" {

const char* cb_version(void) { return cbound::version_string; }
const char* cb_constants_set(void) { return cbound::constants_set_id; }
const char* cb_prng_id(void) { return cbound::prng_id; }

cb_status cb_constant(const char* name, double* value) {
  return guarded([&]() -> cb_status {
    if (!all({name, value})) return need(nullptr, "argument");
    const std::string key = name;
    namespace k = cbound::constants;
    if (key == "hbar") *value = k::hbar;
    else if (key == "G") *value = k::G;
    else if (key == "k_B") *value = k::k_B;
    else if (key == "c") *value = k::c_light;
    else if (key == "amu") *value = k::amu;
    else if (key == "m_proton") *value = k::m_proton;
    else return fail(CB_E_INVALID_ARGUMENT, "unknown constant: " + key);
    return CB_OK;
  });
}

const char* cb_last_error(void) { return t_error.c_str(); }
const char* cb_last_warning(void) { return t_warning.c_str(); }

cb_status cb_hash_hex(const void* data, size_t size, char* buf, size_t buflen) {
  return guarded([&]() -> cb_status {
    if (!data && size > 0) return need(data, "data");
    const std::string_view bytes(static_cast<const char*>(data), size);
    return copy_hex(cbound::to_hex16(cbound::fnv1a64(bytes)), buf, buflen);
  });
}

/* ---- test mass ------------------------------------------------------ */

cb_status cb_mass_create(double mass_kg, double density_kg_m3, double side_m,
                         double lattice_m, cb_mass** out) {
  return guarded([&]() -> cb_status {
    if (!out) return need(out, "output handle");
    cbound::TestMass tm =
        cbound::make_test_mass(mass_kg, density_kg_m3, side_m, lattice_m);
    if (auto warn = tm.consistency_warning()) t_warning = *warn;
    *out = new cb_mass{tm};
    return CB_OK;
  });
}

cb_status cb_mass_profile(const char* name, cb_mass** out) {
  return guarded([&]() -> cb_status {
    if (!all({name, out})) return need(nullptr, "argument");
    *out = new cb_mass{cbound::profile_mass(name)};
    return CB_OK;
  });
}

void cb_mass_free(cb_mass* m) { delete m; }

cb_status cb_mass_get(const cb_mass* m, const char* field, double* value) {
  return guarded([&]() -> cb_status {
    if (!all({m, field, value})) return need(nullptr, "argument");
    const std::string key = field;
    if (key == "mass") *value = m->v.mass;
    else if (key == "density") *value = m->v.density;
    else if (key == "side") *value = m->v.side;
    else if (key == "lattice") *value = m->v.lattice_a;
    else return fail(CB_E_INVALID_ARGUMENT, "unknown mass field: " + key);
    return CB_OK;
  });
}

/* ---- configuration --------------------------------------------------- */

cb_status cb_config_load(const char* path, cb_config** out) {
  return guarded([&]() -> cb_status {
    if (!all({path, out})) return need(nullptr, "argument");
    *out = new cb_config{cbound::load_config(path)};
    return CB_OK;
  });
}

cb_status cb_config_profile(const char* name, cb_config** out) {
  return guarded([&]() -> cb_status {
    if (!all({name, out})) return need(nullptr, "argument");
    *out = new cb_config{cbound::config_from_profile(name)};
    return CB_OK;
  });
}

void cb_config_free(cb_config* c) { delete c; }

cb_status cb_config_mass(const cb_config* c, cb_mass** out) {
  return guarded([&]() -> cb_status {
    if (!all({c, out})) return need(nullptr, "argument");
    *out = new cb_mass{c->v.mass};
    return CB_OK;
  });
}

cb_status cb_config_device(const cb_config* c, cb_device** out) {
  return guarded([&]() -> cb_status {
    if (!all({c, out})) return need(nullptr, "argument");
    if (!c->v.device)
      return fail(CB_E_MISSING_CONTEXT,
                  "configuration describes no device (mass-only profile)");
    *out = new cb_device{*c->v.device};
    return CB_OK;
  });
}

cb_status cb_config_m0(const cb_config* c, double* m0_kg) {
  return guarded([&]() -> cb_status {
    if (!all({c, m0_kg})) return need(nullptr, "argument");
    *m0_kg = c->v.consts.m0;
    return CB_OK;
  });
}

cb_status cb_config_hash(const cb_config* c, char* buf, size_t buflen) {
  return guarded([&]() -> cb_status {
    if (!c) return need(c, "config");
    return copy_hex(c->v.hash_hex, buf, buflen);
  });
}

void cb_device_free(cb_device* d) { delete d; }

cb_status cb_device_get(const cb_device* d, const char* field, double* value) {
  return guarded([&]() -> cb_status {
    if (!all({d, field, value})) return need(nullptr, "argument");
    const std::string key = field;
    const cbound::DeviceConfig& cfg = d->v;
    if (key == "arm_length") *value = cfg.arm_length;
    else if (key == "omega_m") *value = cfg.omega_m;
    else if (key == "quality") *value = cfg.quality;
    else if (key == "temperature") *value = cfg.temperature;
    else if (key == "temperature_asd") *value = cfg.temperature_asd;
    else if (key == "pressure") *value = cfg.air_pressure;
    else if (key == "laser_power") *value = cfg.laser_power;
    else if (key == "wavelength") *value = cfg.laser_wavelength;
    else if (key == "rin_1mhz") *value = cfg.rin_1mhz;
    else if (key == "freq_noise_1mhz") *value = cfg.freq_noise_1mhz;
    else if (key == "alpha_e") *value = cfg.alpha_e;
    else if (key == "cmrr_seismic") *value = cfg.cmrr_seismic;
    else if (key == "cm_residual_thermo") *value = cfg.cm_residual_thermo;
    else if (key == "rin_suppression") *value = cfg.rin_suppression;
    else if (key == "arm_mismatch") *value = cfg.arm_mismatch;
    else if (key == "gas_molecule_mass") *value = cfg.gas_molecule_mass;
    else if (key == "shot_noise_asd") *value = cfg.shot_noise_asd;
    else if (key == "effective_mass") *value = cfg.effective_mass();
    else if (key == "lever_arm") *value = cfg.lever_arm();
    else if (key == "moment_of_inertia") *value = cfg.moment_of_inertia();
    else return fail(CB_E_INVALID_ARGUMENT, "unknown device field: " + key);
    return CB_OK;
  });
}

cb_status cb_device_noise(const cb_device* d, const char* component,
                          double f_hz, int view, double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({d, component, psd})) return need(nullptr, "argument");
    if (view != 0 && view != 1)
      return fail(CB_E_INVALID_ARGUMENT, "view must be 0 (force) or 1 (disp)");
    const cbound::DeviceConfig& cfg = d->v;
    const std::string key = component;
    // Natively force-referred unless noted; converted through |chi|^2.
    double value = 0.0;
    bool native_force = true;
    if (key == "suspension_thermal") value = cbound::thermal_force_psd(cfg, f_hz);
    else if (key == "gas_damping") value = cbound::gas_damping_psd(cfg, f_hz);
    else if (key == "laser_radiation_pressure")
      value = cbound::laser_noise_psd(cfg, f_hz).radiation_pressure_force_psd;
    else if (key == "laser_frequency_sensing") {
      value = cbound::laser_noise_psd(cfg, f_hz).frequency_sensing_disp_psd;
      native_force = false;
    } else if (key == "thermoelastic") {
      value = cbound::thermoelastic_psd(cfg, f_hz);
      native_force = false;
    } else if (key == "seismic_rotation")
      value = cbound::seismic_rotation_psd(cfg, f_hz);
    else if (key == "sql")
      value = cbound::sql_force_psd(cfg.effective_mass(), f_hz);
    else
      return fail(CB_E_INVALID_ARGUMENT, "unknown noise component: " + key);
    const bool want_force = view == 0;
    if (native_force != want_force) {
      const double chi2 = std::norm(cbound::susceptibility(cfg, f_hz));
      value = want_force ? value / chi2 : value * chi2;
    }
    *psd = value;
    return CB_OK;
  });
}

/* ---- localization models -------------------------------------------- */

cb_status cb_csl_geometry_factor(const cb_mass* m, double r_m, double m0_kg,
                                 double* alpha) {
  return guarded([&]() -> cb_status {
    if (!all({m, alpha})) return need(nullptr, "argument");
    cbound::RegimeStatus status;
    *alpha = cbound::csl_geometry_factor(m->v, r_m, with_m0(m0_kg), &status);
    surface(status);
    return CB_OK;
  });
}

cb_status cb_csl_force_psd(const cb_mass* m, double lambda_per_s, double r_m,
                           double m0_kg, double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({m, psd})) return need(nullptr, "argument");
    cbound::RegimeStatus status;
    const cbound::CslParams p{lambda_per_s, r_m};
    *psd = cbound::csl_force_psd(p, m->v, with_m0(m0_kg), &status);
    surface(status);
    return CB_OK;
  });
}

cb_status cb_dp_force_psd(const cb_mass* m, double sigma_m, double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({m, psd})) return need(nullptr, "argument");
    *psd = cbound::dp_force_psd(cbound::DpParams{sigma_m}, m->v);
    return CB_OK;
  });
}

cb_status cb_csl_r_valid_max(const cb_mass* m, double* r_m) {
  return guarded([&]() -> cb_status {
    if (!all({m, r_m})) return need(nullptr, "argument");
    *r_m = cbound::csl_r_valid_max(m->v);
    return CB_OK;
  });
}

cb_status cb_csl_lambda_bound(const cb_mass* m, double sa_level, double r_m,
                              double m0_kg, double* lambda) {
  return guarded([&]() -> cb_status {
    if (!all({m, lambda})) return need(nullptr, "argument");
    cbound::RegimeStatus status;
    *lambda =
        cbound::csl_lambda_bound(sa_level, m->v, r_m, with_m0(m0_kg), &status);
    surface(status);
    return CB_OK;
  });
}

cb_status cb_dp_sigma_bound(const cb_mass* m, double sa_level, double* sigma) {
  return guarded([&]() -> cb_status {
    if (!all({m, sigma})) return need(nullptr, "argument");
    *sigma = cbound::dp_sigma_bound(sa_level, m->v);
    return CB_OK;
  });
}

/* ---- exclusion curves ------------------------------------------------ */

cb_status cb_exclusion_curve(const cb_mass* m, double sa_level, double r_min,
                             double r_max, size_t n_points,
                             const char* source_label, double m0_kg,
                             cb_curve** out) {
  return guarded([&]() -> cb_status {
    if (!all({m, out})) return need(nullptr, "argument");
    const std::vector<double> grid = cbound::log_grid(r_min, r_max, n_points);
    cbound::ExclusionCurve curve =
        cbound::exclusion_curve(sa_level, m->v, grid,
                                source_label ? source_label : "", with_m0(m0_kg));
    if (curve.dropped > 0) t_warning = curve.report;
    *out = new cb_curve{std::move(curve)};
    return CB_OK;
  });
}

void cb_curve_free(cb_curve* c) { delete c; }

size_t cb_curve_size(const cb_curve* c) { return c ? c->v.r.size() : 0; }

cb_status cb_curve_point(const cb_curve* c, size_t i, double* r_m,
                         double* lambda_per_s) {
  return guarded([&]() -> cb_status {
    if (!all({c, r_m, lambda_per_s})) return need(nullptr, "argument");
    if (i >= c->v.r.size())
      return fail(CB_E_INVALID_ARGUMENT, "curve index out of range");
    *r_m = c->v.r[i];
    *lambda_per_s = c->v.lambda_max[i];
    return CB_OK;
  });
}

cb_status cb_curve_r_valid_max(const cb_curve* c, double* r_m) {
  return guarded([&]() -> cb_status {
    if (!all({c, r_m})) return need(nullptr, "argument");
    *r_m = c->v.r_valid_max;
    return CB_OK;
  });
}

size_t cb_curve_dropped(const cb_curve* c) { return c ? c->v.dropped : 0; }

const char* cb_curve_source(const cb_curve* c) {
  return c ? c->v.source_label.c_str() : "";
}

cb_status cb_curve_excludes(const cb_curve* c, double lambda_per_s, double r_m,
                            int* excluded) {
  return guarded([&]() -> cb_status {
    if (!all({c, excluded})) return need(nullptr, "argument");
    *excluded =
        cbound::excludes(c->v, cbound::CslParams{lambda_per_s, r_m}) ? 1 : 0;
    return CB_OK;
  });
}

cb_status cb_curve_write_csv(const cb_curve* c, const char* path,
                             const cb_artifact_meta* meta) {
  return guarded([&]() -> cb_status {
    if (!all({c, path})) return need(nullptr, "argument");
    cbound::write_curve_csv(path, c->v, convert_meta(meta));
    return CB_OK;
  });
}

size_t cb_benchmark_count(void) { return cbound::benchmark_points().size(); }

cb_status cb_benchmark_get(size_t i, const char** name, double* lambda_per_s,
                           double* r_m, double* lambda_log10_halfwidth) {
  return guarded([&]() -> cb_status {
    const auto points = cbound::benchmark_points();
    if (i >= points.size())
      return fail(CB_E_INVALID_ARGUMENT, "benchmark index out of range");
    const cbound::BenchmarkPoint& p = points[i];
    if (name) *name = p.name;
    if (lambda_per_s) *lambda_per_s = p.lambda;
    if (r_m) *r_m = p.r;
    if (lambda_log10_halfwidth) *lambda_log10_halfwidth = p.lambda_log10_halfwidth;
    return CB_OK;
  });
}

/* ---- noise budget ----------------------------------------------------- */

cb_status cb_budget_build(const cb_device* d, double f_min, double f_max,
                          size_t n_points, cb_budget** out) {
  return guarded([&]() -> cb_status {
    if (!all({d, out})) return need(nullptr, "argument");
    *out = new cb_budget{cbound::build_budget(d->v, f_min, f_max, n_points)};
    return CB_OK;
  });
}

void cb_budget_free(cb_budget* b) { delete b; }

size_t cb_budget_points(const cb_budget* b) { return b ? b->v.freqs.size() : 0; }

size_t cb_budget_component_count(const cb_budget* b) {
  return b ? b->v.components.size() : 0;
}

const char* cb_budget_component_name(const cb_budget* b, size_t comp) {
  if (!b || comp >= b->v.components.size()) return "";
  return b->v.components[comp].name.c_str();
}

cb_status cb_budget_frequency(const cb_budget* b, size_t i, double* f_hz) {
  return guarded([&]() -> cb_status {
    if (!all({b, f_hz})) return need(nullptr, "argument");
    if (i >= b->v.freqs.size())
      return fail(CB_E_INVALID_ARGUMENT, "frequency index out of range");
    *f_hz = b->v.freqs[i];
    return CB_OK;
  });
}

cb_status cb_budget_value(const cb_budget* b, size_t comp, size_t i, int view,
                          double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({b, psd})) return need(nullptr, "argument");
    if (comp >= b->v.components.size())
      return fail(CB_E_INVALID_ARGUMENT, "component index out of range");
    const cbound::BudgetComponent& c = b->v.components[comp];
    if (i >= c.force_psd.size())
      return fail(CB_E_INVALID_ARGUMENT, "frequency index out of range");
    if (view != 0 && view != 1)
      return fail(CB_E_INVALID_ARGUMENT, "view must be 0 (force) or 1 (disp)");
    *psd = view == 0 ? c.force_psd[i] : c.disp_psd[i];
    return CB_OK;
  });
}

cb_status cb_budget_total(const cb_budget* b, size_t i, int view,
                          int calibrated_residual, double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({b, psd})) return need(nullptr, "argument");
    if (i >= b->v.freqs.size())
      return fail(CB_E_INVALID_ARGUMENT, "frequency index out of range");
    if (view != 0 && view != 1)
      return fail(CB_E_INVALID_ARGUMENT, "view must be 0 (force) or 1 (disp)");
    const cbound::BudgetReport& r = b->v;
    if (calibrated_residual)
      *psd = view == 0 ? r.residual_force[i] : r.residual_disp[i];
    else
      *psd = view == 0 ? r.total_force[i] : r.total_disp[i];
    return CB_OK;
  });
}

size_t cb_budget_note_count(const cb_budget* b) {
  return b ? b->v.notes.size() : 0;
}

const char* cb_budget_note(const cb_budget* b, size_t i) {
  if (!b || i >= b->v.notes.size()) return "";
  return b->v.notes[i].c_str();
}

cb_status cb_budget_write_csv(const cb_budget* b, const char* path,
                              const cb_artifact_meta* meta) {
  return guarded([&]() -> cb_status {
    if (!all({b, path})) return need(nullptr, "argument");
    cbound::write_budget_csv(path, b->v, convert_meta(meta));
    return CB_OK;
  });
}

/* ---- spectra ---------------------------------------------------------- */

cb_status cb_spectrum_create(const double* freqs_hz, const double* psd, size_t n,
                             cb_spectrum_kind kind, cb_spectrum** out) {
  return guarded([&]() -> cb_status {
    if (!all({freqs_hz, psd, out})) return need(nullptr, "argument");
    cbound::SpectrumKind k;
    if (!kind_from_c(kind, &k))
      return fail(CB_E_INVALID_ARGUMENT, "unknown spectrum kind");
    *out = new cb_spectrum{cbound::NoiseSpectrum(
        std::vector<double>(freqs_hz, freqs_hz + n),
        std::vector<double>(psd, psd + n), k)};
    return CB_OK;
  });
}

void cb_spectrum_free(cb_spectrum* s) { delete s; }

size_t cb_spectrum_size(const cb_spectrum* s) { return s ? s->v.size() : 0; }

cb_status cb_spectrum_get_kind(const cb_spectrum* s, cb_spectrum_kind* kind) {
  return guarded([&]() -> cb_status {
    if (!all({s, kind})) return need(nullptr, "argument");
    *kind = kind_to_c(s->v.kind());
    return CB_OK;
  });
}

cb_status cb_spectrum_point(const cb_spectrum* s, size_t i, double* f_hz,
                            double* psd) {
  return guarded([&]() -> cb_status {
    if (!all({s, f_hz, psd})) return need(nullptr, "argument");
    if (i >= s->v.size())
      return fail(CB_E_INVALID_ARGUMENT, "spectrum index out of range");
    *f_hz = s->v.freqs()[i];
    *psd = s->v.values()[i];
    return CB_OK;
  });
}

cb_status cb_spectrum_convert(const cb_spectrum* s, cb_spectrum_kind target,
                              const cb_convert_context* ctx, cb_spectrum** out) {
  return guarded([&]() -> cb_status {
    if (!all({s, out})) return need(nullptr, "argument");
    cbound::SpectrumKind k;
    if (!kind_from_c(target, &k))
      return fail(CB_E_INVALID_ARGUMENT, "unknown spectrum kind");
    cbound::ConversionContext cc;
    if (ctx) {
      if (ctx->has_mass) cc.mass = ctx->mass_kg;
      if (ctx->has_lever_arm) cc.lever_arm = ctx->lever_arm_m;
      if (ctx->has_oscillator)
        cc.oscillator = cbound::OscillatorParams{
            ctx->osc_m_eff_kg, ctx->osc_omega_m_rad_s, ctx->osc_quality};
    }
    *out = new cb_spectrum{cbound::convert_spectrum(s->v, k, cc)};
    return CB_OK;
  });
}

cb_status cb_spectrum_read_csv(const char* path, cb_spectrum** out) {
  return guarded([&]() -> cb_status {
    if (!all({path, out})) return need(nullptr, "argument");
    *out = new cb_spectrum{cbound::read_spectrum_csv(path)};
    return CB_OK;
  });
}

cb_status cb_spectrum_write_csv(const cb_spectrum* s, const char* path,
                                const cb_artifact_meta* meta) {
  return guarded([&]() -> cb_status {
    if (!all({s, path})) return need(nullptr, "argument");
    cbound::write_spectrum_csv(path, s->v, convert_meta(meta));
    return CB_OK;
  });
}

/* ---- time-domain simulation and estimation ---------------------------- */

cb_status cb_simulate(double m_eff_kg, double omega_m_rad_s, double quality,
                      double force_psd, double dt_s, uint64_t n, uint64_t seed,
                      cb_run** out) {
  return guarded([&]() -> cb_status {
    if (!out) return need(out, "output handle");
    cbound::SimulationParams params{m_eff_kg, omega_m_rad_s, quality,
                                    force_psd, dt_s,        n,
                                    seed};
    *out = new cb_run{cbound::simulate_oscillator(params), {}};
    return CB_OK;
  });
}

void cb_run_free(cb_run* r) { delete r; }

size_t cb_run_size(const cb_run* r) { return r ? r->v.position.size() : 0; }

cb_status cb_run_dt(const cb_run* r, double* dt_s) {
  return guarded([&]() -> cb_status {
    if (!all({r, dt_s})) return need(nullptr, "argument");
    *dt_s = r->v.params.dt;
    return CB_OK;
  });
}

cb_status cb_run_sample(const cb_run* r, size_t i, double* t_s,
                        double* position_m, double* force_n) {
  return guarded([&]() -> cb_status {
    if (!r) return need(r, "run");
    if (i >= r->v.position.size())
      return fail(CB_E_INVALID_ARGUMENT, "run index out of range");
    if (t_s)
      *t_s = i < r->time.size() ? r->time[i]
                                : static_cast<double>(i + 1) * r->v.params.dt;
    if (position_m) *position_m = r->v.position[i];
    if (force_n) *force_n = i < r->v.force.size() ? r->v.force[i] : 0.0;
    return CB_OK;
  });
}

cb_status cb_run_positions(const cb_run* r, const double** data, size_t* n) {
  return guarded([&]() -> cb_status {
    if (!all({r, data, n})) return need(nullptr, "argument");
    *data = r->v.position.empty() ? nullptr : r->v.position.data();
    *n = r->v.position.size();
    return CB_OK;
  });
}

cb_status cb_run_forces(const cb_run* r, const double** data, size_t* n) {
  return guarded([&]() -> cb_status {
    if (!all({r, data, n})) return need(nullptr, "argument");
    *data = r->v.force.empty() ? nullptr : r->v.force.data();
    *n = r->v.force.size();
    return CB_OK;
  });
}

cb_status cb_run_write_csv(const cb_run* r, const char* path,
                           const cb_artifact_meta* meta) {
  return guarded([&]() -> cb_status {
    if (!all({r, path})) return need(nullptr, "argument");
    cbound::write_run_csv(path, r->v, convert_meta(meta));
    return CB_OK;
  });
}

cb_status cb_run_read_csv(const char* path, cb_run** out) {
  return guarded([&]() -> cb_status {
    if (!all({path, out})) return need(nullptr, "argument");
    cbound::RunSeries series = cbound::read_run_csv(path);
    auto* r = new cb_run{};
    r->v.params = cbound::SimulationParams{};
    r->v.params.dt = series.dt;
    r->v.params.n = series.position.size();
    r->v.position = std::move(series.position);
    r->v.force = std::move(series.force);
    r->time = std::move(series.time);
    *out = r;
    return CB_OK;
  });
}

cb_status cb_welch(const double* x, size_t n, double dt_s, size_t segment_len,
                   double overlap, cb_spectrum_kind kind, cb_spectrum** out) {
  return guarded([&]() -> cb_status {
    if (!all({x, out})) return need(nullptr, "argument");
    cbound::SpectrumKind k;
    if (!kind_from_c(kind, &k))
      return fail(CB_E_INVALID_ARGUMENT, "unknown spectrum kind");
    *out = new cb_spectrum{cbound::welch_psd(std::span<const double>(x, n), dt_s,
                                             segment_len, overlap,
                                             cbound::WindowKind::Hann, k)};
    return CB_OK;
  });
}

/* ---- spectral fits ----------------------------------------------------- */

cb_status cb_decompose(const cb_spectrum* s, int free_exponent,
                       double* white_level, double* colored_coeff,
                       double* exponent, double* residual) {
  return guarded([&]() -> cb_status {
    if (!s) return need(s, "spectrum");
    const cbound::WhiteColoredFit fit =
        cbound::decompose_white_plus_colored(s->v, free_exponent != 0);
    if (white_level) *white_level = fit.white_level;
    if (colored_coeff) *colored_coeff = fit.colored_coeff;
    if (exponent) *exponent = fit.exponent;
    if (residual) *residual = fit.residual;
    return CB_OK;
  });
}

cb_status cb_runs_create(const double* t_days, const double* level,
                         const double* sigma, size_t n, cb_runs** out) {
  return guarded([&]() -> cb_status {
    if (!all({t_days, level, sigma, out})) return need(nullptr, "argument");
    std::vector<cbound::BrownianRunRecord> records;
    records.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      cbound::BrownianRunRecord rec{t_days[i], level[i], sigma[i], ""};
      rec.validate();
      records.push_back(std::move(rec));
    }
    *out = new cb_runs{std::move(records)};
    return CB_OK;
  });
}

cb_status cb_runs_read_csv(const char* path, cb_runs** out) {
  return guarded([&]() -> cb_status {
    if (!all({path, out})) return need(nullptr, "argument");
    *out = new cb_runs{cbound::read_runs_csv(path)};
    return CB_OK;
  });
}

void cb_runs_free(cb_runs* r) { delete r; }

size_t cb_runs_size(const cb_runs* r) { return r ? r->v.size() : 0; }

cb_status cb_fit_decay(const cb_runs* r, double* exponent,
                       double* exponent_stderr, double* amplitude) {
  return guarded([&]() -> cb_status {
    if (!r) return need(r, "records");
    const cbound::PowerLawFit fit = cbound::fit_powerlaw_decay(r->v);
    if (exponent) *exponent = fit.exponent;
    if (exponent_stderr) *exponent_stderr = fit.exponent_stderr;
    if (amplitude) *amplitude = fit.amplitude;
    return CB_OK;
  });
}

}  // extern "C"
