#include "weilab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "aut_constraints.hpp"
#include "errors.hpp"
#include "render.hpp"
#include "scan.hpp"
#include "weil.hpp"

struct weilab_algebra {
  weilab::WeilAlgebra algebra;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
weilab_status guard(Fn&& fn) {
  try {
    fn();
    return WEILAB_OK;
  } catch (const weilab::ParseError& e) {
    g_last_error = e.what();
    return WEILAB_ERR_PARSE;
  } catch (const weilab::NonLocalError& e) {
    g_last_error = e.what();
    return WEILAB_ERR_DOMAIN;
  } catch (const weilab::ContextMismatch& e) {
    g_last_error = e.what();
    return WEILAB_ERR_DOMAIN;
  } catch (const weilab::UsageError& e) {
    g_last_error = e.what();
    return WEILAB_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WEILAB_ERR_INTERNAL;
  }
}

template <class Fn>
weilab_status report(char** out, Fn&& fn) {
  if (!out) {
    g_last_error = "output pointer is NULL";
    return WEILAB_ERR_USAGE;
  }
  *out = nullptr;
  return guard([&] {
    std::string text = fn();
    *out = dup_string(text);
    if (!*out) throw std::bad_alloc();
  });
}

template <class Fn>
weilab_status areport(const weilab_algebra* a, char** out, Fn&& fn) {
  if (!a) {
    g_last_error = "NULL algebra handle";
    return WEILAB_ERR_USAGE;
  }
  return report(out, std::forward<Fn>(fn));
}

std::optional<uint32_t> bound_arg(uint32_t bound) {
  if (bound == 0) return std::nullopt;
  return bound;
}

}  // namespace

extern "C" {

const char* weilab_last_error(void) { return g_last_error.c_str(); }

void weilab_string_free(char* s) { std::free(s); }

weilab_status weilab_algebra_open(const char* path, weilab_algebra** out) {
  if (!path || !out) {
    g_last_error = "NULL argument";
    return WEILAB_ERR_USAGE;
  }
  *out = nullptr;
  return guard([&] {
    auto spec = weilab::load_algebra_spec(path);
    *out = new weilab_algebra{weilab::WeilAlgebra::build(std::move(spec))};
  });
}

weilab_status weilab_algebra_parse(const char* text, const char* name,
                                   weilab_algebra** out) {
  if (!text || !out) {
    g_last_error = "NULL argument";
    return WEILAB_ERR_USAGE;
  }
  *out = nullptr;
  return guard([&] {
    auto spec = weilab::parse_algebra_spec(text, name ? name : "algebra");
    *out = new weilab_algebra{weilab::WeilAlgebra::build(std::move(spec))};
  });
}

void weilab_algebra_close(weilab_algebra* a) { delete a; }

size_t weilab_algebra_dim(const weilab_algebra* a) {
  return a ? a->algebra.dim() : 0;
}

weilab_status weilab_info(const weilab_algebra* a, int json, char** out) {
  return areport(a, out, [&] { return weilab::info_report(a->algebra, json); });
}

weilab_status weilab_basis(const weilab_algebra* a, int json, char** out) {
  return areport(a, out, [&] { return weilab::basis_report(a->algebra, json); });
}

weilab_status weilab_multable(const weilab_algebra* a, int json, char** out) {
  return areport(a, out, [&] { return weilab::multable_report(a->algebra, json); });
}

weilab_status weilab_nf(const weilab_algebra* a, const char* poly, int json,
                        char** out) {
  if (!poly) {
    g_last_error = "NULL polynomial";
    return WEILAB_ERR_USAGE;
  }
  return areport(a, out,
                 [&] { return weilab::nf_report(a->algebra, poly, json); });
}

weilab_status weilab_socle(const weilab_algebra* a, int json, char** out) {
  return areport(a, out, [&] { return weilab::socle_report(a->algebra, json); });
}

weilab_status weilab_classify(const weilab_algebra* a, uint32_t weight_bound,
                              int use_order_theorem, int json, char** out) {
  return areport(a, out, [&] {
    return weilab::classify_report(a->algebra, bound_arg(weight_bound),
                                   use_order_theorem != 0, json);
  });
}

weilab_status weilab_weights(const weilab_algebra* a, uint32_t weight_bound,
                             int json, char** out) {
  return areport(a, out, [&] {
    return weilab::weights_report(a->algebra, bound_arg(weight_bound), json);
  });
}

weilab_status weilab_derivations(const weilab_algebra* a, int json,
                                 char** out) {
  return areport(a, out,
                 [&] { return weilab::derivations_report(a->algebra, json); });
}

weilab_status weilab_fixed(const weilab_algebra* a, int json, char** out) {
  return areport(a, out, [&] { return weilab::fixed_report(a->algebra, json); });
}

weilab_status weilab_aut_verify(const weilab_algebra* a, const char* map,
                                int json, char** out) {
  if (!map) {
    g_last_error = "NULL map";
    return WEILAB_ERR_USAGE;
  }
  return areport(a, out, [&] {
    return weilab::aut_verify_report(a->algebra, map, json);
  });
}

weilab_status weilab_aut_constraints(const weilab_algebra* a, int json,
                                     char** out) {
  return areport(a, out, [&] {
    return weilab::aut_constraints_report(a->algebra, json);
  });
}

weilab_status weilab_aut_constraints_export(const weilab_algebra* a,
                                            char** out) {
  return areport(a, out, [&] {
    return weilab::export_constraints(weilab::generate_constraints(a->algebra));
  });
}

weilab_status weilab_conjecture(const weilab_algebra* a, int json, char** out) {
  return areport(a, out,
                 [&] { return weilab::conjecture_report(a->algebra, json); });
}

void weilab_scan_config_init(weilab_scan_config* config) {
  if (!config) return;
  *config = weilab_scan_config{};
  config->k_min = config->k_max = 2;
  config->r_min = config->r_max = 4;
  config->gens_min = 1;
  config->gens_max = 3;
  config->terms_min = 1;
  config->terms_max = 3;
  config->count = 10;
  config->min_degree = 2;
}

weilab_status weilab_scan(const weilab_scan_config* config, int json,
                          char** out) {
  if (!config) {
    g_last_error = "NULL config";
    return WEILAB_ERR_USAGE;
  }
  return report(out, [&] {
    weilab::ScanConfig cfg;
    cfg.seed = config->seed;
    cfg.k_min = config->k_min;
    cfg.k_max = config->k_max;
    cfg.r_min = config->r_min;
    cfg.r_max = config->r_max;
    cfg.gens_min = config->gens_min;
    cfg.gens_max = config->gens_max;
    cfg.terms_min = config->terms_min;
    cfg.terms_max = config->terms_max;
    cfg.count = config->count;
    cfg.weight_bound = bound_arg(config->weight_bound);
    cfg.dim_cap = config->dim_cap;
    cfg.homogeneous = config->homogeneous != 0;
    cfg.min_degree = config->min_degree;
    cfg.include_timing = config->include_timing != 0;
    if (config->pool && config->pool_len > 0)
      cfg.coefficient_pool.assign(config->pool,
                                  config->pool + config->pool_len);
    return weilab::scan_report(weilab::scan_run(cfg), json);
  });
}

}  // extern "C"
