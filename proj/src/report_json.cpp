#include "projdim/dimension.hpp"

#include <json.hpp>

namespace projdim {

namespace {

nlohmann::json enclosure_json(const Enclosure& e) { return {{"lower", e.lower}, {"upper", e.upper}}; }

}  // namespace

std::string to_json(const DimensionReport& r, int indent) {
    nlohmann::ordered_json j;
    j["slope"] = {{"p", r.slope.p()}, {"q", r.slope.q()}};
    j["N"] = enclosure_json(r.N);
    j["P"] = enclosure_json(r.P);
    j["pressure_gap"] = r.pressure_gap;
    j["h_rw"] = r.h_rw;
    j["dim_estimate"] = r.dim_estimate;
    j["dim_lower"] = r.dim_lower;
    j["dim_lower_from_N"] = r.dim_lower_from_N;
    j["fourier_nondecay"] = r.fourier_nondecay;
    j["singular"] = r.singular;
    j["consistent"] = r.consistent;
    j["entropy"] = {{"H", r.entropy.H},
                    {"per_symbol", r.entropy.per_symbol},
                    {"increments", r.entropy.increments},
                    {"lyapunov", r.entropy.lyapunov}};
    j["fourier"] = {{"modulus_at_q", r.fourier.modulus_at_q},
                    {"max_deviation", r.fourier.max_deviation},
                    {"n_max", r.fourier.n_max},
                    {"tail_terms", r.fourier.tail_terms}};
    j["metadata"] = {{"version", kVersion},
                     {"dim_lower_formula", "(log 9 - P.upper) / log 2"},
                     {"dim_lower_alternative", "P / log 2 (not used)"},
                     {"fourier_sequence", "eta_N = q * 2^N, scale 2^-n"}};
    return j.dump(indent);
}

}  // namespace projdim
