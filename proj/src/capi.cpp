#include "qwedge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qwedge/errors.hpp"
#include "qwedge/experiment.hpp"
#include "qwedge/json_io.hpp"
#include "qwedge/measures.hpp"
#include "qwedge/report.hpp"
#include "qwedge/selftest.hpp"
#include "qwedge/state.hpp"

struct qw_state {
    qwedge::PureState impl;
};

struct qw_report {
    qwedge::Report impl;
    std::string path_name;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) {
    g_last_error = message;
}

qw_status fail(qw_status code, const std::string& message) {
    set_error(message);
    return code;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
qw_status guarded(Fn&& body) {
    try {
        const qw_status status = body();
        if (status == QW_OK) {
            g_last_error.clear();
        }
        return status;
    } catch (const qwedge::DimensionError& e) {
        return fail(QW_ERR_DIMENSION, e.what());
    } catch (const qwedge::DegenerateStateError& e) {
        return fail(QW_ERR_DEGENERATE, e.what());
    } catch (const qwedge::ParseError& e) {
        return fail(QW_ERR_PARSE, e.what());
    } catch (const qwedge::ArgumentError& e) {
        return fail(QW_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QW_ERR_INTERNAL, "unknown error");
    }
}

// Copy into a malloc'd buffer so C callers pair it with qw_string_free.
char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

qwedge::MeasureConfig make_config(qw_norm_mode mode, double norm_tolerance) {
    qwedge::MeasureConfig config;
    config.normalization = mode == QW_NORM_UNIT_MAX ? qwedge::Normalization::unit_max
                                                    : qwedge::Normalization::paper;
    if (norm_tolerance > 0.0) {
        config.norm_tolerance = norm_tolerance;
    }
    return config;
}

qwedge::DimList make_dims(const size_t* dims, size_t count) {
    if (dims == nullptr || count == 0) {
        throw qwedge::ArgumentError("dims pointer is null or empty");
    }
    return qwedge::DimList(dims, dims + count);
}

}  // namespace

extern "C" {

const char* qw_last_error(void) {
    return g_last_error.c_str();
}

void qw_string_free(char* s) {
    std::free(s);
}

qw_status qw_state_from_json(const char* text, qw_state** out) {
    return guarded([&]() -> qw_status {
        if (text == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = new qw_state{qwedge::parse_state_json(text)};
        return QW_OK;
    });
}

qw_status qw_state_from_file(const char* path, qw_state** out) {
    return guarded([&]() -> qw_status {
        if (path == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = new qw_state{qwedge::load_state_file(path)};
        return QW_OK;
    });
}

qw_status qw_state_named(const char* name, qw_state** out) {
    return guarded([&]() -> qw_status {
        if (name == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = new qw_state{qwedge::named_state(name)};
        return QW_OK;
    });
}

qw_status qw_state_random(const size_t* dims, size_t subsystem_count, uint64_t seed,
                          qw_state** out) {
    return guarded([&]() -> qw_status {
        if (out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = new qw_state{qwedge::random_state(make_dims(dims, subsystem_count), seed)};
        return QW_OK;
    });
}

void qw_state_free(qw_state* state) {
    delete state;
}

size_t qw_state_subsystem_count(const qw_state* state) {
    return state == nullptr ? 0 : state->impl.subsystem_count();
}

size_t qw_state_total_dimension(const qw_state* state) {
    return state == nullptr ? 0 : state->impl.size();
}

qw_status qw_state_dims(const qw_state* state, size_t* dims_out, size_t capacity) {
    return guarded([&]() -> qw_status {
        if (state == nullptr || dims_out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        const qwedge::DimList& dims = state->impl.dims();
        if (capacity < dims.size()) {
            return fail(QW_ERR_ARGUMENT, "dims buffer too small");
        }
        std::memcpy(dims_out, dims.data(), dims.size() * sizeof(size_t));
        return QW_OK;
    });
}

double qw_state_norm(const qw_state* state) {
    return state == nullptr ? 0.0 : state->impl.norm();
}

qw_status qw_state_amplitude(const qw_state* state, size_t flat_offset, double* re,
                             double* im) {
    return guarded([&]() -> qw_status {
        if (state == nullptr || re == nullptr || im == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        if (flat_offset >= state->impl.size()) {
            return fail(QW_ERR_ARGUMENT, "amplitude offset out of range");
        }
        const qwedge::Complex a = state->impl[flat_offset];
        *re = a.real();
        *im = a.imag();
        return QW_OK;
    });
}

qw_status qw_state_to_json(const qw_state* state, char** out) {
    return guarded([&]() -> qw_status {
        if (state == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = copy_string(qwedge::state_to_json(state->impl));
        return QW_OK;
    });
}

qw_status qw_measure(const qw_state* state, qw_norm_mode mode, double norm_tolerance,
                     qw_report** out) {
    return guarded([&]() -> qw_status {
        if (state == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        auto report = new qw_report{qwedge::build_report(state->impl,
                                                         make_config(mode, norm_tolerance)),
                                    {}};
        report->path_name = qwedge::to_string(report->impl.measure.path);
        *out = report;
        return QW_OK;
    });
}

void qw_report_free(qw_report* report) {
    delete report;
}

double qw_report_value(const qw_report* report) {
    return report == nullptr ? 0.0 : report->impl.measure.value;
}

double qw_report_oracle_value(const qw_report* report) {
    return report == nullptr ? 0.0 : report->impl.oracle_value;
}

double qw_report_discrepancy(const qw_report* report) {
    return report == nullptr ? 0.0 : report->impl.discrepancy;
}

int qw_report_renormalized(const qw_report* report) {
    return report != nullptr && report->impl.measure.renormalized ? 1 : 0;
}

const char* qw_report_path(const qw_report* report) {
    return report == nullptr ? "" : report->path_name.c_str();
}

double qw_report_two_qubit_concurrence(const qw_report* report) {
    if (report == nullptr || !report->impl.two_qubit_concurrence) {
        return -1.0;
    }
    return *report->impl.two_qubit_concurrence;
}

size_t qw_report_mode_count(const qw_report* report) {
    return report == nullptr ? 0 : report->impl.measure.mode_contributions.size();
}

qw_status qw_report_mode_contribution(const qw_report* report, size_t slot, double* out) {
    return guarded([&]() -> qw_status {
        if (report == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        if (slot >= report->impl.measure.mode_contributions.size()) {
            return fail(QW_ERR_ARGUMENT, "contribution slot out of range");
        }
        *out = report->impl.measure.mode_contributions[slot];
        return QW_OK;
    });
}

qw_status qw_report_to_json(const qw_report* report, char** out) {
    return guarded([&]() -> qw_status {
        if (report == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = copy_string(qwedge::report_to_json(report->impl));
        return QW_OK;
    });
}

qw_status qw_report_to_table(const qw_report* report, char** out) {
    return guarded([&]() -> qw_status {
        if (report == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = copy_string(qwedge::report_to_table(report->impl));
        return QW_OK;
    });
}

qw_status qw_two_qubit_concurrence(const qw_state* state, double* out) {
    return guarded([&]() -> qw_status {
        if (state == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        *out = qwedge::two_qubit_concurrence(state->impl);
        return QW_OK;
    });
}

qw_status qw_selftest(uint64_t seed, int trials, double tolerance, int as_json,
                      int* all_passed, char** out) {
    return guarded([&]() -> qw_status {
        if (all_passed == nullptr || out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        qwedge::SelftestOptions options;
        options.seed = seed;
        options.trials = trials;
        options.tolerance = tolerance;
        const qwedge::SelftestSummary summary = qwedge::run_selftest(options);
        *all_passed = summary.all_passed() ? 1 : 0;
        *out = copy_string(as_json ? qwedge::selftest_to_json(summary)
                                   : qwedge::selftest_to_table(summary));
        return QW_OK;
    });
}

qw_status qw_monotone_experiment(const size_t* dims, size_t subsystem_count, uint64_t seed,
                                 int trials, int unitary_only, qw_norm_mode mode,
                                 int as_json, char** out) {
    return guarded([&]() -> qw_status {
        if (out == nullptr) {
            return fail(QW_ERR_ARGUMENT, "null pointer argument");
        }
        qwedge::ExperimentOptions options;
        options.dims = make_dims(dims, subsystem_count);
        options.seed = seed;
        options.trials = trials;
        options.unitary_only = unitary_only != 0;
        options.config = make_config(mode, 0.0);
        const qwedge::ExperimentStats stats = qwedge::run_monotone_experiment(options);
        *out = copy_string(as_json ? qwedge::experiment_to_json(options, stats)
                                   : qwedge::experiment_to_table(options, stats));
        return QW_OK;
    });
}

}  // extern "C"
