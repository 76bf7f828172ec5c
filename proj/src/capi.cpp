#include "orbint/capi.h"

#include "orbint/evaluator.hpp"
#include "orbint/report.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace orbint;

struct orbint_curve {
    Curve c;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** errmsg, const std::string& what) {
    if (errmsg)
        *errmsg = dup_string(what);
}

/* run a computation, classifying exceptions into the two error codes:
 * malformed input is a usage error, a failed mathematical invariant
 * (pole, nonrational limit) is a math error */
template <class F>
int guarded(char** errmsg, F&& body) {
    try {
        return body();
    } catch (const PoleAtOne& e) {
        set_error(errmsg, e.what());
        return ORBINT_MATH_ERROR;
    } catch (const std::invalid_argument& e) {
        set_error(errmsg, e.what());
        return ORBINT_USAGE_ERROR;
    } catch (const std::domain_error& e) {
        set_error(errmsg, e.what());
        return ORBINT_USAGE_ERROR;
    } catch (const std::exception& e) {
        set_error(errmsg, e.what());
        return ORBINT_MATH_ERROR;
    }
}

}  // namespace

extern "C" {

int orbint_curve_parse_json(const char* text, orbint_curve** out, char** errmsg) {
    if (!text || !out) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        *out = new orbint_curve{curve_from_json_text(text)};
        return ORBINT_OK;
    });
}

void orbint_curve_free(orbint_curve* c) { delete c; }

long orbint_curve_q(const orbint_curve* c) { return c ? c->c.q : 0; }

int orbint_curve_genus(const orbint_curve* c) { return c ? c->c.genus : -1; }

int orbint_zeta_at(const orbint_curve* c, const char* t, char** value, char** errmsg) {
    if (!c || !t || !value) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        *value = dup_string(rat_str(zeta_at(c->c, rat_parse(t))));
        return ORBINT_OK;
    });
}

int orbint_volume(const orbint_curve* c, int n, char** value, char** errmsg) {
    if (!c || !value) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        *value = dup_string(rat_str(siegel_value(c->c, n)));
        return ORBINT_OK;
    });
}

int orbint_psi(const orbint_curve* c, long deg_d, int n, int d, long e, unsigned salt,
               char** value, char** errmsg) {
    if (!c || !value) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        if (d <= 0 || n <= 0 || n % d != 0)
            throw std::invalid_argument("block count must be positive and divide the rank");
        IntegralQuery q{c->c, deg_d, n, d, e};
        Rat v = psi_at_one(q, default_direction(n / d, salt));
        *value = dup_string(rat_str(v));
        return ORBINT_OK;
    });
}

int orbint_integral(const orbint_curve* c, long deg_d, int n, int d, long e, unsigned salt,
                    char** result_json, char** errmsg) {
    if (!c || !result_json) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        *result_json = dup_string(integral_report(c->c, deg_d, n, d, e, salt).dump());
        return ORBINT_OK;
    });
}

int orbint_check_identities(int nmax, unsigned seed, char** result_json, char** errmsg) {
    if (!result_json) {
        set_error(errmsg, "null argument");
        return ORBINT_USAGE_ERROR;
    }
    return guarded(errmsg, [&] {
        nlohmann::json rep = checks_report(nmax, seed);
        *result_json = dup_string(rep.dump());
        if (!rep["passed"].get<bool>()) {
            set_error(errmsg, "an identity suite failed");
            return (int)ORBINT_MATH_ERROR;
        }
        return (int)ORBINT_OK;
    });
}

void orbint_string_free(char* s) { delete[] s; }

}  // extern "C"
